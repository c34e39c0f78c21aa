#pragma once

// Batched tridiagonal solving with a two-phase boundary-dichotomy scheme,
// plus the Poisson solvers built on top of it.

#include "parsweep/core/dense_oracle.hpp"
#include "parsweep/core/dominance.hpp"
#include "parsweep/core/errors.hpp"
#include "parsweep/core/inverse_rows.hpp"
#include "parsweep/core/symmetrize.hpp"
#include "parsweep/core/thomas.hpp"
#include "parsweep/core/tridiag.hpp"
#include "parsweep/dichotomy/batch.hpp"
#include "parsweep/dichotomy/betas.hpp"
#include "parsweep/dichotomy/boundary_solve.hpp"
#include "parsweep/dichotomy/level_sets.hpp"
#include "parsweep/dichotomy/local_solve.hpp"
#include "parsweep/dichotomy/partition.hpp"
#include "parsweep/dichotomy/preliminary.hpp"
#include "parsweep/dichotomy/speedup.hpp"
#include "parsweep/executor.hpp"
#include "parsweep/poisson/adi.hpp"
#include "parsweep/poisson/dst.hpp"
#include "parsweep/poisson/fourier.hpp"
#include "parsweep/poisson/grid2d.hpp"
#include "parsweep/poisson/model_problem.hpp"
#include "parsweep/runtime/decompose.hpp"
#include "parsweep/runtime/run.hpp"
#include "parsweep/runtime/thread_pool.hpp"
