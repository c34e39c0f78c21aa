#pragma once

#include <cstddef>
#include <functional>

namespace parsweep {

/// Minimal execution policy: run `count` independent items, each written to
/// its own output slot. Implementations must behave as a barrier (all items
/// complete before for_each returns) and must hand every item a stable
/// worker index in [0, workers()). Item bodies are required to touch only
/// disjoint state, so any schedule yields bitwise-identical results.
class Executor {
public:
    virtual ~Executor() = default;
    virtual std::size_t workers() const = 0;
    virtual void for_each(std::size_t count,
                          const std::function<void(std::size_t worker, std::size_t item)>& body) = 0;
};

/// Single-worker executor: items run in index order on the calling thread.
class SerialExecutor final : public Executor {
public:
    std::size_t workers() const override { return 1; }
    void for_each(std::size_t count,
                  const std::function<void(std::size_t, std::size_t)>& body) override {
        for (std::size_t i = 0; i < count; ++i) body(0, i);
    }
};

inline SerialExecutor& serial_executor() {
    static SerialExecutor exec;
    return exec;
}

}  // namespace parsweep
