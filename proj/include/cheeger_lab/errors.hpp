#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace cheeger_lab {

struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

struct EmptySetError : Error {
    EmptySetError() : Error("operation requires a nonempty vertex set") {}
};

struct ZeroMuError : Error {
    explicit ZeroMuError(int v)
        : Error("vertex " + std::to_string(v) +
                " has zero weighted degree; mu must be positive") {}
};

struct ZeroVectorError : Error {
    ZeroVectorError() : Error("vertex vector must not be identically zero") {}
};

struct NotAForestError : Error {
    NotAForestError() : Error("graph is not a forest (loop number > 0)") {}
};

struct MuConventionError : Error {
    MuConventionError()
        : Error("vertex weights do not satisfy mu_v = sum of incident edge weights") {}
};

struct NotSupportedError : Error {
    explicit NotSupportedError(const std::string& msg) : Error(msg) {}
};

struct InternalError : Error {
    explicit InternalError(const std::string& msg) : Error("internal error: " + msg) {}
};

// Thrown when an enumeration would exceed the labeling budget; carries the
// exact labeling count that was requested.
struct BudgetExceededError : Error {
    std::uint64_t count;
    std::uint64_t budget;
    BudgetExceededError(std::uint64_t count_, std::uint64_t budget_)
        : Error("enumeration budget exceeded: " + std::to_string(count_) +
                " labelings > budget " + std::to_string(budget_)),
          count(count_), budget(budget_) {}
};

struct ParseError : Error {
    explicit ParseError(const std::string& msg) : Error(msg) {}
};

}  // namespace cheeger_lab
