#pragma once

// The bundled reproduction suite behind `powsum verify-paper`.

#include <cstdint>
#include <string>
#include <vector>

#include "powsum/scalar.hpp"

namespace powsum::cli {

enum class Level { quick, full };

struct VerifyOptions {
    Level level = Level::quick;
    PrimeField prime = PrimeField();
    std::uint64_t seed = 1;
    /// Fault injection: append a duplicate of X1^2 to every binomial set.
    bool inject_duplicate = false;
};

struct CheckResult {
    std::string id;
    std::string anchor;
    std::string claim;
    bool passed = false;
    std::string detail;
    double seconds = 0.0;
};

/// Runs every check (concurrently); results are sorted by id.
std::vector<CheckResult> verify_paper(const VerifyOptions& options);

}  // namespace powsum::cli
