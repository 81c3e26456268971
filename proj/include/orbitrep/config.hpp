#pragma once

#include <cstdlib>
#include <string>

namespace orbitrep {

// Group-membership checks (metric preservation, unitarity, det).
inline constexpr double kGroupTol = 1e-12;
// Eigenvalue / block-residual checks.
inline constexpr double kEigenTol = 1e-10;

/// Hard cap on product-space dimension 2^N. Overridable through the
/// ORBITREP_CAP environment variable (value is the dimension bound).
inline int dimension_cap() {
    static const int cap = [] {
        if (const char* env = std::getenv("ORBITREP_CAP")) {
            try {
                int v = std::stoi(env);
                if (v > 0) return v;
            } catch (...) {
            }
        }
        return 1024;
    }();
    return cap;
}

}  // namespace orbitrep
