#pragma once

#include <optional>
#include <vector>

#include "gnsharp/grid_spec.hpp"

namespace gnsharp {

enum class InequalityId { l1_bound, embedding, interpolation, young };

const char* to_string(InequalityId id);

/// Both sides of one inequality check.  For degenerate input (the zero
/// function) lhs, rhs and ratio are all 0, passed is true and the degenerate
/// flag is set; corpus pipelines never throw on a zero draw.
struct InequalityReport {
    InequalityId id = InequalityId::l1_bound;
    double lhs = 0.0;
    double rhs = 0.0;
    double ratio = 0.0;  // lhs / rhs
    double constant_used = 0.0;
    double tolerance = 0.0;
    bool passed = false;  // ratio <= 1 + tolerance (when not degenerate)
    bool degenerate = false;
    std::optional<GridSpec> grid;  // nullopt means "exact" (grid-free)
    int n = 0;
    double s = 0.0;
};

/// Sampled scaling objective f(lambda) = lambda^{-n} A^2 + lambda^{2s-n} B^2
/// on a log-spaced grid, together with the closed-form minimizer and minimum.
struct ScalingSweepResult {
    std::vector<double> lambdas;
    std::vector<double> objective;
    double argmin_sampled = 0.0;
    double lambda_star = 0.0;
    double min_value_closed_form = 0.0;  // young_factor^2 A^{2(1-n/2s)} B^{n/s}
    bool degenerate = false;
};

}  // namespace gnsharp
