#pragma once

#include "vopa/cones.hpp"
#include "vopa/quadratic.hpp"
#include "vopa/types.hpp"

#include <string>
#include <vector>

namespace vopa {

/// A vector optimization problem with convex quadratic objectives and
/// constraints over a finite box: minimize objectives(x) in the cone order
/// subject to constraints(x) <= 0 and lo <= x <= hi.
struct ProblemSpec {
    Index n = 0;  // decision dimension
    Index q = 0;  // objective dimension
    std::vector<QuadraticFunction> objectives;
    std::vector<QuadraticFunction> constraints;
    Vector box_lo, box_hi;
    OrderingCone cone;
    std::string name;
};

Vector evaluate(const ProblemSpec& p, const Vector& x);
Matrix jacobian(const ProblemSpec& p, const Vector& x);

struct ConvexityReport {
    bool pass = true;
    std::vector<std::string> failures;
};

/// For every dual generator w the combination sum_i w_i Q_i must be positive
/// semidefinite, and so must every constraint Hessian.
ConvexityReport check_c_convexity(const ProblemSpec& p);

/// Structural validation: dimensions agree and the box is proper.
void validate_shape(const ProblemSpec& p);

/// A point strictly inside the box with every constraint strictly negative.
/// Throws InfeasibleError when no such point exists.
Vector interior_point(const ProblemSpec& p);

/// Built-in benchmark problems: "ex8.1-q2", "ex8.1-q3", "ex8.1-q4",
/// "ex8.2", "ex8.3a", "ex8.3b".
ProblemSpec catalog(const std::string& name);

/// Loads the JSON problem format; see README for the schema.
ProblemSpec problem_from_json_file(const std::string& path);
ProblemSpec problem_from_json_text(const std::string& text);

}  // namespace vopa
