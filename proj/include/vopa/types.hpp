#pragma once

#include <Eigen/Dense>

#include <cmath>
#include <stdexcept>
#include <string>

namespace vopa {

using Vector = Eigen::VectorXd;
using Matrix = Eigen::MatrixXd;
using Index = Eigen::Index;

/// Norm used on the objective space.
enum class Norm { l1, l2, linf };

inline double norm_value(const Vector& z, Norm p) {
    switch (p) {
        case Norm::l1: return z.lpNorm<1>();
        case Norm::l2: return z.norm();
        case Norm::linf: return z.lpNorm<Eigen::Infinity>();
    }
    return 0.0;
}

/// Value of the dual norm (l1 <-> linf, l2 self-dual).
inline double dual_norm_value(const Vector& w, Norm p) {
    switch (p) {
        case Norm::l1: return w.lpNorm<Eigen::Infinity>();
        case Norm::l2: return w.norm();
        case Norm::linf: return w.lpNorm<1>();
    }
    return 0.0;
}

inline std::string norm_name(Norm p) {
    switch (p) {
        case Norm::l1: return "1";
        case Norm::l2: return "2";
        case Norm::linf: return "inf";
    }
    return "?";
}

/// Numerical tolerances shared across the polyhedral and solver layers.
struct Tolerances {
    double feas = 1e-7;     // halfspace slack tolerance
    double vertex = 1e-8;   // vertex/ray merging tolerance (l-inf, absolute)
    double solver = 1e-8;   // interior-point KKT tolerance
};

struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

struct LinealityError : Error { using Error::Error; };
struct EmptyError : Error { using Error::Error; };
struct NotPointedError : Error { using Error::Error; };
struct NotSolidError : Error { using Error::Error; };
struct InfeasibleError : Error { using Error::Error; };
struct MaxIterationsError : Error { using Error::Error; };
struct NumericalError : Error { using Error::Error; };
struct DualDegenerateError : Error { using Error::Error; };
struct DegenerateNormalError : Error { using Error::Error; };
struct UnknownNameError : Error { using Error::Error; };
struct DimensionTooLargeError : Error { using Error::Error; };
struct SamplingStarvedError : Error { using Error::Error; };
struct DimensionUnsupportedError : Error { using Error::Error; };
struct IterationLimitError : Error { using Error::Error; };

}  // namespace vopa
