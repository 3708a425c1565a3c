#pragma once

#include "vopa/types.hpp"

namespace vopa {

/// x |-> 0.5 x'Qx + b'x + c with Q symmetric. Q may be empty (size 0),
/// which denotes the zero matrix of the ambient dimension.
struct QuadraticFunction {
    Matrix Q;
    Vector b;
    double c = 0.0;

    QuadraticFunction() = default;
    QuadraticFunction(Matrix Q_, Vector b_, double c_) : Q(std::move(Q_)), b(std::move(b_)), c(c_) {
        if (Q.size() > 0 && (Q - Q.transpose()).cwiseAbs().maxCoeff() > 1e-12)
            throw Error("QuadraticFunction: Q is not symmetric");
    }

    static QuadraticFunction linear(Vector b_, double c_) {
        QuadraticFunction f;
        f.b = std::move(b_);
        f.c = c_;
        return f;
    }

    Index dim() const { return b.size(); }
    bool is_linear() const { return Q.size() == 0 || Q.cwiseAbs().maxCoeff() == 0.0; }

    double value(const Vector& x) const {
        double v = b.dot(x) + c;
        if (Q.size() > 0) v += 0.5 * x.dot(Q * x);
        return v;
    }

    Vector gradient(const Vector& x) const {
        if (Q.size() == 0) return b;
        return Q * x + b;
    }

    /// Minimum eigenvalue of Q (0 for linear functions).
    double min_hessian_eigenvalue() const {
        if (is_linear()) return 0.0;
        Eigen::SelfAdjointEigenSolver<Matrix> es(Q, Eigen::EigenvaluesOnly);
        return es.eigenvalues().minCoeff();
    }
};

}  // namespace vopa
