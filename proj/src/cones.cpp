#include "vopa/cones.hpp"

#include <algorithm>

namespace vopa {

namespace {

Matrix normalize_columns(const Matrix& g) {
    Matrix out = g;
    for (Index j = 0; j < out.cols(); ++j) {
        const double len = out.col(j).norm();
        if (len <= 1e-12) throw Error("cone generator has vanishing length");
        out.col(j) /= len;
    }
    return out;
}

Matrix dedup_columns(const Matrix& g, double tol) {
    std::vector<Index> keep;
    for (Index j = 0; j < g.cols(); ++j) {
        bool dup = false;
        for (Index k : keep)
            if ((g.col(j) - g.col(k)).cwiseAbs().maxCoeff() <= tol) { dup = true; break; }
        if (!dup) keep.push_back(j);
    }
    Matrix out(g.rows(), static_cast<Index>(keep.size()));
    for (Index i = 0; i < out.cols(); ++i) out.col(i) = g.col(keep[static_cast<std::size_t>(i)]);
    return out;
}

}  // namespace

Matrix dual_cone(const Matrix& primal_generators, const Tolerances& tol) {
    const Index q = primal_generators.rows();
    if (primal_generators.cols() == 0) throw Error("dual_cone: no generators");
    std::vector<Halfspace> hs;
    hs.reserve(static_cast<std::size_t>(primal_generators.cols()));
    for (Index j = 0; j < primal_generators.cols(); ++j)
        hs.emplace_back(primal_generators.col(j), 0.0);
    Polyhedron dual;
    try {
        dual = dd_enumerate(hs, tol);
    } catch (const LinealityError&) {
        // {w : g.w >= 0} has a line iff the generators do not span the space.
        throw NotSolidError("cone is not solid: generators do not span the space");
    }
    const auto rays = recession_rays(dual);
    if (rays.empty()) throw NotPointedError("dual cone is trivial");
    Matrix out(q, static_cast<Index>(rays.size()));
    for (Index j = 0; j < out.cols(); ++j) out.col(j) = rays[static_cast<std::size_t>(j)];
    return dedup_columns(out, tol.vertex);
}

OrderingCone OrderingCone::from_primal(const Matrix& generators, const Tolerances& tol) {
    OrderingCone cone;
    cone.primal_ = dedup_columns(normalize_columns(generators), tol.vertex);
    cone.dual_ = dual_cone(cone.primal_, tol);
    const Index q = cone.primal_.rows();
    // Pointedness: the dual must be solid, witnessed by a strictly interior
    // direction of the cone (positive inner product with every dual generator).
    const Vector d = cone.primal_.rowwise().sum();
    Vector prods = cone.dual_.transpose() * d;
    if (cone.dual_.cols() < q || prods.minCoeff() <= 1e-9)
        throw NotPointedError("cone is not pointed");
    // Mutual duality sanity.
    Matrix cross = cone.dual_.transpose() * cone.primal_;
    if (cross.minCoeff() < -1e-9) throw Error("cone generators violate duality");
    return cone;
}

OrderingCone OrderingCone::from_dual(const Matrix& dual_generators, const Tolerances& tol) {
    Matrix primal = dual_cone(dedup_columns(normalize_columns(dual_generators), tol.vertex), tol);
    return from_primal(primal, tol);
}

OrderingCone OrderingCone::orthant(Index q) {
    return from_primal(Matrix::Identity(q, q));
}

OrderingCone OrderingCone::named(const std::string& name, Index q) {
    if (name == "orthant") {
        if (q <= 0) throw UnknownNameError("cone 'orthant' requires a dimension");
        return orthant(q);
    }
    Matrix g;
    if (name == "C1") {
        g.resize(2, 2);
        g << 1, 2, 2, 1;
    } else if (name == "C2") {
        g.resize(2, 2);
        g << 2, -1, -1, 2;
    } else if (name == "C3") {
        g.resize(3, 6);
        g << 4, 2, 4, 1, 0, 0,
             2, 4, 0, 0, 1, 4,
             2, 2, 2, 2, 2, 2;
    } else if (name == "C4") {
        g.resize(3, 6);
        g << -1, 2, 1, 0, -1, 0,
             -1, 2, 0, -1, 0, 1,
              3, -1, 0, 2, 2, 0;
    } else {
        throw UnknownNameError("unknown cone name: " + name);
    }
    return from_primal(g);
}

bool OrderingCone::leq(const Vector& y1, const Vector& y2, double tol) const {
    return contains(y2 - y1, tol);
}

bool OrderingCone::contains(const Vector& y, double tol) const {
    return ((dual_.transpose() * y).array() >= -tol).all();
}

bool OrderingCone::dual_contains(const Vector& w, double tol) const {
    return ((primal_.transpose() * w).array() >= -tol).all();
}

Vector OrderingCone::interior_direction() const {
    Vector d = primal_.rowwise().sum();
    const double m = (dual_.transpose() * d).minCoeff();
    return d / m;
}

Vector reference_direction(const OrderingCone& cone, Norm p) {
    Vector w = cone.dual_generators().rowwise().sum();
    return w / dual_norm_value(w, p);
}

bool leq_C(const OrderingCone& cone, const Vector& y1, const Vector& y2, double tol) {
    return cone.leq(y1, y2, tol);
}

}  // namespace vopa
