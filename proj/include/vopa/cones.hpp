#pragma once

#include "vopa/geometry.hpp"
#include "vopa/types.hpp"

#include <string>

namespace vopa {

/// Polyhedral ordering cone, solid pointed and nontrivial, stored through
/// unit-length generators of both the cone and its dual.
class OrderingCone {
public:
    /// Builds from generators of the cone itself (columns); the dual side is
    /// enumerated. Throws NotSolidError / NotPointedError.
    static OrderingCone from_primal(const Matrix& generators, const Tolerances& tol = {});
    /// Builds from generators of the dual cone (columns).
    static OrderingCone from_dual(const Matrix& dual_generators, const Tolerances& tol = {});
    static OrderingCone orthant(Index q);
    /// Built-in names: "orthant" (requires q), "C1", "C2", "C3", "C4".
    static OrderingCone named(const std::string& name, Index q = -1);

    Index dim() const { return primal_.rows(); }
    /// q x K, unit columns.
    const Matrix& primal_generators() const { return primal_; }
    /// q x J, unit columns (J >= q).
    const Matrix& dual_generators() const { return dual_; }

    /// y1 <= y2 in the cone order, within tol on every dual generator.
    bool leq(const Vector& y1, const Vector& y2, double tol) const;
    bool contains(const Vector& y, double tol) const;
    /// Membership of w in the dual cone (inner products with primal generators).
    bool dual_contains(const Vector& w, double tol) const;

    /// Direction strictly inside the cone, scaled so that the smallest inner
    /// product with a dual generator equals 1.
    Vector interior_direction() const;

private:
    Matrix primal_;
    Matrix dual_;
};

/// Generators of {w : w.g >= 0 for every column g}, unit length.
Matrix dual_cone(const Matrix& primal_generators, const Tolerances& tol = {});

/// Normalized sum of the dual generators, where the normalization uses the
/// dual of the chosen objective-space norm. Lies strictly inside the dual cone.
Vector reference_direction(const OrderingCone& cone, Norm p);

bool leq_C(const OrderingCone& cone, const Vector& y1, const Vector& y2, double tol);

}  // namespace vopa
