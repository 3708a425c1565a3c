#pragma once

#include "vopa/types.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace vopa {

/// Closed halfspace {y : normal . y >= offset}. The normal is rescaled to
/// unit Euclidean length on construction so slack values are geometric.
struct Halfspace {
    Vector normal;
    double offset = 0.0;

    Halfspace() = default;
    Halfspace(const Vector& a, double b);

    double slack(const Vector& y) const { return normal.dot(y) - offset; }
};

struct VRep {
    std::vector<Vector> vertices;
    std::vector<Vector> rays;  // unit directions
};

/// Pointed polyhedron {y : a_i . y >= b_i} carrying both representations and
/// the vertex/ray incidence onto the halfspace list. Immutable after
/// construction; cuts produce new values.
class Polyhedron {
public:
    Index dim() const { return dim_; }
    const std::vector<Halfspace>& halfspaces() const { return halfspaces_; }

    std::size_t vertex_count() const { return vertices_.size(); }
    std::size_t ray_count() const { return rays_.size(); }
    const Vector& vertex(std::size_t i) const { return vertices_[i].y; }
    const Vector& ray(std::size_t i) const { return rays_[i].y; }
    /// Identifier stable across cuts (surviving generators keep theirs).
    std::uint64_t vertex_id(std::size_t i) const { return vertices_[i].id; }
    /// Sorted indices of halfspaces tight at the generator.
    const std::vector<int>& vertex_incidence(std::size_t i) const { return vertices_[i].tight; }
    const std::vector<int>& ray_incidence(std::size_t i) const { return rays_[i].tight; }

    /// Copies of both generator lists, sorted lexicographically.
    VRep vrep() const;

    bool contains(const Vector& y, double tol) const;

    const Tolerances& tolerances() const { return tol_; }

private:
    struct Gen {
        Vector y;                // vertex point, or unit ray direction
        bool is_vertex = true;
        std::vector<int> tight;  // sorted halfspace indices
        std::uint64_t id = 0;
    };

    Index dim_ = 0;
    std::vector<Halfspace> halfspaces_;
    std::vector<Gen> vertices_;
    std::vector<Gen> rays_;
    std::uint64_t next_id_ = 0;
    Tolerances tol_;

    // Appends one halfspace and updates the generators (double description
    // step on the homogenized cone). Returns false if the cut was redundant,
    // in which case the halfspace is kept only when keep_redundant is set.
    bool apply_halfspace(const Halfspace& h, bool keep_redundant);

    friend Polyhedron dd_enumerate(const std::vector<Halfspace>&, const Tolerances&);
    friend struct CutResult;
    friend CutResult add_halfspace(const Polyhedron&, const Halfspace&);
};

struct CutResult {
    Polyhedron poly;
    bool redundant = false;
};

/// Vertex enumeration: builds the dual description of the intersection of
/// the given halfspaces. Throws LinealityError if the intersection contains
/// a line and EmptyError if it is empty.
Polyhedron dd_enumerate(const std::vector<Halfspace>& halfspaces, const Tolerances& tol = {});

/// Incremental cut. If no generator violates h the input is returned
/// unchanged and flagged redundant. Throws EmptyError when the cut removes
/// every generator.
CutResult add_halfspace(const Polyhedron& poly, const Halfspace& h);

bool contains(const Polyhedron& poly, const Vector& y, double tol);

/// Generators of the recession cone.
std::vector<Vector> recession_rays(const Polyhedron& poly);

/// Plain-text dump: an "H:" section with rows "a1 ... aq b" (a.y >= b)
/// followed by "V:" and "R:" coordinate rows, >= 12 significant digits.
std::string dump(const Polyhedron& poly);

struct ParsedDump {
    std::vector<Halfspace> halfspaces;
    VRep vrep;
};
ParsedDump parse_dump(const std::string& text);

}  // namespace vopa
