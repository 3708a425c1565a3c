#include "vopa/geometry.hpp"

#include <algorithm>
#include <cstdio>
#include <sstream>

namespace vopa {

Halfspace::Halfspace(const Vector& a, double b) {
    const double len = a.norm();
    if (len <= 1e-12) throw DegenerateNormalError("Halfspace: normal has vanishing length");
    normal = a / len;
    offset = b / len;
}

namespace {

bool lex_less(const Vector& a, const Vector& b) {
    for (Index i = 0; i < a.size(); ++i) {
        if (a[i] < b[i]) return true;
        if (a[i] > b[i]) return false;
    }
    return false;
}

bool close_linf(const Vector& a, const Vector& b, double tol) {
    return (a - b).cwiseAbs().maxCoeff() <= tol;
}

std::vector<int> sorted_intersect(const std::vector<int>& a, const std::vector<int>& b) {
    std::vector<int> out;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

bool sorted_subset(const std::vector<int>& a, const std::vector<int>& b) {
    return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

void sorted_insert(std::vector<int>& v, int x) {
    auto it = std::lower_bound(v.begin(), v.end(), x);
    if (it == v.end() || *it != x) v.insert(it, x);
}

void merge_tights(std::vector<int>& into, const std::vector<int>& from) {
    for (int x : from) sorted_insert(into, x);
}

}  // namespace

VRep Polyhedron::vrep() const {
    VRep out;
    out.vertices.reserve(vertices_.size());
    for (const auto& g : vertices_) out.vertices.push_back(g.y);
    out.rays.reserve(rays_.size());
    for (const auto& g : rays_) out.rays.push_back(g.y);
    std::sort(out.vertices.begin(), out.vertices.end(), lex_less);
    std::sort(out.rays.begin(), out.rays.end(), lex_less);
    return out;
}

bool Polyhedron::contains(const Vector& y, double tol) const {
    for (const auto& h : halfspaces_)
        if (h.slack(y) < -tol) return false;
    return true;
}

bool contains(const Polyhedron& poly, const Vector& y, double tol) { return poly.contains(y, tol); }

std::vector<Vector> recession_rays(const Polyhedron& poly) {
    std::vector<Vector> out;
    out.reserve(poly.ray_count());
    for (std::size_t i = 0; i < poly.ray_count(); ++i) out.push_back(poly.ray(i));
    return out;
}

bool Polyhedron::apply_halfspace(const Halfspace& h, bool keep_redundant) {
    halfspaces_.push_back(h);
    const int idx = static_cast<int>(halfspaces_.size()) - 1;
    const double tol = tol_.feas;

    struct Item {
        Gen* g;
        double s;
        int cls;  // -1 cut, 0 tight, +1 kept
    };
    std::vector<Item> items;
    items.reserve(vertices_.size() + rays_.size());
    bool any_neg = false;
    auto classify = [&](Gen& g) {
        const double s = g.is_vertex ? h.slack(g.y) : h.normal.dot(g.y);
        int cls = 0;
        if (s < -tol) cls = -1, any_neg = true;
        else if (s > tol) cls = 1;
        items.push_back({&g, s, cls});
    };
    for (auto& g : vertices_) classify(g);
    for (auto& g : rays_) classify(g);

    if (!any_neg) {
        if (keep_redundant) {
            for (auto& it : items)
                if (it.cls == 0) sorted_insert(it.g->tight, idx);
        } else {
            halfspaces_.pop_back();
        }
        return true;
    }

    // Adjacency of two extreme generators of the homogenized cone: no third
    // generator is tight on their common tight set. Rays share the implicit
    // homogenizing facet, so a witness for a ray pair must itself be a ray.
    auto adjacent = [&](const Item& a, const Item& b) {
        std::vector<int> common = sorted_intersect(a.g->tight, b.g->tight);
        const bool both_rays = !a.g->is_vertex && !b.g->is_vertex;
        const std::size_t count = common.size() + (both_rays ? 1 : 0);
        if (count + 1 < static_cast<std::size_t>(dim_)) return false;
        for (const auto& it : items) {
            if (it.g == a.g || it.g == b.g) continue;
            if (both_rays && it.g->is_vertex) continue;
            if (sorted_subset(common, it.g->tight)) return false;
        }
        return true;
    };

    auto numeric_tights = [&](const Gen& g) {
        std::vector<int> t;
        for (int i = 0; i <= idx; ++i) {
            const double s = g.is_vertex ? halfspaces_[i].slack(g.y) : halfspaces_[i].normal.dot(g.y);
            if (std::abs(s) <= tol) t.push_back(i);
        }
        return t;
    };

    std::vector<Gen> fresh;
    for (const auto& m : items) {
        if (m.cls != -1) continue;
        for (const auto& p : items) {
            if (p.cls != 1) continue;
            if (!adjacent(m, p)) continue;
            Gen g;
            if (m.g->is_vertex && p.g->is_vertex) {
                const double t = m.s / (m.s - p.s);  // in (0,1)
                g.y = m.g->y + t * (p.g->y - m.g->y);
                g.is_vertex = true;
            } else if (m.g->is_vertex) {
                g.y = m.g->y - (m.s / p.s) * p.g->y;
                g.is_vertex = true;
            } else if (p.g->is_vertex) {
                g.y = p.g->y + (p.s / -m.s) * m.g->y;
                g.is_vertex = true;
            } else {
                Vector d = p.s * m.g->y - m.s * p.g->y;
                const double len = d.norm();
                if (len < 1e-12) continue;
                g.y = d / len;
                g.is_vertex = false;
            }
            g.tight = numeric_tights(g);
            merge_tights(g.tight, sorted_intersect(m.g->tight, p.g->tight));
            sorted_insert(g.tight, idx);
            fresh.push_back(std::move(g));
        }
    }

    std::vector<Gen> kept_v, kept_r;
    for (auto& it : items) {
        if (it.cls == -1) continue;
        if (it.cls == 0) sorted_insert(it.g->tight, idx);
        (it.g->is_vertex ? kept_v : kept_r).push_back(std::move(*it.g));
    }

    for (auto& g : fresh) {
        auto& pool = g.is_vertex ? kept_v : kept_r;
        bool merged = false;
        for (auto& e : pool) {
            if (close_linf(e.y, g.y, tol_.vertex)) {
                merge_tights(e.tight, g.tight);
                merged = true;
                break;
            }
        }
        if (!merged) {
            g.id = next_id_++;
            pool.push_back(std::move(g));
        }
    }

    vertices_ = std::move(kept_v);
    rays_ = std::move(kept_r);
    if (vertices_.empty()) throw EmptyError("add_halfspace: cut removed all generators");
    return false;
}

Polyhedron dd_enumerate(const std::vector<Halfspace>& halfspaces, const Tolerances& tol) {
    if (halfspaces.empty()) throw Error("dd_enumerate: no halfspaces");
    const Index q = halfspaces.front().normal.size();
    for (const auto& h : halfspaces)
        if (h.normal.size() != q) throw Error("dd_enumerate: inconsistent dimensions");

    // Greedy basis of q independent normals; a well-conditioned pass first.
    std::vector<int> chosen;
    std::vector<Vector> basis;
    std::vector<char> used(halfspaces.size(), 0);
    for (double threshold : {0.1, 1e-9}) {
        for (std::size_t i = 0; i < halfspaces.size() && chosen.size() < static_cast<std::size_t>(q); ++i) {
            if (used[i]) continue;
            Vector r = halfspaces[i].normal;
            for (const auto& b : basis) r -= b.dot(r) * b;
            if (r.norm() >= threshold) {
                basis.push_back(r.normalized());
                chosen.push_back(static_cast<int>(i));
                used[i] = 1;
            }
        }
        if (chosen.size() == static_cast<std::size_t>(q)) break;
    }
    if (chosen.size() < static_cast<std::size_t>(q))
        throw LinealityError("dd_enumerate: halfspace normals do not span the space");
    std::sort(chosen.begin(), chosen.end());

    Polyhedron poly;
    poly.dim_ = q;
    poly.tol_ = tol;
    Matrix A(q, q);
    Vector b(q);
    for (Index j = 0; j < q; ++j) {
        poly.halfspaces_.push_back(halfspaces[chosen[j]]);
        A.row(j) = halfspaces[chosen[j]].normal.transpose();
        b[j] = halfspaces[chosen[j]].offset;
    }
    Eigen::FullPivLU<Matrix> lu(A);
    const Vector apex = lu.solve(b);
    const Matrix Ainv = lu.inverse();

    Polyhedron::Gen v;
    v.y = apex;
    v.is_vertex = true;
    v.tight.resize(q);
    for (Index j = 0; j < q; ++j) v.tight[j] = static_cast<int>(j);
    v.id = poly.next_id_++;
    poly.vertices_.push_back(std::move(v));
    for (Index j = 0; j < q; ++j) {
        Polyhedron::Gen r;
        r.y = Ainv.col(j).normalized();
        r.is_vertex = false;
        for (Index i = 0; i < q; ++i)
            if (i != j) r.tight.push_back(static_cast<int>(i));
        r.id = poly.next_id_++;
        poly.rays_.push_back(std::move(r));
    }

    for (std::size_t i = 0; i < halfspaces.size(); ++i) {
        if (used[i]) continue;
        poly.apply_halfspace(halfspaces[i], /*keep_redundant=*/true);
    }
    return poly;
}

CutResult add_halfspace(const Polyhedron& poly, const Halfspace& h) {
    CutResult out{poly, false};
    out.redundant = out.poly.apply_halfspace(h, /*keep_redundant=*/false);
    return out;
}

namespace {

void append_number(std::string& s, double x) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.15g", x);
    s += buf;
}

void append_row(std::string& s, const Vector& v) {
    for (Index i = 0; i < v.size(); ++i) {
        if (i) s += ' ';
        append_number(s, v[i]);
    }
}

}  // namespace

std::string dump(const Polyhedron& poly) {
    std::string s = "H:\n";
    for (const auto& h : poly.halfspaces()) {
        append_row(s, h.normal);
        s += ' ';
        append_number(s, h.offset);
        s += '\n';
    }
    const VRep vr = poly.vrep();
    s += "V:\n";
    for (const auto& v : vr.vertices) {
        append_row(s, v);
        s += '\n';
    }
    s += "R:\n";
    for (const auto& r : vr.rays) {
        append_row(s, r);
        s += '\n';
    }
    return s;
}

ParsedDump parse_dump(const std::string& text) {
    ParsedDump out;
    std::istringstream in(text);
    std::string line;
    int section = -1;
    while (std::getline(in, line)) {
        if (line == "H:") { section = 0; continue; }
        if (line == "V:") { section = 1; continue; }
        if (line == "R:") { section = 2; continue; }
        if (line.empty() || section < 0) continue;
        std::istringstream ls(line);
        std::vector<double> vals;
        double x;
        while (ls >> x) vals.push_back(x);
        if (vals.empty()) continue;
        if (section == 0) {
            Vector a(static_cast<Index>(vals.size()) - 1);
            for (Index i = 0; i + 1 < static_cast<Index>(vals.size()); ++i) a[i] = vals[i];
            out.halfspaces.emplace_back(a, vals.back());
        } else {
            Vector v(static_cast<Index>(vals.size()));
            for (Index i = 0; i < v.size(); ++i) v[i] = vals[i];
            (section == 1 ? out.vrep.vertices : out.vrep.rays).push_back(std::move(v));
        }
    }
    return out;
}

}  // namespace vopa
