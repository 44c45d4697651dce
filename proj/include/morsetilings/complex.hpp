#pragma once

// Explicit simplicial complexes over a labeled ground set of at most 64
// elements. Faces are bitmasks over ground indices; the full (downward
// closed) face list is stored sorted, which keeps membership queries,
// dimension scans, and pairing traversals cheap at desk scale.

#include <algorithm>
#include <bit>
#include <cstdint>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <unordered_set>
#include <vector>

#include "families.hpp"
#include "graph.hpp"
#include "matching.hpp"

namespace morsetilings {

class FaceCapError : public std::runtime_error {
public:
    explicit FaceCapError(std::size_t cap)
        : std::runtime_error("face count exceeds cap of " + std::to_string(cap)), cap_(cap) {}
    std::size_t cap() const { return cap_; }

private:
    std::size_t cap_;
};

inline constexpr std::size_t kDefaultFaceCap = 2'000'000;

class SimplicialComplex {
public:
    using Face = std::uint64_t;

    SimplicialComplex() = default;

    static SimplicialComplex void_complex(std::vector<std::string> ground) {
        SimplicialComplex c;
        c.set_ground(std::move(ground));
        return c;
    }

    static SimplicialComplex from_facets(std::vector<std::string> ground,
                                         const std::vector<Face>& facets,
                                         std::size_t face_cap = kDefaultFaceCap) {
        SimplicialComplex c;
        c.set_ground(std::move(ground));
        std::unordered_set<Face> seen;
        for (Face f : facets) {
            c.check_face_range(f);
            close_down(f, seen, face_cap);
        }
        c.faces_.assign(seen.begin(), seen.end());
        std::sort(c.faces_.begin(), c.faces_.end());
        return c;
    }

    static SimplicialComplex from_facets(std::vector<std::string> ground,
                                         const std::vector<std::vector<std::string>>& facet_labels,
                                         std::size_t face_cap = kDefaultFaceCap) {
        std::vector<Face> masks;
        masks.reserve(facet_labels.size());
        for (const auto& labels : facet_labels) masks.push_back(mask_of(ground, labels));
        return from_facets(std::move(ground), masks, face_cap);
    }

    // faces must already be downward closed (validated).
    static SimplicialComplex from_faces(std::vector<std::string> ground,
                                        std::vector<Face> faces) {
        SimplicialComplex c;
        c.set_ground(std::move(ground));
        std::sort(faces.begin(), faces.end());
        faces.erase(std::unique(faces.begin(), faces.end()), faces.end());
        c.faces_ = std::move(faces);
        for (Face f : c.faces_) c.check_face_range(f);
        if (!c.is_closed_downward())
            throw std::invalid_argument("face family is not downward closed");
        return c;
    }

    static SimplicialComplex from_faces(std::vector<std::string> ground,
                                        const std::vector<std::vector<std::string>>& face_labels) {
        std::vector<Face> masks;
        masks.reserve(face_labels.size());
        for (const auto& labels : face_labels) masks.push_back(mask_of(ground, labels));
        return from_faces(std::move(ground), std::move(masks));
    }

    bool is_void() const { return faces_.empty(); }
    std::size_t face_count() const { return faces_.size(); }
    const std::vector<Face>& faces() const { return faces_; }

    bool contains(Face f) const {
        return std::binary_search(faces_.begin(), faces_.end(), f);
    }

    static int face_dim(Face f) { return std::popcount(f) - 1; }

    // Dimension of the complex; requires at least one face.
    int dim() const {
        if (is_void()) throw std::domain_error("void complex has no dimension");
        int d = -1;
        for (Face f : faces_) d = std::max(d, face_dim(f));
        return d;
    }

    // f_vector()[d] = number of d-dimensional faces, d = 0..dim().
    std::vector<std::size_t> f_vector() const {
        if (is_void()) return {};
        std::vector<std::size_t> fv(static_cast<std::size_t>(dim() + 1), 0);
        for (Face f : faces_)
            if (f != 0) ++fv[static_cast<std::size_t>(face_dim(f))];
        return fv;
    }

    // Alternating sum over all faces including the empty one.
    long long reduced_euler_characteristic() const {
        if (is_void()) throw std::domain_error("void complex has no reduced Euler characteristic");
        long long chi = 0;
        for (Face f : faces_) chi += (std::popcount(f) % 2 == 0) ? -1 : 1;
        return chi;
    }

    const std::vector<std::string>& ground() const { return ground_; }
    std::size_t ground_size() const { return ground_.size(); }
    const std::string& label(int i) const { return ground_.at(static_cast<std::size_t>(i)); }

    std::optional<int> ground_index(std::string_view label) const {
        for (std::size_t i = 0; i < ground_.size(); ++i)
            if (ground_[i] == label) return static_cast<int>(i);
        return std::nullopt;
    }

    std::vector<std::string> face_labels(Face f) const {
        std::vector<std::string> out;
        for (int i = 0; i < static_cast<int>(ground_.size()); ++i)
            if (f >> i & 1) out.push_back(ground_[static_cast<std::size_t>(i)]);
        return out;
    }

    Face face_from_labels(const std::vector<std::string>& labels) const {
        Face f = 0;
        for (const auto& l : labels) {
            auto i = ground_index(l);
            if (!i) throw std::invalid_argument("unknown ground label: " + l);
            f |= Face{1} << *i;
        }
        return f;
    }

    // Faces with no proper superset in the complex.
    std::vector<Face> facets() const {
        std::vector<Face> out;
        for (Face f : faces_) {
            bool maximal = true;
            for (int x = 0; x < static_cast<int>(ground_.size()) && maximal; ++x)
                if (!(f >> x & 1) && contains(f | (Face(1) << x))) maximal = false;
            if (maximal) out.push_back(f);
        }
        return out;
    }

    bool is_closed_downward() const {
        for (Face f : faces_) {
            Face rest = f;
            while (rest) {
                Face low = rest & (~rest + 1);
                if (!contains(f ^ low)) return false;
                rest ^= low;
            }
        }
        return true;
    }

private:
    static Face mask_of(const std::vector<std::string>& ground,
                        const std::vector<std::string>& labels) {
        Face f = 0;
        for (const auto& l : labels) {
            auto it = std::find(ground.begin(), ground.end(), l);
            if (it == ground.end()) throw std::invalid_argument("unknown ground label: " + l);
            f |= Face{1} << (it - ground.begin());
        }
        return f;
    }

    void set_ground(std::vector<std::string> ground) {
        if (ground.size() > 64)
            throw std::invalid_argument("ground sets beyond 64 elements are unsupported");
        std::set<std::string> uniq(ground.begin(), ground.end());
        if (uniq.size() != ground.size())
            throw std::invalid_argument("ground labels must be distinct");
        ground_ = std::move(ground);
    }

    void check_face_range(Face f) const {
        if (ground_.size() < 64 && (f >> ground_.size()) != 0)
            throw std::invalid_argument("face uses indices outside the ground set");
    }

    static void close_down(Face f, std::unordered_set<Face>& seen, std::size_t cap) {
        if (!seen.insert(f).second) return;
        if (seen.size() > cap) throw FaceCapError(cap);
        Face rest = f;
        while (rest) {
            Face low = rest & (~rest + 1);
            close_down(f ^ low, seen, cap);
            rest ^= low;
        }
    }

    std::vector<std::string> ground_;
    std::vector<Face> faces_;  // sorted ascending as integers
};

using Face = SimplicialComplex::Face;

// Ground set = edges of g in id order; facets = perfect matchings. A graph
// with no perfect matching yields the void complex.
inline SimplicialComplex perfect_matching_complex(const Graph& g,
                                                  std::size_t face_cap = kDefaultFaceCap) {
    std::vector<std::string> ground;
    for (std::size_t i = 0; i < g.edge_count(); ++i)
        ground.push_back(g.edge_label(static_cast<int>(i)));
    std::vector<Face> facets;
    for (const auto& pm : enumerate_perfect_matchings(g)) {
        Face f = 0;
        for (int e : pm) f |= Face(1) << e;
        facets.push_back(f);
    }
    if (facets.empty()) return SimplicialComplex::void_complex(std::move(ground));
    return SimplicialComplex::from_facets(std::move(ground), facets, face_cap);
}

// Ground set = vertices of g in id order; faces = independent sets.
inline SimplicialComplex independence_complex(const Graph& g,
                                              std::size_t face_cap = kDefaultFaceCap) {
    const auto& ids = g.vertex_ids();
    if (ids.size() > 64)
        throw std::invalid_argument("independence_complex supports at most 64 vertices");
    std::vector<std::string> ground;
    for (int id : ids) ground.push_back(g.vertex_label(id));
    std::vector<Face> adj(ids.size(), 0);
    for (const auto& e : g.edges()) {
        auto pu = std::lower_bound(ids.begin(), ids.end(), e.u) - ids.begin();
        auto pv = std::lower_bound(ids.begin(), ids.end(), e.v) - ids.begin();
        adj[static_cast<std::size_t>(pu)] |= Face(1) << pv;
        adj[static_cast<std::size_t>(pv)] |= Face(1) << pu;
    }
    std::vector<Face> faces;
    auto rec = [&](auto&& self, Face cur, Face forbidden, int start) -> void {
        faces.push_back(cur);
        if (faces.size() > face_cap) throw FaceCapError(face_cap);
        for (int v = start; v < static_cast<int>(ids.size()); ++v) {
            if (forbidden >> v & 1) continue;
            self(self, cur | (Face(1) << v), forbidden | adj[static_cast<std::size_t>(v)], v + 1);
        }
    };
    rec(rec, 0, 0, 0);
    std::sort(faces.begin(), faces.end());
    SimplicialComplex c = SimplicialComplex::from_faces(std::move(ground), std::move(faces));
    return c;
}

// Auxiliary graph whose independent sets are the faces of the perfect
// matching complex of grid_2xn(n): vertices are the grid's edges, joined
// when they share a grid vertex or form one of the two-edge bad matchings
// {b_i, c_{i+1}}, {c_i, b_{i+1}}.
inline Graph aux_graph_xn(int n) {
    if (n < 1) throw std::invalid_argument("aux_graph_xn requires n >= 1");
    Graph grid = grid_2xn(n);
    Graph x;
    for (std::size_t i = 0; i < grid.edge_count(); ++i)
        x.add_vertex(grid.edge_label(static_cast<int>(i)));
    auto shares_vertex = [&](const GraphEdge& e1, const GraphEdge& e2) {
        return e1.u == e2.u || e1.u == e2.v || e1.v == e2.u || e1.v == e2.v;
    };
    for (std::size_t i = 0; i < grid.edge_count(); ++i)
        for (std::size_t j = i + 1; j < grid.edge_count(); ++j) {
            const auto& e1 = grid.edge(static_cast<int>(i));
            const auto& e2 = grid.edge(static_cast<int>(j));
            if (shares_vertex(e1, e2))
                x.add_edge(static_cast<int>(i), static_cast<int>(j), e1.label + "~" + e2.label);
        }
    for (int i = 1; i <= n - 2; ++i) {
        auto bi = *x.vertex_by_label(detail::sub1("b", i));
        auto ci1 = *x.vertex_by_label(detail::sub1("c", i + 1));
        auto ci = *x.vertex_by_label(detail::sub1("c", i));
        auto bi1 = *x.vertex_by_label(detail::sub1("b", i + 1));
        x.add_edge(bi, ci1, detail::sub1("b", i) + "~" + detail::sub1("c", i + 1));
        x.add_edge(ci, bi1, detail::sub1("c", i) + "~" + detail::sub1("b", i + 1));
    }
    x.set_family("aux-xn", {{"n", n}});
    return x;
}

enum class ComplexCompare { Equal, GroundMismatch, FaceMismatch };

// Correspondence maps a-ground index -> b-ground index.
inline ComplexCompare compare_complexes(const SimplicialComplex& a, const SimplicialComplex& b,
                                        const std::vector<int>& a_to_b) {
    if (a.ground_size() != b.ground_size() || a_to_b.size() != a.ground_size())
        return ComplexCompare::GroundMismatch;
    std::vector<bool> hit(b.ground_size(), false);
    for (int t : a_to_b) {
        if (t < 0 || t >= static_cast<int>(b.ground_size()) || hit[static_cast<std::size_t>(t)])
            return ComplexCompare::GroundMismatch;
        hit[static_cast<std::size_t>(t)] = true;
    }
    std::vector<Face> mapped;
    mapped.reserve(a.face_count());
    for (Face f : a.faces()) {
        Face g = 0;
        for (int i = 0; i < static_cast<int>(a.ground_size()); ++i)
            if (f >> i & 1) g |= Face(1) << a_to_b[static_cast<std::size_t>(i)];
        mapped.push_back(g);
    }
    std::sort(mapped.begin(), mapped.end());
    return mapped == b.faces() ? ComplexCompare::Equal : ComplexCompare::FaceMismatch;
}

// Default correspondence: match ground labels by string equality.
inline ComplexCompare compare_complexes(const SimplicialComplex& a, const SimplicialComplex& b) {
    if (a.ground_size() != b.ground_size()) return ComplexCompare::GroundMismatch;
    std::vector<int> corr;
    for (std::size_t i = 0; i < a.ground_size(); ++i) {
        auto t = b.ground_index(a.label(static_cast<int>(i)));
        if (!t) return ComplexCompare::GroundMismatch;
        corr.push_back(*t);
    }
    return compare_complexes(a, b, corr);
}

inline bool complex_equal(const SimplicialComplex& a, const SimplicialComplex& b) {
    return compare_complexes(a, b) == ComplexCompare::Equal;
}

inline bool complex_equal(const SimplicialComplex& a, const SimplicialComplex& b,
                          const std::vector<int>& a_to_b) {
    return compare_complexes(a, b, a_to_b) == ComplexCompare::Equal;
}

// Drop ground elements that appear in no face (keeping label order), so
// complexes over different edge sets can be compared on their supports.
inline SimplicialComplex restrict_to_support(const SimplicialComplex& c) {
    Face support = 0;
    for (Face f : c.faces()) support |= f;
    std::vector<std::string> ground;
    std::vector<int> newpos(c.ground_size(), -1);
    for (int i = 0; i < static_cast<int>(c.ground_size()); ++i)
        if (support >> i & 1) {
            newpos[static_cast<std::size_t>(i)] = static_cast<int>(ground.size());
            ground.push_back(c.label(i));
        }
    std::vector<Face> faces;
    faces.reserve(c.face_count());
    for (Face f : c.faces()) {
        Face g = 0;
        for (int i = 0; i < static_cast<int>(c.ground_size()); ++i)
            if (f >> i & 1) g |= Face(1) << newpos[static_cast<std::size_t>(i)];
        faces.push_back(g);
    }
    if (faces.empty()) return SimplicialComplex::void_complex(std::move(ground));
    return SimplicialComplex::from_faces(std::move(ground), std::move(faces));
}

inline std::vector<std::size_t> f_vector(const SimplicialComplex& c) { return c.f_vector(); }

inline long long euler_characteristic_reduced(const SimplicialComplex& c) {
    return c.reduced_euler_characteristic();
}

inline json complex_to_json(const SimplicialComplex& c, bool full_faces = false) {
    json ground = json::array();
    for (const auto& lab : c.ground()) ground.push_back(lab);
    auto face_indices = [](Face f) {
        json ix = json::array();
        for (int i = 0; i < 64; ++i)
            if (f >> i & 1) ix.push_back(i);
        return ix;
    };
    json facets = json::array();
    for (Face f : c.facets()) facets.push_back(face_indices(f));
    json out{{"ground", ground}, {"facets", facets}};
    if (full_faces) {
        json faces = json::array();
        for (Face f : c.faces()) faces.push_back(face_indices(f));
        out["faces"] = faces;
    }
    return out;
}

inline SimplicialComplex complex_from_json(const json& j,
                                           std::size_t face_cap = kDefaultFaceCap) {
    std::vector<std::string> ground;
    for (const auto& lab : j.at("ground")) ground.push_back(lab.get<std::string>());
    std::vector<Face> facets;
    for (const auto& fj : j.at("facets")) {
        Face f = 0;
        for (const auto& ix : fj) f |= Face(1) << ix.get<int>();
        facets.push_back(f);
    }
    if (facets.empty()) return SimplicialComplex::void_complex(std::move(ground));
    return SimplicialComplex::from_facets(std::move(ground), facets, face_cap);
}

}  // namespace morsetilings
