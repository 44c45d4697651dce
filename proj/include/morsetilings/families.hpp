#pragma once

// Graph family constructors. Labels follow the usual line-tiling
// conventions: 2xn grids use verticals a_i, upper horizontals b_j, lower
// horizontals c_j; tilings use shared attaching edges a_j between polygons
// and per-polygon boundary paths b_{j,t} (upper) and c_{j,t} (lower).

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "graph.hpp"

namespace morsetilings {

namespace detail {
inline std::string sub1(const std::string& base, long long i) {
    return base + "_" + std::to_string(i);
}
inline std::string sub2(const std::string& base, long long j, long long t) {
    return base + "_{" + std::to_string(j) + "," + std::to_string(t) + "}";
}
}  // namespace detail

// 2xn grid: vertices p_{i,1} (lower) and p_{i,2} (upper), verticals
// a_1..a_n, upper path b_1..b_{n-1}, lower path c_1..c_{n-1}.
inline Graph grid_2xn(int n) {
    if (n < 1) throw std::invalid_argument("grid_2xn requires n >= 1");
    Graph g;
    for (int i = 1; i <= n; ++i) {
        g.add_vertex(detail::sub2("p", i, 2));
        g.add_vertex(detail::sub2("p", i, 1));
    }
    auto upper = [&](int i) { return *g.vertex_by_label(detail::sub2("p", i, 2)); };
    auto lower = [&](int i) { return *g.vertex_by_label(detail::sub2("p", i, 1)); };
    for (int i = 1; i <= n; ++i) g.add_edge(lower(i), upper(i), detail::sub1("a", i));
    for (int j = 1; j < n; ++j) g.add_edge(upper(j), upper(j + 1), detail::sub1("b", j));
    for (int j = 1; j < n; ++j) g.add_edge(lower(j), lower(j + 1), detail::sub1("c", j));
    g.set_family("grid2", {{"n", n}});
    return g;
}

// m x n lattice, row-major vertex order, vertices v_{r,c}; horizontal edges
// h_{r,c} = (v_{r,c}, v_{r,c+1}) first, then vertical edges
// w_{r,c} = (v_{r,c}, v_{r+1,c}).
inline Graph grid_mxn(int m, int n) {
    if (m < 1 || n < 1) throw std::invalid_argument("grid_mxn requires m, n >= 1");
    Graph g;
    for (int r = 1; r <= m; ++r)
        for (int c = 1; c <= n; ++c) g.add_vertex(detail::sub2("v", r, c));
    auto at = [&](int r, int c) { return (r - 1) * n + (c - 1); };
    for (int r = 1; r <= m; ++r)
        for (int c = 1; c < n; ++c)
            g.add_edge(at(r, c), at(r, c + 1), detail::sub2("h", r, c));
    for (int r = 1; r < m; ++r)
        for (int c = 1; c <= n; ++c)
            g.add_edge(at(r, c), at(r + 1, c), detail::sub2("w", r, c));
    g.set_family("gridmn", {{"m", m}, {"n", n}});
    return g;
}

// Cycle on m vertices labeled 1..m. The hexagon gets the customary edge
// letters a..f; other sizes use e_1..e_m.
inline Graph cycle(int m) {
    if (m < 3) throw std::invalid_argument("cycle requires m >= 3");
    Graph g;
    for (int i = 1; i <= m; ++i) g.add_vertex(std::to_string(i));
    const std::vector<std::string> hex = {"a", "b", "c", "d", "e", "f"};
    for (int i = 0; i < m; ++i) {
        std::string lab = (m == 6) ? hex[static_cast<std::size_t>(i)]
                                   : detail::sub1("e", i + 1);
        g.add_edge(i, (i + 1) % m, std::move(lab));
    }
    g.set_family("cycle", {{"m", m}});
    return g;
}

inline Graph path(int m) {
    if (m < 1) throw std::invalid_argument("path requires m >= 1");
    Graph g;
    for (int i = 1; i <= m; ++i) g.add_vertex(std::to_string(i));
    for (int i = 0; i + 1 < m; ++i) g.add_edge(i, i + 1, detail::sub1("e", i + 1));
    g.set_family("path", {{"m", m}});
    return g;
}

// k 2n-gons in a row sharing vertical attaching edges a_1..a_{k+1}.
// Polygon j's upper boundary runs u_{j,1}, u_{j,2}, ..., u_{j,n-1}, u_{j+1,1}
// through edges b_{j,1}..b_{j,n-1}; lower boundary symmetric with c's.
inline Graph even_tiling(int n, int k) {
    if (n < 3 || k < 2) throw std::invalid_argument("even_tiling requires n >= 3, k >= 2");
    Graph g;
    for (int j = 1; j <= k; ++j) {
        g.add_vertex(detail::sub2("u", j, 1));
        g.add_vertex(detail::sub2("l", j, 1));
        for (int t = 2; t < n; ++t) g.add_vertex(detail::sub2("u", j, t));
        for (int t = 2; t < n; ++t) g.add_vertex(detail::sub2("l", j, t));
    }
    g.add_vertex(detail::sub2("u", k + 1, 1));
    g.add_vertex(detail::sub2("l", k + 1, 1));
    auto vid = [&](const std::string& lab) { return *g.vertex_by_label(lab); };
    for (int j = 1; j <= k; ++j) {
        g.add_edge(vid(detail::sub2("u", j, 1)), vid(detail::sub2("l", j, 1)),
                   detail::sub1("a", j));
        std::vector<int> up, lo;
        up.push_back(vid(detail::sub2("u", j, 1)));
        lo.push_back(vid(detail::sub2("l", j, 1)));
        for (int t = 2; t < n; ++t) up.push_back(vid(detail::sub2("u", j, t)));
        for (int t = 2; t < n; ++t) lo.push_back(vid(detail::sub2("l", j, t)));
        up.push_back(vid(detail::sub2("u", j + 1, 1)));
        lo.push_back(vid(detail::sub2("l", j + 1, 1)));
        for (int t = 0; t + 1 <= n - 1; ++t)
            g.add_edge(up[static_cast<std::size_t>(t)], up[static_cast<std::size_t>(t) + 1],
                       detail::sub2("b", j, t + 1));
        for (int t = 0; t + 1 <= n - 1; ++t)
            g.add_edge(lo[static_cast<std::size_t>(t)], lo[static_cast<std::size_t>(t) + 1],
                       detail::sub2("c", j, t + 1));
    }
    g.add_edge(vid(detail::sub2("u", k + 1, 1)), vid(detail::sub2("l", k + 1, 1)),
               detail::sub1("a", k + 1));
    g.set_family("even-tiling", {{"n", n}, {"k", k}});
    return g;
}

namespace detail {

// Shared builder for the two (2n+1)-gon arrangements: 2k polygons, global
// attaching edges a_1..a_{2k+1}. upper_count(j) gives the number of edges on
// polygon j's upper side; the lower side gets the complementary 2n+1-2-upper.
template <typename UpperCount>
inline Graph odd_tiling(int n, int k, const char* family, UpperCount upper_count) {
    if (n < 2 || k < 2)
        throw std::invalid_argument(std::string(family) + " requires n >= 2, k >= 2");
    Graph g;
    for (int j = 1; j <= 2 * k; ++j) {
        int nup = upper_count(j);
        int nlo = 2 * n - 1 - nup;
        g.add_vertex(sub2("u", j, 1));
        g.add_vertex(sub2("l", j, 1));
        for (int t = 2; t <= nup; ++t) g.add_vertex(sub2("u", j, t));
        for (int t = 2; t <= nlo; ++t) g.add_vertex(sub2("l", j, t));
    }
    g.add_vertex(sub2("u", 2 * k + 1, 1));
    g.add_vertex(sub2("l", 2 * k + 1, 1));
    auto vid = [&](const std::string& lab) { return *g.vertex_by_label(lab); };
    for (int j = 1; j <= 2 * k; ++j) {
        g.add_edge(vid(sub2("u", j, 1)), vid(sub2("l", j, 1)), sub1("a", j));
        int nup = upper_count(j);
        int nlo = 2 * n - 1 - nup;
        std::vector<int> up, lo;
        up.push_back(vid(sub2("u", j, 1)));
        for (int t = 2; t <= nup; ++t) up.push_back(vid(sub2("u", j, t)));
        up.push_back(vid(sub2("u", j + 1, 1)));
        lo.push_back(vid(sub2("l", j, 1)));
        for (int t = 2; t <= nlo; ++t) lo.push_back(vid(sub2("l", j, t)));
        lo.push_back(vid(sub2("l", j + 1, 1)));
        for (int t = 0; t < nup; ++t)
            g.add_edge(up[static_cast<std::size_t>(t)], up[static_cast<std::size_t>(t) + 1],
                       sub2("b", j, t + 1));
        for (int t = 0; t < nlo; ++t)
            g.add_edge(lo[static_cast<std::size_t>(t)], lo[static_cast<std::size_t>(t) + 1],
                       sub2("c", j, t + 1));
    }
    g.add_edge(vid(sub2("u", 2 * k + 1, 1)), vid(sub2("l", 2 * k + 1, 1)),
               sub1("a", 2 * k + 1));
    return g;
}

}  // namespace detail

// Every polygon has n upper and n-1 lower edges.
inline Graph odd_tiling_simple(int n, int k) {
    Graph g = detail::odd_tiling(n, k, "odd_tiling_simple", [&](int) { return n; });
    g.set_family("odd-simple", {{"n", n}, {"k", k}});
    return g;
}

// Odd-position polygons have n upper / n-1 lower edges, even-position
// polygons the reverse.
inline Graph odd_tiling_alternate(int n, int k) {
    Graph g = detail::odd_tiling(n, k, "odd_tiling_alternate",
                                 [&](int j) { return (j % 2 == 1) ? n : n - 1; });
    g.set_family("odd-alternate", {{"n", n}, {"k", k}});
    return g;
}

// Zigzag strip of 2k triangles: the alternate arrangement at n=1, where the
// zero-edge polygon sides force endpoint identification (odd polygon j keeps
// its lower attach endpoint, even polygon j its upper one).
inline Graph triangle_tiling(int k) {
    if (k < 2) throw std::invalid_argument("triangle_tiling requires k >= 2");
    Graph g;
    std::vector<int> uid(static_cast<std::size_t>(2 * k + 2), -1);
    std::vector<int> lid(static_cast<std::size_t>(2 * k + 2), -1);
    uid[1] = g.add_vertex(detail::sub1("u", 1));
    lid[1] = g.add_vertex(detail::sub1("l", 1));
    for (int j = 1; j <= 2 * k; ++j) {
        if (j % 2 == 1) {
            uid[static_cast<std::size_t>(j) + 1] = g.add_vertex(detail::sub1("u", j + 1));
            lid[static_cast<std::size_t>(j) + 1] = lid[static_cast<std::size_t>(j)];
        } else {
            lid[static_cast<std::size_t>(j) + 1] = g.add_vertex(detail::sub1("l", j + 1));
            uid[static_cast<std::size_t>(j) + 1] = uid[static_cast<std::size_t>(j)];
        }
    }
    for (int j = 1; j <= 2 * k; ++j) {
        g.add_edge(uid[static_cast<std::size_t>(j)], lid[static_cast<std::size_t>(j)],
                   detail::sub1("a", j));
        if (j % 2 == 1)
            g.add_edge(uid[static_cast<std::size_t>(j)], uid[static_cast<std::size_t>(j) + 1],
                       detail::sub2("b", j, 1));
        else
            g.add_edge(lid[static_cast<std::size_t>(j)], lid[static_cast<std::size_t>(j) + 1],
                       detail::sub2("c", j, 1));
    }
    g.add_edge(uid[static_cast<std::size_t>(2 * k + 1)], lid[static_cast<std::size_t>(2 * k + 1)],
               detail::sub1("a", 2 * k + 1));
    g.set_family("triangles", {{"k", k}});
    return g;
}

// Edge ids of the even-indexed attaching edges a_2, a_4, ..., a_{2k} in an
// odd or triangle tiling.
inline std::vector<int> even_attach_edge_ids(const Graph& g, int k) {
    std::vector<int> out;
    for (int i = 1; i <= k; ++i) out.push_back(g.edge_by_label(detail::sub1("a", 2 * i)));
    return out;
}

enum class Family {
    Grid2xN,
    GridMxN,
    Cycle,
    Path,
    EvenTiling,
    OddTilingSimple,
    OddTilingAlternate,
    TriangleTiling,
};

struct FamilyDescriptor {
    Family family = Family::Grid2xN;
    std::map<std::string, long long> params;
};

inline const std::vector<std::pair<Family, std::string>>& family_names() {
    static const std::vector<std::pair<Family, std::string>> names = {
        {Family::Grid2xN, "grid2"},
        {Family::GridMxN, "gridmn"},
        {Family::Cycle, "cycle"},
        {Family::Path, "path"},
        {Family::EvenTiling, "even-tiling"},
        {Family::OddTilingSimple, "odd-simple"},
        {Family::OddTilingAlternate, "odd-alternate"},
        {Family::TriangleTiling, "triangles"},
    };
    return names;
}

inline std::string family_name(Family f) {
    for (const auto& [fam, name] : family_names())
        if (fam == f) return name;
    throw std::invalid_argument("unknown family");
}

inline Family family_from_name(std::string_view name) {
    for (const auto& [fam, n] : family_names())
        if (n == name) return fam;
    throw std::invalid_argument("unknown family name: " + std::string(name));
}

inline Graph make_family(const FamilyDescriptor& d) {
    auto param = [&](const char* key) -> int {
        auto it = d.params.find(key);
        if (it == d.params.end())
            throw std::invalid_argument(std::string("missing parameter ") + key + " for family " +
                                        family_name(d.family));
        return static_cast<int>(it->second);
    };
    switch (d.family) {
        case Family::Grid2xN: return grid_2xn(param("n"));
        case Family::GridMxN: return grid_mxn(param("m"), param("n"));
        case Family::Cycle: return cycle(param("m"));
        case Family::Path: return path(param("m"));
        case Family::EvenTiling: return even_tiling(param("n"), param("k"));
        case Family::OddTilingSimple: return odd_tiling_simple(param("n"), param("k"));
        case Family::OddTilingAlternate: return odd_tiling_alternate(param("n"), param("k"));
        case Family::TriangleTiling: return triangle_tiling(param("k"));
    }
    throw std::invalid_argument("unknown family");
}

}  // namespace morsetilings
