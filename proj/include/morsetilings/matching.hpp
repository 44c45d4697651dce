#pragma once

// Matchings, perfect matchings, extendability, and bad matchings (minimal
// matchings contained in no perfect matching).

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "families.hpp"
#include "graph.hpp"

namespace morsetilings {

// Sorted edge-id set.
using Matching = std::vector<int>;

struct ExtendabilityResult {
    bool extendable = false;
    std::optional<Matching> witness;
};

inline bool is_matching(const Graph& g, const Matching& edges) {
    std::set<int> covered;
    for (int e : edges) {
        const auto& ed = g.edge(e);
        if (!covered.insert(ed.u).second) return false;
        if (!covered.insert(ed.v).second) return false;
    }
    return true;
}

// Backtracking on the lowest-id uncovered vertex; output sorted
// lexicographically by sorted edge-id tuples.
inline std::vector<Matching> enumerate_perfect_matchings(const Graph& g) {
    std::vector<Matching> out;
    if (g.vertex_count() % 2 != 0) return out;
    const auto& ids = g.vertex_ids();
    std::map<int, std::vector<int>> incident;
    for (int v : ids) incident[v] = {};
    for (std::size_t i = 0; i < g.edge_count(); ++i) {
        const auto& e = g.edge(static_cast<int>(i));
        incident[e.u].push_back(static_cast<int>(i));
        incident[e.v].push_back(static_cast<int>(i));
    }
    std::set<int> covered;
    Matching cur;
    auto rec = [&](auto&& self) -> void {
        int pick = -1;
        for (int v : ids)
            if (!covered.count(v)) { pick = v; break; }
        if (pick == -1) {
            Matching m = cur;
            std::sort(m.begin(), m.end());
            out.push_back(std::move(m));
            return;
        }
        for (int e : incident[pick]) {
            const auto& ed = g.edge(e);
            int other = (ed.u == pick) ? ed.v : ed.u;
            if (covered.count(other)) continue;
            covered.insert(pick);
            covered.insert(other);
            cur.push_back(e);
            self(self);
            cur.pop_back();
            covered.erase(pick);
            covered.erase(other);
        }
    };
    rec(rec);
    std::sort(out.begin(), out.end());
    return out;
}

inline ExtendabilityResult is_extendable(const Graph& g, const Matching& m,
                                         const std::vector<Matching>& pms) {
    if (!is_matching(g, m)) throw std::invalid_argument("edge set is not a matching");
    for (const auto& pm : pms) {
        if (std::includes(pm.begin(), pm.end(), m.begin(), m.end()))
            return {true, pm};
    }
    return {false, std::nullopt};
}

inline ExtendabilityResult is_extendable(const Graph& g, Matching m) {
    std::sort(m.begin(), m.end());
    return is_extendable(g, m, enumerate_perfect_matchings(g));
}

// Minimal non-extendable matchings, found breadth-first by cardinality: the
// frontier holds extendable matchings only, so a newly reached non-extendable
// set needs just the one-edge-removed subsets checked for minimality.
inline std::vector<Matching> enumerate_bad_matchings(const Graph& g) {
    const auto pms = enumerate_perfect_matchings(g);
    std::set<Matching> extendable_faces;
    for (const auto& pm : pms) {
        std::size_t sz = pm.size();
        for (std::uint64_t mask = 0; mask < (std::uint64_t(1) << sz); ++mask) {
            Matching sub;
            for (std::size_t i = 0; i < sz; ++i)
                if (mask >> i & 1) sub.push_back(pm[i]);
            extendable_faces.insert(std::move(sub));
        }
    }
    std::vector<Matching> bad;
    if (!extendable_faces.count(Matching{})) {
        bad.push_back({});  // no perfect matching at all: the empty matching is bad
        return bad;
    }
    std::vector<Matching> frontier = {Matching{}};
    while (!frontier.empty()) {
        std::vector<Matching> next;
        for (const auto& m : frontier) {
            int start = m.empty() ? 0 : m.back() + 1;
            for (int e = start; e < static_cast<int>(g.edge_count()); ++e) {
                Matching m2 = m;
                m2.push_back(e);
                if (!is_matching(g, m2)) continue;
                if (extendable_faces.count(m2)) {
                    next.push_back(std::move(m2));
                    continue;
                }
                bool minimal = true;
                for (std::size_t i = 0; i < m2.size() && minimal; ++i) {
                    Matching sub = m2;
                    sub.erase(sub.begin() + static_cast<std::ptrdiff_t>(i));
                    if (!extendable_faces.count(sub)) minimal = false;
                }
                if (minimal) bad.push_back(std::move(m2));
            }
        }
        frontier = std::move(next);
    }
    std::sort(bad.begin(), bad.end(), [](const Matching& x, const Matching& y) {
        return std::make_pair(x.size(), x) < std::make_pair(y.size(), y);
    });
    return bad;
}

// The two-edge families {b_i, c_{i+1}} and {c_i, b_{i+1}}, 1 <= i <= n-2, on
// grid_2xn(n): exactly its bad matchings.
inline std::vector<Matching> grid_bad_matchings_closed_form(int n) {
    if (n < 1) throw std::invalid_argument("grid_bad_matchings_closed_form requires n >= 1");
    Graph g = grid_2xn(n);
    std::vector<Matching> out;
    for (int i = 1; i <= n - 2; ++i) {
        Matching x1 = {g.edge_by_label(detail::sub1("b", i)),
                       g.edge_by_label(detail::sub1("c", i + 1))};
        Matching x2 = {g.edge_by_label(detail::sub1("c", i)),
                       g.edge_by_label(detail::sub1("b", i + 1))};
        std::sort(x1.begin(), x1.end());
        std::sort(x2.begin(), x2.end());
        out.push_back(std::move(x1));
        out.push_back(std::move(x2));
    }
    return out;
}

// Every perfect matching of grid_2xn(n) uses b_i exactly when it uses c_i.
inline bool grid_upper_lower_linked(int n) {
    if (n < 1) throw std::invalid_argument("grid_upper_lower_linked requires n >= 1");
    Graph g = grid_2xn(n);
    for (const auto& pm : enumerate_perfect_matchings(g)) {
        std::set<int> in(pm.begin(), pm.end());
        for (int i = 1; i < n; ++i) {
            bool hb = in.count(g.edge_by_label(detail::sub1("b", i))) > 0;
            bool hc = in.count(g.edge_by_label(detail::sub1("c", i))) > 0;
            if (hb != hc) return false;
        }
    }
    return true;
}

// No perfect matching of g contains any of the listed edges.
inline bool check_attach_edge_exclusion(const Graph& g, const std::vector<int>& attach_edges) {
    std::set<int> banned;
    for (int e : attach_edges) {
        g.edge(e);
        banned.insert(e);
    }
    for (const auto& pm : enumerate_perfect_matchings(g))
        for (int e : pm)
            if (banned.count(e)) return false;
    return true;
}

inline json matching_to_json(const Graph& g, const Matching& m) {
    json labels = json::array();
    for (int e : m) labels.push_back(g.edge_label(e));
    return labels;
}

inline json bad_matching_report_json(const Graph& g) {
    auto bad = enumerate_bad_matchings(g);
    json list = json::array();
    for (const auto& m : bad) list.push_back(matching_to_json(g, m));
    return json{{"graph", g.family()},
                {"count", bad.size()},
                {"matchings", list}};
}

}  // namespace morsetilings
