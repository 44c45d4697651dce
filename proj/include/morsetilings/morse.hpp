#pragma once

// Element-pairing schedules on simplicial complexes, acyclicity
// verification, neighborhood folds on graphs, and homotopy-type inference
// from critical cells.
//
// An element pairing with x matches every face s with s ∪ {x} whenever both
// are present and x ∉ s. Running a schedule x_1, ..., x_t applies each
// pairing to the faces untouched by the previous ones; the union is a
// partial pairing whose unpaired faces are the critical cells. Zero critical
// cells with the empty face paired certify contractibility; critical cells
// concentrated in one dimension certify a wedge of spheres of that
// dimension.

#include <algorithm>
#include <bit>
#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "complex.hpp"
#include "graph.hpp"

namespace morsetilings {

struct PairingSchedule {
    std::vector<std::string> elements;
};

struct PartialPairing {
    const SimplicialComplex* host = nullptr;
    std::vector<std::pair<Face, Face>> pairs;  // (alpha, beta), beta covers alpha
};

struct CriticalCells {
    std::map<int, std::vector<Face>> by_dimension;  // dimension -1 admits the empty face
    std::map<int, std::size_t> counts;

    std::size_t total() const {
        std::size_t t = 0;
        for (const auto& [d, c] : counts) t += c;
        return t;
    }
    bool contains_empty() const { return counts.count(-1) > 0; }
};

struct PairingRun {
    PartialPairing pairing;
    CriticalCells critical;
    bool empty_paired = false;
};

inline PairingRun element_pairing_sequence(const SimplicialComplex& c,
                                           const PairingSchedule& s) {
    if (c.is_void()) throw std::domain_error("element pairing needs a non-void complex");
    std::vector<int> xs;
    std::set<std::string> seen;
    for (const auto& lab : s.elements) {
        if (!seen.insert(lab).second)
            throw std::invalid_argument("duplicate schedule entry: " + lab);
        auto ix = c.ground_index(lab);
        if (!ix) throw std::invalid_argument("schedule label not in ground set: " + lab);
        xs.push_back(*ix);
    }
    const auto& faces = c.faces();
    std::vector<char> alive(faces.size(), 1);
    auto index_of = [&](Face f) {
        return static_cast<std::size_t>(
            std::lower_bound(faces.begin(), faces.end(), f) - faces.begin());
    };
    PairingRun run;
    run.pairing.host = &c;
    for (int x : xs) {
        Face bit = Face(1) << x;
        for (std::size_t i = 0; i < faces.size(); ++i) {
            if (!alive[i] || (faces[i] & bit)) continue;
            Face partner = faces[i] | bit;
            if (!c.contains(partner)) continue;
            std::size_t j = index_of(partner);
            if (!alive[j]) continue;
            alive[i] = alive[j] = 0;
            run.pairing.pairs.emplace_back(faces[i], partner);
        }
    }
    for (std::size_t i = 0; i < faces.size(); ++i) {
        if (!alive[i]) continue;
        int d = SimplicialComplex::face_dim(faces[i]);
        run.critical.by_dimension[d].push_back(faces[i]);
    }
    for (auto& [d, fs] : run.critical.by_dimension) run.critical.counts[d] = fs.size();
    run.empty_paired = !run.critical.contains_empty();
    return run;
}

struct PairingCheck {
    bool ok = true;
    std::vector<std::string> violations;
    explicit operator bool() const { return ok; }
};

inline PairingCheck verify_partial_pairing(const PartialPairing& p) {
    PairingCheck out;
    auto face_name = [&](Face f) {
        if (!p.host) return std::to_string(f);
        std::string s = "{";
        bool first = true;
        for (const auto& lab : p.host->face_labels(f)) {
            if (!first) s += ",";
            s += lab;
            first = false;
        }
        return s + "}";
    };
    std::set<Face> used;
    for (const auto& [a, b] : p.pairs) {
        if ((a & ~b) != 0 || std::popcount(b) != std::popcount(a) + 1) {
            out.ok = false;
            out.violations.push_back("pair " + face_name(a) + " -> " + face_name(b) +
                                     " is not a cover relation");
        }
        if (p.host && (!p.host->contains(a) || !p.host->contains(b))) {
            out.ok = false;
            out.violations.push_back("pair " + face_name(a) + " -> " + face_name(b) +
                                     " uses faces outside the complex");
        }
        for (Face f : {a, b}) {
            if (!used.insert(f).second) {
                out.ok = false;
                out.violations.push_back("face " + face_name(f) + " occurs in more than one pair");
            }
        }
    }
    return out;
}

// Orient matched cover edges upward and all others downward; the pairing is
// acyclic iff no directed cycle exists. Cycles alternate between two
// consecutive dimensions, so it suffices to search, per dimension d, the
// relation alpha -> alpha' on upward-paired d-faces with alpha' a facet of
// the partner of alpha.
inline bool verify_acyclic(const PartialPairing& p) {
    auto check = verify_partial_pairing(p);
    if (!check.ok)
        throw std::logic_error("verify_acyclic requires a valid partial pairing: " +
                               (check.violations.empty() ? std::string("invalid")
                                                         : check.violations.front()));
    std::map<int, std::vector<std::pair<Face, Face>>> by_dim;
    for (const auto& [a, b] : p.pairs)
        by_dim[std::popcount(a)].push_back({a, b});
    for (auto& [card, pairs] : by_dim) {
        std::map<Face, Face> partner(pairs.begin(), pairs.end());
        std::map<Face, int> color;  // 0 unseen, 1 on stack, 2 done
        for (const auto& [start, bstart] : pairs) {
            if (color[start]) continue;
            std::vector<std::pair<Face, int>> stack = {{start, 0}};
            while (!stack.empty()) {
                auto& [f, stage] = stack.back();
                if (stage == 0) {
                    if (color[f] != 0) {  // already opened via another branch
                        stack.pop_back();
                        continue;
                    }
                    color[f] = 1;
                    stage = 1;
                    Face b = partner[f];
                    Face rest = b;
                    bool cycle = false;
                    std::vector<Face> nexts;
                    while (rest) {
                        Face low = rest & (~rest + 1);
                        Face a2 = b ^ low;
                        rest ^= low;
                        if (a2 == f || !partner.count(a2)) continue;
                        if (color[a2] == 1) { cycle = true; break; }
                        if (color[a2] == 0) nexts.push_back(a2);
                    }
                    if (cycle) return false;
                    for (Face a2 : nexts) stack.push_back({a2, 0});
                } else {
                    if (color[f] == 1) color[f] = 2;
                    stack.pop_back();
                }
            }
        }
    }
    return true;
}

class FoldError : public std::runtime_error {
public:
    FoldError(const std::string& msg, int offending) : std::runtime_error(msg), offending_(offending) {}
    int offending_neighbor() const { return offending_; }

private:
    int offending_;
};

// Requires N(v) ⊆ N(w); deleting w then preserves the homotopy type of the
// independence complex. Returns g without w.
inline Graph fold_reduce(const Graph& g, int v, int w) {
    if (v == w) throw std::invalid_argument("fold_reduce requires distinct vertices");
    auto nv = g.neighborhood(v);
    auto nw = g.neighborhood(w);
    for (int x : nv) {
        if (!std::binary_search(nw.begin(), nw.end(), x))
            throw FoldError("fold precondition fails: vertex " + g.vertex_label(x) +
                                " neighbors " + g.vertex_label(v) + " but not " +
                                g.vertex_label(w),
                            x);
    }
    return g.without_vertex(w);
}

struct FoldStep {
    std::string kept;
    std::string removed;
};

struct FoldSequenceResult {
    std::vector<Graph> stages;  // initial graph, then one entry per fold
    std::vector<FoldStep> log;
    bool certified = false;  // final stage is (graph ≅ aux_graph_xn(n-2)) ⊔ P_3
    std::string note;
};

// The three folds on aux_graph_xn(n) that peel off the last grid column:
// delete b_{n-2}, then c_{n-2}, then a_{n-1}, each justified by
// N(a_n) ⊆ N(deleted). What remains is certified against
// aux_graph_xn(n-2) ⊔ (b_{n-1} - a_n - c_{n-1}).
inline FoldSequenceResult fold_sequence_grid(int n) {
    if (n < 3) throw std::invalid_argument("fold_sequence_grid requires n >= 3");
    FoldSequenceResult out;
    Graph x = aux_graph_xn(n);
    out.stages.push_back(x);
    const std::string va = detail::sub1("a", n);
    int v = *x.vertex_by_label(va);
    for (const std::string& wl : {detail::sub1("b", n - 2), detail::sub1("c", n - 2),
                                  detail::sub1("a", n - 1)}) {
        int w = *out.stages.back().vertex_by_label(wl);
        Graph next = fold_reduce(out.stages.back(), v, w);
        out.log.push_back({va, wl});
        out.stages.push_back(std::move(next));
    }
    const Graph& fin = out.stages.back();
    const std::string bl = detail::sub1("b", n - 1), cl = detail::sub1("c", n - 1);
    auto bid = fin.vertex_by_label(bl);
    auto cid = fin.vertex_by_label(cl);
    int an = *fin.vertex_by_label(va);
    if (!bid || !cid) {
        out.note = "expected path vertices missing";
        return out;
    }
    auto nb = fin.neighborhood(*bid);
    auto nc = fin.neighborhood(*cid);
    auto na = fin.neighborhood(an);
    std::vector<int> expect_an = {std::min(*bid, *cid), std::max(*bid, *cid)};
    if (!(nb == std::vector<int>{an} && nc == std::vector<int>{an} && na == expect_an)) {
        out.note = "last-column part is not the expected 3-vertex path";
        return out;
    }
    Graph rest = fin.without_vertex(an).without_vertex(*bid).without_vertex(*cid);
    if (!labeled_isomorphic(rest, aux_graph_xn(n - 2))) {
        out.note = "remainder does not match the smaller auxiliary graph";
        return out;
    }
    out.certified = true;
    return out;
}

struct HomotopyTypeReport {
    enum class Kind { Empty, Contractible, WedgeOfSpheres, Undetermined };
    enum class Evidence { ZeroCriticalCells, SingleDimCriticalCells, HomologyConsistent, None };

    Kind kind = Kind::Undetermined;
    int dim = -1;         // sphere dimension when kind == WedgeOfSpheres
    long long count = 0;  // number of wedge summands
    Evidence evidence = Evidence::None;
};

inline std::string homotopy_kind_name(HomotopyTypeReport::Kind k) {
    switch (k) {
        case HomotopyTypeReport::Kind::Empty: return "empty";
        case HomotopyTypeReport::Kind::Contractible: return "contractible";
        case HomotopyTypeReport::Kind::WedgeOfSpheres: return "wedge-of-spheres";
        case HomotopyTypeReport::Kind::Undetermined: return "undetermined";
    }
    return "undetermined";
}

inline std::string evidence_name(HomotopyTypeReport::Evidence e) {
    switch (e) {
        case HomotopyTypeReport::Evidence::ZeroCriticalCells: return "zero-critical-cells";
        case HomotopyTypeReport::Evidence::SingleDimCriticalCells:
            return "single-dimension-critical-cells";
        case HomotopyTypeReport::Evidence::HomologyConsistent: return "homology-consistent";
        case HomotopyTypeReport::Evidence::None: return "none";
    }
    return "none";
}

inline HomotopyTypeReport infer_homotopy_type(const CriticalCells& cc, bool empty_paired) {
    HomotopyTypeReport r;
    if (!empty_paired) return r;
    if (cc.total() == 0) {
        r.kind = HomotopyTypeReport::Kind::Contractible;
        r.evidence = HomotopyTypeReport::Evidence::ZeroCriticalCells;
        return r;
    }
    if (cc.counts.size() == 1) {
        auto [d, count] = *cc.counts.begin();
        r.kind = HomotopyTypeReport::Kind::WedgeOfSpheres;
        r.dim = d;
        r.count = static_cast<long long>(count);
        r.evidence = HomotopyTypeReport::Evidence::SingleDimCriticalCells;
    }
    return r;
}

inline HomotopyTypeReport void_complex_report() {
    HomotopyTypeReport r;
    r.kind = HomotopyTypeReport::Kind::Empty;
    r.evidence = HomotopyTypeReport::Evidence::ZeroCriticalCells;
    return r;
}

// Pairs cancel in the alternating face sum, so the sum over all faces
// (empty face contributing -1) must equal the sum over critical cells.
inline bool morse_euler_check(const SimplicialComplex& c, const CriticalCells& cc,
                              bool empty_paired) {
    long long all = c.reduced_euler_characteristic();
    long long crit = empty_paired ? 0 : -1;
    for (const auto& [d, fs] : cc.by_dimension) {
        if (d < 0) continue;
        long long sign = (d % 2 == 0) ? 1 : -1;
        crit += sign * static_cast<long long>(fs.size());
    }
    return all == crit;
}

inline PairingSchedule grid_schedule(int n) {
    if (n < 1) throw std::invalid_argument("grid_schedule requires n >= 1");
    PairingSchedule s;
    if (n % 2 == 1) {
        for (int i = 1; i <= n; i += 2) s.elements.push_back(detail::sub1("a", i));
    } else {
        for (int i = 1; i < n; i += 2) {
            s.elements.push_back(detail::sub1("a", i));
            s.elements.push_back(detail::sub1("b", i));
        }
    }
    return s;
}

inline PairingSchedule even_tiling_schedule(int n) {
    if (n < 3) throw std::invalid_argument("even_tiling_schedule requires n >= 3");
    int t = (n % 2 == 0) ? n - 2 : n - 1;
    return PairingSchedule{{detail::sub1("a", 1), detail::sub2("b", 1, 1),
                            detail::sub2("c", 2, t)}};
}

inline PairingSchedule odd_simple_schedule(int n) {
    if (n < 2) throw std::invalid_argument("odd_simple_schedule requires n >= 2");
    return PairingSchedule{{detail::sub1("a", 1), detail::sub2("b", 1, 1),
                            detail::sub2("c", 4, n - 1)}};
}

inline json homotopy_to_json(const HomotopyTypeReport& r) {
    json out{{"kind", homotopy_kind_name(r.kind)}, {"evidence", evidence_name(r.evidence)}};
    if (r.kind == HomotopyTypeReport::Kind::WedgeOfSpheres) {
        out["dim"] = r.dim;
        out["count"] = r.count;
    }
    return out;
}

inline json morse_report_json(const SimplicialComplex& c, const PairingSchedule& s,
                              const PairingRun& run, bool acyclic) {
    json critical = json::array();
    for (const auto& [d, fs] : run.critical.by_dimension) {
        json faces = json::array();
        for (Face f : fs) {
            json labs = json::array();
            for (const auto& lab : c.face_labels(f)) labs.push_back(lab);
            faces.push_back(labs);
        }
        critical.push_back(json{{"dim", d}, {"faces", faces}});
    }
    return json{{"schedule", s.elements},
                {"paired_count", run.pairing.pairs.size()},
                {"critical", critical},
                {"empty_paired", run.empty_paired},
                {"acyclic", acyclic},
                {"homotopy", homotopy_to_json(infer_homotopy_type(run.critical, run.empty_paired))}};
}

}  // namespace morsetilings
