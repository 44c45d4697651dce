#pragma once

// Exact integer simplicial homology. Boundary matrices come from the stored
// face lists; Smith normal form runs over unbounded integers with sparse
// row/column elimination. Unit pivots (which dominate for these complexes)
// are eliminated first, smallest column fill first; leftover entries go
// through the classical minimum-absolute-value reduction, so torsion comes
// out exactly.

#include <algorithm>
#include <bit>
#include <cstdint>
#include <map>
#include <numeric>
#include <optional>
#include <queue>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "complex.hpp"
#include "morse.hpp"

namespace morsetilings {

using Int = boost::multiprecision::cpp_int;

struct IntMat {
    int rows = 0;
    int cols = 0;
    std::vector<std::tuple<int, int, long long>> entries;  // (row, col, value)

    static IntMat dense(const std::vector<std::vector<long long>>& m) {
        IntMat a;
        a.rows = static_cast<int>(m.size());
        a.cols = m.empty() ? 0 : static_cast<int>(m.front().size());
        for (int r = 0; r < a.rows; ++r) {
            if (static_cast<int>(m[static_cast<std::size_t>(r)].size()) != a.cols)
                throw std::invalid_argument("ragged matrix");
            for (int c = 0; c < a.cols; ++c) {
                long long v = m[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)];
                if (v != 0) a.entries.emplace_back(r, c, v);
            }
        }
        return a;
    }
};

struct SmithResult {
    std::vector<Int> invariant_factors;  // d_1 | d_2 | ... | d_r, all positive
    int rank = 0;
};

namespace detail {

class SnfWorkspace {
public:
    explicit SnfWorkspace(const IntMat& m) : row_(static_cast<std::size_t>(m.rows)), colrows_(static_cast<std::size_t>(m.cols)) {
        for (const auto& [r, c, v] : m.entries) {
            if (r < 0 || r >= m.rows || c < 0 || c >= m.cols)
                throw std::invalid_argument("matrix entry out of range");
            if (v == 0) continue;
            auto& cell = row_[static_cast<std::size_t>(r)][c];
            cell += v;
            if (cell == 0) row_[static_cast<std::size_t>(r)].erase(c);
        }
        for (int r = 0; r < m.rows; ++r)
            for (const auto& [c, v] : row_[static_cast<std::size_t>(r)])
                colrows_[static_cast<std::size_t>(c)].insert(r);
    }

    std::vector<Int> diagonalize() {
        std::vector<Int> diag;
        for (std::size_t c = 0; c < colrows_.size(); ++c)
            if (!colrows_[c].empty()) push_col(static_cast<int>(c));
        // unit-pivot phase
        while (!queue_.empty()) {
            auto [nnz, c] = queue_.top();
            queue_.pop();
            auto& rows = colrows_[static_cast<std::size_t>(c)];
            if (rows.empty() || static_cast<int>(rows.size()) != nnz) continue;  // stale
            int pr = -1;
            std::size_t best = 0;
            for (int r : rows) {
                const Int& v = row_[static_cast<std::size_t>(r)].at(c);
                if (v == 1 || v == -1) {
                    std::size_t rn = row_[static_cast<std::size_t>(r)].size();
                    if (pr == -1 || rn < best) { pr = r; best = rn; }
                }
            }
            if (pr == -1) continue;  // no unit entry here now; classical phase will see it
            eliminate_unit(pr, c);
            diag.push_back(1);
        }
        // classical phase on whatever is left
        while (true) {
            auto piv = min_abs_entry();
            if (!piv) break;
            auto [r, c] = *piv;
            if (!clear_column(r, c)) continue;   // remainders created a smaller entry
            if (!clear_row(r, c)) continue;
            Int v = row_[static_cast<std::size_t>(r)].at(c);
            diag.push_back(v < 0 ? Int(-v) : v);
            drop_row(r);
        }
        return diag;
    }

private:
    void push_col(int c) {
        queue_.push({static_cast<int>(colrows_[static_cast<std::size_t>(c)].size()), c});
    }

    // row[r2] -= q * row[r]
    void row_sub(int r2, int r, const Int& q) {
        if (q == 0) return;
        auto& target = row_[static_cast<std::size_t>(r2)];
        for (const auto& [c, v] : row_[static_cast<std::size_t>(r)]) {
            auto it = target.find(c);
            if (it == target.end()) {
                target.emplace(c, -q * v);
                colrows_[static_cast<std::size_t>(c)].insert(r2);
                push_col(c);
            } else {
                it->second -= q * v;
                if (it->second == 0) {
                    target.erase(it);
                    colrows_[static_cast<std::size_t>(c)].erase(r2);
                    push_col(c);
                }
            }
        }
    }

    void drop_row(int r) {
        for (const auto& [c, v] : row_[static_cast<std::size_t>(r)]) {
            colrows_[static_cast<std::size_t>(c)].erase(r);
            push_col(c);
        }
        row_[static_cast<std::size_t>(r)].clear();
    }

    // Exact elimination with a ±1 pivot: clear the column with row
    // operations, then the pivot row is alone in its column and its other
    // entries die under column operations touching only that row.
    void eliminate_unit(int pr, int c) {
        Int v = row_[static_cast<std::size_t>(pr)].at(c);
        auto rows = colrows_[static_cast<std::size_t>(c)];
        for (int r2 : rows) {
            if (r2 == pr) continue;
            Int q = row_[static_cast<std::size_t>(r2)].at(c) / v;  // exact for ±1 pivot
            row_sub(r2, pr, q);
        }
        drop_row(pr);
    }

    static Int nearest_quotient(const Int& a, const Int& b) {
        Int q = a / b;                  // truncated
        Int r = a - q * b;
        if (r != 0) {
            Int twice = 2 * (r < 0 ? Int(-r) : r);
            Int babs = b < 0 ? Int(-b) : b;
            if (twice > babs) q += ((r < 0) == (b < 0)) ? 1 : -1;
        }
        return q;
    }

    std::optional<std::pair<int, int>> min_abs_entry() const {
        std::optional<std::pair<int, int>> best;
        Int bestv = 0;
        for (std::size_t c = 0; c < colrows_.size(); ++c)
            for (int r : colrows_[c]) {
                Int v = row_[static_cast<std::size_t>(r)].at(static_cast<int>(c));
                if (v < 0) v = -v;
                if (!best || v < bestv) {
                    best = {r, static_cast<int>(c)};
                    bestv = v;
                }
            }
        return best;
    }

    // Returns true when the column is clear apart from the pivot.
    bool clear_column(int pr, int c) {
        Int v = row_[static_cast<std::size_t>(pr)].at(c);
        auto rows = colrows_[static_cast<std::size_t>(c)];
        bool clean = true;
        for (int r2 : rows) {
            if (r2 == pr) continue;
            Int q = nearest_quotient(row_[static_cast<std::size_t>(r2)].at(c), v);
            row_sub(r2, pr, q);
            if (row_[static_cast<std::size_t>(r2)].count(c)) clean = false;
        }
        return clean;
    }

    // Column operations against a pivot whose column is already clear touch
    // only the pivot row, leaving remainders there when the pivot does not
    // divide an entry.
    bool clear_row(int pr, int c) {
        Int v = row_[static_cast<std::size_t>(pr)].at(c);
        auto& r = row_[static_cast<std::size_t>(pr)];
        bool clean = true;
        std::vector<int> cols;
        for (const auto& [c2, val] : r)
            if (c2 != c) cols.push_back(c2);
        for (int c2 : cols) {
            Int q = nearest_quotient(r.at(c2), v);
            Int rem = r.at(c2) - q * v;
            if (rem == 0) {
                r.erase(c2);
                colrows_[static_cast<std::size_t>(c2)].erase(pr);
                push_col(c2);
            } else {
                r[c2] = rem;
                clean = false;
            }
        }
        return clean;
    }

    std::vector<std::map<int, Int>> row_;
    std::vector<std::set<int>> colrows_;
    std::priority_queue<std::pair<int, int>, std::vector<std::pair<int, int>>,
                        std::greater<>> queue_;
};

}  // namespace detail

inline SmithResult smith_normal_form(const IntMat& m) {
    detail::SnfWorkspace ws(m);
    std::vector<Int> diag = ws.diagonalize();
    // Normalize into a divisibility chain. Unit factors divide everything,
    // so only the handful of larger values need the pairwise gcd/lcm fix.
    std::size_t ones = 0;
    std::vector<Int> rest;
    for (auto& v : diag) {
        if (v == 1) ++ones;
        else rest.push_back(std::move(v));
    }
    bool changed = true;
    while (changed) {
        changed = false;
        for (std::size_t i = 0; i < rest.size(); ++i)
            for (std::size_t j = i + 1; j < rest.size(); ++j) {
                if (rest[j] % rest[i] == 0) continue;
                Int g = boost::multiprecision::gcd(rest[i], rest[j]);
                Int l = rest[i] / g * rest[j];
                rest[i] = g;
                rest[j] = l;
                changed = true;
            }
    }
    std::sort(rest.begin(), rest.end());
    SmithResult out;
    out.invariant_factors.assign(ones, Int(1));
    for (auto& v : rest) out.invariant_factors.push_back(std::move(v));
    out.rank = static_cast<int>(out.invariant_factors.size());
    return out;
}

struct BoundaryMatrix {
    int dimension = 0;
    std::vector<Face> row_faces;  // (d-1)-faces, ascending
    std::vector<Face> col_faces;  // d-faces, ascending
    IntMat mat;
};

// One matrix per dimension 1..dim(c); the dimension-0 augmentation is
// handled inside reduced_betti.
inline std::vector<BoundaryMatrix> boundary_matrices(const SimplicialComplex& c) {
    if (c.is_void()) throw std::domain_error("void complex has no boundary matrices");
    int D = c.dim();
    std::vector<std::vector<Face>> byd(static_cast<std::size_t>(D + 1));
    for (Face f : c.faces()) {
        int d = SimplicialComplex::face_dim(f);
        if (d >= 0) byd[static_cast<std::size_t>(d)].push_back(f);
    }
    std::vector<BoundaryMatrix> out;
    for (int d = 1; d <= D; ++d) {
        BoundaryMatrix bm;
        bm.dimension = d;
        bm.row_faces = byd[static_cast<std::size_t>(d - 1)];
        bm.col_faces = byd[static_cast<std::size_t>(d)];
        bm.mat.rows = static_cast<int>(bm.row_faces.size());
        bm.mat.cols = static_cast<int>(bm.col_faces.size());
        for (int j = 0; j < bm.mat.cols; ++j) {
            Face f = bm.col_faces[static_cast<std::size_t>(j)];
            Face rest = f;
            int position = 0;
            while (rest) {
                Face low = rest & (~rest + 1);
                Face sub = f ^ low;
                auto it = std::lower_bound(bm.row_faces.begin(), bm.row_faces.end(), sub);
                int i = static_cast<int>(it - bm.row_faces.begin());
                bm.mat.entries.emplace_back(i, j, (position % 2 == 0) ? 1 : -1);
                rest ^= low;
                ++position;
            }
        }
        out.push_back(std::move(bm));
    }
    return out;
}

// a = boundary in dimension d, b = boundary in dimension d+1; both index the
// shared d-faces identically (ascending), so the product is well defined.
inline bool boundary_composition_zero(const BoundaryMatrix& a, const BoundaryMatrix& b) {
    if (b.dimension != a.dimension + 1 || a.mat.cols != b.mat.rows)
        throw std::invalid_argument("boundary matrices are not consecutive");
    std::vector<std::vector<std::pair<int, long long>>> acol(
        static_cast<std::size_t>(a.mat.cols));
    for (const auto& [r, c, v] : a.mat.entries)
        acol[static_cast<std::size_t>(c)].emplace_back(r, v);
    std::vector<std::vector<std::pair<int, long long>>> bcol(
        static_cast<std::size_t>(b.mat.cols));
    for (const auto& [r, c, v] : b.mat.entries)
        bcol[static_cast<std::size_t>(c)].emplace_back(r, v);
    for (const auto& col : bcol) {
        std::map<int, long long> accum;
        for (const auto& [mid, vb] : col)
            for (const auto& [r, va] : acol[static_cast<std::size_t>(mid)])
                accum[r] += va * vb;
        for (const auto& [r, v] : accum)
            if (v != 0) return false;
    }
    return true;
}

struct BettiReport {
    std::vector<long long> reduced_betti;   // index = dimension, 0..dim
    std::vector<std::vector<Int>> torsion;  // invariant factors > 1, per dimension
    bool void_complex = false;
};

inline BettiReport reduced_betti(const SimplicialComplex& c) {
    BettiReport rep;
    if (c.is_void()) {
        rep.void_complex = true;
        return rep;
    }
    int D = c.dim();
    if (D < 0) return rep;  // only the empty face: nothing in dimensions >= 0
    auto fv = c.f_vector();
    auto bms = boundary_matrices(c);
    std::vector<int> rank(static_cast<std::size_t>(D + 2), 0);
    std::vector<std::vector<Int>> tors(static_cast<std::size_t>(D + 2));
    rank[0] = fv[0] > 0 ? 1 : 0;  // augmentation
    for (const auto& bm : bms) {
        auto snf = smith_normal_form(bm.mat);
        rank[static_cast<std::size_t>(bm.dimension)] = snf.rank;
        for (const auto& f : snf.invariant_factors)
            if (f > 1) tors[static_cast<std::size_t>(bm.dimension)].push_back(f);
    }
    for (int d = 0; d <= D; ++d) {
        long long b = static_cast<long long>(fv[static_cast<std::size_t>(d)]) -
                      rank[static_cast<std::size_t>(d)] - rank[static_cast<std::size_t>(d + 1)];
        rep.reduced_betti.push_back(b);
        rep.torsion.push_back(tors[static_cast<std::size_t>(d + 1)]);
    }
    return rep;
}

inline bool torsion_free(const BettiReport& r) {
    for (const auto& t : r.torsion)
        if (!t.empty()) return false;
    return true;
}

inline bool homology_consistent_with(const BettiReport& r, const HomotopyTypeReport& h) {
    switch (h.kind) {
        case HomotopyTypeReport::Kind::Empty:
            return r.void_complex;
        case HomotopyTypeReport::Kind::Contractible: {
            if (r.void_complex || !torsion_free(r)) return false;
            for (long long b : r.reduced_betti)
                if (b != 0) return false;
            return true;
        }
        case HomotopyTypeReport::Kind::WedgeOfSpheres: {
            if (r.void_complex || !torsion_free(r)) return false;
            for (std::size_t d = 0; d < r.reduced_betti.size(); ++d) {
                long long want = (static_cast<int>(d) == h.dim) ? h.count : 0;
                if (r.reduced_betti[d] != want) return false;
            }
            if (h.dim >= static_cast<int>(r.reduced_betti.size()) && h.count != 0) return false;
            return true;
        }
        case HomotopyTypeReport::Kind::Undetermined:
            return true;
    }
    return true;
}

inline json betti_report_json(const BettiReport& r) {
    json torsion = json::array();
    for (const auto& t : r.torsion) {
        json facs = json::array();
        for (const auto& f : t) facs.push_back(f.str());
        torsion.push_back(facs);
    }
    return json{{"reduced_betti", r.reduced_betti}, {"torsion", torsion},
                {"void", r.void_complex}};
}

inline json homology_report_json(const BettiReport& r,
                                 const std::optional<HomotopyTypeReport>& h = std::nullopt) {
    json out = betti_report_json(r);
    if (h) {
        out["consistent_with"] = homotopy_to_json(*h);
        out["consistent"] = homology_consistent_with(r, *h);
    }
    return out;
}

}  // namespace morsetilings
