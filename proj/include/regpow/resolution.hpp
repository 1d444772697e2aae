#ifndef REGPOW_RESOLUTION_HPP
#define REGPOW_RESOLUTION_HPP

#include <map>

#include "regpow/presentation.hpp"

namespace regpow {

// Minimal graded free resolution F_0 <- F_1 <- ... <- F_L. maps[k] is the
// differential F_{k+1} -> F_k stored column-major: maps[k][c][r].
template <class C>
struct Resolution {
    RingPtr ring;
    std::vector<std::vector<GDeg>> twists;                 // twists[k] = degrees of F_k basis
    std::vector<std::vector<std::vector<Poly<C>>>> maps;   // maps[k] : F_{k+1} -> F_k

    size_t length() const { return maps.size(); }
    size_t rank(size_t k) const { return twists[k].size(); }
};

namespace detail {

// Removes one unit entry from maps[k] at (row i, col j), adjusting the two
// neighboring differentials: the map out of F_k loses column i, the map into
// F_{k+1} loses row j.
template <class C>
void prune_step(Resolution<C>& R, size_t k, size_t i, size_t j) {
    auto& d = R.maps[k];
    C u = d[j][i].lc();
    C uinv = u.inv();
    const size_t rows = R.twists[k].size();

    std::vector<std::vector<Poly<C>>> nd;
    for (size_t c = 0; c < d.size(); ++c) {
        if (c == j) continue;
        std::vector<Poly<C>> col;
        col.reserve(rows - 1);
        const Poly<C>& pc = d[c][i];
        for (size_t r = 0; r < rows; ++r) {
            if (r == i) continue;
            col.push_back(d[c][r] - d[j][r].mul_scalar(uinv) * pc);
        }
        nd.push_back(std::move(col));
    }
    R.maps[k] = std::move(nd);

    if (k > 0) {  // map F_k -> F_{k-1}: drop column i
        R.maps[k - 1].erase(R.maps[k - 1].begin() + i);
    }
    if (k + 1 < R.maps.size()) {  // map F_{k+2} -> F_{k+1}: drop row j
        for (auto& col : R.maps[k + 1]) col.erase(col.begin() + j);
    }
    R.twists[k].erase(R.twists[k].begin() + i);
    R.twists[k + 1].erase(R.twists[k + 1].begin() + j);
}

template <class C>
void prune_complex(Resolution<C>& R) {
    bool changed = true;
    while (changed) {
        changed = false;
        for (size_t k = 0; k < R.maps.size() && !changed; ++k) {
            for (size_t c = 0; c < R.maps[k].size() && !changed; ++c)
                for (size_t r = 0; r < R.twists[k].size() && !changed; ++r) {
                    const auto& e = R.maps[k][c][r];
                    if (!e.is_zero() && e.nterms() == 1 && e.lm().is_one()) {
                        prune_step(R, k, r, c);
                        changed = true;
                    }
                }
        }
    }
    // trim levels whose free module was emptied by pruning
    while (R.twists.size() > 1 && R.twists.back().empty()) {
        R.twists.pop_back();
        R.maps.pop_back();
    }
}

}  // namespace detail

template <class C>
GDeg column_gdeg(const std::vector<Poly<C>>& col, const std::vector<GDeg>& row_twists, GDeg fallback = GDeg()) {
    for (size_t r = 0; r < col.size(); ++r)
        if (!col[r].is_zero()) return poly_gdeg(col[r]) + row_twists[r];
    return fallback;
}

// Minimal free resolution by iterated syzygies with pruning after each step.
// Length is capped by the number of variables (Hilbert syzygy theorem); a
// longer outcome would be an internal error.
template <class C>
Resolution<C> free_resolution(const Presentation<C>& input) {
    Presentation<C> p = minimal_presentation(input);
    Resolution<C> R;
    R.ring = p.ring;
    R.twists.push_back(p.gens);
    if (p.is_zero()) return R;
    if (!p.rel.empty()) {
        R.maps.push_back(p.rel);
        R.twists.push_back(p.reldeg);
        detail::prune_complex(R);
    }

    const size_t maxlen = p.ring->nvars() + 2;
    while (!R.maps.empty() && !R.twists.back().empty()) {
        current_budget().check_time();
        const auto& last = R.maps.back();
        const size_t k = R.maps.size();  // last: F_k -> F_{k-1}
        std::vector<ModVec<C>> cols;
        cols.reserve(last.size());
        for (auto& col : last) cols.push_back(ModVec<C>::from_column(R.ring, col));
        std::vector<int64_t> row_tw;
        for (auto& t : R.twists[k - 1]) row_tw.push_back(t.d1);
        auto Z = module_syzygies<C>(R.ring, cols, &row_tw);
        if (Z.empty()) break;
        std::vector<std::vector<Poly<C>>> nm;
        std::vector<GDeg> nt;
        for (auto& z : Z) {
            auto col = z.to_column(last.size());
            nm.push_back(col);
            nt.push_back(column_gdeg(col, R.twists[k]));
        }
        R.maps.push_back(std::move(nm));
        R.twists.push_back(std::move(nt));
        detail::prune_complex(R);
        if (R.maps.size() > maxlen) throw Error("internal: resolution exceeded the syzygy bound");
    }
    detail::prune_complex(R);
    if (R.length() > p.ring->nvars())
        throw Error("internal: minimal resolution longer than the number of variables");
    return R;
}

// ---- Betti numbers and regularity ----

struct BettiTable {
    // (homological degree, twist) -> multiplicity
    std::map<std::pair<size_t, int64_t>, int64_t> entries;
    size_t length = 0;

    int64_t total(size_t i) const {
        int64_t s = 0;
        for (auto& [k, v] : entries)
            if (k.first == i) s += v;
        return s;
    }
};

template <class C>
BettiTable betti_table(const Resolution<C>& R) {
    BettiTable b;
    b.length = R.length();
    for (size_t k = 0; k < R.twists.size(); ++k)
        for (auto& t : R.twists[k]) ++b.entries[{k, t.d1}];
    return b;
}

// max { j - i : beta_{i,j} != 0 }; -inf for the zero module.
template <class C>
ExtInt regularity_betti(const Resolution<C>& R) {
    ExtInt reg = ExtInt::neg_inf();
    for (size_t k = 0; k < R.twists.size(); ++k)
        for (auto& t : R.twists[k]) reg = max(reg, ExtInt(t.d1 - static_cast<int64_t>(k)));
    return reg;
}

template <class C>
ExtInt regularity_betti(const Presentation<C>& p) {
    return regularity_betti(free_resolution(p));
}

// Composite d_k . d_{k+1} = 0, exactly.
template <class C>
bool complex_composites_vanish(const Resolution<C>& R) {
    for (size_t k = 0; k + 1 < R.maps.size(); ++k) {
        const auto& A = R.maps[k];      // F_{k+1} -> F_k
        const auto& B = R.maps[k + 1];  // F_{k+2} -> F_{k+1}
        for (size_t c = 0; c < B.size(); ++c)
            for (size_t r = 0; r < R.twists[k].size(); ++r) {
                Poly<C> s = Poly<C>::zero(R.ring);
                for (size_t m = 0; m < A.size(); ++m) s = s + A[m][r] * B[c][m];
                if (!s.is_zero()) return false;
            }
    }
    return true;
}

}  // namespace regpow

#endif
