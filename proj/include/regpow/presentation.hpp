#ifndef REGPOW_PRESENTATION_HPP
#define REGPOW_PRESENTATION_HPP

#include <optional>
#include <vector>

#include "regpow/ideal.hpp"

namespace regpow {

// Twist of a generator or relation: weighted degree plus, in bigraded rings,
// the second grading component.
struct GDeg {
    int64_t d1 = 0;
    int64_t d2 = 0;
    GDeg() = default;
    GDeg(int64_t a, int64_t b = 0) : d1(a), d2(b) {}
    bool operator==(const GDeg& o) const { return d1 == o.d1 && d2 == o.d2; }
    GDeg operator+(const GDeg& o) const { return {d1 + o.d1, d2 + o.d2}; }
    GDeg operator-() const { return {-d1, -d2}; }
};

// Finitely generated graded module given by a free cover with twists and a
// homogeneous relation matrix whose columns generate all relations.
template <class C>
struct Presentation {
    RingPtr ring;
    std::vector<GDeg> gens;                  // generator twists
    std::vector<std::vector<Poly<C>>> rel;   // relation columns, rel[c][row]
    std::vector<GDeg> reldeg;                // column twists

    size_t ngens() const { return gens.size(); }
    size_t nrels() const { return rel.size(); }
    bool is_zero() const { return gens.empty(); }
};

template <class C>
GDeg poly_gdeg(const Poly<C>& p) {
    auto bd = p.bidegree();
    return bd ? GDeg(bd->first, bd->second) : GDeg(p.degree().finite() ? p.degree().value() : 0, 0);
}

// Checks entry homogeneity: deg(rel[c][r]) = reldeg[c] - gens[r].
template <class C>
bool presentation_consistent(const Presentation<C>& p) {
    for (size_t c = 0; c < p.rel.size(); ++c) {
        if (p.rel[c].size() != p.gens.size()) return false;
        for (size_t r = 0; r < p.gens.size(); ++r) {
            const auto& e = p.rel[c][r];
            if (e.is_zero()) continue;
            if (!e.is_homogeneous()) return false;
            GDeg d = poly_gdeg(e);
            if (d.d1 != p.reldeg[c].d1 - p.gens[r].d1) return false;
            if (p.ring->bigraded() && d.d2 != p.reldeg[c].d2 - p.gens[r].d2) return false;
        }
    }
    return true;
}

// The ideal I as a submodule of the ring: minimal generators plus their
// syzygy matrix.
template <class C>
Presentation<C> presentation_of_ideal(const Ideal<C>& I) {
    Presentation<C> p;
    p.ring = I.ring;
    std::vector<Poly<C>> gens = minimal_generators(I.ring, I.gens);
    for (auto& g : gens) p.gens.push_back(poly_gdeg(g));
    auto sz = syzygies<C>(I.ring, gens);
    for (size_t c = 0; c < sz.columns.size(); ++c) {
        p.rel.push_back(sz.columns[c]);
        // recover the full bidegree of the column from its first nonzero entry
        GDeg cd(sz.twists[c], 0);
        for (size_t r = 0; r < gens.size(); ++r)
            if (!sz.columns[c][r].is_zero()) {
                cd = poly_gdeg(sz.columns[c][r]) + p.gens[r];
                break;
            }
        p.reldeg.push_back(cd);
    }
    return p;
}

// The cyclic module ring/I.
template <class C>
Presentation<C> presentation_of_quotient(const Ideal<C>& I) {
    Presentation<C> p;
    p.ring = I.ring;
    p.gens.push_back(GDeg(0, 0));
    for (auto& g : I.gens) {
        if (!g.is_homogeneous()) throw Error("quotient presentation needs homogeneous generators");
        p.rel.push_back({g});
        p.reldeg.push_back(poly_gdeg(g));
    }
    return p;
}

// Free module with the given twists.
template <class C>
Presentation<C> presentation_free(RingPtr ring, std::vector<GDeg> twists) {
    Presentation<C> p;
    p.ring = std::move(ring);
    p.gens = std::move(twists);
    return p;
}

template <class C>
Presentation<C> shift_presentation(const Presentation<C>& p, GDeg s) {
    Presentation<C> q = p;
    for (auto& g : q.gens) g = g + s;
    for (auto& d : q.reldeg) d = d + s;
    return q;
}

// Minimal presentation: prunes unit entries (generator expressible through
// the others) until none remain, drops zero relation columns. Relies on the
// relation matrix generating the full relation module, which graded
// Nakayama turns into: a redundant generator forces a unit entry in some
// relation column.
template <class C>
Presentation<C> minimal_presentation(const Presentation<C>& input) {
    Presentation<C> p = input;
    // drop zero columns up front
    for (size_t c = p.rel.size(); c-- > 0;) {
        bool zero = true;
        for (auto& e : p.rel[c])
            if (!e.is_zero()) zero = false;
        if (zero) {
            p.rel.erase(p.rel.begin() + c);
            p.reldeg.erase(p.reldeg.begin() + c);
        }
    }
    while (true) {
        size_t ui = 0, uj = 0;
        bool found = false;
        for (size_t c = 0; c < p.rel.size() && !found; ++c)
            for (size_t r = 0; r < p.gens.size() && !found; ++r) {
                const auto& e = p.rel[c][r];
                if (!e.is_zero() && e.nterms() == 1 && e.lm().is_one()) {
                    ui = r;
                    uj = c;
                    found = true;
                }
            }
        if (!found) break;
        C u = p.rel[uj][ui].lc();
        C uinv = u.inv();
        Presentation<C> q;
        q.ring = p.ring;
        for (size_t r = 0; r < p.gens.size(); ++r)
            if (r != ui) q.gens.push_back(p.gens[r]);
        for (size_t c = 0; c < p.rel.size(); ++c) {
            if (c == uj) continue;
            std::vector<Poly<C>> col;
            col.reserve(q.gens.size());
            const Poly<C>& pivot_c = p.rel[c][ui];  // entry d[i][c]
            bool zero = true;
            for (size_t r = 0; r < p.gens.size(); ++r) {
                if (r == ui) continue;
                Poly<C> e = p.rel[c][r] - p.rel[uj][r].mul_scalar(uinv) * pivot_c;
                if (!e.is_zero()) zero = false;
                col.push_back(std::move(e));
            }
            if (!zero) {
                q.rel.push_back(std::move(col));
                q.reldeg.push_back(p.reldeg[c]);
            }
        }
        p = std::move(q);
    }
    return p;
}

}  // namespace regpow

#endif
