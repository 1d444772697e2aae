#ifndef REGPOW_INVARIANTS_HPP
#define REGPOW_INVARIANTS_HPP

#include <future>
#include <optional>

#include "regpow/cohomsheaf.hpp"

namespace regpow {

// ---- per-power invariants ----

struct PowerRow {
    int64_t q = 0;
    bool gen_degree_ok = false;       // all minimal generators in degree d*q
    std::vector<ExtInt> a;            // a^i(I^q), i = 0..N
    ExtInt a_star, reg;
    ExtInt defect_a;                  // a*(I^q) - d q
    ExtInt defect_reg;                // reg(I^q) - d q
};

struct PowerTable {
    int64_t d = 0;
    std::vector<PowerRow> rows;  // q = 1..qmax
    bool truncated = false;
    std::string truncation_reason;
};

template <class C>
PowerRow power_row(const Ideal<C>& I, int64_t d, int64_t q) {
    PowerRow row;
    row.q = q;
    Ideal<C> P = ideal_power(I, static_cast<uint32_t>(q));
    row.gen_degree_ok = true;
    for (auto& g : P.gens)
        if (g.degree() != ExtInt(d * q)) row.gen_degree_ok = false;
    LocalCohomology<C> lc(presentation_of_ideal(P));
    row.a = lc.a_all();
    row.a_star = lc.a_star();
    row.reg = lc.reg();
    row.defect_a = row.a_star + (-d * q);
    row.defect_reg = row.reg + (-d * q);
    return row;
}

// Exact a-invariants and regularity of I^q for q = 1..qmax. On a budget
// failure the table is returned truncated with a marker. Rows are
// independent; with threads > 1 they are computed concurrently.
template <class C>
PowerTable power_invariants(const Ideal<C>& I, int64_t qmax, int64_t d, int threads = 1) {
    if (qmax < 1) throw Error("qmax must be at least 1");
    PowerTable t;
    t.d = d;
    if (threads <= 1) {
        for (int64_t q = 1; q <= qmax; ++q) {
            try {
                t.rows.push_back(power_row(I, d, q));
            } catch (const BudgetError& e) {
                t.truncated = true;
                t.truncation_reason = e.what();
                break;
            }
        }
        return t;
    }
    Budget budget = current_budget();
    std::vector<std::future<PowerRow>> futs;
    for (int64_t q = 1; q <= qmax; ++q)
        futs.push_back(std::async(std::launch::async, [&, q] {
            BudgetScope scope(budget);
            return power_row(I, d, q);
        }));
    for (auto& f : futs) {
        try {
            t.rows.push_back(f.get());
        } catch (const BudgetError& e) {
            t.truncated = true;
            t.truncation_reason = e.what();
            break;
        }
    }
    return t;
}

// ---- stabilization detection ----

struct AsymptoticFit {
    int64_t d = 0;                  // slope, read from the input degree
    ExtInt a_star_phi, reg_phi;     // detected constants
    int64_t stab_a = 0, stab_reg = 0;  // first index of agreement
    int64_t window = 0;             // confirmations requested
    bool confirmed_a = false, confirmed_reg = false;
};

namespace detail {
inline std::pair<int64_t, bool> first_constant_index(const std::vector<ExtInt>& defects, int64_t W) {
    const ExtInt last = defects.back();
    size_t s = defects.size();
    while (s > 0 && defects[s - 1] == last) --s;
    int64_t stab = static_cast<int64_t>(s) + 1;  // rows are 1-based in q
    int64_t confirmations = static_cast<int64_t>(defects.size()) - stab + 1;
    return {stab, confirmations >= W};
}
}  // namespace

inline AsymptoticFit detect_stabilization(const PowerTable& t, int64_t W) {
    if (static_cast<int64_t>(t.rows.size()) < W + 1)
        throw Error("power table too short for stabilization window " + std::to_string(W));
    AsymptoticFit fit;
    fit.d = t.d;
    fit.window = W;
    std::vector<ExtInt> da, dr;
    for (auto& r : t.rows) {
        da.push_back(r.defect_a);
        dr.push_back(r.defect_reg);
    }
    fit.a_star_phi = da.back();
    fit.reg_phi = dr.back();
    auto [sa, ca] = detail::first_constant_index(da, W);
    auto [sr, cr] = detail::first_constant_index(dr, W);
    fit.stab_a = sa;
    fit.stab_reg = sr;
    fit.confirmed_a = ca;
    fit.confirmed_reg = cr;
    return fit;
}

// ---- a*_pi certificates ----

struct Certificate {
    enum class Kind { MPrimary, CMRees, GorensteinRees, DeclaredFatPoints, ChartUpperBound };
    Kind kind = Kind::ChartUpperBound;
    ExtInt value;        // certified value of a*_pi, or an upper bound
    bool exact = false;  // value is exact, not only an upper bound
    std::string provenance;

    std::string kind_str() const {
        switch (kind) {
            case Kind::MPrimary: return "MPrimary";
            case Kind::CMRees: return "CMRees";
            case Kind::GorensteinRees: return "GorensteinRees";
            case Kind::DeclaredFatPoints: return "DeclaredFatPoints";
            case Kind::ChartUpperBound: return "ChartUpperBound";
        }
        return "?";
    }
};

namespace chart_detail {

// Image of g under x_drop -> 1, the remaining variables renamed through vm.
template <class C>
Poly<C> set_var_to_one(const Poly<C>& g, const RingPtr& target, const std::vector<int>& vm,
                       size_t drop) {
    std::vector<Term<C>> ts;
    ts.reserve(g.nterms());
    for (auto& t : g.terms()) {
        std::vector<int32_t> e(target->nvars(), 0);
        for (size_t i = 0; i < t.m.e.size(); ++i) {
            if (i == drop || t.m.e[i] == 0) continue;
            e[vm[i]] += t.m.e[i];
        }
        ts.push_back({t.c, target->mono(std::move(e))});
    }
    return Poly<C>::from_terms(target, std::move(ts));
}

}  // namespace chart_detail

// Upper bound for a* of the Rees module on the charts x_v = 1: resolve the
// dehomogenized defining ideal over k[u][T], keep the largest T-twist seen
// across all resolution steps, and subtract the number of T-variables.
// These resolutions carry no usable grading for minimality, so the length
// is capped by the variable count and overruns surface as budget failures.
template <class C>
ExtInt chart_a_star_upper_bound(const ReesPresentation<C>& R) {
    ExtInt best = ExtInt::neg_inf();
    for (size_t v = 0; v < R.nx; ++v) {
        std::vector<std::string> vars;
        for (size_t u = 0; u < R.nx; ++u)
            if (u != v) vars.push_back(R.base->var(u));
        for (size_t j = 0; j < R.nT; ++j) vars.push_back(detail::tvar_name(j));
        RingPtr chart = Ring::make(R.base->field(), vars, {});
        std::vector<int> vm(R.ambient->nvars(), -1);
        {
            size_t pos = 0;
            for (size_t u = 0; u < R.nx; ++u)
                if (u != v) vm[u] = static_cast<int>(pos++);
            for (size_t j = 0; j < R.nT; ++j) vm[R.nx + j] = static_cast<int>(R.nx - 1 + j);
        }
        // T-degree of a chart polynomial: max over terms of the T-exponent sum
        auto tdeg = [&](const Poly<C>& p) {
            int64_t m = 0;
            for (auto& t : p.terms()) {
                int64_t s = 0;
                for (size_t j = 0; j < R.nT; ++j) s += t.m.e[R.nx - 1 + j];
                m = std::max(m, s);
            }
            return m;
        };

        std::vector<std::vector<Poly<C>>> cur;
        std::vector<int64_t> col_tw;
        for (auto& g : R.J) {
            Poly<C> h = chart_detail::set_var_to_one(g, chart, vm, v);
            if (h.is_zero()) continue;
            cur.push_back({h});
            col_tw.push_back(tdeg(h));
        }
        ExtInt maxtw(0);  // the cyclic generator sits in T-degree 0
        size_t steps = 0;
        while (!cur.empty()) {
            for (auto& t : col_tw) maxtw = max(maxtw, ExtInt(t));
            if (++steps > chart->nvars() + 1)
                throw BudgetError("length", "chart resolution exceeded the variable bound");
            std::vector<ModVec<C>> cols;
            for (auto& cl : cur) cols.push_back(ModVec<C>::from_column(chart, cl));
            auto Z = module_syzygies<C>(chart, cols);
            if (Z.empty()) break;
            std::vector<std::vector<Poly<C>>> nxt;
            std::vector<int64_t> ntw;
            for (auto& z : Z) {
                auto col = z.to_column(cur.size());
                int64_t t = 0;
                for (size_t idx = 0; idx < col.size(); ++idx)
                    if (!col[idx].is_zero()) t = std::max(t, tdeg(col[idx]) + col_tw[idx]);
                nxt.push_back(std::move(col));
                ntw.push_back(t);
            }
            cur = std::move(nxt);
            col_tw = std::move(ntw);
        }
        best = max(best, maxtw + (-static_cast<int64_t>(R.nT)));
    }
    // a*_pi >= -1 always; an upper bound below that is clamped
    if (best < ExtInt(-1)) best = ExtInt(-1);
    return best;
}

// Certificate search in the documented order: irrelevant-primary test, CM
// (or Gorenstein) Rees ring, a user-declared fat-point scheme, then the
// chart upper bound.
template <class C>
Certificate a_star_pi_certificate(const Ideal<C>& I, const ReesPresentation<C>& R,
                                  bool fat_points_declared) {
    Certificate c;
    if (is_m_primary(I)) {
        c.kind = Certificate::Kind::MPrimary;
        c.value = ExtInt(-1);
        c.exact = true;
        c.provenance = "dim S/I = 0: blowup charts away from V(I) are polynomial rings";
        return c;
    }
    {
        auto M = rees_ring_module(R);
        DepthInfo d = depth_and_cm(M);
        if (d.cohen_macaulay) {
            c.kind = d.gorenstein ? Certificate::Kind::GorensteinRees : Certificate::Kind::CMRees;
            c.value = ExtInt(-1);
            c.exact = true;
            c.provenance = d.gorenstein ? "Rees ring is Gorenstein (local cohomology localizes)"
                                        : "Rees ring is Cohen-Macaulay (local cohomology localizes)";
            return c;
        }
    }
    if (fat_points_declared) {
        c.kind = Certificate::Kind::DeclaredFatPoints;
        c.value = ExtInt(-1);
        c.exact = true;
        c.provenance = "declared fat-point scheme: local Rees rings are Veronese of CM";
        return c;
    }
    c.kind = Certificate::Kind::ChartUpperBound;
    c.value = chart_a_star_upper_bound(R);
    c.exact = false;
    c.provenance = "max resolution T-twist over affine charts minus the T-variable count";
    return c;
}

// ---- strand invariants ----

template <class C>
ExtInt strand_a_star(const ReesPresentation<C>& R, int64_t p) {
    if (p < 0) return ExtInt::neg_inf();
    return LocalCohomology<C>(strand_x(R, p).pres).a_star();
}

template <class C>
ExtInt strand_sheaf_reg(const ReesPresentation<C>& R, int64_t p) {
    if (p < 0) return ExtInt::neg_inf();
    auto S = strand_x(R, p).pres;
    if (minimal_presentation(S).is_zero()) return ExtInt::neg_inf();
    return SheafCohomology<C>(S).sheaf_regularity();
}

// ---- theorem thresholds ----

struct IngredientStatus {
    ExtInt value;
    std::string status;  // "exact", "upper-bound", "missing", "supplied"
};

struct ThresholdReport {
    IngredientStatus a_star_pi;      // from the certificate
    IngredientStatus strand_a_next;  // a*(R_(a*_phi+1,*))
    IngredientStatus strand_reg_at;  // reg of the sheaf of R_(a*_phi,*)
    IngredientStatus reg_phi_star;   // supplied or missing

    ExtInt threshold1;  // a*(I^q) <= dq + a*_phi for q > threshold1
    ExtInt threshold2;  // a*(I^q) >= dq + a*_phi for q >= threshold2 (needs all ingredients)
    bool threshold2_complete = false;

    ExtInt stab_bound_theorem;  // final display of the main bound
    bool theorem_complete = false;
    ExtInt stab_bound_defect;  // threshold1 + 1, valid for non-increasing defects
    bool defect_route_valid = false;

    std::optional<int64_t> assembled_stab_bound;  // min over valid routes, clamped to >= 1
    bool assembled_exact = false;
};

template <class C>
ThresholdReport theorem_bounds(const ReesPresentation<C>& R, const AsymptoticFit& fit,
                               const Certificate& cert, bool m_primary,
                               std::optional<int64_t> supplied_reg_phi_star) {
    if (!fit.a_star_phi.finite()) throw Error("missing a*_phi: stabilization constant not detected");
    const int64_t aphi = fit.a_star_phi.value();

    ThresholdReport r;
    r.a_star_pi = {cert.value, cert.exact ? "exact" : "upper-bound"};
    r.strand_a_next = {strand_a_star(R, aphi + 1), "exact"};
    r.strand_reg_at = {strand_sheaf_reg(R, aphi), "exact"};
    r.reg_phi_star = supplied_reg_phi_star
                         ? IngredientStatus{ExtInt(*supplied_reg_phi_star), "supplied"}
                         : IngredientStatus{ExtInt::neg_inf(), "missing"};

    r.threshold1 = max(cert.value, r.strand_a_next.value);
    r.threshold2 = max(cert.value + 1, r.strand_reg_at.value);
    if (supplied_reg_phi_star) r.threshold2 = max(r.threshold2, ExtInt(*supplied_reg_phi_star));
    r.threshold2_complete = supplied_reg_phi_star.has_value();

    r.stab_bound_theorem = max(max(cert.value + 1, r.strand_a_next.value + 1), r.strand_reg_at.value);
    if (supplied_reg_phi_star) r.stab_bound_theorem = max(r.stab_bound_theorem, ExtInt(*supplied_reg_phi_star));
    r.theorem_complete = supplied_reg_phi_star.has_value();

    r.stab_bound_defect = r.threshold1 + 1;
    r.defect_route_valid = m_primary;

    // assembled bound: the best certified route, clamped to the power range
    std::optional<int64_t> best;
    bool exact = cert.exact;
    if (r.theorem_complete && r.stab_bound_theorem.finite())
        best = std::max<int64_t>(1, r.stab_bound_theorem.value());
    if (r.defect_route_valid && r.stab_bound_defect.finite()) {
        int64_t v = std::max<int64_t>(1, r.stab_bound_defect.value());
        best = best ? std::min(*best, v) : v;
    }
    r.assembled_stab_bound = best;
    r.assembled_exact = best && exact;
    return r;
}

// ---- verification ledger ----

struct CheckResult {
    std::string name;
    std::string status;  // "pass", "fail", "skipped"
    std::string detail;
};

}  // namespace regpow

#endif
