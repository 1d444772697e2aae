#ifndef REGPOW_PIPELINE_HPP
#define REGPOW_PIPELINE_HPP

#include "regpow/invariants.hpp"

namespace regpow {

struct AnalyzeOptions {
    int64_t qmax = 4;
    int64_t window = 3;
    bool fat_points = false;
    std::optional<int64_t> reg_phi_star;
    int threads = 1;
    bool run_checks = true;
    int64_t grid_p_span = 3;  // two-route grid: p in a*_phi+1 .. a*_phi+span
    int64_t grid_q_max = 4;   // and q in 1 .. min(grid_q_max, qmax)
};

// Everything the reports and the verification ledger are built from.
template <class C>
struct Analysis {
    Ideal<C> ideal;
    int64_t d = 0;
    bool m_primary = false;
    PowerTable table;
    AsymptoticFit fit;
    ReesPresentation<C> rees;
    std::vector<std::string> fiber_gens;
    Certificate cert;
    ThresholdReport thresholds;
    std::vector<CheckResult> checks;
};

namespace pipe_detail {

inline std::string vec_str(const std::vector<int64_t>& v) {
    std::string s = "[";
    for (size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
    return s + "]";
}

}  // namespace pipe_detail

// The verification ledger: each theorem-facing claim checked on the computed
// data, reported pass/fail, or skipped when its certificate is missing.
template <class C>
std::vector<CheckResult> verify_theorems(const Analysis<C>& A, const AnalyzeOptions& opt) {
    std::vector<CheckResult> out;
    const int64_t d = A.d;
    const ExtInt aphi = A.fit.a_star_phi;

    {  // (a) upper bound beyond threshold1
        CheckResult c{"a_star_upper_bound", "pass", ""};
        if (!A.fit.confirmed_a) {
            c.status = "skipped";
            c.detail = "stabilization window unconfirmed";
        } else {
            for (auto& row : A.table.rows) {
                if (!(ExtInt(row.q) > A.thresholds.threshold1)) continue;
                if (!(row.a_star <= aphi + d * row.q)) {
                    c.status = "fail";
                    c.detail = "q=" + std::to_string(row.q) + ": a*=" + row.a_star.str();
                }
            }
            if (c.status == "pass")
                c.detail = "a*(I^q) <= " + std::to_string(d) + "q + " + aphi.str() +
                           " for q > " + A.thresholds.threshold1.str();
        }
        out.push_back(c);
    }
    {  // (b) lower bound beyond threshold2
        CheckResult c{"a_star_lower_bound", "pass", ""};
        if (!A.thresholds.threshold2_complete) {
            c.status = "skipped";
            c.detail = "uncertified: reg^phi_* not supplied";
        } else if (!A.fit.confirmed_a) {
            c.status = "skipped";
            c.detail = "stabilization window unconfirmed";
        } else {
            for (auto& row : A.table.rows) {
                if (!(ExtInt(row.q) >= A.thresholds.threshold2)) continue;
                if (!(row.a_star >= aphi + d * row.q)) {
                    c.status = "fail";
                    c.detail = "q=" + std::to_string(row.q) + ": a*=" + row.a_star.str();
                }
            }
            if (c.status == "pass")
                c.detail = "a*(I^q) >= " + std::to_string(d) + "q + " + aphi.str() +
                           " for q >= " + A.thresholds.threshold2.str();
        }
        out.push_back(c);
    }
    {  // (c) defect monotonicity for irrelevant-primary ideals
        CheckResult c{"defect_non_increasing", "pass", ""};
        if (!A.m_primary) {
            c.status = "skipped";
            c.detail = "only asserted for irrelevant-primary ideals";
        } else {
            for (size_t i = 1; i < A.table.rows.size(); ++i)
                if (A.table.rows[i].defect_a > A.table.rows[i - 1].defect_a) {
                    c.status = "fail";
                    c.detail = "defect increases at q=" + std::to_string(A.table.rows[i].q);
                }
            if (c.status == "pass") c.detail = "defect sequence non-increasing over the table";
        }
        out.push_back(c);
    }
    {  // (d) reg = a* + 1 for irrelevant-primary ideals
        CheckResult c{"reg_equals_a_star_plus_one", "pass", ""};
        if (!A.m_primary) {
            c.status = "skipped";
            c.detail = "only asserted for irrelevant-primary ideals";
        } else {
            for (auto& row : A.table.rows)
                if (row.reg != row.a_star + 1) {
                    c.status = "fail";
                    c.detail = "q=" + std::to_string(row.q);
                }
            if (c.status == "pass") c.detail = "reg(I^q) = a*(I^q) + 1 over the table";
        }
        out.push_back(c);
    }
    {  // (e) two-route agreement on the certified grid
        CheckResult c{"two_route_agreement", "pass", ""};
        if (!aphi.finite()) {
            c.status = "skipped";
            c.detail = "no detected a*_phi";
        } else {
            XtCertificates cert{A.cert.value, A.cert.exact, aphi, true};
            int64_t checked = 0;
            const int64_t qtop = std::min<int64_t>(opt.grid_q_max, static_cast<int64_t>(A.table.rows.size()));
            for (int64_t p = aphi.value() + 1; p <= aphi.value() + opt.grid_p_span; ++p) {
                for (int64_t q = 1; q <= qtop; ++q) {
                    if (!(ExtInt(q) > A.cert.value)) continue;  // pi side uncertified
                    try {
                        cohomology_Xtilde(A.rees, p, q, XtRoute::both, cert);
                        ++checked;
                    } catch (const Error& e) {
                        c.status = "fail";
                        c.detail = e.what();
                    }
                }
            }
            if (c.status == "pass")
                c.detail = "both routes agree on " + std::to_string(checked) + " grid points";
            if (checked == 0 && c.status == "pass") {
                c.status = "skipped";
                c.detail = "no certified grid points";
            }
        }
        out.push_back(c);
    }
    {  // (f) Gorenstein nonvanishing through the phi side
        CheckResult c{"gorenstein_nonvanishing", "pass", ""};
        if (A.cert.kind != Certificate::Kind::GorensteinRees) {
            c.status = "skipped";
            c.detail = "Rees ring not certified Gorenstein";
        } else if (!aphi.finite()) {
            c.status = "skipped";
            c.detail = "no detected a*_phi";
        } else {
            const size_t hindex = A.rees.nx - 1;  // dim of the base projective space
            std::vector<int64_t> values;
            for (int64_t qp = 0; qp <= 5; ++qp) {
                auto [p, q] = twist_convert(d, -1, qp);
                if (!(ExtInt(p) > aphi)) {
                    c.status = "skipped";
                    c.detail = "phi route uncertified at q'=" + std::to_string(qp);
                    break;
                }
                XtCertificates cert{A.cert.value, A.cert.exact, aphi, true};
                auto h = cohomology_Xtilde(A.rees, p, q, XtRoute::phi_side, cert);
                int64_t val = hindex < h.size() ? h[hindex] : 0;
                values.push_back(val);
                if (val == 0) c.status = "fail";
            }
            if (c.status != "skipped")
                c.detail = "h^" + std::to_string(hindex) + "(Xtilde, O(q'+d, -1)) for q'=0..5: " +
                           pipe_detail::vec_str(values);
        }
        out.push_back(c);
    }
    return out;
}

template <class C>
Analysis<C> analyze(const Ideal<C>& I, const AnalyzeOptions& opt) {
    Analysis<C> A;
    A.ideal = I;
    if (I.gens.empty()) throw Error("empty generator list");
    for (auto& g : I.gens)
        if (!g.is_homogeneous()) throw Error("generators must be homogeneous");
    A.d = I.gens[0].degree().value();
    for (auto& g : I.gens)
        if (g.degree().value() != A.d) throw Error("generators are not equigenerated");
    A.m_primary = is_m_primary(I);
    A.table = power_invariants(I, opt.qmax, A.d, opt.threads);
    if (A.table.truncated && static_cast<int64_t>(A.table.rows.size()) < opt.window + 1)
        throw BudgetError("degree", "power table truncated before the stabilization window: " +
                                        A.table.truncation_reason);
    A.fit = detect_stabilization(A.table, opt.window);
    A.rees = rees_presentation(I);
    for (auto& g : fiber_ideal(A.rees).gens) A.fiber_gens.push_back(g.render());
    A.cert = a_star_pi_certificate(I, A.rees, opt.fat_points);
    A.thresholds = theorem_bounds(A.rees, A.fit, A.cert, A.m_primary, opt.reg_phi_star);
    if (opt.run_checks) A.checks = verify_theorems(A, opt);
    return A;
}

}  // namespace regpow

#endif
