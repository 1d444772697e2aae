#ifndef REGPOW_REPORT_HPP
#define REGPOW_REPORT_HPP

#include <optional>
#include <string>
#include <vector>

#include "regpow/pipeline.hpp"

namespace regpow {

// Plain serializable view of an analysis. JSON keys are stable; reports are
// byte-identical across runs with the same inputs and budgets, so nothing
// time- or cache-dependent belongs here.
struct Report {
    struct Meta {
        std::string tool = "regpow";
        std::string format_version = "1";
        std::string field;
        std::vector<std::string> vars;
        std::vector<std::string> gens;
        int64_t d = 0;
        int64_t qmax = 0;
        int64_t window = 0;
        bool fat_points = false;
        std::optional<int64_t> reg_phi_star;
        int64_t budget_degree = 0;
        uint64_t budget_size = 0;
        double budget_seconds = 0;
        bool m_primary = false;
    } meta;

    struct Row {
        int64_t q = 0;
        std::vector<std::string> a_list;
        std::string a_star, reg, defect;
        bool gen_degree_ok = false;
    };
    std::vector<Row> power_table;
    bool truncated = false;
    std::string truncation_reason;

    struct Fit {
        int64_t d = 0;
        std::string a_star_phi, reg_phi;
        int64_t stab_a = 0, stab_reg = 0;
        int64_t window = 0;
        bool confirmed = false;
    };
    std::optional<Fit> fit;

    struct Cert {
        std::string kind;
        std::string value;
        bool exact = false;
        std::string provenance;
    };
    std::vector<Cert> certificates;

    struct Ingredient {
        std::string value;
        std::string status;
    };
    struct Thresholds {
        Ingredient a_star_pi, strand_a_next, strand_reg_at, reg_phi_star;
        std::string threshold1, threshold2;
        bool threshold2_complete = false;
        std::string stab_bound_theorem;
        bool theorem_complete = false;
        std::string stab_bound_defect;
        bool defect_route_valid = false;
        std::optional<int64_t> assembled_stab_bound;
        bool assembled_exact = false;
        std::optional<int64_t> empirical_stab_a;
    };
    std::optional<Thresholds> thresholds;

    struct Check {
        std::string name, status, detail;
    };
    std::vector<Check> checks;

    // command-specific extras
    std::vector<std::string> rees_defining_ideal;
    std::vector<std::string> fiber_ideal_gens;
    struct StrandInfo {
        int64_t p = 0;
        bool zero = false;
        std::string a_star, sheaf_reg;
    };
    std::vector<StrandInfo> strands;
    struct GridEntry {
        int64_t p = 0, q = 0;
        std::string route;
        std::vector<int64_t> h;
    };
    std::vector<GridEntry> cohomology_grid;
};

std::string report_to_json(const Report& r);
std::string power_table_to_csv(const Report& r);

template <class C>
Report build_report(const Analysis<C>& A, const AnalyzeOptions& opt) {
    Report r;
    r.meta.field = A.ideal.ring->field().str();
    r.meta.vars = A.ideal.ring->vars();
    for (auto& g : A.ideal.gens) r.meta.gens.push_back(g.render());
    r.meta.d = A.d;
    r.meta.qmax = opt.qmax;
    r.meta.window = opt.window;
    r.meta.fat_points = opt.fat_points;
    r.meta.reg_phi_star = opt.reg_phi_star;
    r.meta.budget_degree = current_budget().max_degree;
    r.meta.budget_size = current_budget().max_basis;
    r.meta.budget_seconds = current_budget().max_seconds;
    r.meta.m_primary = A.m_primary;

    for (auto& row : A.table.rows) {
        Report::Row o;
        o.q = row.q;
        for (auto& a : row.a) o.a_list.push_back(a.str());
        o.a_star = row.a_star.str();
        o.reg = row.reg.str();
        o.defect = row.defect_a.str();
        o.gen_degree_ok = row.gen_degree_ok;
        r.power_table.push_back(std::move(o));
    }
    r.truncated = A.table.truncated;
    r.truncation_reason = A.table.truncation_reason;

    Report::Fit f;
    f.d = A.fit.d;
    f.a_star_phi = A.fit.a_star_phi.str();
    f.reg_phi = A.fit.reg_phi.str();
    f.stab_a = A.fit.stab_a;
    f.stab_reg = A.fit.stab_reg;
    f.window = A.fit.window;
    f.confirmed = A.fit.confirmed_a && A.fit.confirmed_reg;
    r.fit = f;

    r.certificates.push_back({A.cert.kind_str(), A.cert.value.str(), A.cert.exact, A.cert.provenance});

    Report::Thresholds t;
    auto ing = [](const IngredientStatus& s) { return Report::Ingredient{s.value.str(), s.status}; };
    t.a_star_pi = ing(A.thresholds.a_star_pi);
    t.strand_a_next = ing(A.thresholds.strand_a_next);
    t.strand_reg_at = ing(A.thresholds.strand_reg_at);
    t.reg_phi_star = ing(A.thresholds.reg_phi_star);
    t.threshold1 = A.thresholds.threshold1.str();
    t.threshold2 = A.thresholds.threshold2.str();
    t.threshold2_complete = A.thresholds.threshold2_complete;
    t.stab_bound_theorem = A.thresholds.stab_bound_theorem.str();
    t.theorem_complete = A.thresholds.theorem_complete;
    t.stab_bound_defect = A.thresholds.stab_bound_defect.str();
    t.defect_route_valid = A.thresholds.defect_route_valid;
    t.assembled_stab_bound = A.thresholds.assembled_stab_bound;
    t.assembled_exact = A.thresholds.assembled_exact;
    t.empirical_stab_a = A.fit.confirmed_a ? std::optional<int64_t>(A.fit.stab_a) : std::nullopt;
    r.thresholds = t;

    for (auto& c : A.checks) r.checks.push_back({c.name, c.status, c.detail});

    for (auto& g : A.rees.J) r.rees_defining_ideal.push_back(g.render());
    r.fiber_ideal_gens = A.fiber_gens;
    return r;
}

}  // namespace regpow

#endif
