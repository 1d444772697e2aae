#include "regpow/report.hpp"

#include <json.hpp>

#include <sstream>

namespace regpow {

using ordered_json = nlohmann::ordered_json;

namespace {

ordered_json ingredient_json(const Report::Ingredient& i) {
    return ordered_json{{"value", i.value}, {"status", i.status}};
}

}  // namespace

std::string report_to_json(const Report& r) {
    ordered_json j;
    ordered_json meta;
    meta["tool"] = r.meta.tool;
    meta["format_version"] = r.meta.format_version;
    meta["field"] = r.meta.field;
    meta["vars"] = r.meta.vars;
    meta["gens"] = r.meta.gens;
    meta["d"] = r.meta.d;
    meta["qmax"] = r.meta.qmax;
    meta["window"] = r.meta.window;
    meta["fat_points"] = r.meta.fat_points;
    if (r.meta.reg_phi_star)
        meta["reg_phi_star"] = *r.meta.reg_phi_star;
    else
        meta["reg_phi_star"] = nullptr;
    meta["budget_degree"] = r.meta.budget_degree;
    meta["budget_size"] = r.meta.budget_size;
    meta["budget_seconds"] = r.meta.budget_seconds;
    meta["m_primary"] = r.meta.m_primary;
    j["meta"] = meta;

    ordered_json rows = ordered_json::array();
    for (auto& row : r.power_table) {
        ordered_json o;
        o["q"] = row.q;
        o["a_list"] = row.a_list;
        o["a_star"] = row.a_star;
        o["reg"] = row.reg;
        o["defect"] = row.defect;
        o["gen_degree_ok"] = row.gen_degree_ok;
        rows.push_back(o);
    }
    j["power_table"] = rows;
    j["truncated"] = r.truncated;
    if (r.truncated) j["truncation_reason"] = r.truncation_reason;

    if (r.fit) {
        ordered_json f;
        f["d"] = r.fit->d;
        f["a_star_phi"] = r.fit->a_star_phi;
        f["reg_phi"] = r.fit->reg_phi;
        f["stab_a"] = r.fit->stab_a;
        f["stab_reg"] = r.fit->stab_reg;
        f["window"] = r.fit->window;
        f["confirmed"] = r.fit->confirmed;
        j["fit"] = f;
    } else {
        j["fit"] = nullptr;
    }

    ordered_json certs = ordered_json::array();
    for (auto& c : r.certificates)
        certs.push_back(ordered_json{
            {"kind", c.kind}, {"value", c.value}, {"exact", c.exact}, {"provenance", c.provenance}});
    j["certificates"] = certs;

    if (r.thresholds) {
        const auto& t = *r.thresholds;
        ordered_json o;
        o["a_star_pi"] = ingredient_json(t.a_star_pi);
        o["strand_a_next"] = ingredient_json(t.strand_a_next);
        o["strand_reg_at"] = ingredient_json(t.strand_reg_at);
        o["reg_phi_star"] = ingredient_json(t.reg_phi_star);
        o["threshold1"] = t.threshold1;
        o["threshold2"] = t.threshold2;
        o["threshold2_complete"] = t.threshold2_complete;
        o["stab_bound_theorem"] = t.stab_bound_theorem;
        o["theorem_complete"] = t.theorem_complete;
        o["stab_bound_defect"] = t.stab_bound_defect;
        o["defect_route_valid"] = t.defect_route_valid;
        if (t.assembled_stab_bound)
            o["assembled_stab_bound"] = *t.assembled_stab_bound;
        else
            o["assembled_stab_bound"] = nullptr;
        o["assembled_exact"] = t.assembled_exact;
        if (t.empirical_stab_a)
            o["empirical_stab_a"] = *t.empirical_stab_a;
        else
            o["empirical_stab_a"] = nullptr;
        j["thresholds"] = o;
    } else {
        j["thresholds"] = nullptr;
    }

    ordered_json checks = ordered_json::array();
    for (auto& c : r.checks)
        checks.push_back(ordered_json{{"name", c.name}, {"status", c.status}, {"detail", c.detail}});
    j["checks"] = checks;

    if (!r.rees_defining_ideal.empty()) j["rees_defining_ideal"] = r.rees_defining_ideal;
    j["fiber_ideal"] = r.fiber_ideal_gens;

    if (!r.strands.empty()) {
        ordered_json s = ordered_json::array();
        for (auto& x : r.strands)
            s.push_back(ordered_json{
                {"p", x.p}, {"zero", x.zero}, {"a_star", x.a_star}, {"sheaf_reg", x.sheaf_reg}});
        j["strands"] = s;
    }
    if (!r.cohomology_grid.empty()) {
        ordered_json s = ordered_json::array();
        for (auto& x : r.cohomology_grid)
            s.push_back(ordered_json{{"p", x.p}, {"q", x.q}, {"route", x.route}, {"h", x.h}});
        j["cohomology"] = s;
    }
    return j.dump(2) + "\n";
}

std::string power_table_to_csv(const Report& r) {
    std::ostringstream os;
    os << "q,a_star,reg,defect,gen_degree_ok\n";
    for (auto& row : r.power_table)
        os << row.q << "," << row.a_star << "," << row.reg << "," << row.defect << ","
           << (row.gen_degree_ok ? "true" : "false") << "\n";
    return os.str();
}

}  // namespace regpow
