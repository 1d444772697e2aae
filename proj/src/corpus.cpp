#include "regpow/corpus.hpp"

#include <future>

namespace regpow {

const std::vector<CorpusEntry>& builtin_corpus() {
    static const std::vector<CorpusEntry> corpus = [] {
        std::vector<CorpusEntry> c;
        {
            CorpusEntry e;
            e.name = "monomial-d5";
            e.vars = {"x", "y"};
            e.gens = {"x^5", "x^4*y", "x*y^4", "y^5"};
            e.qmax = 5;
            e.a_star_rows = {6, 10, 14, 19, 24};
            e.reg_rows = {7, 11, 15, 20, 25};
            e.a_star_phi = -1;
            e.reg_phi = 0;
            e.stab_a = 3;
            e.stab_reg = 3;
            e.cert_kind = "MPrimary";
            e.strand_a_at_phi_plus_1 = 2;
            e.assembled_stab_bound = 3;
            c.push_back(e);
        }
        {
            CorpusEntry e;
            e.name = "monomial-d7";
            e.vars = {"x", "y"};
            e.gens = {"x^7", "x^6*y", "x^4*y^3", "x^3*y^4", "x*y^6", "y^7"};
            e.qmax = 4;
            e.reg_phi_star = 1;
            e.a_star_rows = {7, 13, 20, 27};
            e.reg_rows = {8, 14, 21, 28};
            e.a_star_phi = -1;
            e.reg_phi = 0;
            e.stab_a = 2;
            e.stab_reg = 2;
            e.cert_kind = "MPrimary";
            e.strand_a_at_phi_plus_1 = 1;
            e.assembled_stab_bound = 2;
            c.push_back(e);
        }
        {
            CorpusEntry e;
            e.name = "gorenstein-x2-xy";
            e.vars = {"x", "y"};
            e.gens = {"x^2", "x*y"};
            e.qmax = 4;
            e.a_star_rows = {1, 3, 5, 7};
            e.reg_rows = {2, 4, 6, 8};
            e.a_star_phi = -1;
            e.reg_phi = 0;
            e.stab_a = 1;
            e.stab_reg = 1;
            e.cert_kind = "GorensteinRees";
            e.strand_a_at_phi_plus_1 = -2;  // a*(k[T0,T1])
            c.push_back(e);
        }
        {
            CorpusEntry e;
            e.name = "koszul-m";
            e.vars = {"x", "y"};
            e.gens = {"x", "y"};
            e.qmax = 4;
            e.a_star_rows = {0, 1, 2, 3};
            e.reg_rows = {1, 2, 3, 4};
            e.a_star_phi = -1;
            e.reg_phi = 0;
            e.stab_a = 1;
            e.stab_reg = 1;
            e.cert_kind = "MPrimary";
            e.strand_a_at_phi_plus_1 = -2;
            e.assembled_stab_bound = 1;
            c.push_back(e);
        }
        return c;
    }();
    return corpus;
}

namespace {

CorpusOutcome run_entry(const CorpusEntry& e) {
    CorpusOutcome out;
    out.name = e.name;
    auto ring = Ring::make(FieldSpec::rationals(), e.vars, {});
    std::vector<PolyQ> gens;
    for (auto& g : e.gens) gens.push_back(parse_poly<Rat>(g, ring));
    Ideal<Rat> I(ring, gens);
    AnalyzeOptions opt;
    opt.qmax = e.qmax;
    opt.reg_phi_star = e.reg_phi_star;
    opt.run_checks = true;
    auto A = analyze(I, opt);
    out.report = build_report(A, opt);

    auto expect = [&](bool ok, const std::string& what, const std::string& got,
                      const std::string& want) {
        if (!ok) out.mismatches.push_back(what + ": computed " + got + ", golden " + want);
    };
    for (size_t i = 0; i < e.a_star_rows.size(); ++i) {
        bool ok = i < A.table.rows.size() && A.table.rows[i].a_star == ExtInt(e.a_star_rows[i]);
        expect(ok, "a*(I^" + std::to_string(i + 1) + ")",
               i < A.table.rows.size() ? A.table.rows[i].a_star.str() : "missing",
               std::to_string(e.a_star_rows[i]));
    }
    for (size_t i = 0; i < e.reg_rows.size(); ++i) {
        bool ok = i < A.table.rows.size() && A.table.rows[i].reg == ExtInt(e.reg_rows[i]);
        expect(ok, "reg(I^" + std::to_string(i + 1) + ")",
               i < A.table.rows.size() ? A.table.rows[i].reg.str() : "missing",
               std::to_string(e.reg_rows[i]));
    }
    expect(A.fit.a_star_phi == ExtInt(e.a_star_phi), "a*_phi", A.fit.a_star_phi.str(),
           std::to_string(e.a_star_phi));
    expect(A.fit.reg_phi == ExtInt(e.reg_phi), "reg_phi", A.fit.reg_phi.str(),
           std::to_string(e.reg_phi));
    expect(A.fit.stab_a == e.stab_a, "stab_a", std::to_string(A.fit.stab_a),
           std::to_string(e.stab_a));
    expect(A.fit.stab_reg == e.stab_reg, "stab_reg", std::to_string(A.fit.stab_reg),
           std::to_string(e.stab_reg));
    expect(A.cert.kind_str() == e.cert_kind, "certificate", A.cert.kind_str(), e.cert_kind);
    expect(A.thresholds.strand_a_next.value == ExtInt(e.strand_a_at_phi_plus_1),
           "a*(strand at a*_phi+1)", A.thresholds.strand_a_next.value.str(),
           std::to_string(e.strand_a_at_phi_plus_1));
    if (e.assembled_stab_bound) {
        bool ok = A.thresholds.assembled_stab_bound &&
                  *A.thresholds.assembled_stab_bound == *e.assembled_stab_bound;
        expect(ok, "assembled stab bound",
               A.thresholds.assembled_stab_bound
                   ? std::to_string(*A.thresholds.assembled_stab_bound)
                   : "none",
               std::to_string(*e.assembled_stab_bound));
    }
    out.pass = out.mismatches.empty();
    return out;
}

}  // namespace

std::vector<CorpusOutcome> run_corpus(int threads) {
    const auto& corpus = builtin_corpus();
    std::vector<CorpusOutcome> out(corpus.size());
    if (threads <= 1) {
        for (size_t i = 0; i < corpus.size(); ++i) out[i] = run_entry(corpus[i]);
        return out;
    }
    Budget budget = current_budget();
    std::vector<std::future<CorpusOutcome>> futs;
    for (size_t i = 0; i < corpus.size(); ++i)
        futs.push_back(std::async(std::launch::async, [&, i] {
            BudgetScope scope(budget);
            return run_entry(corpus[i]);
        }));
    for (size_t i = 0; i < corpus.size(); ++i) out[i] = futs[i].get();
    return out;
}

}  // namespace regpow
