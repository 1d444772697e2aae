#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>

#include "regpow/corpus.hpp"
#include "regpow/gb_cache.hpp"
#include "regpow/jobspec.hpp"
#include "regpow/report.hpp"

using namespace regpow;

namespace {

struct CommonArgs {
    std::string jobfile;
    int64_t qmax_override = 0;
    int threads = 1;
    std::string out_dir = ".";
    std::string format = "json";
    bool no_cache = false;
    int64_t pmin = 0, pmax = 2;
};

void add_common(CLI::App* cmd, CommonArgs& a, bool needs_job) {
    auto* opt = cmd->add_option("-i,--input", a.jobfile, "job file");
    if (needs_job) opt->required();
    cmd->add_option("--qmax", a.qmax_override, "override qmax from the job file");
    cmd->add_option("--threads", a.threads, "worker threads for independent rows/jobs");
    cmd->add_option("--out", a.out_dir, "output directory for artifacts");
    cmd->add_option("--format", a.format, "json|csv|both")
        ->check(CLI::IsMember({"json", "csv", "both"}));
    cmd->add_flag("--no-cache", a.no_cache, "disable the Groebner basis cache");
}

void setup_cache(const CommonArgs& a) {
    if (a.no_cache) {
        gb_cache::disable();
        return;
    }
    const char* env = std::getenv("REGPOW_CACHE_DIR");
    gb_cache::set_directory(env && *env ? env : ".regpow-cache");
}

void write_artifact(const CommonArgs& a, const std::string& stem, const Report& r) {
    std::filesystem::create_directories(a.out_dir);
    if (a.format == "json" || a.format == "both") {
        std::ofstream out(a.out_dir + "/" + stem + ".json");
        out << report_to_json(r);
        std::cout << a.out_dir + "/" + stem + ".json" << "\n";
    }
    if (a.format == "csv" || a.format == "both") {
        std::ofstream out(a.out_dir + "/" + stem + ".csv");
        out << power_table_to_csv(r);
        std::cout << a.out_dir + "/" + stem + ".csv" << "\n";
    }
}

std::string job_stem(const std::string& path) {
    return std::filesystem::path(path).stem().string();
}

template <class C>
Report run_command(const std::string& command, const JobSpec& job, const CommonArgs& args) {
    auto ring = Ring::make(job.field, job.vars, {});
    std::vector<Poly<C>> gens;
    for (auto& g : job.gens) gens.push_back(parse_poly<C>(g, ring));
    Ideal<C> I(ring, gens);

    AnalyzeOptions opt;
    opt.qmax = args.qmax_override > 0 ? args.qmax_override : job.qmax;
    opt.window = job.window;
    opt.fat_points = job.fat_points;
    opt.reg_phi_star = job.reg_phi_star;
    opt.threads = args.threads;
    opt.run_checks = (command == "verify");

    auto A = analyze(I, opt);
    Report r = build_report(A, opt);

    if (command == "strand") {
        for (int64_t p = args.pmin; p <= args.pmax; ++p) {
            Report::StrandInfo s;
            s.p = p;
            s.zero = minimal_presentation(strand_x(A.rees, p).pres).is_zero();
            s.a_star = strand_a_star(A.rees, p).str();
            s.sheaf_reg = strand_sheaf_reg(A.rees, p).str();
            r.strands.push_back(s);
        }
    }
    if (command == "cohomology") {
        XtCertificates cert{A.cert.value, A.cert.exact, A.fit.a_star_phi, true};
        int64_t p0 = A.fit.a_star_phi.finite() ? A.fit.a_star_phi.value() + 1 : 0;
        for (int64_t p = p0; p < p0 + 3; ++p)
            for (int64_t q = 1; q <= std::min<int64_t>(4, opt.qmax); ++q) {
                if (!(ExtInt(q) > A.cert.value)) continue;
                Report::GridEntry e;
                e.p = p;
                e.q = q;
                e.route = "both";
                e.h = cohomology_Xtilde(A.rees, p, q, XtRoute::both, cert);
                r.cohomology_grid.push_back(e);
            }
        // diagnostic table of x-support local cohomology pieces at p = a*_phi
        if (A.fit.a_star_phi.finite()) {
            int64_t pd = A.fit.a_star_phi.value();
            for (size_t i = 0; i <= ring->nvars(); ++i) {
                Report::GridEntry e;
                e.p = pd;
                e.q = -1;  // marks the diagnostic rows
                e.route = "x_pieces_h" + std::to_string(i);
                for (auto& [q, dim] : x_local_cohomology_pieces(A.rees, pd, 0, opt.qmax, i))
                    e.h.push_back(dim);
                r.cohomology_grid.push_back(e);
            }
        }
    }
    return r;
}

int dispatch(const std::string& command, const CommonArgs& args) {
    JobSpec job = load_jobspec(args.jobfile);
    BudgetScope scope(job.budget);
    Report r = job.field.kind == FieldSpec::Kind::rationals
                   ? run_command<Rat>(command, job, args)
                   : run_command<Fp>(command, job, args);
    write_artifact(args, job_stem(args.jobfile) + "." + command, r);
    auto st = gb_cache::stats();
    std::cerr << "cache: " << st.hits << " hits, " << st.misses << " misses\n";
    return 0;
}

int run_corpus_command(const CommonArgs& args) {
    auto outcomes = run_corpus(args.threads);
    bool all_pass = true;
    std::filesystem::create_directories(args.out_dir);
    for (auto& o : outcomes) {
        write_artifact(args, "corpus-" + o.name, o.report);
        if (o.pass) {
            std::cout << "corpus " << o.name << ": PASS\n";
        } else {
            all_pass = false;
            std::cout << "corpus " << o.name << ": MISMATCH\n";
            for (auto& m : o.mismatches) std::cout << "  " << m << "\n";
        }
    }
    return all_pass ? 0 : 3;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"regpow: exact a-invariants and regularity of powers of equigenerated ideals"};
    app.require_subcommand(1);

    std::map<std::string, CommonArgs> cargs;
    for (const char* name : {"powers", "rees", "strand", "cohomology", "bounds", "verify"}) {
        auto* cmd = app.add_subcommand(name, "");
        add_common(cmd, cargs[name], true);
        if (std::string(name) == "strand") {
            cmd->add_option("--pmin", cargs[name].pmin, "lowest strand index");
            cmd->add_option("--pmax", cargs[name].pmax, "highest strand index");
        }
    }
    {
        auto* cmd = app.add_subcommand("corpus", "run the built-in corpus against its goldens");
        add_common(cmd, cargs["corpus"], false);
    }

    CLI11_PARSE(app, argc, argv);
    std::string command = app.get_subcommands()[0]->get_name();
    const CommonArgs& args = cargs[command];

    try {
        setup_cache(args);
        if (command == "corpus") return run_corpus_command(args);
        return dispatch(command, args);
    } catch (const BudgetError& e) {
        std::cerr << "regpow: " << e.what() << "\n";
        return 2;
    } catch (const Error& e) {
        std::cerr << "regpow: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "regpow: " << e.what() << "\n";
        return 1;
    }
}
