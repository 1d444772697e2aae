#ifndef REGPOW_CORPUS_HPP
#define REGPOW_CORPUS_HPP

#include <string>
#include <vector>

#include "regpow/report.hpp"

namespace regpow {

// Built-in example ideals with their published invariants frozen as goldens.
struct CorpusEntry {
    std::string name;
    std::vector<std::string> vars;
    std::vector<std::string> gens;
    int64_t qmax = 4;
    std::optional<int64_t> reg_phi_star;

    // goldens
    std::vector<int64_t> a_star_rows;
    std::vector<int64_t> reg_rows;
    int64_t a_star_phi = 0;
    int64_t reg_phi = 0;
    int64_t stab_a = 0;
    int64_t stab_reg = 0;
    std::string cert_kind;
    int64_t strand_a_at_phi_plus_1 = 0;  // a*(R_(a*_phi+1,*))
    std::optional<int64_t> assembled_stab_bound;
};

const std::vector<CorpusEntry>& builtin_corpus();

struct CorpusOutcome {
    std::string name;
    bool pass = false;
    std::vector<std::string> mismatches;
    Report report;
};

// Runs every corpus entry (optionally on a worker pool) and diffs against
// the goldens. Deterministic assembly order.
std::vector<CorpusOutcome> run_corpus(int threads);

}  // namespace regpow

#endif
