#ifndef REGPOW_JOBSPEC_HPP
#define REGPOW_JOBSPEC_HPP

#include <optional>
#include <string>
#include <vector>

#include "regpow/budget.hpp"
#include "regpow/field.hpp"

namespace regpow {

// Hand-editable flat key-value job description:
//   field = Q | Fp <p>
//   vars = x,y
//   gen = <polynomial>          (repeated)
//   qmax = <int>
//   window = <int>
//   fat_points = true|false
//   reg_phi_star = <int>        (optional)
//   budget_degree / budget_size / budget_seconds
// '#' starts a comment; blank lines are ignored.
struct JobSpec {
    FieldSpec field = FieldSpec::rationals();
    std::vector<std::string> vars;
    std::vector<std::string> gens;
    int64_t qmax = 4;
    int64_t window = 3;
    bool fat_points = false;
    std::optional<int64_t> reg_phi_star;
    Budget budget;
};

JobSpec parse_jobspec_text(const std::string& text);
JobSpec load_jobspec(const std::string& path);

}  // namespace regpow

#endif
