#include "regpow/jobspec.hpp"

#include <fstream>
#include <sstream>

namespace regpow {

namespace {

std::string trim(const std::string& s) {
    size_t a = s.find_first_not_of(" \t\r\n");
    if (a == std::string::npos) return "";
    size_t b = s.find_last_not_of(" \t\r\n");
    return s.substr(a, b - a + 1);
}

int64_t parse_int(const std::string& v, const std::string& key) {
    try {
        size_t pos = 0;
        int64_t x = std::stoll(v, &pos);
        if (pos != v.size()) throw std::invalid_argument(v);
        return x;
    } catch (...) {
        throw ParseError("invalid integer for '" + key + "': " + v);
    }
}

bool parse_bool(const std::string& v, const std::string& key) {
    if (v == "true") return true;
    if (v == "false") return false;
    throw ParseError("invalid boolean for '" + key + "': " + v);
}

}  // namespace

JobSpec parse_jobspec_text(const std::string& text) {
    JobSpec job;
    bool saw_field = false, saw_vars = false;
    std::istringstream in(text);
    std::string line;
    size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        auto hash = line.find('#');
        if (hash != std::string::npos) line = line.substr(0, hash);
        line = trim(line);
        if (line.empty()) continue;
        auto eq = line.find('=');
        if (eq == std::string::npos)
            throw ParseError("line " + std::to_string(lineno) + ": expected 'key = value'");
        std::string key = trim(line.substr(0, eq));
        std::string val = trim(line.substr(eq + 1));
        if (key == "field") {
            if (val == "Q") {
                job.field = FieldSpec::rationals();
            } else if (val.rfind("Fp", 0) == 0) {
                std::string p = trim(val.substr(2));
                job.field = FieldSpec::prime(static_cast<uint32_t>(parse_int(p, "field")));
            } else {
                throw ParseError("line " + std::to_string(lineno) + ": field must be Q or Fp <p>");
            }
            saw_field = true;
        } else if (key == "vars") {
            std::istringstream vs(val);
            std::string v;
            while (std::getline(vs, v, ',')) {
                v = trim(v);
                if (!v.empty()) job.vars.push_back(v);
            }
            saw_vars = true;
        } else if (key == "gen") {
            job.gens.push_back(val);
        } else if (key == "qmax") {
            job.qmax = parse_int(val, key);
        } else if (key == "window") {
            job.window = parse_int(val, key);
        } else if (key == "fat_points") {
            job.fat_points = parse_bool(val, key);
        } else if (key == "reg_phi_star") {
            job.reg_phi_star = parse_int(val, key);
        } else if (key == "budget_degree") {
            job.budget.max_degree = parse_int(val, key);
        } else if (key == "budget_size") {
            job.budget.max_basis = static_cast<size_t>(parse_int(val, key));
        } else if (key == "budget_seconds") {
            job.budget.max_seconds = std::stod(val);
        } else {
            throw ParseError("line " + std::to_string(lineno) + ": unknown key '" + key + "'");
        }
    }
    if (!saw_field) throw ParseError("job file missing 'field'");
    if (!saw_vars || job.vars.empty()) throw ParseError("job file missing 'vars'");
    if (job.gens.empty()) throw ParseError("job file has no 'gen' lines");
    if (job.qmax < 1) throw ParseError("qmax must be at least 1");
    if (job.window < 1) throw ParseError("window must be at least 1");
    return job;
}

JobSpec load_jobspec(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open job file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse_jobspec_text(ss.str());
}

}  // namespace regpow
