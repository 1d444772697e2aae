#include "regpow/gb_cache.hpp"

#include <openssl/evp.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <mutex>
#include <sstream>
#include <unordered_map>

namespace regpow {

std::string sha256_hex(const std::string& data) {
    unsigned char md[EVP_MAX_MD_SIZE];
    unsigned int len = 0;
    EVP_Digest(data.data(), data.size(), md, &len, EVP_sha256(), nullptr);
    static const char* hex = "0123456789abcdef";
    std::string out;
    out.reserve(2 * len);
    for (unsigned int i = 0; i < len; ++i) {
        out += hex[md[i] >> 4];
        out += hex[md[i] & 0xf];
    }
    return out;
}

namespace gb_cache {

namespace {

constexpr const char* kFormatHeader = "regpow-gb-cache v1";

struct State {
    std::mutex mu;
    std::unordered_map<std::string, std::vector<std::string>> mem;
    std::string dir;
    bool enabled = true;
    Stats st;
};

State& state() {
    static State s;
    return s;
}

std::string entry_path(const State& s, const std::string& key) {
    return s.dir + "/" + key + ".gb";
}

std::optional<std::vector<std::string>> disk_lookup(State& s, const std::string& key) {
    if (s.dir.empty()) return std::nullopt;
    std::ifstream in(entry_path(s, key));
    if (!in) return std::nullopt;
    std::string header;
    if (!std::getline(in, header) || header != kFormatHeader) {
        std::cerr << "regpow: warning: ignoring corrupt cache entry " << key << " (bad header)\n";
        return std::nullopt;
    }
    std::string countline;
    if (!std::getline(in, countline)) {
        std::cerr << "regpow: warning: ignoring corrupt cache entry " << key << " (missing count)\n";
        return std::nullopt;
    }
    size_t n = 0;
    try {
        n = std::stoul(countline);
    } catch (...) {
        std::cerr << "regpow: warning: ignoring corrupt cache entry " << key << " (bad count)\n";
        return std::nullopt;
    }
    std::vector<std::string> basis;
    basis.reserve(n);
    std::string line;
    while (std::getline(in, line)) basis.push_back(line);
    if (basis.size() != n) {
        std::cerr << "regpow: warning: ignoring corrupt cache entry " << key << " (truncated)\n";
        return std::nullopt;
    }
    return basis;
}

void disk_store(State& s, const std::string& key, const std::vector<std::string>& basis) {
    if (s.dir.empty()) return;
    std::error_code ec;
    std::filesystem::create_directories(s.dir, ec);
    std::string tmp = entry_path(s, key) + ".tmp";
    {
        std::ofstream out(tmp);
        if (!out) return;
        out << kFormatHeader << "\n" << basis.size() << "\n";
        for (const auto& g : basis) out << g << "\n";
    }
    std::filesystem::rename(tmp, entry_path(s, key), ec);
}

}  // namespace

std::string make_key(const std::string& ring_desc, const std::vector<std::string>& sorted_gens) {
    std::ostringstream os;
    os << ring_desc << "\n";
    for (const auto& g : sorted_gens) os << g << "\n";
    return sha256_hex(os.str());
}

std::optional<std::vector<std::string>> lookup(const std::string& key) {
    State& s = state();
    std::lock_guard<std::mutex> lk(s.mu);
    if (!s.enabled) return std::nullopt;
    auto it = s.mem.find(key);
    if (it != s.mem.end()) {
        ++s.st.hits;
        return it->second;
    }
    if (auto d = disk_lookup(s, key)) {
        s.mem[key] = *d;
        ++s.st.hits;
        return d;
    }
    ++s.st.misses;
    return std::nullopt;
}

void store(const std::string& key, const std::vector<std::string>& basis) {
    State& s = state();
    std::lock_guard<std::mutex> lk(s.mu);
    if (!s.enabled) return;
    s.mem[key] = basis;
    disk_store(s, key, basis);
}

void set_directory(const std::string& dir) {
    State& s = state();
    std::lock_guard<std::mutex> lk(s.mu);
    s.dir = dir;
    s.enabled = true;
}

void disable() {
    State& s = state();
    std::lock_guard<std::mutex> lk(s.mu);
    s.enabled = false;
    s.dir.clear();
    s.mem.clear();
}

void reset_memory() {
    State& s = state();
    std::lock_guard<std::mutex> lk(s.mu);
    s.mem.clear();
    s.st = Stats{};
}

Stats stats() {
    State& s = state();
    std::lock_guard<std::mutex> lk(s.mu);
    return s.st;
}

}  // namespace gb_cache

}  // namespace regpow
