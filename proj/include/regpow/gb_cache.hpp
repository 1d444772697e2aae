#ifndef REGPOW_GB_CACHE_HPP
#define REGPOW_GB_CACHE_HPP

#include <optional>
#include <string>
#include <vector>

namespace regpow {

std::string sha256_hex(const std::string& data);

// Synchronized Gröbner-basis cache keyed by a SHA-256 content hash of
// (field, variables, grading, order, sorted generators). Values are the
// canonical rendered reduced basis. A persistent directory layer can be
// attached underneath the in-memory map; corrupt entries are ignored with a
// warning on stderr. Cache hits never change numeric output: the stored
// basis is exactly what the engine would recompute.
namespace gb_cache {

struct Stats {
    uint64_t hits = 0;
    uint64_t misses = 0;
};

std::string make_key(const std::string& ring_desc, const std::vector<std::string>& sorted_gens);
std::optional<std::vector<std::string>> lookup(const std::string& key);
void store(const std::string& key, const std::vector<std::string>& basis);

void set_directory(const std::string& dir);  // empty = memory only
void disable();                              // no caching at all
void reset_memory();
Stats stats();

}  // namespace gb_cache

}  // namespace regpow

#endif
