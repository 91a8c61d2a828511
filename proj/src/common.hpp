#pragma once

#include <cstdint>
#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

namespace kani {

// Error taxonomy shared by the whole engine. The C API and the CLI map
// these onto status codes / exit codes, so keep the set small and stable.
enum class errc {
  parse,     // malformed input text
  domain,    // precondition violated by caller-supplied data
  cap,       // configured size cap exceeded
  anomaly,   // internal cross-check failed (an invariant the engine verifies)
  internal,  // should-not-happen
};

class error : public std::runtime_error {
 public:
  error(errc c, const std::string& msg) : std::runtime_error(msg), code_(c) {}
  errc code() const { return code_; }

 private:
  errc code_;
};

[[noreturn]] inline void fail(errc c, const std::string& msg) { throw error(c, msg); }

inline void require(bool ok, errc c, const std::string& msg) {
  if (!ok) fail(c, msg);
}

// splitmix64; deterministic, seedable, good enough for randomized searches
// whose results are always verified exactly afterwards.
struct Rng {
  uint64_t s;
  explicit Rng(uint64_t seed) : s(seed + 0x9e3779b97f4a7c15ull) {}
  uint64_t next() {
    uint64_t z = (s += 0x9e3779b97f4a7c15ull);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  }
  uint32_t below(uint32_t n) { return n ? uint32_t(next() % n) : 0; }
};

// Engine-wide tunables. Defaults are deliberate; every cap produces an
// errc::cap error with the offending size in the message when exceeded.
struct Options {
  uint64_t seed = 0;
  uint32_t field_cap = 12;     // max splitting-field degree searched
  uint32_t group_cap = 2000;   // max order for constructed groups
  uint32_t closure_cap = 5000; // max order for permutation closures
  uint32_t h1_cap = 2048;      // max unknown count for 1-cocycle linear algebra
  uint32_t h2_cap = 1024;      // max unknown count for 2-cocycle linear algebra
};

}  // namespace kani
