#ifndef GENDERFLOW_UTIL_HPP
#define GENDERFLOW_UTIL_HPP

#include <cstdint>
#include <random>
#include <string>
#include <string_view>
#include <vector>

namespace genderflow::util {

/// ASCII-only lowercasing. Multi-byte UTF-8 sequences pass through untouched,
/// so lexicon and analyzer entries must be stored in lowercase form.
std::string ascii_lower(std::string_view s);

std::string_view trim(std::string_view s);

std::vector<std::string> split(std::string_view s, char delim);

bool starts_with(std::string_view s, std::string_view prefix);
bool ends_with(std::string_view s, std::string_view suffix);

uint64_t splitmix64(uint64_t x);
uint64_t fnv1a64(std::string_view s);

/// Stable per-purpose sub-seed so that independent sampling stages never
/// share a generator stream.
inline uint64_t derive_seed(uint64_t seed, std::string_view tag) {
  return splitmix64(seed ^ fnv1a64(tag));
}

/// Counter-based uniform draw in [0,1), keyed by (seed, line, token).
/// Used for the gendered-error mock so that flip decisions depend only on
/// position, never on worker scheduling.
double hash_uniform(uint64_t seed, uint64_t line_index, uint64_t token_index);

/// Seeded generator with an implementation-independent bounded draw
/// (std::uniform_int_distribution is not portable across standard libraries).
class Rng {
public:
  explicit Rng(uint64_t seed) : gen_(seed) {}

  /// Uniform integer in [0, n) via rejection sampling. n must be > 0.
  uint64_t bounded(uint64_t n);

  uint64_t next() { return gen_(); }

private:
  std::mt19937_64 gen_;
};

/// k indices sampled uniformly without replacement from [0, n), returned in
/// ascending order (selection sampling, single pass).
std::vector<std::size_t> sample_indices(std::size_t n, std::size_t k, Rng& rng);

} // namespace genderflow::util

#endif
