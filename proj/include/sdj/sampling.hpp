#pragma once

#include <cstdint>
#include <random>
#include <span>
#include <vector>

#include "sdj/joins.hpp"

namespace sdj {

constexpr std::uint64_t kDefaultSeed = 177001;

// Deterministic generator; avoids std distributions, whose output is
// implementation-defined, so fixed seeds reproduce everywhere.
class Rng {
public:
  explicit Rng(std::uint64_t seed) : eng_(seed) {}
  std::uint64_t next() { return eng_(); }
  std::uint64_t below(std::uint64_t n) { return n == 0 ? 0 : eng_() % n; }

private:
  std::mt19937_64 eng_;
};

std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t salt);

std::vector<Bits> subsets_of_card(int m, int c);

// skeleton(m,k+1) minus the given (k+1)-sets; always (m,k)-balanced.
Complex balanced_from_missing(int m, int k, std::span<const Bits> missing);

Complex random_balanced_complex(int m, int k, Rng& rng);

// Random downward-closed family (a few random facets, closed).
Complex random_complex(int m, Rng& rng);

// Balanced r-tuples at parameter k: exhaustive over all missing-set
// choices when there are at most `cap` of them, otherwise `cap` seeded
// samples with a mixed missing-count profile.
std::vector<Family> sample_balanced_families(int m, int k, int r,
                                             std::size_t cap,
                                             std::uint64_t seed);

}  // namespace sdj
