#include "sdj/sampling.hpp"

#include <algorithm>

namespace sdj {

std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t salt) {
  std::uint64_t z = seed + 0x9e3779b97f4a7c15ull * (salt + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
  return z ^ (z >> 31);
}

std::vector<Bits> subsets_of_card(int m, int c) {
  std::vector<Bits> out;
  for (Bits f : Complex::skeleton(m, c).faces())
    if (set_card(f) == c) out.push_back(f);
  return out;
}

Complex balanced_from_missing(int m, int k, std::span<const Bits> missing) {
  std::vector<Bits> faces;
  for (Bits f : Complex::skeleton(m, k + 1).faces()) {
    if (set_card(f) == k + 1 &&
        std::find(missing.begin(), missing.end(), f) != missing.end())
      continue;
    faces.push_back(f);
  }
  return Complex::from_closed_faces(m, std::move(faces));
}

namespace {

std::vector<Bits> random_missing(int m, int k, Rng& rng) {
  std::vector<Bits> level = subsets_of_card(m, k + 1);
  const std::size_t c = level.size();
  std::size_t n_miss;
  switch (rng.below(4)) {
    case 0:  // anywhere
      n_miss = static_cast<std::size_t>(rng.below(c + 1));
      break;
    case 1:  // near the full lower skeleton
      n_miss = c - static_cast<std::size_t>(rng.below(std::min<std::uint64_t>(c + 1, 4)));
      break;
    default:  // near the full upper skeleton
      n_miss = static_cast<std::size_t>(rng.below(std::min<std::uint64_t>(c + 1, 4)));
      break;
  }
  for (std::size_t i = 0; i < n_miss; ++i) {
    const std::size_t j = i + static_cast<std::size_t>(rng.below(c - i));
    std::swap(level[i], level[j]);
  }
  level.resize(n_miss);
  std::sort(level.begin(), level.end());
  return level;
}

}  // namespace

Complex random_balanced_complex(int m, int k, Rng& rng) {
  const auto missing = random_missing(m, k, rng);
  return balanced_from_missing(m, k, missing);
}

Complex random_complex(int m, Rng& rng) {
  const std::size_t n_facets = 1 + static_cast<std::size_t>(rng.below(4));
  std::vector<Bits> facets;
  for (std::size_t i = 0; i < n_facets; ++i)
    facets.push_back(static_cast<Bits>(rng.below(std::uint64_t{1} << m)));
  return Complex::from_facets(m, facets);
}

std::vector<Family> sample_balanced_families(int m, int k, int r,
                                             std::size_t cap,
                                             std::uint64_t seed) {
  const std::vector<Bits> level = subsets_of_card(m, k + 1);
  const std::size_t c = level.size();
  std::vector<Family> out;

  const std::size_t total_bits = c * static_cast<std::size_t>(r);
  if (total_bits <= 60 && (std::uint64_t{1} << total_bits) <= cap) {
    // exhaustive over all missing-set masks
    const std::uint64_t per = std::uint64_t{1} << c;
    std::vector<std::uint64_t> digits(static_cast<std::size_t>(r), 0);
    while (true) {
      std::vector<Complex> ks;
      for (int i = 0; i < r; ++i) {
        std::vector<Bits> missing;
        for (std::size_t j = 0; j < c; ++j)
          if (digits[static_cast<std::size_t>(i)] >> j & 1) missing.push_back(level[j]);
        ks.push_back(balanced_from_missing(m, k, missing));
      }
      out.push_back(Family(std::move(ks)));
      int at = r - 1;
      while (at >= 0 && ++digits[static_cast<std::size_t>(at)] == per) {
        digits[static_cast<std::size_t>(at)] = 0;
        --at;
      }
      if (at < 0) break;
    }
    return out;
  }

  Rng rng(mix_seed(seed, (static_cast<std::uint64_t>(m) << 16) ^
                             (static_cast<std::uint64_t>(k) << 8) ^
                             static_cast<std::uint64_t>(r)));
  out.reserve(cap);
  for (std::size_t i = 0; i < cap; ++i) {
    std::vector<Complex> ks;
    for (int j = 0; j < r; ++j) ks.push_back(random_balanced_complex(m, k, rng));
    out.push_back(Family(std::move(ks)));
  }
  return out;
}

}  // namespace sdj
