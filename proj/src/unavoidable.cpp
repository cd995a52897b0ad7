#include "sdj/unavoidable.hpp"

#include <algorithm>
#include <stdexcept>

namespace sdj {

namespace {

// DFS over assignments of 1..m to the r blocks. Two prunes, both riding on
// downward closure: if some block plus all unplaced elements is still a
// face of its complex, every completion is fine; if every block has
// already escaped its complex, any completion is a violating partition.
struct BruteSearch {
  const Family& fam;
  int m, r;
  std::vector<Bits> blocks;
  std::vector<char> escaped;
  std::vector<Bits> witness;

  explicit BruteSearch(const Family& f)
      : fam(f), m(f.ground()), r(f.r()),
        blocks(static_cast<std::size_t>(f.r()), 0),
        escaped(static_cast<std::size_t>(f.r()), 0) {
    // a void member rejects even the empty block
    for (int i = 0; i < r; ++i)
      if (!fam[i].contains(Bits{0})) escaped[static_cast<std::size_t>(i)] = 1;
  }

  // true iff every completion from element v on is non-violating
  bool walk(int v) {
    const Bits rest = set_above(full_set(m), v - 1);
    bool all_escaped = true;
    for (int i = 0; i < r; ++i) {
      if (!escaped[static_cast<std::size_t>(i)] &&
          fam[i].contains(blocks[static_cast<std::size_t>(i)] | rest))
        return true;  // block i stays a face no matter what
      all_escaped = all_escaped && escaped[static_cast<std::size_t>(i)];
    }
    if (all_escaped) {
      witness = blocks;
      witness[0] |= rest;  // growth keeps every block escaped
      return false;
    }
    for (int i = 0; i < r; ++i) {
      const Bits old = blocks[static_cast<std::size_t>(i)];
      const char was = escaped[static_cast<std::size_t>(i)];
      blocks[static_cast<std::size_t>(i)] = old | vertex_bit(v);
      if (!was && !fam[i].contains(blocks[static_cast<std::size_t>(i)]))
        escaped[static_cast<std::size_t>(i)] = 1;
      const bool ok = walk(v + 1);
      blocks[static_cast<std::size_t>(i)] = old;
      escaped[static_cast<std::size_t>(i)] = was;
      if (!ok) return false;
    }
    return true;
  }
};

}  // namespace

BruteForceOutcome collectively_unavoidable_bruteforce(const Family& fam) {
  BruteSearch search(fam);
  BruteForceOutcome out;
  out.unavoidable = search.walk(1);
  if (!out.unavoidable) {
    out.witness = search.witness;
    for (int i = 0; i < fam.r(); ++i)
      if (fam[i].contains(out.witness[static_cast<std::size_t>(i)]))
        throw std::logic_error("brute-force witness is not violating");
  }
  return out;
}

std::size_t KneserGraph::vertex_count() const {
  std::size_t n = 0;
  for (const auto& p : parts) n += p.size();
  return n;
}

bool KneserGraph::adjacent(int part_a, std::size_t idx_a, int part_b,
                           std::size_t idx_b) const {
  if (part_a == part_b) return false;
  return (parts[static_cast<std::size_t>(part_a)][idx_a] &
          parts[static_cast<std::size_t>(part_b)][idx_b]) == 0;
}

std::vector<std::pair<std::pair<int, std::size_t>, std::pair<int, std::size_t>>>
KneserGraph::edges() const {
  std::vector<std::pair<std::pair<int, std::size_t>, std::pair<int, std::size_t>>> out;
  const int r = static_cast<int>(parts.size());
  for (int a = 0; a < r; ++a)
    for (int b = a + 1; b < r; ++b)
      for (std::size_t i = 0; i < parts[static_cast<std::size_t>(a)].size(); ++i)
        for (std::size_t j = 0; j < parts[static_cast<std::size_t>(b)].size(); ++j)
          if (adjacent(a, i, b, j)) out.push_back({{a, i}, {b, j}});
  return out;
}

KneserGraph build_kneser_graph(const Family& fam, int k) {
  KneserGraph g;
  g.m = fam.ground();
  g.k = k;
  g.parts.resize(static_cast<std::size_t>(fam.r()));
  for (int i = 0; i < fam.r(); ++i) {
    if (!fam[i].is_balanced(k))
      throw std::invalid_argument("Kneser graph requires an (m,k)-balanced family");
    const Complex upper = Complex::skeleton(g.m, k + 1);
    for (Bits f : upper.faces())
      if (set_card(f) == k + 1 && !fam[i].contains(f))
        g.parts[static_cast<std::size_t>(i)].push_back(f);
  }
  return g;
}

namespace {

bool clique_search(const KneserGraph& g, const std::vector<int>& part_order,
                   std::size_t at, int needed, Bits used,
                   std::vector<std::pair<int, Bits>>& picked) {
  if (needed == 0) return true;
  if (part_order.size() - at < static_cast<std::size_t>(needed)) return false;
  // skip this part
  if (clique_search(g, part_order, at + 1, needed, used, picked)) return true;
  const int part = part_order[at];
  for (Bits s : g.parts[static_cast<std::size_t>(part)]) {
    if ((s & used) != 0) continue;
    picked.push_back({part, s});
    if (clique_search(g, part_order, at + 1, needed - 1, used | s, picked)) return true;
    picked.pop_back();
  }
  return false;
}

}  // namespace

std::optional<CliqueWitness> find_d_clique(const KneserGraph& g, int d) {
  if (d < 1 || d > static_cast<int>(g.parts.size()))
    throw std::invalid_argument("clique size must lie in [1,r]");
  std::vector<int> order(g.parts.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = static_cast<int>(i);
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    const auto sa = g.parts[static_cast<std::size_t>(a)].size();
    const auto sb = g.parts[static_cast<std::size_t>(b)].size();
    return sa != sb ? sa < sb : a < b;
  });
  CliqueWitness w;
  if (!clique_search(g, order, 0, d, 0, w.members)) return std::nullopt;
  std::sort(w.members.begin(), w.members.end());
  return w;
}

DeficiencyClass classify_deficiency(const Family& fam, int k) {
  DeficiencyClass out;
  const int m = fam.ground();
  const int r = fam.r();
  out.d = r * (k + 2) - m;
  bool all_full = true;
  const Complex upper = Complex::skeleton(m, k + 1);
  for (int i = 0; i < r && all_full; ++i) all_full = fam[i] == upper;
  out.all_full_upper = all_full;
  if (out.d > r)
    out.kind = DeficiencyCase::Always;
  else if (out.d < 1)
    out.kind = DeficiencyCase::Never;
  else if (out.d == 1)
    out.kind = DeficiencyCase::FullSkeletaOnly;
  else
    out.kind = DeficiencyCase::CliqueTest;
  return out;
}

std::optional<int> common_balance_k(const Family& fam) {
  int lo = 0, hi = fam.ground() - 1;
  for (const Complex& K : fam.complexes()) {
    const auto range = K.balanced_k_range();
    if (!range) return std::nullopt;
    lo = std::max(lo, range->first);
    hi = std::min(hi, range->second);
  }
  if (lo > hi) return std::nullopt;
  return hi;
}

namespace {

// Violating covering partitions for the arithmetic non-unavoidable cases:
// blocks of cardinality >= k+2 escape every (m,k)-balanced complex.
std::vector<Bits> blocks_of_card(int m, std::span<const int> cards) {
  std::vector<Bits> out;
  int v = 1;
  for (int c : cards) {
    Bits b = 0;
    for (int j = 0; j < c; ++j) b |= vertex_bit(v++);
    out.push_back(b);
  }
  // dump leftovers into the first block
  if (v <= m && !out.empty()) out[0] |= set_above(full_set(m), v - 1);
  return out;
}

}  // namespace

UnavoidabilityCertificate decide_collectively_unavoidable(const Family& fam,
                                                          std::optional<int> k) {
  UnavoidabilityCertificate cert;
  std::optional<int> balance = k;
  if (balance) {
    for (const Complex& K : fam.complexes())
      if (!K.is_balanced(*balance)) {
        balance.reset();
        break;
      }
  } else {
    balance = common_balance_k(fam);
  }

  if (!balance) {
    const BruteForceOutcome b = collectively_unavoidable_bruteforce(fam);
    cert.verdict = b.unavoidable;
    cert.method = DecisionMethod::Brute;
    if (!b.unavoidable) cert.witness_partition = b.witness;
    return cert;
  }

  const int m = fam.ground();
  const int r = fam.r();
  const DeficiencyClass cls = classify_deficiency(fam, *balance);
  cert.d = cls.d;
  switch (cls.kind) {
    case DeficiencyCase::Always:
      cert.method = DecisionMethod::Deficiency;
      cert.verdict = true;
      return cert;
    case DeficiencyCase::Never: {
      cert.method = DecisionMethod::Deficiency;
      cert.verdict = false;
      // m > r(k+2): r blocks of cardinality k+2 fit
      std::vector<int> cards(static_cast<std::size_t>(r), *balance + 2);
      cert.witness_partition = blocks_of_card(m, cards);
      return cert;
    }
    case DeficiencyCase::FullSkeletaOnly: {
      cert.method = DecisionMethod::Deficiency;
      cert.verdict = cls.all_full_upper;
      if (!cert.verdict) {
        // some K_i misses a (k+1)-set A: put A in slot i, blocks of
        // cardinality k+2 elsewhere (they exactly exhaust [m])
        const KneserGraph g = build_kneser_graph(fam, *balance);
        int slot = 0;
        while (g.parts[static_cast<std::size_t>(slot)].empty()) ++slot;
        const Bits a = g.parts[static_cast<std::size_t>(slot)].front();
        std::vector<Bits> blocks(static_cast<std::size_t>(r), 0);
        blocks[static_cast<std::size_t>(slot)] = a;
        Bits free = full_set(m) & ~a;
        for (int i = 0; i < r; ++i) {
          if (i == slot) continue;
          Bits b = 0;
          for (int j = 0; j < *balance + 2; ++j) {
            const int v = set_min(free);
            b |= vertex_bit(v);
            free &= ~vertex_bit(v);
          }
          blocks[static_cast<std::size_t>(i)] = b;
        }
        cert.witness_partition = blocks;
      }
      return cert;
    }
    case DeficiencyCase::CliqueTest: {
      cert.method = DecisionMethod::Clique;
      const KneserGraph g = build_kneser_graph(fam, *balance);
      const auto clique = find_d_clique(g, cls.d);
      cert.verdict = !clique.has_value();
      if (clique) cert.witness_clique = clique;
      return cert;
    }
  }
  throw std::logic_error("unhandled deficiency case");
}

bool is_collectively_unavoidable(const Family& fam, std::optional<int> k) {
  return decide_collectively_unavoidable(fam, k).verdict;
}

SkeletaFamily skeleta_family(int m, std::span<const int> sizes) {
  SkeletaFamily out;
  out.sizes.assign(sizes.begin(), sizes.end());
  std::vector<Complex> ks;
  long long total = 0;
  for (int c : sizes) {
    ks.push_back(Complex::skeleton(m, c));
    total += c;
  }
  out.family = Family(std::move(ks));
  out.tight = (total + static_cast<long long>(sizes.size()) - 1 == m);
  return out;
}

bool is_prime_power(int n) {
  if (n < 2) return false;
  int p = 0;
  for (int q = 2; q * q <= n; ++q)
    if (n % q == 0) {
      p = q;
      break;
    }
  if (p == 0) return true;  // prime
  while (n % p == 0) n /= p;
  return n == 1;
}

VkfReport vkf_parameters(int r, int d, int k, int s) {
  VkfReport rep;
  rep.r = r;
  rep.d = d;
  rep.k = k;
  rep.s = s;
  rep.r_prime_power = is_prime_power(r);
  rep.m = s * (k + 2) + (r - s) * (k + 1) + r - 1;
  rep.big_n = rep.m - 1;
  rep.rk_plus_s = static_cast<long long>(r) * k + s;
  rep.target = static_cast<long long>(r - 1) * d;
  rep.dim_hypothesis = rep.rk_plus_s >= rep.target;
  rep.tight = rep.rk_plus_s == rep.target;
  rep.n_bound = rep.big_n >= (r - 1) * (d + 2);
  rep.equivalence = rep.tight == (rep.big_n == (r - 1) * (d + 2));
  return rep;
}

}  // namespace sdj
