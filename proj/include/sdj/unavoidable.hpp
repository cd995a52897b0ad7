#pragma once

#include <optional>
#include <span>
#include <vector>

#include "sdj/joins.hpp"

namespace sdj {

// Outcome of the exhaustive search over covering partitions of [m] into r
// blocks. When the family is avoidable the witness is a covering partition
// with A_i ∉ K_i for every i.
struct BruteForceOutcome {
  bool unavoidable = false;
  std::vector<Bits> witness;
};

BruteForceOutcome collectively_unavoidable_bruteforce(const Family& fam);

// r-partite graph on the missing (k+1)-sets of a balanced family; two
// labels are adjacent iff they sit in distinct parts and are disjoint.
struct KneserGraph {
  int m = 0;
  int k = 0;
  std::vector<std::vector<Bits>> parts;  // parts[i]: sorted missing sets of K_i

  std::size_t vertex_count() const;
  bool adjacent(int part_a, std::size_t idx_a, int part_b, std::size_t idx_b) const;
  // all edges as ((part,idx),(part,idx)), deterministic order
  std::vector<std::pair<std::pair<int, std::size_t>, std::pair<int, std::size_t>>> edges() const;
};

KneserGraph build_kneser_graph(const Family& fam, int k);

struct CliqueWitness {
  std::vector<std::pair<int, Bits>> members;  // (part, missing set)
};

// d pairwise-disjoint missing sets drawn from d distinct parts.
std::optional<CliqueWitness> find_d_clique(const KneserGraph& g, int d);

enum class DeficiencyCase { Always, Never, FullSkeletaOnly, CliqueTest };

struct DeficiencyClass {
  int d = 0;  // r(k+2) - m
  DeficiencyCase kind = DeficiencyCase::Always;
  bool all_full_upper = false;  // every K_i = skeleton(m,k+1); set for d = 1
};

DeficiencyClass classify_deficiency(const Family& fam, int k);

enum class DecisionMethod { Brute, Deficiency, Clique };

struct UnavoidabilityCertificate {
  bool verdict = false;
  DecisionMethod method = DecisionMethod::Brute;
  int d = 0;  // deficiency, when the balanced classification applies
  std::optional<std::vector<Bits>> witness_partition;
  std::optional<CliqueWitness> witness_clique;
};

// Balanced families dispatch on the deficiency classification (with the
// clique search for 1 < d <= r); everything else falls back to the brute
// search. Pass k to pin the balance parameter, otherwise it is detected.
UnavoidabilityCertificate decide_collectively_unavoidable(
    const Family& fam, std::optional<int> k = std::nullopt);

bool is_collectively_unavoidable(const Family& fam, std::optional<int> k = std::nullopt);

// Largest k at which every member is (m,k)-balanced; nullopt when the
// members share no balance parameter.
std::optional<int> common_balance_k(const Family& fam);

struct SkeletaFamily {
  Family family;
  std::vector<int> sizes;
  bool tight = false;  // m == sum(sizes) + r - 1
};

SkeletaFamily skeleta_family(int m, std::span<const int> sizes);

struct VkfReport {
  int r = 0, d = 0, k = 0, s = 0;
  bool r_prime_power = false;
  int m = 0;     // s(k+2) + (r-s)(k+1) + r - 1
  int big_n = 0; // m - 1
  long long rk_plus_s = 0;
  long long target = 0;  // (r-1)d
  bool dim_hypothesis = false;  // rk+s >= (r-1)d
  bool tight = false;           // rk+s == (r-1)d
  bool n_bound = false;         // N >= (r-1)(d+2)
  bool equivalence = false;     // tight <=> N == (r-1)(d+2)
};

VkfReport vkf_parameters(int r, int d, int k, int s);

bool is_prime_power(int n);

}  // namespace sdj
