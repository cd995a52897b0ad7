// Acceptance suite: one pass/fail line per criterion, nonzero exit when
// any criterion fails. Every numeric threshold is pinned here.

#include <chrono>
#include <cstdio>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "sdj/fixtures.hpp"
#include "sdj/homology.hpp"
#include "sdj/joins.hpp"
#include "sdj/morse.hpp"
#include "sdj/sampling.hpp"
#include "sdj/unavoidable.hpp"

using namespace sdj;

namespace {

constexpr std::size_t kHomologyCellCap = 20000;  // criterion 2
constexpr std::size_t kFullProfileCellCap = 4000;
constexpr std::size_t kCapR2 = 500;  // families per (m,k) at r=2
constexpr std::size_t kCapR3 = 200;  // families per (m,k) at r=3

struct Outcome {
  int id;
  std::string label;
  bool pass;
  std::string detail;
};

std::vector<Outcome> outcomes;

void report(int id, const std::string& label, bool pass, const std::string& detail) {
  outcomes.push_back({id, label, pass, detail});
  std::printf("[%s] criterion %d: %s — %s\n", pass ? "PASS" : "FAIL", id,
              label.c_str(), detail.c_str());
  std::fflush(stdout);
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

bool sphere_profile(const HomologyProfile& p, int dim) {
  if (p.void_complex || p.betti_neg1 != 0 || p.computed_top < dim) return false;
  for (int d = 0; d <= p.computed_top; ++d) {
    if (p.betti[static_cast<std::size_t>(d)] != (d == dim ? 1 : 0)) return false;
    if (!p.torsion[static_cast<std::size_t>(d)].empty()) return false;
  }
  return true;
}

// criteria 1 and 2 share the sampled instance stream
struct EngineStats {
  std::size_t unavoidable_families = 0;
  std::size_t engine_failures = 0;
  std::size_t homology_instances = 0;
  std::size_t homology_failures = 0;
  std::size_t agreement_instances = 0;
  std::size_t agreement_failures = 0;
};

struct OracleStats {
  std::size_t families = 0;
  std::size_t mismatches = 0;
  bool case_seen[4] = {false, false, false, false};
};

void run_instance(const Family& fam, int k, EngineStats& eng, OracleStats& oracle) {
  const int m = fam.ground();
  const int r = fam.r();

  const BruteForceOutcome brute = collectively_unavoidable_bruteforce(fam);
  const UnavoidabilityCertificate cert = decide_collectively_unavoidable(fam, k);
  ++oracle.families;
  if (cert.verdict != brute.unavoidable) ++oracle.mismatches;
  oracle.case_seen[static_cast<int>(classify_deficiency(fam, k).kind)] = true;

  if (!brute.unavoidable) return;
  ++eng.unavoidable_families;

  const JoinComplex J = symm_deleted_join(fam);
  const GradientField G = build_matching(J);
  const CriticalReport rep = critical_report(J, G);
  const auto bound = connectivity_lower_bound(J, rep);
  const bool engine_ok = verify_matching(J, G) && verify_acyclicity(J, G) &&
                         rep.violations.empty() && bound.has_value() &&
                         *bound >= m - r - 1;
  if (!engine_ok) {
    ++eng.engine_failures;
    return;
  }

  if (J.size() <= kHomologyCellCap) {
    ++eng.homology_instances;
    const ChainComplex C = ChainComplex::from_join(J);
    if (!verify_connectivity_homology(C, m - r - 1)) ++eng.homology_failures;

    if (J.size() <= kFullProfileCellCap) {
      // Morse/homology agreement and the Morse inequalities on the
      // full profile
      ++eng.agreement_instances;
      const HomologyProfile full = homology_profile(C);
      const int cert_dims = std::min(*bound, J.max_dim());
      bool ok = full.vanishes_through(std::min(cert_dims, full.computed_top));
      std::vector<std::size_t> critical_per_dim(
          static_cast<std::size_t>(J.max_dim()) + 1, 0);
      for (std::uint32_t c : G.critical)
        ++critical_per_dim[static_cast<std::size_t>(J.cell_dim(c))];
      for (int d = 0; d <= full.computed_top && ok; ++d) {
        const std::size_t torsion_here = full.torsion[static_cast<std::size_t>(d)].size();
        const std::size_t torsion_below =
            d > 0 ? full.torsion[static_cast<std::size_t>(d - 1)].size() : 0;
        ok = critical_per_dim[static_cast<std::size_t>(d)] >=
             static_cast<std::size_t>(full.betti[static_cast<std::size_t>(d)]) +
                 torsion_here + torsion_below;
      }
      if (!ok) ++eng.agreement_failures;
    }
  }
}

void criteria_1_2_3() {
  const auto t0 = std::chrono::steady_clock::now();
  EngineStats eng;
  OracleStats oracle;
  for (int m = 2; m <= 6; ++m)
    for (int k = 0; k < m; ++k)
      for (const Family& fam : sample_balanced_families(m, k, 2, kCapR2, kDefaultSeed))
        run_instance(fam, k, eng, oracle);
  for (int m = 5; m <= 8; ++m)
    for (int k = 0; k < m; ++k)
      for (const Family& fam : sample_balanced_families(m, k, 3, kCapR3, kDefaultSeed))
        run_instance(fam, k, eng, oracle);

  {
    std::ostringstream os;
    os << eng.unavoidable_families << " balanced unavoidable families, "
       << eng.engine_failures << " engine failures (" << seconds_since(t0) << "s)";
    report(1, "matching/acyclicity/criticality engine", eng.engine_failures == 0,
           os.str());
  }
  {
    std::ostringstream os;
    os << eng.homology_instances << " instances <= " << kHomologyCellCap
       << " cells, " << eng.homology_failures << " with nonvanishing low homology; "
       << eng.agreement_instances << " full profiles, " << eng.agreement_failures
       << " agreement/Morse-inequality failures";
    report(2, "homology cross-check",
           eng.homology_failures == 0 && eng.agreement_failures == 0, os.str());
  }
  {
    std::ostringstream os;
    os << oracle.families << " balanced families, " << oracle.mismatches
       << " verdict mismatches, cases seen:"
       << (oracle.case_seen[0] ? " always" : "")
       << (oracle.case_seen[1] ? " never" : "")
       << (oracle.case_seen[2] ? " full-skeleta" : "")
       << (oracle.case_seen[3] ? " clique" : "");
    const bool all_cases = oracle.case_seen[0] && oracle.case_seen[1] &&
                           oracle.case_seen[2] && oracle.case_seen[3];
    report(3, "deficiency classification vs brute force",
           oracle.mismatches == 0 && all_cases, os.str());
  }
}

void criterion_4() {
  const Family proj = projective_triple_family();
  const SkeletaFamily skel = skeleta_triple_family();
  bool ok = true;
  std::ostringstream os;

  ok = ok && decide_collectively_unavoidable(proj, 2).verdict;
  ok = ok && collectively_unavoidable_bruteforce(proj).unavoidable;
  ok = ok && decide_collectively_unavoidable(skel.family, 2).verdict;
  ok = ok && collectively_unavoidable_bruteforce(skel.family).unavoidable;

  const JoinCell cell = distinguishing_cell();
  const JoinComplex l_join = symm_deleted_join(skel.family);
  const JoinComplex k_join = symm_deleted_join(proj);
  ok = ok && l_join.contains(cell) && !k_join.contains(cell);

  const GradientField G = build_matching(k_join);
  const CriticalReport rep = critical_report(k_join, G);
  const auto bound = connectivity_lower_bound(k_join, rep);
  ok = ok && verify_matching(k_join, G) && verify_acyclicity(k_join, G);
  ok = ok && rep.violations.empty() && bound.has_value() && *bound == 5;

  os << "both triples unavoidable; " << cell.to_string()
     << " separates the joins; certificate "
     << (bound ? std::to_string(*bound) : std::string("none")) << " (expected 5)";
  report(4, "9-vertex triple reproduction", ok, os.str());
}

void criterion_5() {
  std::size_t sphere_fail = 0, cert_fail = 0, checked = 0;
  for (int m : {4, 5, 6}) {
    const int k = (m - 2) / 2;
    Rng rng(mix_seed(kDefaultSeed, 900 + static_cast<std::uint64_t>(m)));
    for (int trial = 0; trial < 50; ++trial) {
      ++checked;
      const Complex K = random_balanced_complex(m, k, rng);
      const Family pair({K, K.alexander_dual()});
      const JoinComplex del = deleted_join(pair);
      if (!sphere_profile(homology_profile(ChainComplex::from_join(del)), m - 2))
        ++sphere_fail;
      if (m == 2 * k + 2) {
        const JoinComplex sym = symm_deleted_join(pair);
        const GradientField G = build_matching(sym);
        const CriticalReport rep = critical_report(sym, G);
        const auto bound = connectivity_lower_bound(sym, rep);
        const bool ok = verify_matching(sym, G) && verify_acyclicity(sym, G) &&
                        rep.violations.empty() && bound.has_value() && *bound == m - 3;
        if (!ok) ++cert_fail;
      }
    }
  }
  std::ostringstream os;
  os << checked << " dual pairs: " << sphere_fail << " non-sphere profiles, "
     << cert_fail << " certificate failures";
  report(5, "Bier sphere profiles and dual-pair certificates",
         sphere_fail == 0 && cert_fail == 0, os.str());
}

void criterion_6() {
  const Complex rp2 = Complex::rp2_minimal();
  bool ok = rp2.count_of_card(3) == 10 && rp2.count_of_card(2) == 15 &&
            rp2.count_of_card(1) == 6;
  const long long chi = 6 - 15 + 10;
  ok = ok && chi == 1;

  std::size_t triples = 0;
  for (Bits f : Complex::skeleton(6, 3).faces())
    if (set_card(f) == 3) {
      ++triples;
      const bool in = rp2.contains(f);
      const bool coin = rp2.contains(full_set(6) & ~f);
      ok = ok && (in != coin);
    }
  ok = ok && triples == 20 && rp2.alexander_dual() == rp2;

  const HomologyProfile p = homology_profile(ChainComplex::from_complex(rp2));
  ok = ok && p.betti_neg1 == 0 && p.betti == std::vector<long long>{0, 0, 0};
  ok = ok && p.torsion.size() == 3 && p.torsion[0].empty() &&
       p.torsion[1] == std::vector<BigInt>{2} && p.torsion[2].empty();

  report(6, "6-vertex projective plane fixture", ok,
         "10 facets, 15 edges, chi=1, torsion {2} in dim 1, self-dual over all "
         "20 triples");
}

void criterion_7() {
  std::size_t families = 0, family_failures = 0;
  for (int r = 1; r <= 3; ++r)
    for (int m = 1; m <= 9; ++m) {
      const int total = m - r + 1;
      if (total < 0) continue;
      std::vector<int> sizes(static_cast<std::size_t>(r), 0);
      // enumerate compositions of `total` into r ordered parts
      const std::function<void(int, int)> sweep = [&](int at, int left) {
        if (at == r - 1) {
          sizes[static_cast<std::size_t>(at)] = left;
          const SkeletaFamily fam = skeleta_family(m, sizes);
          ++families;
          if (!fam.tight || !collectively_unavoidable_bruteforce(fam.family).unavoidable)
            ++family_failures;
          return;
        }
        for (int take = 0; take <= left; ++take) {
          sizes[static_cast<std::size_t>(at)] = take;
          sweep(at + 1, left - take);
        }
      };
      sweep(0, total);
    }

  std::size_t combos = 0, combo_failures = 0;
  for (int r = 2; r <= 5; ++r)
    for (int d = 1; d <= 6; ++d)
      for (int k = 0; k <= 6; ++k)
        for (int s = 0; s < r; ++s) {
          const VkfReport rep = vkf_parameters(r, d, k, s);
          ++combos;
          if (!rep.r_prime_power || !rep.equivalence) ++combo_failures;
        }

  std::ostringstream os;
  os << families << " tight skeleta families (" << family_failures
     << " failures); " << combos << " parameter combinations (" << combo_failures
     << " failures)";
  report(7, "skeleta condition and parameter arithmetic",
         family_failures == 0 && combo_failures == 0, os.str());
}

void criterion_8() {
  bool ok = true;
  // a family that misses: both members are the lone empty face
  const Complex only_empty = Complex::from_facets(2, std::vector<std::vector<int>>{{}});
  const Family bad({only_empty, only_empty});
  const BruteForceOutcome out = collectively_unavoidable_bruteforce(bad);
  ok = ok && !out.unavoidable && out.witness.size() == 2;
  if (ok) {
    Bits all = 0;
    for (std::size_t i = 0; i < out.witness.size(); ++i) {
      ok = ok && !bad[static_cast<int>(i)].contains(out.witness[i]);
      ok = ok && (all & out.witness[i]) == 0;
      all |= out.witness[i];
    }
    ok = ok && all == full_set(2);
  }

  // hand-built cyclic field on the triangle boundary
  const Complex tri =
      Complex::from_facets(3, std::vector<std::vector<int>>{{1, 2}, {1, 3}, {2, 3}});
  const JoinComplex J = deleted_join(Family({tri}));
  GradientField G;
  G.mate.assign(J.size(), -1);
  const auto idx = [&](std::initializer_list<int> vs) {
    return static_cast<std::uint32_t>(
        *J.index_of(JoinCell(3, {VertexSet::of(3, vs).bits()})));
  };
  G.pairs = {{idx({1}), idx({1, 2}), 1, 2},
             {idx({2}), idx({2, 3}), 1, 3},
             {idx({3}), idx({1, 3}), 1, 1}};
  for (const MorsePair& p : G.pairs) {
    G.mate[p.lower] = static_cast<std::int32_t>(p.upper);
    G.mate[p.upper] = static_cast<std::int32_t>(p.lower);
  }
  ok = ok && verify_matching(J, G) && !verify_acyclicity(J, G);

  report(8, "negative controls", ok,
         "avoidable family yields a sound witness; cyclic vector field rejected");
}

}  // namespace

int main() {
  const auto t0 = std::chrono::steady_clock::now();
  criteria_1_2_3();
  criterion_4();
  criterion_5();
  criterion_6();
  criterion_7();
  criterion_8();

  bool all = true;
  for (const Outcome& o : outcomes) all = all && o.pass;
  std::printf("%s in %.1fs (%zu criteria)\n", all ? "ALL PASS" : "FAILURES",
              seconds_since(t0), outcomes.size());
  return all ? 0 : 1;
}
