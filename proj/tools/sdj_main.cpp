// Command-line front end: build complexes and families, decide collective
// unavoidability, run the gradient matching over (symmetrized) deleted
// joins, compute exact homology, and replay the pinned demonstration
// pipelines. All outputs are deterministic; artifact files are written
// atomically.

#include <CLI11.hpp>
#include <cmath>
#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "sdj/fixtures.hpp"
#include "sdj/homology.hpp"
#include "sdj/joins.hpp"
#include "sdj/json_io.hpp"
#include "sdj/morse.hpp"
#include "sdj/sampling.hpp"
#include "sdj/unavoidable.hpp"

namespace {

using namespace sdj;

// exit codes: 0 ok, 1 internal, 2 usage, 3 parse/input, 4 cap, 5 certificate
constexpr int kExitInternal = 1;
constexpr int kExitUsage = 2;
constexpr int kExitParse = 3;
constexpr int kExitCap = 4;
constexpr int kExitCertificate = 5;

struct CertificateFailure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Options {
  std::string in_path;
  std::string family_path;
  std::string out_path;
  std::string dot_path;
  std::string kind = "symmetric";
  std::string method = "auto";
  int m = 0;
  int c = 0;
  std::optional<int> k;
  std::vector<int> sizes;
  std::uint64_t seed = kDefaultSeed;
  std::size_t max_cells = 1'000'000;
  std::size_t budget = 1'000'000;
  int max_dim = 1 << 28;
  std::string dump_prefix;
};

void emit(const Options& opt, const Json& j) {
  std::cout << j.dump(2) << "\n";
  if (!opt.out_path.empty()) write_json_atomic(opt.out_path, j);
}

Family load_family(const Options& opt) {
  if (opt.family_path.empty())
    throw std::runtime_error("this command needs --family <file>");
  return family_from_json(load_json(opt.family_path));
}

JoinKind parse_kind(const std::string& kind) {
  if (kind == "deleted") return JoinKind::Deleted;
  if (kind == "symmetric") return JoinKind::Symmetrized;
  throw std::runtime_error("unknown join kind: " + kind);
}

// The raw assignment count (r+1)^m bounds the enumeration, so the cap is
// checked before any materialization starts.
void enforce_cap(const Family& fam, std::size_t max_cells) {
  const long double raw = std::pow(static_cast<long double>(fam.r() + 1),
                                   static_cast<long double>(fam.ground()));
  if (raw > static_cast<long double>(max_cells))
    throw CapExceeded("estimated cell count (r+1)^m = " +
                      std::to_string(static_cast<double>(raw)) +
                      " exceeds --max-cells " + std::to_string(max_cells));
}

JoinComplex build_join(const Family& fam, JoinKind kind, const Options& opt) {
  enforce_cap(fam, opt.max_cells);
  return JoinComplex::build(fam, kind, opt.max_cells);
}

struct MorseRun {
  JoinComplex join;
  GradientField field;
  CriticalReport report;
  bool matching_ok = false;
  bool acyclic = false;
  std::optional<int> certificate;
};

MorseRun run_morse(const Family& fam, JoinKind kind, const Options& opt) {
  MorseRun run{build_join(fam, kind, opt), {}, {}, false, false, {}};
  run.field = build_matching(run.join);
  run.matching_ok = verify_matching(run.join, run.field);
  run.acyclic = run.matching_ok && verify_acyclicity(run.join, run.field);
  run.report = critical_report(run.join, run.field);
  if (run.matching_ok && run.acyclic)
    run.certificate = connectivity_lower_bound(run.join, run.report);
  return run;
}

// ---------------------------------------------------------------------------
// repro pipelines

struct Reporter {
  bool all_ok = true;
  void line(bool ok, const std::string& what) {
    all_ok = all_ok && ok;
    std::cout << (ok ? "  [ok]   " : "  [FAIL] ") << what << "\n";
  }
};

void repro_tiny(const Options&) {
  std::cout << "tiny-m2r2: <skeleton(2,1), skeleton(2,1)>, every step by hand\n";
  const Family fam = tiny_point_pair_family();
  const JoinComplex J = symm_deleted_join(fam);
  Reporter rep;
  rep.line(J.size() == 6 && J.count_in_dim(0) == 4 && J.count_in_dim(1) == 2,
           "cells: " + std::to_string(J.size()) + " (4 vertices, 2 edges)");
  const GradientField G = build_matching(J);
  for (const MorsePair& p : G.pairs)
    std::cout << "  pair " << J.cell(p.lower).to_string() << " -> "
              << J.cell(p.upper).to_string() << "  [step " << p.step
              << ", pivot " << p.pivot << "]\n";
  rep.line(G.pairs.size() == 2, "two matched pairs");
  rep.line(verify_matching(J, G), "matching conditions");
  rep.line(verify_acyclicity(J, G), "acyclicity");
  rep.line(passport_monotone_check(J, G), "passport monotone along path steps");
  const CriticalReport crit = critical_report(J, G);
  for (std::uint32_t c : crit.large)
    std::cout << "  critical large " << J.cell(c).to_string() << " dim "
              << J.cell_dim(c) << "\n";
  rep.line(crit.base.has_value() &&
               J.cell(*crit.base).to_string() == "(1,-;2)" &&
               crit.large.size() == 1 && crit.violations.empty(),
           "critical cells: base (1,-;2) plus one large cell");
  const auto cert = connectivity_lower_bound(J, crit);
  std::cout << "  certificate: "
            << (cert ? std::to_string(*cert) : std::string("none")) << "\n";
  rep.line(cert == -1, "certificate equals m-r-1 = -1");
  const HomologyProfile prof = homology_profile(ChainComplex::from_join(J));
  rep.line(prof.betti == std::vector<long long>{1, 0},
           "homology: two components, no higher homology");
  if (!rep.all_ok) throw CertificateFailure("tiny-m2r2 reproduction failed");
  std::cout << "tiny-m2r2: all checks passed\n";
}

void repro_example_3_2(const Options& opt) {
  std::cout << "example-3-2: the 9-vertex projective and skeleta triples\n";
  Reporter rep;
  const Family proj = projective_triple_family();
  const SkeletaFamily skel = skeleta_triple_family();

  const auto cert_proj = decide_collectively_unavoidable(proj, 2);
  const auto cert_skel = decide_collectively_unavoidable(skel.family, 2);
  rep.line(cert_proj.verdict && cert_proj.method == DecisionMethod::Clique,
           "projective triple unavoidable (no 3-clique in the Kneser graph)");
  rep.line(collectively_unavoidable_bruteforce(proj).unavoidable,
           "projective triple unavoidable (brute force)");
  rep.line(cert_skel.verdict, "skeleta triple unavoidable");
  rep.line(collectively_unavoidable_bruteforce(skel.family).unavoidable,
           "skeleta triple unavoidable (brute force)");

  const JoinCell cell = distinguishing_cell();
  const JoinComplex l_join = build_join(skel.family, JoinKind::Symmetrized, opt);
  const JoinComplex k_join = build_join(proj, JoinKind::Symmetrized, opt);
  rep.line(l_join.contains(cell), cell.to_string() + " lies in the skeleta join");
  rep.line(!k_join.contains(cell), cell.to_string() + " avoids the projective join");

  const MorseRun run = run_morse(proj, JoinKind::Symmetrized, opt);
  rep.line(run.matching_ok && run.acyclic, "matching valid and acyclic (" +
                                               std::to_string(run.join.size()) +
                                               " cells)");
  rep.line(run.report.violations.empty(), "all critical cells large");
  std::cout << "  certificate: "
            << (run.certificate ? std::to_string(*run.certificate) : std::string("none"))
            << "\n";
  rep.line(run.certificate == 5, "connectivity certificate equals 5 = m-r-1");
  if (!rep.all_ok) throw CertificateFailure("example-3-2 reproduction failed");
  std::cout << "example-3-2: all checks passed\n";
}

void repro_bier(const Options& opt) {
  std::cout << "bier-3-1: joins of balanced complexes with their duals (seed "
            << opt.seed << ")\n";
  Reporter rep;
  for (int m : {4, 6}) {
    const int k = (m - 2) / 2;
    Rng rng(mix_seed(opt.seed, static_cast<std::uint64_t>(m)));
    for (int trial = 0; trial < 5; ++trial) {
      const Complex K = random_balanced_complex(m, k, rng);
      const Family pair({K, K.alexander_dual()});
      const JoinComplex del = build_join(pair, JoinKind::Deleted, opt);
      const HomologyProfile prof = homology_profile(ChainComplex::from_join(del));
      bool sphere = !prof.void_complex && prof.betti_neg1 == 0;
      for (int d = 0; d <= prof.computed_top && sphere; ++d)
        sphere = prof.betti[static_cast<std::size_t>(d)] == (d == m - 2 ? 1 : 0) &&
                 prof.torsion[static_cast<std::size_t>(d)].empty();
      rep.line(sphere, "m=" + std::to_string(m) + " trial " + std::to_string(trial) +
                           ": deleted join has the homology of S^" +
                           std::to_string(m - 2));
      const MorseRun run = run_morse(pair, JoinKind::Symmetrized, opt);
      rep.line(run.matching_ok && run.acyclic && run.certificate == m - 3,
               "m=" + std::to_string(m) + " trial " + std::to_string(trial) +
                   ": symmetrized join certified " + std::to_string(m - 3) +
                   "-connected");
    }
  }
  if (!rep.all_ok) throw CertificateFailure("bier-3-1 reproduction failed");
  std::cout << "bier-3-1: all checks passed\n";
}

void repro_skeleta(const Options&) {
  std::cout << "skeleta-3-4: tight skeleta compositions and parameter arithmetic\n";
  Reporter rep;
  std::size_t families = 0;
  bool all_unavoidable = true;
  for (int r = 1; r <= 3; ++r)
    for (int m = 1; m <= 9; ++m) {
      // compositions m_1 + ... + m_r = m - r + 1 with 0 <= m_i <= m
      const int total = m - r + 1;
      if (total < 0) continue;
      std::vector<int> sizes(static_cast<std::size_t>(r), 0);
      const std::function<void(int, int)> sweep = [&](int at, int left) {
        if (at == r - 1) {
          sizes[static_cast<std::size_t>(at)] = left;
          const SkeletaFamily fam = skeleta_family(m, sizes);
          ++families;
          all_unavoidable =
              all_unavoidable &&
              fam.tight &&
              collectively_unavoidable_bruteforce(fam.family).unavoidable;
          return;
        }
        for (int take = 0; take <= left; ++take) {
          sizes[static_cast<std::size_t>(at)] = take;
          sweep(at + 1, left - take);
        }
      };
      sweep(0, total);
    }
  rep.line(all_unavoidable, std::to_string(families) +
                                " tight skeleta families, all brute-force unavoidable");

  std::size_t combos = 0;
  bool arithmetic_ok = true;
  for (int r = 2; r <= 5; ++r)
    for (int d = 1; d <= 6; ++d)
      for (int k = 0; k <= 6; ++k)
        for (int s = 0; s < r; ++s) {
          const VkfReport v = vkf_parameters(r, d, k, s);
          arithmetic_ok = arithmetic_ok && v.r_prime_power && v.equivalence;
          ++combos;
        }
  rep.line(arithmetic_ok, std::to_string(combos) +
                              " parameter combinations: prime-power r and the "
                              "tightness equivalence hold");
  if (!rep.all_ok) throw CertificateFailure("skeleta-3-4 reproduction failed");
  std::cout << "skeleta-3-4: all checks passed\n";
}

// ---------------------------------------------------------------------------

int dispatch(const std::string& command, const Options& opt) {
  if (command == "complex.skeleton") {
    emit(opt, complex_to_json(Complex::skeleton(opt.m, opt.c)));
  } else if (command == "complex.dual") {
    const Complex K = complex_from_json(load_json(opt.in_path));
    emit(opt, complex_to_json(K.alexander_dual()));
  } else if (command == "complex.rp2") {
    emit(opt, complex_to_json(Complex::rp2_minimal()));
  } else if (command == "complex.from-facets") {
    emit(opt, complex_to_json(complex_from_json(load_json(opt.in_path))));
  } else if (command == "family.skeleta") {
    const SkeletaFamily fam = skeleta_family(opt.m, opt.sizes);
    Json j = family_to_json(fam.family);
    j["tight"] = fam.tight;
    emit(opt, j);
  } else if (command == "family.dual-pair") {
    const Complex K = complex_from_json(load_json(opt.in_path));
    emit(opt, family_to_json(Family({K, K.alexander_dual()})));
  } else if (command == "check.balanced") {
    const Complex K = complex_from_json(load_json(opt.in_path));
    if (!opt.k) throw std::runtime_error("check balanced needs --k");
    Json j;
    j["m"] = K.ground();
    j["k"] = *opt.k;
    j["balanced"] = K.is_balanced(*opt.k);
    emit(opt, j);
    if (!j["balanced"].get<bool>())
      throw CertificateFailure("complex is not (m,k)-balanced");
  } else if (command == "check.unavoidable") {
    const Family fam = load_family(opt);
    UnavoidabilityCertificate cert;
    if (opt.method == "brute") {
      const BruteForceOutcome b = collectively_unavoidable_bruteforce(fam);
      cert.verdict = b.unavoidable;
      cert.method = DecisionMethod::Brute;
      if (!b.unavoidable) cert.witness_partition = b.witness;
    } else if (opt.method == "deficiency") {
      const std::optional<int> k = opt.k ? opt.k : common_balance_k(fam);
      if (!k) throw std::runtime_error("--method deficiency needs a balanced family");
      cert = decide_collectively_unavoidable(fam, k);
      if (cert.method == DecisionMethod::Brute)
        throw std::runtime_error("--method deficiency needs a balanced family");
    } else if (opt.method == "auto") {
      cert = decide_collectively_unavoidable(fam, opt.k);
    } else {
      throw std::runtime_error("unknown --method: " + opt.method);
    }
    emit(opt, certificate_to_json(cert));
    if (!cert.verdict)
      throw CertificateFailure("family is not collectively unavoidable");
  } else if (command == "join.deleted" || command == "join.symmetric") {
    const Family fam = load_family(opt);
    const JoinKind kind =
        command == "join.deleted" ? JoinKind::Deleted : JoinKind::Symmetrized;
    const JoinComplex J = build_join(fam, kind, opt);
    emit(opt, join_to_json(J, fam));
  } else if (command == "morse") {
    const Family fam = load_family(opt);
    const MorseRun run = run_morse(fam, parse_kind(opt.kind), opt);
    const bool monotone =
        run.acyclic && passport_monotone_check(run.join, run.field, opt.budget);
    Json j = morse_report_to_json(run.join, run.field, run.report, run.matching_ok,
                                  run.acyclic, run.certificate);
    j["passport_monotone"] = monotone;
    emit(opt, j);
    if (!opt.dot_path.empty()) {
      std::ostringstream os;
      write_hasse_dot(os, run.join, run.field);
      write_text_atomic(opt.dot_path, os.str());
    }
    if (!run.matching_ok || !run.acyclic)
      throw CertificateFailure("gradient field failed verification");
    if (!run.certificate)
      throw CertificateFailure("critical cells violate the largeness bound");
  } else if (command == "homology") {
    ChainComplex C;
    if (!opt.in_path.empty()) {
      C = ChainComplex::from_complex(complex_from_json(load_json(opt.in_path)));
    } else {
      const Family fam = load_family(opt);
      C = ChainComplex::from_join(build_join(fam, parse_kind(opt.kind), opt));
    }
    emit(opt, profile_to_json(homology_profile(C, opt.max_dim)));
    if (!opt.dump_prefix.empty()) {
      for (int d = 0; d <= C.top_dim(); ++d) {
        std::ostringstream os;
        write_boundary_triplets(os, C.boundary(d));
        write_text_atomic(opt.dump_prefix + ".d" + std::to_string(d) + ".txt",
                          os.str());
      }
    }
  } else {
    throw std::logic_error("unroutable command " + command);
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"symmetrized deleted joins: gradient matchings, exact homology, "
               "and collective unavoidability"};
  app.require_subcommand(1);
  Options opt;
  std::string command;
  std::string repro_name;

  const auto note = [&command](const std::string& name) {
    return [&command, name]() { command = name; };
  };

  auto* complex = app.add_subcommand("complex", "build and transform complexes");
  complex->require_subcommand(1);
  auto* skeleton = complex->add_subcommand("skeleton", "all subsets of [m] of cardinality <= c");
  skeleton->add_option("--m", opt.m)->required();
  skeleton->add_option("--c", opt.c)->required();
  skeleton->callback(note("complex.skeleton"));
  auto* dual = complex->add_subcommand("dual", "Alexander dual");
  dual->add_option("--in", opt.in_path)->required();
  dual->callback(note("complex.dual"));
  auto* rp2 = complex->add_subcommand("rp2", "6-vertex projective plane");
  rp2->callback(note("complex.rp2"));
  auto* fromf = complex->add_subcommand("from-facets", "downward closure of a facet list");
  fromf->add_option("--in", opt.in_path)->required();
  fromf->callback(note("complex.from-facets"));

  auto* family = app.add_subcommand("family", "assemble families");
  family->require_subcommand(1);
  auto* skeleta = family->add_subcommand("skeleta", "family of skeleta with given bounds");
  skeleta->add_option("--m", opt.m)->required();
  skeleta->add_option("--sizes", opt.sizes)->required()->delimiter(',');
  skeleta->callback(note("family.skeleta"));
  auto* dual_pair = family->add_subcommand("dual-pair", "a complex with its Alexander dual");
  dual_pair->add_option("--in", opt.in_path)->required();
  dual_pair->callback(note("family.dual-pair"));

  auto* check = app.add_subcommand("check", "decision procedures");
  check->require_subcommand(1);
  auto* balanced = check->add_subcommand("balanced", "skeleton(m,k) ⊆ K ⊆ skeleton(m,k+1)");
  balanced->add_option("--in", opt.in_path)->required();
  int k_value = 0;
  balanced->add_option("--k", k_value)->required();
  balanced->callback([&] {
    command = "check.balanced";
    opt.k = k_value;
  });
  auto* unavoid = check->add_subcommand("unavoidable", "collective r-unavoidability");
  unavoid->add_option("--family", opt.family_path)->required();
  auto* k_opt = unavoid->add_option("--k", k_value);
  unavoid->add_option("--method", opt.method)->check(CLI::IsMember({"auto", "brute", "deficiency"}));
  unavoid->callback([&, k_opt] {
    command = "check.unavoidable";
    if (k_opt->count() > 0) opt.k = k_value;
  });

  auto* join = app.add_subcommand("join", "materialize deleted joins");
  join->require_subcommand(1);
  auto* join_del = join->add_subcommand("deleted", "identity-order deleted join");
  auto* join_sym = join->add_subcommand("symmetric", "symmetrized deleted join");
  for (auto* sub : {join_del, join_sym}) {
    sub->add_option("--family", opt.family_path)->required();
    sub->add_option("--max-cells", opt.max_cells);
  }
  join_del->callback(note("join.deleted"));
  join_sym->callback(note("join.symmetric"));

  auto* morse = app.add_subcommand("morse", "gradient matching and connectivity certificate");
  morse->add_option("--family", opt.family_path)->required();
  morse->add_option("--kind", opt.kind)->check(CLI::IsMember({"deleted", "symmetric"}));
  morse->add_option("--max-cells", opt.max_cells);
  morse->add_option("--budget", opt.budget);
  morse->add_option("--emit-dot", opt.dot_path);
  morse->callback(note("morse"));

  auto* homology = app.add_subcommand("homology", "exact reduced homology");
  homology->add_option("--in", opt.in_path);
  homology->add_option("--family", opt.family_path);
  homology->add_option("--kind", opt.kind)->check(CLI::IsMember({"deleted", "symmetric"}));
  homology->add_option("--max-dim", opt.max_dim);
  homology->add_option("--max-cells", opt.max_cells);
  homology->add_option("--dump-matrices", opt.dump_prefix,
                       "write each boundary matrix as row/col/value triplets");
  homology->callback(note("homology"));

  auto* repro = app.add_subcommand("repro", "pinned end-to-end demonstrations");
  repro->add_option("name", repro_name, "tiny-m2r2 | example-3-2 | bier-3-1 | skeleta-3-4")
      ->required()
      ->check(CLI::IsMember({"tiny-m2r2", "example-3-2", "bier-3-1", "skeleta-3-4"}));
  repro->add_option("--seed", opt.seed);
  repro->callback(note("repro"));

  // --out is meaningful on every data-producing command
  for (auto* sub : {skeleton, dual, rp2, fromf, skeleta, dual_pair, balanced, unavoid,
                    join_del, join_sym, morse, homology})
    sub->add_option("--out", opt.out_path);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << e.what() << "\n";
    return kExitUsage;
  }

  try {
    if (command == "repro") {
      if (repro_name == "tiny-m2r2")
        repro_tiny(opt);
      else if (repro_name == "example-3-2")
        repro_example_3_2(opt);
      else if (repro_name == "bier-3-1")
        repro_bier(opt);
      else
        repro_skeleta(opt);
      return 0;
    }
    return dispatch(command, opt);
  } catch (const CapExceeded& e) {
    std::cerr << "cell cap: " << e.what() << "\n";
    return kExitCap;
  } catch (const CertificateFailure& e) {
    std::cerr << "certificate: " << e.what() << "\n";
    return kExitCertificate;
  } catch (const std::invalid_argument& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kExitParse;
  } catch (const std::runtime_error& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kExitParse;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kExitInternal;
  }
}
