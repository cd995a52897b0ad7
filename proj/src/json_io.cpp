#include "sdj/json_io.hpp"

#include <fstream>
#include <stdexcept>

namespace sdj {

namespace {

Json set_to_array(Bits b) {
  Json arr = Json::array();
  for (int v : set_members(b)) arr.push_back(v);
  return arr;
}

Bits set_from_array(int m, const Json& arr) {
  if (!arr.is_array()) throw std::runtime_error("expected an array of vertices");
  std::vector<int> vs;
  for (const auto& v : arr) vs.push_back(v.get<int>());
  return VertexSet::of(m, vs).bits();
}

Json bigint_to_json(const BigInt& v) {
  if (v <= std::numeric_limits<long long>::max())
    return static_cast<long long>(v);
  return v.str();
}

}  // namespace

Json complex_to_json(const Complex& K) {
  Json j;
  j["m"] = K.ground();
  Json facets = Json::array();
  for (Bits f : K.facets()) facets.push_back(set_to_array(f));
  j["facets"] = facets;
  return j;
}

Complex complex_from_json(const Json& j) {
  if (!j.contains("m") || !j.contains("facets"))
    throw std::runtime_error("complex file needs \"m\" and \"facets\"");
  const int m = j.at("m").get<int>();
  std::vector<Bits> facets;
  for (const auto& f : j.at("facets")) facets.push_back(set_from_array(m, f));
  return Complex::from_facets(m, facets);
}

Json family_to_json(const Family& fam) {
  Json j;
  j["m"] = fam.ground();
  Json ks = Json::array();
  for (const Complex& K : fam.complexes()) ks.push_back(complex_to_json(K));
  j["complexes"] = ks;
  return j;
}

Family family_from_json(const Json& j) {
  if (!j.contains("m") || !j.contains("complexes"))
    throw std::runtime_error("family file needs \"m\" and \"complexes\"");
  const int m = j.at("m").get<int>();
  std::vector<Complex> ks;
  for (const auto& kj : j.at("complexes")) {
    Complex K = complex_from_json(kj);
    if (K.ground() != m)
      throw std::runtime_error("family member ground differs from family ground");
    ks.push_back(std::move(K));
  }
  return Family(std::move(ks));
}

Json cell_to_json(const JoinCell& c) {
  Json j;
  Json blocks = Json::array();
  for (Bits b : c.blocks()) blocks.push_back(set_to_array(b));
  j["A"] = blocks;
  j["B"] = set_to_array(c.remainder());
  return j;
}

JoinCell cell_from_json(int ground, const Json& j) {
  if (!j.contains("A")) throw std::runtime_error("cell needs \"A\"");
  std::vector<Bits> blocks;
  for (const auto& b : j.at("A")) blocks.push_back(set_from_array(ground, b));
  JoinCell cell(ground, std::move(blocks));
  if (j.contains("B")) {
    const Bits rem = set_from_array(ground, j.at("B"));
    if (rem != cell.remainder())
      throw std::runtime_error("cell remainder does not match its blocks");
  }
  return cell;
}

Json join_to_json(const JoinComplex& J, const Family& fam) {
  Json j;
  j["family"] = family_to_json(fam);
  j["kind"] = J.kind() == JoinKind::Deleted ? "deleted" : "symmetric";
  j["cells"] = Json::array();
  for (int d = 0; d <= J.max_dim(); ++d) {
    Json level = Json::array();
    for (std::size_t i = J.dim_begin(d); i < J.dim_end(d); ++i)
      level.push_back(cell_to_json(J.cell(i)));
    j["cells"].push_back(level);
  }
  return j;
}

Json certificate_to_json(const UnavoidabilityCertificate& cert) {
  Json j;
  j["verdict"] = cert.verdict;
  switch (cert.method) {
    case DecisionMethod::Brute: j["method"] = "brute"; break;
    case DecisionMethod::Deficiency: j["method"] = "deficiency"; break;
    case DecisionMethod::Clique: j["method"] = "clique"; break;
  }
  if (cert.method != DecisionMethod::Brute) j["d"] = cert.d;
  if (cert.witness_partition) {
    Json parts = Json::array();
    for (Bits b : *cert.witness_partition) parts.push_back(set_to_array(b));
    j["witness"] = parts;
  } else if (cert.witness_clique) {
    Json members = Json::array();
    for (const auto& [part, set] : cert.witness_clique->members) {
      Json entry;
      entry["part"] = part + 1;  // 1-based in files
      entry["set"] = set_to_array(set);
      members.push_back(entry);
    }
    j["witness"] = members;
  } else {
    j["witness"] = nullptr;
  }
  return j;
}

Json profile_to_json(const HomologyProfile& p) {
  Json j;
  j["empty"] = p.void_complex;
  Json betti = Json::array();
  for (long long b : p.betti) betti.push_back(b);
  j["betti"] = betti;
  Json torsion = Json::array();
  for (const auto& level : p.torsion) {
    Json t = Json::array();
    for (const BigInt& v : level) t.push_back(bigint_to_json(v));
    torsion.push_back(t);
  }
  j["torsion"] = torsion;
  return j;
}

Json morse_report_to_json(const JoinComplex& J, const GradientField& G,
                          const CriticalReport& rep, bool matching_ok,
                          bool acyclic, std::optional<int> certificate) {
  Json j;
  j["m"] = J.ground();
  j["r"] = J.r();
  j["cells"] = J.size();
  j["pairs"] = G.pairs.size();
  j["matching_valid"] = matching_ok;
  j["acyclic"] = acyclic;
  Json crit;
  crit["base"] = rep.base ? cell_to_json(J.cell(*rep.base)) : Json(nullptr);
  Json large = Json::array();
  for (std::uint32_t c : rep.large) large.push_back(cell_to_json(J.cell(c)));
  crit["large"] = large;
  Json violations = Json::array();
  for (std::uint32_t c : rep.violations) violations.push_back(cell_to_json(J.cell(c)));
  crit["violations"] = violations;
  j["critical"] = crit;
  if (certificate && *certificate != kContractible)
    j["certificate"] = *certificate;
  else if (certificate)
    j["certificate"] = "contractible";
  else
    j["certificate"] = nullptr;
  return j;
}

Json load_json(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path.string());
  Json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw std::runtime_error("malformed JSON in " + path.string() + ": " + e.what());
  }
  return j;
}

void write_text_atomic(const std::filesystem::path& path, const std::string& text) {
  const std::filesystem::path tmp = path.string() + ".tmp";
  {
    std::ofstream out(tmp);
    if (!out) throw std::runtime_error("cannot write " + tmp.string());
    out << text;
  }
  std::filesystem::rename(tmp, path);
}

void write_json_atomic(const std::filesystem::path& path, const Json& j) {
  write_text_atomic(path, j.dump(2) + "\n");
}

}  // namespace sdj
