#pragma once

#include <filesystem>
#include <json.hpp>
#include <optional>
#include <string>

#include "sdj/homology.hpp"
#include "sdj/joins.hpp"
#include "sdj/morse.hpp"
#include "sdj/unavoidable.hpp"

namespace sdj {

using Json = nlohmann::ordered_json;

// Complex file: {"m": <int>, "facets": [[v,...], ...]}, 1-based vertices.
// The reader closes downward; the writer emits only the inclusion-maximal
// faces, lexicographically sorted.
Json complex_to_json(const Complex& K);
Complex complex_from_json(const Json& j);

// Family file: {"m": <int>, "complexes": [<complex>, ...]}.
Json family_to_json(const Family& fam);
Family family_from_json(const Json& j);

// Cell: {"A": [[...],...], "B": [...]}.
Json cell_to_json(const JoinCell& c);
JoinCell cell_from_json(int ground, const Json& j);

// Join complex: family reference plus per-dimension cell arrays.
Json join_to_json(const JoinComplex& J, const Family& fam);

Json certificate_to_json(const UnavoidabilityCertificate& cert);

Json profile_to_json(const HomologyProfile& p);

Json morse_report_to_json(const JoinComplex& J, const GradientField& G,
                          const CriticalReport& rep, bool matching_ok,
                          bool acyclic, std::optional<int> certificate);

Json load_json(const std::filesystem::path& path);
void write_json_atomic(const std::filesystem::path& path, const Json& j);
void write_text_atomic(const std::filesystem::path& path, const std::string& text);

}  // namespace sdj
