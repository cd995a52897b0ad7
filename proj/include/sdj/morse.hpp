#pragma once

#include <cstdint>
#include <iosfwd>
#include <limits>
#include <optional>
#include <vector>

#include "sdj/joins.hpp"

namespace sdj {

// Sentinel for an exhausted passport entry; compares above every vertex.
constexpr int kNoEntry = std::numeric_limits<int>::max();

// The stepwise minima (a_1,...,a_r) of a cell: a_i is the least element of
// (A_i ∪ B) above a_{i-1}, or the sentinel once that set is empty. Finite
// entries are strictly increasing, so std::vector's lexicographic order is
// the passport order.
struct Passport {
  std::vector<int> entries;
  friend auto operator<=>(const Passport&, const Passport&) = default;
};

Passport passport_of(int ground, std::span<const Bits> blocks);
Passport passport_of(const JoinCell& cell);

struct MorsePair {
  std::uint32_t lower = 0;
  std::uint32_t upper = 0;
  int step = 0;   // 1-based matching round
  int pivot = 0;  // the vertex toggled between B and A_step
};

// A discrete vector field on a JoinComplex, by cell index.
struct GradientField {
  std::vector<MorsePair> pairs;           // sorted by (step, lower)
  std::vector<std::uint32_t> critical;    // unmatched cells, ascending
  std::vector<std::int32_t> mate;         // mate index, or -1 when critical

  bool is_matched(std::size_t idx) const { return mate[idx] >= 0; }
};

// Runs the stepwise pivot matching: on round k every still-unmatched cell
// whose k-th passport entry lies in the remainder is paired with the cell
// obtained by moving that pivot into block k, provided the partner exists
// in the complex and is also unmatched. The result is independent of the
// scan order; an explicit order can be supplied to exercise that.
GradientField build_matching(const JoinComplex& J);
GradientField build_matching(const JoinComplex& J,
                             std::span<const std::uint32_t> scan_order);

// Checks that the field is a discrete vector field: pairs and critical
// cells partition the complex and every pair is an incident toggle.
bool verify_matching(const JoinComplex& J, const GradientField& G);

// Checks that no dimension level of the induced path digraph has a
// directed cycle (independent of any passport reasoning).
bool verify_acyclicity(const JoinComplex& J, const GradientField& G);

struct CriticalReport {
  std::optional<std::uint32_t> base;      // ({1},∅,...,∅;[m]\{1}) if critical
  std::vector<std::uint32_t> large;       // |B| <= r-1, excluding the base
  std::vector<std::uint32_t> violations;  // critical cells that are neither

  bool theorem_shape() const { return base.has_value() && violations.empty(); }
};

CriticalReport critical_report(const JoinComplex& J, const GradientField& G);

// Connectivity value for a contractible outcome (no large criticals).
constexpr int kContractible = std::numeric_limits<int>::max();

// min dim over large criticals, minus one; kContractible when only the
// base cell is critical; nullopt when violations are present or the
// complex has no cells.
std::optional<int> connectivity_lower_bound(const JoinComplex& J,
                                            const CriticalReport& report);

// Diagnostic for the non-increase of passports along gradient paths;
// checks every single path step (whose concatenations are all paths),
// up to the given budget.
bool passport_monotone_check(const JoinComplex& J, const GradientField& G,
                             std::size_t max_steps = 1'000'000);

// Modified Hasse diagram: matched arcs point upward, the remaining facet
// arcs downward, critical cells highlighted.
void write_hasse_dot(std::ostream& os, const JoinComplex& J, const GradientField& G);

}  // namespace sdj
