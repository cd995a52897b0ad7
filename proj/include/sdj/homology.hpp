#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <iosfwd>
#include <vector>

#include "sdj/complex.hpp"
#include "sdj/joins.hpp"

namespace sdj {

using BigInt = boost::multiprecision::cpp_int;

// Integer matrix stored by columns; boundary matrices only ever hold ±1
// at build time, arithmetic during reduction is arbitrary precision.
struct BoundaryMatrix {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<std::vector<std::pair<std::uint32_t, std::int8_t>>> columns;
};

// Augmented chain complex: dimension -1 carries the empty simplex whenever
// the underlying complex is nonempty, so all homology below is reduced.
class ChainComplex {
public:
  static ChainComplex from_complex(const Complex& K);
  static ChainComplex from_join(const JoinComplex& J);

  bool empty() const { return counts_.empty(); }
  int top_dim() const { return static_cast<int>(counts_.size()) - 2; }
  std::size_t cells_in_dim(int d) const;           // d from -1
  const BoundaryMatrix& boundary(int d) const;     // ∂_d, d in [0, top_dim]

  bool verify_dd_zero() const;

private:
  std::vector<std::size_t> counts_;        // counts_[d+1] = #cells of dim d
  std::vector<BoundaryMatrix> boundaries_; // boundaries_[d] = ∂_d
};

struct SnfSummary {
  std::size_t rank = 0;
  std::vector<BigInt> nontrivial_factors;  // invariant factors > 1, in chain order
};

SnfSummary smith_normal_form_summary(const BoundaryMatrix& mat);

struct HomologyProfile {
  bool void_complex = false;
  long long betti_neg1 = 0;                 // reduced rank in dimension -1
  std::vector<long long> betti;             // betti[d], d = 0..computed_top
  std::vector<std::vector<BigInt>> torsion; // torsion[d], d = 0..computed_top
  int computed_top = -1;

  // All reduced homology vanishes in dimensions -1..c.
  bool vanishes_through(int c) const;
};

// Exact reduced Betti numbers and invariant factors. Computation can be
// truncated: dimensions 0..max_dim are reported (boundaries one above are
// still reduced, as the Betti numbers require).
HomologyProfile homology_profile(const ChainComplex& C, int max_dim = 1 << 28);

// Homological c-connectivity: reduced homology vanishes in degrees <= c.
// For c = -1 this is nonemptiness of the realization.
bool verify_connectivity_homology(const ChainComplex& C, int c);

// Alternating sum of cell counts (dims >= 0).
long long euler_characteristic(const ChainComplex& C);

// One line per entry: "row col value" (0-based indices).
void write_boundary_triplets(std::ostream& os, const BoundaryMatrix& mat);

}  // namespace sdj
