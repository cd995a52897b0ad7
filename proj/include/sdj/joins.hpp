#pragma once

#include <cstdint>
#include <limits>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "sdj/complex.hpp"

namespace sdj {

// Thrown when materialization would exceed a configured cell budget.
struct CapExceeded : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// An ordered tuple of simplicial complexes on a common ground set.
class Family {
public:
  Family() = default;
  explicit Family(std::vector<Complex> complexes);

  int r() const { return static_cast<int>(complexes_.size()); }
  int ground() const { return complexes_.front().ground(); }
  const Complex& operator[](int i) const { return complexes_[static_cast<std::size_t>(i)]; }
  const std::vector<Complex>& complexes() const { return complexes_; }

  // The family ⟨K_{pi[0]},...,K_{pi[r-1]}⟩ (0-based permutation).
  Family permuted(std::span<const int> pi) const;

private:
  std::vector<Complex> complexes_;
};

// An ordered partition (A_1,...,A_r;B) of [m]: the blocks A_i are pairwise
// disjoint, B is the leftover, and at least one block is nonempty.
class JoinCell {
public:
  JoinCell(int ground, std::vector<Bits> blocks);

  int ground() const { return ground_; }
  int r() const { return static_cast<int>(blocks_.size()); }
  Bits block(int i) const { return blocks_[static_cast<std::size_t>(i)]; }
  std::span<const Bits> blocks() const { return blocks_; }
  Bits remainder() const;
  int dim() const { return ground_ - set_card(remainder()) - 1; }

  // Vertices in block-concatenation order: A_1 ascending, then A_2, ...
  std::vector<int> vertex_order() const;

  // v must lie in the remainder / in block i respectively.
  JoinCell raised(int i, int v) const;
  // Returns nullopt when removing v would empty every block.
  std::optional<JoinCell> lowered(int i, int v) const;

  // All cells obtained by moving one element of some block to the
  // remainder (the facet relation, minus the all-empty non-cell).
  std::vector<JoinCell> faces() const;

  std::string to_string() const;

  friend bool operator==(const JoinCell&, const JoinCell&) = default;

private:
  int ground_ = 0;
  std::vector<Bits> blocks_;
};

// A_i ∈ K_i for every i (identity order).
bool in_deleted_join(const JoinCell& cell, const Family& fam);

// All permutations φ of {0,...,r-1} with A_i ∈ K_{φ(i)} for every i,
// in lexicographic order. The cell lies in the symmetrized deleted join
// iff the result is nonempty.
std::vector<std::vector<int>> phi_set(const JoinCell& cell, const Family& fam);

enum class JoinKind { Deleted, Symmetrized };

// Materialized deleted or symmetrized deleted join. Cells are stored
// grouped by dimension and canonically ordered, so cell indices are a
// stable deterministic addressing scheme.
class JoinComplex {
public:
  using CellKey = unsigned __int128;

  static JoinComplex build(const Family& fam, JoinKind kind,
                           std::size_t max_cells = kNoCap);

  int ground() const { return m_; }
  int r() const { return r_; }
  JoinKind kind() const { return kind_; }
  std::size_t size() const { return keys_.size(); }
  int max_dim() const { return static_cast<int>(offsets_.size()) - 2; }

  std::size_t count_in_dim(int d) const;
  std::size_t dim_begin(int d) const;
  std::size_t dim_end(int d) const;
  int cell_dim(std::size_t idx) const;

  JoinCell cell(std::size_t idx) const;
  std::span<const Bits> cell_blocks(std::size_t idx) const;
  Bits cell_remainder(std::size_t idx) const;

  std::optional<std::size_t> index_of(std::span<const Bits> blocks) const;
  std::optional<std::size_t> index_of(const JoinCell& c) const;
  bool contains(const JoinCell& c) const { return index_of(c).has_value(); }

  static constexpr std::size_t kNoCap = std::numeric_limits<std::size_t>::max();

private:
  CellKey key_of(std::span<const Bits> blocks) const;

  int m_ = 0, r_ = 0;
  JoinKind kind_ = JoinKind::Deleted;
  std::vector<Bits> block_data_;        // r_ words per cell
  std::vector<Bits> remainder_;         // per cell
  std::vector<CellKey> keys_;           // per cell, ascending within a dimension
  std::vector<std::size_t> offsets_;    // offsets_[d] .. offsets_[d+1] = dim-d cells
  std::vector<std::int32_t> direct_;    // key -> index when (r+1)^m is small
};

JoinComplex deleted_join(const Family& fam,
                         std::size_t max_cells = JoinComplex::kNoCap);
JoinComplex symm_deleted_join(const Family& fam,
                              std::size_t max_cells = JoinComplex::kNoCap);

}  // namespace sdj
