#pragma once

#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "sdj/vertex_set.hpp"

namespace sdj {

// A simplicial complex on ground set [m]: a downward-closed family of
// subsets of [m]. The face list is kept sorted (by mask value) and a direct
// membership table is maintained for small grounds. A complex may be void
// (no faces at all), which is distinct from the complex {∅}.
class Complex {
public:
  Complex() = default;

  // All subsets of [m] with cardinality <= c.
  static Complex skeleton(int m, int c);

  // Downward closure of the given facets (∅ is always included when the
  // facet list is nonempty).
  static Complex from_facets(int m, std::span<const Bits> facets);
  static Complex from_facets(int m, const std::vector<std::vector<int>>& facets);

  // Adopts a face family that is already downward closed (checked).
  static Complex from_closed_faces(int m, std::vector<Bits> faces);

  // The complex with no faces at all.
  static Complex empty(int m);

  // The 6-vertex triangulation of the real projective plane, built as the
  // antipodal quotient of the icosahedron and validated structurally.
  static Complex rp2_minimal();

  int ground() const { return ground_; }
  bool is_void() const { return faces_.empty(); }
  std::size_t face_count() const { return faces_.size(); }
  // Faces sorted ascending by mask value; calling on a temporary hands the
  // storage over instead of a dangling reference.
  const std::vector<Bits>& faces() const& { return faces_; }
  std::vector<Bits> faces() && { return std::move(faces_); }

  bool contains(Bits face) const;
  bool contains(const VertexSet& s) const;

  // Largest face cardinality; -1 for the void complex.
  int max_card() const;

  // Number of faces of cardinality exactly c.
  std::size_t count_of_card(int c) const;

  // Inclusion-maximal faces, sorted lexicographically as vertex sequences.
  std::vector<Bits> facets() const;

  // skeleton(m,k) ⊆ K ⊆ skeleton(m,k+1); requires 0 <= k <= m-1.
  bool is_balanced(int k) const;

  // All k for which the complex is (m,k)-balanced, as an inclusive range;
  // nullopt when no such k exists.
  std::optional<std::pair<int, int>> balanced_k_range() const;

  // K° = { A ⊆ [m] : [m]\A ∉ K }. Enumerates all 2^m subsets, so the
  // ground is capped (materialization guard, not a math restriction).
  Complex alexander_dual() const;

  friend bool operator==(const Complex&, const Complex&) = default;

private:
  void build_index();

  int ground_ = 0;
  std::vector<Bits> faces_;     // sorted ascending by mask value
  std::vector<bool> member_;    // direct table, sized 2^m for small m
};

}  // namespace sdj
