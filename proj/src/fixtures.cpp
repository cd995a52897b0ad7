#include "sdj/fixtures.hpp"

namespace sdj {

Family tiny_point_pair_family() {
  const Complex pts = Complex::skeleton(2, 1);
  return Family({pts, pts});
}

Family projective_triple_family() {
  const int m = 9;
  std::vector<Bits> k1_facets;
  const Complex triples = Complex::skeleton(m, 3);
  const Bits banned = vertex_bit(7) | vertex_bit(8) | vertex_bit(9);
  for (Bits f : triples.faces())
    if (set_card(f) == 3 && f != banned) k1_facets.push_back(f);
  const Complex k1 = Complex::from_facets(m, k1_facets);

  std::vector<Bits> k2_facets;
  const Complex rp2 = Complex::rp2_minimal();
  for (Bits f : rp2.faces())
    if (set_card(f) == 3) k2_facets.push_back(f);  // same bits inside [9]
  const Complex pairs = Complex::skeleton(m, 2);
  for (Bits f : pairs.faces())
    if (set_card(f) == 2) k2_facets.push_back(f);
  const Complex k2 = Complex::from_facets(m, k2_facets);

  return Family({k1, k2, k2});
}

SkeletaFamily skeleta_triple_family() {
  const int sizes[] = {3, 2, 2};
  return skeleta_family(9, sizes);
}

JoinCell distinguishing_cell() {
  return JoinCell(9, {VertexSet::of(9, {7, 8, 9}).bits(),
                      VertexSet::of(9, {3, 4}).bits(),
                      VertexSet::of(9, {1, 2}).bits()});
}

}  // namespace sdj
