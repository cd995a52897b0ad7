#pragma once

#include "sdj/joins.hpp"
#include "sdj/unavoidable.hpp"

namespace sdj {

// m=2 pair of point complexes <skeleton(2,1), skeleton(2,1)>: every value
// along the pipeline is small enough to check by hand.
Family tiny_point_pair_family();

// m=9 triple: K_1 carries every 3-set except {7,8,9}; K_2 = K_3 carry all
// 2-sets plus the triangles of the 6-vertex projective plane.
Family projective_triple_family();

// m=9 skeleta triple with cardinality bounds (3,2,2).
SkeletaFamily skeleta_triple_family();

// ({7,8,9},{3,4},{1,2};{5,6}) — lies in the symmetrized deleted join of
// the skeleta triple but not of the projective triple.
JoinCell distinguishing_cell();

}  // namespace sdj
