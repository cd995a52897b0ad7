#include <doctest.h>

#include <algorithm>
#include <set>

#include "sdj/fixtures.hpp"
#include "sdj/joins.hpp"
#include "sdj/json_io.hpp"
#include "sdj/sampling.hpp"

using namespace sdj;

namespace {

using CellBlocks = std::vector<Bits>;

// Raw reference enumeration: every assignment of [m] to r blocks plus the
// remainder, membership decided per cell straight from the definition
// (some permutation places every block in its complex).
std::set<CellBlocks> join_oracle(const Family& fam, bool symmetrized) {
  const int m = fam.ground();
  const int r = fam.r();
  std::vector<int> perm_ids(static_cast<std::size_t>(r));
  std::set<CellBlocks> out;
  std::vector<int> assign(static_cast<std::size_t>(m), 0);
  while (true) {
    CellBlocks blocks(static_cast<std::size_t>(r), 0);
    bool any = false;
    for (int v = 1; v <= m; ++v)
      if (assign[static_cast<std::size_t>(v - 1)] > 0) {
        blocks[static_cast<std::size_t>(assign[static_cast<std::size_t>(v - 1)] - 1)] |=
            vertex_bit(v);
        any = true;
      }
    if (any) {
      std::vector<int> perm(static_cast<std::size_t>(r));
      for (int i = 0; i < r; ++i) perm[static_cast<std::size_t>(i)] = i;
      bool member = false;
      do {
        bool ok = true;
        for (int i = 0; i < r && ok; ++i)
          ok = fam[perm[static_cast<std::size_t>(i)]].contains(
              blocks[static_cast<std::size_t>(i)]);
        member = member || ok;
      } while (symmetrized && !member && std::next_permutation(perm.begin(), perm.end()));
      if (member) out.insert(blocks);
    }
    int at = m - 1;
    while (at >= 0 && ++assign[static_cast<std::size_t>(at)] == r + 1) {
      assign[static_cast<std::size_t>(at)] = 0;
      --at;
    }
    if (at < 0) break;
  }
  return out;
}

std::set<CellBlocks> materialized(const JoinComplex& J) {
  std::set<CellBlocks> out;
  for (std::size_t i = 0; i < J.size(); ++i) {
    const auto b = J.cell_blocks(i);
    out.insert(CellBlocks(b.begin(), b.end()));
  }
  return out;
}

}  // namespace

TEST_SUITE_BEGIN("joins");

TEST_CASE("cell basics and the dimension formula") {
  const JoinCell c(9, {VertexSet::of(9, {7, 8, 9}).bits(), VertexSet::of(9, {3, 4}).bits(),
                       VertexSet::of(9, {1, 2}).bits()});
  CHECK(c.dim() == 6);
  CHECK(c.remainder() == (vertex_bit(5) | vertex_bit(6)));
  CHECK(c.to_string() == "(789,34,12;56)");
  CHECK(c.vertex_order() == std::vector<int>{7, 8, 9, 3, 4, 1, 2});

  CHECK_THROWS_AS(JoinCell(3, {vertex_bit(1), vertex_bit(1)}), std::invalid_argument);
  CHECK_THROWS_AS(JoinCell(3, {Bits{0}, Bits{0}}), std::invalid_argument);

  Rng rng(kDefaultSeed);
  for (int trial = 0; trial < 50; ++trial) {
    const int m = 2 + static_cast<int>(rng.below(8));
    std::vector<Bits> blocks(2 + rng.below(2), 0);
    bool any = false;
    for (int v = 1; v <= m; ++v) {
      const auto slot = rng.below(blocks.size() + 1);
      if (slot > 0) {
        blocks[slot - 1] |= vertex_bit(v);
        any = true;
      }
    }
    if (!any) continue;
    const JoinCell cell(m, blocks);
    int total = 0;
    for (Bits b : blocks) total += set_card(b);
    CHECK(cell.dim() == total - 1);
    CHECK(cell.dim() == m - set_card(cell.remainder()) - 1);
  }
}

TEST_CASE("faces of a cell") {
  const JoinCell edge(2, {vertex_bit(1), vertex_bit(2)});
  const auto faces = edge.faces();
  REQUIRE(faces.size() == 2);
  CHECK(faces[0] == JoinCell(2, {Bits{0}, vertex_bit(2)}));
  CHECK(faces[1] == JoinCell(2, {vertex_bit(1), Bits{0}}));

  const JoinCell vertex(2, {vertex_bit(1), Bits{0}});
  CHECK(vertex.faces().empty());

  const JoinCell pair_block(2, {vertex_bit(1) | vertex_bit(2), Bits{0}});
  const auto pf = pair_block.faces();
  REQUIRE(pf.size() == 2);
  CHECK(pf[0] == JoinCell(2, {vertex_bit(2), Bits{0}}));
  CHECK(pf[1] == JoinCell(2, {vertex_bit(1), Bits{0}}));
}

TEST_CASE("deleted-join membership") {
  const auto skel = skeleta_triple_family().family;
  CHECK(in_deleted_join(distinguishing_cell(), skel));
  CHECK_FALSE(in_deleted_join(distinguishing_cell(), projective_triple_family()));

  const Complex pts = Complex::skeleton(2, 1);
  const Family tiny({pts, pts});
  CHECK(in_deleted_join(JoinCell(2, {vertex_bit(1), Bits{0}}), tiny));
  CHECK_THROWS_AS(in_deleted_join(JoinCell(3, {vertex_bit(1), Bits{0}}), tiny),
                  std::invalid_argument);
}

TEST_CASE("phi sets") {
  const JoinCell cell = distinguishing_cell();
  const auto phi_l = phi_set(cell, skeleta_triple_family().family);
  const std::vector<int> identity = {0, 1, 2};
  CHECK(std::find(phi_l.begin(), phi_l.end(), identity) != phi_l.end());
  CHECK(phi_set(cell, projective_triple_family()).empty());

  // lone vertex in the first block: every permutation works when every
  // member contains {1} and the empty face
  const Family tiny = tiny_point_pair_family();
  const auto all = phi_set(JoinCell(2, {vertex_bit(1), Bits{0}}), tiny);
  CHECK(all.size() == 2);
}

TEST_CASE("tiny symmetrized join, frozen") {
  const JoinComplex J = symm_deleted_join(tiny_point_pair_family());
  CHECK(J.size() == 6);
  CHECK(J.count_in_dim(0) == 4);
  CHECK(J.count_in_dim(1) == 2);
  CHECK(J.contains(JoinCell(2, {vertex_bit(1), vertex_bit(2)})));
  CHECK(J.contains(JoinCell(2, {vertex_bit(2), vertex_bit(1)})));
  CHECK(J.contains(JoinCell(2, {Bits{0}, vertex_bit(1)})));
  CHECK_FALSE(J.contains(JoinCell(2, {vertex_bit(1) | vertex_bit(2), Bits{0}})));
}

TEST_CASE("equal members make the permutation union redundant") {
  const Complex K = Complex::skeleton(4, 2);
  const Family fam({K, K});
  CHECK(materialized(deleted_join(fam)) == materialized(symm_deleted_join(fam)));
  CHECK(materialized(symm_deleted_join(fam)) == join_oracle(fam, true));
}

TEST_CASE("phi set of the lone-vertex cell has all r! permutations") {
  const Complex pts = Complex::skeleton(3, 1);
  const Family fam({pts, pts, pts});
  const auto phis = phi_set(JoinCell(3, {vertex_bit(1), 0, 0}), fam);
  CHECK(phis.size() == 6);
}

TEST_CASE("joins agree with the raw enumeration oracle") {
  Rng rng(mix_seed(kDefaultSeed, 21));
  for (int trial = 0; trial < 25; ++trial) {
    const int m = 2 + static_cast<int>(rng.below(4));  // up to 5
    const int r = 2 + static_cast<int>(rng.below(2));  // 2 or 3
    std::vector<Complex> ks;
    for (int i = 0; i < r; ++i) ks.push_back(random_complex(m, rng));
    const Family fam(std::move(ks));
    CAPTURE(trial);
    CHECK(materialized(deleted_join(fam)) == join_oracle(fam, false));
    CHECK(materialized(symm_deleted_join(fam)) == join_oracle(fam, true));
  }
}

TEST_CASE("face closure of materialized joins") {
  Rng rng(mix_seed(kDefaultSeed, 22));
  for (int trial = 0; trial < 10; ++trial) {
    const int m = 3 + static_cast<int>(rng.below(4));  // up to 6
    std::vector<Complex> ks;
    for (int i = 0; i < 2; ++i) ks.push_back(random_complex(m, rng));
    const JoinComplex J = symm_deleted_join(Family(std::move(ks)));
    for (std::size_t i = 0; i < J.size(); ++i)
      for (const JoinCell& f : J.cell(i).faces()) CHECK(J.contains(f));
  }
  // the 9-vertex fixture as a larger closure check
  const JoinComplex big = symm_deleted_join(projective_triple_family());
  std::size_t checked = 0;
  for (std::size_t i = 0; i < big.size(); i += 97) {
    for (const JoinCell& f : big.cell(i).faces()) {
      REQUIRE(big.contains(f));
      ++checked;
    }
  }
  CHECK(checked > 100);
}

TEST_CASE("symmetrized join is the union over permutations") {
  Rng rng(mix_seed(kDefaultSeed, 23));
  for (int trial = 0; trial < 12; ++trial) {
    const int m = 2 + static_cast<int>(rng.below(5));  // up to 6
    const int r = 2 + static_cast<int>(rng.below(2));
    std::vector<Complex> ks;
    for (int i = 0; i < r; ++i) ks.push_back(random_complex(m, rng));
    const Family fam(std::move(ks));

    std::set<CellBlocks> unioned;
    std::vector<int> perm(static_cast<std::size_t>(r));
    for (int i = 0; i < r; ++i) perm[static_cast<std::size_t>(i)] = i;
    do {
      // cells of DelJoin(K_{π(1)},...,K_{π(r)}) — block i sits in K_{π(i)}
      const auto cells = materialized(deleted_join(fam.permuted(perm)));
      unioned.insert(cells.begin(), cells.end());
    } while (std::next_permutation(perm.begin(), perm.end()));
    CHECK(materialized(symm_deleted_join(fam)) == unioned);
  }
}

TEST_CASE("enlarging a member never removes cells") {
  Rng rng(mix_seed(kDefaultSeed, 24));
  for (int trial = 0; trial < 10; ++trial) {
    const int m = 3 + static_cast<int>(rng.below(3));
    Complex a = random_complex(m, rng);
    const Complex b = random_complex(m, rng);
    const Family before({a, b});
    // enlarge a with one extra random facet
    std::vector<Bits> facets = a.facets();
    facets.push_back(static_cast<Bits>(rng.below(std::uint64_t{1} << m)));
    const Family after({Complex::from_facets(m, facets), b});
    const auto small_del = materialized(deleted_join(before));
    const auto big_del = materialized(deleted_join(after));
    for (const auto& cell : small_del) CHECK(big_del.count(cell) == 1);
    const auto small_sym = materialized(symm_deleted_join(before));
    const auto big_sym = materialized(symm_deleted_join(after));
    for (const auto& cell : small_sym) CHECK(big_sym.count(cell) == 1);
  }
}

TEST_CASE("the spotlighted cell separates the two 9-vertex triples") {
  const JoinComplex l_join = symm_deleted_join(skeleta_triple_family().family);
  const JoinComplex k_join = symm_deleted_join(projective_triple_family());
  CHECK(l_join.contains(distinguishing_cell()));
  CHECK_FALSE(k_join.contains(distinguishing_cell()));
}

TEST_CASE("cell cap") {
  CHECK_THROWS_AS(symm_deleted_join(tiny_point_pair_family(), 3), CapExceeded);
}

TEST_CASE("cell and family json round trips") {
  const JoinCell cell = distinguishing_cell();
  CHECK(cell_from_json(9, cell_to_json(cell)) == cell);
  const Family fam = projective_triple_family();
  const Family back = family_from_json(family_to_json(fam));
  REQUIRE(back.r() == 3);
  for (int i = 0; i < 3; ++i) CHECK(back[i] == fam[i]);
  // a cell whose stored remainder disagrees with its blocks is rejected
  Json j = cell_to_json(cell);
  j["B"] = Json::array({5});
  CHECK_THROWS(cell_from_json(9, j));
}

TEST_SUITE_END();
