#include "sdj/complex.hpp"

#include <algorithm>
#include <array>
#include <set>
#include <stdexcept>
#include <unordered_set>

namespace sdj {

namespace {

constexpr int kDirectIndexMaxGround = 20;
constexpr int kDualMaxGround = 24;

// Enumerate all c-subsets of [m] via Gosper's hack.
void append_subsets_of_card(int m, int c, std::vector<Bits>& out) {
  if (c == 0) {
    out.push_back(0);
    return;
  }
  if (c > m) return;
  Bits v = full_set(c);
  const Bits limit = full_set(m);
  while (v <= limit) {
    out.push_back(v);
    Bits t = v | (v - 1);
    Bits next = (t + 1) | (((~t & (t + 1)) - 1) >> (std::countr_zero(v) + 1));
    if (next <= v) break;  // wrapped
    v = next;
  }
}

bool lex_less_as_sequence(Bits a, Bits b) {
  // Lexicographic order on the increasing vertex sequences.
  while (a != 0 && b != 0) {
    int va = set_min(a), vb = set_min(b);
    if (va != vb) return va < vb;
    a &= a - 1;
    b &= b - 1;
  }
  return a == 0 && b != 0;
}

}  // namespace

void Complex::build_index() {
  std::sort(faces_.begin(), faces_.end());
  faces_.erase(std::unique(faces_.begin(), faces_.end()), faces_.end());
  if (ground_ <= kDirectIndexMaxGround) {
    member_.assign(std::size_t{1} << ground_, false);
    for (Bits f : faces_) member_[f] = true;
  } else {
    member_.clear();
  }
}

bool Complex::contains(Bits face) const {
  if ((face & ~full_set(ground_)) != 0) return false;
  if (!member_.empty()) return member_[face];
  return std::binary_search(faces_.begin(), faces_.end(), face);
}

bool Complex::contains(const VertexSet& s) const {
  if (s.ground() != ground_)
    throw std::invalid_argument("ground mismatch in Complex::contains");
  return contains(s.bits());
}

Complex Complex::skeleton(int m, int c) {
  check_ground(m);
  if (m < 1) throw std::invalid_argument("skeleton requires m >= 1");
  if (c < 0 || c > m)
    throw std::invalid_argument("skeleton cardinality bound must lie in [0,m]");
  Complex K;
  K.ground_ = m;
  for (int j = 0; j <= c; ++j) append_subsets_of_card(m, j, K.faces_);
  K.build_index();
  return K;
}

Complex Complex::empty(int m) {
  check_ground(m);
  Complex K;
  K.ground_ = m;
  K.build_index();
  return K;
}

Complex Complex::from_facets(int m, std::span<const Bits> facets) {
  check_ground(m);
  Complex K;
  K.ground_ = m;
  std::unordered_set<Bits> seen;
  for (Bits f : facets) {
    if ((f & ~full_set(m)) != 0)
      throw std::invalid_argument("facet contains a vertex outside [1,m]");
    // every submask of f, including f and 0
    Bits s = f;
    while (true) {
      if (seen.insert(s).second) K.faces_.push_back(s);
      if (s == 0) break;
      s = (s - 1) & f;
    }
  }
  K.build_index();
  return K;
}

Complex Complex::from_facets(int m, const std::vector<std::vector<int>>& facets) {
  std::vector<Bits> masks;
  masks.reserve(facets.size());
  for (const auto& f : facets) masks.push_back(VertexSet::of(m, f).bits());
  return from_facets(m, masks);
}

Complex Complex::from_closed_faces(int m, std::vector<Bits> faces) {
  check_ground(m);
  Complex K;
  K.ground_ = m;
  K.faces_ = std::move(faces);
  K.build_index();
  for (Bits f : K.faces_) {
    if ((f & ~full_set(m)) != 0)
      throw std::invalid_argument("face contains a vertex outside [1,m]");
    Bits reduced = f;
    while (reduced != 0) {  // removing any single vertex must stay inside
      Bits sub = f & ~(reduced & -reduced);
      if (!K.contains(sub))
        throw std::invalid_argument("face family is not downward closed");
      reduced &= reduced - 1;
    }
  }
  return K;
}

int Complex::max_card() const {
  int best = -1;
  for (Bits f : faces_) best = std::max(best, set_card(f));
  return best;
}

std::size_t Complex::count_of_card(int c) const {
  std::size_t n = 0;
  for (Bits f : faces_)
    if (set_card(f) == c) ++n;
  return n;
}

std::vector<Bits> Complex::facets() const {
  std::vector<Bits> out;
  for (Bits f : faces_) {
    bool maximal = true;
    for (int v = 1; v <= ground_ && maximal; ++v)
      if (!set_contains(f, v) && contains(f | vertex_bit(v))) maximal = false;
    if (maximal) out.push_back(f);
  }
  std::sort(out.begin(), out.end(), lex_less_as_sequence);
  return out;
}

bool Complex::is_balanced(int k) const {
  if (ground_ < 1) throw std::invalid_argument("balance check needs m >= 1");
  if (k < 0 || k > ground_ - 1)
    throw std::invalid_argument("balance parameter k must lie in [0,m-1]");
  if (max_card() > k + 1) return false;
  // Downward-closed and duplicate-free, so containing all subsets of
  // cardinality <= k is a counting condition.
  std::size_t need = 0, have = 0;
  unsigned long long binom = 1;
  for (int j = 0; j <= k; ++j) {
    need += static_cast<std::size_t>(binom);
    binom = binom * static_cast<unsigned long long>(ground_ - j) /
            static_cast<unsigned long long>(j + 1);
  }
  for (Bits f : faces_)
    if (set_card(f) <= k) ++have;
  return have == need;
}

std::optional<std::pair<int, int>> Complex::balanced_k_range() const {
  if (is_void()) return std::nullopt;
  int lo = std::max(0, max_card() - 1);
  int hi = -1;
  for (int k = lo; k <= ground_ - 1; ++k) {
    if (is_balanced(k))
      hi = k;
    else
      break;
  }
  if (hi < lo) return std::nullopt;
  return std::make_pair(lo, hi);
}

Complex Complex::alexander_dual() const {
  if (ground_ > kDualMaxGround)
    throw std::invalid_argument("alexander_dual materialization capped at m = " +
                                std::to_string(kDualMaxGround));
  const Bits all = full_set(ground_);
  Complex D;
  D.ground_ = ground_;
  for (Bits a = 0; ; ++a) {
    if (!contains(all & ~a)) D.faces_.push_back(a);
    if (a == all) break;
  }
  D.build_index();
  return D;
}

Complex Complex::rp2_minimal() {
  // Icosahedron: poles N=0, S=11; upper ring u_i = 1+i, lower ring
  // l_i = 6+i (i in Z_5), rings offset by a half step.
  auto u = [](int i) { return 1 + ((i % 5) + 5) % 5; };
  auto l = [](int i) { return 6 + ((i % 5) + 5) % 5; };
  std::vector<std::array<int, 3>> tri;
  for (int i = 0; i < 5; ++i) {
    tri.push_back({0, u(i), u(i + 1)});
    tri.push_back({11, l(i), l(i + 1)});
    tri.push_back({u(i), u(i + 1), l(i)});
    tri.push_back({l(i), l(i + 1), u(i + 1)});
  }
  // Antipodal identification: N <-> S, u_i <-> l_{i+2}.
  std::array<int, 12> cls{};
  cls[0] = 1;
  cls[11] = 1;
  for (int i = 0; i < 5; ++i) {
    cls[u(i)] = 2 + i;
    cls[l(i + 2)] = 2 + i;
  }
  std::set<Bits> quotient;
  for (const auto& t : tri) {
    Bits f = 0;
    for (int v : t) f |= vertex_bit(cls[v]);
    if (set_card(f) != 3)
      throw std::logic_error("icosahedron face collapsed under the antipodal map");
    quotient.insert(f);
  }
  std::vector<Bits> facets(quotient.begin(), quotient.end());
  Complex K = from_facets(6, facets);

  // Structural validation of the quotient.
  if (K.count_of_card(3) != 10 || K.count_of_card(2) != 15 || K.count_of_card(1) != 6)
    throw std::logic_error("projective-plane quotient has wrong face counts");
  std::vector<Bits> triples;
  append_subsets_of_card(6, 3, triples);
  for (Bits t : triples) {
    bool in = K.contains(t), coin = K.contains(full_set(6) & ~t);
    if (in == coin)
      throw std::logic_error("projective-plane quotient is not self-dual");
  }
  return K;
}

}  // namespace sdj
