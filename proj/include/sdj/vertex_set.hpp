#pragma once

#include <bit>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <vector>

namespace sdj {

// Subsets of the ground set [m] = {1,...,m} stored as bit masks; vertex v
// occupies bit v-1. Ground sets are capped at 30 vertices so that every
// subset fits a 32-bit word and disjointness/union tests are single ops.
using Bits = std::uint32_t;

constexpr int kMaxGround = 30;

constexpr Bits vertex_bit(int v) { return Bits{1} << (v - 1); }

constexpr Bits full_set(int m) { return m == 0 ? Bits{0} : (Bits{1} << m) - 1; }

constexpr int set_card(Bits a) { return std::popcount(a); }

constexpr bool set_contains(Bits a, int v) { return (a & vertex_bit(v)) != 0; }

constexpr bool set_subset(Bits a, Bits b) { return (a & ~b) == 0; }

// Smallest element (1-based); 0 when the set is empty.
constexpr int set_min(Bits a) { return a == 0 ? 0 : std::countr_zero(a) + 1; }

// a \ [1,t]; t may exceed the ground size.
constexpr Bits set_above(Bits a, int t) {
  if (t <= 0) return a;
  if (t >= kMaxGround) return 0;
  return a & ~full_set(t);
}

inline std::vector<int> set_members(Bits a) {
  std::vector<int> out;
  out.reserve(static_cast<std::size_t>(set_card(a)));
  while (a != 0) {
    out.push_back(std::countr_zero(a) + 1);
    a &= a - 1;
  }
  return out;
}

inline void check_ground(int m) {
  if (m < 0 || m > kMaxGround)
    throw std::invalid_argument("ground size must lie in [0," +
                                std::to_string(kMaxGround) + "], got " +
                                std::to_string(m));
}

// A subset of [1,m] together with its ground size. Immutable value type.
class VertexSet {
public:
  VertexSet() = default;

  VertexSet(int ground, Bits bits) : ground_(ground), bits_(bits) {
    check_ground(ground);
    if ((bits & ~full_set(ground)) != 0)
      throw std::invalid_argument("vertex out of ground range");
  }

  static VertexSet empty(int ground) { return VertexSet(ground, 0); }

  static VertexSet of(int ground, std::initializer_list<int> vs) {
    return of(ground, std::vector<int>(vs));
  }

  static VertexSet of(int ground, const std::vector<int>& vs) {
    check_ground(ground);
    Bits b = 0;
    for (int v : vs) {
      if (v < 1 || v > ground)
        throw std::invalid_argument("vertex " + std::to_string(v) +
                                    " outside [1," + std::to_string(ground) + "]");
      b |= vertex_bit(v);
    }
    return VertexSet(ground, b);
  }

  int ground() const { return ground_; }
  Bits bits() const { return bits_; }
  int card() const { return set_card(bits_); }
  bool is_empty() const { return bits_ == 0; }
  bool contains(int v) const { return set_contains(bits_, v); }
  bool subset_of(const VertexSet& o) const { return set_subset(bits_, o.bits_); }
  bool disjoint(const VertexSet& o) const { return (bits_ & o.bits_) == 0; }
  VertexSet complement() const { return VertexSet(ground_, full_set(ground_) & ~bits_); }
  std::vector<int> members() const { return set_members(bits_); }

  friend auto operator<=>(const VertexSet&, const VertexSet&) = default;

private:
  int ground_ = 0;
  Bits bits_ = 0;
};

inline std::string set_to_string(Bits a) {
  std::string s = "{";
  bool first = true;
  for (int v : set_members(a)) {
    if (!first) s += ",";
    s += std::to_string(v);
    first = false;
  }
  return s + "}";
}

}  // namespace sdj
