#include "sdj/joins.hpp"

#include <algorithm>
#include <numeric>

namespace sdj {

namespace {

constexpr std::size_t kDirectCap = std::size_t{1} << 22;
constexpr int kMaxSymmR = 8;

std::vector<std::vector<int>> all_permutations(int r) {
  std::vector<int> p(static_cast<std::size_t>(r));
  std::iota(p.begin(), p.end(), 0);
  std::vector<std::vector<int>> out;
  do {
    out.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  return out;
}

std::string block_to_string(Bits b, int ground) {
  if (b == 0) return "-";
  std::string s;
  for (int v : set_members(b)) {
    if (!s.empty() && ground > 9) s += ".";
    s += std::to_string(v);
  }
  return s;
}

}  // namespace

Family::Family(std::vector<Complex> complexes) : complexes_(std::move(complexes)) {
  if (complexes_.empty())
    throw std::invalid_argument("a family needs at least one complex");
  const int m = complexes_.front().ground();
  for (const Complex& K : complexes_)
    if (K.ground() != m)
      throw std::invalid_argument("family members must share the ground set");
}

Family Family::permuted(std::span<const int> pi) const {
  if (static_cast<int>(pi.size()) != r())
    throw std::invalid_argument("permutation length mismatch");
  std::vector<Complex> out;
  out.reserve(complexes_.size());
  for (int i : pi) out.push_back(complexes_.at(static_cast<std::size_t>(i)));
  return Family(std::move(out));
}

JoinCell::JoinCell(int ground, std::vector<Bits> blocks)
    : ground_(ground), blocks_(std::move(blocks)) {
  check_ground(ground);
  if (blocks_.empty()) throw std::invalid_argument("a cell needs r >= 1 blocks");
  Bits seen = 0;
  for (Bits b : blocks_) {
    if ((b & ~full_set(ground_)) != 0)
      throw std::invalid_argument("block contains a vertex outside [1,m]");
    if ((b & seen) != 0) throw std::invalid_argument("blocks must be pairwise disjoint");
    seen |= b;
  }
  if (seen == 0) throw std::invalid_argument("the all-empty partition is not a cell");
}

Bits JoinCell::remainder() const {
  Bits used = 0;
  for (Bits b : blocks_) used |= b;
  return full_set(ground_) & ~used;
}

std::vector<int> JoinCell::vertex_order() const {
  std::vector<int> out;
  for (Bits b : blocks_)
    for (int v : set_members(b)) out.push_back(v);
  return out;
}

JoinCell JoinCell::raised(int i, int v) const {
  if (!set_contains(remainder(), v))
    throw std::invalid_argument("raised: vertex not in the remainder");
  std::vector<Bits> nb = blocks_;
  nb[static_cast<std::size_t>(i)] |= vertex_bit(v);
  return JoinCell(ground_, std::move(nb));
}

std::optional<JoinCell> JoinCell::lowered(int i, int v) const {
  if (!set_contains(blocks_[static_cast<std::size_t>(i)], v))
    throw std::invalid_argument("lowered: vertex not in the block");
  std::vector<Bits> nb = blocks_;
  nb[static_cast<std::size_t>(i)] &= ~vertex_bit(v);
  Bits any = 0;
  for (Bits b : nb) any |= b;
  if (any == 0) return std::nullopt;
  return JoinCell(ground_, std::move(nb));
}

std::vector<JoinCell> JoinCell::faces() const {
  std::vector<JoinCell> out;
  for (int i = 0; i < r(); ++i)
    for (int v : set_members(blocks_[static_cast<std::size_t>(i)]))
      if (auto f = lowered(i, v)) out.push_back(std::move(*f));
  return out;
}

std::string JoinCell::to_string() const {
  std::string s = "(";
  for (int i = 0; i < r(); ++i) {
    if (i > 0) s += ",";
    s += block_to_string(blocks_[static_cast<std::size_t>(i)], ground_);
  }
  s += ";";
  Bits rem = remainder();
  s += rem == 0 ? "" : block_to_string(rem, ground_);
  s += ")";
  return s;
}

bool in_deleted_join(const JoinCell& cell, const Family& fam) {
  if (cell.ground() != fam.ground())
    throw std::invalid_argument("cell/family ground mismatch");
  if (cell.r() != fam.r())
    throw std::invalid_argument("cell/family arity mismatch");
  for (int i = 0; i < fam.r(); ++i)
    if (!fam[i].contains(cell.block(i))) return false;
  return true;
}

std::vector<std::vector<int>> phi_set(const JoinCell& cell, const Family& fam) {
  if (cell.ground() != fam.ground())
    throw std::invalid_argument("cell/family ground mismatch");
  if (cell.r() != fam.r())
    throw std::invalid_argument("cell/family arity mismatch");
  std::vector<std::vector<int>> out;
  for (auto& p : all_permutations(fam.r())) {
    bool ok = true;
    for (int i = 0; i < fam.r() && ok; ++i)
      ok = fam[p[static_cast<std::size_t>(i)]].contains(cell.block(i));
    if (ok) out.push_back(p);
  }
  return out;
}

namespace {

// Depth-first enumeration of ordered partitions of [m] into r blocks plus a
// remainder, pruned by the set of permutations that can still witness
// membership. Block growth only shrinks that set (the complexes are
// downward closed), so a dead prefix has no live completions.
struct JoinBuilder {
  const Family& fam;
  int m, r;
  std::size_t max_cells;
  std::vector<std::vector<int>> perms;
  std::size_t words;
  std::vector<std::uint64_t> alive;  // (m+1) rows of `words` words
  std::vector<Bits> blocks;
  std::vector<Bits> out_blocks;
  std::vector<Bits> out_remainder;

  JoinBuilder(const Family& f, JoinKind kind, std::size_t cap)
      : fam(f), m(f.ground()), r(f.r()), max_cells(cap) {
    if (kind == JoinKind::Symmetrized) {
      if (r > kMaxSymmR)
        throw std::invalid_argument("symmetrized join is limited to r <= 8");
      perms = all_permutations(r);
    } else {
      perms.emplace_back(r);
      std::iota(perms.back().begin(), perms.back().end(), 0);
    }
    words = (perms.size() + 63) / 64;
    alive.assign(static_cast<std::size_t>(m + 1) * words, 0);
    blocks.assign(static_cast<std::size_t>(r), 0);
    // Root viability: all blocks are empty, so φ survives iff every
    // complex contains ∅ (void members admit nothing).
    for (std::size_t p = 0; p < perms.size(); ++p) {
      bool ok = true;
      for (int i = 0; i < r && ok; ++i)
        ok = fam[perms[p][static_cast<std::size_t>(i)]].contains(Bits{0});
      if (ok) alive[p / 64] |= std::uint64_t{1} << (p % 64);
    }
  }

  std::uint64_t* row(int depth) { return alive.data() + static_cast<std::size_t>(depth) * words; }

  bool any_alive(const std::uint64_t* w) const {
    for (std::size_t i = 0; i < words; ++i)
      if (w[i] != 0) return true;
    return false;
  }

  void emit() {
    if (out_remainder.size() >= max_cells)
      throw CapExceeded("cell budget exceeded while materializing a join");
    Bits used = 0;
    for (Bits b : blocks) used |= b;
    if (used == 0) return;  // the empty simplex is not a cell
    out_blocks.insert(out_blocks.end(), blocks.begin(), blocks.end());
    out_remainder.push_back(full_set(m) & ~used);
  }

  void walk(int v) {
    if (v > m) {
      emit();
      return;
    }
    const std::uint64_t* cur = row(v - 1);
    std::uint64_t* next = row(v);
    // remainder branch: viability unchanged
    walk_into_remainder(v, cur);
    for (int i = 0; i < r; ++i) {
      Bits grown = blocks[static_cast<std::size_t>(i)] | vertex_bit(v);
      bool any = false;
      for (std::size_t w = 0; w < words; ++w) {
        std::uint64_t bitsw = cur[w];
        std::uint64_t keep = 0;
        while (bitsw != 0) {
          const int b = std::countr_zero(bitsw);
          bitsw &= bitsw - 1;
          const std::size_t p = w * 64 + static_cast<std::size_t>(b);
          if (fam[perms[p][static_cast<std::size_t>(i)]].contains(grown))
            keep |= std::uint64_t{1} << b;
        }
        next[w] = keep;
        any = any || keep != 0;
      }
      if (!any) continue;
      blocks[static_cast<std::size_t>(i)] = grown;
      walk(v + 1);
      blocks[static_cast<std::size_t>(i)] &= ~vertex_bit(v);
    }
  }

  void walk_into_remainder(int v, const std::uint64_t* cur) {
    std::uint64_t* next = row(v);
    std::copy(cur, cur + words, next);
    walk(v + 1);
  }
};

}  // namespace

JoinComplex JoinComplex::build(const Family& fam, JoinKind kind, std::size_t max_cells) {
  JoinBuilder builder(fam, kind, max_cells);
  if (builder.any_alive(builder.row(0))) builder.walk(1);

  JoinComplex J;
  J.m_ = fam.ground();
  J.r_ = fam.r();
  J.kind_ = kind;

  const std::size_t n = builder.out_remainder.size();
  const std::size_t r = static_cast<std::size_t>(J.r_);

  // Group by dimension, preserving the ascending-key enumeration order.
  std::vector<std::size_t> counts(static_cast<std::size_t>(J.m_) + 1, 0);
  for (std::size_t c = 0; c < n; ++c)
    ++counts[static_cast<std::size_t>(J.m_ - set_card(builder.out_remainder[c]) - 1)];
  int top = -1;
  for (int d = 0; d <= J.m_; ++d)
    if (counts[static_cast<std::size_t>(d)] > 0) top = d;
  J.offsets_.assign(static_cast<std::size_t>(top + 2), 0);
  for (int d = 0; d <= top; ++d)
    J.offsets_[static_cast<std::size_t>(d) + 1] =
        J.offsets_[static_cast<std::size_t>(d)] + counts[static_cast<std::size_t>(d)];

  J.block_data_.resize(n * r);
  J.remainder_.resize(n);
  J.keys_.resize(n);
  std::vector<std::size_t> cursor(J.offsets_.begin(), J.offsets_.end() - 1);
  for (std::size_t c = 0; c < n; ++c) {
    const Bits rem = builder.out_remainder[c];
    const int d = J.m_ - set_card(rem) - 1;
    const std::size_t pos = cursor[static_cast<std::size_t>(d)]++;
    J.remainder_[pos] = rem;
    std::copy(builder.out_blocks.begin() + static_cast<std::ptrdiff_t>(c * r),
              builder.out_blocks.begin() + static_cast<std::ptrdiff_t>((c + 1) * r),
              J.block_data_.begin() + static_cast<std::ptrdiff_t>(pos * r));
    J.keys_[pos] = J.key_of(std::span<const Bits>(&J.block_data_[pos * r], r));
  }

  // Direct key->index table when the raw assignment space is small.
  long double raw = 1;
  for (int v = 0; v < J.m_; ++v) raw *= static_cast<long double>(J.r_ + 1);
  if (raw <= static_cast<long double>(kDirectCap)) {
    J.direct_.assign(static_cast<std::size_t>(raw), -1);
    for (std::size_t i = 0; i < n; ++i)
      J.direct_[static_cast<std::size_t>(J.keys_[i])] = static_cast<std::int32_t>(i);
  }
  return J;
}

JoinComplex::CellKey JoinComplex::key_of(std::span<const Bits> blocks) const {
  CellKey key = 0;
  const auto radix = static_cast<CellKey>(r_ + 1);
  for (int v = 1; v <= m_; ++v) {
    unsigned digit = 0;
    for (int i = 0; i < r_; ++i)
      if (set_contains(blocks[static_cast<std::size_t>(i)], v)) {
        digit = static_cast<unsigned>(i + 1);
        break;
      }
    key = key * radix + digit;
  }
  return key;
}

std::size_t JoinComplex::count_in_dim(int d) const {
  if (d < 0 || d > max_dim()) return 0;
  return offsets_[static_cast<std::size_t>(d) + 1] - offsets_[static_cast<std::size_t>(d)];
}

std::size_t JoinComplex::dim_begin(int d) const {
  if (d < 0 || d > max_dim()) return keys_.size();
  return offsets_[static_cast<std::size_t>(d)];
}

std::size_t JoinComplex::dim_end(int d) const {
  if (d < 0 || d > max_dim()) return keys_.size();
  return offsets_[static_cast<std::size_t>(d) + 1];
}

int JoinComplex::cell_dim(std::size_t idx) const {
  return m_ - set_card(remainder_[idx]) - 1;
}

JoinCell JoinComplex::cell(std::size_t idx) const {
  auto b = cell_blocks(idx);
  return JoinCell(m_, std::vector<Bits>(b.begin(), b.end()));
}

std::span<const Bits> JoinComplex::cell_blocks(std::size_t idx) const {
  return {block_data_.data() + idx * static_cast<std::size_t>(r_),
          static_cast<std::size_t>(r_)};
}

Bits JoinComplex::cell_remainder(std::size_t idx) const { return remainder_[idx]; }

std::optional<std::size_t> JoinComplex::index_of(std::span<const Bits> blocks) const {
  if (static_cast<int>(blocks.size()) != r_) return std::nullopt;
  int card = 0;
  Bits seen = 0;
  for (Bits b : blocks) {
    if ((b & seen) != 0 || (b & ~full_set(m_)) != 0) return std::nullopt;
    seen |= b;
    card += set_card(b);
  }
  if (card == 0) return std::nullopt;
  const CellKey key = key_of(blocks);
  if (!direct_.empty()) {
    const std::int32_t at = direct_[static_cast<std::size_t>(key)];
    return at < 0 ? std::nullopt : std::optional<std::size_t>(static_cast<std::size_t>(at));
  }
  const int d = card - 1;
  if (d > max_dim()) return std::nullopt;
  const auto first = keys_.begin() + static_cast<std::ptrdiff_t>(dim_begin(d));
  const auto last = keys_.begin() + static_cast<std::ptrdiff_t>(dim_end(d));
  const auto it = std::lower_bound(first, last, key);
  if (it == last || *it != key) return std::nullopt;
  return static_cast<std::size_t>(it - keys_.begin());
}

std::optional<std::size_t> JoinComplex::index_of(const JoinCell& c) const {
  if (c.ground() != m_) return std::nullopt;
  return index_of(c.blocks());
}

JoinComplex deleted_join(const Family& fam, std::size_t max_cells) {
  return JoinComplex::build(fam, JoinKind::Deleted, max_cells);
}

JoinComplex symm_deleted_join(const Family& fam, std::size_t max_cells) {
  return JoinComplex::build(fam, JoinKind::Symmetrized, max_cells);
}

}  // namespace sdj
