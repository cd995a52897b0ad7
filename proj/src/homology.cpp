#include "sdj/homology.hpp"

#include <algorithm>
#include <map>
#include <ostream>
#include <queue>
#include <set>
#include <stdexcept>

namespace sdj {

namespace {

BigInt big_abs(const BigInt& x) { return x < 0 ? BigInt(-x) : x; }

}  // namespace

std::size_t ChainComplex::cells_in_dim(int d) const {
  const int at = d + 1;
  if (at < 0 || at >= static_cast<int>(counts_.size())) return 0;
  return counts_[static_cast<std::size_t>(at)];
}

const BoundaryMatrix& ChainComplex::boundary(int d) const {
  return boundaries_.at(static_cast<std::size_t>(d));
}

ChainComplex ChainComplex::from_complex(const Complex& K) {
  ChainComplex C;
  if (K.is_void()) return C;
  const int top = K.max_card() - 1;
  // per-dimension bases, sorted by mask (dimension = cardinality - 1)
  std::vector<std::vector<Bits>> basis(static_cast<std::size_t>(top) + 2);
  for (Bits f : K.faces())
    basis[static_cast<std::size_t>(set_card(f))].push_back(f);

  C.counts_.resize(static_cast<std::size_t>(top) + 2);
  for (int d = -1; d <= top; ++d)
    C.counts_[static_cast<std::size_t>(d + 1)] = basis[static_cast<std::size_t>(d + 1)].size();

  C.boundaries_.resize(static_cast<std::size_t>(top) + 1);
  for (int d = 0; d <= top; ++d) {
    const auto& cells = basis[static_cast<std::size_t>(d + 1)];
    const auto& below = basis[static_cast<std::size_t>(d)];
    BoundaryMatrix& M = C.boundaries_[static_cast<std::size_t>(d)];
    M.rows = below.size();
    M.cols = cells.size();
    M.columns.resize(M.cols);
    for (std::size_t c = 0; c < cells.size(); ++c) {
      int pos = 0;
      for (int v : set_members(cells[c])) {
        const Bits sub = cells[c] & ~vertex_bit(v);
        const auto it = std::lower_bound(below.begin(), below.end(), sub);
        M.columns[c].push_back({static_cast<std::uint32_t>(it - below.begin()),
                                static_cast<std::int8_t>(pos % 2 == 0 ? 1 : -1)});
        ++pos;
      }
    }
  }
  return C;
}

ChainComplex ChainComplex::from_join(const JoinComplex& J) {
  ChainComplex C;
  if (J.size() == 0) return C;
  const int top = J.max_dim();
  C.counts_.resize(static_cast<std::size_t>(top) + 2);
  C.counts_[0] = 1;  // the empty simplex
  for (int d = 0; d <= top; ++d)
    C.counts_[static_cast<std::size_t>(d + 1)] = J.count_in_dim(d);

  C.boundaries_.resize(static_cast<std::size_t>(top) + 1);
  std::vector<Bits> buf(static_cast<std::size_t>(J.r()));
  for (int d = 0; d <= top; ++d) {
    BoundaryMatrix& M = C.boundaries_[static_cast<std::size_t>(d)];
    M.rows = C.counts_[static_cast<std::size_t>(d)];
    M.cols = C.counts_[static_cast<std::size_t>(d + 1)];
    M.columns.resize(M.cols);
    const std::size_t lo = J.dim_begin(d);
    for (std::size_t idx = lo; idx < J.dim_end(d); ++idx) {
      auto& col = M.columns[idx - lo];
      if (d == 0) {
        col.push_back({0, 1});
        continue;
      }
      const auto blocks = J.cell_blocks(idx);
      // vertices in block-concatenation order; deleting position q flips sign
      int pos = 0;
      for (int i = 0; i < J.r(); ++i) {
        for (int v : set_members(blocks[static_cast<std::size_t>(i)])) {
          std::copy(blocks.begin(), blocks.end(), buf.begin());
          buf[static_cast<std::size_t>(i)] &= ~vertex_bit(v);
          const auto face = J.index_of(buf);
          if (!face)
            throw std::logic_error("join complex is not closed under faces");
          col.push_back({static_cast<std::uint32_t>(*face - J.dim_begin(d - 1)),
                         static_cast<std::int8_t>(pos % 2 == 0 ? 1 : -1)});
          ++pos;
        }
      }
    }
  }
  return C;
}

bool ChainComplex::verify_dd_zero() const {
  for (int d = 1; d <= top_dim(); ++d) {
    const BoundaryMatrix& hi = boundary(d);
    const BoundaryMatrix& lo = boundary(d - 1);
    for (const auto& col : hi.columns) {
      std::map<std::uint32_t, long long> acc;
      for (const auto& [row, sign] : col)
        for (const auto& [row2, sign2] : lo.columns[row])
          acc[row2] += static_cast<long long>(sign) * sign2;
      for (const auto& [row2, val] : acc)
        if (val != 0) return false;
    }
  }
  return true;
}

namespace {

// Dense Smith normal form over the integers, used on the core left after
// sparse unit-pivot elimination. Returns the diagonal (invariant factor
// chain, possibly with leading ones).
std::vector<BigInt> dense_snf(std::vector<std::vector<BigInt>> a) {
  const std::size_t rows = a.size();
  const std::size_t cols = rows == 0 ? 0 : a[0].size();
  std::vector<BigInt> diag;
  std::size_t s = 0;
  while (s < rows && s < cols) {
    // locate the minimal nonzero absolute value in the working submatrix
    std::size_t pi = s, pj = s;
    bool found = false;
    BigInt best;
    for (std::size_t i = s; i < rows; ++i)
      for (std::size_t j = s; j < cols; ++j)
        if (a[i][j] != 0) {
          BigInt v = big_abs(a[i][j]);
          if (!found || v < best) {
            best = v;
            pi = i;
            pj = j;
            found = true;
          }
        }
    if (!found) break;
    std::swap(a[s], a[pi]);
    for (std::size_t i = 0; i < rows; ++i) std::swap(a[i][s], a[i][pj]);

    bool clean = true;
    for (std::size_t i = s + 1; i < rows; ++i) {
      if (a[i][s] == 0) continue;
      const BigInt q = a[i][s] / a[s][s];
      if (q != 0)
        for (std::size_t j = s; j < cols; ++j) a[i][j] -= q * a[s][j];
      if (a[i][s] != 0) clean = false;
    }
    for (std::size_t j = s + 1; j < cols; ++j) {
      if (a[s][j] == 0) continue;
      const BigInt q = a[s][j] / a[s][s];
      if (q != 0)
        for (std::size_t i = s; i < rows; ++i) a[i][j] -= q * a[i][s];
      if (a[s][j] != 0) clean = false;
    }
    if (!clean) continue;  // remainders shrank; pick a new pivot

    // divisibility fix: a[s][s] must divide everything below-right
    bool fixed = true;
    for (std::size_t i = s + 1; i < rows && fixed; ++i)
      for (std::size_t j = s + 1; j < cols && fixed; ++j)
        if (a[i][j] % a[s][s] != 0) {
          for (std::size_t jj = s; jj < cols; ++jj) a[s][jj] += a[i][jj];
          fixed = false;
        }
    if (!fixed) continue;

    diag.push_back(big_abs(a[s][s]));
    ++s;
  }
  return diag;
}

struct SparseElim {
  std::vector<std::map<std::uint32_t, BigInt>> row;
  std::vector<std::set<std::uint32_t>> col_rows;
  std::vector<char> row_live, col_live;
  std::size_t rank = 0;

  explicit SparseElim(const BoundaryMatrix& m)
      : row(m.rows), col_rows(m.cols), row_live(m.rows, 1), col_live(m.cols, 1) {
    for (std::size_t c = 0; c < m.cols; ++c)
      for (const auto& [r, sign] : m.columns[c]) {
        row[r][static_cast<std::uint32_t>(c)] = sign;
        col_rows[c].insert(static_cast<std::uint32_t>(r));
      }
  }

  void set_entry(std::uint32_t i, std::uint32_t j, BigInt v) {
    auto it = row[i].find(j);
    if (v == 0) {
      if (it != row[i].end()) {
        row[i].erase(it);
        col_rows[j].erase(i);
      }
    } else if (it == row[i].end()) {
      row[i].emplace(j, std::move(v));
      col_rows[j].insert(i);
    } else {
      it->second = std::move(v);
    }
  }

  // Eliminate with ±1 pivots, cheapest columns first; factors stay 1 and
  // the rank grows; anything left goes to the dense core.
  void unit_phase(std::vector<std::pair<std::size_t, std::uint32_t>>& heap_storage) {
    using Entry = std::pair<std::size_t, std::uint32_t>;  // (col nnz, col)
    std::priority_queue<Entry, std::vector<Entry>, std::greater<Entry>> heap(
        std::greater<Entry>(), std::move(heap_storage));
    for (std::uint32_t j = 0; j < col_rows.size(); ++j)
      if (!col_rows[j].empty()) heap.push({col_rows[j].size(), j});

    while (!heap.empty()) {
      const auto [cnt, j] = heap.top();
      heap.pop();
      if (!col_live[j] || col_rows[j].empty()) continue;
      if (col_rows[j].size() != cnt) continue;  // stale snapshot

      // unit entry with the sparsest row
      std::uint32_t pivot_row = 0;
      std::size_t best_len = SIZE_MAX;
      for (std::uint32_t i : col_rows[j]) {
        const BigInt& v = row[i].at(j);
        if ((v == 1 || v == -1) && row[i].size() < best_len) {
          best_len = row[i].size();
          pivot_row = i;
        }
      }
      if (best_len == SIZE_MAX) continue;  // no unit here; may be re-pushed on update

      const BigInt pivot_val = row[pivot_row].at(j);
      const std::vector<std::uint32_t> victims(col_rows[j].begin(), col_rows[j].end());
      for (std::uint32_t i : victims) {
        if (i == pivot_row) continue;
        const BigInt coef = row[i].at(j) * pivot_val;  // pivot_val^2 = 1
        for (const auto& [jj, v] : row[pivot_row]) {
          auto it = row[i].find(jj);
          BigInt nv = (it == row[i].end() ? BigInt(0) : it->second) - coef * v;
          set_entry(i, jj, std::move(nv));
          if (jj != j && col_live[jj] && !col_rows[jj].empty())
            heap.push({col_rows[jj].size(), jj});
        }
      }
      // pivot row/column split off; the pivot row's remaining entries die
      // under column operations that touch no other row
      for (const auto& [jj, v] : row[pivot_row]) col_rows[jj].erase(pivot_row);
      row[pivot_row].clear();
      row_live[pivot_row] = 0;
      col_live[j] = 0;
      ++rank;
    }
  }
};

}  // namespace

SnfSummary smith_normal_form_summary(const BoundaryMatrix& mat) {
  SparseElim elim(mat);
  std::vector<std::pair<std::size_t, std::uint32_t>> storage;
  elim.unit_phase(storage);

  SnfSummary out;
  out.rank = elim.rank;

  // dense core of whatever survived
  std::vector<std::uint32_t> live_rows, live_cols;
  for (std::uint32_t i = 0; i < elim.row_live.size(); ++i)
    if (elim.row_live[i] && !elim.row[i].empty()) live_rows.push_back(i);
  std::vector<char> col_used(mat.cols, 0);
  for (std::uint32_t i : live_rows)
    for (const auto& [j, v] : elim.row[i]) col_used[j] = 1;
  for (std::uint32_t j = 0; j < mat.cols; ++j)
    if (col_used[j]) live_cols.push_back(j);
  if (!live_rows.empty()) {
    std::vector<std::vector<BigInt>> core(
        live_rows.size(), std::vector<BigInt>(live_cols.size(), 0));
    std::map<std::uint32_t, std::size_t> col_at;
    for (std::size_t j = 0; j < live_cols.size(); ++j) col_at[live_cols[j]] = j;
    for (std::size_t i = 0; i < live_rows.size(); ++i)
      for (const auto& [j, v] : elim.row[live_rows[i]]) core[i][col_at[j]] = v;
    for (const BigInt& d : dense_snf(std::move(core))) {
      if (d == 0) continue;
      ++out.rank;
      if (d > 1) out.nontrivial_factors.push_back(d);
    }
  }
  return out;
}

HomologyProfile homology_profile(const ChainComplex& C, int max_dim) {
  HomologyProfile out;
  if (C.empty()) {
    out.void_complex = true;
    return out;
  }
  const int top = C.top_dim();
  const int limit = std::min(max_dim, top);
  out.computed_top = limit;

  // ranks/factors of ∂_d for d = 0..limit+1 (zero beyond the top)
  std::vector<std::size_t> rank(static_cast<std::size_t>(std::max(limit + 2, 1)), 0);
  std::vector<std::vector<BigInt>> factors(rank.size());
  for (int d = 0; d <= limit + 1 && d <= top; ++d) {
    SnfSummary s = smith_normal_form_summary(C.boundary(d));
    rank[static_cast<std::size_t>(d)] = s.rank;
    factors[static_cast<std::size_t>(d)] = std::move(s.nontrivial_factors);
  }

  const auto rank_at = [&](int d) -> long long {
    if (d < 0 || d > top) return 0;
    return static_cast<long long>(rank[static_cast<std::size_t>(d)]);
  };

  out.betti_neg1 = static_cast<long long>(C.cells_in_dim(-1)) - rank_at(0);
  out.betti.resize(static_cast<std::size_t>(limit) + 1);
  out.torsion.resize(static_cast<std::size_t>(limit) + 1);
  for (int d = 0; d <= limit; ++d) {
    out.betti[static_cast<std::size_t>(d)] =
        static_cast<long long>(C.cells_in_dim(d)) - rank_at(d) - rank_at(d + 1);
    if (d + 1 <= top)
      out.torsion[static_cast<std::size_t>(d)] = factors[static_cast<std::size_t>(d + 1)];
  }
  return out;
}

bool HomologyProfile::vanishes_through(int c) const {
  if (void_complex) return false;
  if (betti_neg1 != 0) return false;
  if (c > computed_top) return false;
  for (int d = 0; d <= c; ++d) {
    if (betti[static_cast<std::size_t>(d)] != 0) return false;
    if (!torsion[static_cast<std::size_t>(d)].empty()) return false;
  }
  return true;
}

bool verify_connectivity_homology(const ChainComplex& C, int c) {
  if (c < -1) throw std::invalid_argument("connectivity degree must be >= -1");
  if (C.empty()) return false;
  return homology_profile(C, std::max(c, 0)).vanishes_through(c);
}

void write_boundary_triplets(std::ostream& os, const BoundaryMatrix& mat) {
  for (std::size_t c = 0; c < mat.cols; ++c)
    for (const auto& [row, sign] : mat.columns[c])
      os << row << " " << c << " " << static_cast<int>(sign) << "\n";
}

long long euler_characteristic(const ChainComplex& C) {
  long long chi = 0;
  for (int d = 0; d <= C.top_dim(); ++d) {
    const long long n = static_cast<long long>(C.cells_in_dim(d));
    chi += (d % 2 == 0) ? n : -n;
  }
  return chi;
}

}  // namespace sdj
