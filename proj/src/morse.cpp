#include "sdj/morse.hpp"

#include <algorithm>
#include <numeric>
#include <ostream>
#include <stdexcept>

namespace sdj {

namespace {

void passport_into(int ground, std::span<const Bits> blocks, int* out) {
  Bits used = 0;
  for (Bits b : blocks) used |= b;
  const Bits rem = full_set(ground) & ~used;
  int prev = 0;
  for (std::size_t i = 0; i < blocks.size(); ++i) {
    if (prev == kNoEntry) {
      out[i] = kNoEntry;
      continue;
    }
    const Bits avail = set_above(blocks[i] | rem, prev);
    out[i] = avail == 0 ? kNoEntry : set_min(avail);
    prev = out[i];
  }
}

}  // namespace

Passport passport_of(int ground, std::span<const Bits> blocks) {
  Passport p;
  p.entries.resize(blocks.size());
  passport_into(ground, blocks, p.entries.data());
  return p;
}

Passport passport_of(const JoinCell& cell) {
  return passport_of(cell.ground(), cell.blocks());
}

GradientField build_matching(const JoinComplex& J) {
  std::vector<std::uint32_t> order(J.size());
  std::iota(order.begin(), order.end(), 0u);
  return build_matching(J, order);
}

GradientField build_matching(const JoinComplex& J,
                             std::span<const std::uint32_t> scan_order) {
  const std::size_t n = J.size();
  const int r = J.r();
  if (scan_order.size() != n)
    throw std::invalid_argument("scan order must enumerate every cell once");

  std::vector<int> pp(n * static_cast<std::size_t>(r));
  for (std::size_t i = 0; i < n; ++i)
    passport_into(J.ground(), J.cell_blocks(i), pp.data() + i * static_cast<std::size_t>(r));

  GradientField G;
  G.mate.assign(n, -1);
  std::vector<Bits> partner(static_cast<std::size_t>(r));

  for (int k = 1; k <= r; ++k) {
    for (std::uint32_t idx : scan_order) {
      if (G.mate[idx] >= 0) continue;
      const int a = pp[static_cast<std::size_t>(idx) * r + (k - 1)];
      if (a == kNoEntry) {
        // An exhausted pivot forces B ⊆ {a_1,...,a_{k-1}}.
        if (set_card(J.cell_remainder(idx)) > k - 1)
          throw std::logic_error("cell skipped with exhausted pivot is not large");
        continue;
      }
      if (!set_contains(J.cell_remainder(idx), a)) continue;  // upper side of its pair
      const auto blocks = J.cell_blocks(idx);
      std::copy(blocks.begin(), blocks.end(), partner.begin());
      partner[static_cast<std::size_t>(k - 1)] |= vertex_bit(a);
      const auto up = J.index_of(partner);
      if (!up) continue;               // partner escapes the complex
      if (G.mate[*up] >= 0) continue;  // partner already claimed
      if (pp[*up * static_cast<std::size_t>(r) + (k - 1)] != a)
        throw std::logic_error("matched pair disagrees on the round pivot");
      G.pairs.push_back(MorsePair{idx, static_cast<std::uint32_t>(*up), k, a});
      G.mate[idx] = static_cast<std::int32_t>(*up);
      G.mate[*up] = static_cast<std::int32_t>(idx);
    }
  }

  std::sort(G.pairs.begin(), G.pairs.end(), [](const MorsePair& x, const MorsePair& y) {
    return x.step != y.step ? x.step < y.step : x.lower < y.lower;
  });
  for (std::size_t i = 0; i < n; ++i)
    if (G.mate[i] < 0) G.critical.push_back(static_cast<std::uint32_t>(i));
  return G;
}

bool verify_matching(const JoinComplex& J, const GradientField& G) {
  const std::size_t n = J.size();
  if (G.mate.size() != n) return false;
  std::vector<char> used(n, 0);
  for (const MorsePair& p : G.pairs) {
    if (p.lower >= n || p.upper >= n) return false;
    if (used[p.lower] || used[p.upper]) return false;
    used[p.lower] = used[p.upper] = 1;
    if (p.step < 1 || p.step > J.r()) return false;
    if (p.pivot < 1 || p.pivot > J.ground()) return false;
    // the upper cell is the lower cell with the pivot moved into A_step
    if (!set_contains(J.cell_remainder(p.lower), p.pivot)) return false;
    const auto lo = J.cell_blocks(p.lower);
    const auto hi = J.cell_blocks(p.upper);
    for (int i = 0; i < J.r(); ++i) {
      Bits expect = lo[static_cast<std::size_t>(i)];
      if (i == p.step - 1) expect |= vertex_bit(p.pivot);
      if (hi[static_cast<std::size_t>(i)] != expect) return false;
    }
    if (G.mate[p.lower] != static_cast<std::int32_t>(p.upper)) return false;
    if (G.mate[p.upper] != static_cast<std::int32_t>(p.lower)) return false;
  }
  for (std::uint32_t c : G.critical) {
    if (c >= n || used[c]) return false;
    used[c] = 1;
    if (G.mate[c] != -1) return false;
  }
  return std::all_of(used.begin(), used.end(), [](char u) { return u == 1; });
}

namespace {

// Arcs of the level-p path digraph: α -> γ when α is matched upward to β
// and γ is a facet of β other than α.
std::vector<std::vector<std::uint32_t>> level_arcs(const JoinComplex& J,
                                                   const GradientField& G, int p) {
  std::vector<std::vector<std::uint32_t>> adj(J.size());
  std::vector<Bits> buf(static_cast<std::size_t>(J.r()));
  for (const MorsePair& pr : G.pairs) {
    if (J.cell_dim(pr.lower) != p) continue;
    const auto hi = J.cell_blocks(pr.upper);
    for (int i = 0; i < J.r(); ++i) {
      for (int v : set_members(hi[static_cast<std::size_t>(i)])) {
        std::copy(hi.begin(), hi.end(), buf.begin());
        buf[static_cast<std::size_t>(i)] &= ~vertex_bit(v);
        const auto face = J.index_of(buf);
        if (!face || *face == pr.lower) continue;
        adj[pr.lower].push_back(static_cast<std::uint32_t>(*face));
      }
    }
  }
  return adj;
}

bool has_cycle(const std::vector<std::vector<std::uint32_t>>& adj,
               std::size_t first, std::size_t last) {
  std::vector<char> color(adj.size(), 0);  // 0 white, 1 on stack, 2 done
  std::vector<std::pair<std::uint32_t, std::size_t>> stack;
  for (std::size_t s = first; s < last; ++s) {
    if (color[s] != 0) continue;
    stack.push_back({static_cast<std::uint32_t>(s), 0});
    color[s] = 1;
    while (!stack.empty()) {
      auto& [node, child] = stack.back();
      if (child < adj[node].size()) {
        const std::uint32_t next = adj[node][child++];
        if (color[next] == 1) return true;
        if (color[next] == 0) {
          color[next] = 1;
          stack.push_back({next, 0});
        }
      } else {
        color[node] = 2;
        stack.pop_back();
      }
    }
  }
  return false;
}

}  // namespace

bool verify_acyclicity(const JoinComplex& J, const GradientField& G) {
  for (int p = 0; p <= J.max_dim(); ++p) {
    const auto adj = level_arcs(J, G, p);
    if (has_cycle(adj, J.dim_begin(p), J.dim_end(p))) return false;
  }
  return true;
}

CriticalReport critical_report(const JoinComplex& J, const GradientField& G) {
  CriticalReport rep;
  std::vector<Bits> base_blocks(static_cast<std::size_t>(J.r()), 0);
  base_blocks[0] = vertex_bit(1);
  const auto base_idx = J.index_of(base_blocks);
  for (std::uint32_t c : G.critical) {
    if (base_idx && c == *base_idx) {
      rep.base = c;
    } else if (set_card(J.cell_remainder(c)) <= J.r() - 1) {
      rep.large.push_back(c);
    } else {
      rep.violations.push_back(c);
    }
  }
  return rep;
}

std::optional<int> connectivity_lower_bound(const JoinComplex& J,
                                            const CriticalReport& report) {
  if (!report.violations.empty() || J.size() == 0) return std::nullopt;
  // Without the canonical base some other critical 0-cell exists, and with
  // no violations it is large, so the minimum below is 0 and the bound is
  // the always-true "nonempty".
  if (report.large.empty()) return kContractible;
  int lowest = std::numeric_limits<int>::max();
  for (std::uint32_t c : report.large)
    lowest = std::min(lowest, J.cell_dim(c));
  return lowest - 1;
}

bool passport_monotone_check(const JoinComplex& J, const GradientField& G,
                             std::size_t max_steps) {
  std::size_t steps = 0;
  for (int p = 0; p <= J.max_dim() && steps < max_steps; ++p) {
    const auto adj = level_arcs(J, G, p);
    for (std::size_t a = J.dim_begin(p); a < J.dim_end(p) && steps < max_steps; ++a) {
      if (adj[a].empty()) continue;
      const Passport pa = passport_of(J.ground(), J.cell_blocks(a));
      for (std::uint32_t b : adj[a]) {
        const Passport pb = passport_of(J.ground(), J.cell_blocks(b));
        if (pb > pa) return false;
        if (++steps >= max_steps) break;
      }
    }
  }
  return true;
}

void write_hasse_dot(std::ostream& os, const JoinComplex& J, const GradientField& G) {
  os << "digraph morse {\n  rankdir=BT;\n  node [shape=box, fontsize=10];\n";
  std::vector<char> is_critical(J.size(), 0);
  for (std::uint32_t c : G.critical) is_critical[c] = 1;
  for (std::size_t i = 0; i < J.size(); ++i) {
    os << "  c" << i << " [label=\"" << J.cell(i).to_string() << "\"";
    if (is_critical[i]) os << ", style=filled, fillcolor=salmon, penwidth=2";
    os << "];\n";
  }
  for (int d = 0; d <= J.max_dim(); ++d) {
    os << "  { rank=same;";
    for (std::size_t i = J.dim_begin(d); i < J.dim_end(d); ++i) os << " c" << i << ";";
    os << " }\n";
  }
  std::vector<Bits> buf(static_cast<std::size_t>(J.r()));
  for (std::size_t up = 0; up < J.size(); ++up) {
    if (J.cell_dim(up) == 0) continue;
    const auto hi = J.cell_blocks(up);
    for (int i = 0; i < J.r(); ++i) {
      for (int v : set_members(hi[static_cast<std::size_t>(i)])) {
        std::copy(hi.begin(), hi.end(), buf.begin());
        buf[static_cast<std::size_t>(i)] &= ~vertex_bit(v);
        const auto face = J.index_of(buf);
        if (!face) continue;
        const bool matched_arc =
            G.mate[up] == static_cast<std::int32_t>(*face) &&
            G.mate[*face] == static_cast<std::int32_t>(up) &&
            J.cell_dim(*face) + 1 == J.cell_dim(up);
        if (matched_arc)
          os << "  c" << *face << " -> c" << up << " [color=blue, penwidth=2];\n";
        else
          os << "  c" << up << " -> c" << *face << " [color=gray55, arrowsize=0.6];\n";
      }
    }
  }
  os << "}\n";
}

}  // namespace sdj
