#include <algorithm>
#include <bit>
#include <cstdint>
#include <unordered_map>

#include "widthforge/branch_decomposition.hpp"
#include "widthforge/errors.hpp"

namespace widthforge {
namespace {

using Mask = std::uint32_t;
constexpr int kHardCap = 26;

// Memoized cut values keyed by the side not containing the top element.
class CutTable {
 public:
  CutTable(const CutFunction& f, int s) : f_(f), s_(s), full_((Mask{1} << s) - 1), memo_(std::size_t{1} << (s - 1), -1) {}

  int operator()(Mask a) {
    Mask key = (a >> (s_ - 1)) & 1U ? full_ ^ a : a;
    std::int16_t& slot = memo_[key];
    if (slot < 0) {
      ElementSet set;
      set.set_word(0, key);
      slot = static_cast<std::int16_t>(f_.evaluate_unchecked(set));
    }
    return slot;
  }

 private:
  const CutFunction& f_;
  int s_;
  Mask full_;
  std::vector<std::int16_t> memo_;
};

struct Splits {
  // For every internal set: the part containing its lowest element.
  std::unordered_map<Mask, Mask> part;
  Mask root_part = 0;
};

BranchDecomposition build_tree(int s, const Splits& splits) {
  std::vector<std::pair<int, int>> edges;
  std::vector<int> leaf(s, -1);
  int nodes = 0;
  auto build = [&](auto&& self, Mask m) -> int {
    if (std::has_single_bit(m)) {
      int id = nodes++;
      leaf[std::countr_zero(m)] = id;
      return id;
    }
    int id = nodes++;
    Mask a = splits.part.at(m);
    edges.emplace_back(id, self(self, a));
    edges.emplace_back(id, self(self, m ^ a));
    return id;
  };
  const Mask full = (Mask{1} << s) - 1;
  int left = build(build, splits.root_part);
  int right = build(build, full ^ splits.root_part);
  edges.emplace_back(left, right);
  return BranchDecomposition(nodes, std::move(edges), std::move(leaf));
}

Splits subset_dp(int s, CutTable& f, bool prune) {
  const Mask full = (Mask{1} << s) - 1;
  std::vector<std::int16_t> w(std::size_t{1} << s, 0);
  std::vector<Mask> choice(std::size_t{1} << s, 0);
  for (Mask m = 1; m <= full; ++m) {
    if (std::has_single_bit(m)) continue;
    const Mask low = m & (~m + 1);
    const Mask rest = m ^ low;
    int best = -1;
    Mask best_key = 0, best_a = 0;
    auto consider = [&](Mask a) {
      const Mask b = m ^ a;
      int cost = f(a);
      if (prune && best >= 0 && cost > best) return;
      cost = std::max({cost, f(b), static_cast<int>(w[a]), static_cast<int>(w[b])});
      const Mask key = std::min(a, b);
      if (best < 0 || cost < best || (cost == best && key < best_key)) {
        best = cost;
        best_key = key;
        best_a = a;
      }
    };
    for (Mask sub = rest;; sub = (sub - 1) & rest) {
      if (sub != rest) consider(low | sub);
      if (sub == 0) break;
    }
    w[m] = static_cast<std::int16_t>(best);
    choice[m] = best_a;
  }
  Splits out;
  out.root_part = choice[full];
  auto collect = [&](auto&& self, Mask m) -> void {
    if (std::has_single_bit(m)) return;
    out.part[m] = choice[m];
    self(self, choice[m]);
    self(self, m ^ choice[m]);
  };
  collect(collect, choice[full]);
  collect(collect, full ^ choice[full]);
  return out;
}

// Smallest t admitting a decomposition with every cut at most t, found by a
// feasibility pass over the sets whose own cut is at most t.
Splits threshold_search(int s, CutTable& f) {
  const Mask full = (Mask{1} << s) - 1;
  int t = 0;
  for (int x = 0; x < s; ++x) t = std::max(t, f(Mask{1} << x));
  std::vector<char> feasible(std::size_t{1} << s, 0);
  while (true) {
    std::vector<std::vector<Mask>> by_size(s + 1);
    for (Mask m = 1; m < full; ++m)
      if (f(m) <= t) by_size[std::popcount(m)].push_back(m);
    std::fill(feasible.begin(), feasible.end(), 0);
    std::vector<Mask> feasible_list;
    Splits splits;
    auto find_split = [&](Mask m) -> Mask {
      const Mask low = m & (~m + 1);
      const int size = std::popcount(m);
      if ((std::size_t{1} << (size - 1)) <= feasible_list.size()) {
        const Mask rest = m ^ low;
        for (Mask sub = rest;; sub = (sub - 1) & rest) {
          const Mask a = low | sub;
          if (sub != rest && feasible[a] && feasible[m ^ a]) return a;
          if (sub == 0) break;
        }
      } else {
        for (Mask a : feasible_list) {
          if (std::popcount(a) >= size) break;
          if ((a & low) && (a & m) == a && feasible[m ^ a]) return a;
        }
      }
      return 0;
    };
    for (Mask m : by_size[1]) {
      feasible[m] = 1;
      feasible_list.push_back(m);
    }
    for (int size = 2; size < s; ++size)
      for (Mask m : by_size[size])
        if (Mask a = find_split(m)) {
          feasible[m] = 1;
          feasible_list.push_back(m);
          splits.part[m] = a;
        }
    if (Mask a = find_split(full)) {
      splits.root_part = a;
      // drop splits of sets that are not part of the witness
      Splits used;
      used.root_part = a;
      auto collect = [&](auto&& self, Mask m) -> void {
        if (std::has_single_bit(m)) return;
        used.part[m] = splits.part.at(m);
        self(self, used.part[m]);
        self(self, m ^ used.part[m]);
      };
      collect(collect, a);
      collect(collect, full ^ a);
      return used;
    }
    ++t;
  }
}

int default_cap(CutKind kind) {
  switch (kind) {
    case CutKind::mim:
    case CutKind::sim: return 16;
    case CutKind::mm:
    case CutKind::rank: return 20;
    case CutKind::eta: return 24;
  }
  return 16;
}

}  // namespace

int solver_cap(CutKind kind) { return std::min(size_cap(default_cap(kind)), kHardCap); }

WidthReport solve_branchwidth(const CutFunction& f, const SolveOptions& options) {
  const int s = f.ground_size();
  const int cap = options.cap ? std::min(*options.cap, kHardCap) : solver_cap(f.kind());
  if (s > cap) throw CapExceeded(cut_kind_name(f.kind()) + "-branch-width ground set", s, cap);
  if (s <= 1) return width_of(s == 0 ? BranchDecomposition{} : BranchDecomposition(1, {}, {0}), f);
  CutTable table(f, s);
  SolveStrategy strategy = options.strategy;
  if (strategy == SolveStrategy::automatic) strategy = s <= 14 ? SolveStrategy::subset_dp : SolveStrategy::threshold;
  Splits splits = strategy == SolveStrategy::subset_dp ? subset_dp(s, table, options.prune) : threshold_search(s, table);
  return width_of(build_tree(s, splits), f);
}

}  // namespace widthforge
