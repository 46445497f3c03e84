#include "corebound/setsystem.hpp"

#include <algorithm>
#include <deque>
#include <limits>

#include "corebound/error.hpp"

namespace corebound {

Coalition Coalition::from_labels(std::initializer_list<int> labels) {
  Mask bits = 0;
  for (int label : labels) bits |= Mask{1} << (label - 1);
  return Coalition(bits);
}

std::vector<int> Coalition::players() const {
  std::vector<int> out;
  for (Mask rest = bits_; rest != 0; rest &= rest - 1) out.push_back(std::countr_zero(rest));
  return out;
}

std::string Coalition::label(int n) const {
  if (empty()) return "{}";
  std::string out;
  const bool compact = n < 10;
  if (!compact) out += '{';
  bool first = true;
  for (int p : players()) {
    if (!compact && !first) out += ',';
    out += std::to_string(p + 1);
    first = false;
  }
  if (!compact) out += '}';
  return out;
}

PlayerUniverse::PlayerUniverse(int n) : n_(n) {
  if (n > kMaxPlayers) {
    throw Error(ErrorCode::UniverseTooLarge,
                "n = " + std::to_string(n) + " exceeds " + std::to_string(kMaxPlayers));
  }
  if (n < 1) throw Error(ErrorCode::MalformedDocument, "n must be at least 1");
}

SetSystem::SetSystem(PlayerUniverse universe, std::vector<Coalition> sets)
    : universe_(universe), sets_(std::move(sets)) {
  const Coalition grand = universe_.grand();
  for (Coalition s : sets_) {
    if (!s.is_subset_of(grand)) {
      throw Error(ErrorCode::PlayerOutOfRange,
                  "coalition uses players outside 1.." + std::to_string(universe_.size()));
    }
  }
  std::sort(sets_.begin(), sets_.end());
  if (auto dup = std::adjacent_find(sets_.begin(), sets_.end()); dup != sets_.end()) {
    throw Error(ErrorCode::DuplicateSet, "coalition " + dup->label(players()) + " listed twice");
  }
  if (sets_.empty() || !sets_.front().empty()) {
    throw Error(ErrorCode::MissingEmptySet, "the empty coalition must be listed");
  }
  if (sets_.back() != grand) {
    throw Error(ErrorCode::MissingGrandCoalition, "the grand coalition must be listed");
  }
}

bool SetSystem::contains(Coalition s) const { return std::binary_search(sets_.begin(), sets_.end(), s); }

std::optional<std::size_t> SetSystem::index_of(Coalition s) const {
  auto it = std::lower_bound(sets_.begin(), sets_.end(), s);
  if (it == sets_.end() || *it != s) return std::nullopt;
  return static_cast<std::size_t>(it - sets_.begin());
}

SetSystem power_set(int n) {
  PlayerUniverse universe(n);
  std::vector<Coalition> sets;
  sets.reserve(std::size_t{1} << n);
  for (Coalition::Mask m = 0; m < (Coalition::Mask{1} << n); ++m) sets.emplace_back(m);
  return SetSystem(universe, std::move(sets));
}

bool ChainOfSets::has_unit_steps() const {
  for (std::size_t k = 1; k < sets.size(); ++k) {
    if ((sets[k] - sets[k - 1]).size() != 1) return false;
  }
  return true;
}

std::vector<int> ChainOfSets::induced_order() const {
  std::vector<int> order;
  for (std::size_t k = 1; k < sets.size(); ++k) {
    for (int p : (sets[k] - sets[k - 1]).players()) order.push_back(p);
  }
  return order;
}

std::vector<std::vector<std::size_t>> covering_relation(const SetSystem& f) {
  const auto sets = f.sets();
  std::vector<std::vector<std::size_t>> covers(sets.size());
  for (std::size_t k = 0; k < sets.size(); ++k) {
    // Canonical order lists smaller sets first, so every set strictly between
    // sets[k] and a candidate has already been seen.
    for (std::size_t j = k + 1; j < sets.size(); ++j) {
      if (!sets[k].is_strict_subset_of(sets[j])) continue;
      const bool blocked = std::any_of(covers[k].begin(), covers[k].end(), [&](std::size_t c) {
        return sets[c].is_strict_subset_of(sets[j]);
      });
      if (!blocked) covers[k].push_back(j);
    }
  }
  return covers;
}

bool is_union_intersection_closed(const SetSystem& f) {
  const auto sets = f.sets();
  for (std::size_t a = 0; a < sets.size(); ++a) {
    for (std::size_t b = a + 1; b < sets.size(); ++b) {
      if (!f.contains(sets[a] | sets[b]) || !f.contains(sets[a] & sets[b])) return false;
    }
  }
  return true;
}

bool is_weakly_union_closed(const SetSystem& f) {
  const auto sets = f.sets();
  for (std::size_t a = 0; a < sets.size(); ++a) {
    for (std::size_t b = a + 1; b < sets.size(); ++b) {
      if (sets[a].intersects(sets[b]) && !f.contains(sets[a] | sets[b])) return false;
    }
  }
  return true;
}

namespace {

struct ChainLengths {
  int shortest;
  int longest;
};

// Shortest and longest maximal chain from the empty set to N. Maximal chains
// are exactly the paths of the covering graph.
ChainLengths chain_lengths(const SetSystem& f) {
  const auto covers = covering_relation(f);
  const std::size_t m = f.size();
  std::vector<int> shortest(m, std::numeric_limits<int>::max());
  std::vector<int> longest(m, -1);
  shortest[0] = 0;
  longest[0] = 0;
  for (std::size_t k = 0; k < m; ++k) {
    if (longest[k] < 0) continue;
    for (std::size_t j : covers[k]) {
      shortest[j] = std::min(shortest[j], shortest[k] + 1);
      longest[j] = std::max(longest[j], longest[k] + 1);
    }
  }
  return {shortest[m - 1], longest[m - 1]};
}

}  // namespace

bool is_regular(const SetSystem& f) {
  const auto [shortest, longest] = chain_lengths(f);
  return shortest == f.players() && longest == f.players();
}

int height(const SetSystem& f) { return chain_lengths(f).longest; }

StructureReport classify(const SetSystem& f) {
  StructureReport report;
  const auto [shortest, longest] = chain_lengths(f);
  report.is_regular = shortest == f.players() && longest == f.players();
  report.is_weakly_union_closed = is_weakly_union_closed(f);
  report.is_union_intersection_closed = is_union_intersection_closed(f);
  report.height = longest;
  report.closure_height = report.is_union_intersection_closed ? longest : height(closure(f));
  return report;
}

SetSystem closure(const SetSystem& f) {
  const int n = f.players();
  std::vector<bool> present(std::size_t{1} << n, false);
  std::vector<Coalition> all(f.sets().begin(), f.sets().end());
  for (Coalition s : all) present[s.bits()] = true;

  std::deque<std::size_t> pending;
  for (std::size_t k = 0; k < all.size(); ++k) pending.push_back(k);
  auto add = [&](Coalition s) {
    if (!present[s.bits()]) {
      present[s.bits()] = true;
      all.push_back(s);
      pending.push_back(all.size() - 1);
    }
  };
  while (!pending.empty()) {
    const Coalition s = all[pending.front()];
    pending.pop_front();
    // `all` grows inside the loop; sets appended later are paired when they
    // are themselves popped.
    for (std::size_t k = 0; k < all.size(); ++k) {
      add(s | all[k]);
      add(s & all[k]);
    }
  }
  return SetSystem(f.universe(), std::move(all));
}

namespace {

void collect_chains(const SetSystem& f, const std::vector<std::vector<std::size_t>>& covers,
                    std::span<const Coalition> required, std::vector<std::size_t>& path,
                    std::vector<ChainOfSets>& out) {
  const auto sets = f.sets();
  const std::size_t last = path.back();
  if (last == sets.size() - 1) {
    ChainOfSets chain;
    for (std::size_t k : path) chain.sets.push_back(sets[k]);
    const bool through_all = std::all_of(required.begin(), required.end(), [&](Coalition r) {
      return std::find(chain.sets.begin(), chain.sets.end(), r) != chain.sets.end();
    });
    if (through_all) out.push_back(std::move(chain));
    return;
  }
  for (std::size_t next : covers[last]) {
    const Coalition t = sets[next];
    const bool comparable = std::all_of(required.begin(), required.end(), [&](Coalition r) {
      return t.is_subset_of(r) || r.is_subset_of(t);
    });
    if (!comparable) continue;
    path.push_back(next);
    collect_chains(f, covers, required, path, out);
    path.pop_back();
  }
}

}  // namespace

std::vector<ChainOfSets> maximal_chains(const SetSystem& f) { return maximal_chains_through(f, {}); }

std::vector<ChainOfSets> maximal_chains_through(const SetSystem& f,
                                                std::span<const Coalition> required) {
  const auto covers = covering_relation(f);
  std::vector<ChainOfSets> out;
  std::vector<std::size_t> path{0};
  collect_chains(f, covers, required, path, out);
  return out;
}

}  // namespace corebound
