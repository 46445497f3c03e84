#include "corebound/normal.hpp"

#include <algorithm>

#include "corebound/error.hpp"

namespace corebound {

std::string_view to_string(CollectionKind kind) {
  switch (kind) {
    case CollectionKind::irredundant: return "irredundant";
    case CollectionKind::weber: return "weber";
    case CollectionKind::grabisch_xie: return "grabisch_xie";
    case CollectionKind::custom: return "custom";
  }
  return "custom";
}

CollectionKind parse_collection_kind(std::string_view name) {
  if (name == "irredundant") return CollectionKind::irredundant;
  if (name == "weber") return CollectionKind::weber;
  if (name == "grabisch_xie" || name == "gx") return CollectionKind::grabisch_xie;
  if (name == "custom") return CollectionKind::custom;
  throw Error(ErrorCode::MalformedDocument, "unknown collection kind '" + std::string(name) + "'");
}

bool NormalCollection::is_nested() const {
  for (std::size_t k = 1; k < sets.size(); ++k) {
    if (!sets[k - 1].is_subset_of(sets[k])) return false;
  }
  return true;
}

NormalCollection algo1_irredundant(const PlayerPoset& p) {
  NormalCollection out{{}, CollectionKind::irredundant};
  Coalition rest = Coalition::full(p.size());
  while (true) {
    rest = rest - (p.minimal_elements(rest) & p.maximal_elements(rest));
    if (rest.empty()) break;
    const Coalition bottom = p.minimal_elements(rest);
    out.sets.push_back(p.downset_of(bottom));
    rest = rest - bottom;
  }
  return out;
}

NormalCollection weber_collection(const NormalCollection& irredundant) {
  if (irredundant.kind != CollectionKind::irredundant) {
    throw Error(ErrorCode::WrongCollectionKind,
                "expected an irredundant collection, got " + std::string(to_string(irredundant.kind)));
  }
  NormalCollection out{{}, CollectionKind::weber};
  Coalition acc;
  for (Coalition s : irredundant.sets) {
    acc = acc | s;
    out.sets.push_back(acc);
  }
  return out;
}

NormalCollection grabisch_xie_collection(const PlayerPoset& p) {
  const auto levels = level_partition(p).levels;
  NormalCollection out{{}, CollectionKind::grabisch_xie};
  Coalition acc;
  for (std::size_t k = 0; k + 1 < levels.size(); ++k) {
    acc = acc | levels[k];
    out.sets.push_back(acc);
  }
  return out;
}

bool kills(const OrderedPairRay& ray, Coalition s) { return s.contains(ray.plus) && !s.contains(ray.minus); }

bool validate_normal(const SetSystem& f, const NormalCollection& candidate) {
  auto cone = build_recession_cone(f);
  const int n = f.players();
  for (Coalition s : candidate.sets) {
    if (!f.contains(s)) throw Error(ErrorCode::SetNotFeasible, s.label(n) + " is not in the set system");
    if (s == f.grand()) throw Error(ErrorCode::GrandCoalitionInCollection, "the grand coalition cannot be normal");
    RationalVector row = RationalVector::Zero(n);
    for (int p : s.players()) row[p] = 1;
    cone.add_equality(row, Rational(0));
  }
  return is_bounded(cone);
}

namespace {

bool kills_all(std::span<const OrderedPairRay> rays, const std::vector<bool>& needed, Coalition t) {
  for (std::size_t r = 0; r < rays.size(); ++r) {
    if (needed[r] && !kills(rays[r], t)) return false;
  }
  return true;
}

}  // namespace

LiftResult lift_collection(const SetSystem& f, const NormalCollection& candidate,
                           std::span<const OrderedPairRay> rays) {
  LiftResult result;
  result.collection.kind = candidate.kind;
  auto& out = result.collection.sets;
  auto push_unique = [&out](Coalition s) {
    if (std::find(out.begin(), out.end(), s) == out.end()) out.push_back(s);
  };

  for (Coalition s : candidate.sets) {
    if (s.empty()) continue;
    if (f.contains(s) && s != f.grand()) {
      push_unique(s);
      continue;
    }
    std::vector<bool> needed(rays.size());
    for (std::size_t r = 0; r < rays.size(); ++r) needed[r] = kills(rays[r], s);
    LiftStep step{s, std::nullopt, {}};
    // sets() is in canonical order, so the first hit has minimum cardinality.
    for (Coalition t : f.sets()) {
      if (t == f.grand() || !s.is_subset_of(t) || !kills_all(rays, needed, t)) continue;
      if (!step.chosen) {
        step.chosen = t;
      } else if (t.size() == step.chosen->size()) {
        step.alternatives.push_back(t);
      } else {
        break;
      }
    }
    if (step.chosen) push_unique(*step.chosen);
    result.replacements.push_back(std::move(step));
  }

  if (!validate_normal(f, result.collection)) {
    for (const auto& ray : rays) {
      const bool killed = std::any_of(out.begin(), out.end(), [&](Coalition s) { return kills(ray, s); });
      if (killed) continue;
      auto it = std::find_if(f.sets().begin(), f.sets().end(),
                             [&](Coalition t) { return t != f.grand() && kills(ray, t); });
      if (it == f.sets().end()) {
        throw Error(ErrorCode::NoFeasibleLift, "no feasible coalition removes the ray (1_" +
                                                   std::to_string(ray.plus + 1) + ", -1_" +
                                                   std::to_string(ray.minus + 1) + ")");
      }
      out.push_back(*it);
      result.appended.push_back(*it);
    }
    if (!validate_normal(f, result.collection)) {
      throw Error(ErrorCode::InternalInconsistency, "lifted collection does not bound the core");
    }
  }
  result.exceeds_candidate_size = out.size() > candidate.sets.size();
  return result;
}

}  // namespace corebound
