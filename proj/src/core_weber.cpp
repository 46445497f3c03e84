#include "corebound/core_weber.hpp"

#include <algorithm>

#include "corebound/error.hpp"

namespace corebound {

Game::Game(SetSystem system, std::vector<Rational> values) : system_(std::move(system)), values_(std::move(values)) {
  if (values_.size() != system_.size()) {
    throw Error(ErrorCode::MissingValue, "expected " + std::to_string(system_.size()) + " values, got " +
                                             std::to_string(values_.size()));
  }
  if (values_.front() != 0) throw Error(ErrorCode::MalformedDocument, "the empty coalition must have value 0");
}

Game Game::from_map(SetSystem system, const std::map<Coalition, Rational>& values) {
  const int n = system.players();
  for (const auto& [s, _] : values) {
    if (!system.contains(s)) throw Error(ErrorCode::SetNotFeasible, "value given for infeasible coalition " + s.label(n));
  }
  std::vector<Rational> ordered;
  ordered.reserve(system.size());
  for (Coalition s : system.sets()) {
    if (s.empty()) {
      ordered.emplace_back(0);
      continue;
    }
    auto it = values.find(s);
    if (it == values.end()) throw Error(ErrorCode::MissingValue, "no value for coalition " + s.label(n));
    ordered.push_back(it->second);
  }
  return Game(std::move(system), std::move(ordered));
}

const Rational& Game::value(Coalition s) const {
  auto idx = system_.index_of(s);
  if (!idx) throw Error(ErrorCode::SetNotFeasible, s.label(players()) + " is not in the set system");
  return values_[*idx];
}

namespace {

RationalVector indicator(int n, Coalition s) {
  RationalVector row = RationalVector::Zero(n);
  for (int p : s.players()) row[p] = 1;
  return row;
}

}  // namespace

HPolyhedron<Rational> build_restricted_core(const Game& v, const NormalCollection& nc) {
  const SetSystem& f = v.system();
  const int n = f.players();
  for (Coalition s : nc.sets) {
    if (!f.contains(s)) throw Error(ErrorCode::SetNotFeasible, s.label(n) + " is not in the set system");
  }
  HPolyhedron<Rational> core(n);
  auto is_normal = [&nc](Coalition s) { return std::find(nc.sets.begin(), nc.sets.end(), s) != nc.sets.end(); };
  for (Coalition s : f.sets()) {
    if (s.empty() || s == f.grand() || is_normal(s)) continue;
    core.add_inequality(indicator(n, s), v.value(s));
  }
  for (Coalition s : nc.sets) {
    if (s.empty() || s == f.grand()) continue;
    core.add_equality(indicator(n, s), v.value(s));
  }
  core.add_equality(indicator(n, f.grand()), v.value(f.grand()));
  return core;
}

MarginalVector marginal_vector(const Game& v, const ChainOfSets& chain) {
  if (!chain.has_unit_steps()) {
    throw Error(ErrorCode::ChainNotRegularSteps, "marginal vectors need a chain adding one player per step");
  }
  MarginalVector out{chain, RationalVector::Zero(v.players())};
  for (std::size_t k = 1; k < chain.sets.size(); ++k) {
    const Coalition added = chain.sets[k] - chain.sets[k - 1];
    out.payoff[added.players().front()] = v.value(chain.sets[k]) - v.value(chain.sets[k - 1]);
  }
  return out;
}

VRepresentation<Rational> restricted_weber(const Game& v, const NormalCollection& nc) {
  if (!nc.is_nested()) throw Error(ErrorCode::CollectionNotNested, "the normal collection is not a chain");
  const auto chains = maximal_chains_through(v.system(), nc.sets);
  if (chains.empty()) throw Error(ErrorCode::NoRestrictedChain, "no maximal chain contains every normal set");
  VRepresentation<Rational> out;
  out.dim = v.players();
  for (const auto& chain : chains) out.vertices.push_back(marginal_vector(v, chain).payoff);
  std::sort(out.vertices.begin(), out.vertices.end(), lex_less<Rational>);
  out.vertices.erase(std::unique(out.vertices.begin(), out.vertices.end(), same_vector<Rational>),
                     out.vertices.end());
  return out;
}

bool is_convex(const Game& v) {
  const SetSystem& f = v.system();
  if (!is_union_intersection_closed(f)) {
    throw Error(ErrorCode::NotClosed, "convexity needs a union- and intersection-closed system");
  }
  const auto sets = f.sets();
  const auto values = v.values();
  for (std::size_t a = 0; a < sets.size(); ++a) {
    for (std::size_t b = a + 1; b < sets.size(); ++b) {
      if (v.value(sets[a] | sets[b]) + v.value(sets[a] & sets[b]) < values[a] + values[b]) return false;
    }
  }
  return true;
}

std::string_view to_string(WitnessKind kind) {
  switch (kind) {
    case WitnessKind::none: return "none";
    case WitnessKind::point: return "point";
    case WitnessKind::direction: return "direction";
  }
  return "none";
}

InclusionVerdict verify_inclusion(const Game& v, const NormalCollection& nc) {
  InclusionVerdict verdict;
  verdict.weber = restricted_weber(v, nc);
  verdict.core = dd_generators(build_restricted_core(v, nc));
  if (verdict.core.empty) {
    verdict.holds = true;
    return verdict;
  }
  if (!verdict.core.lineality.empty() || !verdict.core.rays.empty()) {
    verdict.witness = verdict.core.lineality.empty() ? verdict.core.rays.front() : verdict.core.lineality.front();
    verdict.witness_kind = WitnessKind::direction;
    return verdict;
  }
  for (const auto& x : verdict.core.vertices) {
    if (!hull_membership(x, verdict.weber)) {
      verdict.witness = x;
      verdict.witness_kind = WitnessKind::point;
      return verdict;
    }
  }
  verdict.holds = true;
  return verdict;
}

}  // namespace corebound
