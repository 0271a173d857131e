#include "profusion/brauer_pairs.hpp"

#include <algorithm>

#include "profusion/error.hpp"
#include "profusion/group_ops.hpp"

namespace profusion {

std::string BrauerPair::to_string() const { return "(" + subgroup.describe() + ", " + idempotent.to_string() + ")"; }

BrauerPairs::BrauerPairs(PermGroup g, Field field, std::uint32_t p)
    : group_(std::move(g)), field_(std::move(field)), p_(p), sylow_(sylow_subgroup(group_, p)) {
  if (field_.characteristic() != p) throw Error(Errc::PreconditionViolated, "field characteristic differs from p");
}

const BrauerPairs::Cached& BrauerPairs::cached(const Subgroup& p) const {
  Subgroup c = centralizer(group_, p);
  auto it = cache_.find(c.elements());
  if (it != cache_.end()) return it->second;
  Cached entry;
  entry.center = std::make_unique<CommutativeAlgebra>(c, c, field_);
  entry.blocks = primitive_idempotents(*entry.center);
  return cache_.emplace(c.elements(), std::move(entry)).first->second;
}

const CommutativeAlgebra& BrauerPairs::centralizer_center(const Subgroup& p) const { return *cached(p).center; }

const std::vector<BlockIdempotent>& BrauerPairs::centralizer_blocks(const Subgroup& p) const { return cached(p).blocks; }

BrauerPair BrauerPairs::make_pair(const Subgroup& p, const AlgebraElement& e) const {
  if (!is_p_power(p.order(), p_)) throw Error(Errc::NotPSubgroup, p.describe() + " is not a p-subgroup");
  for (const auto& b : centralizer_blocks(p))
    if (b.element == e) return {p, e};
  throw Error(Errc::PreconditionViolated, "idempotent is not a block of the centralizer of " + p.describe());
}

std::vector<BrauerPair> BrauerPairs::pairs_at(const Subgroup& p) const {
  std::vector<BrauerPair> out;
  for (const auto& b : centralizer_blocks(p)) out.push_back(make_pair(p, b.element));
  return out;
}

AlgebraElement BrauerPairs::restrict_normal(const Subgroup& p, const BrauerPair& q) const {
  std::optional<AlgebraElement> found;
  std::size_t matches = 0;
  for (const auto& b : centralizer_blocks(p)) {
    bool stable = std::all_of(q.subgroup.generators().begin(), q.subgroup.generators().end(),
                              [&](Elem h) { return b.element.commutes_with(h); });
    if (!stable) continue;
    auto image = brauer_map(group_, p, q.subgroup, b.element);
    if (image * q.idempotent == q.idempotent) {
      ++matches;
      found = b.element;
    }
  }
  ensure(matches == 1, "exactly one stable idempotent lies below " + q.subgroup.describe());
  return *found;
}

bool BrauerPairs::normal_leq(const BrauerPair& a, const BrauerPair& b) const {
  if (!is_normal(a.subgroup, b.subgroup))
    throw Error(Errc::NotNormalIn, a.subgroup.describe() + " is not normal in " + b.subgroup.describe());
  bool stable = std::all_of(b.subgroup.generators().begin(), b.subgroup.generators().end(),
                            [&](Elem h) { return a.idempotent.commutes_with(h); });
  bool holds = stable && brauer_map(group_, a.subgroup, b.subgroup, a.idempotent) * b.idempotent == b.idempotent;
  ensure(holds == (restrict_normal(a.subgroup, b) == a.idempotent), "normal inclusion agrees with uniqueness");
  return holds;
}

namespace {

/// P = P_1 < N_Q(P_1) < ... < Q.
std::vector<Subgroup> normalizer_chain(const PermGroup& g, const Subgroup& p, const Subgroup& q) {
  std::vector<Subgroup> chain{p};
  while (chain.back().order() < q.order()) {
    Subgroup next = normalizer(g, chain.back()).intersect(q);
    ensure(next.order() > chain.back().order(), "normalizers grow in a p-group");
    chain.push_back(next);
  }
  return chain;
}

}  // namespace

std::optional<InclusionChain> BrauerPairs::leq(const BrauerPair& a, const BrauerPair& b) const {
  if (!b.subgroup.contains(a.subgroup))
    throw Error(Errc::NotSubgroup, a.subgroup.describe() + " is not contained in " + b.subgroup.describe());
  auto subs = normalizer_chain(group_, a.subgroup, b.subgroup);
  std::vector<BrauerPair> steps(subs.size());
  steps.back() = b;
  for (std::size_t i = subs.size() - 1; i-- > 0;) steps[i] = {subs[i], restrict_normal(subs[i], steps[i + 1])};
  if (!(steps.front().idempotent == a.idempotent)) return std::nullopt;
  return InclusionChain{std::move(steps)};
}

BrauerPair BrauerPairs::restrict_pair(const BrauerPair& q, const Subgroup& p) const {
  if (!q.subgroup.contains(p)) throw Error(Errc::NotSubgroup, p.describe() + " is not contained in " + q.subgroup.describe());
  auto subs = normalizer_chain(group_, p, q.subgroup);
  BrauerPair current = q;
  for (std::size_t i = subs.size() - 1; i-- > 0;) current = {subs[i], restrict_normal(subs[i], current)};
  return current;
}

bool BrauerPairs::chain_independent(const BrauerPair& q, const Subgroup& p) const {
  if (!q.subgroup.contains(p)) throw Error(Errc::NotSubgroup, p.describe() + " is not contained in " + q.subgroup.describe());
  std::vector<Subgroup> between;
  for (const auto& r : subgroups_of(q.subgroup))
    if (r.contains(p)) between.push_back(r);
  std::sort(between.begin(), between.end(), [](const Subgroup& x, const Subgroup& y) { return y < x; });
  std::vector<BrauerPair> restricted;
  for (const auto& r : between) {
    if (r == q.subgroup) {
      restricted.push_back(q);
      continue;
    }
    std::optional<AlgebraElement> agreed;
    for (const auto& above : restricted) {
      if (above.subgroup.order() == r.order() || !above.subgroup.contains(r) || !is_normal(r, above.subgroup)) continue;
      auto e = restrict_normal(r, above);
      if (agreed && !(*agreed == e)) return false;
      agreed = e;
    }
    ensure(agreed.has_value(), "every proper subgroup of a p-group is normal in a larger one");
    restricted.push_back({r, *agreed});
  }
  return true;
}

std::vector<BrauerPair> BrauerPairs::block_pairs(const AlgebraElement& block) const {
  std::vector<BrauerPair> out;
  for (const auto& q : subgroups_of(sylow_))
    for (const auto& f : centralizer_blocks(q)) {
      BrauerPair pair{q, f.element};
      if (restrict_pair(pair, Subgroup::trivial(group_)).idempotent == block) out.push_back(pair);
    }
  return out;
}

std::optional<Elem> BrauerPairs::pair_conjugator(const BrauerPair& a, const BrauerPair& b) const {
  if (a.subgroup.order() != b.subgroup.order()) return std::nullopt;
  for (Elem g : transporter(group_, a.subgroup, b.subgroup))
    if (a.idempotent.conjugate(g) == b.idempotent) return g;
  return std::nullopt;
}

MaximalPairs BrauerPairs::maximal_pairs(const AlgebraElement& block) const {
  auto all = block_pairs(block);
  ensure(!all.empty(), "the pair (1, b) lies below itself");
  std::size_t top = 0;
  for (const auto& pr : all) top = std::max(top, pr.subgroup.order());
  MaximalPairs out;
  for (const auto& pr : all)
    if (pr.subgroup.order() == top) out.pairs.push_back(pr);
  out.representative = out.pairs.front();
  out.all_conjugate = std::all_of(out.pairs.begin(), out.pairs.end(),
                                  [&](const BrauerPair& pr) { return pair_conjugator(out.representative, pr).has_value(); });
  std::size_t stabilizer = 0;
  const auto& rep = out.representative;
  for (Elem g : transporter(group_, rep.subgroup, rep.subgroup))
    if (rep.idempotent.conjugate(g) == rep.idempotent) ++stabilizer;
  out.orbit_size = group_.order() / stabilizer;
  return out;
}

}  // namespace profusion
