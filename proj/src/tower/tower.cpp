#include "profusion/tower.hpp"

#include <algorithm>
#include <functional>
#include <optional>
#include <set>

#include "profusion/error.hpp"
#include "profusion/group_ops.hpp"
#include "tower_internal.hpp"

namespace profusion {

// ---------------------------------------------------------------------------
// TowerSpec

void TowerSpec::validate() const {
  if (levels.empty()) throw Error(Errc::PreconditionViolated, "tower has no levels");
  if (maps.size() + 1 != levels.size()) throw Error(Errc::PreconditionViolated, "one map per adjacent pair of levels");
  for (std::size_t i = 0; i < maps.size(); ++i) {
    if (!maps[i].domain().same_elements(levels[i + 1]) || !maps[i].codomain().same_elements(levels[i]))
      throw Error(Errc::PreconditionViolated, "map " + std::to_string(i) + " does not connect adjacent levels");
    if (!maps[i].surjective()) throw Error(Errc::SurjectivityFailure, "map " + std::to_string(i) + " is not onto");
  }
  if (!ambient) {
    if (!projections.empty()) throw Error(Errc::PreconditionViolated, "projections without an ambient group");
    return;
  }
  if (projections.size() != levels.size()) throw Error(Errc::PreconditionViolated, "one projection per level");
  for (std::size_t i = 0; i < levels.size(); ++i) {
    if (!projections[i].domain().same_elements(*ambient) || !projections[i].codomain().same_elements(levels[i]))
      throw Error(Errc::PreconditionViolated, "projection " + std::to_string(i) + " has the wrong ends");
    if (!projections[i].surjective())
      throw Error(Errc::SurjectivityFailure, "projection " + std::to_string(i) + " is not onto");
  }
  for (std::size_t i = 0; i < maps.size(); ++i)
    if (projections[i + 1].compose(maps[i]).map() != projections[i].map())
      throw Error(Errc::PreconditionViolated, "projections do not commute with map " + std::to_string(i));
}

GroupHom TowerSpec::down(std::size_t from, std::size_t to) const {
  if (to > from || from >= levels.size()) throw Error(Errc::PreconditionViolated, "levels out of order");
  GroupHom h = GroupHom::identity(levels[from]);
  for (std::size_t i = from; i > to; --i) h = h.compose(maps[i - 1]);
  return h;
}

Subgroup TowerSpec::kernel_at(std::size_t level) const { return down(levels.size() - 1, level).kernel(); }

Subgroup TowerSpec::ambient_kernel(std::size_t level) const {
  if (!ambient) throw Error(Errc::PreconditionViolated, "tower has no ambient group");
  return projections.at(level).kernel();
}

bool TowerSpec::reaches_trivial() const { return !ambient || projections.back().kernel().is_trivial(); }

TowerSpec tower_from_chain(const PermGroup& g, const std::vector<Subgroup>& chain) {
  if (chain.empty()) throw Error(Errc::PreconditionViolated, "empty chain");
  TowerSpec t;
  t.ambient = g;
  for (std::size_t i = 0; i < chain.size(); ++i) {
    if (i > 0 && !chain[i - 1].contains(chain[i]))
      throw Error(Errc::NotAChain, "chain is not descending at " + std::to_string(i));
    auto q = quotient(g, chain[i]);
    t.levels.push_back(q.group);
    t.projections.push_back(q.projection);
  }
  for (std::size_t i = 0; i + 1 < chain.size(); ++i) t.maps.push_back(induced_hom(t.projections[i + 1], t.projections[i]));
  t.validate();
  return t;
}

// ---------------------------------------------------------------------------
// TowerContext

TowerContext::TowerContext(TowerSpec tower, Field field, std::uint32_t p)
    : tower_(std::move(tower)), field_(std::move(field)), p_(p) {
  tower_.validate();
  for (const auto& level : tower_.levels) pairs_.push_back(std::make_unique<BrauerPairs>(level, field_, p_));
  for (const auto& m : tower_.maps) steps_.emplace_back(m, field_, p_);
  for (std::size_t i = 0; i < tower_.depth(); ++i) from_deepest_.push_back(tower_.down(tower_.depth() - 1, i));
}

Subgroup TowerContext::image(const Subgroup& p, std::size_t level) const { return from_deepest_.at(level).image(p); }

std::size_t TowerContext::sylow_threshold(const Subgroup& p) const {
  std::size_t i0 = depth();
  while (i0 > 0) {
    Subgroup n = from_deepest_[i0 - 1].kernel();
    if (p.intersect(n).order() != p_part(n.order(), p_)) break;
    --i0;
  }
  ensure(i0 < depth(), "the deepest level has trivial kernel");
  return i0;
}

// ---------------------------------------------------------------------------
// Compatible sequences

bool CompatibleIdempotentSequence::equivalent(const CompatibleIdempotentSequence& other) const {
  if (!(subgroup == other.subgroup)) return false;
  std::size_t from = std::max(start, other.start);
  std::size_t end = std::min(start + idempotents.size(), other.start + other.idempotents.size());
  for (std::size_t i = from; i < end; ++i)
    if (at(i) != other.at(i)) return false;
  return true;
}

std::vector<AlgebraElement> compatible_successors(const TowerContext& ctx, const Subgroup& p, std::size_t level,
                                                  const AlgebraElement& e) {
  if (level + 1 >= ctx.depth()) throw Error(Errc::PreconditionViolated, "no level below the deepest");
  Subgroup next = ctx.image(p, level + 1);
  auto lifted = nu_minus(ctx.step(level), next, e).element;
  std::vector<AlgebraElement> out;
  for (const auto& b : ctx.pairs(level + 1).centralizer_blocks(next))
    if (!(lifted * b.element).is_zero()) out.push_back(b.element);
  return out;
}

CompatibleIdempotentSequence compatible_sequence(const TowerContext& ctx, const Subgroup& p, std::size_t level,
                                                 const AlgebraElement& seed) {
  if (level >= ctx.depth()) throw Error(Errc::SeedIncompatible, "seed level past the deepest level");
  std::size_t i0 = ctx.sylow_threshold(p);
  if (level < i0)
    throw Error(Errc::SeedIncompatible,
                "seed at level " + std::to_string(level) + " lies below the Sylow threshold " + std::to_string(i0));
  const auto& here = ctx.pairs(level).centralizer_blocks(ctx.image(p, level));
  if (std::none_of(here.begin(), here.end(), [&](const BlockIdempotent& b) { return b.element == seed; }))
    throw Error(Errc::SeedIncompatible, "seed is not a block of the centralizer at level " + std::to_string(level));
  CompatibleIdempotentSequence s{p, level, {seed}};
  for (std::size_t i = level; i + 1 < ctx.depth(); ++i) {
    auto next = compatible_successors(ctx, p, i, s.idempotents.back());
    ensure(!next.empty(), "nu_minus(e) is a nonzero sum of blocks");
    s.idempotents.push_back(next.front());
  }
  return s;
}

bool is_compatible(const TowerContext& ctx, const CompatibleIdempotentSequence& s) {
  if (s.start < ctx.sylow_threshold(s.subgroup)) return false;
  for (std::size_t i = s.start; i + 1 < s.start + s.idempotents.size(); ++i) {
    auto lifted = nu_minus(ctx.step(i), ctx.image(s.subgroup, i + 1), s.at(i)).element;
    if ((lifted * s.at(i + 1)).is_zero()) return false;
  }
  return true;
}

// ---------------------------------------------------------------------------
// Blocks along the tower

std::vector<AlgebraElement> block_sequence(const TowerContext& ctx, const TowerBlock& block) {
  if (block.level >= ctx.depth()) throw Error(Errc::PreconditionViolated, "block level past the deepest level");
  std::vector<AlgebraElement> out{block.idempotent};
  for (std::size_t i = block.level; i + 1 < ctx.depth(); ++i)
    out.push_back(lift_block(ctx.step(i), out.back()).element);
  if (block.level + 1 == ctx.depth()) {
    auto all = blocks(ctx.tower().deepest(), ctx.field());
    if (std::none_of(all.begin(), all.end(), [&](const BlockIdempotent& b) { return b.element == block.idempotent; }))
      throw Error(Errc::PreconditionViolated, "idempotent is not a block of the deepest level");
  }
  return out;
}

namespace {

/// Least level from which every block of the sequence has defect group DN_i/N_i.
std::size_t defect_threshold(const TowerContext& ctx, std::size_t first, const std::vector<AlgebraElement>& bs,
                             const Subgroup& d) {
  std::size_t i = ctx.depth();
  while (i > first) {
    const PermGroup& level = ctx.tower().levels[i - 1];
    auto found = defect_group(level, bs[i - 1 - first], ctx.prime()).defect_group;
    if (!is_conjugate(level, found, ctx.image(d, i - 1))) break;
    --i;
  }
  return i;
}

}  // namespace

TowerBlock seed_from_deepest(const TowerContext& ctx, const AlgebraElement& b) {
  const PermGroup& g = ctx.tower().deepest();
  auto all = blocks(g, ctx.field());
  if (std::none_of(all.begin(), all.end(), [&](const BlockIdempotent& x) { return x.element == b; }))
    throw Error(Errc::PreconditionViolated, "idempotent is not a block of the deepest level");
  Subgroup d = defect_group(g, b, ctx.prime()).defect_group;
  for (std::size_t s = 0; s < ctx.depth(); ++s)
    for (const auto& c : blocks(ctx.tower().levels[s], ctx.field())) {
      TowerBlock seed{s, c.element};
      auto bs = block_sequence(ctx, seed);
      if (bs.back() == b && defect_threshold(ctx, s, bs, d) == s) return seed;
    }
  ensure(false, "the deepest block seeds itself");
  return {};
}

const AlgebraElement& MaximalTruncatedPair::block_at(std::size_t level) const { return blocks.at(level - block_level); }

namespace {

struct PairSetup {
  std::vector<AlgebraElement> blocks;
  Subgroup defect;
  std::size_t i0 = 0;
  std::vector<BrauerPair> options;
};

PairSetup pair_setup(const TowerContext& ctx, const TowerBlock& block) {
  PairSetup s;
  s.blocks = block_sequence(ctx, block);
  s.defect = defect_group(ctx.tower().deepest(), s.blocks.back(), ctx.prime()).defect_group;
  s.i0 = std::max({block.level, ctx.sylow_threshold(s.defect), defect_threshold(ctx, block.level, s.blocks, s.defect)});
  const auto& bp = ctx.pairs(s.i0);
  auto bottom = bp.make_pair(Subgroup::trivial(ctx.tower().levels[s.i0]), s.blocks[s.i0 - block.level]);
  for (const auto& pr : bp.pairs_at(ctx.image(s.defect, s.i0)))
    if (bp.leq(bottom, pr)) s.options.push_back(pr);
  ensure(!s.options.empty(), "a defect group carries a maximal pair");
  return s;
}

}  // namespace

std::size_t maximal_choice_count(const TowerContext& ctx, const TowerBlock& block) {
  return pair_setup(ctx, block).options.size();
}

MaximalTruncatedPair maximal_truncated_pair(const TowerContext& ctx, const TowerBlock& block, std::size_t choice) {
  auto setup = pair_setup(ctx, block);
  if (choice >= setup.options.size())
    throw Error(Errc::PreconditionViolated, "only " + std::to_string(setup.options.size()) + " maximal pairs to choose from");
  MaximalTruncatedPair out;
  out.defect = setup.defect;
  out.i0 = setup.i0;
  out.block_level = block.level;
  out.blocks = std::move(setup.blocks);
  out.sequence = compatible_sequence(ctx, out.defect, out.i0, setup.options[choice].idempotent);
  out.maximal_at_every_level = true;
  for (std::size_t i = out.i0; i < ctx.depth(); ++i) {
    const auto& bp = ctx.pairs(i);
    const auto& b = out.block_at(i);
    BrauerPair top{ctx.image(out.defect, i), out.sequence.at(i)};
    bool maximal = top.subgroup.order() == bp.maximal_pairs(b).representative.subgroup.order() &&
                   bp.leq(bp.make_pair(Subgroup::trivial(ctx.tower().levels[i]), b), top).has_value();
    out.maximal_at_every_level = out.maximal_at_every_level && maximal;
  }
  return out;
}

Elem common_conjugator(const TowerContext& ctx, const MaximalTruncatedPair& a, const MaximalTruncatedPair& b) {
  const PermGroup& g = ctx.tower().deepest();
  std::vector<Elem> survivors(g.order());
  for (Elem x = 0; x < g.order(); ++x) survivors[x] = x;
  for (std::size_t i = std::max(a.i0, b.i0); i < ctx.depth(); ++i) {
    GroupHom down = ctx.tower().down(ctx.depth() - 1, i);
    Subgroup da = ctx.image(a.defect, i), db = ctx.image(b.defect, i);
    std::erase_if(survivors, [&](Elem x) {
      Elem y = down(x);
      return !(da.conjugate(y) == db) || a.sequence.at(i).conjugate(y) != b.sequence.at(i);
    });
    if (survivors.empty())
      throw Error(Errc::NoCommonConjugator, "transporter sets have empty intersection at level " + std::to_string(i));
  }
  return survivors.front();
}

// ---------------------------------------------------------------------------
// Stabilization and embedding

bool StabilizationReport::ok() const {
  return strictly_increasing && pair.maximal_at_every_level &&
         std::all_of(levels.begin(), levels.end(), [](const LevelStabilization& l) { return l.monotone; });
}

std::size_t stationary_start(const std::vector<FusionSystem>& chain, bool may_extend) {
  if (chain.empty()) throw Error(Errc::PreconditionViolated, "empty chain of systems");
  std::size_t least = chain.size() - 1;
  while (least > 0 && systems_equal(chain[least - 1], chain.back())) --least;
  if (least > 0 && least + 1 == chain.size() && !may_extend)
    throw Error(Errc::DepthInsufficient, "the chain still grows at its last step");
  return least;
}

std::size_t next_mu(std::size_t least, std::optional<std::size_t> previous, std::size_t depth, bool may_extend) {
  std::size_t mu = previous ? std::max(least, *previous + 1) : least;
  if (mu >= depth && !may_extend) throw Error(Errc::DepthInsufficient, "mu runs past the deepest level");
  return mu;
}

StabilizationReport stabilization_mu(const TowerContext& ctx, const TowerBlock& block) {
  StabilizationReport rep;
  rep.pair = maximal_truncated_pair(ctx, block);
  rep.i0 = rep.pair.i0;
  const std::size_t r = ctx.depth();
  const auto& mtp = rep.pair;
  for (std::size_t j = rep.i0; j < r; ++j)
    rep.level_systems.push_back(
        block_fusion(ctx.pairs(j), mtp.block_at(j), BrauerPair{ctx.image(mtp.defect, j), mtp.sequence.at(j)}));

  rep.strictly_increasing = true;
  for (std::size_t i = rep.i0; i < r; ++i) {
    Subgroup di = ctx.image(mtp.defect, i);
    std::vector<FusionSystem> chain;
    for (std::size_t j = i; j < r; ++j)
      chain.push_back(detail::quotient_onto(rep.level_systems[j - rep.i0], ctx.image(mtp.defect, j),
                                            ctx.tower().down(j, i), di));
    LevelStabilization ls;
    ls.level = i;
    for (std::size_t k = 0; k + 1 < chain.size(); ++k) ls.monotone = ls.monotone && is_subsystem(chain[k], chain[k + 1]);
    const bool may_extend = ctx.tower().reaches_trivial();
    try {
      ls.least = i + stationary_start(chain, may_extend);
      ls.mu = next_mu(ls.least, rep.levels.empty() ? std::nullopt : std::optional(rep.levels.back().mu), r, may_extend);
    } catch (const Error& e) {
      throw Error(e.code(), "level " + std::to_string(i) + ": " + e.what());
    }
    ls.virtual_level = ls.mu >= r;
    std::size_t at = std::min(ls.mu, r - 1) - i;
    for (std::size_t j = at; j < chain.size(); ++j)
      if (systems_equal(chain[j], chain[at])) ls.equal_levels.push_back(i + j);
    ls.morphisms = chain[at].morphism_count();
    if (!rep.levels.empty() && ls.mu <= rep.levels.back().mu) rep.strictly_increasing = false;
    rep.limit_quotients.push_back(std::move(chain[at]));
    rep.levels.push_back(std::move(ls));
  }
  return rep;
}

EmbeddingReport embedding_check(const TowerContext& ctx, const TowerBlock& block, std::size_t level) {
  auto rep = stabilization_mu(ctx, block);
  if (level < rep.i0 || level >= ctx.depth())
    throw Error(Errc::DepthInsufficient,
                "level " + std::to_string(level) + " lies outside [" + std::to_string(rep.i0) + ", depth)");
  const auto& lower = rep.level_systems[level - rep.i0];
  const auto& limit = rep.limit_quotients[level - rep.i0];
  EmbeddingReport out;
  out.level = level;
  out.contained = is_subsystem(lower, limit);
  out.equal = systems_equal(lower, limit);
  out.level_morphisms = lower.morphism_count();
  out.limit_morphisms = limit.morphism_count();
  return out;
}

// ---------------------------------------------------------------------------
// Independence of the chain

bool IndependenceReport::ok() const {
  return !common.empty() && std::all_of(common.begin(), common.end(), [](const CommonLevel& c) { return c.conjugate; });
}

namespace {

struct LevelData {
  Subgroup kernel;
  GroupHom projection;
  Subgroup defect;
  FusionSystem system;
};

std::vector<LevelData> limit_data(const TowerSpec& t, const AlgebraElement& block, const Field& field, std::uint32_t p) {
  TowerContext ctx(t, field, p);
  auto seed = seed_from_deepest(ctx, block.push_forward(t.projections.back()));
  auto rep = stabilization_mu(ctx, seed);
  std::vector<LevelData> out;
  for (std::size_t i = rep.i0; i < t.depth(); ++i)
    out.push_back({t.ambient_kernel(i), t.projections[i], ctx.image(rep.pair.defect, i), rep.limit_quotients[i - rep.i0]});
  return out;
}

/// Carries a system on d.as_group() along h onto h(d).as_group().
FusionSystem carry(const FusionSystem& f, const Subgroup& d, const GroupHom& h, const Subgroup& target) {
  std::vector<Elem> local;
  for (Elem x : d.elements()) local.push_back(target.local_index(h(x)));
  return transport(f, GroupHom::from_map(f.base(), target.as_group(), std::move(local)));
}

CommonLevel compare_level(const PermGroup& g, const LevelData& a, const LevelData& b, std::string towers) {
  CommonLevel out;
  out.kernel_order = a.kernel.order();
  out.towers = std::move(towers);
  auto canonical = quotient(g, a.kernel);
  const PermGroup& h = canonical.group;
  GroupHom ha = induced_hom(a.projection, canonical.projection);
  GroupHom hb = induced_hom(b.projection, canonical.projection);
  Subgroup da = ha.image(a.defect), db = hb.image(b.defect);
  FusionSystem fa = carry(a.system, a.defect, ha, da);
  FusionSystem fb = carry(b.system, b.defect, hb, db);
  out.identical = da == db && systems_equal(fa, fb);
  if (out.identical) {
    out.conjugate = true;
    return out;
  }
  for (Elem x = 0; x < h.order() && !out.conjugate; ++x) {
    if (!(da.conjugate(x) == db)) continue;
    GroupHom cx = GroupHom::from_map(h, h, [&] {
      std::vector<Elem> m(h.order());
      for (Elem y = 0; y < h.order(); ++y) m[y] = h.conj(y, x);
      return m;
    }());
    out.conjugate = systems_equal(carry(fa, da, cx, db), fb);
  }
  return out;
}

}  // namespace

IndependenceReport independence_check(const TowerSpec& a, const TowerSpec& b, const AlgebraElement& block,
                                      const Field& field, std::uint32_t p) {
  if (!a.ambient || !b.ambient || !a.ambient->same_elements(*b.ambient))
    throw Error(Errc::NotInterleavable, "towers need a common ambient group");
  if (!a.reaches_trivial() || !b.reaches_trivial())
    throw Error(Errc::NotInterleavable, "both chains must reach the trivial subgroup");
  a.validate();
  b.validate();
  const PermGroup& g = *a.ambient;
  std::vector<Subgroup> ka, kb;
  for (std::size_t i = 0; i < a.depth(); ++i) ka.push_back(a.ambient_kernel(i));
  for (std::size_t i = 0; i < b.depth(); ++i) kb.push_back(b.ambient_kernel(i));

  std::vector<Subgroup> merged;
  std::size_t ia = 0, ib = 0;
  bool last_a = false, last_b = false;
  for (bool turn_a = true; ia < ka.size() || ib < kb.size(); turn_a = !turn_a) {
    auto& src = turn_a ? ka : kb;
    auto& idx = turn_a ? ia : ib;
    while (idx < src.size() && !merged.empty() && !merged.back().contains(src[idx])) ++idx;
    if (idx < src.size()) {
      if (merged.empty() || merged.back() != src[idx]) merged.push_back(src[idx]);
      (turn_a ? last_a : last_b) = idx + 1 == src.size();
      ++idx;
    }
  }
  if (!last_a || !last_b) throw Error(Errc::NotInterleavable, "no alternating chain reaches both deepest kernels");

  IndependenceReport rep;
  for (const auto& k : merged) rep.interleaved.push_back(k.order());
  TowerSpec mixed = tower_from_chain(g, merged);
  std::vector<std::pair<std::string, std::vector<LevelData>>> data;
  data.emplace_back("A", limit_data(a, block, field, p));
  data.emplace_back("B", limit_data(b, block, field, p));
  data.emplace_back("interleaved", limit_data(mixed, block, field, p));
  for (std::size_t s = 0; s < data.size(); ++s)
    for (std::size_t t = s + 1; t < data.size(); ++t)
      for (const auto& x : data[s].second)
        for (const auto& y : data[t].second)
          if (x.kernel == y.kernel)
            rep.common.push_back(compare_level(g, x, y, data[s].first + "/" + data[t].first));
  return rep;
}

// ---------------------------------------------------------------------------
// Centralizer bijection

bool BijectionReport::ok() const {
  return bijective && forward_ok &&
         std::all_of(steps.begin(), steps.end(), [](const BijectionStep& s) { return s.ok; });
}

BijectionReport centralizer_bijection_check(const TowerContext& ctx, const Subgroup& p) {
  const TowerSpec& t = ctx.tower();
  if (!t.reaches_trivial()) throw Error(Errc::ThinningFailed, "chain does not reach the trivial subgroup");
  const std::size_t r = ctx.depth();
  const PermGroup& g = t.deepest();
  const Field& field = ctx.field();
  Subgroup cp = centralizer(g, p);

  BijectionReport rep;
  rep.kept.push_back(r - 1);
  for (std::size_t i = r - 1; i-- > 0;) {
    std::size_t cur = rep.kept.front();
    Subgroup n = t.kernel_at(i);
    bool sylow = p.intersect(n).order() == p_part(n.order(), ctx.prime());
    bool onto = t.down(cur, i).image(centralizer(t.levels[cur], ctx.image(p, cur))) == ctx.image(cp, i);
    if (sylow && onto) rep.kept.insert(rep.kept.begin(), i);
  }
  const std::size_t k = rep.kept.size();

  // f_s: blocks of kC_G(P)N_s/N_s; e_s: blocks of kC_{G/N_{s+1}}(PN_{s+1}/N_{s+1})
  std::vector<std::vector<AlgebraElement>> image_blocks(k);
  for (std::size_t s = 0; s < k; ++s) {
    Subgroup h = ctx.image(cp, rep.kept[s]);
    for (auto& b : primitive_idempotents(CommutativeAlgebra(h, h, field))) image_blocks[s].push_back(b.element);
  }
  auto is_image_block = [&](std::size_t s, const AlgebraElement& x) {
    return std::find(image_blocks[s].begin(), image_blocks[s].end(), x) != image_blocks[s].end();
  };
  auto blocks_at = [&](std::size_t s) {
    std::vector<AlgebraElement> out;
    for (const auto& b : ctx.pairs(rep.kept[s]).centralizer_blocks(ctx.image(p, rep.kept[s]))) out.push_back(b.element);
    return out;
  };
  std::vector<GroupHom> phi;
  std::vector<QuotientMap> nu;
  for (std::size_t s = 0; s + 1 < k; ++s) {
    phi.push_back(t.down(rep.kept[s + 1], rep.kept[s]));
    nu.emplace_back(phi.back(), field, ctx.prime());
  }
  const auto top = blocks_at(k - 1);
  rep.idempotents = top.size();
  if (k == 1) {
    rep.full_sequences = rep.families = rep.lifted = top.size();
    rep.bijective = true;
    return rep;
  }

  for (std::size_t s = 0; s + 1 < k; ++s) {
    BijectionStep step{rep.kept[s + 1], rep.kept[s]};
    std::vector<AlgebraElement> seen;
    for (const auto& e : blocks_at(s + 1)) {
      ++step.blocks;
      auto img = e.push_forward(phi[s]);
      if (img.is_zero()) {
        ++step.to_zero;
      } else if (is_image_block(s, img) && std::find(seen.begin(), seen.end(), img) == seen.end()) {
        ++step.to_blocks;
        seen.push_back(img);
      } else {
        step.ok = false;
      }
    }
    rep.steps.push_back(step);
  }

  auto successors = [&](std::size_t s, const AlgebraElement& e) {
    auto lifted = nu_minus(nu[s], ctx.image(p, rep.kept[s + 1]), e).element;
    std::vector<AlgebraElement> out;
    for (const auto& b : blocks_at(s + 1))
      if (!(lifted * b).is_zero()) out.push_back(b);
    return out;
  };

  // unique block at s + 1 over a block f of kC_G(P)N_s/N_s
  auto lift = [&](std::size_t s, const AlgebraElement& f) -> std::optional<AlgebraElement> {
    std::optional<AlgebraElement> found;
    for (const auto& e : blocks_at(s + 1))
      if (e.push_forward(phi[s]) == f) {
        if (found) return std::nullopt;
        found = e;
      }
    return found;
  };

  // forward: images of a compatible sequence vanish on a prefix, then form a
  // compatible family lifting back to the sequence
  std::vector<AlgebraElement> path;
  std::function<void(std::size_t)> walk = [&](std::size_t s) {
    if (s + 1 == k) {
      ++rep.full_sequences;
      std::vector<AlgebraElement> family;
      for (std::size_t u = 0; u + 1 < k; ++u) family.push_back(path[u].push_forward(phi[u]));
      family.push_back(path.back());
      std::size_t start = 0;
      while (family[start].is_zero()) ++start;
      for (std::size_t u = start; u < k; ++u) {
        if (family[u].is_zero() || !is_image_block(u, family[u])) rep.forward_ok = false;
        if (u + 1 < k && lift(u, family[u]) != path[u]) rep.forward_ok = false;
        if (u > start && (family[u].push_forward(phi[u - 1]) * family[u - 1]).is_zero()) rep.forward_ok = false;
      }
      return;
    }
    for (auto& next : successors(s, path.back())) {
      path.push_back(next);
      walk(s + 1);
      path.pop_back();
    }
  };
  for (const auto& e : blocks_at(1)) {
    path = {e};
    walk(1);
  }

  // backward: maximal compatible families lift to unique compatible sequences
  std::vector<AlgebraElement> family;
  auto lifts = [&](std::size_t start) {
    std::vector<AlgebraElement> es;
    for (std::size_t u = start; u + 1 < k; ++u) {
      auto e = lift(u, family[k - 1 - u]);
      if (!e) return false;
      es.push_back(*e);
    }
    if (!es.empty() && es.back() != family.front()) return false;
    for (std::size_t u = 1; u < es.size(); ++u) {
      auto next = successors(start + u, es[u - 1]);
      if (std::find(next.begin(), next.end(), es[u]) == next.end()) return false;
    }
    return true;
  };
  std::function<void(std::size_t)> descend = [&](std::size_t s) {
    bool extended = false;
    if (s > 0) {
      auto down = family.back().push_forward(phi[s - 1]);
      for (const auto& f : image_blocks[s - 1]) {
        if ((down * f).is_zero()) continue;
        extended = true;
        family.push_back(f);
        descend(s - 1);
        family.pop_back();
      }
    }
    if (extended) return;
    ++rep.families;
    if (lifts(s)) ++rep.lifted;
  };
  for (const auto& f : top) {
    family = {f};
    descend(k - 1);
  }
  rep.bijective = rep.forward_ok && rep.lifted == rep.families;
  return rep;
}

}  // namespace profusion
