#include "profusion/cli.hpp"

#include <algorithm>
#include <chrono>
#include <filesystem>
#include <set>
#include <sstream>

#include "oracles/algebra_oracles.hpp"
#include "oracles/fusion_oracles.hpp"
#include "oracles/pathalg_oracles.hpp"
#include "profusion/algebra.hpp"
#include "profusion/brauer_pairs.hpp"
#include "profusion/error.hpp"
#include "profusion/fusion.hpp"
#include "profusion/group_io.hpp"
#include "profusion/group_ops.hpp"
#include "profusion/pathalg.hpp"
#include "profusion/tower.hpp"

namespace profusion {

using json = nlohmann::ordered_json;

namespace {

const char* verdict_name(Verdict v) {
  switch (v) {
    case Verdict::Pass:
      return "pass";
    case Verdict::Fail:
      return "fail";
    default:
      return "skipped";
  }
}

std::string join(const std::vector<std::size_t>& v) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) out += (i ? "," : "") + std::to_string(v[i]);
  return out;
}

json subgroup_json(const Subgroup& s) {
  json gens = json::array();
  for (Elem g : s.generators()) gens.push_back(s.parent().perm(g).to_string());
  return json{{"order", s.order()}, {"generators", gens}};
}

json field_json(const Field& f) {
  return json{{"characteristic", f.characteristic()}, {"degree", f.degree()}, {"modulus", f.modulus_string()}};
}

Field pick_field(const JobSpec& job, const PermGroup& g) {
  if (job.field_degree) return Field::make(job.p, *job.field_degree);
  return splitting_field(g, job.p);
}

/// Blocks selected by the job, with their positions in `all`.
std::vector<std::size_t> selected_blocks(const JobSpec& job, const std::vector<BlockIdempotent>& all) {
  if (job.block == "all") {
    std::vector<std::size_t> out(all.size());
    for (std::size_t i = 0; i < all.size(); ++i) out[i] = i;
    return out;
  }
  if (job.block == "principal") {
    const auto& b = principal_of(all);
    for (std::size_t i = 0; i < all.size(); ++i)
      if (all[i] == b) return {i};
  }
  try {
    std::size_t used = 0;
    std::size_t i = std::stoul(job.block, &used);
    if (used == job.block.size() && i < all.size()) return {i};
  } catch (const std::logic_error&) {
  }
  throw Error(Errc::ParseError, "--block must be principal, all or an index below " + std::to_string(all.size()));
}

/// Hom counts of a system realized inside g on subgroup `base` match direct
/// conjugation in g.
bool matches_conjugation(const PermGroup& g, const Subgroup& base, const FusionSystem& sys) {
  for (std::size_t a = 0; a < sys.subgroup_count(); ++a)
    for (std::size_t b = 0; b < sys.subgroup_count(); ++b) {
      std::vector<Elem> r, t;
      for (Elem x : sys.subgroup(a).elements()) r.push_back(base.elements()[x]);
      for (Elem x : sys.subgroup(b).elements()) t.push_back(base.elements()[x]);
      if (sys.homs(a, b).size() != oracle::conjugation_maps(g, r, t).size()) return false;
    }
  return true;
}

// ------------------------------------------------------------- commands

void run_blocks(const JobSpec& job, Report& rep) {
  PermGroup g = load_group(job.group);
  Field f = pick_field(job, g);
  rep.field = field_json(f);
  auto bs = blocks(g, f);
  const auto& principal = principal_of(bs);
  Subgroup sylow = sylow_subgroup(g, job.p);

  AlgebraElement total = AlgebraElement::zero(g, f);
  bool idempotent = true, central = true, orthogonal = true, conjugate = true, principal_sylow = true;
  json list = json::array();
  for (std::size_t i = 0; i < bs.size(); ++i) {
    const auto& e = bs[i].element;
    total = total + e;
    idempotent = idempotent && e * e == e;
    central = central && e.is_central();
    for (std::size_t j = i + 1; j < bs.size(); ++j) orthogonal = orthogonal && (e * bs[j].element).is_zero();
    auto d = defect_group(g, e, job.p);
    conjugate = conjugate && d.maximizers_conjugate;
    bool is_principal = bs[i] == principal;
    if (is_principal) principal_sylow = d.defect_group.order() == sylow.order();
    list.push_back(json{{"index", i},
                        {"principal", is_principal},
                        {"dimension", left_ideal_dim(e)},
                        {"defect_group", subgroup_json(d.defect_group)},
                        {"idempotent", e.to_string()}});
  }
  rep.result["group_order"] = g.order();
  rep.result["block_count"] = bs.size();
  rep.result["blocks"] = list;
  rep.add("sum_is_one", total == AlgebraElement::one(g, f));
  rep.add("idempotent", idempotent);
  rep.add("central", central);
  rep.add("orthogonal", orthogonal);
  rep.add("defect_maximizers_conjugate", conjugate);
  rep.add("principal_defect_is_sylow", principal_sylow, json{{"sylow_order", sylow.order()}});
  rep.add("block_count_stable_over_extension", block_count_stable(g, f));
  if (job.oracle) {
    auto center = center_basis(g, f);
    if (center.dim() <= 5 && f.size() <= 4) {
      std::set<oracle::Dense> mine;
      for (const auto& b : bs) mine.insert(b.element.dense());
      rep.add("oracle_exhaustive_idempotents", mine == oracle::primitive_central_idempotents(g, f));
    } else {
      rep.add("oracle_exhaustive_idempotents", Verdict::Skipped,
              json{{"reason", "center dimension above 5 or field larger than 4"}});
    }
  }
}

void run_brauer_pairs(const JobSpec& job, Report& rep) {
  PermGroup g = load_group(job.group);
  Field f = pick_field(job, g);
  rep.field = field_json(f);
  auto bs = blocks(g, f);
  BrauerPairs bp(g, f, job.p);
  json list = json::array();
  for (std::size_t i : selected_blocks(job, bs)) {
    const auto& e = bs[i].element;
    auto mp = bp.maximal_pairs(e);
    auto d = defect_group(g, e, job.p);
    auto pairs = bp.block_pairs(e);
    list.push_back(json{{"block", i},
                        {"pairs", pairs.size()},
                        {"maximal_pairs", mp.pairs.size()},
                        {"orbit_size", mp.orbit_size},
                        {"representative", mp.representative.to_string()},
                        {"defect_group", subgroup_json(d.defect_group)}});
    std::string tag = "block " + std::to_string(i);
    rep.add(tag + ": maximal pairs conjugate", mp.all_conjugate);
    rep.add(tag + ": maximal pair on a defect group", mp.representative.subgroup.order() == d.defect_group.order());
  }
  rep.result["blocks"] = list;
  if (job.oracle) rep.add("oracle", Verdict::Skipped, json{{"reason", "no brute-force oracle for Brauer pairs"}});
}

void run_fusion(const JobSpec& job, Report& rep) {
  PermGroup g = load_group(job.group);
  Field f = pick_field(job, g);
  rep.field = field_json(f);
  auto bs = blocks(g, f);
  const auto& principal = principal_of(bs);
  BrauerPairs bp(g, f, job.p);
  json list = json::array();
  for (std::size_t i : selected_blocks(job, bs)) {
    const auto& e = bs[i].element;
    auto mp = bp.maximal_pairs(e);
    FusionSystem sys = block_fusion(bp, e, mp.representative);
    bool nilpotent = is_nilpotent(sys);
    bool literal = systems_equal(sys, inner_fusion(sys.base()));
    json entry{{"block", i},
               {"principal", bs[i] == principal},
               {"defect_group", subgroup_json(mp.representative.subgroup)},
               {"subgroups", sys.subgroup_count()},
               {"morphisms", sys.morphism_count()}};
    if (job.nilpotent) entry["nilpotent"] = nilpotent;
    entry["system"] = sys.serialize();
    list.push_back(entry);
    std::string tag = "block " + std::to_string(i);
    rep.add(tag + ": category laws", check_category_laws(sys).ok());
    rep.add(tag + ": nilpotency criteria agree", nilpotent == literal, json{{"nilpotent", nilpotent}});
    if (bs[i] == principal)
      rep.add(tag + ": equals Sylow fusion", systems_equal(sys, sylow_fusion(g, mp.representative.subgroup)));
    if (job.oracle) {
      if (bs[i] == principal) {
        rep.add(tag + ": oracle conjugation counts", matches_conjugation(g, mp.representative.subgroup, sys));
      } else {
        rep.add(tag + ": oracle conjugation counts", Verdict::Skipped,
                json{{"reason", "the conjugation oracle applies to the principal block"}});
      }
    }
  }
  rep.result["blocks"] = list;
}

/// The coarsest levels; the dropped deepest level stays on as the ambient group.
TowerSpec truncate_tower(TowerSpec t, std::size_t depth) {
  if (depth >= t.depth()) return t;
  if (!t.ambient) {
    t.ambient = t.deepest();
    t.projections.clear();
    for (std::size_t i = 0; i < t.depth(); ++i) t.projections.push_back(t.down(t.depth() - 1, i));
  }
  t.levels.resize(depth);
  t.maps.resize(depth - 1);
  t.projections.resize(depth);
  t.validate();
  return t;
}

void run_tower(const JobSpec& job, Report& rep) {
  TowerSpec spec = load_tower(job.tower);
  if (job.depth) spec = truncate_tower(std::move(spec), *job.depth);
  Field f = pick_field(job, spec.deepest());
  rep.field = field_json(f);
  TowerContext ctx(spec, f, job.p);
  const PermGroup& deepest = spec.deepest();
  auto bs = blocks(deepest, f);
  auto chosen = selected_blocks(job, bs);
  if (chosen.size() != 1) throw Error(Errc::ParseError, "tower needs a single block");
  const auto& b = bs[chosen.front()].element;
  json levels = json::array();
  for (const auto& l : spec.levels) levels.push_back(l.order());
  rep.result["level_orders"] = levels;
  rep.result["reaches_trivial"] = spec.reaches_trivial();

  TowerBlock seed = seed_from_deepest(ctx, b);
  rep.result["seed_level"] = seed.level;
  auto pair = maximal_truncated_pair(ctx, seed);
  rep.result["defect_group"] = subgroup_json(pair.defect);
  rep.result["i0"] = pair.i0;
  rep.result["maximal_choices"] = maximal_choice_count(ctx, seed);
  rep.add("maximal pair at every level", pair.maximal_at_every_level);

  auto stab = stabilization_mu(ctx, seed);
  json mus = json::array();
  for (const auto& l : stab.levels)
    mus.push_back(json{{"level", l.level}, {"mu", l.mu}, {"virtual", l.virtual_level}, {"morphisms", l.morphisms}});
  rep.result["stabilization"] = mus;
  rep.add("stabilization", stab.ok(), json{{"strictly_increasing", stab.strictly_increasing}});

  for (std::size_t i = stab.i0; i < spec.depth(); ++i) {
    auto e = embedding_check(ctx, seed, i);
    rep.add("embedding level " + std::to_string(i), e.contained,
            json{{"equal", e.equal}, {"level_morphisms", e.level_morphisms}, {"limit_morphisms", e.limit_morphisms}});
  }
  if (spec.reaches_trivial()) {
    auto bij = centralizer_bijection_check(ctx, pair.defect);
    json steps = json::array();
    for (const auto& s : bij.steps)
      steps.push_back(json{{"from", s.from}, {"to", s.to}, {"blocks", s.blocks}, {"to_blocks", s.to_blocks},
                           {"to_zero", s.to_zero}, {"ok", s.ok}});
    rep.result["bijection"] = json{{"kept", bij.kept},           {"steps", steps},
                                   {"sequences", bij.full_sequences}, {"idempotents", bij.idempotents},
                                   {"families", bij.families},    {"lifted", bij.lifted}};
    rep.add("centralizer bijection", bij.ok());
  } else {
    rep.add("centralizer bijection", Verdict::Skipped, json{{"reason", "the tower stops above the trivial subgroup"}});
  }
  if (job.oracle) rep.add("oracle", Verdict::Skipped, json{{"reason", "tower oracles run in the test suite only"}});
}

void run_dihedral(const JobSpec& job, Report& rep) {
  if (job.p != 2) throw Error(Errc::PreconditionViolated, "dihedral certification is for p = 2");
  PermGroup g = load_group(job.group);
  rep.field = nullptr;
  Subgroup s = sylow_subgroup(g, 2);
  std::size_t depth = job.depth.value_or(2);
  std::vector<FusionSystem> systems{sylow_fusion(g, s)};
  std::vector<GroupHom> maps;
  while (systems.size() < depth && systems.front().base().order() > 8) {
    auto image = image_fusion(systems.front(), center(systems.front().base()));
    maps.insert(maps.begin(), image.quotient.projection);
    systems.insert(systems.begin(), image.system);
  }
  json orders = json::array();
  for (const auto& sys : systems) orders.push_back(sys.base().order());
  rep.result["sylow"] = subgroup_json(s);
  rep.result["level_orders"] = orders;
  auto cert = dihedral_triviality_check(FusionTower{systems, maps});
  json levels = json::array();
  for (const auto& l : cert.levels)
    levels.push_back(json{{"level", l.level},
                          {"order", l.order},
                          {"skipped", l.skipped},
                          {"reason", l.reason},
                          {"klein_fours", l.klein_fours},
                          {"preimages_dihedral", l.preimages_dihedral},
                          {"klein_images_ok", l.klein_images_ok},
                          {"nilpotent", l.nilpotent},
                          {"equals_inner", l.equals_inner},
                          {"saturation_assumed", l.saturation_flagged}});
  rep.result["levels"] = levels;
  rep.add("dihedral triviality", cert.ok());
  PermGroup sg = s.as_group();
  if (sg.order() >= 8 && sg.order() <= 64) {
    try {
      auto tame = tame_quotient_check(sg);
      rep.result["family"] = tame.family;
      rep.add("tame quotients", tame.ok(), json{{"quotients", tame.quotients.size()}});
    } catch (const Error& e) {
      if (e.code() != Errc::UnsupportedFamily) throw;
      rep.add("tame quotients", Verdict::Skipped, json{{"reason", e.what()}});
    }
  } else {
    rep.add("tame quotients", Verdict::Skipped, json{{"reason", "Sylow order outside 8..64"}});
  }
  if (job.oracle) {
    rep.add("oracle conjugation counts", matches_conjugation(g, s, systems.back()));
  }
}

oracle::MiniQuiver mini_of(const Quiver& q) {
  oracle::MiniQuiver m{static_cast<int>(q.vertex_count()), {}};
  for (const auto& a : q.arrows()) m.arrows.emplace_back(static_cast<int>(a.source), static_cast<int>(a.target));
  return m;
}

void run_pathalg(const JobSpec& job, Report& rep) {
  Field f = Field::make(job.p, job.field_degree.value_or(1));
  rep.field = field_json(f);
  std::size_t s = job.degree.value_or(4);
  std::optional<TruncatedAlgebra> alg;
  std::optional<Quiver> q;
  std::vector<PathSum> relations;
  if (job.tame) {
    alg.emplace(tame_algebra(*job.tame, s, f));
    q.emplace(alg->quiver());
    relations = alg->generators();
  } else {
    auto spec = load_quiver(job.quiver, f);
    q.emplace(spec.quiver);
    relations = spec.relations;
    alg.emplace(*q, f, relations, s);
  }
  json basis = json::array();
  for (const auto& w : alg->basis()) basis.push_back(q->to_string(w));
  json rels = json::array();
  for (const auto& r : relations) rels.push_back(q->to_string(r, f));
  rep.result["vertices"] = q->vertex_count();
  rep.result["arrows"] = q->arrows().size();
  rep.result["relations"] = rels;
  rep.result["truncation"] = s;
  rep.result["degree_dims"] = join(alg->degree_dims());
  rep.result["dimension"] = alg->dim();
  rep.result["basis"] = basis;
  if (s >= 3) {
    auto n = is_admissible(*q, relations, s - 1, f);
    rep.result["radical_power_in_ideal"] = n ? json(*n) : json(nullptr);
  }
  rep.add("associative", alg->associative());
  bool graded = true;
  for (std::size_t i = 0; i < alg->dim(); ++i)
    for (std::size_t j = 0; j < alg->dim(); ++j)
      for (const auto& [w, c] : alg->to_sum(alg->product(i, j)))
        graded = graded && w.length() >= alg->basis()[i].length() + alg->basis()[j].length();
  rep.add("products respect degree", graded);
  if (job.oracle) {
    if (f.degree() != 1) {
      rep.add("oracle span", Verdict::Skipped, json{{"reason", "the span oracle works over prime fields"}});
    } else {
      std::vector<oracle::Combination> mini;
      for (const auto& r : relations) {
        oracle::Combination c;
        for (const auto& [w, k] : r) c.emplace_back(oracle::Word(w.arrows.begin(), w.arrows.end()), static_cast<int>(k.v));
        mini.push_back(c);
      }
      auto expected = oracle::graded_quotient_dims(mini_of(*q), mini, s, static_cast<int>(f.characteristic()));
      rep.add("oracle span", expected == alg->degree_dims(), json{{"oracle_degree_dims", join(expected)}});
    }
  }
}

void run_presentation(const JobSpec& job, Report& rep) {
  PermGroup g = load_group(job.group);
  auto prime = prime_of_p_group(g);
  if (!prime && g.order() != 1) throw Error(Errc::NotPGroup, g.describe() + " is not a p-group");
  std::uint32_t p = prime ? static_cast<std::uint32_t>(*prime) : job.p;
  Field f = Field::make(p, job.field_degree.value_or(1));
  rep.field = field_json(f);
  auto layers = radical_layers(g, f);
  std::size_t s = job.degree.value_or(layers.size() + 1);
  auto pres = group_algebra_presentation(g, s, f);
  json gens = json::array();
  for (Elem x : pres.generators) gens.push_back(g.perm(x).to_string());
  json kernel = json::array();
  for (const auto& k : pres.kernel) kernel.push_back(pres.quiver.to_string(k, f));
  auto dims = pres.algebra.degree_dims();
  rep.result["loops"] = pres.quiver.arrows().size();
  rep.result["generators"] = gens;
  rep.result["truncation"] = s;
  rep.result["degree_dims"] = join(dims);
  rep.result["kernel_degree_dims"] = join(pres.kernel_degree_dims);
  rep.result["target_dimension"] = pres.target_dim;
  rep.result["kernel"] = kernel;
  rep.add("multiplicative", pres.multiplicative, json{{"pairs", pres.products_checked}});
  std::vector<std::size_t> expected(s, 0);
  for (std::size_t i = 0; i < s && i < layers.size(); ++i) expected[i] = layers[i];
  rep.add("radical layers match", dims == expected, json{{"radical_layers", join(layers)}});
  if (job.oracle) {
    auto series = oracle::radical_series(g, f);
    std::vector<std::size_t> want(s, 0);
    for (std::size_t i = 0; i < s && i < series.size(); ++i) want[i] = series[i];
    rep.add("oracle radical series", dims == want, json{{"oracle", join(series)}});
  }
}

}  // namespace

json JobSpec::to_json() const {
  json j{{"command", command}};
  if (!group.empty()) j["group"] = group;
  if (!tower.empty()) j["tower"] = tower;
  if (!quiver.empty()) j["quiver"] = quiver;
  if (tame) j["tame"] = *tame;
  j["p"] = p;
  if (field_degree) j["field_degree"] = *field_degree;
  if (depth) j["depth"] = *depth;
  if (degree) j["degree"] = *degree;
  j["block"] = block;
  if (nilpotent) j["nilpotent"] = true;
  j["oracle"] = oracle;
  return j;
}

void Report::add(std::string name, Verdict verdict, json witness) {
  ensure(std::none_of(checks.begin(), checks.end(), [&](const Check& c) { return c.name == name; }),
         "check names are unique");
  checks.push_back(Check{std::move(name), verdict, std::move(witness)});
}

bool Report::passed() const {
  return !error && std::none_of(checks.begin(), checks.end(), [](const Check& c) { return c.verdict == Verdict::Fail; });
}

json Report::to_json() const {
  json j{{"tool", "profusion"}, {"version", kToolVersion}, {"job", job.to_json()}, {"field", field}};
  if (error) {
    j["error"] = *error;
  } else {
    j["result"] = result;
  }
  json cs = json::array();
  for (const auto& c : checks) {
    json e{{"name", c.name}, {"verdict", verdict_name(c.verdict)}};
    if (!c.witness.is_null()) e["witness"] = c.witness;
    cs.push_back(e);
  }
  j["checks"] = cs;
  j["passed"] = passed();
  if (elapsed_ms) j["elapsed_ms"] = *elapsed_ms;
  return j;
}

void validate(const JobSpec& job) {
  static const std::set<std::string> commands{"blocks",   "brauer-pairs", "fusion",      "tower",
                                              "dihedral-certify", "pathalg", "presentation"};
  if (!commands.count(job.command)) throw Error(Errc::ParseError, "unknown command '" + job.command + "'");
  auto need = [&](bool ok, const std::string& what) {
    if (!ok) throw Error(Errc::ParseError, job.command + " needs " + what);
  };
  auto file_ok = [](const std::string& path) {
    std::error_code ec;
    return std::filesystem::is_regular_file(path, ec);
  };
  if (job.command == "tower") {
    need(!job.tower.empty(), "--tower");
    need(file_ok(job.tower), "an existing tower file, not '" + job.tower + "'");
  } else if (job.command == "pathalg") {
    need(job.tame.has_value() != !job.quiver.empty(), "exactly one of --tame and --quiver");
    if (!job.quiver.empty()) need(file_ok(job.quiver), "an existing quiver file, not '" + job.quiver + "'");
  } else {
    need(!job.group.empty(), "--group");
  }
  if (job.depth && *job.depth == 0) throw Error(Errc::ParseError, "--depth must be positive");
  if (job.degree && *job.degree == 0) throw Error(Errc::ParseError, "--degree must be positive");
  if (job.field_degree && *job.field_degree == 0) throw Error(Errc::ParseError, "--field-degree must be positive");
}

Report run(const JobSpec& job) {
  Report rep;
  rep.job = job;
  auto start = std::chrono::steady_clock::now();
  try {
    validate(job);
    if (job.command == "blocks") run_blocks(job, rep);
    if (job.command == "brauer-pairs") run_brauer_pairs(job, rep);
    if (job.command == "fusion") run_fusion(job, rep);
    if (job.command == "tower") run_tower(job, rep);
    if (job.command == "dihedral-certify") run_dihedral(job, rep);
    if (job.command == "pathalg") run_pathalg(job, rep);
    if (job.command == "presentation") run_presentation(job, rep);
  } catch (const Error& e) {
    rep.error = e.what();
  }
  if (job.timing)
    rep.elapsed_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return rep;
}

}  // namespace profusion
