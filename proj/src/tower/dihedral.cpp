#include <algorithm>
#include <set>

#include "profusion/constructors.hpp"
#include "profusion/error.hpp"
#include "profusion/group_ops.hpp"
#include "profusion/tower.hpp"

namespace profusion {

bool TameQuotientReport::ok() const {
  return std::all_of(quotients.begin(), quotients.end(), [](const Entry& e) { return e.abelian || e.dihedral; });
}

TameQuotientReport tame_quotient_check(const PermGroup& p) {
  const std::size_t n = p.order();
  if (n < 8 || n > 64 || !is_p_power(n, 2))
    throw Error(Errc::UnsupportedFamily, "order " + std::to_string(n) + " is outside 8..64");
  TameQuotientReport rep;
  rep.order = n;
  if (is_dihedral(p)) {
    rep.family = "dihedral";
  } else if (find_isomorphism(p, quaternion(n))) {
    rep.family = "quaternion";
  } else if (n >= 16 && find_isomorphism(p, semidihedral(n))) {
    rep.family = "semidihedral";
  } else {
    throw Error(Errc::UnsupportedFamily, p.describe() + " is not dihedral, semidihedral or quaternion");
  }
  for (const auto& k : normal_subgroups(p)) {
    if (k.is_trivial()) continue;
    auto q = quotient(p, k).group;
    TameQuotientReport::Entry e;
    e.kernel_order = k.order();
    e.abelian = is_abelian(q);
    e.dihedral = !e.abelian && find_isomorphism(q, dihedral(q.order())).has_value();
    rep.quotients.push_back(e);
  }
  return rep;
}

bool DihedralReport::ok() const {
  return std::all_of(levels.begin(), levels.end(), [](const DihedralLevelReport& l) { return l.certified(); });
}

namespace {

bool is_klein_four(const Subgroup& s) { return s.order() == 4 && !is_cyclic(s.as_group()); }

/// Automorphisms of V induced by the automorphisms of W = preimage(V) in
/// `above` that preserve the kernel, as image lists over V's elements.
std::set<std::vector<Elem>> induced_automorphisms(const FusionSystem& above, const Subgroup& w, const GroupHom& map,
                                                 const Subgroup& v) {
  std::size_t wi = above.index_of(w);
  std::vector<Elem> lift;
  for (Elem y : v.elements())
    for (Elem x : w.elements())
      if (map(x) == y) {
        lift.push_back(x);
        break;
      }
  std::set<std::vector<Elem>> out;
  for (const auto& m : above.homs(wi, wi)) {
    bool keeps_kernel = std::all_of(w.elements().begin(), w.elements().end(), [&](Elem x) {
      return map(x) != PermGroup::identity() || map(above.apply(wi, m, x)) == PermGroup::identity();
    });
    if (!keeps_kernel) continue;
    std::vector<Elem> images;
    for (Elem x : lift) images.push_back(map(above.apply(wi, m, x)));
    out.insert(std::move(images));
  }
  return out;
}

}  // namespace

DihedralReport dihedral_triviality_check(const FusionTower& tower) {
  const auto& sys = tower.systems;
  if (sys.empty() || tower.maps.size() + 1 != sys.size())
    throw Error(Errc::PreconditionViolated, "one map per adjacent pair of levels");
  for (std::size_t i = 0; i < tower.maps.size(); ++i) {
    const auto& m = tower.maps[i];
    if (!m.domain().same_elements(sys[i + 1].base()) || !m.codomain().same_elements(sys[i].base()))
      throw Error(Errc::PreconditionViolated, "map " + std::to_string(i) + " does not connect adjacent bases");
    if (!m.surjective()) throw Error(Errc::SurjectivityFailure, "map " + std::to_string(i) + " is not onto");
  }
  for (std::size_t i = 0; i < sys.size(); ++i)
    if (sys[i].base().order() > 4 && !is_dihedral(sys[i].base()))
      throw Error(Errc::NotDihedralBase, "level " + std::to_string(i) + " is not dihedral");

  DihedralReport rep;
  for (std::size_t j = 0; j < sys.size(); ++j) {
    const FusionSystem& f = sys[j];
    DihedralLevelReport lv;
    lv.level = j;
    lv.order = f.base().order();
    lv.saturation_flagged = f.provenance() == Provenance::Synthetic || f.provenance() == Provenance::Image;
    if (lv.order <= 4) {
      lv.skipped = true;
      lv.reason = "order at most 4";
      rep.levels.push_back(lv);
      continue;
    }
    if (j + 1 == sys.size()) {
      lv.skipped = true;
      lv.reason = "top level";
      rep.levels.push_back(lv);
      continue;
    }
    const FusionSystem& above = sys[j + 1];
    const GroupHom& map = tower.maps[j];
    for (const auto& r : f.subgroups()) {
      PermGroup rg = r.as_group();
      if (is_cyclic(rg) || (r.order() >= 8 && is_dihedral(rg))) {
        ++lv.cyclic_or_dihedral_checked;
        lv.large_subgroups_ok = lv.large_subgroups_ok && is_p_power(aut_group(f, r).order(), 2);
      }
      if (!is_klein_four(r)) continue;
      ++lv.klein_fours;
      Subgroup w = map.preimage(r);
      lv.preimages_dihedral = lv.preimages_dihedral && w.order() >= 8 && is_dihedral(w.as_group());
      auto induced = induced_automorphisms(above, w, map, r);
      std::size_t vi = f.index_of(r);
      for (const auto& m : f.homs(vi, vi))
        if (!induced.count(m))
          throw Error(Errc::SurjectivityFailure,
                      "an automorphism of " + r.describe() + " at level " + std::to_string(j) + " does not lift");
      lv.klein_images_ok = lv.klein_images_ok && is_p_power(induced.size(), 2);
    }
    lv.nilpotent = is_nilpotent(f);
    lv.equals_inner = systems_equal(f, inner_fusion(f.base()));
    rep.levels.push_back(lv);
  }
  return rep;
}

}  // namespace profusion
