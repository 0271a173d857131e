#include "profusion/fusion.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "profusion/error.hpp"

namespace profusion {

std::string provenance_name(Provenance p) {
  switch (p) {
    case Provenance::Sylow: return "sylow";
    case Provenance::Block: return "block";
    case Provenance::Quotient: return "quotient";
    case Provenance::Image: return "image";
    case Provenance::Transported: return "transported";
    case Provenance::Synthetic: return "synthetic";
  }
  return "unknown";
}

// ---------------------------------------------------------------------------
// FusionSystem

FusionSystem::FusionSystem(PermGroup base, Provenance provenance)
    : base_(std::move(base)), provenance_(provenance), subgroups_(subgroups_of(base_)) {
  for (std::size_t i = 0; i < subgroups_.size(); ++i) lookup_.emplace(subgroups_[i].elements(), i);
  homs_.resize(subgroups_.size() * subgroups_.size());
}

std::size_t FusionSystem::index_of_elements(const std::vector<Elem>& sorted) const {
  auto it = lookup_.find(sorted);
  if (it == lookup_.end()) throw Error(Errc::NotSubgroup, "element set is not a subgroup of the base");
  return it->second;
}

std::size_t FusionSystem::index_of(const Subgroup& s) const {
  if (!s.parent().same_elements(base_)) throw Error(Errc::NotSubgroup, s.describe() + " is not a subgroup of the base");
  return index_of_elements(s.elements());
}

bool FusionSystem::contains(std::size_t i, std::size_t j, const Map& m) const {
  const auto& hs = homs(i, j);
  return std::binary_search(hs.begin(), hs.end(), m);
}

void FusionSystem::add_morphism(std::size_t i, std::size_t j, Map m) {
  if (m.size() != subgroups_.at(i).order()) throw Error(Errc::DimensionMismatch, "morphism length differs from source order");
  auto& hs = homs_[i * subgroups_.size() + j];
  auto it = std::lower_bound(hs.begin(), hs.end(), m);
  if (it == hs.end() || *it != m) hs.insert(it, std::move(m));
}

std::size_t FusionSystem::morphism_count() const {
  std::size_t n = 0;
  for (const auto& hs : homs_) n += hs.size();
  return n;
}

Elem FusionSystem::apply(std::size_t i, const Map& m, Elem x) const { return m[subgroups_[i].local_index(x)]; }

std::vector<Elem> FusionSystem::image(const Map& m) const {
  std::vector<Elem> out = m;
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::string FusionSystem::serialize() const {
  std::ostringstream out;
  out << "base " << base_.describe() << "\n";
  out << "provenance " << provenance_name(provenance_) << "\n";
  for (std::size_t i = 0; i < subgroups_.size(); ++i) out << "subgroup " << i << " " << subgroups_[i].describe() << "\n";
  for (std::size_t i = 0; i < subgroups_.size(); ++i)
    for (std::size_t j = 0; j < subgroups_.size(); ++j)
      for (const auto& m : homs(i, j)) {
        out << "hom " << i << " " << j << " [";
        const auto& gens = subgroups_[i].generators();
        for (std::size_t k = 0; k < gens.size(); ++k) {
          if (k) out << ", ";
          out << base_.perm(apply(i, m, gens[k])).to_string();
        }
        out << "]\n";
      }
  return out.str();
}

// ---------------------------------------------------------------------------
// Construction by conjugation

namespace {

/// For each subgroup index r, the indices of subgroups containing it.
std::vector<std::vector<std::size_t>> overgroups(const FusionSystem& f) {
  std::vector<std::vector<std::size_t>> out(f.subgroup_count());
  for (std::size_t r = 0; r < f.subgroup_count(); ++r)
    for (std::size_t j = 0; j < f.subgroup_count(); ++j)
      if (f.subgroup(j).contains(f.subgroup(r))) out[r].push_back(j);
  return out;
}

/// Adds the maps x -> x^g for every g accepted by `allow` and every subgroup
/// of `p` whose conjugate stays inside `p`.
template <typename Allow>
void add_conjugations(FusionSystem& f, const PermGroup& g, const Subgroup& p, Allow allow) {
  auto over = overgroups(f);
  for (std::size_t i = 0; i < f.subgroup_count(); ++i) {
    std::vector<Elem> in_g;
    for (Elem x : f.subgroup(i).elements()) in_g.push_back(p.elements()[x]);
    for (Elem c = 0; c < g.order(); ++c) {
      FusionSystem::Map m;
      m.reserve(in_g.size());
      bool inside = true;
      for (Elem x : in_g) {
        Elem y = g.conj(x, c);
        if (!p.contains(y)) {
          inside = false;
          break;
        }
        m.push_back(p.local_index(y));
      }
      if (!inside || !allow(i, c)) continue;
      std::size_t r = f.index_of_elements(f.image(m));
      for (std::size_t j : over[r]) f.add_morphism(i, j, m);
    }
  }
}

}  // namespace

FusionSystem inner_fusion(const PermGroup& p) {
  return sylow_fusion(p, Subgroup::whole(p));
}

FusionSystem sylow_fusion(const PermGroup& g, const Subgroup& p) {
  if (!p.parent().same_elements(g)) throw Error(Errc::SubgroupNotContained, p.describe() + " is not a subgroup of G");
  if (p.order() > 1 && !prime_of_p_group(p.as_group()))
    throw Error(Errc::NotPSubgroup, p.describe() + " is not a p-group");
  FusionSystem f(p.as_group(), Provenance::Sylow);
  add_conjugations(f, g, p, [](std::size_t, Elem) { return true; });
  return f;
}

FusionSystem block_fusion(const BrauerPairs& pairs, const AlgebraElement& block, const BrauerPair& maximal) {
  const PermGroup& g = pairs.group();
  const Subgroup& d = maximal.subgroup;
  auto top = pairs.maximal_pairs(block);
  if (d.order() != top.representative.subgroup.order() || !pairs.leq(pairs.make_pair(Subgroup::trivial(g), block), maximal))
    throw Error(Errc::NotMaximalPair, maximal.to_string() + " is not a maximal pair of the block");
  FusionSystem f(d.as_group(), Provenance::Block);
  // (R, e_R): the restrictions of the maximal pair, indexed like the subgroups of D
  std::vector<AlgebraElement> below;
  std::map<std::vector<Elem>, std::size_t> by_elements;
  for (std::size_t i = 0; i < f.subgroup_count(); ++i) {
    std::vector<Elem> in_g;
    for (Elem x : f.subgroup(i).elements()) in_g.push_back(d.elements()[x]);
    Subgroup r = Subgroup::from_elements(g, in_g);
    below.push_back(pairs.restrict_pair(maximal, r).idempotent);
    by_elements.emplace(r.elements(), i);
  }
  add_conjugations(f, g, d, [&](std::size_t i, Elem c) {
    std::vector<Elem> conj;
    for (Elem x : f.subgroup(i).elements()) conj.push_back(g.conj(d.elements()[x], c));
    std::sort(conj.begin(), conj.end());
    return below[i].conjugate(c) == below[by_elements.at(conj)];
  });
  return f;
}

// ---------------------------------------------------------------------------
// Axioms

CategoryReport check_category_laws(const FusionSystem& f) {
  CategoryReport rep;
  const PermGroup& p = f.base();
  const std::size_t n = f.subgroup_count();
  for (std::size_t i = 0; i < n; ++i) {
    const Subgroup& a = f.subgroup(i);
    for (std::size_t j = 0; j < n; ++j) {
      const Subgroup& b = f.subgroup(j);
      if (b.contains(a) && !f.contains(i, j, a.elements())) {
        rep.inclusions = false;
        if (i == j) rep.identities = false;
      }
      for (const auto& m : f.homs(i, j)) {
        auto img = f.image(m);
        if (img.size() != a.order()) rep.injective = false;
        for (Elem y : img)
          if (!b.contains(y)) rep.injective = false;
        for (std::size_t x = 0; x < a.order() && rep.injective; ++x)
          for (std::size_t y = 0; y < a.order(); ++y)
            if (m[a.local_index(p.mul(a.elements()[x], a.elements()[y]))] != p.mul(m[x], m[y])) rep.injective = false;
        // restriction to every subgroup of the source, into its image
        for (std::size_t k = 0; k < n; ++k) {
          const Subgroup& c = f.subgroup(k);
          if (!a.contains(c)) continue;
          FusionSystem::Map r;
          for (Elem x : c.elements()) r.push_back(f.apply(i, m, x));
          if (!f.contains(k, f.index_of_elements(f.image(r)), r)) rep.restriction_closed = false;
        }
        for (std::size_t l = 0; l < n; ++l)
          for (const auto& m2 : f.homs(j, l)) {
            FusionSystem::Map comp;
            for (Elem y : m) comp.push_back(f.apply(j, m2, y));
            if (!f.contains(i, l, comp)) rep.composition_closed = false;
          }
      }
    }
    for (Elem g : a.elements()) {
      FusionSystem::Map inner;
      for (Elem x : a.elements()) inner.push_back(p.conj(x, g));
      if (!f.contains(i, i, inner)) rep.inner_automorphisms = false;
    }
  }
  return rep;
}

// ---------------------------------------------------------------------------
// Strong closure and quotients

bool is_strongly_closed(const FusionSystem& f, const Subgroup& s) {
  std::size_t top = f.subgroup_count() - 1;
  for (std::size_t i = 0; i < f.subgroup_count(); ++i) {
    if (!s.contains(f.subgroup(i))) continue;
    for (const auto& m : f.homs(i, top))
      for (Elem y : m)
        if (!s.contains(y)) return false;
  }
  return true;
}

std::vector<Subgroup> strongly_closed_subgroups(const FusionSystem& f) {
  std::vector<Subgroup> out;
  for (const auto& s : f.subgroups())
    if (is_strongly_closed(f, s)) out.push_back(s);
  return out;
}

namespace {

FusionQuotient induced_system(const FusionSystem& f, const Subgroup& n, Provenance provenance) {
  const PermGroup& p = f.base();
  Quotient q = quotient(p, n);
  FusionQuotient out{FusionSystem(q.group, provenance), q, 0};
  FusionSystem& sys = out.system;
  std::vector<Elem> lift(q.group.order(), 0);
  std::vector<bool> seen(q.group.order(), false);
  for (Elem x = 0; x < p.order(); ++x) {
    Elem y = q.projection(x);
    if (!seen[y]) {
      seen[y] = true;
      lift[y] = x;
    }
  }
  std::vector<std::size_t> pre(sys.subgroup_count());
  for (std::size_t k = 0; k < sys.subgroup_count(); ++k) pre[k] = f.index_of(q.projection.preimage(sys.subgroup(k)));
  for (std::size_t k = 0; k < sys.subgroup_count(); ++k)
    for (std::size_t l = 0; l < sys.subgroup_count(); ++l)
      for (const auto& m : f.homs(pre[k], pre[l])) {
        bool keeps = true;
        for (Elem x : n.elements())
          if (!n.contains(f.apply(pre[k], m, x))) keeps = false;
        if (!keeps) {
          ++out.dropped;
          continue;
        }
        FusionSystem::Map induced;
        for (Elem y : sys.subgroup(k).elements()) induced.push_back(q.projection(f.apply(pre[k], m, lift[y])));
        sys.add_morphism(k, l, std::move(induced));
      }
  return out;
}

}  // namespace

FusionQuotient quotient_fusion(const FusionSystem& f, const Subgroup& s) {
  if (!is_strongly_closed(f, s)) throw Error(Errc::NotStronglyClosed, s.describe() + " is not strongly closed");
  auto out = induced_system(f, s, Provenance::Quotient);
  ensure(out.dropped == 0, "strongly closed subgroups are preserved by every morphism");
  return out;
}

FusionQuotient image_fusion(const FusionSystem& f, const Subgroup& n) {
  if (!is_normal(f.base(), n)) throw Error(Errc::NotNormal, n.describe() + " is not normal in the base");
  return induced_system(f, n, Provenance::Image);
}

LiftReport quotient_morphism_check(const FusionSystem& f, const Subgroup& s) {
  if (!is_strongly_closed(f, s)) throw Error(Errc::NotStronglyClosed, s.describe() + " is not strongly closed");
  const PermGroup& p = f.base();
  LiftReport rep;
  for (std::size_t i = 0; i < f.subgroup_count(); ++i) {
    const Subgroup& a = f.subgroup(i);
    std::size_t as = f.index_of(a.join(s));
    for (std::size_t j = 0; j < f.subgroup_count(); ++j) {
      std::size_t bs = f.index_of(f.subgroup(j).join(s));
      for (const auto& m : f.homs(i, j)) {
        ++rep.checked;
        bool found = false;
        for (const auto& lift : f.homs(as, bs)) {
          bool agrees = true;
          for (std::size_t k = 0; k < a.order() && agrees; ++k) {
            Elem x = a.elements()[k];
            agrees = s.contains(p.mul(p.inv(m[k]), f.apply(as, lift, x)));
          }
          if (agrees) {
            found = true;
            break;
          }
        }
        if (!found) {
          std::ostringstream msg;
          msg << "no lift of a morphism " << a.describe() << " -> " << f.subgroup(j).describe() << " sending generators to [";
          for (std::size_t k = 0; k < a.generators().size(); ++k)
            msg << (k ? ", " : "") << p.perm(f.apply(i, m, a.generators()[k])).to_string();
          msg << "]";
          throw Error(Errc::LiftNotFound, msg.str());
        }
        ++rep.lifted;
      }
    }
  }
  return rep;
}

MorphismReport check_morphism(const FusionSystem& from, const FusionSystem& to, const GroupHom& alpha) {
  if (!alpha.domain().same_elements(from.base()) || !alpha.codomain().same_elements(to.base()))
    throw Error(Errc::BaseMismatch, "map does not connect the two bases");
  Subgroup kernel = alpha.kernel();
  MorphismReport rep;
  std::vector<std::set<FusionSystem::Map>> induced(to.subgroup_count() * to.subgroup_count());
  for (std::size_t i = 0; i < from.subgroup_count(); ++i) {
    const Subgroup& a = from.subgroup(i);
    std::size_t k = to.index_of(alpha.image(a));
    const Subgroup& ak = to.subgroup(k);
    std::vector<Elem> lift(ak.order());
    std::vector<bool> seen(ak.order(), false);
    for (Elem x : a.elements()) {
      Elem local = ak.local_index(alpha(x));
      if (!seen[local]) {
        seen[local] = true;
        lift[local] = x;
      }
    }
    for (std::size_t j = 0; j < from.subgroup_count(); ++j) {
      std::size_t l = to.index_of(alpha.image(from.subgroup(j)));
      for (const auto& m : from.homs(i, j)) {
        ++rep.checked;
        bool keeps = true;
        for (std::size_t t = 0; t < a.order(); ++t)
          if (kernel.contains(a.elements()[t]) && !kernel.contains(m[t])) keeps = false;
        if (!keeps) {
          ++rep.kernel_violations;
          continue;
        }
        FusionSystem::Map image;
        for (Elem y : lift) image.push_back(alpha(m[a.local_index(y)]));
        if (!to.contains(k, l, image)) ++rep.missing;
        induced[k * to.subgroup_count() + l].insert(std::move(image));
      }
    }
  }
  for (std::size_t k = 0; k < to.subgroup_count(); ++k)
    for (std::size_t l = 0; l < to.subgroup_count(); ++l)
      for (const auto& m : to.homs(k, l))
        if (!induced[k * to.subgroup_count() + l].count(m)) ++rep.uncovered;
  return rep;
}

// ---------------------------------------------------------------------------
// Automorphisms, nilpotency, comparison

PermGroup aut_group(const FusionSystem& f, const Subgroup& r) {
  std::size_t i = f.index_of(r);
  std::vector<Perm> gens;
  for (const auto& m : f.homs(i, i)) {
    std::vector<Perm::Point> images;
    for (Elem y : m) images.push_back(static_cast<Perm::Point>(r.local_index(y)));
    gens.emplace_back(std::move(images));
  }
  PermGroup aut = PermGroup::from_generators(r.order(), gens);
  ensure(aut.order() == f.homs(i, i).size(), "automorphisms of an object form a group");
  return aut;
}

bool is_nilpotent(const FusionSystem& f) {
  auto prime = prime_of_p_group(f.base());
  if (!prime) return true;
  for (const auto& r : f.subgroups())
    if (!is_p_power(f.homs(f.index_of(r), f.index_of(r)).size(), *prime)) return false;
  return true;
}

namespace {

void require_same_base(const FusionSystem& a, const FusionSystem& b) {
  if (!a.base().same_elements(b.base())) throw Error(Errc::BaseMismatch, "fusion systems live on different groups");
}

}  // namespace

bool is_subsystem(const FusionSystem& a, const FusionSystem& b) {
  require_same_base(a, b);
  const std::size_t n = a.subgroup_count();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const auto& hb = b.homs(i, j);
      for (const auto& m : a.homs(i, j))
        if (!std::binary_search(hb.begin(), hb.end(), m)) return false;
    }
  return true;
}

bool systems_equal(const FusionSystem& a, const FusionSystem& b) {
  require_same_base(a, b);
  for (std::size_t i = 0; i < a.subgroup_count(); ++i)
    for (std::size_t j = 0; j < a.subgroup_count(); ++j)
      if (a.homs(i, j) != b.homs(i, j)) return false;
  return true;
}

FusionSystem transport(const FusionSystem& f, const GroupHom& iso) {
  if (!iso.domain().same_elements(f.base())) throw Error(Errc::BaseMismatch, "isomorphism starts at another group");
  if (!iso.injective() || !iso.surjective()) throw Error(Errc::PreconditionViolated, "map is not an isomorphism");
  FusionSystem out(iso.codomain(), Provenance::Transported);
  std::vector<Elem> inverse(iso.codomain().order());
  for (Elem x = 0; x < f.base().order(); ++x) inverse[iso(x)] = x;
  for (std::size_t i = 0; i < f.subgroup_count(); ++i) {
    std::size_t k = out.index_of(iso.image(f.subgroup(i)));
    for (std::size_t j = 0; j < f.subgroup_count(); ++j) {
      std::size_t l = out.index_of(iso.image(f.subgroup(j)));
      for (const auto& m : f.homs(i, j)) {
        FusionSystem::Map moved;
        for (Elem y : out.subgroup(k).elements()) moved.push_back(iso(f.apply(i, m, inverse[y])));
        out.add_morphism(k, l, std::move(moved));
      }
    }
  }
  return out;
}

}  // namespace profusion
