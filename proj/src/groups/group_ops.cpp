#include "profusion/group_ops.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

#include "profusion/constructors.hpp"
#include "profusion/error.hpp"

namespace profusion {

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

std::uint64_t p_part(std::uint64_t n, std::uint64_t p) {
  std::uint64_t out = 1;
  while (n % p == 0) {
    n /= p;
    out *= p;
  }
  return out;
}

bool is_p_power(std::uint64_t n, std::uint64_t p) { return p_part(n, p) == n; }

namespace {

void require_same_parent(const PermGroup& g, const Subgroup& s) {
  if (!s.parent().same_elements(g)) throw Error(Errc::SubgroupNotContained, "subgroup belongs to a different group");
}

bool normalizes(const PermGroup& g, Elem x, const Subgroup& s) {
  for (Elem h : s.generators())
    if (!s.contains(g.conj(h, x))) return false;
  return true;
}

}  // namespace

Subgroup sylow_subgroup(const PermGroup& g, std::uint64_t p) {
  if (!is_prime(p)) throw Error(Errc::NotPrime, std::to_string(p) + " is not prime");
  const std::uint64_t target = p_part(g.order(), p);
  Subgroup current = Subgroup::trivial(g);
  while (current.order() < target) {
    bool grown = false;
    for (Elem x = 0; x < g.order() && !grown; ++x) {
      if (current.contains(x) || !normalizes(g, x, current)) continue;
      if (!current.contains(g.pow(x, static_cast<std::int64_t>(p)))) continue;
      std::vector<Elem> gens = current.generators();
      gens.push_back(x);
      current = Subgroup::generated(g, gens);
      grown = true;
    }
    ensure(grown, "Sylow growth stalled");
  }
  return current;
}

Subgroup centralizer(const PermGroup& g, const Subgroup& s) {
  require_same_parent(g, s);
  std::vector<Elem> elems;
  for (Elem x = 0; x < g.order(); ++x) {
    bool ok = true;
    for (Elem h : s.generators())
      if (g.mul(x, h) != g.mul(h, x)) {
        ok = false;
        break;
      }
    if (ok) elems.push_back(x);
  }
  return Subgroup::from_elements(g, std::move(elems));
}

Subgroup normalizer(const PermGroup& g, const Subgroup& s) {
  require_same_parent(g, s);
  std::vector<Elem> elems;
  for (Elem x = 0; x < g.order(); ++x)
    if (normalizes(g, x, s)) elems.push_back(x);
  return Subgroup::from_elements(g, std::move(elems));
}

Subgroup center(const PermGroup& g) { return centralizer(g, Subgroup::whole(g)); }

bool is_normal(const Subgroup& n, const Subgroup& in) {
  const PermGroup& g = n.parent();
  if (!in.contains(n)) return false;
  for (Elem x : in.generators())
    if (!normalizes(g, x, n)) return false;
  return true;
}

bool is_normal(const PermGroup& g, const Subgroup& n) {
  require_same_parent(g, n);
  for (Elem x : g.generator_elems())
    if (!normalizes(g, x, n)) return false;
  return true;
}

Subgroup normal_closure(const PermGroup& g, const Subgroup& s) {
  require_same_parent(g, s);
  Subgroup current = s;
  for (;;) {
    std::vector<Elem> gens = current.generators();
    bool grown = false;
    for (Elem h : current.generators())
      for (Elem x : g.generator_elems()) {
        Elem y = g.conj(h, x);
        if (!current.contains(y)) {
          gens.push_back(y);
          grown = true;
        }
      }
    if (!grown) return current;
    current = Subgroup::generated(g, gens);
  }
}

std::vector<Elem> transporter(const PermGroup& g, const Subgroup& s, const Subgroup& t) {
  require_same_parent(g, s);
  require_same_parent(g, t);
  std::vector<Elem> out;
  if (s.order() > t.order()) return out;
  for (Elem x = 0; x < g.order(); ++x) {
    bool ok = true;
    for (Elem h : s.generators())
      if (!t.contains(g.conj(h, x))) {
        ok = false;
        break;
      }
    if (ok) out.push_back(x);
  }
  return out;
}

std::optional<Elem> is_conjugate(const PermGroup& g, const Subgroup& s, const Subgroup& t) {
  require_same_parent(g, s);
  require_same_parent(g, t);
  if (s.order() != t.order()) return std::nullopt;
  for (Elem x = 0; x < g.order(); ++x) {
    bool ok = true;
    for (Elem h : s.generators())
      if (!t.contains(g.conj(h, x))) {
        ok = false;
        break;
      }
    if (ok) return x;
  }
  return std::nullopt;
}

std::optional<Elem> is_conjugate(const PermGroup& g, Elem x, Elem y) {
  for (Elem z = 0; z < g.order(); ++z)
    if (g.conj(x, z) == y) return z;
  return std::nullopt;
}

std::vector<std::vector<Elem>> conjugacy_classes(const PermGroup& g) {
  std::vector<bool> seen(g.order(), false);
  std::vector<std::vector<Elem>> classes;
  for (Elem x = 0; x < g.order(); ++x) {
    if (seen[x]) continue;
    std::vector<Elem> cls{x};
    seen[x] = true;
    for (std::size_t head = 0; head < cls.size(); ++head)
      for (Elem s : g.generator_elems()) {
        Elem y = g.conj(cls[head], s);
        if (!seen[y]) {
          seen[y] = true;
          cls.push_back(y);
        }
      }
    std::sort(cls.begin(), cls.end());
    classes.push_back(std::move(cls));
  }
  return classes;
}

Quotient quotient(const PermGroup& g, const Subgroup& n) {
  require_same_parent(g, n);
  if (!is_normal(g, n)) throw Error(Errc::NotNormal, "subgroup " + n.describe() + " is not normal");
  if (n.is_trivial()) {
    std::vector<Elem> reps(g.order());
    std::iota(reps.begin(), reps.end(), 0);
    return Quotient{g, GroupHom::identity(g), std::move(reps)};
  }
  constexpr Elem kUnset = ~Elem{0};
  std::vector<Elem> label(g.order(), kUnset);
  std::vector<Elem> reps;
  for (Elem x = 0; x < g.order(); ++x) {
    if (label[x] != kUnset) continue;
    const Elem id = static_cast<Elem>(reps.size());
    reps.push_back(x);
    for (Elem h : n.elements()) label[g.mul(h, x)] = id;
  }
  const std::size_t cosets = reps.size();
  std::vector<Perm> gen_perms;
  for (Elem s : g.generator_elems()) {
    std::vector<Perm::Point> images(cosets);
    for (std::size_t c = 0; c < cosets; ++c) images[c] = static_cast<Perm::Point>(label[g.mul(reps[c], s)]);
    gen_perms.emplace_back(std::move(images));
  }
  PermGroup q = PermGroup::from_generators(cosets, gen_perms);
  std::vector<Elem> images;
  for (const auto& p : gen_perms) images.push_back(q.index_of(p));
  GroupHom projection = GroupHom::from_generator_images(g, q, images);
  ensure(q.order() * n.order() == g.order(), "quotient order law");
  return Quotient{q, std::move(projection), std::move(reps)};
}

std::vector<Subgroup> subgroups_of(const PermGroup& g, std::size_t bound) {
  if (g.order() > bound)
    throw Error(Errc::EnumerationBoundExceeded, "subgroup enumeration bound " + std::to_string(bound) + " exceeded");
  std::map<std::vector<Elem>, Subgroup> found;
  std::vector<Subgroup> cyclic;
  for (Elem x = 0; x < g.order(); ++x) {
    Elem gen[] = {x};
    Subgroup c = Subgroup::generated(g, gen);
    if (found.emplace(c.elements(), c).second) cyclic.push_back(c);
  }
  std::vector<Subgroup> work;
  for (const auto& [key, s] : found) work.push_back(s);
  for (std::size_t head = 0; head < work.size(); ++head) {
    for (const auto& c : cyclic) {
      if (work[head].contains(c)) continue;
      Subgroup j = work[head].join(c);
      if (found.emplace(j.elements(), j).second) work.push_back(j);
    }
  }
  std::vector<Subgroup> out;
  for (auto& [key, s] : found) out.push_back(s);
  std::sort(out.begin(), out.end());
  return out;
}

Subgroup lift_from(const Subgroup& s, const Subgroup& inner) {
  std::vector<Elem> elems;
  elems.reserve(inner.order());
  for (Elem x : inner.elements()) elems.push_back(s.elements()[x]);
  std::vector<Elem> gens;
  for (Elem x : inner.generators()) gens.push_back(s.elements()[x]);
  Subgroup out = Subgroup::generated(s.parent(), gens);
  std::sort(elems.begin(), elems.end());
  ensure(out.elements() == elems, "subgroup lift");
  return out;
}

std::vector<Subgroup> subgroups_of(const Subgroup& s, std::size_t bound) {
  std::vector<Subgroup> out;
  for (const auto& inner : subgroups_of(s.as_group(), bound)) out.push_back(lift_from(s, inner));
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Subgroup> normal_subgroups(const PermGroup& g) {
  std::map<std::vector<Elem>, Subgroup> found;
  std::vector<Subgroup> minimal;
  for (const auto& cls : conjugacy_classes(g)) {
    Elem gen[] = {cls.front()};
    Subgroup c = normal_closure(g, Subgroup::generated(g, gen));
    if (found.emplace(c.elements(), c).second) minimal.push_back(c);
  }
  std::vector<Subgroup> work;
  for (const auto& [key, s] : found) work.push_back(s);
  for (std::size_t head = 0; head < work.size(); ++head)
    for (const auto& c : minimal) {
      if (work[head].contains(c)) continue;
      Subgroup j = work[head].join(c);
      if (found.emplace(j.elements(), j).second) work.push_back(j);
    }
  std::vector<Subgroup> out;
  for (auto& [key, s] : found) out.push_back(s);
  std::sort(out.begin(), out.end());
  return out;
}

std::optional<std::uint64_t> prime_of_p_group(const PermGroup& g) {
  std::uint64_t n = g.order();
  if (n == 1) return std::nullopt;
  for (std::uint64_t p = 2; p <= n; ++p)
    if (n % p == 0) return is_p_power(n, p) ? std::optional<std::uint64_t>(p) : std::nullopt;
  return std::nullopt;
}

bool is_p_group(const PermGroup& g, std::uint64_t p) { return is_p_power(g.order(), p); }

FrattiniData frattini_quotient(const PermGroup& p) {
  auto prime = prime_of_p_group(p);
  if (p.order() == 1) {
    Subgroup triv = Subgroup::trivial(p);
    return FrattiniData{triv, 0, {}, quotient(p, triv)};
  }
  if (!prime) throw Error(Errc::NotPGroup, "group of order " + std::to_string(p.order()) + " is not a p-group");
  std::vector<Elem> gens;
  for (Elem x = 0; x < p.order(); ++x) {
    gens.push_back(p.pow(x, static_cast<std::int64_t>(*prime)));
    for (Elem y = 0; y < x; ++y) gens.push_back(p.commutator(x, y));
  }
  std::sort(gens.begin(), gens.end());
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
  Subgroup phi = Subgroup::generated(p, gens);
  Subgroup span = phi;
  std::vector<Elem> lifts;
  std::vector<Elem> candidates = p.generator_elems();
  for (Elem x = 0; x < p.order(); ++x) candidates.push_back(x);
  for (Elem x : candidates) {
    if (span.contains(x)) continue;
    lifts.push_back(x);
    Elem gen[] = {x};
    span = span.join(Subgroup::generated(p, gen));
  }
  std::size_t rank = lifts.size();
  ensure(p_part(p.order() / phi.order(), *prime) == p.order() / phi.order(), "Frattini quotient is a p-group");
  std::uint64_t expected = 1;
  for (std::size_t i = 0; i < rank; ++i) expected *= *prime;
  ensure(expected == p.order() / phi.order(), "Frattini quotient is elementary abelian");
  return FrattiniData{phi, rank, std::move(lifts), quotient(p, phi)};
}

bool is_abelian(const PermGroup& g) {
  const auto& gens = g.generator_elems();
  for (Elem a : gens)
    for (Elem b : gens)
      if (g.mul(a, b) != g.mul(b, a)) return false;
  return true;
}

bool is_abelian(const Subgroup& s) {
  const PermGroup& g = s.parent();
  for (Elem a : s.generators())
    for (Elem b : s.generators())
      if (g.mul(a, b) != g.mul(b, a)) return false;
  return true;
}

bool is_cyclic(const PermGroup& g) {
  for (Elem x = 0; x < g.order(); ++x)
    if (g.element_order(x) == g.order()) return true;
  return false;
}

std::uint64_t exponent(const PermGroup& g) {
  std::uint64_t e = 1;
  for (Elem x = 0; x < g.order(); ++x) e = std::lcm(e, g.element_order(x));
  return e;
}

std::vector<Elem> minimal_generators(const PermGroup& g) {
  std::vector<std::pair<std::uint64_t, Elem>> ranked;
  for (Elem x = 1; x < g.order(); ++x) ranked.emplace_back(g.element_order(x), x);
  std::stable_sort(ranked.begin(), ranked.end(), [](const auto& a, const auto& b) { return a.first > b.first; });
  Subgroup span = Subgroup::trivial(g);
  std::vector<Elem> gens;
  for (const auto& [order, x] : ranked) {
    if (span.order() == g.order()) break;
    if (span.contains(x)) continue;
    gens.push_back(x);
    span = Subgroup::generated(g, gens);
  }
  return gens;
}

std::optional<GroupHom> find_isomorphism(const PermGroup& a, const PermGroup& b) {
  if (a.order() != b.order()) return std::nullopt;
  std::vector<Elem> gens = minimal_generators(a);
  std::vector<Perm> gen_perms;
  for (Elem x : gens) gen_perms.push_back(a.perm(x));
  PermGroup domain = PermGroup::from_sorted_elements(a.degree(), gen_perms, a.elements());

  std::vector<std::vector<Elem>> candidates(gens.size());
  for (std::size_t k = 0; k < gens.size(); ++k) {
    std::uint64_t ord = a.element_order(gens[k]);
    for (Elem y = 0; y < b.order(); ++y)
      if (b.element_order(y) == ord) candidates[k].push_back(y);
    if (candidates[k].empty()) return std::nullopt;
  }
  std::vector<Elem> images(gens.size());
  std::optional<GroupHom> result;
  auto search = [&](auto&& self, std::size_t k) -> bool {
    if (k == gens.size()) {
      auto hom = GroupHom::try_from_generator_images(domain, b, images);
      if (hom && hom->injective()) {
        result = std::move(hom);
        return true;
      }
      return false;
    }
    for (Elem y : candidates[k]) {
      images[k] = y;
      if (self(self, k + 1)) return true;
    }
    return false;
  };
  search(search, 0);
  return result;
}

bool is_dihedral(const PermGroup& g) {
  if (g.order() < 4 || g.order() % 2 != 0) return false;
  return find_isomorphism(g, dihedral(g.order())).has_value();
}

}  // namespace profusion
