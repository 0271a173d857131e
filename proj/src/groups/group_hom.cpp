#include "profusion/group_hom.hpp"

#include <algorithm>
#include <limits>

#include "profusion/error.hpp"

namespace profusion {

namespace {
constexpr Elem kUnset = std::numeric_limits<Elem>::max();
}

std::optional<GroupHom> GroupHom::try_from_generator_images(const PermGroup& domain, const PermGroup& codomain,
                                                            std::span<const Elem> images) {
  const auto& gens = domain.generator_elems();
  if (images.size() != gens.size())
    throw Error(Errc::DimensionMismatch, "generator image count does not match generator count");
  std::vector<Elem> map(domain.order(), kUnset);
  map[PermGroup::identity()] = PermGroup::identity();
  std::vector<Elem> queue{PermGroup::identity()};
  for (std::size_t head = 0; head < queue.size(); ++head) {
    Elem x = queue[head];
    for (std::size_t k = 0; k < gens.size(); ++k) {
      Elem y = domain.mul(x, gens[k]);
      Elem image = codomain.mul(map[x], images[k]);
      if (map[y] == kUnset) {
        map[y] = image;
        queue.push_back(y);
      } else if (map[y] != image) {
        return std::nullopt;
      }
    }
  }
  return GroupHom(domain, codomain, std::move(map));
}

GroupHom GroupHom::from_generator_images(const PermGroup& domain, const PermGroup& codomain,
                                         std::span<const Elem> images) {
  auto hom = try_from_generator_images(domain, codomain, images);
  if (!hom) throw Error(Errc::PreconditionViolated, "generator images do not define a homomorphism");
  return *hom;
}

GroupHom GroupHom::from_map(const PermGroup& domain, const PermGroup& codomain, std::vector<Elem> map) {
  if (map.size() != domain.order()) throw Error(Errc::DimensionMismatch, "element map has wrong length");
  for (Elem a = 0; a < domain.order(); ++a) {
    if (map[a] >= codomain.order()) throw Error(Errc::BadIndex, "image index out of range");
    for (Elem b = 0; b < domain.order(); ++b)
      if (map[domain.mul(a, b)] != codomain.mul(map[a], map[b]))
        throw Error(Errc::PreconditionViolated, "element map is not a homomorphism");
  }
  return GroupHom(domain, codomain, std::move(map));
}

GroupHom GroupHom::identity(const PermGroup& group) {
  std::vector<Elem> map(group.order());
  for (Elem i = 0; i < map.size(); ++i) map[i] = i;
  return GroupHom(group, group, std::move(map));
}

std::vector<Elem> GroupHom::generator_images() const {
  std::vector<Elem> out;
  for (Elem g : domain_.generator_elems()) out.push_back(map_[g]);
  return out;
}

Subgroup GroupHom::image() const { return Subgroup::generated(codomain_, generator_images()); }

Subgroup GroupHom::image(const Subgroup& s) const {
  std::vector<Elem> gens;
  for (Elem g : s.generators()) gens.push_back(map_[g]);
  return Subgroup::generated(codomain_, gens);
}

Subgroup GroupHom::kernel() const {
  std::vector<Elem> elems;
  for (Elem x = 0; x < map_.size(); ++x)
    if (map_[x] == PermGroup::identity()) elems.push_back(x);
  return Subgroup::from_elements(domain_, std::move(elems));
}

Subgroup GroupHom::preimage(const Subgroup& s) const {
  std::vector<Elem> elems;
  for (Elem x = 0; x < map_.size(); ++x)
    if (s.contains(map_[x])) elems.push_back(x);
  return Subgroup::from_elements(domain_, std::move(elems));
}

bool GroupHom::injective() const {
  return std::count(map_.begin(), map_.end(), PermGroup::identity()) == 1;
}

bool GroupHom::surjective() const { return image().order() == codomain_.order(); }

GroupHom GroupHom::compose(const GroupHom& then) const {
  if (!codomain_.same_elements(then.domain_)) throw Error(Errc::BaseMismatch, "composition of incompatible maps");
  std::vector<Elem> map(map_.size());
  for (Elem x = 0; x < map_.size(); ++x) map[x] = then.map_[map_[x]];
  return GroupHom(domain_, then.codomain_, std::move(map));
}

GroupHom induced_hom(const GroupHom& surjection, const GroupHom& map) {
  if (!surjection.domain().same_elements(map.domain())) throw Error(Errc::BaseMismatch, "maps start at different groups");
  if (!surjection.surjective()) throw Error(Errc::PreconditionViolated, "first map is not surjective");
  constexpr Elem kUnset = ~Elem{0};
  std::vector<Elem> out(surjection.codomain().order(), kUnset);
  for (Elem x = 0; x < surjection.domain().order(); ++x) {
    Elem& slot = out[surjection(x)];
    if (slot == kUnset)
      slot = map(x);
    else if (slot != map(x))
      throw Error(Errc::PreconditionViolated, "kernel of the surjection is not in the kernel of the map");
  }
  return GroupHom::from_map(surjection.codomain(), map.codomain(), std::move(out));
}

}  // namespace profusion
