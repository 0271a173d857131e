#include "profusion/perm_group.hpp"

#include <algorithm>
#include <deque>
#include <sstream>
#include <unordered_map>

#include "profusion/error.hpp"

namespace profusion {

namespace {
constexpr std::size_t kTableBound = 2048;
}

struct PermGroup::Data {
  std::size_t degree = 1;
  std::vector<Perm> generators;
  std::vector<Elem> generator_elems;
  std::vector<Perm> elements;
  std::unordered_map<Perm, Elem, PermHash> index;
  std::vector<Elem> table;
  std::vector<Elem> inverse;
};

PermGroup::PermGroup() : PermGroup(from_generators(1, {})) {}

PermGroup PermGroup::from_generators(std::size_t degree, std::vector<Perm> generators, std::size_t bound) {
  if (degree == 0) degree = 1;
  for (const auto& g : generators)
    if (g.degree() != degree) throw Error(Errc::NonBijection, "generator degree does not match group degree");
  std::unordered_map<Perm, bool, PermHash> seen;
  std::vector<Perm> elements{Perm::identity(degree)};
  seen.emplace(elements.front(), true);
  for (std::size_t head = 0; head < elements.size(); ++head) {
    for (const auto& g : generators) {
      Perm next = elements[head] * g;
      if (seen.emplace(next, true).second) {
        if (elements.size() >= bound)
          throw Error(Errc::EnumerationBoundExceeded, "group order exceeds " + std::to_string(bound));
        elements.push_back(std::move(next));
      }
    }
  }
  std::sort(elements.begin(), elements.end());
  return finish(degree, std::move(generators), std::move(elements));
}

PermGroup PermGroup::from_sorted_elements(std::size_t degree, std::vector<Perm> generators,
                                          std::vector<Perm> sorted_elements) {
  return finish(degree, std::move(generators), std::move(sorted_elements));
}

PermGroup PermGroup::finish(std::size_t degree, std::vector<Perm> generators, std::vector<Perm> elements) {
  auto data = std::make_shared<Data>();
  data->degree = degree;
  data->elements = std::move(elements);
  data->index.reserve(data->elements.size() * 2);
  for (Elem i = 0; i < data->elements.size(); ++i) data->index.emplace(data->elements[i], i);
  const std::size_t n = data->elements.size();
  data->inverse.resize(n);
  for (Elem i = 0; i < n; ++i) data->inverse[i] = data->index.at(data->elements[i].inverse());
  if (n <= kTableBound) {
    data->table.resize(n * n);
    for (Elem a = 0; a < n; ++a)
      for (Elem b = 0; b < n; ++b) data->table[a * n + b] = data->index.at(data->elements[a] * data->elements[b]);
  }
  data->generators = std::move(generators);
  for (const auto& g : data->generators) data->generator_elems.push_back(data->index.at(g));
  return PermGroup(std::move(data));
}

std::size_t PermGroup::degree() const { return data_->degree; }
std::size_t PermGroup::order() const { return data_->elements.size(); }
const std::vector<Perm>& PermGroup::generators() const { return data_->generators; }
const std::vector<Elem>& PermGroup::generator_elems() const { return data_->generator_elems; }
const std::vector<Perm>& PermGroup::elements() const { return data_->elements; }

const Perm& PermGroup::perm(Elem x) const {
  if (x >= data_->elements.size()) throw Error(Errc::BadIndex, "element index out of range");
  return data_->elements[x];
}

std::optional<Elem> PermGroup::find(const Perm& p) const {
  auto it = data_->index.find(p);
  if (it == data_->index.end()) return std::nullopt;
  return it->second;
}

Elem PermGroup::index_of(const Perm& p) const {
  auto it = data_->index.find(p);
  if (it == data_->index.end()) throw Error(Errc::SubgroupNotContained, "permutation " + p.to_string() + " not in group");
  return it->second;
}

Elem PermGroup::mul(Elem a, Elem b) const {
  const std::size_t n = data_->elements.size();
  if (!data_->table.empty()) return data_->table[a * n + b];
  return data_->index.at(data_->elements[a] * data_->elements[b]);
}

Elem PermGroup::inv(Elem a) const { return data_->inverse[a]; }

Elem PermGroup::conj(Elem x, Elem g) const { return mul(mul(inv(g), x), g); }

Elem PermGroup::commutator(Elem x, Elem y) const { return mul(mul(inv(x), inv(y)), mul(x, y)); }

Elem PermGroup::pow(Elem x, std::int64_t n) const {
  if (n < 0) {
    x = inv(x);
    n = -n;
  }
  Elem result = identity();
  Elem base = x;
  while (n > 0) {
    if (n & 1) result = mul(result, base);
    base = mul(base, base);
    n >>= 1;
  }
  return result;
}

std::uint64_t PermGroup::element_order(Elem x) const {
  std::uint64_t k = 1;
  for (Elem y = x; y != identity(); y = mul(y, x)) ++k;
  return k;
}

bool PermGroup::same_elements(const PermGroup& other) const {
  return same_as(other) || (degree() == other.degree() && elements() == other.elements());
}

std::string PermGroup::describe() const {
  std::ostringstream out;
  out << "<";
  for (std::size_t i = 0; i < data_->generators.size(); ++i) {
    if (i) out << ", ";
    out << data_->generators[i].to_string();
  }
  out << "> of order " << order() << " on " << degree() << " points";
  return out.str();
}

// ---------------------------------------------------------------------------

Subgroup::Subgroup(PermGroup parent, std::vector<Elem> elems, std::vector<Elem> gens)
    : parent_(std::move(parent)), elems_(std::move(elems)), gens_(std::move(gens)) {
  mask_.assign(parent_.order(), false);
  for (Elem x : elems_) mask_[x] = true;
}

Subgroup Subgroup::generated(const PermGroup& parent, std::span<const Elem> generators) {
  std::vector<bool> in(parent.order(), false);
  std::vector<Elem> gens;
  for (Elem g : generators) {
    if (g >= parent.order()) throw Error(Errc::BadIndex, "generator index out of range");
    if (g != PermGroup::identity() && std::find(gens.begin(), gens.end(), g) == gens.end()) gens.push_back(g);
  }
  std::vector<Elem> elems{PermGroup::identity()};
  in[PermGroup::identity()] = true;
  for (std::size_t head = 0; head < elems.size(); ++head) {
    for (Elem g : gens) {
      Elem y = parent.mul(elems[head], g);
      if (!in[y]) {
        in[y] = true;
        elems.push_back(y);
      }
    }
  }
  std::sort(elems.begin(), elems.end());
  return Subgroup(parent, std::move(elems), std::move(gens));
}

Subgroup Subgroup::from_elements(const PermGroup& parent, std::vector<Elem> elements) {
  std::sort(elements.begin(), elements.end());
  elements.erase(std::unique(elements.begin(), elements.end()), elements.end());
  std::vector<bool> in(parent.order(), false);
  for (Elem x : elements) {
    if (x >= parent.order()) throw Error(Errc::BadIndex, "element index out of range");
    in[x] = true;
  }
  if (elements.empty() || !in[PermGroup::identity()]) throw Error(Errc::NotSubgroup, "element set lacks the identity");
  for (Elem a : elements)
    for (Elem b : elements)
      if (!in[parent.mul(a, b)]) throw Error(Errc::NotSubgroup, "element set is not closed under products");
  // Greedy generating set: add each element not yet in the closure.
  std::vector<Elem> gens;
  std::vector<bool> closure(parent.order(), false);
  closure[PermGroup::identity()] = true;
  std::vector<Elem> closure_list{PermGroup::identity()};
  for (Elem x : elements) {
    if (closure[x]) continue;
    gens.push_back(x);
    for (std::size_t head = 0; head < closure_list.size(); ++head) {
      for (Elem g : gens) {
        Elem y = parent.mul(closure_list[head], g);
        if (!closure[y]) {
          closure[y] = true;
          closure_list.push_back(y);
        }
      }
    }
  }
  return Subgroup(parent, std::move(elements), std::move(gens));
}

Subgroup Subgroup::whole(const PermGroup& parent) {
  std::vector<Elem> elems(parent.order());
  for (Elem i = 0; i < elems.size(); ++i) elems[i] = i;
  return Subgroup(parent, std::move(elems), parent.generator_elems());
}

Subgroup Subgroup::trivial(const PermGroup& parent) { return Subgroup(parent, {PermGroup::identity()}, {}); }

bool Subgroup::contains(const Subgroup& other) const {
  for (Elem x : other.elems_)
    if (!contains(x)) return false;
  return true;
}

PermGroup Subgroup::as_group() const {
  if (!standalone_) {
    std::vector<Perm> perms;
    perms.reserve(elems_.size());
    for (Elem x : elems_) perms.push_back(parent_.perm(x));
    std::vector<Perm> gens;
    for (Elem g : gens_) gens.push_back(parent_.perm(g));
    standalone_ = std::make_shared<PermGroup>(
        PermGroup::from_sorted_elements(parent_.degree(), std::move(gens), std::move(perms)));
  }
  return *standalone_;
}

Elem Subgroup::local_index(Elem x) const {
  auto it = std::lower_bound(elems_.begin(), elems_.end(), x);
  if (it == elems_.end() || *it != x) throw Error(Errc::SubgroupNotContained, "element not in subgroup");
  return static_cast<Elem>(it - elems_.begin());
}

Subgroup Subgroup::conjugate(Elem g) const {
  std::vector<Elem> elems;
  elems.reserve(elems_.size());
  for (Elem x : elems_) elems.push_back(parent_.conj(x, g));
  std::sort(elems.begin(), elems.end());
  std::vector<Elem> gens;
  for (Elem x : gens_) gens.push_back(parent_.conj(x, g));
  return Subgroup(parent_, std::move(elems), std::move(gens));
}

Subgroup Subgroup::intersect(const Subgroup& other) const {
  std::vector<Elem> elems;
  for (Elem x : elems_)
    if (other.contains(x)) elems.push_back(x);
  return from_elements(parent_, std::move(elems));
}

Subgroup Subgroup::join(const Subgroup& other) const {
  std::vector<Elem> gens = gens_;
  for (Elem g : other.gens_) gens.push_back(g);
  return generated(parent_, gens);
}

std::string Subgroup::describe() const {
  std::ostringstream out;
  out << "<";
  for (std::size_t i = 0; i < gens_.size(); ++i) {
    if (i) out << ", ";
    out << parent_.perm(gens_[i]).to_string();
  }
  out << "> (order " << order() << ")";
  return out.str();
}

}  // namespace profusion
