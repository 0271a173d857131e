#include "profusion/constructors.hpp"

#include <algorithm>
#include <cctype>
#include <string>
#include <vector>

#include "profusion/error.hpp"
#include "profusion/group_ops.hpp"

namespace profusion {

namespace {

using Points = std::vector<Perm::Point>;

Perm from_map(std::size_t degree, auto&& f) {
  Points images(degree);
  for (std::size_t x = 0; x < degree; ++x) images[x] = static_cast<Perm::Point>(f(x));
  return Perm(std::move(images));
}

bool is_power_of_two(std::size_t n) { return n != 0 && (n & (n - 1)) == 0; }

/// Right-regular representation of <a, b | a^m, b a = a^r b, b^2 = a^t>
/// on the normal forms a^i b^j, point index i + m*j.
PermGroup metacyclic_regular(std::size_t m, std::size_t r, std::size_t t) {
  const std::size_t n = 2 * m;
  auto times_a = [&](std::size_t x) {
    std::size_t i = x % m, j = x / m;
    return j == 0 ? (i + 1) % m : (i + r) % m + m;
  };
  auto times_b = [&](std::size_t x) {
    std::size_t i = x % m, j = x / m;
    return j == 0 ? i + m : (i + t) % m;
  };
  return PermGroup::from_generators(n, {from_map(n, times_a), from_map(n, times_b)});
}

std::size_t mod_pow(std::size_t b, std::size_t e, std::size_t m) {
  std::size_t r = 1 % m;
  b %= m;
  while (e) {
    if (e & 1) r = r * b % m;
    b = b * b % m;
    e >>= 1;
  }
  return r;
}

std::size_t primitive_root(std::size_t q) {
  for (std::size_t w = 2; w < q; ++w) {
    bool ok = true;
    for (std::size_t d = 1; d < q - 1; ++d)
      if (mod_pow(w, d, q) == 1) {
        ok = false;
        break;
      }
    if (ok) return w;
  }
  return 1;
}

/// Projective line maps for x -> x+1, x -> s*x, x -> -1/x over GF(q).
PermGroup projective_group(std::size_t q, std::size_t scale) {
  if (!is_prime(q) || q < 3) throw Error(Errc::PreconditionViolated, "projective groups need an odd prime q");
  const std::size_t inf = q;
  const std::size_t n = q + 1;
  Perm shift = from_map(n, [&](std::size_t x) { return x == inf ? inf : (x + 1) % q; });
  Perm mult = from_map(n, [&](std::size_t x) { return x == inf ? inf : x * scale % q; });
  Perm invert = from_map(n, [&](std::size_t x) -> std::size_t {
    if (x == inf) return 0;
    if (x == 0) return inf;
    return (q - mod_pow(x, q - 2, q)) % q;
  });
  return PermGroup::from_generators(n, {shift, mult, invert});
}

std::string lower(std::string_view s) {
  std::string out;
  for (char c : s)
    if (!std::isspace(static_cast<unsigned char>(c))) out.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
  return out;
}

std::size_t parse_size(const std::string& text) {
  auto caret = text.find('^');
  try {
    if (caret != std::string::npos) {
      std::size_t base = std::stoul(text.substr(0, caret));
      std::size_t exp = std::stoul(text.substr(caret + 1));
      std::size_t v = 1;
      for (std::size_t i = 0; i < exp; ++i) v *= base;
      return v;
    }
    std::size_t pos = 0;
    std::size_t v = std::stoul(text, &pos);
    if (pos != text.size()) throw Error(Errc::ParseError, "bad size: " + text);
    return v;
  } catch (const std::logic_error&) {
    throw Error(Errc::ParseError, "bad size: " + text);
  }
}

PermGroup single_group(const std::string& name) {
  auto open = name.find('(');
  if (open != std::string::npos) {
    if (name.back() != ')') throw Error(Errc::ParseError, "unbalanced parenthesis in " + name);
    std::string head = name.substr(0, open);
    std::string arg = name.substr(open + 1, name.size() - open - 2);
    if (head == "pgl" || head == "psl") {
      auto comma = arg.find(',');
      if (comma == std::string::npos || arg.substr(0, comma) != "2")
        throw Error(Errc::ParseError, "only PGL(2,q) and PSL(2,q) are supported");
      std::size_t q = parse_size(arg.substr(comma + 1));
      return head == "pgl" ? pgl2(q) : psl2(q);
    }
    std::size_t n = parse_size(arg);
    if (head == "symmetric" || head == "s") return symmetric(n);
    if (head == "alternating" || head == "a") return alternating(n);
    if (head == "cyclic" || head == "c") return cyclic(n);
    if (head == "dihedral" || head == "d") return dihedral(n);
    if (head == "quaternion" || head == "q") return quaternion(n);
    if (head == "semidihedral" || head == "sd") return semidihedral(n);
    throw Error(Errc::ParseError, "unknown group constructor " + head);
  }
  if (name == "v4" || name == "klein") return klein_four();
  std::size_t digits = 0;
  while (digits < name.size() && std::isalpha(static_cast<unsigned char>(name[digits]))) ++digits;
  if (digits == 0 || digits == name.size()) throw Error(Errc::ParseError, "unknown group name " + name);
  std::string head = name.substr(0, digits);
  std::size_t n = parse_size(name.substr(digits));
  if (head == "s") return symmetric(n);
  if (head == "a") return alternating(n);
  if (head == "c") return cyclic(n);
  if (head == "d") return dihedral(n);
  if (head == "q") return quaternion(n);
  if (head == "sd") return semidihedral(n);
  throw Error(Errc::ParseError, "unknown group name " + name);
}

}  // namespace

PermGroup symmetric(std::size_t n) {
  if (n <= 1) return PermGroup::from_generators(1, {});
  std::vector<std::size_t> cycle(n);
  for (std::size_t i = 0; i < n; ++i) cycle[i] = i;
  if (n == 2) return PermGroup::from_generators(2, {Perm::from_cycles(2, {{0, 1}})});
  return PermGroup::from_generators(n, {Perm::from_cycles(n, {{0, 1}}), Perm::from_cycles(n, {cycle})});
}

PermGroup alternating(std::size_t n) {
  if (n <= 2) return PermGroup::from_generators(std::max<std::size_t>(n, 1), {});
  std::vector<Perm> gens;
  for (std::size_t i = 2; i < n; ++i) gens.push_back(Perm::from_cycles(n, {{0, 1, i}}));
  return PermGroup::from_generators(n, gens);
}

PermGroup cyclic(std::size_t n) {
  if (n <= 1) return PermGroup::from_generators(1, {});
  return PermGroup::from_generators(n, {from_map(n, [&](std::size_t x) { return (x + 1) % n; })});
}

PermGroup klein_four() {
  return PermGroup::from_generators(4, {Perm::from_cycles(4, {{0, 1}, {2, 3}}), Perm::from_cycles(4, {{0, 2}, {1, 3}})});
}

PermGroup dihedral(std::size_t order) {
  if (order < 4 || order % 2 != 0) {
    if (order == 2) return cyclic(2);
    throw Error(Errc::PreconditionViolated, "dihedral order must be even and at least 2");
  }
  if (order == 4) return klein_four();
  const std::size_t m = order / 2;
  Perm rotation = from_map(m, [&](std::size_t x) { return (x + 1) % m; });
  Perm reflection = from_map(m, [&](std::size_t x) { return (m - x) % m; });
  return PermGroup::from_generators(m, {rotation, reflection});
}

PermGroup quaternion(std::size_t order) {
  if (order < 8 || !is_power_of_two(order)) throw Error(Errc::UnsupportedFamily, "quaternion order must be 2^n >= 8");
  const std::size_t m = order / 2;
  return metacyclic_regular(m, m - 1, m / 2);
}

PermGroup semidihedral(std::size_t order) {
  if (order < 16 || !is_power_of_two(order))
    throw Error(Errc::UnsupportedFamily, "semidihedral order must be 2^n >= 16");
  const std::size_t m = order / 2;
  return metacyclic_regular(m, m / 2 - 1, 0);
}

PermGroup pgl2(std::size_t q) { return projective_group(q, primitive_root(q)); }

PermGroup psl2(std::size_t q) {
  std::size_t w = primitive_root(q);
  return projective_group(q, w * w % q);
}

PermGroup direct_product(const PermGroup& a, const PermGroup& b) {
  const std::size_t na = a.degree(), nb = b.degree();
  const std::size_t n = na + nb;
  std::vector<Perm> gens;
  for (const auto& g : a.generators())
    gens.push_back(from_map(n, [&](std::size_t x) { return x < na ? g(static_cast<Perm::Point>(x)) : x; }));
  for (const auto& g : b.generators())
    gens.push_back(from_map(n, [&](std::size_t x) { return x < na ? x : na + g(static_cast<Perm::Point>(x - na)); }));
  return PermGroup::from_generators(n, gens);
}

PermGroup group_by_name(std::string_view raw) {
  std::string name = lower(raw);
  if (name.empty()) throw Error(Errc::ParseError, "empty group name");
  std::vector<std::string> factors;
  int depth = 0;
  std::string current;
  for (char c : name) {
    if (c == '(') ++depth;
    if (c == ')') --depth;
    if (c == 'x' && depth == 0) {
      factors.push_back(current);
      current.clear();
    } else {
      current.push_back(c);
    }
  }
  factors.push_back(current);
  PermGroup g = single_group(factors.front());
  for (std::size_t i = 1; i < factors.size(); ++i) g = direct_product(g, single_group(factors[i]));
  return g;
}

}  // namespace profusion
