#include "profusion/poly.hpp"

#include <algorithm>
#include <sstream>

#include "profusion/error.hpp"

namespace profusion {

Poly::Poly(Field field, std::vector<FqElem> coeffs) : field_(std::move(field)), c_(std::move(coeffs)) { trim(); }

Poly Poly::linear(const Field& f, FqElem root) { return Poly(f, {f.neg(root), Field::one()}); }

void Poly::trim() {
  while (!c_.empty() && c_.back() == Field::zero()) c_.pop_back();
}

Poly Poly::operator+(const Poly& o) const {
  std::vector<FqElem> out(std::max(c_.size(), o.c_.size()));
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = field_.add(coeff(i), o.coeff(i));
  return Poly(field_, std::move(out));
}

Poly Poly::operator-(const Poly& o) const {
  std::vector<FqElem> out(std::max(c_.size(), o.c_.size()));
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = field_.sub(coeff(i), o.coeff(i));
  return Poly(field_, std::move(out));
}

Poly Poly::operator*(const Poly& o) const {
  if (is_zero() || o.is_zero()) return zero(field_);
  std::vector<FqElem> out(c_.size() + o.c_.size() - 1);
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (c_[i] == Field::zero()) continue;
    for (std::size_t j = 0; j < o.c_.size(); ++j) out[i + j] = field_.add(out[i + j], field_.mul(c_[i], o.c_[j]));
  }
  return Poly(field_, std::move(out));
}

Poly Poly::scale(FqElem k) const {
  std::vector<FqElem> out(c_.size());
  for (std::size_t i = 0; i < c_.size(); ++i) out[i] = field_.mul(c_[i], k);
  return Poly(field_, std::move(out));
}

Poly Poly::monic() const {
  if (is_zero()) return *this;
  return scale(field_.inv(leading()));
}

FqElem Poly::eval(FqElem x) const {
  FqElem acc = Field::zero();
  for (std::size_t i = c_.size(); i-- > 0;) acc = field_.add(field_.mul(acc, x), c_[i]);
  return acc;
}

Poly Poly::derivative() const {
  if (c_.size() <= 1) return zero(field_);
  std::vector<FqElem> out(c_.size() - 1);
  for (std::size_t i = 1; i < c_.size(); ++i) out[i - 1] = field_.mul(field_.from_int(static_cast<std::int64_t>(i)), c_[i]);
  return Poly(field_, std::move(out));
}

std::string Poly::to_string() const {
  std::ostringstream out;
  out << "[";
  for (std::size_t i = 0; i < c_.size(); ++i) out << (i ? ", " : "") << field_.to_string(c_[i]);
  out << "]";
  return out.str();
}

std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b) {
  if (b.is_zero()) throw Error(Errc::ZeroPolynomial, "division by the zero polynomial");
  const Field& f = a.field();
  std::vector<FqElem> rem = a.coeffs();
  if (a.degree() < b.degree()) return {Poly::zero(f), a};
  std::vector<FqElem> quo(rem.size() - b.coeffs().size() + 1);
  const FqElem lead_inv = f.inv(b.leading());
  const std::size_t db = b.coeffs().size() - 1;
  for (std::size_t k = rem.size(); k-- > db;) {
    FqElem c = f.mul(rem[k], lead_inv);
    if (c == Field::zero()) continue;
    quo[k - db] = c;
    for (std::size_t j = 0; j <= db; ++j) rem[k - db + j] = f.sub(rem[k - db + j], f.mul(c, b.coeffs()[j]));
  }
  return {Poly(f, std::move(quo)), Poly(f, std::move(rem))};
}

Poly operator%(const Poly& a, const Poly& b) { return divmod(a, b).second; }

Poly gcd(const Poly& a, const Poly& b) {
  Poly x = a, y = b;
  while (!y.is_zero()) {
    Poly r = x % y;
    x = std::move(y);
    y = std::move(r);
  }
  return x.monic();
}

Poly powmod(const Poly& base, std::uint64_t e, const Poly& mod) {
  Poly result = Poly::constant(base.field(), Field::one()) % mod;
  Poly b = base % mod;
  while (e > 0) {
    if (e & 1) result = (result * b) % mod;
    e >>= 1;
    if (e) b = (b * b) % mod;
  }
  return result;
}

namespace {

/// base^(q^k) mod m by repeated q-th powers.
Poly frobenius_power(const Poly& base, std::uint64_t q, std::uint64_t k, const Poly& mod) {
  Poly r = base % mod;
  for (std::uint64_t i = 0; i < k; ++i) r = powmod(r, q, mod);
  return r;
}

bool less_poly(const Poly& a, const Poly& b) {
  if (a.degree() != b.degree()) return a.degree() < b.degree();
  return std::lexicographical_compare(a.coeffs().rbegin(), a.coeffs().rend(), b.coeffs().rbegin(), b.coeffs().rend());
}

std::vector<Factor> squarefree(const Poly& f) {
  const Field& fld = f.field();
  std::vector<Factor> out;
  Poly c = gcd(f, f.derivative());
  Poly w = divmod(f, c).first;
  int i = 1;
  while (!w.is_one()) {
    Poly y = gcd(w, c);
    Poly fac = divmod(w, y).first;
    if (!fac.is_one()) out.push_back({fac.monic(), i});
    w = y;
    c = divmod(c, y).first;
    ++i;
  }
  if (!c.is_one()) {
    const int p = static_cast<int>(fld.characteristic());
    for (auto& [g, mult] : squarefree(pth_root(c).monic())) out.push_back({g, mult * p});
  }
  return out;
}

std::vector<std::pair<Poly, int>> distinct_degree(Poly f) {
  const Field& fld = f.field();
  std::vector<std::pair<Poly, int>> out;
  const Poly x = Poly::x(fld);
  Poly h = x % f;
  for (int d = 1; 2 * d <= f.degree(); ++d) {
    h = powmod(h, fld.size(), f);
    Poly g = gcd(h - x, f);
    if (!g.is_one()) {
      out.emplace_back(g, d);
      f = divmod(f, g).first;
      h = h % f;
    }
  }
  if (f.degree() > 0) out.emplace_back(f.monic(), f.degree());
  return out;
}

/// Deterministic sweep over polynomials of degree < n by encoding rank.
Poly sweep_poly(const Field& fld, std::uint64_t rank) {
  std::vector<FqElem> c;
  const std::uint64_t q = fld.size();
  while (rank > 0) {
    c.push_back(FqElem{static_cast<std::uint32_t>(rank % q)});
    rank /= q;
  }
  return Poly(fld, std::move(c));
}

void equal_degree(const Poly& g, int d, std::vector<Poly>& out) {
  if (g.degree() == d) {
    out.push_back(g.monic());
    return;
  }
  const Field& fld = g.field();
  const std::uint64_t q = fld.size();
  std::uint64_t qd = 1;
  for (int i = 0; i < d; ++i) qd *= q;
  for (std::uint64_t rank = fld.size();; ++rank) {
    Poly a = sweep_poly(fld, rank);
    if (a.degree() >= g.degree()) throw Error(Errc::InternalInvariant, "equal-degree split sweep exhausted");
    Poly b;
    if (fld.characteristic() == 2) {
      // trace from GF(q^d) down to GF(2)
      const std::uint64_t bits = static_cast<std::uint64_t>(fld.degree()) * d;
      Poly term = a % g;
      b = term;
      for (std::uint64_t j = 1; j < bits; ++j) {
        term = (term * term) % g;
        b = b + term;
      }
    } else {
      b = powmod(a, (qd - 1) / 2, g) - Poly::constant(fld, Field::one());
    }
    Poly h = gcd(b, g);
    if (h.degree() > 0 && h.degree() < g.degree()) {
      equal_degree(h, d, out);
      equal_degree(divmod(g, h).first, d, out);
      return;
    }
  }
}

}  // namespace

Poly pth_root(const Poly& f) {
  const Field& fld = f.field();
  const std::size_t p = fld.characteristic();
  if (!f.derivative().is_zero()) throw Error(Errc::PreconditionViolated, "pth_root needs a vanishing derivative");
  // a^(1/p) = a^(q/p)
  const std::uint64_t root_exp = fld.size() / p;
  std::vector<FqElem> out;
  for (std::size_t i = 0; i < f.coeffs().size(); i += p) out.push_back(fld.pow(f.coeffs()[i], root_exp));
  return Poly(fld, std::move(out));
}

std::vector<Factor> factor(const Poly& f) {
  if (f.is_zero()) throw Error(Errc::ZeroPolynomial, "cannot factor the zero polynomial");
  std::vector<Factor> out;
  for (const auto& [sqf, mult] : squarefree(f.monic())) {
    for (const auto& [part, d] : distinct_degree(sqf)) {
      std::vector<Poly> irreducibles;
      equal_degree(part, d, irreducibles);
      for (auto& p : irreducibles) out.push_back({std::move(p), mult});
    }
  }
  std::sort(out.begin(), out.end(), [](const Factor& a, const Factor& b) {
    if (a.poly == b.poly) return a.multiplicity < b.multiplicity;
    return less_poly(a.poly, b.poly);
  });
  // merge repeated irreducibles coming from different squarefree parts
  std::vector<Factor> merged;
  for (auto& fac : out) {
    if (!merged.empty() && merged.back().poly == fac.poly)
      merged.back().multiplicity += fac.multiplicity;
    else
      merged.push_back(std::move(fac));
  }
  return merged;
}

bool is_irreducible(const Poly& f) {
  if (f.degree() < 1) return false;
  if (f.degree() == 1) return true;
  const Field& fld = f.field();
  const std::uint64_t q = fld.size();
  const int n = f.degree();
  const Poly g = f.monic();
  const Poly x = Poly::x(fld);
  if (!(frobenius_power(x, q, static_cast<std::uint64_t>(n), g) - x).is_zero()) return false;
  for (int r = 2; r <= n; ++r) {
    if (n % r != 0) continue;
    bool r_prime = true;
    for (int d = 2; d * d <= r; ++d) r_prime = r_prime && r % d != 0;
    if (!r_prime) continue;
    Poly h = frobenius_power(x, q, static_cast<std::uint64_t>(n / r), g) - x;
    if (!gcd(h, g).is_one()) return false;
  }
  return true;
}

std::vector<FqElem> roots(const Poly& f) {
  std::vector<FqElem> out;
  for (const auto& fac : factor(f))
    if (fac.poly.degree() == 1) out.push_back(f.field().neg(fac.poly.coeff(0)));
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace profusion
