#include "profusion/ffield.hpp"

#include <map>
#include <mutex>
#include <sstream>

#include "profusion/error.hpp"
#include "profusion/poly.hpp"

namespace profusion {

namespace {

constexpr std::uint32_t kMaxFieldSize = 1u << 20;
constexpr std::uint32_t kAddTableBound = 1024;

bool prime(std::uint32_t n) {
  if (n < 2) return false;
  for (std::uint32_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

}  // namespace

struct Field::Data {
  std::uint32_t p = 2;
  std::uint32_t m = 1;
  std::uint32_t q = 2;
  std::vector<std::uint32_t> modulus;
  std::vector<std::uint32_t> pow_p;  // p^i
  std::vector<std::uint32_t> add_table;
  std::vector<std::uint32_t> neg_table;
  std::vector<std::uint32_t> exp_table;  // length 2(q-1)
  std::vector<std::uint32_t> log_table;
  FqElem primitive{1};

  std::uint32_t digit(std::uint32_t v, std::uint32_t i) const { return (v / pow_p[i]) % p; }

  std::uint32_t add_slow(std::uint32_t a, std::uint32_t b) const {
    if (p == 2) return a ^ b;
    std::uint32_t out = 0;
    for (std::uint32_t i = 0; i < m; ++i) out += ((digit(a, i) + digit(b, i)) % p) * pow_p[i];
    return out;
  }

  std::uint32_t neg_slow(std::uint32_t a) const {
    if (p == 2) return a;
    std::uint32_t out = 0;
    for (std::uint32_t i = 0; i < m; ++i) out += ((p - digit(a, i)) % p) * pow_p[i];
    return out;
  }

  /// Schoolbook product of digit polynomials reduced by the modulus.
  std::uint32_t mul_slow(std::uint32_t a, std::uint32_t b) const {
    std::vector<std::uint64_t> prod(2 * m, 0);
    for (std::uint32_t i = 0; i < m; ++i)
      for (std::uint32_t j = 0; j < m; ++j) prod[i + j] = (prod[i + j] + digit(a, i) * digit(b, j)) % p;
    for (std::uint32_t k = 2 * m - 1; k >= m; --k) {
      std::uint64_t c = prod[k];
      if (c == 0) continue;
      prod[k] = 0;
      for (std::uint32_t i = 0; i < m; ++i)
        prod[k - m + i] = (prod[k - m + i] + (p - modulus[i]) * c) % p;
    }
    std::uint32_t out = 0;
    for (std::uint32_t i = 0; i < m; ++i) out += static_cast<std::uint32_t>(prod[i]) * pow_p[i];
    return out;
  }
};

namespace {

std::mutex registry_mutex;
std::map<std::pair<std::uint32_t, std::uint32_t>, Field>& registry() {
  static std::map<std::pair<std::uint32_t, std::uint32_t>, Field> fields;
  return fields;
}

}  // namespace

Field::Field() : Field(make(2, 1)) {}

Field Field::make(std::uint32_t p, std::uint32_t m) {
  if (!prime(p)) throw Error(Errc::NotPrime, std::to_string(p) + " is not prime");
  if (m == 0) throw Error(Errc::PreconditionViolated, "extension degree must be positive");
  std::uint64_t q64 = 1;
  for (std::uint32_t i = 0; i < m; ++i) {
    q64 *= p;
    if (q64 > kMaxFieldSize) throw Error(Errc::PreconditionViolated, "field too large");
  }
  {
    std::lock_guard<std::mutex> lock(registry_mutex);
    auto it = registry().find({p, m});
    if (it != registry().end()) return it->second;
  }

  auto data = std::make_shared<Data>();
  data->p = p;
  data->m = m;
  data->q = static_cast<std::uint32_t>(q64);
  data->pow_p.resize(m + 1);
  data->pow_p[0] = 1;
  for (std::uint32_t i = 1; i <= m; ++i) data->pow_p[i] = data->pow_p[i - 1] * p;

  if (m == 1) {
    data->modulus = {0, 1};
  } else {
    Field base = make(p, 1);
    // candidates are enumerated by (c_{m-1}, ..., c_0) with c_{m-1} most significant
    for (std::uint64_t rank = 0;; ++rank) {
      std::uint64_t r = rank;
      std::vector<std::uint32_t> low_first(m + 1, 0);
      low_first[m] = 1;
      for (std::uint32_t i = 0; i < m; ++i) {
        low_first[i] = static_cast<std::uint32_t>(r % p);
        r /= p;
      }
      std::vector<FqElem> coeffs;
      for (auto c : low_first) coeffs.push_back(FqElem{c});
      if (is_irreducible(Poly(base, coeffs))) {
        data->modulus = low_first;
        break;
      }
    }
  }

  const std::uint32_t q = data->q;
  if (q <= kAddTableBound) {
    data->add_table.resize(static_cast<std::size_t>(q) * q);
    for (std::uint32_t a = 0; a < q; ++a)
      for (std::uint32_t b = 0; b < q; ++b) data->add_table[a * q + b] = data->add_slow(a, b);
  }
  data->neg_table.resize(q);
  for (std::uint32_t a = 0; a < q; ++a) data->neg_table[a] = data->neg_slow(a);

  // primitive element: least encoding whose powers reach every nonzero element
  data->exp_table.assign(2 * (q - 1), 0);
  data->log_table.assign(q, 0);
  for (std::uint32_t g = 1; g < q; ++g) {
    if (q == 2 && g != 1) break;
    std::uint32_t x = 1;
    std::uint32_t order = 0;
    do {
      x = data->mul_slow(x, g);
      ++order;
    } while (x != 1 && order < q);
    if (order != q - 1) continue;
    data->primitive = FqElem{g};
    x = 1;
    for (std::uint32_t i = 0; i < q - 1; ++i) {
      data->exp_table[i] = x;
      data->exp_table[i + q - 1] = x;
      data->log_table[x] = i;
      x = data->mul_slow(x, g);
    }
    break;
  }
  ensure(q == 2 || data->primitive.v != 1, "primitive element search");

  Field f(std::move(data));
  std::lock_guard<std::mutex> lock(registry_mutex);
  return registry().emplace(std::make_pair(p, m), f).first->second;
}

std::uint32_t Field::characteristic() const { return data_->p; }
std::uint32_t Field::degree() const { return data_->m; }
std::uint32_t Field::size() const { return data_->q; }
const std::vector<std::uint32_t>& Field::modulus() const { return data_->modulus; }

FqElem Field::from_int(std::int64_t k) const {
  std::int64_t p = data_->p;
  return FqElem{static_cast<std::uint32_t>(((k % p) + p) % p)};
}

FqElem Field::primitive() const { return data_->primitive; }

FqElem Field::add(FqElem a, FqElem b) const {
  if (data_->p == 2) return FqElem{a.v ^ b.v};
  if (!data_->add_table.empty()) return FqElem{data_->add_table[a.v * data_->q + b.v]};
  return FqElem{data_->add_slow(a.v, b.v)};
}

FqElem Field::neg(FqElem a) const { return FqElem{data_->neg_table[a.v]}; }

FqElem Field::sub(FqElem a, FqElem b) const { return add(a, neg(b)); }

FqElem Field::mul(FqElem a, FqElem b) const {
  if (a.v == 0 || b.v == 0) return zero();
  return FqElem{data_->exp_table[data_->log_table[a.v] + data_->log_table[b.v]]};
}

FqElem Field::inv(FqElem a) const {
  if (a.v == 0) throw Error(Errc::PreconditionViolated, "inverse of zero");
  const std::uint32_t q1 = data_->q - 1;
  return FqElem{data_->exp_table[(q1 - data_->log_table[a.v]) % q1]};
}

FqElem Field::pow(FqElem a, std::uint64_t e) const {
  if (e == 0) return one();
  if (a.v == 0) return zero();
  const std::uint64_t q1 = data_->q - 1;
  return FqElem{data_->exp_table[(data_->log_table[a.v] * (e % q1)) % q1]};
}

std::vector<std::uint32_t> Field::digits(FqElem a) const {
  std::vector<std::uint32_t> out(data_->m);
  for (std::uint32_t i = 0; i < data_->m; ++i) out[i] = data_->digit(a.v, i);
  return out;
}

FqElem Field::from_digits(const std::vector<std::uint32_t>& digits) const {
  if (digits.size() > data_->m) throw Error(Errc::DimensionMismatch, "too many digits for field element");
  std::uint32_t v = 0;
  for (std::size_t i = 0; i < digits.size(); ++i) v += (digits[i] % data_->p) * data_->pow_p[i];
  return FqElem{v};
}

std::string Field::to_string(FqElem a) const {
  std::ostringstream out;
  out << "[";
  auto d = digits(a);
  for (std::size_t i = 0; i < d.size(); ++i) out << (i ? "," : "") << d[i];
  out << "]";
  return out.str();
}

std::string Field::modulus_string() const {
  std::ostringstream out;
  bool first = true;
  for (int i = static_cast<int>(data_->modulus.size()) - 1; i >= 0; --i) {
    std::uint32_t c = data_->modulus[i];
    if (c == 0) continue;
    if (!first) out << "+";
    first = false;
    if (c != 1 || i == 0) out << c;
    if (i >= 1) out << "t";
    if (i >= 2) out << "^" << i;
  }
  return out.str();
}

std::uint32_t splitting_degree(std::uint64_t p, std::uint64_t exponent) {
  while (exponent % p == 0) exponent /= p;
  if (exponent <= 2) return 1;
  std::uint64_t x = p % exponent;
  for (std::uint32_t m = 1;; ++m) {
    if (x == 1) return m;
    x = x * p % exponent;
  }
}

}  // namespace profusion
