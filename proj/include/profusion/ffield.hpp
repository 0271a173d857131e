#pragma once

#include <compare>
#include <cstdint>
#include <memory>
#include <string>
#include <vector>

namespace profusion {

/// An element of GF(p^m), encoded by its base-p digits: the value
/// sum c_i p^i stands for sum c_i t^i modulo the field modulus.
/// Encoding 0 is zero and encoding 1 is one.
struct FqElem {
  std::uint32_t v = 0;
  friend auto operator<=>(const FqElem&, const FqElem&) = default;
};

/// The finite field GF(p^m) with a deterministic modulus: the least monic
/// irreducible polynomial of degree m, comparing coefficients from t^(m-1)
/// down to t^0. Cheap shared handle.
class Field {
 public:
  /// GF(2).
  Field();

  /// Throws NotPrime, or PreconditionViolated when m == 0 or p^m is too large.
  static Field make(std::uint32_t p, std::uint32_t m);

  std::uint32_t characteristic() const;
  std::uint32_t degree() const;
  std::uint32_t size() const;
  /// Monic modulus coefficients over GF(p), low degree first.
  const std::vector<std::uint32_t>& modulus() const;

  static constexpr FqElem zero() { return FqElem{0}; }
  static constexpr FqElem one() { return FqElem{1}; }
  FqElem from_int(std::int64_t k) const;
  FqElem element(std::uint32_t index) const { return FqElem{index}; }
  /// A fixed generator of the multiplicative group.
  FqElem primitive() const;

  FqElem add(FqElem a, FqElem b) const;
  FqElem sub(FqElem a, FqElem b) const;
  FqElem neg(FqElem a) const;
  FqElem mul(FqElem a, FqElem b) const;
  /// Throws PreconditionViolated on zero.
  FqElem inv(FqElem a) const;
  FqElem div(FqElem a, FqElem b) const { return mul(a, inv(b)); }
  FqElem pow(FqElem a, std::uint64_t e) const;
  FqElem frobenius(FqElem a) const { return pow(a, characteristic()); }

  std::vector<std::uint32_t> digits(FqElem a) const;
  FqElem from_digits(const std::vector<std::uint32_t>& digits) const;
  std::string to_string(FqElem a) const;
  std::string modulus_string() const;

  bool operator==(const Field& other) const {
    return characteristic() == other.characteristic() && degree() == other.degree();
  }

 private:
  struct Data;
  explicit Field(std::shared_ptr<const Data> data) : data_(std::move(data)) {}
  std::shared_ptr<const Data> data_;
};

/// Smallest m with p^m = 1 modulo the p'-part of `exponent`; GF(p^m) is then
/// a splitting field for every group of that exponent.
std::uint32_t splitting_degree(std::uint64_t p, std::uint64_t exponent);

}  // namespace profusion
