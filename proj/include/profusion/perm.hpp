#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

namespace profusion {

/// A permutation of {0, ..., n-1}. Permutations act on the right:
/// `(p * q)(x) == q(p(x))`, so `p * q` means "apply p, then q".
class Perm {
 public:
  using Point = std::uint16_t;

  Perm() = default;

  /// Throws Errc::NonBijection unless `images` is a bijection of {0..n-1}.
  explicit Perm(std::vector<Point> images);

  static Perm identity(std::size_t degree);

  /// Builds a permutation of the given degree from disjoint cycles.
  static Perm from_cycles(std::size_t degree, const std::vector<std::vector<std::size_t>>& cycles);

  /// Parses cycle notation such as "(0 1)(2 3 4)" or "()" for the identity.
  static Perm parse(std::string_view text, std::size_t degree);

  std::size_t degree() const noexcept { return images_.size(); }
  Point operator()(Point x) const { return images_[x]; }
  const std::vector<Point>& images() const noexcept { return images_; }

  Perm operator*(const Perm& rhs) const;
  Perm inverse() const;
  bool is_identity() const noexcept;

  std::string to_string() const;

  friend auto operator<=>(const Perm&, const Perm&) = default;
  friend bool operator==(const Perm&, const Perm&) = default;

 private:
  std::vector<Point> images_;
};

struct PermHash {
  std::size_t operator()(const Perm& p) const noexcept;
};

}  // namespace profusion
