#pragma once

#include <cstddef>
#include <string_view>

#include "profusion/perm_group.hpp"

namespace profusion {

PermGroup symmetric(std::size_t n);
PermGroup alternating(std::size_t n);
PermGroup cyclic(std::size_t n);
PermGroup klein_four();

/// Dihedral group of the given order on order/2 points, generators
/// [rotation, reflection]. Order 4 gives the Klein four group on 4 points.
PermGroup dihedral(std::size_t order);
/// Generalized quaternion group (order a power of 2, at least 8), generators [a, b].
PermGroup quaternion(std::size_t order);
/// Semidihedral group (order a power of 2, at least 16), generators [a, b].
PermGroup semidihedral(std::size_t order);
/// PGL(2, q) for a prime q acting on the projective line {0..q-1, inf = q}.
PermGroup pgl2(std::size_t q);
/// PSL(2, q) for an odd prime q on the projective line.
PermGroup psl2(std::size_t q);

/// Direct product on the disjoint union of point sets; generators of `a`
/// come first.
PermGroup direct_product(const PermGroup& a, const PermGroup& b);

/// Accepts names such as "S4", "A5", "C6", "V4", "D16", "Q16", "SD16",
/// "symmetric(4)", "dihedral(2^4)", "PGL(2,7)", "PSL(2,7)" and products
/// joined by 'x' such as "C2xC3" or "D8xC3". Throws ParseError.
PermGroup group_by_name(std::string_view name);

}  // namespace profusion
