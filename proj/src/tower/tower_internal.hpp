#pragma once

#include "profusion/fusion.hpp"

namespace profusion::detail {

/// F / (D n ker) carried onto the lower subgroup along `down`, where F lives
/// on hi.as_group() and lo is the image of hi.
FusionSystem quotient_onto(const FusionSystem& f, const Subgroup& hi, const GroupHom& down, const Subgroup& lo);

}  // namespace profusion::detail
