#pragma once

/// @file builtin.hpp
/// The built-in fusion tables:
///   - C_full: the ten-label c = 4/5 minimal-model ring,
///   - A_sub: its closed six-label subring {0, 2/5, 7/5, 1/15, 3, 2/3},
///   - B_ext: the six-label extension ring W(0), W(2/5), W(2/3,+-), W(1/15,+-),
///   - sigma_fixed_sub: the four-label subring {0, 3, 2/5, 7/5}.

#include "potts/fusion/ring.hpp"

namespace potts::fusion {

/// Returns the named table; throws std::invalid_argument for unknown names.
/// Subring constructions verify closure under multiplication.
FusionRing builtin_table(const std::string& name);

/// All valid builtin_table names, in canonical order.
const std::vector<std::string>& builtin_table_names();

}  // namespace potts::fusion
