#pragma once

#include <cstdint>

namespace bcnfoc {

/// 1-based index i of a state vector delta_N^i.
using StateIndex = std::uint32_t;
/// 1-based index k of an input vector delta_M^k.
using InputIndex = std::uint32_t;

/// Index used for the pseudo-state that absorbs terminal costs.
inline constexpr StateIndex kPseudoState = 0;

/// Start position of an embedded snippet inside a larger source text.
struct TextOrigin {
  int line = 1;
  int column = 1;
};

}  // namespace bcnfoc
