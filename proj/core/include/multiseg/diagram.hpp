#pragma once

#include <string>

#include "multiseg/multisegment.hpp"

namespace multiseg {

/// Dot-row rendering: one row per segment in canonical order, columns
/// indexed by exponent, with an exponent axis underneath each line group.
std::string render_text(const Multisegment& a);

/// The same layout as an SVG document (one circle per exponent point).
std::string render_svg(const Multisegment& a);

}  // namespace multiseg
