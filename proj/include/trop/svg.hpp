#pragma once

#include "trop/closure.hpp"

namespace trop {

/// Rational axis-aligned window a ≤ x ≤ b, c ≤ y ≤ d.
struct Window {
  Rational x_lo, x_hi, y_lo, y_hi;
};

/// Deterministic SVG for a rank-2 stratified tropicalization: dense-torus
/// cells drawn inside the window, boundary strata marked on the window frame
/// at positions given by their N(σ)-coordinates, with a legend mapping frame
/// marks to cones. Byte-identical output for identical input.
std::string render_svg(const StratifiedTrop& st, const Window& window);

}  // namespace trop
