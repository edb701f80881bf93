#pragma once

/**
 * @file render.hpp
 * @brief Text forms of polynomials.
 *
 * plain       1/3*n^3 + 1/2*n^2 + 1/6*n
 * latex       \frac{1}{3} n^{3} + \frac{1}{2} n^{2} + \frac{1}{6} n
 * structured  {"degree":3,"coefficients":[{"power":3,"value":"1/3"},...]}
 *
 * Terms are in descending powers and zero coefficients are omitted. The
 * structured form is one line of JSON with keys in the order shown. Its
 * "degree" is null for the zero polynomial, and "value" is always exact
 * p/q text. parse_polynomial() reads it back losslessly.
 */

#include <optional>
#include <string>
#include <string_view>

#include "powsum/polynomial.hpp"

namespace powsum {

enum class RenderStyle { plain, latex, structured };

/// Accepts "plain", "latex", "structured".
std::optional<RenderStyle> parse_render_style(std::string_view name);

std::string render_polynomial(const Polynomial& p, RenderStyle style);

/// Inverse of render_polynomial(p, RenderStyle::structured). Missing powers
/// are zero. Throws ParseError naming the offending field and position.
Polynomial parse_polynomial(std::string_view structured);

}  // namespace powsum
