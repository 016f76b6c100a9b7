#pragma once

#include <optional>
#include <string>

#include "minorkit/linmatrix.hpp"

namespace minorkit {

// General polynomial expression: signed sum of terms; a term is an optional
// integer or a/b coefficient and '*'-joined variable powers (var or var^k).
Polynomial parse_polynomial(const RingPtr& ring, const std::string& text);

// Restriction to linear forms: signed sums of coef*var / var tokens, or "0".
Polynomial parse_linear_form(const RingPtr& ring, const std::string& text);

// Matrix text:
//   vars: x1 x2 x3
//   field: 32003          (optional; omit for the rationals)
//   <n ';'-separated linear forms>
//   <n ';'-separated linear forms>
// cli_field, when set, must agree with any field: header.
LinMatrix parse_matrix_text(const std::string& text, std::optional<Field> cli_field,
                            MonomialOrder order = MonomialOrder::degrevlex);

} // namespace minorkit
