#pragma once

#include <string>
#include <vector>

#include "hv/poly.hpp"

namespace hv {

// Parse a linear (degree <= 1) expression such as "u1+2*u2-x" or
// "3/2*u1 - u4" against the given variable names. Unknown names are
// rejected; a bare number contributes a constant term.
Poly<Rational> parse_linear_expression(const std::string& text,
                                       const std::vector<std::string>& vars);

// Parse a comma-separated variable map such as "u1->u1+u2,u2->u2".
// Result[i] is the image of from_vars[i]; a variable not mentioned maps to
// the variable of the same name on the target side (error when absent).
std::vector<Poly<Rational>> parse_variable_map(const std::string& text,
                                               const std::vector<std::string>& from_vars,
                                               const std::vector<std::string>& to_vars);

}  // namespace hv
