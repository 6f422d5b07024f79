#ifndef ALGINT_CORE_EXPRPARSE_HPP
#define ALGINT_CORE_EXPRPARSE_HPP

#include "algebra.hpp"

namespace algint {

// Element expressions over an algebra's basis labels:
//
//   expr   := term (('+'|'-') term)*
//   term   := scalar? ('*'? factor)*
//   factor := label ('^' integer)?
//   scalar := rational | rational 'i' | '(' rational ('+'|'-') rational 'i' ')'
//
// Labels are matched greedily against the algebra's basis labels and
// named elements (longest match wins), so labels such as "x(g)" or
// "theta^2" work unquoted. Powers expand by repeated multiplication.
// Approx-mode scalars additionally accept decimal notation.
Element parse_element(const std::string& text, const AlgebraPtr& algebra);

} // namespace algint

#endif
