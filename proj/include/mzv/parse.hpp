#ifndef MZV_PARSE_HPP
#define MZV_PARSE_HPP

#include "mzv/element.hpp"
#include "mzv/errors.hpp"

#include <string>
#include <string_view>

namespace mzv {

// Grammar (whitespace insignificant):
//   element  := ['-'] term (('+'|'-') term)*
//   term     := [scalar '*'] word | scalar
//   scalar   := rational | '(' poly ')'
//   poly     := signed polynomial in 'c', '^' powers, e.g. 1-3/2c+c^2
//   rational := integer ['/' positive-integer]
//   word     := ('x'|'y')+ | '1'
Element parse_element(std::string_view text);

Word parse_word(std::string_view text);

// Deterministic inverse: terms in canonical order, c-powers ascending.
// parse_element(format_element(e)) == e for every normalized Element.
std::string format_element(const Element& e);

} // namespace mzv

#endif
