#ifndef CUNTZ_TEXT_HPP
#define CUNTZ_TEXT_HPP

#include <string>

#include "cuntz/clopen.hpp"
#include "cuntz/poly.hpp"

namespace cuntz {

// Textual word format: digit strings for alphabets up to nine letters,
// bracketed comma lists ("[1,12,3]") beyond that, and "e" for the empty
// word in both.
std::string format_word(const Word& w, int n);
Word parse_word(const std::string& text, int n);  // throws ParseError(0, ...)

std::string format_cylinder(const CylinderUnion& c);

// Unitary file format: a header line "n=<letters>", then one pair per line
// as "alpha:beta"; "#" starts a comment. The parsed map must validate as a
// unitary.
std::string format_unitary(const PolyUnitary& u);
PolyUnitary parse_unitary(const std::string& text);

}  // namespace cuntz

#endif
