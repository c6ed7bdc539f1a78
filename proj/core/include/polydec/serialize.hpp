#ifndef POLYDEC_SERIALIZE_HPP
#define POLYDEC_SERIALIZE_HPP

#include <string>
#include <string_view>

#include "polydec/poly.hpp"

namespace polydec {

/// Canonical byte encoding of a system (compact JSON text):
///   {"field":"gf:7","nvars":3,"polys":[[[[2,1,0],"3"],[[0,0,1],"1"]],...]}
/// Terms are listed in descending graded-lex order with canonical coefficient
/// text, so the encoding is deterministic.
std::string serialize(const PolySystem& sys);

/// Parses bytes produced by serialize (or compatible hand-written files).
/// Rejects malformed exponent vectors, out-of-field or zero coefficients, and
/// duplicate monomials; malformed JSON reports the byte position.
PolySystem parse_system(std::string_view bytes);

}  // namespace polydec

#endif
