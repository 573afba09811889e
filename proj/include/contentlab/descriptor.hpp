#pragma once

#include <string_view>

#include "contentlab/algebra.hpp"
#include "contentlab/finring.hpp"

namespace contentlab {

// Ring descriptors:
//   Z/<n> | trunc(<ring>,<d>) | prod(<ring>,<ring>) | quot(<ring>; <elem>,...)
// Algebra descriptors (over a separately given base):
//   id | trunc(<d>) | quad(<elem>) | group(Z/<n>) | monoid(<path>)
// Element expressions are integer polynomials built with + - * ^ and
// parentheses; symbols are x (variable of the base's innermost truncation;
// nested truncations add z, w, v, u outward),
// the algebra generator (y, t, or x over a base without x), and the monoid
// basis names e<k>. "(a,b)" denotes an element of a product ring.
//
// All parse failures throw ParseError carrying the 0-based position.

RingPtr parse_ring(std::string_view text, const Limits& limits = {});
AlgebraPtr parse_algebra(std::string_view text, const RingPtr& base, const Limits& limits = {});
Elem parse_ring_element(std::string_view text, const RingPtr& ring);
AlgebraElement parse_element(std::string_view text, const AlgebraPtr& algebra);

}  // namespace contentlab
