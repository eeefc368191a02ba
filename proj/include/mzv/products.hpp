#ifndef MZV_PRODUCTS_HPP
#define MZV_PRODUCTS_HPP

#include "mzv/element.hpp"
#include "mzv/errors.hpp"
#include "mzv/operators.hpp"

namespace mzv {

// Harmonic (stuffle) product on H1:
//   1 * w = w * 1 = w
//   z_k w * z_l w' = z_k(w * z_l w') + z_l(z_k w * w') + z_{k+l}(w * w')
// Commutative and associative; throws DomainError outside H1.
Element harmonic_mul(const Element& a, const Element& b);

// Shuffle product on H: uw sh vw' = u(w sh vw') + v(uw sh w'), unit 1.
Element shuffle_mul(const Element& a, const Element& b);

// The operator w * (.) on H1.
LinearOperator harmonic_op(const Element& w);

// Truncated series 1/(1+y) = sum (-y)^j, j <= W.
Element one_over_one_plus_y(int W);

} // namespace mzv

#endif
