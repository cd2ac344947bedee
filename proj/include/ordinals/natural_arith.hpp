#ifndef ORDINALS_NATURAL_ARITH_HPP
#define ORDINALS_NATURAL_ARITH_HPP

#include <span>

#include "ordinals/ordinal.hpp"

namespace ordinals {

// Hessenberg natural sum: CNF merge, coefficients of equal exponents add.
Ordinal nat_sum(const Ordinal& a, const Ordinal& b);

// Hessenberg natural product: full polynomial expansion with
// w^x (x) w^y = w^(x (+) y) on monomials.
Ordinal nat_prod(const Ordinal& a, const Ordinal& b);

Ordinal nat_sum_list(std::span<const Ordinal> xs);   // empty -> 0
Ordinal nat_prod_list(std::span<const Ordinal> xs);  // empty -> 1

} // namespace ordinals

#endif
