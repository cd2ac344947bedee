#ifndef ORDINALS_ORDINAL_HPP
#define ORDINALS_ORDINAL_HPP

#include <compare>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "ordinals/natural.hpp"

namespace ordinals {

struct Monomial;

// An ordinal below epsilon_0 in Cantor normal form: a finite list of
// monomials w^exponent * coefficient with strictly decreasing exponents
// and coefficients >= 1. The empty list is 0. Values are immutable once
// built; every operation returns a fresh canonical value.
class Ordinal {
public:
    Ordinal();
    Ordinal(std::uint64_t n);
    Ordinal(const Natural& n);

    Ordinal(const Ordinal&);
    Ordinal(Ordinal&&) noexcept;
    Ordinal& operator=(const Ordinal&);
    Ordinal& operator=(Ordinal&&) noexcept;
    ~Ordinal();

    static const Ordinal& zero();
    static const Ordinal& one();
    static const Ordinal& omega();

    // Builds from a monomial list that must already be canonical
    // (strictly decreasing exponents, positive coefficients).
    static Ordinal from_terms(std::vector<Monomial> terms);

    bool is_zero() const;
    bool is_finite() const;          // 0 or a single w^0 monomial
    bool is_canonical() const;       // exposed for validity property tests

    const std::vector<Monomial>& terms() const;
    std::size_t term_count() const;

    const Ordinal& degree() const;            // largest exponent; throws on 0
    const Natural& leading_coefficient() const; // throws on 0
    Ordinal leading_monomial() const;          // m(0) = 0
    Ordinal rest() const;                      // value minus its leading monomial

    Natural as_natural() const;                // throws if infinite

    std::string str() const;                   // canonical text form

    friend std::strong_ordering operator<=>(const Ordinal& a, const Ordinal& b);
    friend bool operator==(const Ordinal& a, const Ordinal& b);

private:
    std::vector<Monomial> terms_;
};

struct Monomial {
    Ordinal exponent;
    Natural coefficient;
};

std::strong_ordering cmp(const Ordinal& a, const Ordinal& b);

Ordinal omega_pow(const Ordinal& e);

// Classical ordinal sum: monomials of a below d(b) are absorbed.
Ordinal ord_add(const Ordinal& a, const Ordinal& b);

// Unique z with a + z = b; throws std::domain_error unless a <= b.
Ordinal ord_sub_left(const Ordinal& a, const Ordinal& b);

// Classical ordinal product.
Ordinal ord_mul(const Ordinal& a, const Ordinal& b);

// a = d*q + r with r < d; throws std::domain_error when d = 0.
std::pair<Ordinal, Ordinal> ord_divmod(const Ordinal& a, const Ordinal& d);

// Guarded exponentiation: w^e for base omega, integer power for finite
// base and exponent; anything else throws std::domain_error.
Ordinal ord_pow(const Ordinal& base, const Ordinal& exponent);

} // namespace ordinals

#endif
