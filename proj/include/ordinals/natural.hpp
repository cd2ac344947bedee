#ifndef ORDINALS_NATURAL_HPP
#define ORDINALS_NATURAL_HPP

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace ordinals {

// Arbitrary-precision non-negative integer. Little-endian 32-bit limbs,
// no trailing zero limbs; zero is the empty limb vector.
class Natural {
public:
    Natural() = default;
    Natural(std::uint64_t value);

    static Natural from_string(std::string_view digits);

    bool is_zero() const { return limbs_.empty(); }
    bool is_one() const { return limbs_.size() == 1 && limbs_[0] == 1; }

    bool fits_u64() const { return limbs_.size() <= 2; }
    std::uint64_t to_u64() const;                 // throws std::domain_error if too large
    std::uint64_t to_u64_clamped(std::uint64_t cap) const;

    std::string str() const;

    friend Natural operator+(const Natural& a, const Natural& b);
    friend Natural operator-(const Natural& a, const Natural& b); // requires a >= b
    friend Natural operator*(const Natural& a, const Natural& b);

    // Quotient and remainder; throws std::domain_error on division by zero.
    static std::pair<Natural, Natural> divmod(const Natural& a, const Natural& d);

    Natural pow(const Natural& e) const;          // 0^0 = 1

    friend std::strong_ordering operator<=>(const Natural& a, const Natural& b);
    friend bool operator==(const Natural& a, const Natural& b) = default;

private:
    std::vector<std::uint32_t> limbs_;

    void trim();
    void shift_left_bits(unsigned bits);
    static int cmp_raw(const Natural& a, const Natural& b);
};

} // namespace ordinals

#endif
