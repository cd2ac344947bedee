#include "ordinals/natural.hpp"

#include <algorithm>
#include <stdexcept>

namespace ordinals {

Natural::Natural(std::uint64_t value) {
    while (value != 0) {
        limbs_.push_back(static_cast<std::uint32_t>(value & 0xffffffffu));
        value >>= 32;
    }
}

void Natural::trim() {
    while (!limbs_.empty() && limbs_.back() == 0) limbs_.pop_back();
}

int Natural::cmp_raw(const Natural& a, const Natural& b) {
    if (a.limbs_.size() != b.limbs_.size())
        return a.limbs_.size() < b.limbs_.size() ? -1 : 1;
    for (std::size_t i = a.limbs_.size(); i-- > 0;) {
        if (a.limbs_[i] != b.limbs_[i]) return a.limbs_[i] < b.limbs_[i] ? -1 : 1;
    }
    return 0;
}

std::strong_ordering operator<=>(const Natural& a, const Natural& b) {
    int c = Natural::cmp_raw(a, b);
    return c < 0 ? std::strong_ordering::less
         : c > 0 ? std::strong_ordering::greater
                 : std::strong_ordering::equal;
}

Natural operator+(const Natural& a, const Natural& b) {
    Natural out;
    const std::size_t n = std::max(a.limbs_.size(), b.limbs_.size());
    out.limbs_.reserve(n + 1);
    std::uint64_t carry = 0;
    for (std::size_t i = 0; i < n; ++i) {
        std::uint64_t s = carry;
        if (i < a.limbs_.size()) s += a.limbs_[i];
        if (i < b.limbs_.size()) s += b.limbs_[i];
        out.limbs_.push_back(static_cast<std::uint32_t>(s & 0xffffffffu));
        carry = s >> 32;
    }
    if (carry) out.limbs_.push_back(static_cast<std::uint32_t>(carry));
    return out;
}

Natural operator-(const Natural& a, const Natural& b) {
    if (a < b) throw std::domain_error("Natural subtraction underflow");
    Natural out;
    out.limbs_.reserve(a.limbs_.size());
    std::int64_t borrow = 0;
    for (std::size_t i = 0; i < a.limbs_.size(); ++i) {
        std::int64_t d = static_cast<std::int64_t>(a.limbs_[i]) - borrow
                       - (i < b.limbs_.size() ? static_cast<std::int64_t>(b.limbs_[i]) : 0);
        if (d < 0) {
            d += (std::int64_t{1} << 32);
            borrow = 1;
        } else {
            borrow = 0;
        }
        out.limbs_.push_back(static_cast<std::uint32_t>(d));
    }
    out.trim();
    return out;
}

Natural operator*(const Natural& a, const Natural& b) {
    if (a.is_zero() || b.is_zero()) return Natural();
    Natural out;
    out.limbs_.assign(a.limbs_.size() + b.limbs_.size(), 0);
    for (std::size_t i = 0; i < a.limbs_.size(); ++i) {
        std::uint64_t carry = 0;
        for (std::size_t j = 0; j < b.limbs_.size(); ++j) {
            std::uint64_t cur = static_cast<std::uint64_t>(a.limbs_[i]) * b.limbs_[j]
                              + out.limbs_[i + j] + carry;
            out.limbs_[i + j] = static_cast<std::uint32_t>(cur & 0xffffffffu);
            carry = cur >> 32;
        }
        out.limbs_[i + b.limbs_.size()] = static_cast<std::uint32_t>(carry);
    }
    out.trim();
    return out;
}

void Natural::shift_left_bits(unsigned bits) {
    if (is_zero() || bits == 0) return;
    const unsigned limb_shift = bits / 32, bit_shift = bits % 32;
    limbs_.insert(limbs_.begin(), limb_shift, 0);
    if (bit_shift != 0) {
        std::uint32_t carry = 0;
        for (std::size_t i = limb_shift; i < limbs_.size(); ++i) {
            std::uint32_t next = limbs_[i] >> (32 - bit_shift);
            limbs_[i] = (limbs_[i] << bit_shift) | carry;
            carry = next;
        }
        if (carry) limbs_.push_back(carry);
    }
}

std::pair<Natural, Natural> Natural::divmod(const Natural& a, const Natural& d) {
    if (d.is_zero()) throw std::domain_error("division by zero");
    if (a < d) return {Natural(), a};
    // Shift-and-subtract long division.
    const std::size_t abits = a.limbs_.size() * 32;
    const std::size_t dbits = d.limbs_.size() * 32;
    unsigned shift = static_cast<unsigned>(abits - dbits + 32);
    Natural den = d;
    den.shift_left_bits(shift);
    Natural rem = a;
    Natural quot;
    quot.limbs_.assign((shift + 32) / 32, 0);
    for (unsigned bit = shift + 1; bit-- > 0;) {
        if (!(rem < den)) {
            rem = rem - den;
            quot.limbs_[bit / 32] |= (std::uint32_t{1} << (bit % 32));
        }
        // halve den
        std::uint32_t carry = 0;
        for (std::size_t i = den.limbs_.size(); i-- > 0;) {
            std::uint32_t next = den.limbs_[i] << 31;
            den.limbs_[i] = (den.limbs_[i] >> 1) | carry;
            carry = next;
        }
        den.trim();
    }
    quot.trim();
    return {quot, rem};
}

Natural Natural::pow(const Natural& e) const {
    Natural result{1};
    Natural base = *this;
    Natural exp = e;
    const Natural two{2};
    while (!exp.is_zero()) {
        auto [q, r] = divmod(exp, two);
        if (!r.is_zero()) result = result * base;
        exp = q;
        if (!exp.is_zero()) base = base * base;
    }
    return result;
}

std::uint64_t Natural::to_u64() const {
    if (!fits_u64()) throw std::domain_error("Natural does not fit in 64 bits");
    std::uint64_t v = 0;
    for (std::size_t i = limbs_.size(); i-- > 0;) v = (v << 32) | limbs_[i];
    return v;
}

std::uint64_t Natural::to_u64_clamped(std::uint64_t cap) const {
    if (!fits_u64()) return cap;
    return std::min(to_u64(), cap);
}

std::string Natural::str() const {
    if (is_zero()) return "0";
    std::string out;
    Natural n = *this;
    const Natural chunk{1000000000u};
    std::vector<std::uint32_t> groups;
    while (!n.is_zero()) {
        auto [q, r] = divmod(n, chunk);
        groups.push_back(r.is_zero() ? 0u : static_cast<std::uint32_t>(r.to_u64()));
        n = q;
    }
    out = std::to_string(groups.back());
    for (std::size_t i = groups.size() - 1; i-- > 0;) {
        std::string part = std::to_string(groups[i]);
        out += std::string(9 - part.size(), '0') + part;
    }
    return out;
}

Natural Natural::from_string(std::string_view digits) {
    if (digits.empty()) throw std::domain_error("empty numeral");
    Natural out;
    const Natural ten{10};
    for (char ch : digits) {
        if (ch < '0' || ch > '9') throw std::domain_error("invalid digit in numeral");
        out = out * ten + Natural(static_cast<std::uint64_t>(ch - '0'));
    }
    return out;
}

} // namespace ordinals
