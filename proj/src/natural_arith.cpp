#include "ordinals/natural_arith.hpp"

namespace ordinals {

Ordinal nat_sum(const Ordinal& a, const Ordinal& b) {
    const auto& at = a.terms();
    const auto& bt = b.terms();
    std::vector<Monomial> out;
    out.reserve(at.size() + bt.size());
    std::size_t i = 0, j = 0;
    while (i < at.size() && j < bt.size()) {
        auto c = at[i].exponent <=> bt[j].exponent;
        if (c == std::strong_ordering::greater) {
            out.push_back(at[i++]);
        } else if (c == std::strong_ordering::less) {
            out.push_back(bt[j++]);
        } else {
            out.push_back(Monomial{at[i].exponent, at[i].coefficient + bt[j].coefficient});
            ++i;
            ++j;
        }
    }
    out.insert(out.end(), at.begin() + i, at.end());
    out.insert(out.end(), bt.begin() + j, bt.end());
    return Ordinal::from_terms(std::move(out));
}

Ordinal nat_prod(const Ordinal& a, const Ordinal& b) {
    Ordinal acc;
    for (const Monomial& s : a.terms()) {
        for (const Monomial& t : b.terms()) {
            acc = nat_sum(acc, Ordinal::from_terms({Monomial{
                              nat_sum(s.exponent, t.exponent),
                              s.coefficient * t.coefficient}}));
        }
    }
    return acc;
}

Ordinal nat_sum_list(std::span<const Ordinal> xs) {
    Ordinal acc;
    for (const Ordinal& x : xs) acc = nat_sum(acc, x);
    return acc;
}

Ordinal nat_prod_list(std::span<const Ordinal> xs) {
    Ordinal acc{1};
    for (const Ordinal& x : xs) acc = nat_prod(acc, x);
    return acc;
}

} // namespace ordinals
