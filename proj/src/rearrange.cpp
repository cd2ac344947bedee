#include "ordinals/rearrange.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "ordinals/inf_ops.hpp"
#include "ordinals/natural_arith.hpp"

namespace ordinals {

ValueSet make_value_set(std::vector<Ordinal> values) {
    std::sort(values.begin(), values.end());
    values.erase(std::unique(values.begin(), values.end()), values.end());
    return values;
}

namespace {

// Left-fold values over every ordering of xs: a subset's value set is
// built from the value sets of its one-smaller subsets, deduplicating as
// we go (the fold of an ordering is the fold of its prefix, folded with
// the last element).
ValueSet fold_values(std::span<const Ordinal> xs, const Ordinal& identity,
                     Ordinal (*op)(const Ordinal&, const Ordinal&),
                     std::size_t max_items) {
    if (xs.size() > max_items)
        throw std::domain_error("too many items for rearrangement enumeration");
    const std::size_t n = xs.size();
    std::vector<ValueSet> table(std::size_t{1} << n);
    table[0] = {identity};
    for (std::size_t mask = 1; mask < table.size(); ++mask) {
        std::vector<Ordinal> vals;
        for (std::size_t k = 0; k < n; ++k) {
            if (!(mask & (std::size_t{1} << k))) continue;
            for (const Ordinal& v : table[mask & ~(std::size_t{1} << k)])
                vals.push_back(op(v, xs[k]));
        }
        table[mask] = make_value_set(std::move(vals));
    }
    return table.back();
}

} // namespace

ValueSet finite_sum_values(std::span<const Ordinal> xs, std::size_t max_items) {
    return fold_values(xs, Ordinal(), &ord_add, max_items);
}

ValueSet finite_prod_values(std::span<const Ordinal> xs, std::size_t max_items) {
    return fold_values(xs, Ordinal{1}, &ord_mul, max_items);
}

ValueSet inf_sum_values(const OmegaSequence& s, std::size_t max_items) {
    bool cycle_zero = true;
    for (const auto& x : s.cycle())
        if (!x.is_zero()) cycle_zero = false;
    if (cycle_zero) {
        std::vector<Ordinal> items;
        for (const auto& x : s.prefix())
            if (!x.is_zero()) items.push_back(x);
        return finite_sum_values(items, max_items);
    }
    const Ordinal* dmax = nullptr;
    for (const auto& x : s.cycle()) {
        if (x.is_zero()) continue;
        if (!dmax || *dmax < x.degree()) dmax = &x.degree();
    }
    Ordinal tail_sup = omega_pow(ord_add(*dmax, Ordinal{1}));
    // Why the ordering family below is value-complete: a term of degree
    // <= D placed before or between the specials is absorbed by the next
    // special (whose degree exceeds D), and whatever follows the last
    // special is an infinite tail of degree-<=D terms with a degree-D
    // term recurring, so it sums to exactly w^(D+1). Hence every
    // permutation's value is (some ordering of the specials) + w^(D+1),
    // and permuting the head realizes each such ordering.
    std::vector<Ordinal> specials;
    for (const auto& x : s.prefix())
        if (!x.is_zero() && !(x < tail_sup)) specials.push_back(x);
    std::vector<Ordinal> out;
    for (const Ordinal& v : finite_sum_values(specials, max_items))
        out.push_back(ord_add(v, tail_sup));
    return make_value_set(std::move(out));
}

ValueSet inf_prod_values(const OmegaSequence& s, std::size_t max_items) {
    if (s.has_zero_term()) return {Ordinal()};
    bool cycle_all_one = true, cycle_all_finite = true;
    for (const auto& x : s.cycle()) {
        if (!(x == Ordinal::one())) cycle_all_one = false;
        if (!x.is_finite()) cycle_all_finite = false;
    }
    if (cycle_all_one) {
        std::vector<Ordinal> items;
        for (const auto& x : s.prefix())
            if (!(x == Ordinal::one())) items.push_back(x);
        return finite_prod_values(items, max_items);
    }
    if (cycle_all_finite) {
        // Every rearrangement is eventually finite: its value is
        // w^(delta+1) where delta is an ordered sum of the infinite
        // terms' degrees (finite terms have degree 0 and drop out).
        std::vector<Ordinal> degs;
        for (const auto& x : s.prefix())
            if (!x.is_finite()) degs.push_back(x.degree());
        std::vector<Ordinal> out;
        for (const Ordinal& d : finite_sum_values(degs, max_items))
            out.push_back(omega_pow(ord_add(d, Ordinal{1})));
        return make_value_set(std::move(out));
    }
    // Infinitely many infinite terms: values are w^delta with delta a
    // rearranged infinite sum of the degrees (zero degrees drop out).
    std::vector<Ordinal> out;
    for (const Ordinal& d : inf_sum_values(degrees(s), max_items))
        out.push_back(omega_pow(d));
    return make_value_set(std::move(out));
}

ValueSet arrangement_oracle(const OmegaSequence& s, std::size_t N, std::uint64_t max_perms) {
    if (N < s.prefix().size())
        throw std::domain_error("oracle window must cover the prefix");
    std::uint64_t perms = 1;
    for (std::uint64_t k = 2; k <= N; ++k) {
        perms *= k;
        if (perms > max_perms)
            throw std::domain_error("permutation count exceeds the cap");
    }
    std::vector<std::size_t> sigma(N);
    std::iota(sigma.begin(), sigma.end(), std::size_t{0});
    std::vector<Ordinal> out;
    do {
        out.push_back(infinite_ord_sum(permute_head(s, sigma)));
    } while (std::next_permutation(sigma.begin(), sigma.end()));
    return make_value_set(std::move(out));
}

} // namespace ordinals
