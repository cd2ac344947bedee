#include "ordinals/random_gen.hpp"

#include <algorithm>

#include "ordinals/natural_arith.hpp"

namespace ordinals::gen {

Ordinal random_ordinal(std::mt19937_64& rng, int depth, std::size_t max_terms,
                       std::uint64_t max_coeff) {
    if (depth <= 0) return Ordinal(rng() % (max_coeff + 1));
    std::size_t nterms = rng() % (max_terms + 1);
    std::vector<Ordinal> exps;
    for (std::size_t i = 0; i < nterms; ++i)
        exps.push_back(random_ordinal(rng, depth - 1, max_terms, max_coeff));
    std::sort(exps.begin(), exps.end(), [](const Ordinal& a, const Ordinal& b) { return b < a; });
    exps.erase(std::unique(exps.begin(), exps.end()), exps.end());
    std::vector<Monomial> terms;
    terms.reserve(exps.size());
    for (Ordinal& e : exps)
        terms.push_back(Monomial{std::move(e), Natural(1 + rng() % max_coeff)});
    return Ordinal::from_terms(std::move(terms));
}

namespace {

// A value strictly below w^xi.
Ordinal random_below_pow(std::mt19937_64& rng, const Ordinal& xi) {
    if (xi.is_zero() || rng() % 3 == 0) return Ordinal();
    std::vector<Monomial> terms;
    Ordinal e = random_below(rng, xi);
    for (;;) {
        terms.push_back(Monomial{e, Natural(1 + rng() % 3)});
        if (e.is_zero() || rng() % 2 == 0) break;
        e = random_below(rng, e);
    }
    return Ordinal::from_terms(std::move(terms));
}

} // namespace

Ordinal random_below(std::mt19937_64& rng, const Ordinal& bound) {
    if (bound.is_zero()) throw std::domain_error("no value below 0");
    const auto& terms = bound.terms();
    std::size_t j = rng() % terms.size();
    std::vector<Monomial> out(terms.begin(), terms.begin() + static_cast<std::ptrdiff_t>(j));
    std::uint64_t cap = terms[j].coefficient.to_u64_clamped(1u << 20);
    std::uint64_t c = rng() % cap;
    if (c > 0) out.push_back(Monomial{terms[j].exponent, Natural(c)});
    Ordinal head = Ordinal::from_terms(std::move(out));
    return ord_add(head, random_below_pow(rng, terms[j].exponent));
}

OmegaSequence random_sequence(std::mt19937_64& rng, const SeqOptions& options) {
    auto entry = [&]() -> Ordinal {
        std::uint64_t roll = rng() % 100;
        if (options.allow_zero && roll < 10) return Ordinal();
        if (roll < 35) return Ordinal{1};
        if (roll < 60) return Ordinal(2 + rng() % 5);
        // Sequence entries stay small (two monomials, tiny coefficients)
        // so folds of a dozen of them keep desk-sized term counts.
        Ordinal x = random_ordinal(rng, options.depth, 2, 3);
        while (x.is_finite()) x = random_ordinal(rng, options.depth, 2, 3);
        return x;
    };
    std::vector<Ordinal> prefix(rng() % (options.max_prefix + 1));
    for (auto& x : prefix) x = entry();
    std::vector<Ordinal> cycle(1 + rng() % options.max_cycle);
    for (auto& x : cycle) x = entry();
    return OmegaSequence(std::move(prefix), std::move(cycle));
}

} // namespace ordinals::gen
