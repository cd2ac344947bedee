#include "ordinals/inf_ops.hpp"

#include <random>
#include <stdexcept>

#include "ordinals/natural_arith.hpp"

namespace ordinals {

namespace {

bool cycle_all_zero(const OmegaSequence& s) {
    for (const auto& x : s.cycle())
        if (!x.is_zero()) return false;
    return true;
}

// Largest degree among nonzero cycle entries; requires one to exist.
Ordinal max_nonzero_cycle_degree(const OmegaSequence& s) {
    const Ordinal* best = nullptr;
    for (const auto& x : s.cycle()) {
        if (x.is_zero()) continue;
        if (!best || *best < x.degree()) best = &x.degree();
    }
    return *best;
}

} // namespace

Ordinal infinite_nat_sum(const OmegaSequence& s) {
    if (cycle_all_zero(s)) return partial_nat_sum(s, s.prefix().size());
    Ordinal threshold = omega_pow(ord_add(max_nonzero_cycle_degree(s), Ordinal{1}));
    // Terms >= w^(D+1) occur finitely often, hence only in the prefix.
    Ordinal high;
    for (const auto& x : s.prefix())
        if (!(x < threshold)) high = nat_sum(high, x);
    return ord_add(high, threshold);
}

Ordinal infinite_nat_prod(const OmegaSequence& s) {
    SeqClass cls = classify(s);
    switch (cls.kind) {
        case SeqKind::HasZero:
            return Ordinal();
        case SeqKind::EventuallyOne:
            return partial_nat_prod(s, cls.cut);
        case SeqKind::EventuallyFinite: {
            Ordinal beta;
            for (std::size_t i = 0; i < cls.cut; ++i)
                beta = nat_sum(beta, s.term_at(i).degree());
            return omega_pow(ord_add(beta, Ordinal{1}));
        }
        case SeqKind::General:
            return omega_pow(infinite_nat_sum(degrees(s)));
    }
    throw std::logic_error("unreachable");
}

Ordinal infinite_ord_sum(const OmegaSequence& s) {
    Ordinal pre;
    for (const auto& x : s.prefix()) pre = ord_add(pre, x);
    if (cycle_all_zero(s)) return pre;
    Ordinal cyc;
    for (const auto& x : s.cycle()) cyc = ord_add(cyc, x);
    return ord_add(pre, ord_mul(cyc, Ordinal::omega()));
}

Ordinal infinite_ord_prod(const OmegaSequence& s) {
    SeqClass cls = classify(s);
    switch (cls.kind) {
        case SeqKind::HasZero:
            return Ordinal();
        case SeqKind::EventuallyOne: {
            Ordinal acc{1};
            for (std::size_t i = 0; i < cls.cut; ++i) acc = ord_mul(acc, s.term_at(i));
            return acc;
        }
        case SeqKind::EventuallyFinite: {
            Ordinal beta;
            for (std::size_t i = 0; i < cls.cut; ++i)
                beta = ord_add(beta, s.term_at(i).degree());
            return omega_pow(ord_add(beta, Ordinal{1}));
        }
        case SeqKind::General:
            return omega_pow(infinite_ord_sum(degrees(s)));
    }
    throw std::logic_error("unreachable");
}

std::size_t segue_threshold(const OmegaSequence& s) {
    const std::size_t bound = s.prefix().size() + s.cycle().size();
    const Ordinal total = infinite_nat_prod(s);
    const SeqClass cls = classify(s);
    const bool eqp_applies =
        cls.kind == SeqKind::EventuallyFinite || cls.kind == SeqKind::General;

    std::size_t threshold = 0;
    for (std::size_t n = 0; n <= bound; ++n) {
        OmegaSequence tail = tail_from(s, n);
        Ordinal tail_nat = infinite_nat_prod(tail);
        Ordinal tail_ord = infinite_ord_prod(tail);
        bool ok = tail_nat == tail_ord;
        if (ok) {
            Ordinal pn = partial_nat_prod(s, n);
            ok = ord_mul(pn, tail_ord) == total && ord_mul(pn, tail_nat) == total;
        }
        if (ok && eqp_applies) {
            Ordinal beta;
            for (std::size_t i = 0; i < n; ++i) beta = nat_sum(beta, s.term_at(i).degree());
            Ordinal w = omega_pow(beta);
            ok = ord_mul(w, tail_ord) == total && ord_mul(w, tail_nat) == total;
        }
        if (!ok) threshold = n + 1;
    }
    return threshold;
}

namespace {

std::uint64_t max_coefficient(const Ordinal& x, std::uint64_t cap) {
    std::uint64_t best = 0;
    for (const auto& t : x.terms()) {
        best = std::max(best, t.coefficient.to_u64_clamped(cap));
        best = std::max(best, max_coefficient(t.exponent, cap));
        if (best >= cap) return cap;
    }
    return best;
}

// One structured descent step: strictly decreases a nonzero ordinal.
Ordinal descend_step(const Ordinal& v, std::mt19937_64& rng) {
    const auto& terms = v.terms();
    switch (rng() % 3) {
        case 0: {
            // Decrement the leading coefficient (dropping the monomial at 1).
            if (terms[0].coefficient.is_one()) return v.rest();
            std::vector<Monomial> out = terms;
            out[0].coefficient = out[0].coefficient - Natural(1);
            return Ordinal::from_terms(std::move(out));
        }
        case 1: {
            // Drop the lowest monomial.
            std::vector<Monomial> out(terms.begin(), terms.end() - 1);
            return Ordinal::from_terms(std::move(out));
        }
        default: {
            // Replace some monomial's exponent by a smaller one (with an
            // inflated coefficient) and truncate the rest.
            std::vector<std::size_t> infinite_positions;
            for (std::size_t i = 0; i < terms.size(); ++i)
                if (!terms[i].exponent.is_zero()) infinite_positions.push_back(i);
            if (infinite_positions.empty()) {
                Natural n = terms[0].coefficient;
                return Ordinal(n - Natural(1));
            }
            std::size_t i = infinite_positions[rng() % infinite_positions.size()];
            Ordinal smaller_exp = descend_step(terms[i].exponent, rng);
            std::vector<Monomial> out(terms.begin(), terms.begin() + static_cast<std::ptrdiff_t>(i));
            out.push_back(Monomial{std::move(smaller_exp),
                                   terms[i].coefficient * Natural(3) + Natural(7)});
            return Ordinal::from_terms(std::move(out));
        }
    }
}

Ordinal structured_descent(const Ordinal& from, std::mt19937_64& rng) {
    Ordinal v = from;
    std::size_t steps = 1 + rng() % 3;
    for (std::size_t k = 0; k < steps && !v.is_zero(); ++k) v = descend_step(v, rng);
    return v;
}

} // namespace

bool sup_oracle_check(const OmegaSequence& s, const Ordinal& result,
                      std::size_t probes, std::uint64_t seed) {
    if (s.has_zero_term())
        throw std::domain_error("sup oracle requires a zero-free sequence");

    const std::size_t plen = s.prefix().size(), clen = s.cycle().size();
    const SeqClass cls = classify(s);

    // (a) Partial products never exceed the claimed sup; they reach it
    // exactly when the remaining tail is all 1.
    {
        Ordinal p{1};
        for (std::size_t n = 0; n <= plen + 3 * clen + 4; ++n) {
            bool tail_all_one = cls.kind == SeqKind::EventuallyOne && cls.cut <= n;
            if (tail_all_one ? !(p == result) : !(p < result)) return false;
            p = nat_prod(p, s.term_at(n));
        }
    }

    // (b) Everything below the claimed sup is eventually exceeded. The
    // scan bound |p| + |c|*(C+4) + 4, with C the largest coefficient in
    // the probe (clamped to 4096), suffices because past the prefix each
    // period multiplies the partial product by at least 2 or raises its
    // degree; exhausting the scan counts as a failed check.
    std::mt19937_64 rng(seed ^ 0x9e3779b97f4a7c15ull);
    for (std::size_t k = 0; k < probes; ++k) {
        Ordinal probe = structured_descent(result, rng);
        std::uint64_t c = max_coefficient(probe, 4096);
        std::size_t bound = plen + clen * static_cast<std::size_t>(c + 4) + 4;
        Ordinal p{1};
        bool exceeded = false;
        for (std::size_t n = 0; n <= bound; ++n) {
            if (probe < p) {
                exceeded = true;
                break;
            }
            p = nat_prod(p, s.term_at(n));
        }
        if (!exceeded) return false;
    }
    return true;
}

} // namespace ordinals
