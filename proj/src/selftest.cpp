#include "ordinals/selftest.hpp"

#include <algorithm>
#include <functional>
#include <random>
#include <sstream>

#include "ordinals/carruth.hpp"
#include "ordinals/inf_ops.hpp"
#include "ordinals/natural_arith.hpp"
#include "ordinals/parser.hpp"
#include "ordinals/random_gen.hpp"
#include "ordinals/rearrange.hpp"

namespace ordinals::selftest {

namespace {

using gen::random_below;
using gen::random_ordinal;
using gen::random_sequence;

struct Checker {
    SuiteResult& out;
    void operator()(bool cond, const char* what) {
        ++out.checks;
        if (!cond && out.failures.size() < 8) out.failures.push_back(what);
    }
};

Ordinal predecessor(const Ordinal& a) {
    const auto& t = a.terms();
    if (t.empty() || !t.back().exponent.is_zero())
        throw std::domain_error("not a successor ordinal");
    std::vector<Monomial> out(t.begin(), t.end() - 1);
    Natural c = t.back().coefficient - Natural(1);
    if (!c.is_zero()) out.push_back(Monomial{Ordinal(), c});
    return Ordinal::from_terms(std::move(out));
}

FinSupportVector random_vector(std::mt19937_64& rng, const OmegaSequence& bounds,
                               std::size_t max_index) {
    std::map<std::size_t, Ordinal> entries;
    std::size_t k = rng() % 4;
    for (std::size_t t = 0; t < k; ++t) {
        std::size_t i = rng() % (max_index + 1);
        const Ordinal& b = bounds.term_at(i);
        if (b == Ordinal::one()) continue;
        Ordinal v = random_below(rng, b);
        if (!v.is_zero()) entries[i] = v;
    }
    return FinSupportVector(bounds, std::move(entries));
}

OmegaSequence random_positive_sequence(std::mt19937_64& rng, const gen::SeqOptions& opt) {
    gen::SeqOptions o = opt;
    o.allow_zero = false;
    return random_sequence(rng, o);
}

void suite_ordinal_algebra(std::mt19937_64& rng, SuiteResult& res) {
    Checker check{res};
    for (int it = 0; it < 80; ++it) {
        Ordinal a = random_ordinal(rng), b = random_ordinal(rng), c = random_ordinal(rng);
        check(ord_add(ord_add(a, b), c) == ord_add(a, ord_add(b, c)), "ord_add associative");
        check(ord_mul(ord_mul(a, b), c) == ord_mul(a, ord_mul(b, c)), "ord_mul associative");
        check(ord_mul(a, ord_add(b, c)) == ord_add(ord_mul(a, b), ord_mul(a, c)),
              "left distributivity");
        check(ord_add(a, b).is_canonical() && ord_mul(a, b).is_canonical(),
              "results canonical");
        if (!b.is_zero()) {
            auto [q, r] = ord_divmod(a, b);
            check(ord_add(ord_mul(b, q), r) == a, "divmod reconstruction");
            check(r < b, "divmod remainder below divisor");
        }
        check(ord_add(a, ord_sub_left(a, ord_add(a, b))) == ord_add(a, b),
              "left subtraction inverts addition");
    }
}

void suite_lemma_chain(std::mt19937_64& rng, SuiteResult& res) {
    Checker check{res};
    for (int it = 0; it < 150; ++it) {
        Ordinal a = random_ordinal(rng);
        Ordinal m = a.leading_monomial();
        Ordinal m2 = ord_mul(m, Ordinal{2});
        check(m <= a, "m(a) <= a");
        check(a <= m2, "a <= m(a)*2");
        check(ord_add(m, m) == m2, "m(a)+m(a) = m(a)*2");
        check(m2 <= nat_prod(m, Ordinal{2}), "m(a)*2 <= m(a)(x)2");
    }
}

void suite_natural_laws(std::mt19937_64& rng, SuiteResult& res) {
    Checker check{res};
    for (int it = 0; it < 80; ++it) {
        Ordinal a = random_ordinal(rng), b = random_ordinal(rng), c = random_ordinal(rng);
        check(nat_sum(a, b) == nat_sum(b, a), "(+) commutative");
        check(nat_prod(a, b) == nat_prod(b, a), "(x) commutative");
        check(nat_sum(nat_sum(a, b), c) == nat_sum(a, nat_sum(b, c)), "(+) associative");
        check(nat_prod(nat_prod(a, b), c) == nat_prod(a, nat_prod(b, c)), "(x) associative");
        check(nat_prod(a, nat_sum(b, c)) == nat_sum(nat_prod(a, b), nat_prod(a, c)),
              "(x) distributes over (+)");
        check(ord_add(a, b) <= nat_sum(a, b), "a+b <= a(+)b");
        check(ord_mul(a, b) <= nat_prod(a, b), "a*b <= a(x)b");
        if (!a.is_zero() && !b.is_zero())
            check(nat_prod(a, b).leading_monomial()
                      == nat_prod(a.leading_monomial(), b.leading_monomial()),
                  "m(a(x)b) = m(a)(x)m(b)");
        if (!(a == b)) {
            const Ordinal& lo = a < b ? a : b;
            const Ordinal& hi = a < b ? b : a;
            check(nat_sum(lo, c) < nat_sum(hi, c), "(+) strictly monotone");
            if (!c.is_zero()) {
                check(nat_prod(lo, c) < nat_prod(hi, c), "(x) strictly monotone");
                check(!(nat_prod(c, a) == nat_prod(c, b)), "(x) cancellative");
            }
        }
    }
}

void suite_parse_roundtrip(std::mt19937_64& rng, SuiteResult& res) {
    Checker check{res};
    for (int it = 0; it < 200; ++it) {
        Ordinal a = random_ordinal(rng, 3);
        check(parse_ordinal(a.str()) == a, "parse(format(a)) = a");
    }
    bool threw = false;
    try {
        parse_ordinal("w^");
    } catch (const ParseError&) {
        threw = true;
    }
    check(threw, "dangling exponent is a syntax error");
}

void suite_omega_seq(std::mt19937_64& rng, SuiteResult& res) {
    Checker check{res};
    for (int it = 0; it < 60; ++it) {
        OmegaSequence s = random_sequence(rng);
        // Equal denotations written differently.
        std::vector<Ordinal> p2 = s.prefix();
        std::vector<Ordinal> c2 = s.cycle();
        std::size_t shift = rng() % c2.size();
        for (std::size_t i = 0; i < shift; ++i) p2.push_back(c2[i]);
        std::vector<Ordinal> c3;
        for (std::size_t i = 0; i < c2.size(); ++i) c3.push_back(c2[(shift + i) % c2.size()]);
        OmegaSequence t(p2, c3);
        check(seq_equal(s, t), "pushed-cycle variant denotes the same sequence");
        check(classify(s) == classify(t), "classify respects seq_equal");
        for (std::size_t i = 0; i < 6; ++i)
            check(t.term_at(i) == s.term_at(i), "term_at agrees on variants");

        std::size_t n = rng() % 4;
        OmegaSequence tail = tail_from(s, n);
        for (std::size_t i = 0; i < 5; ++i)
            check(tail.term_at(i) == s.term_at(n + i), "tail_from shifts the denotation");
        if (!s.has_zero_term()) {
            check(seq_equal(degrees(tail_from(s, n)), tail_from(degrees(s), n)),
                  "degrees commutes with tail_from");
            check(seq_equal(monomials(tail_from(s, n)), tail_from(monomials(s), n)),
                  "monomials commutes with tail_from");
        }
        std::size_t k = 2 + rng() % 2;
        OmegaSequence g = regroup(s, k);
        for (std::size_t i = 0; i <= 3; ++i)
            check(partial_nat_prod(g, i) == partial_nat_prod(s, k * i),
                  "regroup preserves block partial products");
    }
}

void suite_descr_rules(std::mt19937_64& rng, SuiteResult& res) {
    Checker check{res};
    for (int it = 0; it < 100; ++it) {
        OmegaSequence s = random_sequence(rng);
        bool has_zero = s.has_zero_term();
        bool ev_one = true, ev_fin = true;
        for (const auto& x : s.cycle()) {
            if (!(x == Ordinal::one())) ev_one = false;
            if (!x.is_finite()) ev_fin = false;
        }
        SeqClass cls = classify(s);
        SeqKind expect = has_zero ? SeqKind::HasZero
                       : ev_one   ? SeqKind::EventuallyOne
                       : ev_fin   ? SeqKind::EventuallyFinite
                                  : SeqKind::General;
        check(cls.kind == expect, "exactly the first applicable rule fires");
        if (cls.kind == SeqKind::EventuallyOne || cls.kind == SeqKind::EventuallyFinite) {
            auto holds = [&](std::size_t i) {
                return cls.kind == SeqKind::EventuallyOne
                           ? s.term_at(i) == Ordinal::one()
                           : s.term_at(i).is_finite();
            };
            bool tail_ok = true;
            for (std::size_t i = cls.cut; i < cls.cut + s.cycle().size() + 2; ++i)
                tail_ok = tail_ok && holds(i);
            check(tail_ok, "tail condition holds from the cut");
            check(cls.cut == 0 || !holds(cls.cut - 1), "cut is minimal");
        }
        if (!has_zero)
            check(sup_oracle_check(s, infinite_nat_prod(s), 5, rng()),
                  "closed form matches sup-of-partial-products semantics");
        else
            check(infinite_nat_prod(s).is_zero(), "zero factor annihilates");
    }
}

void suite_factswp(std::mt19937_64& rng, SuiteResult& res) {
    Checker check{res};
    for (int it = 0; it < 50; ++it) {
        OmegaSequence s = random_sequence(rng);
        Ordinal total = infinite_nat_prod(s);
        check(infinite_ord_prod(s) <= total, "classical product <= natural product");

        auto shrink = [&](const std::vector<Ordinal>& xs) {
            std::vector<Ordinal> out;
            for (const auto& x : xs) out.push_back(random_below(rng, ord_add(x, Ordinal{1})));
            return out;
        };
        OmegaSequence smaller(shrink(s.prefix()), shrink(s.cycle()));
        check(infinite_nat_prod(smaller) <= total, "termwise monotone");

        std::size_t n = rng() % (s.prefix().size() + 3);
        std::vector<std::size_t> sigma(n);
        for (std::size_t i = 0; i < n; ++i) sigma[i] = i;
        // Fisher-Yates with explicit draws: std::shuffle consumes an
        // unspecified number of them, which would make reports differ
        // across standard libraries.
        for (std::size_t i = n; i > 1; --i) std::swap(sigma[i - 1], sigma[rng() % i]);
        check(infinite_nat_prod(permute_head(s, sigma)) == total,
              "head permutation invariance");
        check(infinite_nat_prod(rotate_cycle(s, 1 + rng() % 3)) == total,
              "cycle rotation invariance");
        for (std::size_t k : {2, 3, 5})
            check(infinite_nat_prod(regroup(s, k)) == total, "regroup invariance");

        if (!s.has_zero_term()) {
            std::size_t bound = s.prefix().size() + 2 * s.cycle().size();
            SeqClass cls = classify(s);
            for (std::size_t i = 0; i <= bound; ++i) {
                Ordinal pi = partial_nat_prod(s, i);
                std::size_t j = i + 1 + rng() % 3;
                Ordinal pj = partial_nat_prod(s, j);
                bool ones = true;
                for (std::size_t t = i; t < j; ++t)
                    ones = ones && s.term_at(t) == Ordinal::one();
                check(pi <= pj, "partial products nondecreasing");
                check((pi == pj) == ones, "partial equality iff all-1 gap");
                bool tail_ones = cls.kind == SeqKind::EventuallyOne && cls.cut <= i;
                check(pi <= total, "P_n below the product");
                check((pi == total) == tail_ones, "P_n reaches the product iff tail is 1");
            }
        }
    }
}

void suite_lemmas_inf(std::mt19937_64& rng, SuiteResult& res) {
    Checker check{res};
    for (int it = 0; it < 60; ++it) {
        OmegaSequence b = random_sequence(rng);
        auto pow_all = [](const std::vector<Ordinal>& xs) {
            std::vector<Ordinal> out;
            for (const auto& x : xs) out.push_back(omega_pow(x));
            return out;
        };
        OmegaSequence powers(pow_all(b.prefix()), pow_all(b.cycle()));
        check(infinite_nat_prod(powers) == omega_pow(infinite_nat_sum(b)),
              "(x) of omega powers is omega^(natural sum)");
        check(infinite_ord_prod(powers) == omega_pow(infinite_ord_sum(b)),
              "classical product of omega powers is omega^(sum)");

        OmegaSequence s = random_sequence(rng);
        if (!(classify(s).kind == SeqKind::EventuallyOne)) {
            check(infinite_nat_prod(s) == infinite_nat_prod(monomials(s)),
                  "(x) agrees on leading monomials");
            check(infinite_ord_prod(s) == infinite_ord_prod(monomials(s)),
                  "classical product agrees on leading monomials");
        }
    }
}

void suite_segue(std::mt19937_64& rng, SuiteResult& res) {
    Checker check{res};
    for (int it = 0; it < 50; ++it) {
        OmegaSequence s = random_sequence(rng);
        std::size_t m = segue_threshold(s);
        Ordinal total = infinite_nat_prod(s);
        SeqClass cls = classify(s);
        bool eqp = cls.kind == SeqKind::EventuallyFinite || cls.kind == SeqKind::General;
        auto identities_at = [&](std::size_t n) {
            OmegaSequence tail = tail_from(s, n);
            Ordinal tn = infinite_nat_prod(tail), to = infinite_ord_prod(tail);
            if (!(tn == to)) return false;
            Ordinal pn = partial_nat_prod(s, n);
            if (!(ord_mul(pn, to) == total)) return false;
            if (eqp) {
                Ordinal beta;
                for (std::size_t i = 0; i < n; ++i)
                    beta = nat_sum(beta, s.term_at(i).degree());
                if (!(ord_mul(omega_pow(beta), to) == total)) return false;
            }
            return true;
        };
        bool all_ok = true;
        for (std::size_t n = m; n <= s.prefix().size() + 2 * s.cycle().size(); ++n)
            all_ok = all_ok && identities_at(n);
        check(all_ok, "identities hold from the threshold on");
        check(m == 0 || !identities_at(m - 1), "threshold is minimal");
    }
}

void suite_rearrange(std::mt19937_64& rng, SuiteResult& res) {
    Checker check{res};
    for (int it = 0; it < 30; ++it) {
        OmegaSequence s = random_sequence(rng, {.max_prefix = 2, .max_cycle = 2});
        ValueSet closed = inf_sum_values(s);
        check(!closed.empty(), "sum value set nonempty");
        check(std::is_sorted(closed.begin(), closed.end()), "sum value set sorted");
        ValueSet prev;
        bool subset_ok = true;
        for (std::size_t N = s.prefix().size();
             N <= s.prefix().size() + 2 * s.cycle().size(); ++N) {
            ValueSet vs = arrangement_oracle(s, N);
            subset_ok = subset_ok
                && std::includes(closed.begin(), closed.end(), vs.begin(), vs.end());
            prev = std::move(vs);
        }
        check(subset_ok, "oracle values stay inside the closed form");
        check(prev == closed, "oracle equals the closed form at the bound");

        ValueSet prods = inf_prod_values(s);
        check(!prods.empty(), "product value set nonempty");
        if (!s.has_zero_term()) {
            std::size_t infinite_terms = 0;
            for (const auto& x : s.prefix())
                if (!x.is_finite()) ++infinite_terms;
            for (const auto& x : s.cycle())
                if (!x.is_finite()) infinite_terms += 2;
            if (infinite_terms <= 1)
                check(prods.size() == 1, "at most one infinite term gives a singleton");
        }
    }
}

void suite_antilex(std::mt19937_64& rng, SuiteResult& res) {
    Checker check{res};
    for (int rep = 0; rep < 4; ++rep) {
        OmegaSequence bounds = random_positive_sequence(rng, {});
        Ordinal total = infinite_ord_prod(bounds);
        std::size_t max_index = bounds.prefix().size() + 2 * bounds.cycle().size() + 2;
        std::vector<FinSupportVector> vs;
        std::vector<Ordinal> ranks;
        for (int it = 0; it < 40; ++it) {
            FinSupportVector a = random_vector(rng, bounds, max_index);
            Ordinal r = antilex_rank(a);
            check(r < total, "rank below the classical product");
            check(antilex_unrank(bounds, r) == a, "unrank inverts rank");
            vs.push_back(std::move(a));
            ranks.push_back(std::move(r));
        }
        for (std::size_t i = 0; i < vs.size(); i += 3)
            for (std::size_t j = i + 1; j < vs.size(); j += 3)
                check(antilex_cmp(vs[i], vs[j]) == (ranks[i] <=> ranks[j]),
                      "rank is an order embedding");
    }
}

void suite_carruth_contract(std::mt19937_64& rng, SuiteResult& res) {
    Checker check{res};
    std::vector<std::pair<Ordinal, Ordinal>> pairs = {
        {Ordinal::omega(), Ordinal::omega()},
        {parse_ordinal("w+1"), parse_ordinal("w+1")},
        {parse_ordinal("w^(2)+w*3+2"), parse_ordinal("w*2+1")},
        {random_ordinal(rng), random_ordinal(rng)},
    };
    for (auto& [alpha, beta] : pairs) {
        if (alpha.is_zero() || beta.is_zero()) continue;
        PairRank pr(alpha, beta);
        check(pr.target() == nat_prod(alpha, beta), "target is the natural product");
        check(pr.rank(Ordinal(), Ordinal()).is_zero(), "minimum maps to 0");
        if (alpha.terms().back().exponent.is_zero()
            && beta.terms().back().exponent.is_zero()) {
            check(pr.rank(predecessor(alpha), predecessor(beta)) == predecessor(pr.target()),
                  "maximum maps to the predecessor of the target");
        }
        std::vector<std::pair<Ordinal, Ordinal>> pts;
        for (int it = 0; it < 30; ++it)
            pts.emplace_back(random_below(rng, alpha), random_below(rng, beta));
        std::vector<Ordinal> ranks;
        for (auto& [x, y] : pts) {
            Ordinal r = pr.rank(x, y);
            check(r < pr.target(), "image inside the natural product");
            auto [ux, uy] = pr.unrank(r);
            check(ux == x && uy == y, "unrank inverts rank");
            ranks.push_back(std::move(r));
        }
        for (std::size_t i = 0; i < pts.size(); ++i) {
            for (std::size_t j = 0; j < pts.size(); ++j) {
                if (i == j) continue;
                bool leq = pts[i].first <= pts[j].first && pts[i].second <= pts[j].second;
                bool eq = pts[i].first == pts[j].first && pts[i].second == pts[j].second;
                if (leq && !eq)
                    check(ranks[i] < ranks[j], "rank extends the componentwise order");
                if (!eq)
                    check(!(ranks[i] == ranks[j]), "rank injective");
            }
        }
    }
}

void suite_fc_orders(std::mt19937_64& rng, SuiteResult& res) {
    Checker check{res};
    for (int rep = 0; rep < 12; ++rep) {
        OmegaSequence bounds = random_positive_sequence(rng, {.max_prefix = 2, .max_cycle = 2});
        std::size_t cut = std::max(segue_threshold(bounds), bounds.prefix().size());
        FCDescriptor d = fc_descriptor(bounds, cut);
        check(fc_rank_target(d) == infinite_nat_prod(bounds),
              "finitely Carruth order realizes the natural product");
        std::size_t max_index = cut + 2 * bounds.cycle().size() + 2;
        std::vector<FinSupportVector> samples;
        for (int it = 0; it < 25; ++it)
            samples.push_back(random_vector(rng, bounds, max_index));
        Ordinal target = fc_rank_target(d);
        std::vector<Ordinal> ranks;
        for (const auto& a : samples) {
            Ordinal r = fc_rank(d, a);
            check(r < target, "predecessor ranks stay below the target");
            ranks.push_back(std::move(r));
        }
        for (std::size_t i = 0; i < samples.size(); i += 2)
            for (std::size_t j = i + 1; j < samples.size(); j += 2)
                check(fc_cmp(d, samples[i], samples[j]) == (ranks[i] <=> ranks[j]),
                      "fc_rank embeds fc_cmp");
        VectorComparator cmp = [&d](const FinSupportVector& a, const FinSupportVector& b) {
            return fc_cmp(d, a, b);
        };
        check(locally_fc_check(cmp, samples[0], cut, samples),
              "fc order is locally finitely Carruth at its cut");
        VectorComparator anti = [](const FinSupportVector& a, const FinSupportVector& b) {
            return antilex_cmp(a, b);
        };
        check(locally_fc_check(anti, samples[0], 0, samples),
              "anti-lex order is locally finitely Carruth at 0");
        if (!(classify(bounds).kind == SeqKind::EventuallyOne)) {
            const FinSupportVector& a = samples[rng() % samples.size()];
            std::size_t beyond = max_index + 1;
            while (bounds.term_at(beyond) == Ordinal::one()) ++beyond;
            FinSupportVector b = a.with(beyond, Ordinal{1});
            check(product_leq(a, b) && !(a == b), "no maximum above any element");
        }
    }
}

using SuiteFn = void (*)(std::mt19937_64&, SuiteResult&);

const std::vector<std::pair<const char*, SuiteFn>>& suite_table() {
    static const std::vector<std::pair<const char*, SuiteFn>> table = {
        {"antilex-iso", suite_antilex},
        {"carruth-contract", suite_carruth_contract},
        {"descr-rules", suite_descr_rules},
        {"factswp", suite_factswp},
        {"fc-orders", suite_fc_orders},
        {"lemma-chain", suite_lemma_chain},
        {"lemmas-inf", suite_lemmas_inf},
        {"natural-laws", suite_natural_laws},
        {"omega-seq", suite_omega_seq},
        {"ordinal-algebra", suite_ordinal_algebra},
        {"parse-roundtrip", suite_parse_roundtrip},
        {"rearrange", suite_rearrange},
        {"segue", suite_segue},
    };
    return table;
}

} // namespace

bool Report::ok() const {
    for (const auto& s : suites)
        if (!s.failures.empty()) return false;
    return true;
}

std::string Report::str() const {
    std::ostringstream out;
    std::size_t failed = 0;
    for (const auto& s : suites) {
        if (s.failures.empty()) {
            out << s.name << ": " << s.checks << " checks passed\n";
        } else {
            ++failed;
            out << s.name << ": FAILED (" << s.failures.size() << " of " << s.checks
                << " checks), first: " << s.failures.front() << "\n";
        }
    }
    if (failed == 0)
        out << "all " << suites.size() << " suites passed\n";
    else
        out << failed << " of " << suites.size() << " suites failed\n";
    return out.str();
}

Report run_selftest(std::uint64_t seed) {
    Report report;
    std::uint64_t idx = 0;
    for (const auto& [name, fn] : suite_table()) {
        SuiteResult res;
        res.name = name;
        std::mt19937_64 rng(seed * 0x9e3779b97f4a7c15ull + 0x517cc1b727220a95ull * ++idx);
        fn(rng, res);
        report.suites.push_back(std::move(res));
    }
    return report;
}

} // namespace ordinals::selftest
