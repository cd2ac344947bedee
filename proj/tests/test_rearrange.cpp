#include "doctest.h"

#include <algorithm>
#include <random>

#include "ordinals/inf_ops.hpp"
#include "ordinals/parser.hpp"
#include "ordinals/random_gen.hpp"
#include "ordinals/rearrange.hpp"

using namespace ordinals;

namespace {

ValueSet vs(const char* csv) {
    return make_value_set(parse_ordinal_list(csv));
}

} // namespace

TEST_CASE("finite rearrangement value sets") {
    CHECK(finite_sum_values(parse_ordinal_list("w, 1")) == vs("w, w+1"));
    CHECK(finite_sum_values(parse_ordinal_list("w^2, w^3")) == vs("w^3, w^3+w^2"));
    CHECK(finite_prod_values(parse_ordinal_list("w+1, w")) == vs("w^2, w^2+w"));
    CHECK(finite_sum_values(parse_ordinal_list("")) == vs("0"));
    CHECK(finite_prod_values(parse_ordinal_list("")) == vs("1"));
    CHECK_THROWS_AS(finite_sum_values(std::vector<Ordinal>(9, Ordinal{1})),
                    std::domain_error);
}

TEST_CASE("every ordering of a finite set is realized") {
    // Cross-check the subset DP against direct permutation folding.
    std::mt19937_64 rng(131);
    for (int it = 0; it < 40; ++it) {
        std::vector<Ordinal> xs;
        std::size_t n = 1 + rng() % 4;
        for (std::size_t i = 0; i < n; ++i) xs.push_back(gen::random_ordinal(rng, 1));
        std::vector<std::size_t> order(n);
        for (std::size_t i = 0; i < n; ++i) order[i] = i;
        std::sort(order.begin(), order.end());
        std::vector<Ordinal> sums, prods;
        do {
            Ordinal s, p{1};
            for (std::size_t i : order) {
                s = ord_add(s, xs[i]);
                p = ord_mul(p, xs[i]);
            }
            sums.push_back(s);
            prods.push_back(p);
        } while (std::next_permutation(order.begin(), order.end()));
        CHECK(finite_sum_values(xs) == make_value_set(sums));
        CHECK(finite_prod_values(xs) == make_value_set(prods));
    }
}

TEST_CASE("rearranged infinite sums") {
    CHECK(inf_sum_values(parse_sequence("[w^2, w ; 1]")) == vs("w^2+w, w^2+w*2"));
    CHECK(inf_sum_values(parse_sequence("[; 1]")) == vs("w"));
    CHECK(inf_sum_values(parse_sequence("[w^3 ; w]")) == vs("w^3+w^2"));
    CHECK(inf_sum_values(parse_sequence("[w, 5, 0 ; 0]")) == vs("w, w+5"));
    CHECK(inf_sum_values(parse_sequence("[; 0]")) == vs("0"));
}

TEST_CASE("rearranged infinite products") {
    CHECK(inf_prod_values(parse_sequence("[w^(w^2), w^(w^3) ; 2]"))
          == vs("w^(w^3+1), w^(w^3+w^2+1)"));
    CHECK(inf_prod_values(parse_sequence("[w^(w^2), w^(w^3) ; w]"))
          == vs("w^(w^3+w), w^(w^3+w^2+w)"));
    CHECK(inf_prod_values(parse_sequence("[0, w ; 2]")) == vs("0"));
    CHECK(inf_prod_values(parse_sequence("[w+1, 2 ; 1]")) == vs("w+2, w*2+1"));
    CHECK(inf_prod_values(parse_sequence("[; 2]")) == vs("w"));
}

TEST_CASE("arrangement oracle") {
    CHECK(arrangement_oracle(parse_sequence("[w^2, w ; 1]"), 4) == vs("w^2+w, w^2+w*2"));
    CHECK(arrangement_oracle(parse_sequence("[; 1]"), 2) == vs("w"));
    CHECK(arrangement_oracle(parse_sequence("[w^3 ; w]"), 3) == vs("w^3+w^2"));
    CHECK_THROWS_AS(arrangement_oracle(parse_sequence("[w^2, w ; 1]"), 1),
                    std::domain_error);
    CHECK_THROWS_AS(arrangement_oracle(parse_sequence("[; 1]"), 64), std::domain_error);
    CHECK_THROWS_AS(arrangement_oracle(parse_sequence("[; 1]"), 6, 100), std::domain_error);
}

TEST_CASE("oracle agrees with the closed form at the stabilization bound") {
    std::mt19937_64 rng(137);
    for (int it = 0; it < 100; ++it) {
        OmegaSequence s = gen::random_sequence(rng, {.max_prefix = 2, .max_cycle = 2});
        ValueSet closed = inf_sum_values(s);
        CHECK(!closed.empty());
        CHECK(std::is_sorted(closed.begin(), closed.end()));
        ValueSet at_bound;
        for (std::size_t N = s.prefix().size();
             N <= s.prefix().size() + 2 * s.cycle().size(); ++N) {
            ValueSet vals = arrangement_oracle(s, N);
            CHECK(std::includes(closed.begin(), closed.end(), vals.begin(), vals.end()));
            at_bound = std::move(vals);
        }
        CHECK(at_bound == closed);
    }
}

TEST_CASE("product value sets are finite and sometimes singletons") {
    std::mt19937_64 rng(139);
    for (int it = 0; it < 100; ++it) {
        OmegaSequence s = gen::random_sequence(rng, {.max_prefix = 2, .max_cycle = 2});
        ValueSet prods = inf_prod_values(s);
        CHECK(!prods.empty());
        CHECK(std::is_sorted(prods.begin(), prods.end()));
        if (!s.has_zero_term()) {
            std::size_t infinite_terms = 0;
            for (const auto& x : s.prefix())
                if (!x.is_finite()) ++infinite_terms;
            for (const auto& x : s.cycle())
                if (!x.is_finite()) infinite_terms += 2;
            if (infinite_terms <= 1) CHECK(prods.size() == 1);
        }
    }
}

TEST_CASE("the natural product value set is a singleton") {
    std::mt19937_64 rng(149);
    for (int it = 0; it < 60; ++it) {
        OmegaSequence s = gen::random_sequence(rng, {.max_prefix = 2, .max_cycle = 2});
        Ordinal total = infinite_nat_prod(s);
        std::vector<std::size_t> sigma = {2, 0, 3, 1};
        CHECK(infinite_nat_prod(permute_head(s, sigma)) == total);
        for (std::size_t k = 1; k <= s.cycle().size(); ++k)
            CHECK(infinite_nat_prod(rotate_cycle(s, k)) == total);
    }
}
