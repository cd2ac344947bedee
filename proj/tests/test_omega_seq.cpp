#include "doctest.h"

#include <random>

#include "ordinals/natural_arith.hpp"
#include "ordinals/omega_seq.hpp"
#include "ordinals/parser.hpp"
#include "ordinals/random_gen.hpp"

using namespace ordinals;

TEST_CASE("term_at") {
    OmegaSequence a = parse_sequence("[w ; 2]");
    CHECK(a.term_at(0) == Ordinal::omega());
    OmegaSequence b = parse_sequence("[w ; 2, 3]");
    CHECK(b.term_at(4) == Ordinal{3});    // (4-1) mod 2 = 1
    OmegaSequence c = parse_sequence("[; 5]");
    CHECK(c.term_at(1000000) == Ordinal{5});
}

TEST_CASE("classification") {
    CHECK(classify(parse_sequence("[w ; 1]")) == SeqClass{SeqKind::EventuallyOne, 1});
    CHECK(classify(parse_sequence("[; 2]")) == SeqClass{SeqKind::EventuallyFinite, 0});
    CHECK(classify(parse_sequence("[1 ; w, 2]")).kind == SeqKind::General);
    CHECK(classify(parse_sequence("[0 ; 1]")).kind == SeqKind::HasZero);
    CHECK(classify(parse_sequence("[w, 1, 1 ; 1]")) == SeqClass{SeqKind::EventuallyOne, 1});
    CHECK(classify(parse_sequence("[w, 3 ; 2]")) == SeqClass{SeqKind::EventuallyFinite, 1});
    CHECK(classify(parse_sequence("[; 1]")) == SeqClass{SeqKind::EventuallyOne, 0});
    // A zero anywhere wins over an all-one cycle.
    CHECK(classify(parse_sequence("[0 ; 1]")).kind == SeqKind::HasZero);
}

TEST_CASE("partial folds") {
    OmegaSequence twos = parse_sequence("[; 2]");
    CHECK(partial_nat_prod(twos, 3) == Ordinal{8});
    CHECK(partial_nat_prod(twos, 0) == Ordinal{1});
    OmegaSequence s = parse_sequence("[; w, 1]");
    CHECK(partial_nat_sum(s, 4) == parse_ordinal("w*2+2"));
    CHECK(partial_nat_sum(s, 0) == Ordinal{0});
}

TEST_CASE("extensional equality") {
    CHECK(seq_equal(parse_sequence("[; 2, 2]"), parse_sequence("[; 2]")));
    CHECK(seq_equal(parse_sequence("[2 ; 2]"), parse_sequence("[; 2]")));
    CHECK(!seq_equal(parse_sequence("[; 2, 3]"), parse_sequence("[; 3, 2]")));
    CHECK(seq_equal(parse_sequence("[; 2, 3]"), parse_sequence("[2 ; 3, 2]")));
}

TEST_CASE("structural transforms") {
    CHECK(seq_equal(degrees(parse_sequence("[w^(w)*2+1 ; 3]")), parse_sequence("[w ; 0]")));
    CHECK_THROWS_AS(degrees(parse_sequence("[0 ; 1]")), std::domain_error);
    CHECK(seq_equal(monomials(parse_sequence("[w^(w)*2+1, 0 ; 3]")),
                    parse_sequence("[w^(w)*2, 0 ; 3]")));

    CHECK(seq_equal(regroup(parse_sequence("[; 2]"), 3), parse_sequence("[; 8]")));

    std::vector<std::size_t> swap01 = {1, 0};
    CHECK(seq_equal(permute_head(parse_sequence("[w, 1 ; 2]"), swap01),
                    parse_sequence("[1, w ; 2]")));
    std::vector<std::size_t> bad = {0, 0};
    CHECK_THROWS_AS(permute_head(parse_sequence("[; 2]"), bad), std::domain_error);

    // Permutation window wider than the prefix materializes cycle terms.
    std::vector<std::size_t> rot3 = {2, 0, 1};
    OmegaSequence s = parse_sequence("[w ; 2, 3]");
    OmegaSequence p = permute_head(s, rot3);
    CHECK(p.term_at(0) == Ordinal{3});
    CHECK(p.term_at(1) == Ordinal::omega());
    CHECK(p.term_at(2) == Ordinal{2});
    for (std::size_t i = 3; i < 8; ++i) CHECK(p.term_at(i) == s.term_at(i));

    CHECK(seq_equal(tail_from(s, 2), parse_sequence("[; 3, 2]")));
    CHECK(seq_equal(rotate_cycle(parse_sequence("[w ; 2, 3]"), 1),
                    parse_sequence("[w ; 3, 2]")));

    CHECK_THROWS_AS(regroup(s, 0), std::domain_error);
    CHECK_THROWS_AS(OmegaSequence({Ordinal{1}}, {}), std::domain_error);
}

TEST_CASE("classify agrees across equal denotations") {
    std::mt19937_64 rng(61);
    for (int it = 0; it < 100; ++it) {
        OmegaSequence s = gen::random_sequence(rng);
        std::vector<Ordinal> prefix = s.prefix();
        std::vector<Ordinal> cyc = s.cycle();
        std::size_t shift = rng() % cyc.size();
        for (std::size_t i = 0; i < shift; ++i) prefix.push_back(cyc[i]);
        std::vector<Ordinal> rot;
        for (std::size_t i = 0; i < 2 * cyc.size(); ++i)
            rot.push_back(cyc[(shift + i) % cyc.size()]);   // doubled cycle
        OmegaSequence t(prefix, rot);
        REQUIRE(seq_equal(s, t));
        CHECK(classify(s) == classify(t));
    }
}

TEST_CASE("partial products are nondecreasing with the exact equality condition") {
    std::mt19937_64 rng(67);
    for (int it = 0; it < 100; ++it) {
        OmegaSequence s = gen::random_sequence(rng, {.allow_zero = false});
        std::size_t bound = s.prefix().size() + 2 * s.cycle().size();
        for (std::size_t i = 0; i < bound; ++i) {
            std::size_t j = i + 1 + rng() % 3;
            Ordinal pi = partial_nat_prod(s, i), pj = partial_nat_prod(s, j);
            CHECK(pi <= pj);
            bool all_ones = true;
            for (std::size_t t = i; t < j; ++t)
                all_ones = all_ones && s.term_at(t) == Ordinal::one();
            CHECK((pi == pj) == all_ones);
        }
    }
}

TEST_CASE("degrees and monomials commute with tail_from") {
    std::mt19937_64 rng(71);
    for (int it = 0; it < 100; ++it) {
        OmegaSequence s = gen::random_sequence(rng, {.allow_zero = false});
        std::size_t n = rng() % 5;
        CHECK(seq_equal(degrees(tail_from(s, n)), tail_from(degrees(s), n)));
        CHECK(seq_equal(monomials(tail_from(s, n)), tail_from(monomials(s), n)));
    }
}

TEST_CASE("regrouping preserves aligned partial products") {
    std::mt19937_64 rng(73);
    for (int it = 0; it < 100; ++it) {
        OmegaSequence s = gen::random_sequence(rng);
        std::size_t k = 1 + rng() % 3;
        OmegaSequence g = regroup(s, k);
        for (std::size_t n = 0; n <= 3; ++n)
            CHECK(partial_nat_prod(g, n) == partial_nat_prod(s, k * n));
    }
}
