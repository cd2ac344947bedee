#ifndef ORDINALS_RANDOM_GEN_HPP
#define ORDINALS_RANDOM_GEN_HPP

#include <cstdint>
#include <random>

#include "ordinals/omega_seq.hpp"
#include "ordinals/ordinal.hpp"

namespace ordinals::gen {

// Deterministic generators for the property suites. Depth bounds the
// exponent nesting; everything stays far below epsilon_0 and desk-sized.

Ordinal random_ordinal(std::mt19937_64& rng, int depth = 2, std::size_t max_terms = 3,
                       std::uint64_t max_coeff = 4);

// A value strictly below `bound` (bound > 0), reasonably spread across
// the CNF segments of the bound.
Ordinal random_below(std::mt19937_64& rng, const Ordinal& bound);

struct SeqOptions {
    std::size_t max_prefix = 3;
    std::size_t max_cycle = 3;
    bool allow_zero = true;
    int depth = 2;
};

OmegaSequence random_sequence(std::mt19937_64& rng, const SeqOptions& options = {});

} // namespace ordinals::gen

#endif
