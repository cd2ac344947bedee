#ifndef ORDINALS_OMEGA_SEQ_HPP
#define ORDINALS_OMEGA_SEQ_HPP

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "ordinals/ordinal.hpp"

namespace ordinals {

// An eventually-periodic omega-sequence of ordinals: a finite prefix
// followed by a repeating nonempty cycle. Term i is prefix[i] for
// i < |prefix| and cycle[(i - |prefix|) mod |cycle|] otherwise.
class OmegaSequence {
public:
    OmegaSequence(std::vector<Ordinal> prefix, std::vector<Ordinal> cycle);

    const std::vector<Ordinal>& prefix() const { return prefix_; }
    const std::vector<Ordinal>& cycle() const { return cycle_; }

    const Ordinal& term_at(std::size_t i) const;

    bool has_zero_term() const;
    bool all_terms_positive() const { return !has_zero_term(); }

    std::string str() const;

private:
    std::vector<Ordinal> prefix_;
    std::vector<Ordinal> cycle_;
};

enum class SeqKind { HasZero, EventuallyOne, EventuallyFinite, General };

// Case split of the closed-form product evaluation. `cut` is the least
// index from which the tail condition holds (meaningful for
// EventuallyOne and EventuallyFinite).
struct SeqClass {
    SeqKind kind;
    std::size_t cut = 0;

    std::string str() const;
    friend bool operator==(const SeqClass&, const SeqClass&) = default;
};

SeqClass classify(const OmegaSequence& s);

// Partial natural product P_n and partial natural sum B_n.
Ordinal partial_nat_prod(const OmegaSequence& s, std::size_t n);
Ordinal partial_nat_sum(const OmegaSequence& s, std::size_t n);

// Extensional equality of denotations, decided on the first
// max(|p_s|,|p_t|) + lcm(|c_s|,|c_t|) terms.
bool seq_equal(const OmegaSequence& s, const OmegaSequence& t);

OmegaSequence tail_from(const OmegaSequence& s, std::size_t n);

// Termwise degree; throws std::domain_error if any term is 0.
OmegaSequence degrees(const OmegaSequence& s);

// Termwise leading monomial (m(0) = 0).
OmegaSequence monomials(const OmegaSequence& s);

// Applies a permutation of {0..N-1} to the first N terms: term i of the
// result is term sigma[i] of s. sigma must be a permutation of 0..N-1.
OmegaSequence permute_head(const OmegaSequence& s, std::span<const std::size_t> sigma);

// Rotates the cycle left by k positions (denotation-changing in general,
// but multiset-preserving; used by the rearrangement invariants).
OmegaSequence rotate_cycle(const OmegaSequence& s, std::size_t k);

// Replaces consecutive blocks of k terms by their natural product.
OmegaSequence regroup(const OmegaSequence& s, std::size_t k);

} // namespace ordinals

#endif
