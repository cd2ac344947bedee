#ifndef ORDINALS_CARRUTH_HPP
#define ORDINALS_CARRUTH_HPP

#include <compare>
#include <cstdint>
#include <functional>
#include <map>
#include <span>
#include <vector>

#include "ordinals/omega_seq.hpp"
#include "ordinals/ordinal.hpp"

namespace ordinals {

// An element of the finite-support product of the bounds sequence:
// finitely many nonzero coordinates, each strictly below its bound.
// The bounds sequence must be zero-free (a zero factor empties the
// product space), which is checked at construction.
class FinSupportVector {
public:
    FinSupportVector(OmegaSequence bounds, std::map<std::size_t, Ordinal> entries);

    static FinSupportVector zero(OmegaSequence bounds);
    static FinSupportVector unit(OmegaSequence bounds, std::size_t index);

    const OmegaSequence& bounds() const { return bounds_; }
    const std::map<std::size_t, Ordinal>& entries() const { return entries_; }

    const Ordinal& at(std::size_t i) const;          // 0 when off-support
    FinSupportVector with(std::size_t i, Ordinal v) const;

    std::vector<Ordinal> restrict_to(std::size_t n) const;  // coordinates 0..n-1
    FinSupportVector tail_from_index(std::size_t n) const;  // coordinates >= n, reindexed

    friend bool operator==(const FinSupportVector& a, const FinSupportVector& b);

private:
    OmegaSequence bounds_;
    std::map<std::size_t, Ordinal> entries_;
};

// Componentwise order; throws on bounds mismatch.
bool product_leq(const FinSupportVector& a, const FinSupportVector& b);

// Largest index where a and b differ; throws when a = b.
std::size_t last_diff(const FinSupportVector& a, const FinSupportVector& b);

// Order by the last difference: the linear extension realizing the
// classical infinite product.
std::strong_ordering antilex_cmp(const FinSupportVector& a, const FinSupportVector& b);

// Mixed-radix order isomorphism onto prod_{i<w} alpha_i: descending-index
// classical fold of (alpha_0 * ... * alpha_{i-1}) * a_i.
Ordinal antilex_rank(const FinSupportVector& a);
FinSupportVector antilex_unrank(const OmegaSequence& bounds, const Ordinal& r);

// Carruth-max linear extension of alpha x beta: a bijective rank onto
// alpha (x) beta, strictly monotone in each coordinate and invertible.
//
// Construction: split each factor into CNF monomial segments; a segment
// pair forms a block of size w^(xi (+) eta) * (r * s). Blocks are laid
// out by descending combined exponent (ties: alpha segment first, then
// beta segment, in CNF order), which extends the componentwise order
// because distinct comparable pairs can never sit in distinct blocks of
// equal combined exponent. Within a block the finite coefficient grid is
// ordered anti-lexicographically (beta copy major) and the offset pair
// is ranked recursively by splitting off the smallest CNF term of an
// exponent; at equal smallest terms the alpha chunk is the major digit.
class PairRank {
public:
    PairRank(Ordinal alpha, Ordinal beta);   // factors >= 1

    const Ordinal& alpha() const { return alpha_; }
    const Ordinal& beta() const { return beta_; }
    const Ordinal& target() const { return target_; }

    Ordinal rank(const Ordinal& x, const Ordinal& y) const;
    std::pair<Ordinal, Ordinal> unrank(const Ordinal& r) const;

private:
    struct Segment {
        Ordinal exponent;
        Natural copies;
        Ordinal start;   // CNF prefix preceding the segment
    };
    struct Block {
        std::size_t j, m;     // segment indices into alpha_segs_/beta_segs_
        Ordinal unit;         // w^(xi_j (+) eta_m)
        Ordinal size;         // unit * (r_j * s_m)
        Ordinal offset;
    };

    Ordinal alpha_, beta_, target_;
    std::vector<Segment> alpha_segs_, beta_segs_;
    std::vector<Block> blocks_;

    static std::vector<Segment> segments_of(const Ordinal& a);
};

// Carruth-max extension for any finite list of factors, built by pairing
// the accumulated target with the next factor. Ranks tuples onto the
// natural product of all factors.
class PrefixRank {
public:
    explicit PrefixRank(std::vector<Ordinal> factors);

    const std::vector<Ordinal>& factors() const { return factors_; }
    const Ordinal& target() const { return target_; }

    Ordinal rank(std::span<const Ordinal> tuple) const;
    std::vector<Ordinal> unrank(const Ordinal& r) const;

private:
    std::vector<Ordinal> factors_;
    std::vector<PairRank> steps_;
    Ordinal target_;
};

// Data of a finitely Carruth order: anti-lexicographic above `cut`,
// governed by the prefix rank below it.
struct FCDescriptor {
    OmegaSequence bounds;
    std::size_t cut;
    PrefixRank prefix_rank;
    Ordinal tau;             // prefix_rank target = (x) of the first `cut` factors
};

FCDescriptor fc_descriptor(const OmegaSequence& bounds, std::size_t cut);

std::strong_ordering fc_cmp(const FCDescriptor& d, const FinSupportVector& a,
                            const FinSupportVector& b);

// Order isomorphism from fc_cmp onto tau * prod_{cut<=i} alpha_i.
Ordinal fc_rank(const FCDescriptor& d, const FinSupportVector& a);

// tau * (classical product of the tail bounds).
Ordinal fc_rank_target(const FCDescriptor& d);

using VectorComparator =
    std::function<std::strong_ordering(const FinSupportVector&, const FinSupportVector&)>;

// Sampling check of the locally-finitely-Carruth condition at witness n:
// pairs below c that differ at an index >= n must be ordered by that
// coordinate, and cmp must extend the componentwise order on the samples.
// A false is a counterexample certificate, not a proof of failure.
bool locally_fc_check(const VectorComparator& cmp, const FinSupportVector& c,
                      std::size_t n, std::span<const FinSupportVector> samples);

struct ExtensionEnumeration {
    Ordinal max_type;
    std::uint64_t count;
};

// Exhaustively enumerates every linear extension of the componentwise
// order on the m x n grid (m*n <= 12) and reports the largest order
// type together with the number of extensions.
ExtensionEnumeration enumerate_grid_extensions(std::size_t m, std::size_t n);

Ordinal finite_extensions_max(std::size_t m, std::size_t n);

} // namespace ordinals

#endif
