#ifndef ORDINALS_INF_OPS_HPP
#define ORDINALS_INF_OPS_HPP

#include <cstdint>

#include "ordinals/omega_seq.hpp"
#include "ordinals/ordinal.hpp"

namespace ordinals {

// Closed form of the infinite natural sum sup_n (a_0 (+) ... (+) a_{n-1}).
// With D the largest degree of a nonzero cycle entry, the value is
// ((+)-sum of all terms >= w^(D+1)) + w^(D+1); if the cycle is all zero
// the sum is just the prefix fold.
Ordinal infinite_nat_sum(const OmegaSequence& s);

// Closed form of the infinite natural product, by case on classify(s):
// HasZero -> 0; EventuallyOne(n) -> P_n; EventuallyFinite(n) ->
// w^(beta+1) with beta the natural sum of the first n degrees;
// General -> w^(infinite natural sum of the degrees).
Ordinal infinite_nat_prod(const OmegaSequence& s);

// Classical infinite sum: prefix fold + (cycle fold) * w.
Ordinal infinite_ord_sum(const OmegaSequence& s);

// Classical infinite product; same case split as the natural one but
// with classical degree sums.
Ordinal infinite_ord_prod(const OmegaSequence& s);

// Least m such that for every n >= m the tail identities hold:
//   (1) natural and classical tail products agree from n on, and
//   (2) the total natural product factors as P_n * (tail product),
// plus, for zero-free not-eventually-1 sequences, the variant with
// w^(degree natural sum of the first n terms) in place of P_n.
// Exact: identity failures can only occur at n < |prefix| + |cycle|.
std::size_t segue_threshold(const OmegaSequence& s);

// Independent least-upper-bound oracle for sup-of-partial-products
// semantics on zero-free sequences: checks (a) every sampled P_n is
// <= result, strictly unless the tail from n is all 1, and (b) for
// `probes` ordinals V < result obtained by structured descent from
// result, some partial product exceeds V within a documented scan
// bound. Returns false on any violation; throws on zero terms.
bool sup_oracle_check(const OmegaSequence& s, const Ordinal& result,
                      std::size_t probes, std::uint64_t seed = 0);

} // namespace ordinals

#endif
