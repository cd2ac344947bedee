#ifndef ORDINALS_REARRANGE_HPP
#define ORDINALS_REARRANGE_HPP

#include <cstdint>
#include <span>
#include <vector>

#include "ordinals/omega_seq.hpp"
#include "ordinals/ordinal.hpp"

namespace ordinals {

// The finitely many ordinals attainable by rearranging a sum or product;
// sorted ascending, duplicates removed.
using ValueSet = std::vector<Ordinal>;

ValueSet make_value_set(std::vector<Ordinal> values);

inline constexpr std::size_t kDefaultMaxItems = 8;
inline constexpr std::uint64_t kDefaultMaxPerms = 3628800;  // 10!

// Classical left folds over all orderings of xs, deduplicated; computed
// by subset dynamic programming. Throws when |xs| exceeds max_items.
ValueSet finite_sum_values(std::span<const Ordinal> xs,
                           std::size_t max_items = kDefaultMaxItems);
ValueSet finite_prod_values(std::span<const Ordinal> xs,
                            std::size_t max_items = kDefaultMaxItems);

// Values of the classical infinite sum over all permutations of s.
ValueSet inf_sum_values(const OmegaSequence& s,
                        std::size_t max_items = kDefaultMaxItems);

// Values of the classical infinite product over all permutations of s.
ValueSet inf_prod_values(const OmegaSequence& s,
                         std::size_t max_items = kDefaultMaxItems);

// Brute-force counterpart of inf_sum_values restricted to permutations
// of the first N terms (N >= |prefix|); each arrangement stays
// eventually periodic and is evaluated in closed form. Throws when N!
// exceeds max_perms.
ValueSet arrangement_oracle(const OmegaSequence& s, std::size_t N,
                            std::uint64_t max_perms = kDefaultMaxPerms);

} // namespace ordinals

#endif
