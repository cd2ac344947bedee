#include "ordinals/carruth.hpp"

#include <algorithm>
#include <stdexcept>

#include "ordinals/inf_ops.hpp"
#include "ordinals/natural_arith.hpp"

namespace ordinals {

namespace {

void require_same_bounds(const OmegaSequence& a, const OmegaSequence& b) {
    if (!seq_equal(a, b)) throw std::domain_error("bounds mismatch");
}

} // namespace

FinSupportVector::FinSupportVector(OmegaSequence bounds, std::map<std::size_t, Ordinal> entries)
    : bounds_(std::move(bounds)) {
    if (bounds_.has_zero_term())
        throw std::domain_error("bounds sequence has a zero factor: empty product space");
    for (auto& [i, v] : entries) {
        if (v.is_zero()) continue;
        if (!(v < bounds_.term_at(i)))
            throw std::domain_error("coordinate value out of range at index "
                                    + std::to_string(i));
        entries_.emplace(i, std::move(v));
    }
}

FinSupportVector FinSupportVector::zero(OmegaSequence bounds) {
    return FinSupportVector(std::move(bounds), {});
}

FinSupportVector FinSupportVector::unit(OmegaSequence bounds, std::size_t index) {
    return FinSupportVector(std::move(bounds), {{index, Ordinal{1}}});
}

const Ordinal& FinSupportVector::at(std::size_t i) const {
    auto it = entries_.find(i);
    return it == entries_.end() ? Ordinal::zero() : it->second;
}

FinSupportVector FinSupportVector::with(std::size_t i, Ordinal v) const {
    auto entries = entries_;
    entries.erase(i);
    if (!v.is_zero()) entries.emplace(i, std::move(v));
    return FinSupportVector(bounds_, std::move(entries));
}

std::vector<Ordinal> FinSupportVector::restrict_to(std::size_t n) const {
    std::vector<Ordinal> out(n);
    for (const auto& [i, v] : entries_)
        if (i < n) out[i] = v;
    return out;
}

FinSupportVector FinSupportVector::tail_from_index(std::size_t n) const {
    std::map<std::size_t, Ordinal> entries;
    for (const auto& [i, v] : entries_)
        if (i >= n) entries.emplace(i - n, v);
    return FinSupportVector(tail_from(bounds_, n), std::move(entries));
}

bool operator==(const FinSupportVector& a, const FinSupportVector& b) {
    return seq_equal(a.bounds_, b.bounds_) && a.entries_ == b.entries_;
}

bool product_leq(const FinSupportVector& a, const FinSupportVector& b) {
    require_same_bounds(a.bounds(), b.bounds());
    for (const auto& [i, v] : a.entries())
        if (!(v <= b.at(i))) return false;
    return true;
}

std::size_t last_diff(const FinSupportVector& a, const FinSupportVector& b) {
    require_same_bounds(a.bounds(), b.bounds());
    bool found = false;
    std::size_t best = 0;
    auto scan = [&](const FinSupportVector& u, const FinSupportVector& v) {
        for (const auto& [i, x] : u.entries())
            if (!(x == v.at(i)) && (!found || i > best)) {
                found = true;
                best = i;
            }
    };
    scan(a, b);
    scan(b, a);
    if (!found) throw std::domain_error("last_diff of equal vectors");
    return best;
}

std::strong_ordering antilex_cmp(const FinSupportVector& a, const FinSupportVector& b) {
    require_same_bounds(a.bounds(), b.bounds());
    if (a.entries() == b.entries()) return std::strong_ordering::equal;
    std::size_t i = last_diff(a, b);
    return a.at(i) <=> b.at(i);
}

Ordinal antilex_rank(const FinSupportVector& a) {
    // Position weights are the classical partial products of the bounds.
    std::vector<std::pair<std::size_t, Ordinal>> weights;
    weights.reserve(a.entries().size());
    Ordinal w{1};
    std::size_t next = 0;
    for (const auto& [i, v] : a.entries()) {
        while (next < i) w = ord_mul(w, a.bounds().term_at(next++));
        weights.emplace_back(i, w);
    }
    Ordinal acc;
    for (std::size_t k = weights.size(); k-- > 0;) {
        const auto& [i, wi] = weights[k];
        acc = ord_add(acc, ord_mul(wi, a.at(i)));
    }
    return acc;
}

FinSupportVector antilex_unrank(const OmegaSequence& bounds, const Ordinal& r) {
    if (!(r < infinite_ord_prod(bounds)))
        throw std::domain_error("rank out of range of the product");
    // Collect candidate digit positions: weight <= r and factor > 1.
    std::vector<std::pair<std::size_t, Ordinal>> cands;
    Ordinal w{1};
    for (std::size_t i = 0; !(r < w); ++i) {
        const Ordinal& bound = bounds.term_at(i);
        if (Ordinal::one() < bound) cands.emplace_back(i, w);
        w = ord_mul(w, bound);
    }
    std::map<std::size_t, Ordinal> entries;
    Ordinal rem = r;
    for (std::size_t k = cands.size(); k-- > 0;) {
        const auto& [i, wi] = cands[k];
        if (rem < wi) continue;
        auto [q, next] = ord_divmod(rem, wi);
        if (!q.is_zero()) entries.emplace(i, std::move(q));
        rem = std::move(next);
    }
    if (!rem.is_zero()) throw std::logic_error("unrank left a remainder");
    return FinSupportVector(bounds, std::move(entries));
}

// ---------------------------------------------------------------------------
// Carruth-max pair rank

namespace {

Ordinal drop_last_term(const Ordinal& a) {
    const auto& t = a.terms();
    return Ordinal::from_terms({t.begin(), t.end() - 1});
}

// Rank of (x, y) in w^xi x w^eta onto w^(xi (+) eta). Splits off the
// smallest CNF term of an exponent; the side with the smaller split
// term carries the more significant digit chunk.
Ordinal base_rank(const Ordinal& xi, const Ordinal& eta, const Ordinal& x, const Ordinal& y) {
    if (xi.is_zero()) return y;
    if (eta.is_zero()) return x;
    const Monomial& xlow = xi.terms().back();
    const Monomial& ylow = eta.terms().back();
    auto c = xlow.exponent <=> ylow.exponent;
    if (c == std::strong_ordering::less) {
        Ordinal xi1 = drop_last_term(xi);
        auto [q, rx] = ord_divmod(x, omega_pow(xi1));
        return ord_add(ord_mul(omega_pow(nat_sum(xi1, eta)), q), base_rank(xi1, eta, rx, y));
    }
    if (c == std::strong_ordering::greater) {
        Ordinal eta1 = drop_last_term(eta);
        auto [q, ry] = ord_divmod(y, omega_pow(eta1));
        return ord_add(ord_mul(omega_pow(nat_sum(xi, eta1)), q), base_rank(xi, eta1, x, ry));
    }
    Ordinal xi1 = drop_last_term(xi);
    Ordinal eta1 = drop_last_term(eta);
    auto [qx, rx] = ord_divmod(x, omega_pow(xi1));
    auto [qy, ry] = ord_divmod(y, omega_pow(eta1));
    Ordinal chunk = omega_pow(Ordinal::from_terms({ylow}));  // w^(w^mu * v)
    Ordinal q = ord_add(ord_mul(chunk, qx), qy);
    return ord_add(ord_mul(omega_pow(nat_sum(xi1, eta1)), q), base_rank(xi1, eta1, rx, ry));
}

std::pair<Ordinal, Ordinal> base_unrank(const Ordinal& xi, const Ordinal& eta, const Ordinal& r) {
    if (xi.is_zero()) return {Ordinal(), r};
    if (eta.is_zero()) return {r, Ordinal()};
    const Monomial& xlow = xi.terms().back();
    const Monomial& ylow = eta.terms().back();
    auto c = xlow.exponent <=> ylow.exponent;
    if (c == std::strong_ordering::less) {
        Ordinal xi1 = drop_last_term(xi);
        auto [q, rem] = ord_divmod(r, omega_pow(nat_sum(xi1, eta)));
        auto [rx, y] = base_unrank(xi1, eta, rem);
        return {ord_add(ord_mul(omega_pow(xi1), q), rx), std::move(y)};
    }
    if (c == std::strong_ordering::greater) {
        Ordinal eta1 = drop_last_term(eta);
        auto [q, rem] = ord_divmod(r, omega_pow(nat_sum(xi, eta1)));
        auto [x, ry] = base_unrank(xi, eta1, rem);
        return {std::move(x), ord_add(ord_mul(omega_pow(eta1), q), ry)};
    }
    Ordinal xi1 = drop_last_term(xi);
    Ordinal eta1 = drop_last_term(eta);
    auto [q, rem] = ord_divmod(r, omega_pow(nat_sum(xi1, eta1)));
    Ordinal chunk = omega_pow(Ordinal::from_terms({ylow}));
    auto [qx, qy] = ord_divmod(q, chunk);
    auto [rx, ry] = base_unrank(xi1, eta1, rem);
    return {ord_add(ord_mul(omega_pow(xi1), qx), rx),
            ord_add(ord_mul(omega_pow(eta1), qy), ry)};
}

} // namespace

std::vector<PairRank::Segment> PairRank::segments_of(const Ordinal& a) {
    std::vector<Segment> segs;
    Ordinal start;
    for (const Monomial& t : a.terms()) {
        segs.push_back(Segment{t.exponent, t.coefficient, start});
        start = ord_add(start, Ordinal::from_terms({t}));
    }
    return segs;
}

PairRank::PairRank(Ordinal alpha, Ordinal beta)
    : alpha_(std::move(alpha)), beta_(std::move(beta)) {
    if (alpha_.is_zero() || beta_.is_zero())
        throw std::domain_error("Carruth rank requires nonzero factors");
    alpha_segs_ = segments_of(alpha_);
    beta_segs_ = segments_of(beta_);
    for (std::size_t j = 0; j < alpha_segs_.size(); ++j) {
        for (std::size_t m = 0; m < beta_segs_.size(); ++m) {
            Ordinal unit = omega_pow(nat_sum(alpha_segs_[j].exponent, beta_segs_[m].exponent));
            Ordinal size = ord_mul(unit,
                                   Ordinal(alpha_segs_[j].copies * beta_segs_[m].copies));
            blocks_.push_back(Block{j, m, std::move(unit), std::move(size), Ordinal()});
        }
    }
    std::sort(blocks_.begin(), blocks_.end(), [](const Block& a, const Block& b) {
        auto c = b.unit <=> a.unit;  // descending combined exponent
        if (c != std::strong_ordering::equal) return c == std::strong_ordering::less;
        if (a.j != b.j) return a.j < b.j;
        return a.m < b.m;
    });
    Ordinal offset;
    for (Block& blk : blocks_) {
        blk.offset = offset;
        offset = ord_add(offset, blk.size);
    }
    target_ = std::move(offset);
}

namespace {

struct Located {
    std::size_t segment;
    Natural copy;
    Ordinal offset;
};

} // namespace

Ordinal PairRank::rank(const Ordinal& x, const Ordinal& y) const {
    if (!(x < alpha_) || !(y < beta_))
        throw std::domain_error("rank argument outside its factor");
    auto locate = [](const std::vector<Segment>& segs, const Ordinal& v) -> Located {
        std::size_t j = segs.size() - 1;
        while (v < segs[j].start) --j;
        auto [copy, off] = ord_divmod(ord_sub_left(segs[j].start, v), omega_pow(segs[j].exponent));
        return Located{j, copy.as_natural(), std::move(off)};
    };
    Located lx = locate(alpha_segs_, x);
    Located ly = locate(beta_segs_, y);
    for (const Block& blk : blocks_) {
        if (blk.j != lx.segment || blk.m != ly.segment) continue;
        Natural cell = ly.copy * alpha_segs_[lx.segment].copies + lx.copy;
        Ordinal inner = ord_add(ord_mul(blk.unit, Ordinal(cell)),
                                base_rank(alpha_segs_[lx.segment].exponent,
                                          beta_segs_[ly.segment].exponent,
                                          lx.offset, ly.offset));
        return ord_add(blk.offset, inner);
    }
    throw std::logic_error("block table is exhaustive");
}

std::pair<Ordinal, Ordinal> PairRank::unrank(const Ordinal& r) const {
    if (!(r < target_)) throw std::domain_error("rank out of range of the product");
    std::size_t k = blocks_.size() - 1;
    while (r < blocks_[k].offset) --k;
    const Block& blk = blocks_[k];
    const Segment& sa = alpha_segs_[blk.j];
    const Segment& sb = beta_segs_[blk.m];
    auto [cell_ord, base] = ord_divmod(ord_sub_left(blk.offset, r), blk.unit);
    auto [cy, cx] = Natural::divmod(cell_ord.as_natural(), sa.copies);
    auto [ox, oy] = base_unrank(sa.exponent, sb.exponent, base);
    Ordinal x = ord_add(sa.start, ord_add(ord_mul(omega_pow(sa.exponent), Ordinal(cx)), ox));
    Ordinal y = ord_add(sb.start, ord_add(ord_mul(omega_pow(sb.exponent), Ordinal(cy)), oy));
    return {std::move(x), std::move(y)};
}

// ---------------------------------------------------------------------------
// n-ary fold

PrefixRank::PrefixRank(std::vector<Ordinal> factors) : factors_(std::move(factors)) {
    Ordinal acc{1};
    steps_.reserve(factors_.size());
    for (const Ordinal& f : factors_) {
        steps_.emplace_back(acc, f);
        acc = steps_.back().target();
    }
    target_ = std::move(acc);
}

Ordinal PrefixRank::rank(std::span<const Ordinal> tuple) const {
    if (tuple.size() != factors_.size())
        throw std::domain_error("tuple arity does not match the factor list");
    Ordinal r;
    for (std::size_t k = 0; k < tuple.size(); ++k) r = steps_[k].rank(r, tuple[k]);
    return r;
}

std::vector<Ordinal> PrefixRank::unrank(const Ordinal& r) const {
    if (!(r < target_)) throw std::domain_error("rank out of range of the product");
    std::vector<Ordinal> out(factors_.size());
    Ordinal rem = r;
    for (std::size_t k = factors_.size(); k-- > 0;) {
        auto [prev, xk] = steps_[k].unrank(rem);
        out[k] = std::move(xk);
        rem = std::move(prev);
    }
    if (!rem.is_zero()) throw std::logic_error("unrank left a remainder");
    return out;
}

// ---------------------------------------------------------------------------
// Finitely Carruth orders

FCDescriptor fc_descriptor(const OmegaSequence& bounds, std::size_t cut) {
    std::vector<Ordinal> factors;
    factors.reserve(cut);
    for (std::size_t i = 0; i < cut; ++i) factors.push_back(bounds.term_at(i));
    PrefixRank rank(std::move(factors));
    Ordinal tau = rank.target();
    return FCDescriptor{bounds, cut, std::move(rank), std::move(tau)};
}

std::strong_ordering fc_cmp(const FCDescriptor& d, const FinSupportVector& a,
                            const FinSupportVector& b) {
    require_same_bounds(a.bounds(), d.bounds);
    require_same_bounds(b.bounds(), d.bounds);
    if (a.entries() == b.entries()) return std::strong_ordering::equal;
    std::size_t i = last_diff(a, b);
    if (i >= d.cut) return a.at(i) <=> b.at(i);
    std::vector<Ordinal> ta = a.restrict_to(d.cut), tb = b.restrict_to(d.cut);
    return d.prefix_rank.rank(ta) <=> d.prefix_rank.rank(tb);
}

Ordinal fc_rank(const FCDescriptor& d, const FinSupportVector& a) {
    require_same_bounds(a.bounds(), d.bounds);
    Ordinal tail = antilex_rank(a.tail_from_index(d.cut));
    std::vector<Ordinal> tuple = a.restrict_to(d.cut);
    return ord_add(ord_mul(d.tau, tail), d.prefix_rank.rank(tuple));
}

Ordinal fc_rank_target(const FCDescriptor& d) {
    return ord_mul(d.tau, infinite_ord_prod(tail_from(d.bounds, d.cut)));
}

bool locally_fc_check(const VectorComparator& cmp, const FinSupportVector& c,
                      std::size_t n, std::span<const FinSupportVector> samples) {
    std::vector<const FinSupportVector*> below;
    for (const auto& a : samples)
        if (cmp(a, c) == std::strong_ordering::less) below.push_back(&a);
    for (std::size_t i = 0; i < below.size(); ++i) {
        for (std::size_t j = i + 1; j < below.size(); ++j) {
            const auto& a = *below[i];
            const auto& b = *below[j];
            if (a.entries() == b.entries()) continue;
            std::size_t k = last_diff(a, b);
            if (k < n) continue;
            if (cmp(a, b) != (a.at(k) <=> b.at(k))) return false;
        }
    }
    for (std::size_t i = 0; i < samples.size(); ++i) {
        for (std::size_t j = 0; j < samples.size(); ++j) {
            if (i == j || samples[i].entries() == samples[j].entries()) continue;
            if (product_leq(samples[i], samples[j])
                && cmp(samples[i], samples[j]) != std::strong_ordering::less)
                return false;
        }
    }
    return true;
}

// ---------------------------------------------------------------------------
// Finite brute force

ExtensionEnumeration enumerate_grid_extensions(std::size_t m, std::size_t n) {
    if (m > 12 || n > 12 || m * n > 12)
        throw std::domain_error("grid too large for exhaustive enumeration");
    const std::size_t total = m * n;
    std::uint64_t count = 0;
    std::size_t longest = 0;
    std::vector<bool> placed(total, false);
    auto ready = [&](std::size_t e) {
        std::size_t i = e / n, j = e % n;
        if (i > 0 && !placed[e - n]) return false;
        if (j > 0 && !placed[e - 1]) return false;
        return true;
    };
    auto dfs = [&](auto&& self, std::size_t depth) -> void {
        if (depth == total) {
            ++count;
            longest = std::max(longest, depth);
            return;
        }
        for (std::size_t e = 0; e < total; ++e) {
            if (placed[e] || !ready(e)) continue;
            placed[e] = true;
            self(self, depth + 1);
            placed[e] = false;
        }
    };
    dfs(dfs, 0);
    return ExtensionEnumeration{Ordinal(longest), count};
}

Ordinal finite_extensions_max(std::size_t m, std::size_t n) {
    return enumerate_grid_extensions(m, n).max_type;
}

} // namespace ordinals
