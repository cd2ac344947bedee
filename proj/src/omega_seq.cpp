#include "ordinals/omega_seq.hpp"

#include <numeric>
#include <sstream>
#include <stdexcept>

#include "ordinals/natural_arith.hpp"

namespace ordinals {

OmegaSequence::OmegaSequence(std::vector<Ordinal> prefix, std::vector<Ordinal> cycle)
    : prefix_(std::move(prefix)), cycle_(std::move(cycle)) {
    if (cycle_.empty()) throw std::domain_error("sequence cycle must be nonempty");
}

const Ordinal& OmegaSequence::term_at(std::size_t i) const {
    if (i < prefix_.size()) return prefix_[i];
    return cycle_[(i - prefix_.size()) % cycle_.size()];
}

bool OmegaSequence::has_zero_term() const {
    for (const auto& x : prefix_)
        if (x.is_zero()) return true;
    for (const auto& x : cycle_)
        if (x.is_zero()) return true;
    return false;
}

std::string OmegaSequence::str() const {
    std::ostringstream out;
    out << "[";
    for (std::size_t i = 0; i < prefix_.size(); ++i) {
        if (i) out << ", ";
        out << prefix_[i].str();
    }
    out << (prefix_.empty() ? "; " : " ; ");
    for (std::size_t i = 0; i < cycle_.size(); ++i) {
        if (i) out << ", ";
        out << cycle_[i].str();
    }
    out << "]";
    return out.str();
}

std::string SeqClass::str() const {
    switch (kind) {
        case SeqKind::HasZero: return "HasZero";
        case SeqKind::EventuallyOne: return "EventuallyOne(" + std::to_string(cut) + ")";
        case SeqKind::EventuallyFinite:
            return "EventuallyFinite(" + std::to_string(cut) + ")";
        case SeqKind::General: return "General";
    }
    return "";
}

SeqClass classify(const OmegaSequence& s) {
    if (s.has_zero_term()) return {SeqKind::HasZero, 0};
    const auto& p = s.prefix();
    const auto& c = s.cycle();
    bool cycle_all_one = true, cycle_all_finite = true;
    for (const auto& x : c) {
        if (!(x == Ordinal::one())) cycle_all_one = false;
        if (!x.is_finite()) cycle_all_finite = false;
    }
    if (cycle_all_one) {
        std::size_t n = p.size();
        while (n > 0 && p[n - 1] == Ordinal::one()) --n;
        return {SeqKind::EventuallyOne, n};
    }
    if (cycle_all_finite) {
        std::size_t n = p.size();
        while (n > 0 && p[n - 1].is_finite()) --n;
        return {SeqKind::EventuallyFinite, n};
    }
    return {SeqKind::General, 0};
}

Ordinal partial_nat_prod(const OmegaSequence& s, std::size_t n) {
    Ordinal acc{1};
    for (std::size_t i = 0; i < n; ++i) acc = nat_prod(acc, s.term_at(i));
    return acc;
}

Ordinal partial_nat_sum(const OmegaSequence& s, std::size_t n) {
    Ordinal acc;
    for (std::size_t i = 0; i < n; ++i) acc = nat_sum(acc, s.term_at(i));
    return acc;
}

bool seq_equal(const OmegaSequence& s, const OmegaSequence& t) {
    std::size_t bound = std::max(s.prefix().size(), t.prefix().size())
                      + std::lcm(s.cycle().size(), t.cycle().size());
    for (std::size_t i = 0; i < bound; ++i)
        if (!(s.term_at(i) == t.term_at(i))) return false;
    return true;
}

OmegaSequence tail_from(const OmegaSequence& s, std::size_t n) {
    const auto& p = s.prefix();
    const auto& c = s.cycle();
    if (n <= p.size())
        return OmegaSequence({p.begin() + static_cast<std::ptrdiff_t>(n), p.end()}, c);
    std::size_t rot = (n - p.size()) % c.size();
    std::vector<Ordinal> cyc;
    cyc.reserve(c.size());
    for (std::size_t i = 0; i < c.size(); ++i) cyc.push_back(c[(rot + i) % c.size()]);
    return OmegaSequence({}, std::move(cyc));
}

OmegaSequence degrees(const OmegaSequence& s) {
    auto map = [](const std::vector<Ordinal>& xs) {
        std::vector<Ordinal> out;
        out.reserve(xs.size());
        for (const auto& x : xs) {
            if (x.is_zero()) throw std::domain_error("degree of a zero term is undefined");
            out.push_back(x.degree());
        }
        return out;
    };
    return OmegaSequence(map(s.prefix()), map(s.cycle()));
}

OmegaSequence monomials(const OmegaSequence& s) {
    auto map = [](const std::vector<Ordinal>& xs) {
        std::vector<Ordinal> out;
        out.reserve(xs.size());
        for (const auto& x : xs) out.push_back(x.leading_monomial());
        return out;
    };
    return OmegaSequence(map(s.prefix()), map(s.cycle()));
}

OmegaSequence permute_head(const OmegaSequence& s, std::span<const std::size_t> sigma) {
    const std::size_t n = sigma.size();
    std::vector<bool> seen(n, false);
    for (std::size_t v : sigma) {
        if (v >= n || seen[v]) throw std::domain_error("sigma is not a permutation");
        seen[v] = true;
    }
    // Materialize enough prefix so the permuted region is explicit.
    const std::size_t plen = std::max(n, s.prefix().size());
    std::vector<Ordinal> prefix;
    prefix.reserve(plen);
    for (std::size_t i = 0; i < plen; ++i) prefix.push_back(s.term_at(i));
    std::vector<Ordinal> head(prefix.begin(), prefix.begin() + static_cast<std::ptrdiff_t>(n));
    for (std::size_t i = 0; i < n; ++i) prefix[i] = head[sigma[i]];
    const auto& c = s.cycle();
    std::size_t rot = (plen - s.prefix().size()) % c.size();
    std::vector<Ordinal> cyc;
    cyc.reserve(c.size());
    for (std::size_t i = 0; i < c.size(); ++i) cyc.push_back(c[(rot + i) % c.size()]);
    return OmegaSequence(std::move(prefix), std::move(cyc));
}

OmegaSequence rotate_cycle(const OmegaSequence& s, std::size_t k) {
    // Same prefix, cycle rotated in place: a multiset-preserving
    // permutation of the denotation (indices pair up shift-wise).
    const auto& c = s.cycle();
    std::size_t rot = k % c.size();
    std::vector<Ordinal> cyc;
    cyc.reserve(c.size());
    for (std::size_t i = 0; i < c.size(); ++i) cyc.push_back(c[(rot + i) % c.size()]);
    return OmegaSequence(s.prefix(), std::move(cyc));
}

OmegaSequence regroup(const OmegaSequence& s, std::size_t k) {
    if (k == 0) throw std::domain_error("regroup requires k >= 1");
    const std::size_t plen = ((s.prefix().size() + k - 1) / k) * k;
    std::vector<Ordinal> prefix;
    for (std::size_t b = 0; b < plen / k; ++b) {
        Ordinal acc{1};
        for (std::size_t j = 0; j < k; ++j) acc = nat_prod(acc, s.term_at(b * k + j));
        prefix.push_back(acc);
    }
    // Repeat the (rotated) cycle to a multiple of k so blocks align.
    const auto& c = s.cycle();
    std::size_t rot = (plen - s.prefix().size()) % c.size();
    std::size_t clen = std::lcm(c.size(), k);
    std::vector<Ordinal> cycle;
    for (std::size_t b = 0; b < clen / k; ++b) {
        Ordinal acc{1};
        for (std::size_t j = 0; j < k; ++j)
            acc = nat_prod(acc, c[(rot + b * k + j) % c.size()]);
        cycle.push_back(acc);
    }
    return OmegaSequence(std::move(prefix), std::move(cycle));
}

} // namespace ordinals
