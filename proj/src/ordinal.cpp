#include "ordinals/ordinal.hpp"

#include <sstream>
#include <stdexcept>

namespace ordinals {

Ordinal::Ordinal() = default;
Ordinal::Ordinal(const Ordinal&) = default;
Ordinal::Ordinal(Ordinal&&) noexcept = default;
Ordinal& Ordinal::operator=(const Ordinal&) = default;
Ordinal& Ordinal::operator=(Ordinal&&) noexcept = default;
Ordinal::~Ordinal() = default;

Ordinal::Ordinal(std::uint64_t n) : Ordinal(Natural(n)) {}

Ordinal::Ordinal(const Natural& n) {
    if (!n.is_zero()) terms_.push_back(Monomial{Ordinal(), n});
}

const Ordinal& Ordinal::zero() {
    static const Ordinal z;
    return z;
}

const Ordinal& Ordinal::one() {
    static const Ordinal o{1};
    return o;
}

const Ordinal& Ordinal::omega() {
    static const Ordinal w = omega_pow(Ordinal{1});
    return w;
}

Ordinal Ordinal::from_terms(std::vector<Monomial> terms) {
    Ordinal out;
    out.terms_ = std::move(terms);
    if (!out.is_canonical()) throw std::domain_error("non-canonical monomial list");
    return out;
}

bool Ordinal::is_zero() const { return terms_.empty(); }

bool Ordinal::is_finite() const {
    return terms_.empty() || (terms_.size() == 1 && terms_[0].exponent.is_zero());
}

bool Ordinal::is_canonical() const {
    for (std::size_t i = 0; i < terms_.size(); ++i) {
        if (terms_[i].coefficient.is_zero()) return false;
        if (!terms_[i].exponent.is_canonical()) return false;
        if (i + 1 < terms_.size() && !(terms_[i + 1].exponent < terms_[i].exponent))
            return false;
    }
    return true;
}

const std::vector<Monomial>& Ordinal::terms() const { return terms_; }
std::size_t Ordinal::term_count() const { return terms_.size(); }

const Ordinal& Ordinal::degree() const {
    if (terms_.empty()) throw std::domain_error("degree of 0 is undefined");
    return terms_.front().exponent;
}

const Natural& Ordinal::leading_coefficient() const {
    if (terms_.empty()) throw std::domain_error("leading coefficient of 0 is undefined");
    return terms_.front().coefficient;
}

Ordinal Ordinal::leading_monomial() const {
    if (terms_.empty()) return Ordinal();
    Ordinal out;
    out.terms_.push_back(terms_.front());
    return out;
}

Ordinal Ordinal::rest() const {
    Ordinal out;
    if (terms_.size() > 1)
        out.terms_.assign(terms_.begin() + 1, terms_.end());
    return out;
}

Natural Ordinal::as_natural() const {
    if (terms_.empty()) return Natural();
    if (!is_finite()) throw std::domain_error("ordinal is not finite");
    return terms_[0].coefficient;
}

std::strong_ordering operator<=>(const Ordinal& a, const Ordinal& b) {
    const std::size_t n = std::min(a.terms_.size(), b.terms_.size());
    for (std::size_t i = 0; i < n; ++i) {
        auto ce = a.terms_[i].exponent <=> b.terms_[i].exponent;
        if (ce != std::strong_ordering::equal) return ce;
        auto cc = a.terms_[i].coefficient <=> b.terms_[i].coefficient;
        if (cc != std::strong_ordering::equal) return cc;
    }
    return a.terms_.size() <=> b.terms_.size();
}

bool operator==(const Ordinal& a, const Ordinal& b) {
    return (a <=> b) == std::strong_ordering::equal;
}

std::strong_ordering cmp(const Ordinal& a, const Ordinal& b) { return a <=> b; }

Ordinal omega_pow(const Ordinal& e) {
    return Ordinal::from_terms({Monomial{e, Natural(1)}});
}

Ordinal ord_add(const Ordinal& a, const Ordinal& b) {
    if (b.is_zero()) return a;
    if (a.is_zero()) return b;
    const Ordinal& cut = b.degree();
    std::vector<Monomial> out;
    out.reserve(a.term_count() + b.term_count());
    std::size_t i = 0;
    const auto& at = a.terms();
    while (i < at.size() && cut < at[i].exponent) out.push_back(at[i++]);
    const auto& bt = b.terms();
    if (i < at.size() && at[i].exponent == cut) {
        out.push_back(Monomial{cut, at[i].coefficient + bt[0].coefficient});
    } else {
        out.push_back(bt[0]);
    }
    out.insert(out.end(), bt.begin() + 1, bt.end());
    return Ordinal::from_terms(std::move(out));
}

Ordinal ord_sub_left(const Ordinal& a, const Ordinal& b) {
    const auto& at = a.terms();
    const auto& bt = b.terms();
    std::size_t i = 0;
    while (i < at.size() && i < bt.size() && at[i].exponent == bt[i].exponent
           && at[i].coefficient == bt[i].coefficient)
        ++i;
    if (i == at.size()) {
        if (i == bt.size()) return Ordinal();
        return Ordinal::from_terms({bt.begin() + i, bt.end()});
    }
    if (i == bt.size()) throw std::domain_error("left subtraction requires a <= b");
    if (at[i].exponent == bt[i].exponent) {
        if (!(at[i].coefficient < bt[i].coefficient))
            throw std::domain_error("left subtraction requires a <= b");
        std::vector<Monomial> out;
        out.push_back(Monomial{bt[i].exponent, bt[i].coefficient - at[i].coefficient});
        out.insert(out.end(), bt.begin() + i + 1, bt.end());
        return Ordinal::from_terms(std::move(out));
    }
    if (at[i].exponent < bt[i].exponent)
        return Ordinal::from_terms({bt.begin() + i, bt.end()});
    throw std::domain_error("left subtraction requires a <= b");
}

Ordinal ord_mul(const Ordinal& a, const Ordinal& b) {
    if (a.is_zero() || b.is_zero()) return Ordinal();
    Ordinal acc;
    for (const Monomial& t : b.terms()) {
        Ordinal part;
        if (t.exponent.is_zero()) {
            // a * n = w^d(a) * (r * (n-1)) + a
            const Natural& n = t.coefficient;
            if (n.is_one()) {
                part = a;
            } else {
                Natural head = a.leading_coefficient() * (n - Natural(1));
                part = ord_add(Ordinal::from_terms({Monomial{a.degree(), head}}), a);
            }
        } else {
            part = Ordinal::from_terms(
                {Monomial{ord_add(a.degree(), t.exponent), t.coefficient}});
        }
        acc = ord_add(acc, part);
    }
    return acc;
}

std::pair<Ordinal, Ordinal> ord_divmod(const Ordinal& a, const Ordinal& d) {
    if (d.is_zero()) throw std::domain_error("ordinal division by zero");
    Ordinal q;
    Ordinal r = a;
    const Ordinal& de = d.degree();
    const Natural& dc = d.leading_coefficient();
    const Ordinal drest = d.rest();
    while (!(r < d)) {
        const Ordinal& re = r.degree();
        if (de < re) {
            Ordinal gap = ord_sub_left(de, re);
            q = ord_add(q, Ordinal::from_terms({Monomial{gap, r.leading_coefficient()}}));
            r = r.rest();
        } else {
            auto [n, rem] = Natural::divmod(r.leading_coefficient(), dc);
            Ordinal rrest = r.rest();
            if (!rem.is_zero()) {
                q = ord_add(q, Ordinal(n));
                r = ord_add(Ordinal::from_terms({Monomial{re, rem}}), rrest);
            } else if (!(rrest < drest)) {
                q = ord_add(q, Ordinal(n));
                r = ord_sub_left(drest, rrest);
            } else {
                q = ord_add(q, Ordinal(n - Natural(1)));
                r = ord_add(Ordinal::from_terms({Monomial{re, dc}}), rrest);
            }
            break; // remainder now < d by construction
        }
    }
    return {q, r};
}

Ordinal ord_pow(const Ordinal& base, const Ordinal& exponent) {
    if (base == Ordinal::omega()) return omega_pow(exponent);
    if (base.is_finite() && exponent.is_finite())
        return Ordinal(base.as_natural().pow(exponent.as_natural()));
    throw std::domain_error("unsupported exponentiation: only w^x and finite^finite");
}

namespace {

void print_monomial(std::ostringstream& out, const Monomial& t) {
    if (t.exponent.is_zero()) {
        out << t.coefficient.str();
        return;
    }
    if (t.exponent == Ordinal::one()) {
        out << "w";
    } else {
        out << "w^(" << t.exponent.str() << ")";
    }
    if (!t.coefficient.is_one()) out << "*" << t.coefficient.str();
}

} // namespace

std::string Ordinal::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream out;
    for (std::size_t i = 0; i < terms_.size(); ++i) {
        if (i) out << " + ";
        print_monomial(out, terms_[i]);
    }
    return out.str();
}

} // namespace ordinals
