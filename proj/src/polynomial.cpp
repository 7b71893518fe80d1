#include "toric/polynomial.hpp"

#include <sstream>

namespace toric {

Polynomial::Polynomial(const Binomial& b) {
    add_term(b.plus(), 1);
    if (!b.is_monomial())
        add_term(b.minus(), -1);
}

Polynomial Polynomial::term(const ExponentVector& e, const Rat& c) {
    Polynomial p;
    p.add_term(e, c);
    return p;
}

void Polynomial::add_term(const ExponentVector& e, const Rat& c) {
    if (c == 0)
        return;
    auto [it, inserted] = terms_.emplace(e, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0)
            terms_.erase(it);
    }
}

Polynomial Polynomial::operator+(const Polynomial& rhs) const {
    Polynomial out = *this;
    for (const auto& [e, c] : rhs.terms_)
        out.add_term(e, c);
    return out;
}

Polynomial Polynomial::operator-(const Polynomial& rhs) const {
    Polynomial out = *this;
    for (const auto& [e, c] : rhs.terms_)
        out.add_term(e, -c);
    return out;
}

Polynomial Polynomial::operator*(const Polynomial& rhs) const {
    Polynomial out;
    for (const auto& [e1, c1] : terms_)
        for (const auto& [e2, c2] : rhs.terms_)
            out.add_term(e1 + e2, c1 * c2);
    return out;
}

Polynomial Polynomial::scaled(const Rat& c) const {
    Polynomial out;
    for (const auto& [e, coeff] : terms_)
        out.add_term(e, coeff * c);
    return out;
}

Polynomial Polynomial::shifted(const ExponentVector& gamma) const {
    Polynomial out;
    for (const auto& [e, c] : terms_)
        out.add_term(e + gamma, c);
    return out;
}

std::pair<ExponentVector, Rat> Polynomial::lead(const TermOrder& ord) const {
    check_invariant(!terms_.empty(), "lead of zero polynomial");
    auto best = terms_.begin();
    for (auto it = std::next(terms_.begin()); it != terms_.end(); ++it)
        if (ord.greater(it->first, best->first))
            best = it;
    return {best->first, best->second};
}

std::string Polynomial::str() const {
    if (terms_.empty())
        return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        if (!first)
            os << " + ";
        os << c << "*" << e;
        first = false;
    }
    return os.str();
}

Polynomial spoly_generic(const Polynomial& f, const Polynomial& g, const TermOrder& ord) {
    auto [lf, cf] = f.lead(ord);
    auto [lg, cg] = g.lead(ord);
    ExponentVector l = ExponentVector::lcm(lf, lg);
    Polynomial left = f.shifted(l - lf).scaled(Rat(1) / cf);
    Polynomial right = g.shifted(l - lg).scaled(Rat(1) / cg);
    return left - right;
}

Polynomial normal_form_generic(Polynomial f, const std::vector<Polynomial>& reducers,
                               const TermOrder& ord) {
    check_invariant(ord.is_global(), "generic division needs a global order");
    Polynomial remainder;
    while (!f.is_zero()) {
        auto [lm, lc] = f.lead(ord);
        bool reduced = false;
        for (const Polynomial& g : reducers) {
            if (g.is_zero())
                continue;
            auto [lg, cg] = g.lead(ord);
            if (lg.divides(lm)) {
                f = f - g.shifted(lm - lg).scaled(lc / cg);
                reduced = true;
                break;
            }
        }
        if (!reduced) {
            Polynomial t = Polynomial::term(lm, lc);
            remainder = remainder + t;
            f = f - t;
        }
    }
    return remainder;
}

}  // namespace toric
