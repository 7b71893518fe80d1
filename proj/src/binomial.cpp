#include "toric/binomial.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>

namespace toric {

std::optional<Binomial> Binomial::difference(ExponentVector p, ExponentVector m) {
    check_invariant(p.size() == m.size(), "binomial arity mismatch");
    if (p == m)
        return std::nullopt;
    Binomial b;
    b.plus_ = std::move(p);
    b.minus_ = std::move(m);
    b.monomial_ = false;
    return b;
}

Binomial Binomial::monomial(ExponentVector p) {
    Binomial b;
    b.minus_ = ExponentVector(p.size());
    b.plus_ = std::move(p);
    b.monomial_ = true;
    return b;
}

Binomial Binomial::oriented(const TermOrder& ord) const {
    if (monomial_ || ord.greater(plus_, minus_))
        return *this;
    Binomial b = *this;
    std::swap(b.plus_, b.minus_);
    return b;
}

Binomial Binomial::shifted(const ExponentVector& gamma) const {
    Binomial b = *this;
    b.plus_ = plus_ + gamma;
    if (!monomial_)
        b.minus_ = minus_ + gamma;
    return b;
}

Binomial Binomial::extended(std::size_t extra) const {
    Binomial b = *this;
    b.plus_ = plus_.extended(extra);
    b.minus_ = minus_.extended(extra);
    return b;
}

Binomial Binomial::permuted(const std::vector<std::size_t>& perm) const {
    Binomial b = *this;
    b.plus_ = plus_.permuted(perm);
    b.minus_ = minus_.permuted(perm);
    return b;
}

bool Binomial::is_homogeneous() const {
    return monomial_ || plus_.total_degree() == minus_.total_degree();
}

Int Binomial::degree() const {
    if (monomial_)
        return plus_.total_degree();
    return std::max(plus_.total_degree(), minus_.total_degree());
}

Binomial Binomial::homogenized(std::size_t homvar) const {
    check_invariant(homvar < nvars(), "homogenization variable out of range");
    if (plus_[homvar] != 0 || minus_[homvar] != 0)
        throw InputError("homogenization variable already used");
    if (monomial_)
        return *this;
    Binomial b = *this;
    Int dp = plus_.total_degree(), dm = minus_.total_degree();
    if (dp < dm)
        b.plus_[homvar] = dm - dp;
    else
        b.minus_[homvar] = dp - dm;
    return b;
}

Binomial Binomial::dehomogenized(std::size_t homvar) const {
    check_invariant(homvar < nvars(), "homogenization variable out of range");
    Binomial b = *this;
    b.plus_[homvar] = 0;
    if (!monomial_)
        b.minus_[homvar] = 0;
    check_invariant(b.monomial_ || b.plus_ != b.minus_,
                    "dehomogenization collapsed a binomial");
    return b;
}

Binomial Binomial::star() const {
    if (monomial_ || is_homogeneous())
        return *this;
    return Binomial::monomial(plus_.total_degree() < minus_.total_degree() ? plus_ : minus_);
}

bool Binomial::operator<(const Binomial& rhs) const {
    if (monomial_ != rhs.monomial_)
        return monomial_ < rhs.monomial_;
    if (plus_ != rhs.plus_)
        return plus_ < rhs.plus_;
    return minus_ < rhs.minus_;
}

std::string Binomial::str() const {
    std::ostringstream os;
    os << *this;
    return os.str();
}

std::ostream& operator<<(std::ostream& os, const Binomial& b) {
    os << b.plus();
    if (!b.is_monomial())
        os << " - " << b.minus();
    return os;
}

std::optional<Binomial> spoly(const Binomial& f, const Binomial& g, const TermOrder& ord) {
    Binomial fo = f.oriented(ord), go = g.oriented(ord);
    ExponentVector l = ExponentVector::lcm(fo.lead(), go.lead());
    // (L/LM(f)) f - (L/LM(g)) g; the two x^L heads cancel. What survives is
    // the shifted tails, each present only for genuine binomials.
    if (fo.is_monomial() && go.is_monomial())
        return std::nullopt;
    if (fo.is_monomial())
        return Binomial::monomial(l - go.lead() + go.minus());
    if (go.is_monomial())
        return Binomial::monomial(l - fo.lead() + fo.minus());
    ExponentVector a = l - go.lead() + go.minus();
    ExponentVector b = l - fo.lead() + fo.minus();
    auto d = Binomial::difference(std::move(a), std::move(b));
    if (!d)
        return std::nullopt;
    return d->oriented(ord);
}

namespace {

const Binomial* find_reducer(const ExponentVector& target, std::span<const Binomial> reducers) {
    for (const Binomial& g : reducers)
        if (g.lead().divides(target))
            return &g;
    return nullptr;
}

}  // namespace

std::optional<Binomial> normal_form(const Binomial& f, std::span<const Binomial> reducers,
                                    const TermOrder& ord) {
    check_invariant(ord.is_global(), "normal_form needs a global order");
    std::optional<Binomial> h = f.oriented(ord);
    // Lead reduction first; each step strictly lowers the lead in the
    // well-order, so this terminates.
    while (h) {
        const Binomial* g = find_reducer(h->lead(), reducers);
        if (!g)
            break;
        ExponentVector gamma = h->lead() - g->lead();
        if (g->is_monomial()) {
            if (h->is_monomial())
                return std::nullopt;
            h = Binomial::monomial(h->minus());
        } else if (h->is_monomial()) {
            h = Binomial::monomial(gamma + g->minus());
        } else {
            auto d = Binomial::difference(gamma + g->minus(), h->minus());
            if (!d)
                return std::nullopt;
            h = d->oriented(ord);
        }
    }
    if (!h || h->is_monomial())
        return h;
    return tail_normal_form(*h, reducers, ord);
}

Binomial tail_normal_form(const Binomial& f, std::span<const Binomial> reducers,
                          const TermOrder& ord) {
    check_invariant(ord.is_global(), "tail_normal_form needs a global order");
    Binomial h = f;
    while (!h.is_monomial()) {
        const Binomial* g = find_reducer(h.minus(), reducers);
        if (!g)
            return h;
        ExponentVector gamma = h.minus() - g->lead();
        if (g->is_monomial()) {
            h = Binomial::monomial(h.plus());
            break;
        }
        auto d = Binomial::difference(h.plus(), gamma + g->minus());
        // The tail cannot reach the irreducible lead of a basis element;
        // collapse here means the caller fed an inconsistent basis.
        check_invariant(d.has_value(), "tail reduction collapsed onto the lead");
        h = *d;
        check_invariant(ord.greater(h.plus(), h.minus()), "tail reduction broke orientation");
    }
    return h;
}

}  // namespace toric
