#pragma once

#include "toric/term_order.hpp"

#include <optional>
#include <span>
#include <vector>

namespace toric {

/// Pure-difference binomial x^plus - x^minus, or a bare monomial x^plus
/// (a degenerate binomial; minus is the zero vector and unused). The class is
/// closed under s-polynomials and reduction, up to sign, which never matters
/// here: all coefficients are +-1 and bases are kept monic.
class Binomial {
  public:
    /// x^p - x^m; nullopt when p == m (the zero polynomial).
    static std::optional<Binomial> difference(ExponentVector p, ExponentVector m);
    static Binomial monomial(ExponentVector p);

    bool is_monomial() const { return monomial_; }
    const ExponentVector& plus() const { return plus_; }
    const ExponentVector& minus() const { return minus_; }
    std::size_t nvars() const { return plus_.size(); }

    /// Copy with plus >= minus under ord (the stored orientation invariant
    /// inside any basis).
    Binomial oriented(const TermOrder& ord) const;
    const ExponentVector& lead() const { return plus_; }

    /// x^gamma * f.
    Binomial shifted(const ExponentVector& gamma) const;
    /// Same binomial in a ring with `extra` more variables.
    Binomial extended(std::size_t extra) const;
    Binomial permuted(const std::vector<std::size_t>& perm) const;

    bool is_homogeneous() const;
    Int degree() const;  // max of the two term degrees (the term degree if monomial)

    /// Balances total degree using variable `homvar`, which must be unused.
    Binomial homogenized(std::size_t homvar) const;
    /// Substitutes x_homvar = 1.
    Binomial dehomogenized(std::size_t homvar) const;

    /// Homogeneous summand of lowest total degree: the full binomial when the
    /// two degrees agree, otherwise the lower-degree monomial.
    Binomial star() const;

    bool operator==(const Binomial& rhs) const {
        return monomial_ == rhs.monomial_ && plus_ == rhs.plus_ && minus_ == rhs.minus_;
    }
    bool operator!=(const Binomial& rhs) const { return !(*this == rhs); }
    /// Deterministic order-agnostic compare for canonical sorting.
    bool operator<(const Binomial& rhs) const;

    std::string str() const;

  private:
    Binomial() = default;

    ExponentVector plus_, minus_;
    bool monomial_ = false;
};

std::ostream& operator<<(std::ostream& os, const Binomial& b);

/// S-polynomial; nullopt when it cancels to zero.
std::optional<Binomial> spoly(const Binomial& f, const Binomial& g, const TermOrder& ord);

/// Full normal form (lead, then tail) against pre-oriented reducers under a
/// global order. nullopt when f reduces to zero.
std::optional<Binomial> normal_form(const Binomial& f, std::span<const Binomial> reducers,
                                    const TermOrder& ord);

/// Tail-only normal form; the leading monomial is left untouched.
Binomial tail_normal_form(const Binomial& f, std::span<const Binomial> reducers,
                          const TermOrder& ord);

}  // namespace toric
