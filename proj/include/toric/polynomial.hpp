#pragma once

#include "toric/binomial.hpp"

#include <map>

namespace toric {

/// General polynomial with exact rational coefficients. Verification layer
/// only: relation checks, brute-force s-pairs, homogenization sanity. The hot
/// paths never leave the Binomial class.
class Polynomial {
  public:
    Polynomial() = default;
    explicit Polynomial(const Binomial& b);
    static Polynomial term(const ExponentVector& e, const Rat& c);

    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }
    const std::map<ExponentVector, Rat>& terms() const { return terms_; }

    Polynomial operator+(const Polynomial& rhs) const;
    Polynomial operator-(const Polynomial& rhs) const;
    Polynomial operator*(const Polynomial& rhs) const;
    Polynomial scaled(const Rat& c) const;
    Polynomial shifted(const ExponentVector& gamma) const;

    bool operator==(const Polynomial& rhs) const { return terms_ == rhs.terms_; }

    /// Leading term under ord; the polynomial must be nonzero.
    std::pair<ExponentVector, Rat> lead(const TermOrder& ord) const;

    std::string str() const;

  private:
    void add_term(const ExponentVector& e, const Rat& c);

    std::map<ExponentVector, Rat> terms_;
};

/// Textbook s-polynomial via full polynomial arithmetic; the oracle that the
/// Binomial-class spoly is tested against.
Polynomial spoly_generic(const Polynomial& f, const Polynomial& g, const TermOrder& ord);

/// Textbook multivariate division remainder.
Polynomial normal_form_generic(Polynomial f, const std::vector<Polynomial>& reducers,
                               const TermOrder& ord);

}  // namespace toric
