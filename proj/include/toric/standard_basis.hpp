#pragma once

#include "toric/ideal.hpp"

#include <optional>
#include <vector>

namespace toric {

/// One reduction step of a Mora normal form run, recorded for the
/// termination and exactness assertions in the tests.
struct MoraStep {
    ExponentVector lead;     // LM(h) before the step
    Int ecart;               // ecart(h) before the step
    Int reducer_ecart;
    bool intermediate_added; // h joined the reducer set before the step
    Binomial reducer;
};

struct MoraTrace {
    std::vector<MoraStep> steps;
};

/// ecart(f) = deg(f) - deg(LM(f)); zero for monomials.
Int ecart(const Binomial& f, const TermOrder& ord);

/// Weak normal form via Mora's algorithm: reducers of minimal ecart,
/// intermediate results admitted as reducers. Terminates for local orders.
std::optional<Binomial> mora_nf(const Binomial& f, std::span<const Binomial> reducers,
                                const TermOrder& ord, MoraTrace* trace = nullptr);

/// Standard basis under a local order; `minimal` means no leading monomial
/// divides another's. Minimal, not reduced: tails are left alone.
class StandardBasis {
  public:
    StandardBasis(std::vector<Binomial> elements, TermOrder ord, bool minimal);

    const std::vector<Binomial>& elements() const { return elems_; }
    const TermOrder& order() const { return ord_; }
    bool minimal() const { return minimal_; }
    std::size_t size() const { return elems_.size(); }

    std::string str() const;

  private:
    std::vector<Binomial> elems_;
    TermOrder ord_;
    bool minimal_;
};

/// Mora's construction: Buchberger loop with mora_nf, then minimalized.
StandardBasis standard_basis(const BinomialIdeal& ideal, const TermOrder& ord);

/// For l <= Delta(m): the base basis plus the join binomial (max-sum
/// witness), under the local order making the extension variable biggest.
/// The coprime-lead argument makes the union minimal; refuses l > Delta(m).
StandardBasis extend_standard_basis(const StandardBasis& base, const ExtensionSpec& ext);

/// Local order used by extend_standard_basis.
TermOrder local_extension_order(const TermOrder& base_ord);

/// Homogeneous generators f* of the tangent cone ideal I*.
struct TangentConeIdeal {
    std::size_t nvars = 0;
    std::vector<Binomial> generators;  // each homogeneous, canonically sorted

    BinomialIdeal as_ideal() const { return BinomialIdeal(nvars, generators); }
    std::string str() const;
};

TangentConeIdeal tangent_cone_ideal(const StandardBasis& basis);

/// Minimal monomial generating set of a leading ideal.
struct MonomialIdeal {
    std::size_t nvars = 0;
    std::vector<ExponentVector> generators;  // minimal, canonically sorted

    bool contains_unit() const;
    std::string str() const;
    std::string canonical_key() const;
};

MonomialIdeal leading_ideal(std::span<const Binomial> basis_elements, const TermOrder& ord);
MonomialIdeal leading_ideal(const GroebnerBasis& gb);
MonomialIdeal leading_ideal(const StandardBasis& sb);

/// Minimalizes an arbitrary monomial generating set.
MonomialIdeal make_monomial_ideal(std::size_t nvars, std::vector<ExponentVector> gens);

}  // namespace toric
