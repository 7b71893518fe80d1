#pragma once

#include "toric/binomial.hpp"
#include "toric/extension.hpp"
#include "toric/semigroup.hpp"

#include <optional>
#include <vector>

namespace toric {

/// Ideal generated by binomials (monomials admitted as degenerate binomials,
/// so tangent-cone ideals reuse the same engine). Optionally carries the
/// semigroup grading it is balanced against.
class BinomialIdeal {
  public:
    BinomialIdeal(std::size_t nvars, std::vector<Binomial> generators,
                  std::optional<AffineSemigroup> grading = std::nullopt);

    std::size_t nvars() const { return nvars_; }
    const std::vector<Binomial>& generators() const { return gens_; }
    const std::optional<AffineSemigroup>& grading() const { return grading_; }
    bool is_zero() const { return gens_.empty(); }

    /// Every generator homogeneous (plain grading).
    bool is_homogeneous() const;
    /// Every generator S-degree balanced against the attached grading.
    bool is_graded_balanced() const;

    BinomialIdeal extended(std::size_t extra) const;
    BinomialIdeal with_generator(Binomial g) const;
    BinomialIdeal with_grading(AffineSemigroup s) const;

  private:
    std::size_t nvars_;
    std::vector<Binomial> gens_;
    std::optional<AffineSemigroup> grading_;
};

/// Ordered basis; when `reduced`, leading monomials are pairwise
/// non-divisible, every tail is irreducible, elements are monic and sorted by
/// leading monomial, making the basis canonical for (ideal, order).
class GroebnerBasis {
  public:
    GroebnerBasis(std::vector<Binomial> elements, TermOrder ord, bool reduced);

    const std::vector<Binomial>& elements() const { return elems_; }
    const TermOrder& order() const { return ord_; }
    bool reduced() const { return reduced_; }
    std::size_t size() const { return elems_.size(); }

    bool operator==(const GroebnerBasis& rhs) const {
        return elems_ == rhs.elems_ && ord_ == rhs.ord_;
    }

    std::string str() const;

  private:
    std::vector<Binomial> elems_;
    TermOrder ord_;
    bool reduced_;
};

/// Buchberger with normal pair selection (lcm degree, index tie-break),
/// product and chain criteria; returns the canonical reduced basis.
GroebnerBasis buchberger(const BinomialIdeal& ideal, const TermOrder& ord);

std::optional<Binomial> reduce_fully(const Binomial& f, const GroebnerBasis& gb);
bool ideal_contains(const GroebnerBasis& gb, const Binomial& f);
bool ideal_equal(const BinomialIdeal& a, const BinomialIdeal& b, const TermOrder& ord);

/// Toric ideal I_S by elimination: x_i - t^{m_i} under a block order
/// eliminating t, intersected with the x-variables, then re-reduced under
/// `ord` and minimalized. The result carries the S-grading.
BinomialIdeal toric_ideal(const AffineSemigroup& s, const TermOrder& ord);
BinomialIdeal toric_ideal(const AffineSemigroup& s);

/// Greedy minimal generating set (ascending degree, then leading monomial)
/// with membership tested against recomputed bases; requires an S-graded or
/// homogeneous input so the count mu is well defined.
std::pair<std::vector<Binomial>, std::size_t> minimal_generators(const BinomialIdeal& ideal,
                                                                 const TermOrder& ord);

/// Reduced basis of the projective closure ideal: homogenize the reduced
/// degrevlex basis of the affine ideal with x0 (the new smallest variable)
/// and re-reduce. `ord` must be degree-refining with the fresh variable
/// smallest; defaults to degrevlex with x0 appended.
GroebnerBasis projective_closure_ideal(const BinomialIdeal& affine, const TermOrder& ord);
GroebnerBasis projective_closure_ideal(const BinomialIdeal& affine);

/// The l >= delta(m) projective construction: appends the homogenized join
/// binomial F = x_{n+1}^l - x0^{l-delta} x^s to a reduced closure basis,
/// tail-reduces it, and returns the reduced basis of I_Sbar + <F> under the
/// order making x_{n+1} biggest. Refuses l < delta(m).
GroebnerBasis projective_extension(const GroebnerBasis& closure_basis, const ExtensionSpec& ext);

/// Order used by projective_extension: degrevlex over n+2 variables with
/// priority x_{n+1} > x_1 > ... > x_n > x0.
TermOrder projective_extension_order(std::size_t base_nvars);

}  // namespace toric
