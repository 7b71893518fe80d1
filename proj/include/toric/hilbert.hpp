#pragma once

#include "toric/standard_basis.hpp"

#include <optional>
#include <vector>

namespace toric {

/// Univariate polynomial with rational coefficients (c[0] + c[1] k + ...).
struct RatPoly {
    std::vector<Rat> coeffs;

    bool is_zero() const { return coeffs.empty(); }
    std::size_t degree() const { return coeffs.empty() ? 0 : coeffs.size() - 1; }
    Rat eval(const Int& k) const;
    RatPoly operator-(const RatPoly& rhs) const;
    /// p(k+1) as a polynomial in k.
    RatPoly shifted_arg() const;
    void trim();
    std::string str() const;
};

/// Hilbert series of R/M for a monomial ideal M in n variables:
/// numerator_full over (1-t)^n, and the cancelled numerator_reduced over
/// (1-t)^dimension with numerator_reduced(1) != 0.
struct HilbertSeries {
    std::size_t nvars = 0;
    std::size_t dimension = 0;          // Krull dimension of R/M
    std::vector<Int> numerator_full;    // N(t) with series = N/(1-t)^nvars
    std::vector<Int> numerator_reduced; // over (1-t)^dimension

    std::string str_full() const;
    std::string str_reduced() const;
};

/// Krull dimension of R/M via minimal prime supports: nvars minus the size
/// of a minimum transversal of the generator supports.
std::size_t krull_dimension(const MonomialIdeal& m);

/// Numerator by recursive pivot splitting (variable occurring in the most
/// generators; quotient/colon short exact sequence), memoized on the
/// canonical generator set.
HilbertSeries hilbert_series(const MonomialIdeal& m);

/// Values b_0..b_k and the polynomial tail P with b_k = P(k) for k >= tail_start.
struct HilbertFunction {
    std::vector<Int> values;
    RatPoly tail;
    std::size_t tail_start = 0;

    Int value_at(std::size_t k) const;  // uses the tail beyond the stored range
};

HilbertFunction hilbert_function(const HilbertSeries& hs, std::size_t up_to);

struct Monotonicity {
    bool nondecreasing = false;
    std::optional<Int> violation_index;
};

/// Exact decision: checks stored values, then the difference polynomial of
/// the tail at every integer up to its Cauchy root bound plus its leading
/// sign, so the verdict covers all k.
Monotonicity is_nondecreasing(const HilbertFunction& hf);

/// Thm-style product identity: the extension numerator over (1-t)^{n+1}
/// equals the base numerator times (1 - t^l). The extra variable contributes
/// the one extra (1-t) factor absorbed by (1+t+...+t^{l-1}).
bool verify_product_identity(const HilbertSeries& base, const Int& ell,
                             const HilbertSeries& ext);

}  // namespace toric
