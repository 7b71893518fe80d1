#pragma once

#include "toric/exponent.hpp"

#include <optional>
#include <string>
#include <vector>

namespace toric {

/// Coefficient tuple (s_1..s_n) with sum_i s_i * gen_i = target.
struct Representation {
    std::vector<Int> coeffs;

    Int sum() const;
    bool operator==(const Representation& rhs) const { return coeffs == rhs.coeffs; }
    bool operator<(const Representation& rhs) const { return coeffs < rhs.coeffs; }
};

/// Finitely generated subsemigroup of N^d. Generators are nonzero; each
/// generator maps onto the ring variable of its slot. Duplicates are
/// rejected for user-supplied semigroups, but extension semigroups may
/// legitimately repeat a generator (l = 1 with m an existing generator).
class AffineSemigroup {
  public:
    AffineSemigroup(std::size_t dim, std::vector<ExponentVector> generators,
                    std::string label = {}, bool allow_duplicates = false);

    std::size_t dim() const { return dim_; }
    std::size_t ngens() const { return gens_.size(); }
    const std::vector<ExponentVector>& generators() const { return gens_; }
    const ExponentVector& generator(std::size_t i) const { return gens_[i]; }
    const std::string& label() const { return label_; }

    /// S-degree of a monomial exponent: sum_i a_i * gen_i in N^d.
    ExponentVector degree_of(const ExponentVector& monomial) const;

    /// Scales every generator by l and appends m.
    AffineSemigroup extended_by(const Int& ell, const ExponentVector& m) const;

    bool operator==(const AffineSemigroup& rhs) const {
        return dim_ == rhs.dim_ && gens_ == rhs.gens_;
    }

    std::string str() const;

  private:
    std::size_t dim_;
    std::vector<ExponentVector> gens_;
    std::string label_;
};

/// All representations of m over the given generator list; exhaustive DFS
/// with per-coordinate bounds. Empty iff m is not in the N-span.
std::vector<Representation> representations(const std::vector<ExponentVector>& gens,
                                            const ExponentVector& m);
std::vector<Representation> representations(const AffineSemigroup& s, const ExponentVector& m);

bool semigroup_contains(const AffineSemigroup& s, const ExponentVector& m);

struct SumExtremum {
    Int value;
    Representation witness;
};

/// Minimum coefficient sum over representations(s, m); witness is the
/// lexicographically smallest minimizing tuple. Throws when m is not in s.
SumExtremum delta(const AffineSemigroup& s, const ExponentVector& m);
/// Maximum coefficient sum, witness lexicographically smallest maximizer.
SumExtremum Delta(const AffineSemigroup& s, const ExponentVector& m);

/// dim V_S = rank of the generator lattice.
std::size_t semigroup_rank(const AffineSemigroup& s);

/// Semigroup of the projective closure: every generator gains a homogenizing
/// coordinate 1 and the point (0,..,0,1) (the x0 variable) is appended last.
AffineSemigroup closure_semigroup(const AffineSemigroup& s);

}  // namespace toric
