#pragma once

#include "toric/binomial.hpp"
#include "toric/lattice.hpp"
#include "toric/semigroup.hpp"

#include <optional>

namespace toric {

/// Which representation of m supplies the tail of the join binomial
/// x_{n+1}^l - x^s. The minimum-sum witness drives the projective
/// construction, the maximum-sum witness the local (tangent cone) one.
enum class JoinWitness { MinSum, MaxSum };

/// Extension data for S_{l,m}: the semigroup generated by l*gен_i and m.
struct ExtensionSpec {
    AffineSemigroup base;
    Int ell;
    ExponentVector m;

    bool valid = false;
    std::string invalid_reason;      // set when !valid
    std::optional<std::size_t> coprime_component;  // witness j with gcd(l, m_j) = 1
    bool degenerate_gluing = false;  // m coincides with a scaled generator

    Int delta_value;                 // min representation sum
    Int Delta_value;                 // max representation sum
    Representation delta_witness;
    Representation Delta_witness;

    bool nice = false;               // l <= Delta(m)
    bool projective_good = false;    // l >= delta(m)

    /// The extension semigroup; requires valid.
    AffineSemigroup extended() const;
    /// Join binomial over n+1 variables, the extension variable last.
    Binomial join_binomial(JoinWitness w) const;

    void require_valid() const;
};

/// Computes delta/Delta, witnesses and validity flags. Invalid specs are
/// returned with the violated guard named, not thrown, so verifiers can
/// report failed hypotheses.
ExtensionSpec make_extension(const AffineSemigroup& s, const Int& ell, const ExponentVector& m);

struct GluingCertificate {
    bool ok = false;
    std::string failure;             // set when !ok
    ExponentVector alpha;
    std::vector<Int> intersection_basis;  // generator of ZT1 n ZT2 when rank 1
    std::size_t intersection_rank = 0;
};

/// Certifies Z T1 n Z T2 = Z alpha with alpha a nonzero element of
/// N T1 n N T2. Lattice algebra via integer HNF.
GluingCertificate check_gluing(const std::vector<ExponentVector>& t1,
                               const std::vector<ExponentVector>& t2,
                               const ExponentVector& alpha);

}  // namespace toric
