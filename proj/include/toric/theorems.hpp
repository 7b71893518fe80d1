#pragma once

#include "toric/hilbert.hpp"
#include "toric/ideal.hpp"
#include "toric/standard_basis.hpp"

#include <nlohmann/json.hpp>

#include <optional>
#include <string>
#include <vector>

namespace toric {

/// Betti numbers beta_1..beta_d of a minimal free resolution; d is the
/// projective dimension label. Supplied by the caller, never computed here.
struct BettiVector {
    std::vector<Int> betti;

    std::size_t pd() const { return betti.size(); }
    Int alternating_sum() const;
    void validate() const;  // entries >= 1, nonempty
    bool operator==(const BettiVector& rhs) const { return betti == rhs.betti; }
    std::string str() const;
};

/// Mapping-cone transfer: beta'_1 = beta_1 + 1, beta'_i = beta_i +
/// beta_{i-1}, beta'_{d+1} = beta_d.
BettiVector betti_recurrence(const BettiVector& base);

struct CheckItem {
    std::string name;
    bool pass = false;
    std::string details;
};

/// Self-contained verdict for one proposition/theorem run: every hypothesis
/// value, every conclusion check, and hashes of the computed artifacts, so a
/// failed run is reproducible from the report alone.
struct TheoremReport {
    std::string theorem;
    std::vector<CheckItem> hypotheses;
    std::vector<CheckItem> conclusions;
    std::vector<std::string> tags;   // inherited property tags (cm, gorenstein, stci)
    bool pass = false;

    nlohmann::json artifacts() const;
    void finalize();  // pass = all hypotheses and conclusions hold
    std::string str() const;

    nlohmann::json artifacts_;
};

/// Property tags carried along extensions when the transfer hypotheses hold;
/// never decided internally.
struct BaseTags {
    bool cohen_macaulay = false;
    bool gorenstein = false;
    bool stci = false;  // set theoretic complete intersection
};

/// Gluing certificate with alpha = l*m plus the ideal equality
/// I_{S_{l,m}} = I_S + <F>, the latter via an independent toric_ideal run.
TheoremReport verify_prop_affine(const AffineSemigroup& s, const ExtensionSpec& ext,
                                 const BaseTags& tags = {});

/// Projective transfer: for l >= delta(m) builds the closure basis of the
/// extension two ways (join-binomial construction vs from-scratch
/// elimination plus homogenization) and asserts equality and reducedness.
/// For l < delta(m) emits a negative report exhibiting the mu gap.
TheoremReport verify_prop_bad(const AffineSemigroup& s, const ExtensionSpec& ext,
                              const BaseTags& tags = {});

/// Standard-basis extension and tangent-cone splitting I*_ext = I*_base +
/// <F*>, two-path checked; certifies the monic-in-fresh-variable
/// nonzerodivisor structure and transfers the CM tag. Requires l <= Delta(m).
TheoremReport verify_prop_stdbasis_and_cone(const AffineSemigroup& s, const ExtensionSpec& ext,
                                            const BaseTags& tags = {});

/// Homogeneous-type transfer. Forward (l <= Delta): recurrence on both Betti
/// vectors plus the I* splitting. Converse (l > Delta): witnesses the beta_1
/// disagreement by comparing mu(I*_ext) against mu(I*_base) + 1.
TheoremReport verify_prop_hom(const AffineSemigroup& s, const ExtensionSpec& ext,
                              const BettiVector& base_betti);

/// Hilbert-function transfer for l <= Delta(m): product identity, window
/// identity, non-decreasingness of the extension, dimension and embedding
/// codimension bookkeeping.
TheoremReport verify_thm_hf(const AffineSemigroup& s, const ExtensionSpec& ext);

/// One step of a deterministic chain of nice extensions.
struct ChainStep {
    ExtensionSpec spec;
    AffineSemigroup semigroup;        // the extended semigroup
    std::size_t embedding_dim = 0;    // number of generators
    std::size_t dimension = 0;        // lattice rank
    std::size_t embedding_codim = 0;
};

/// Chains nice extensions depth times. The first step uses (l, m); later
/// steps extend by the sum of the current generators, reusing l when that
/// stays valid and nice and falling back to l = 1 otherwise.
std::vector<ChainStep> chain_extensions(const AffineSemigroup& s, const Int& ell,
                                        const ExponentVector& m, std::size_t depth);

}  // namespace toric
