#include "toric/extension.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include <algorithm>
#include <set>
#include <sstream>

namespace toric {

AffineSemigroup ExtensionSpec::extended() const {
    require_valid();
    return base.extended_by(ell, m);
}

Binomial ExtensionSpec::join_binomial(JoinWitness w) const {
    require_valid();
    const Representation& rep = (w == JoinWitness::MinSum) ? delta_witness : Delta_witness;
    std::size_t n = base.ngens();
    ExponentVector head = ExponentVector::unit(n + 1, n, ell);
    ExponentVector tail(n + 1);
    for (std::size_t i = 0; i < n; ++i)
        tail[i] = rep.coeffs[i];
    auto b = Binomial::difference(std::move(head), std::move(tail));
    check_invariant(b.has_value(), "degenerate join binomial");
    return *b;
}

void ExtensionSpec::require_valid() const {
    if (!valid)
        throw GuardError("invalid extension: " + invalid_reason);
}

ExtensionSpec make_extension(const AffineSemigroup& s, const Int& ell, const ExponentVector& m) {
    ExtensionSpec spec{s, ell, m, false, {}, {}, false, {}, {}, {}, {}, false, false};
    if (ell < 1) {
        spec.invalid_reason = "l must be a positive integer";
        return spec;
    }
    if (m.size() != s.dim()) {
        spec.invalid_reason = "m arity differs from semigroup dimension";
        return spec;
    }
    if (m.is_zero()) {
        spec.invalid_reason = "m must be nonzero";
        return spec;
    }

    // gcd(l, 0) = l, so zero components certify coprimality only when l = 1.
    for (std::size_t j = 0; j < m.size(); ++j) {
        if (boost::multiprecision::gcd(ell, m[j]) == 1) {
            spec.coprime_component = j;
            break;
        }
    }
    if (!spec.coprime_component) {
        std::ostringstream os;
        os << "l = " << ell << " is not relatively prime to any component of m = " << m;
        spec.invalid_reason = os.str();
        return spec;
    }

    auto reps = representations(s, m);
    if (reps.empty()) {
        spec.invalid_reason = "m is not an element of the semigroup";
        return spec;
    }

    // m may coincide with a scaled generator (l = 1 and m a generator);
    // the extension is still well formed, only the gluing decomposition
    // degenerates. Recorded so verifiers can report the failed hypothesis.
    for (const auto& g : s.generators()) {
        ExponentVector scaled(s.dim());
        for (std::size_t c = 0; c < s.dim(); ++c)
            scaled[c] = ell * g[c];
        if (scaled == m)
            spec.degenerate_gluing = true;
    }

    auto dmin = delta(s, m);
    auto dmax = Delta(s, m);
    spec.delta_value = dmin.value;
    spec.delta_witness = dmin.witness;
    spec.Delta_value = dmax.value;
    spec.Delta_witness = dmax.witness;
    spec.nice = ell <= spec.Delta_value;
    spec.projective_good = ell >= spec.delta_value;
    spec.valid = true;
    return spec;
}

GluingCertificate check_gluing(const std::vector<ExponentVector>& t1,
                               const std::vector<ExponentVector>& t2,
                               const ExponentVector& alpha) {
    GluingCertificate cert;
    cert.alpha = alpha;
    if (t1.empty() || t2.empty()) {
        cert.failure = "both generator sets must be nonempty";
        return cert;
    }
    std::set<ExponentVector> side1(t1.begin(), t1.end());
    for (const auto& g : t2) {
        if (side1.count(g)) {
            cert.failure = "generator sets are not disjoint at " + g.str();
            return cert;
        }
    }
    if (alpha.is_zero()) {
        cert.failure = "alpha must be nonzero";
        return cert;
    }

    IntMatrix basis = lattice_intersection(rows_from_points(t1), rows_from_points(t2));
    cert.intersection_rank = basis.size();
    if (basis.size() != 1) {
        std::ostringstream os;
        os << "ZT1 n ZT2 has rank " << basis.size() << ", expected 1";
        cert.failure = os.str();
        return cert;
    }
    cert.intersection_basis = basis[0];

    // Z alpha = Z g iff alpha = +-g.
    bool matches = true;
    bool matches_neg = true;
    for (std::size_t c = 0; c < alpha.size(); ++c) {
        if (alpha[c] != basis[0][c])
            matches = false;
        if (alpha[c] != -basis[0][c])
            matches_neg = false;
    }
    if (!matches && !matches_neg) {
        std::ostringstream os;
        os << "Z alpha != ZT1 n ZT2: intersection basis (";
        for (std::size_t c = 0; c < basis[0].size(); ++c) {
            if (c)
                os << ',';
            os << basis[0][c];
        }
        os << ")";
        cert.failure = os.str();
        return cert;
    }

    if (representations(t1, alpha).empty()) {
        cert.failure = "alpha is not in the N-span of T1";
        return cert;
    }
    if (representations(t2, alpha).empty()) {
        cert.failure = "alpha is not in the N-span of T2";
        return cert;
    }
    cert.ok = true;
    return cert;
}

}  // namespace toric
