#include "toric/semigroup.hpp"

#include "toric/lattice.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace toric {

Int Representation::sum() const {
    Int s = 0;
    for (const Int& c : coeffs)
        s += c;
    return s;
}

AffineSemigroup::AffineSemigroup(std::size_t dim, std::vector<ExponentVector> generators,
                                 std::string label, bool allow_duplicates)
    : dim_(dim), gens_(std::move(generators)), label_(std::move(label)) {
    if (dim_ == 0)
        throw InputError("semigroup dimension must be positive");
    if (gens_.empty())
        throw InputError("semigroup needs at least one generator");
    std::set<ExponentVector> seen;
    for (const auto& g : gens_) {
        if (g.size() != dim_)
            throw InputError("generator arity differs from semigroup dimension");
        if (g.is_zero())
            throw InputError("zero generator not allowed");
        // Variable indices map onto generator slots, so duplicates are
        // rejected instead of deduplicated.
        if (!seen.insert(g).second && !allow_duplicates)
            throw InputError("duplicate generator: " + g.str());
    }
}

ExponentVector AffineSemigroup::degree_of(const ExponentVector& monomial) const {
    check_invariant(monomial.size() == gens_.size(), "monomial arity != generator count");
    ExponentVector deg(dim_);
    for (std::size_t i = 0; i < gens_.size(); ++i)
        for (std::size_t c = 0; c < dim_; ++c)
            deg[c] += monomial[i] * gens_[i][c];
    return deg;
}

AffineSemigroup AffineSemigroup::extended_by(const Int& ell, const ExponentVector& m) const {
    std::vector<ExponentVector> gens;
    gens.reserve(ngens() + 1);
    for (const auto& g : gens_) {
        ExponentVector scaled(dim_);
        for (std::size_t c = 0; c < dim_; ++c)
            scaled[c] = ell * g[c];
        gens.push_back(std::move(scaled));
    }
    gens.push_back(m);
    return AffineSemigroup(dim_, std::move(gens), {}, /*allow_duplicates=*/true);
}

std::string AffineSemigroup::str() const {
    std::ostringstream os;
    os << "N{";
    for (std::size_t i = 0; i < gens_.size(); ++i) {
        if (i)
            os << ", ";
        os << gens_[i];
    }
    os << '}';
    return os.str();
}

namespace {

void enumerate(const std::vector<ExponentVector>& gens, std::size_t idx,
               ExponentVector remaining, std::vector<Int>& partial,
               std::vector<Representation>& out) {
    if (idx == gens.size()) {
        if (remaining.is_zero())
            out.push_back(Representation{partial});
        return;
    }
    const ExponentVector& g = gens[idx];
    // s_idx is bounded by min over coordinates c with g[c] > 0 of
    // floor(remaining[c] / g[c]); generators are nonzero, so this is finite.
    Int bound = -1;
    for (std::size_t c = 0; c < g.size(); ++c) {
        if (g[c] == 0)
            continue;
        Int b = remaining[c] / g[c];
        if (bound < 0 || b < bound)
            bound = b;
    }
    for (Int s = 0; s <= bound; ++s) {
        partial.push_back(s);
        ExponentVector rem = remaining;
        bool feasible = true;
        for (std::size_t c = 0; c < g.size(); ++c) {
            rem[c] -= s * g[c];
            if (rem[c] < 0) {
                feasible = false;
                break;
            }
        }
        if (feasible)
            enumerate(gens, idx + 1, std::move(rem), partial, out);
        partial.pop_back();
    }
}

}  // namespace

std::vector<Representation> representations(const std::vector<ExponentVector>& gens,
                                            const ExponentVector& m) {
    for (const auto& g : gens)
        check_invariant(g.size() == m.size(), "point arity != generator arity");
    std::vector<Representation> out;
    std::vector<Int> partial;
    enumerate(gens, 0, m, partial, out);
    return out;
}

std::vector<Representation> representations(const AffineSemigroup& s, const ExponentVector& m) {
    if (m.size() != s.dim())
        throw InputError("point arity differs from semigroup dimension");
    return representations(s.generators(), m);
}

bool semigroup_contains(const AffineSemigroup& s, const ExponentVector& m) {
    return !representations(s, m).empty();
}

namespace {

SumExtremum extremum(const AffineSemigroup& s, const ExponentVector& m, bool maximize) {
    auto reps = representations(s, m);
    if (reps.empty())
        throw InputError("point is not in the semigroup: " + m.str());
    const Representation* best = nullptr;
    Int best_sum;
    for (const auto& r : reps) {
        Int sum = r.sum();
        bool better = !best || (maximize ? sum > best_sum : sum < best_sum) ||
                      (sum == best_sum && r.coeffs < best->coeffs);
        if (better) {
            best = &r;
            best_sum = sum;
        }
    }
    return SumExtremum{best_sum, *best};
}

}  // namespace

SumExtremum delta(const AffineSemigroup& s, const ExponentVector& m) {
    return extremum(s, m, false);
}

SumExtremum Delta(const AffineSemigroup& s, const ExponentVector& m) {
    return extremum(s, m, true);
}

std::size_t semigroup_rank(const AffineSemigroup& s) {
    return lattice_rank(rows_from_points(s.generators()));
}

AffineSemigroup closure_semigroup(const AffineSemigroup& s) {
    std::vector<ExponentVector> gens;
    gens.reserve(s.ngens() + 1);
    for (const auto& g : s.generators()) {
        ExponentVector lifted = g.extended(1);
        lifted[s.dim()] = 1;
        gens.push_back(std::move(lifted));
    }
    gens.push_back(ExponentVector::unit(s.dim() + 1, s.dim()));
    return AffineSemigroup(s.dim() + 1, std::move(gens), {}, /*allow_duplicates=*/true);
}

}  // namespace toric
