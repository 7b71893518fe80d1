#include "toric/standard_basis.hpp"

#include "engine_detail.hpp"

#include <algorithm>
#include <sstream>

namespace toric {

Int ecart(const Binomial& f, const TermOrder& ord) {
    if (f.is_monomial())
        return 0;
    Binomial o = f.oriented(ord);
    return o.minus().total_degree() - o.lead().total_degree();
}

std::optional<Binomial> mora_nf(const Binomial& f, std::span<const Binomial> reducers,
                                const TermOrder& ord, MoraTrace* trace) {
    check_invariant(ord.is_local(), "mora_nf needs a local order");
    std::vector<Binomial> pool(reducers.begin(), reducers.end());
    std::optional<Binomial> h = f.oriented(ord);

    while (h) {
        // Divisor of minimal ecart; earliest in the pool on ties, so
        // intermediates (appended last) only fire when strictly better.
        const Binomial* best = nullptr;
        Int best_ecart;
        for (const Binomial& g : pool) {
            if (!g.lead().divides(h->lead()))
                continue;
            Int e = ecart(g, ord);
            if (!best || e < best_ecart) {
                best = &g;
                best_ecart = e;
            }
        }
        if (!best)
            break;

        Int h_ecart = ecart(*h, ord);
        bool added = false;
        if (best_ecart > h_ecart) {
            // Mora's trick: remember h, later reductions may shorten by it.
            added = true;
        }
        if (trace)
            trace->steps.push_back(MoraStep{h->lead(), h_ecart, best_ecart, added, *best});

        const Binomial g = *best;  // copy before the pool may reallocate
        if (added)
            pool.push_back(*h);

        ExponentVector gamma = h->lead() - g.lead();
        if (g.is_monomial()) {
            if (h->is_monomial())
                return std::nullopt;
            h = Binomial::monomial(h->minus());
        } else if (h->is_monomial()) {
            h = Binomial::monomial(gamma + g.minus());
        } else {
            auto d = Binomial::difference(gamma + g.minus(), h->minus());
            if (!d)
                return std::nullopt;
            h = d->oriented(ord);
        }
    }
    return h;
}

StandardBasis::StandardBasis(std::vector<Binomial> elements, TermOrder ord, bool minimal)
    : elems_(std::move(elements)), ord_(std::move(ord)), minimal_(minimal) {}

std::string StandardBasis::str() const {
    std::ostringstream os;
    os << '{';
    for (std::size_t i = 0; i < elems_.size(); ++i) {
        if (i)
            os << ", ";
        os << elems_[i];
    }
    os << '}';
    return os.str();
}

StandardBasis standard_basis(const BinomialIdeal& ideal, const TermOrder& ord) {
    if (!ord.is_local())
        throw InputError("standard_basis needs a local order");
    check_invariant(ord.nvars() == ideal.nvars(), "order arity mismatch");

    auto weak_nf = [&](const Binomial& f, std::span<const Binomial> basis) {
        return mora_nf(f, basis, ord);
    };
    std::vector<Binomial> basis = detail::basis_loop(ideal.generators(), ord, weak_nf);
    basis = detail::minimalize_by_lead(std::move(basis), ord);
    return StandardBasis(detail::sort_by_lead(std::move(basis), ord), ord, true);
}

TermOrder local_extension_order(const TermOrder& base_ord) {
    check_invariant(base_ord.is_local(), "base order must be local");
    return base_ord.extended_with_biggest();
}

StandardBasis extend_standard_basis(const StandardBasis& base, const ExtensionSpec& ext) {
    ext.require_valid();
    if (ext.ell > ext.Delta_value) {
        std::ostringstream os;
        os << "l = " << ext.ell << " > Delta(m) = " << ext.Delta_value
           << ": the join binomial is no standard basis element of the extension";
        throw GuardError(os.str());
    }
    const std::size_t n = ext.base.ngens();
    check_invariant(base.order().nvars() == n, "base basis arity mismatch");

    TermOrder ord = local_extension_order(base.order());
    Binomial f = ext.join_binomial(JoinWitness::MaxSum).oriented(ord);
    check_invariant(f.lead() == ExponentVector::unit(n + 1, n, ext.ell),
                    "join binomial lead is not the fresh power");

    std::vector<Binomial> elems;
    elems.reserve(base.size() + 1);
    for (const Binomial& g : base.elements())
        elems.push_back(g.extended(1));
    elems.push_back(f);

    // Fresh-variable lead is coprime to every base lead, so the union stays
    // a standard basis and minimality is inherited.
    for (std::size_t i = 0; i + 1 < elems.size(); ++i) {
        check_invariant(!elems[i].lead().divides(f.lead()) && !f.lead().divides(elems[i].lead()),
                        "extension lead clashes with the base basis");
    }
    return StandardBasis(detail::sort_by_lead(std::move(elems), ord), ord, true);
}

TangentConeIdeal tangent_cone_ideal(const StandardBasis& basis) {
    check_invariant(basis.minimal(), "tangent cone needs a minimal standard basis");
    TangentConeIdeal cone;
    cone.nvars = basis.order().nvars();
    TermOrder global = TermOrder::degrevlex(cone.nvars, basis.order().priority());
    for (const Binomial& g : basis.elements()) {
        Binomial s = g.oriented(basis.order()).star();
        check_invariant(s.is_homogeneous(), "tangent cone generator is not homogeneous");
        cone.generators.push_back(s.oriented(global));
    }
    std::sort(cone.generators.begin(), cone.generators.end());
    return cone;
}

std::string TangentConeIdeal::str() const {
    std::ostringstream os;
    os << '<';
    for (std::size_t i = 0; i < generators.size(); ++i) {
        if (i)
            os << ", ";
        os << generators[i];
    }
    os << '>';
    return os.str();
}

bool MonomialIdeal::contains_unit() const {
    return std::any_of(generators.begin(), generators.end(),
                       [](const ExponentVector& g) { return g.is_zero(); });
}

std::string MonomialIdeal::str() const {
    std::ostringstream os;
    os << '<';
    for (std::size_t i = 0; i < generators.size(); ++i) {
        if (i)
            os << ", ";
        os << generators[i];
    }
    os << '>';
    return os.str();
}

std::string MonomialIdeal::canonical_key() const {
    std::ostringstream os;
    os << nvars << ':';
    for (const auto& g : generators)
        os << g;
    return os.str();
}

MonomialIdeal make_monomial_ideal(std::size_t nvars, std::vector<ExponentVector> gens) {
    for (const auto& g : gens)
        check_invariant(g.size() == nvars, "monomial arity mismatch");
    std::sort(gens.begin(), gens.end(), [](const ExponentVector& a, const ExponentVector& b) {
        Int da = a.total_degree(), db = b.total_degree();
        if (da != db)
            return da < db;
        return a < b;
    });
    MonomialIdeal out;
    out.nvars = nvars;
    for (const auto& g : gens) {
        bool redundant =
            std::any_of(out.generators.begin(), out.generators.end(),
                        [&](const ExponentVector& k) { return k.divides(g); });
        if (!redundant && !(out.generators.size() && out.generators.back() == g))
            out.generators.push_back(g);
    }
    return out;
}

MonomialIdeal leading_ideal(std::span<const Binomial> basis_elements, const TermOrder& ord) {
    std::vector<ExponentVector> leads;
    leads.reserve(basis_elements.size());
    for (const Binomial& g : basis_elements)
        leads.push_back(g.oriented(ord).lead());
    return make_monomial_ideal(ord.nvars(), std::move(leads));
}

MonomialIdeal leading_ideal(const GroebnerBasis& gb) {
    return leading_ideal(gb.elements(), gb.order());
}

MonomialIdeal leading_ideal(const StandardBasis& sb) {
    return leading_ideal(sb.elements(), sb.order());
}

}  // namespace toric
