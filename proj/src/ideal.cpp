#include "toric/ideal.hpp"

#include "engine_detail.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <sstream>

namespace toric {

BinomialIdeal::BinomialIdeal(std::size_t nvars, std::vector<Binomial> generators,
                             std::optional<AffineSemigroup> grading)
    : nvars_(nvars), gens_(std::move(generators)), grading_(std::move(grading)) {
    for (const auto& g : gens_)
        check_invariant(g.nvars() == nvars_, "generator arity mismatch");
    if (grading_)
        check_invariant(grading_->ngens() == nvars_, "grading arity mismatch");
}

bool BinomialIdeal::is_homogeneous() const {
    return std::all_of(gens_.begin(), gens_.end(),
                       [](const Binomial& g) { return g.is_homogeneous(); });
}

bool BinomialIdeal::is_graded_balanced() const {
    if (!grading_)
        return false;
    for (const auto& g : gens_) {
        if (g.is_monomial())
            return false;
        if (grading_->degree_of(g.plus()) != grading_->degree_of(g.minus()))
            return false;
    }
    return true;
}

BinomialIdeal BinomialIdeal::extended(std::size_t extra) const {
    std::vector<Binomial> gens;
    gens.reserve(gens_.size());
    for (const auto& g : gens_)
        gens.push_back(g.extended(extra));
    return BinomialIdeal(nvars_ + extra, std::move(gens));
}

BinomialIdeal BinomialIdeal::with_generator(Binomial g) const {
    std::vector<Binomial> gens = gens_;
    gens.push_back(std::move(g));
    return BinomialIdeal(nvars_, std::move(gens), grading_);
}

BinomialIdeal BinomialIdeal::with_grading(AffineSemigroup s) const {
    return BinomialIdeal(nvars_, gens_, std::move(s));
}

GroebnerBasis::GroebnerBasis(std::vector<Binomial> elements, TermOrder ord, bool reduced)
    : elems_(std::move(elements)), ord_(std::move(ord)), reduced_(reduced) {}

std::string GroebnerBasis::str() const {
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

namespace detail {

void update_pairs(std::vector<Binomial>& basis, std::vector<SPair>& pairs, const Binomial& f) {
    const std::size_t n = basis.size();

    std::erase_if(pairs, [&](const SPair& p) {
        return f.lead().divides(p.lcm) &&
               p.lcm != ExponentVector::lcm(basis[p.i].lead(), f.lead()) &&
               p.lcm != ExponentVector::lcm(basis[p.j].lead(), f.lead());
    });

    // Group candidate pairs by lcm; iterating by (degree, lex) visits minimal
    // lcms before their multiples.
    std::map<std::pair<Int, ExponentVector>, std::vector<std::size_t>> groups;
    for (std::size_t i = 0; i < n; ++i) {
        ExponentVector l = ExponentVector::lcm(basis[i].lead(), f.lead());
        Int deg = l.total_degree();
        groups[{std::move(deg), std::move(l)}].push_back(i);
    }
    std::vector<ExponentVector> kept;
    for (const auto& [key, idxs] : groups) {
        const ExponentVector& l = key.second;
        if (std::any_of(kept.begin(), kept.end(),
                        [&](const ExponentVector& k) { return k.divides(l); }))
            continue;
        kept.push_back(l);
        // Product criterion: a coprime pair in the class kills the class.
        bool coprime = std::any_of(idxs.begin(), idxs.end(), [&](std::size_t i) {
            return l == basis[i].lead() + f.lead();
        });
        if (!coprime)
            pairs.push_back(SPair{idxs.front(), n, l, key.first});
    }
    basis.push_back(f);
}

std::vector<Binomial> basis_loop(const std::vector<Binomial>& input, const TermOrder& ord,
                                 const ReduceFn& reduce) {
    std::vector<Binomial> basis;
    std::vector<SPair> pairs;
    for (const Binomial& g : input) {
        Binomial o = g.oriented(ord);
        if (std::find(basis.begin(), basis.end(), o) == basis.end())
            update_pairs(basis, pairs, o);
    }
    while (!pairs.empty()) {
        auto it = std::min_element(pairs.begin(), pairs.end(), [](const SPair& a, const SPair& b) {
            if (a.lcm_degree != b.lcm_degree)
                return a.lcm_degree < b.lcm_degree;
            if (a.i != b.i)
                return a.i < b.i;
            return a.j < b.j;
        });
        SPair p = *it;
        pairs.erase(it);
        auto s = spoly(basis[p.i], basis[p.j], ord);
        if (!s)
            continue;
        auto r = reduce(*s, basis);
        if (r)
            update_pairs(basis, pairs, r->oriented(ord));
    }
    return basis;
}

// A proper divisor always has smaller total degree, so scanning in degree
// order sees divisors before their multiples under global and local orders
// alike; the survivors are exactly the minimal leads.
std::vector<Binomial> minimalize_by_lead(std::vector<Binomial> elems, const TermOrder& ord) {
    std::sort(elems.begin(), elems.end(), [&](const Binomial& a, const Binomial& b) {
        Int da = a.lead().total_degree(), db = b.lead().total_degree();
        if (da != db)
            return da < db;
        int c = ord.compare(a.lead(), b.lead());
        if (c != 0)
            return c < 0;
        return a < b;
    });
    std::vector<Binomial> kept;
    for (const Binomial& g : elems) {
        if (std::none_of(kept.begin(), kept.end(),
                         [&](const Binomial& k) { return k.lead().divides(g.lead()); }))
            kept.push_back(g);
    }
    return kept;
}

std::vector<Binomial> sort_by_lead(std::vector<Binomial> elems, const TermOrder& ord) {
    std::sort(elems.begin(), elems.end(), [&](const Binomial& a, const Binomial& b) {
        int c = ord.compare(a.lead(), b.lead());
        if (c != 0)
            return c < 0;
        return a < b;
    });
    return elems;
}

}  // namespace detail

using detail::basis_loop;
using detail::minimalize_by_lead;
using detail::sort_by_lead;

GroebnerBasis buchberger(const BinomialIdeal& ideal, const TermOrder& ord) {
    if (!ord.is_global())
        throw InputError("buchberger needs a global order");
    check_invariant(ord.nvars() == ideal.nvars(), "order arity mismatch");

    auto full_nf = [&](const Binomial& f, std::span<const Binomial> basis) {
        return normal_form(f, basis, ord);
    };
    std::vector<Binomial> basis = basis_loop(ideal.generators(), ord, full_nf);
    basis = minimalize_by_lead(std::move(basis), ord);

    // Interreduce: heads are pairwise non-divisible and never change, so one
    // tail-normalization pass per element yields the reduced basis.
    std::vector<Binomial> reduced;
    for (std::size_t i = 0; i < basis.size(); ++i) {
        std::vector<Binomial> others;
        others.reserve(basis.size() - 1);
        for (std::size_t j = 0; j < basis.size(); ++j)
            if (j != i)
                others.push_back(basis[j]);
        reduced.push_back(basis[i].is_monomial() ? basis[i]
                                                 : tail_normal_form(basis[i], others, ord));
    }
    return GroebnerBasis(sort_by_lead(std::move(reduced), ord), ord, true);
}

std::optional<Binomial> reduce_fully(const Binomial& f, const GroebnerBasis& gb) {
    return normal_form(f, gb.elements(), gb.order());
}

bool ideal_contains(const GroebnerBasis& gb, const Binomial& f) {
    return !reduce_fully(f, gb).has_value();
}

bool ideal_equal(const BinomialIdeal& a, const BinomialIdeal& b, const TermOrder& ord) {
    if (a.nvars() != b.nvars())
        throw InputError("ideal ambient rings differ");
    return buchberger(a, ord).elements() == buchberger(b, ord).elements();
}

BinomialIdeal toric_ideal(const AffineSemigroup& s) {
    return toric_ideal(s, TermOrder::degrevlex(s.ngens()));
}

BinomialIdeal toric_ideal(const AffineSemigroup& s, const TermOrder& ord) {
    const std::size_t d = s.dim();
    const std::size_t n = s.ngens();
    check_invariant(ord.nvars() == n, "order arity mismatch");

    // Variables t_1..t_d then x_1..x_n; eliminate the t block from
    // <x_i - t^{m_i}>.
    std::vector<Binomial> gens;
    gens.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        ExponentVector xvar = ExponentVector::unit(d + n, d + i);
        ExponentVector tpow(d + n);
        for (std::size_t c = 0; c < d; ++c)
            tpow[c] = s.generator(i)[c];
        auto b = Binomial::difference(std::move(xvar), std::move(tpow));
        check_invariant(b.has_value(), "degenerate parametrization binomial");
        gens.push_back(*b);
    }
    GroebnerBasis elim = buchberger(BinomialIdeal(d + n, std::move(gens)),
                                    TermOrder::block_elim(d + n, d));

    std::vector<Binomial> xonly;
    for (const Binomial& g : elim.elements()) {
        bool pure = true;
        for (std::size_t c = 0; c < d && pure; ++c)
            if (g.plus()[c] != 0 || g.minus()[c] != 0)
                pure = false;
        if (!pure)
            continue;
        check_invariant(!g.is_monomial(), "monomial in a toric ideal");
        auto b = Binomial::difference(g.plus().slice(d, d + n), g.minus().slice(d, d + n));
        check_invariant(b.has_value(), "collapsed toric binomial");
        xonly.push_back(*b);
    }

    BinomialIdeal gb_ideal(n, std::move(xonly), s);
    auto [mingens, mu] = minimal_generators(gb_ideal, ord);
    (void)mu;
    return BinomialIdeal(n, std::move(mingens), s);
}

std::pair<std::vector<Binomial>, std::size_t> minimal_generators(const BinomialIdeal& ideal,
                                                                 const TermOrder& ord) {
    if (ideal.grading()) {
        if (!ideal.is_graded_balanced())
            throw InputError("ideal is not balanced against its semigroup grading");
    } else if (!ideal.is_homogeneous()) {
        throw InputError("minimal generator count needs a graded or homogeneous ideal");
    }

    std::vector<Binomial> gens;
    for (const Binomial& g : ideal.generators()) {
        Binomial o = g.oriented(ord);
        if (std::find(gens.begin(), gens.end(), o) == gens.end())
            gens.push_back(o);
    }
    // Ascending by degree then lead: redundant elements go first within a
    // degree, and dropping an element never un-removes an earlier one.
    std::sort(gens.begin(), gens.end(), [&](const Binomial& a, const Binomial& b) {
        if (a.degree() != b.degree())
            return a.degree() < b.degree();
        int c = ord.compare(a.lead(), b.lead());
        if (c != 0)
            return c < 0;
        return a < b;
    });

    std::vector<Binomial> survivors = gens;
    std::size_t idx = 0;
    while (idx < survivors.size()) {
        std::vector<Binomial> others;
        others.reserve(survivors.size() - 1);
        for (std::size_t j = 0; j < survivors.size(); ++j)
            if (j != idx)
                others.push_back(survivors[j]);
        GroebnerBasis gb = buchberger(BinomialIdeal(ideal.nvars(), others), ord);
        if (ideal_contains(gb, survivors[idx]))
            survivors.erase(survivors.begin() + static_cast<std::ptrdiff_t>(idx));
        else
            ++idx;
    }
    std::size_t mu = survivors.size();
    return {std::move(survivors), mu};
}

GroebnerBasis projective_closure_ideal(const BinomialIdeal& affine) {
    return projective_closure_ideal(affine, TermOrder::degrevlex(affine.nvars() + 1));
}

GroebnerBasis projective_closure_ideal(const BinomialIdeal& affine, const TermOrder& ord) {
    const std::size_t n = affine.nvars();
    if (ord.nvars() != n + 1 || ord.kind() != OrderKind::DegRevLex)
        throw InputError("projective closure needs degrevlex over n+1 variables");
    if (ord.priority().back() != n)
        throw InputError("the homogenization variable must be the smallest");

    std::vector<std::size_t> affine_priority;
    for (std::size_t v : ord.priority())
        if (v != n)
            affine_priority.push_back(v);
    GroebnerBasis g = buchberger(affine, TermOrder::degrevlex(n, affine_priority));

    std::vector<Binomial> homogenized;
    homogenized.reserve(g.size());
    for (const Binomial& f : g.elements())
        homogenized.push_back(f.extended(1).homogenized(n));

    std::optional<AffineSemigroup> grading;
    if (affine.grading())
        grading = closure_semigroup(*affine.grading());
    return buchberger(BinomialIdeal(n + 1, std::move(homogenized), std::move(grading)), ord);
}

TermOrder projective_extension_order(std::size_t base_nvars) {
    // x_{n+1} > x_1 > ... > x_n > x0 over indices [x1..xn, x0, x_{n+1}].
    std::vector<std::size_t> priority;
    priority.push_back(base_nvars + 1);
    for (std::size_t i = 0; i < base_nvars; ++i)
        priority.push_back(i);
    priority.push_back(base_nvars);
    return TermOrder::degrevlex(base_nvars + 2, std::move(priority));
}

namespace {

// Grading for the projective extension ring layout [x1..xn, x0, x_{n+1}].
AffineSemigroup projective_extension_grading(const ExtensionSpec& ext) {
    const AffineSemigroup extended = ext.extended();
    const std::size_t d = extended.dim();
    std::vector<ExponentVector> gens;
    for (std::size_t i = 0; i + 1 < extended.ngens(); ++i) {
        ExponentVector g = extended.generator(i).extended(1);
        g[d] = 1;
        gens.push_back(std::move(g));
    }
    gens.push_back(ExponentVector::unit(d + 1, d));  // x0
    ExponentVector m = extended.generator(extended.ngens() - 1).extended(1);
    m[d] = 1;
    gens.push_back(std::move(m));  // x_{n+1}
    return AffineSemigroup(d + 1, std::move(gens), {}, /*allow_duplicates=*/true);
}

bool structurally_reduced(const std::vector<Binomial>& elems) {
    for (std::size_t i = 0; i < elems.size(); ++i)
        for (std::size_t j = 0; j < elems.size(); ++j) {
            if (i == j)
                continue;
            if (elems[j].lead().divides(elems[i].lead()))
                return false;
            if (!elems[i].is_monomial() && elems[j].lead().divides(elems[i].minus()))
                return false;
        }
    return true;
}

}  // namespace

GroebnerBasis projective_extension(const GroebnerBasis& closure_basis, const ExtensionSpec& ext) {
    ext.require_valid();
    const std::size_t n = ext.base.ngens();
    check_invariant(closure_basis.order().nvars() == n + 1, "closure basis arity mismatch");
    if (ext.ell < ext.delta_value) {
        std::ostringstream os;
        os << "l = " << ext.ell << " < delta(m) = " << ext.delta_value
           << ": the closure ideal of the extension can fail to extend any minimal "
              "generating set; compute it from scratch instead";
        throw GuardError(os.str());
    }

    const TermOrder ord = projective_extension_order(n);

    // F = x_{n+1}^l - x0^{l-delta} x^s from the minimum-sum witness.
    ExponentVector head = ExponentVector::unit(n + 2, n + 1, ext.ell);
    ExponentVector tail(n + 2);
    for (std::size_t i = 0; i < n; ++i)
        tail[i] = ext.delta_witness.coeffs[i];
    tail[n] = ext.ell - ext.delta_value;
    auto f = Binomial::difference(head, tail);
    check_invariant(f.has_value(), "degenerate projective join binomial");
    Binomial oriented_f = f->oriented(ord);
    check_invariant(oriented_f.lead() == head, "join binomial lead is not the fresh power");

    std::vector<Binomial> lifted;
    lifted.reserve(closure_basis.size());
    for (const Binomial& g : closure_basis.elements())
        lifted.push_back(g.extended(1));

    Binomial reduced_f = tail_normal_form(oriented_f, lifted, ord);
    std::vector<Binomial> constructed = lifted;
    constructed.push_back(reduced_f);
    check_invariant(structurally_reduced(constructed),
                    "constructed projective extension basis is not reduced");

    std::vector<Binomial> sum_gens = lifted;
    sum_gens.push_back(oriented_f);
    GroebnerBasis recomputed = buchberger(
        BinomialIdeal(n + 2, std::move(sum_gens), projective_extension_grading(ext)), ord);

    std::sort(constructed.begin(), constructed.end(), [&](const Binomial& a, const Binomial& b) {
        int c = ord.compare(a.lead(), b.lead());
        if (c != 0)
            return c < 0;
        return a < b;
    });
    check_invariant(constructed == recomputed.elements(),
                    "join construction disagrees with the recomputed basis");
    return recomputed;
}

}  // namespace toric
