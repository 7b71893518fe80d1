#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "oracles.hpp"

#include "toric/standard_basis.hpp"

#include <set>

using namespace toric;

namespace {

Binomial binom(std::initializer_list<long long> p, std::initializer_list<long long> m) {
    auto b = Binomial::difference(ExponentVector(p), ExponentVector(m));
    REQUIRE(b.has_value());
    return *b;
}

const AffineSemigroup kSurface(2, {ExponentVector{6, 0}, ExponentVector{0, 2},
                                   ExponentVector{7, 0}, ExponentVector{6, 4},
                                   ExponentVector{15, 0}});
const AffineSemigroup kCone(2, {ExponentVector{3, 0}, ExponentVector{2, 1}, ExponentVector{1, 2},
                                ExponentVector{0, 3}});

std::set<Binomial> as_set(const std::vector<Binomial>& v) { return {v.begin(), v.end()}; }

// Replays a Mora trace in the rational layer: each step must be an exact
// single reduction, the run must terminate, states must never repeat, and
// the ecart accounting must follow the reducer-selection rule.
void check_trace(const Binomial& f, std::span<const Binomial> reducers, const TermOrder& ord) {
    MoraTrace trace;
    auto result = mora_nf(f, reducers, ord, &trace);

    Polynomial current(f.oriented(ord));
    std::set<std::pair<ExponentVector, std::string>> seen;
    for (const MoraStep& step : trace.steps) {
        // No cycling through identical reduction states.
        auto state = std::make_pair(step.lead, step.reducer.str());
        CHECK(!seen.count(state));
        seen.insert(state);

        if (step.reducer_ecart <= step.ecart) {
            CHECK(!step.intermediate_added);
        } else {
            CHECK(step.intermediate_added);
        }
    }
    // Weak normal form: the remainder's lead is divisible by no reducer lead.
    if (result) {
        for (const Binomial& g : reducers)
            CHECK(!g.oriented(ord).lead().divides(result->lead()));
    }
}

}  // namespace

TEST_CASE("mora_nf: member of the set reduces to zero") {
    TermOrder ord = TermOrder::neg_degrevlex(2);
    Binomial f = binom({0, 2}, {3, 0});  // x2^2 - x1^3, local lead x2^2
    std::vector<Binomial> g{f.oriented(ord)};
    CHECK(!mora_nf(f, g, ord).has_value());
}

TEST_CASE("mora_nf: coprime lead survives") {
    TermOrder ord = TermOrder::neg_degrevlex(3);
    Binomial f = binom({0, 0, 1}, {2, 0, 0}).oriented(ord);  // x3 - x1^2
    std::vector<Binomial> g{binom({0, 2, 0}, {1, 0, 0}).oriented(ord)};
    auto r = mora_nf(f, g, ord);
    REQUIRE(r.has_value());
    CHECK(r->lead() == f.lead());
}

TEST_CASE("mora_nf terminates with decreasing ecart states on the surface ideal") {
    TermOrder ord = TermOrder::neg_degrevlex(5);
    BinomialIdeal ideal = toric_ideal(kSurface);
    std::vector<Binomial> gens;
    for (const auto& g : ideal.generators())
        gens.push_back(g.oriented(ord));

    check_trace(binom({5, 0, 0, 0, 0}, {0, 0, 0, 0, 2}), gens, ord);
    // Every pairwise s-polynomial runs through a traced reduction.
    for (std::size_t i = 0; i < gens.size(); ++i)
        for (std::size_t j = i + 1; j < gens.size(); ++j) {
            auto sp = spoly(gens[i], gens[j], ord);
            if (sp)
                check_trace(*sp, gens, ord);
        }
}

TEST_CASE("standard basis of the surface ideal yields the documented tangent cone") {
    BinomialIdeal ideal = toric_ideal(kSurface);
    StandardBasis sb = standard_basis(ideal, TermOrder::neg_degrevlex(5));
    CHECK(sb.minimal());

    TangentConeIdeal cone = tangent_cone_ideal(sb);
    std::set<Binomial> expected{
        Binomial::monomial(ExponentVector{0, 0, 0, 0, 2}),  // x5^2
        Binomial::monomial(ExponentVector{0, 0, 0, 1, 0}),  // x4
        Binomial::monomial(ExponentVector{0, 0, 3, 0, 1}),  // x3^3 x5
        Binomial::monomial(ExponentVector{0, 0, 6, 0, 0}),  // x3^6
        Binomial::monomial(ExponentVector{1, 0, 0, 0, 1}),  // x1 x5
    };
    CHECK(as_set(cone.generators) == expected);

    MonomialIdeal lm = leading_ideal(sb);
    std::set<ExponentVector> lm_expected{ExponentVector{0, 0, 0, 0, 2}, ExponentVector{0, 0, 0, 1, 0},
                                         ExponentVector{0, 0, 3, 0, 1}, ExponentVector{0, 0, 6, 0, 0},
                                         ExponentVector{1, 0, 0, 0, 1}};
    CHECK(std::set<ExponentVector>(lm.generators.begin(), lm.generators.end()) == lm_expected);
}

TEST_CASE("homogeneous ideal: standard basis and groebner basis agree") {
    BinomialIdeal ideal = toric_ideal(kCone);
    StandardBasis sb = standard_basis(ideal, TermOrder::neg_degrevlex(4));
    GroebnerBasis gb = buchberger(ideal, TermOrder::degrevlex(4));

    // I homogeneous: I* = I, and the two leading ideals coincide.
    TangentConeIdeal cone = tangent_cone_ideal(sb);
    CHECK(ideal_equal(cone.as_ideal(), ideal, TermOrder::degrevlex(4)));
    CHECK(leading_ideal(sb).generators == leading_ideal(gb).generators);
}

TEST_CASE("standard basis invariants are input-order independent") {
    // The basis itself is not canonical, but the leading ideal and the
    // tangent cone ideal it generates are.
    oracles::Rng rng(78);
    BinomialIdeal ideal = toric_ideal(kSurface);
    TermOrder ord = TermOrder::neg_degrevlex(5);
    MonomialIdeal lead_ref = leading_ideal(standard_basis(ideal, ord));
    BinomialIdeal cone_ref = tangent_cone_ideal(standard_basis(ideal, ord)).as_ideal();

    std::vector<Binomial> gens = ideal.generators();
    for (int trial = 0; trial < 20; ++trial) {
        std::shuffle(gens.begin(), gens.end(), rng.engine);
        StandardBasis sb = standard_basis(BinomialIdeal(5, gens), ord);
        CHECK(leading_ideal(sb).generators == lead_ref.generators);
        CHECK(ideal_equal(tangent_cone_ideal(sb).as_ideal(), cone_ref, TermOrder::degrevlex(5)));
    }
}

TEST_CASE("minimalization drops high-degree leads divisible by later low ones") {
    // Under the local order the divisor x2 of x2^2 has lower degree and is
    // the bigger monomial, so the scan must run in degree order.
    auto a = Binomial::difference(ExponentVector{3, 0}, ExponentVector{0, 2});
    auto b = Binomial::difference(ExponentVector{0, 1}, ExponentVector{5, 0});
    BinomialIdeal ideal(2, {*a, *b});
    StandardBasis sb = standard_basis(ideal, TermOrder::neg_degrevlex(2));
    CHECK(sb.size() == 2);
    for (std::size_t i = 0; i < sb.size(); ++i)
        for (std::size_t j = 0; j < sb.size(); ++j)
            if (i != j)
                CHECK(!sb.elements()[i].lead().divides(sb.elements()[j].lead()));
}

TEST_CASE("standard bases are minimal over randomized semigroups") {
    oracles::Rng rng(77);
    int checked = 0;
    while (checked < 20) {
        AffineSemigroup s = oracles::random_semigroup(rng);
        BinomialIdeal ideal = toric_ideal(s);
        if (ideal.is_zero())
            continue;
        ++checked;
        StandardBasis sb = standard_basis(ideal, TermOrder::neg_degrevlex(s.ngens()));
        CAPTURE(s.str());
        for (std::size_t i = 0; i < sb.size(); ++i)
            for (std::size_t j = 0; j < sb.size(); ++j)
                if (i != j)
                    CHECK(!sb.elements()[i].lead().divides(sb.elements()[j].lead()));
        // Standard basis property: every s-polynomial has weak normal form 0.
        for (std::size_t i = 0; i < sb.size(); ++i)
            for (std::size_t j = i + 1; j < sb.size(); ++j) {
                auto sp = spoly(sb.elements()[i], sb.elements()[j], sb.order());
                if (sp)
                    CHECK(!mora_nf(*sp, sb.elements(), sb.order()).has_value());
            }
    }
}

TEST_CASE("single generator: standard basis is itself, star is the low form") {
    BinomialIdeal ideal(2, {binom({1, 0}, {0, 2})});  // x1 - x2^2
    StandardBasis sb = standard_basis(ideal, TermOrder::neg_degrevlex(2));
    REQUIRE(sb.size() == 1);
    TangentConeIdeal cone = tangent_cone_ideal(sb);
    REQUIRE(cone.generators.size() == 1);
    CHECK(cone.generators[0] == Binomial::monomial(ExponentVector{1, 0}));
}

TEST_CASE("extend_standard_basis: size, boundary branches and the guard") {
    BinomialIdeal ideal = toric_ideal(kSurface);
    StandardBasis base = standard_basis(ideal, TermOrder::neg_degrevlex(5));

    // l < Delta: F* is the fresh monomial.
    ExtensionSpec e1 = make_extension(kSurface, 1, ExponentVector{6, 4});
    REQUIRE(e1.valid);
    StandardBasis ext1 = extend_standard_basis(base, e1);
    CHECK(ext1.size() == base.size() + 1);
    Binomial f1 = e1.join_binomial(JoinWitness::MaxSum).oriented(ext1.order());
    CHECK(f1.star().is_monomial());
    CHECK(f1.star().plus() == ExponentVector::unit(6, 5, 1));

    // l = Delta: F* = F stays binomial.
    ExtensionSpec e3 = make_extension(kSurface, 3, ExponentVector{6, 4});
    REQUIRE(e3.valid);
    StandardBasis ext3 = extend_standard_basis(base, e3);
    CHECK(ext3.size() == base.size() + 1);
    Binomial f3 = e3.join_binomial(JoinWitness::MaxSum).oriented(ext3.order());
    CHECK(!f3.star().is_monomial());

    // l > Delta refuses.
    ExtensionSpec e5 = make_extension(kSurface, 5, ExponentVector{6, 4});
    REQUIRE(e5.valid);
    CHECK(!e5.nice);
    CHECK_THROWS_AS(extend_standard_basis(base, e5), GuardError);
}

TEST_CASE("tangent cone of nice extensions splits off the star of F") {
    oracles::Rng rng(19);
    int checked = 0;
    while (checked < 20) {
        AffineSemigroup s = oracles::random_semigroup(rng);
        auto [m, coeffs] = oracles::random_element(rng, s);
        Int ell = rng.uniform(1, 4);
        ExtensionSpec ext = make_extension(s, ell, m);
        if (!ext.valid || !ext.nice)
            continue;
        ++checked;
        const std::size_t n = s.ngens();
        StandardBasis base = standard_basis(toric_ideal(s), TermOrder::neg_degrevlex(n));
        StandardBasis extended = extend_standard_basis(base, ext);

        Binomial fstar =
            ext.join_binomial(JoinWitness::MaxSum).oriented(extended.order()).star();
        BinomialIdeal lhs = tangent_cone_ideal(extended).as_ideal();
        BinomialIdeal rhs = tangent_cone_ideal(base).as_ideal().extended(1).with_generator(fstar);
        CAPTURE(s.str());
        CHECK(ideal_equal(lhs, rhs, TermOrder::degrevlex(n + 1)));

        // Every generator of a tangent cone ideal is homogeneous.
        TangentConeIdeal ext_cone = tangent_cone_ideal(extended);
        for (const auto& g : ext_cone.generators)
            CHECK(g.is_homogeneous());
    }
}

TEST_CASE("leading ideal: minimal monomial generators") {
    TermOrder ord = TermOrder::degrevlex(4);
    std::vector<Binomial> basis{binom({1, 1, 0, 0}, {0, 0, 1, 1})};
    MonomialIdeal lm = leading_ideal(basis, ord);
    REQUIRE(lm.generators.size() == 1);
    CHECK(lm.generators[0] == ExponentVector{1, 1, 0, 0});

    // Divisible generators are dropped.
    MonomialIdeal reduced = make_monomial_ideal(
        2, {ExponentVector{1, 0}, ExponentVector{2, 0}, ExponentVector{1, 1}});
    REQUIRE(reduced.generators.size() == 1);
    CHECK(reduced.generators[0] == ExponentVector{1, 0});
}

TEST_CASE("leading ideal of a nice extension gains exactly the fresh power") {
    ExtensionSpec ext = make_extension(kSurface, 2, ExponentVector{21, 0});
    REQUIRE(ext.valid);
    REQUIRE(ext.nice);
    StandardBasis base = standard_basis(toric_ideal(kSurface), TermOrder::neg_degrevlex(5));
    StandardBasis extended = extend_standard_basis(base, ext);

    std::vector<ExponentVector> expected;
    MonomialIdeal base_lead = leading_ideal(base);
    for (const auto& g : base_lead.generators)
        expected.push_back(g.extended(1));
    expected.push_back(ExponentVector::unit(6, 5, 2));
    CHECK(leading_ideal(extended).generators ==
          make_monomial_ideal(6, std::move(expected)).generators);
}
