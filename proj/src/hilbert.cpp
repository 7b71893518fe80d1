#include "toric/hilbert.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace toric {

namespace {

void trim_int_poly(std::vector<Int>& p) {
    while (!p.empty() && p.back() == 0)
        p.pop_back();
}

std::vector<Int> poly_add(const std::vector<Int>& a, const std::vector<Int>& b) {
    std::vector<Int> out(std::max(a.size(), b.size()));
    for (std::size_t i = 0; i < a.size(); ++i)
        out[i] += a[i];
    for (std::size_t i = 0; i < b.size(); ++i)
        out[i] += b[i];
    trim_int_poly(out);
    return out;
}

std::vector<Int> poly_mul(const std::vector<Int>& a, const std::vector<Int>& b) {
    if (a.empty() || b.empty())
        return {};
    std::vector<Int> out(a.size() + b.size() - 1);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j)
            out[i + j] += a[i] * b[j];
    trim_int_poly(out);
    return out;
}

std::vector<Int> shifted_by_t(const std::vector<Int>& a, std::size_t power) {
    if (a.empty())
        return {};
    std::vector<Int> out(a.size() + power);
    for (std::size_t i = 0; i < a.size(); ++i)
        out[i + power] = a[i];
    return out;
}

// Exact division by (1-t); the dividend must vanish at t = 1.
std::vector<Int> divide_by_one_minus_t(const std::vector<Int>& c) {
    if (c.empty())
        return {};
    std::vector<Int> q(c.size());
    Int run = 0;
    for (std::size_t i = 0; i < c.size(); ++i) {
        run += c[i];
        q[i] = run;
    }
    check_invariant(q.back() == 0, "numerator not divisible by (1-t)");
    q.pop_back();
    trim_int_poly(q);
    return q;
}

bool supports_disjoint(const ExponentVector& a, const ExponentVector& b) {
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] != 0 && b[i] != 0)
            return false;
    return true;
}

std::size_t to_index(const Int& v, const char* what) {
    if (v < 0 || v > 1u << 20)
        throw InputError(std::string("value out of supported range: ") + what);
    return static_cast<std::size_t>(v.convert_to<unsigned long>());
}

class SeriesComputer {
  public:
    std::vector<Int> numerator(const MonomialIdeal& m) {
        std::string key = m.canonical_key();
        auto it = memo_.find(key);
        if (it != memo_.end())
            return it->second;
        std::vector<Int> result = compute(m);
        memo_.emplace(std::move(key), result);
        return result;
    }

  private:
    std::vector<Int> compute(const MonomialIdeal& m) {
        if (m.generators.empty())
            return {1};
        if (m.contains_unit())
            return {};

        bool coprime = true;
        for (std::size_t i = 0; i < m.generators.size() && coprime; ++i)
            for (std::size_t j = i + 1; j < m.generators.size() && coprime; ++j)
                coprime = supports_disjoint(m.generators[i], m.generators[j]);
        if (coprime) {
            // Regular sequence: N = prod (1 - t^{deg g}).
            std::vector<Int> out{1};
            for (const auto& g : m.generators) {
                std::size_t d = to_index(g.total_degree(), "generator degree");
                std::vector<Int> factor(d + 1);
                factor[0] = 1;
                factor[d] -= 1;
                out = poly_mul(out, factor);
            }
            return out;
        }

        // Pivot: the variable hitting the most generators, lowest index on
        // ties. Not coprime, so some variable occurs at least twice.
        std::size_t pivot = 0, best_count = 0;
        for (std::size_t v = 0; v < m.nvars; ++v) {
            std::size_t count = 0;
            for (const auto& g : m.generators)
                if (g[v] != 0)
                    ++count;
            if (count > best_count) {
                best_count = count;
                pivot = v;
            }
        }
        check_invariant(best_count >= 2, "pivot frequency must exceed one");

        // 0 -> (R/(I:x))(-1) -> R/I -> R/(I+<x>) -> 0 with x the pivot.
        std::vector<ExponentVector> sum_gens;
        std::vector<ExponentVector> colon_gens;
        for (const auto& g : m.generators) {
            if (g[pivot] == 0) {
                sum_gens.push_back(g);
                colon_gens.push_back(g);
            } else {
                ExponentVector dec = g;
                dec[pivot] -= 1;
                colon_gens.push_back(std::move(dec));
            }
        }
        sum_gens.push_back(ExponentVector::unit(m.nvars, pivot));

        std::vector<Int> n_sum = numerator(make_monomial_ideal(m.nvars, std::move(sum_gens)));
        std::vector<Int> n_colon = numerator(make_monomial_ideal(m.nvars, std::move(colon_gens)));
        return poly_add(n_sum, shifted_by_t(n_colon, 1));
    }

    std::map<std::string, std::vector<Int>> memo_;
};

std::string rational_form(const std::vector<Int>& numerator, std::size_t denominator_power) {
    std::ostringstream os;
    os << '(';
    if (numerator.empty()) {
        os << '0';
    } else {
        bool first = true;
        for (std::size_t i = 0; i < numerator.size(); ++i) {
            const Int& c = numerator[i];
            if (c == 0)
                continue;
            if (!first)
                os << (c > 0 ? " + " : " - ");
            else if (c < 0)
                os << '-';
            Int a = abs(c);
            if (a != 1 || i == 0)
                os << a;
            if (i >= 1) {
                os << 't';
                if (i > 1)
                    os << '^' << i;
            }
            first = false;
        }
    }
    os << ") / (1-t)^" << denominator_power;
    return os.str();
}

Int binomial_coeff(const Int& top, std::size_t k) {
    Int out = 1;
    for (std::size_t i = 0; i < k; ++i) {
        out *= top - Int(i);
        out /= Int(i) + 1;
    }
    return out;
}

}  // namespace

std::size_t krull_dimension(const MonomialIdeal& m) {
    if (m.contains_unit())
        throw InputError("the unit ideal has no Krull dimension here");
    if (m.nvars > 24)
        throw InputError("too many variables for the transversal search");
    std::vector<std::uint32_t> supports;
    for (const auto& g : m.generators) {
        std::uint32_t s = 0;
        for (std::size_t v = 0; v < m.nvars; ++v)
            if (g[v] != 0)
                s |= (1u << v);
        supports.push_back(s);
    }
    // Height = smallest variable set meeting every generator support
    // (a minimal prime of least size); dimension is the complement count.
    const std::uint32_t all = (1u << m.nvars) - 1;
    for (std::size_t k = 0; k <= m.nvars; ++k) {
        for (std::uint32_t mask = 0;; ++mask) {
            if (static_cast<std::size_t>(__builtin_popcount(mask)) == k) {
                bool hits = std::all_of(supports.begin(), supports.end(),
                                        [&](std::uint32_t s) { return (s & mask) != 0; });
                if (hits)
                    return m.nvars - k;
            }
            if (mask == all)
                break;
        }
    }
    throw InvariantError("no transversal found");
}

HilbertSeries hilbert_series(const MonomialIdeal& m) {
    if (m.contains_unit())
        throw InputError("quotient by the unit ideal is the zero ring");
    HilbertSeries hs;
    hs.nvars = m.nvars;
    SeriesComputer computer;
    hs.numerator_full = computer.numerator(m);
    hs.dimension = krull_dimension(m);

    hs.numerator_reduced = hs.numerator_full;
    for (std::size_t i = hs.dimension; i < hs.nvars; ++i)
        hs.numerator_reduced = divide_by_one_minus_t(hs.numerator_reduced);
    check_invariant(!hs.numerator_reduced.empty(), "reduced numerator vanished");
    Int at_one = 0;
    for (const Int& c : hs.numerator_reduced)
        at_one += c;
    check_invariant(at_one != 0, "reduced numerator must not vanish at t = 1");
    return hs;
}

std::string HilbertSeries::str_full() const { return rational_form(numerator_full, nvars); }
std::string HilbertSeries::str_reduced() const { return rational_form(numerator_reduced, dimension); }

Rat RatPoly::eval(const Int& k) const {
    Rat out = 0;
    for (std::size_t i = coeffs.size(); i-- > 0;)
        out = out * Rat(k) + coeffs[i];
    return out;
}

RatPoly RatPoly::operator-(const RatPoly& rhs) const {
    RatPoly out;
    out.coeffs.resize(std::max(coeffs.size(), rhs.coeffs.size()));
    for (std::size_t i = 0; i < coeffs.size(); ++i)
        out.coeffs[i] += coeffs[i];
    for (std::size_t i = 0; i < rhs.coeffs.size(); ++i)
        out.coeffs[i] -= rhs.coeffs[i];
    out.trim();
    return out;
}

RatPoly RatPoly::shifted_arg() const {
    // p(k+1) via the binomial expansion of each power.
    RatPoly out;
    out.coeffs.resize(coeffs.size());
    for (std::size_t i = 0; i < coeffs.size(); ++i)
        for (std::size_t j = 0; j <= i; ++j)
            out.coeffs[j] += coeffs[i] * Rat(binomial_coeff(Int(i), i - j));
    out.trim();
    return out;
}

void RatPoly::trim() {
    while (!coeffs.empty() && coeffs.back() == 0)
        coeffs.pop_back();
}

std::string RatPoly::str() const {
    if (coeffs.empty())
        return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = 0; i < coeffs.size(); ++i) {
        if (coeffs[i] == 0)
            continue;
        if (!first)
            os << " + ";
        os << coeffs[i];
        if (i >= 1)
            os << "*k";
        if (i > 1)
            os << '^' << i;
        first = false;
    }
    return os.str();
}

HilbertFunction hilbert_function(const HilbertSeries& hs, std::size_t up_to) {
    const std::vector<Int>& nred = hs.numerator_reduced;
    const std::size_t d = hs.dimension;
    const std::size_t nred_deg = nred.empty() ? 0 : nred.size() - 1;

    HilbertFunction hf;
    if (d == 0) {
        hf.tail_start = nred.size();
    } else {
        std::size_t safe = nred_deg >= d - 1 ? nred_deg - (d - 1) : 0;
        hf.tail_start = safe;
    }

    std::size_t limit = std::max(up_to, hf.tail_start + 1);
    for (std::size_t k = 0; k <= limit; ++k) {
        Int value = 0;
        for (std::size_t j = 0; j < nred.size() && j <= k; ++j) {
            if (d == 0) {
                if (j == k)
                    value += nred[j];
            } else {
                value += nred[j] * binomial_coeff(Int(k - j) + Int(d) - 1, d - 1);
            }
        }
        hf.values.push_back(std::move(value));
    }

    if (d >= 1) {
        Rat factorial = 1;
        for (std::size_t i = 1; i < d; ++i)
            factorial *= Rat(i);
        for (std::size_t j = 0; j < nred.size(); ++j) {
            // C(k - j + d - 1, d - 1) as a polynomial in k.
            RatPoly term;
            term.coeffs = {Rat(1) / factorial};
            for (std::size_t i = 1; i < d; ++i) {
                RatPoly linear;
                linear.coeffs = {Rat(Int(i) - Int(j)), Rat(1)};
                RatPoly product;
                product.coeffs.assign(term.coeffs.size() + 1, Rat(0));
                for (std::size_t a = 0; a < term.coeffs.size(); ++a) {
                    product.coeffs[a] += term.coeffs[a] * linear.coeffs[0];
                    product.coeffs[a + 1] += term.coeffs[a] * linear.coeffs[1];
                }
                term = std::move(product);
            }
            for (std::size_t a = 0; a < term.coeffs.size(); ++a) {
                if (hf.tail.coeffs.size() <= a)
                    hf.tail.coeffs.resize(a + 1);
                hf.tail.coeffs[a] += term.coeffs[a] * Rat(nred[j]);
            }
        }
        hf.tail.trim();
    }
    return hf;
}

Int HilbertFunction::value_at(std::size_t k) const {
    if (k < values.size())
        return values[k];
    check_invariant(k >= tail_start, "value requested below the polynomial tail");
    Rat v = tail.eval(Int(k));
    check_invariant(denominator(v) == 1, "polynomial tail value is not integral");
    return numerator(v);
}

Monotonicity is_nondecreasing(const HilbertFunction& hf) {
    for (std::size_t k = 0; k + 1 < hf.values.size(); ++k)
        if (hf.values[k] > hf.values[k + 1])
            return {false, Int(k)};

    RatPoly diff = hf.tail.shifted_arg() - hf.tail;
    if (diff.is_zero())
        return {true, std::nullopt};

    // Beyond the Cauchy bound the sign is the leading sign; scan every
    // integer up to it, so the verdict is exact for all k.
    const Rat lead = diff.coeffs.back();
    Rat bound = 1;
    for (std::size_t i = 0; i + 1 < diff.coeffs.size(); ++i) {
        Rat ratio = abs(diff.coeffs[i] / lead);
        if (1 + ratio > bound)
            bound = 1 + ratio;
    }
    Int scan_to = numerator(bound) / denominator(bound) + 2;
    for (Int k = Int(hf.tail_start); k <= scan_to; ++k)
        if (diff.eval(k) < 0)
            return {false, k};
    if (lead < 0)
        return {false, scan_to + 1};
    return {true, std::nullopt};
}

bool verify_product_identity(const HilbertSeries& base, const Int& ell,
                             const HilbertSeries& ext) {
    if (ext.nvars != base.nvars + 1)
        throw InputError("extension series must have exactly one more variable");
    std::size_t l = to_index(ell, "l");
    // (1 + t + ... + t^{l-1}) times the extra (1-t) factor is (1 - t^l).
    std::vector<Int> window(l + 1);
    window[0] = 1;
    window[l] -= 1;
    return poly_mul(base.numerator_full, window) == ext.numerator_full;
}

}  // namespace toric
