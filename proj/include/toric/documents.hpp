#pragma once

#include "toric/ideal.hpp"
#include "toric/semigroup.hpp"

#include <nlohmann/json_fwd.hpp>

#include <iosfwd>
#include <string>
#include <vector>

namespace toric {

inline constexpr const char* kToolVersion = "toric 0.1.0";

/// Display names for ring variables: base variables x1..xn, x0 for the
/// homogenization variable (always the index right after the base block),
/// x{n+1}, x{n+2}, ... for extension variables.
struct VarNames {
    std::vector<std::string> names;

    static VarNames affine(std::size_t nvars);
    static VarNames projective(std::size_t base_nvars);            // x1..xn, x0
    static VarNames projective_extended(std::size_t base_nvars);   // x1..xn, x0, x{n+1}

    const std::string& operator[](std::size_t i) const { return names[i]; }
    std::size_t size() const { return names.size(); }

    std::string monomial(const ExponentVector& e) const;
    std::string binomial(const Binomial& b) const;
};

/// Line-oriented semigroup document:
///   dim <d>
///   gen <d integers>          (one line per generator)
///   label <text>              (optional)
/// Blank lines and '#' comments are ignored.
AffineSemigroup parse_semigroup_document(std::istream& in);
AffineSemigroup parse_semigroup_document(const std::string& text);
AffineSemigroup load_semigroup_file(const std::string& path);
std::string write_semigroup_document(const AffineSemigroup& s);

/// Line-oriented ideal document:
///   vars <n>
///   binom <n ints> - <n ints>
///   mono <n ints>
BinomialIdeal parse_ideal_document(std::istream& in);
BinomialIdeal parse_ideal_document(const std::string& text);
std::string write_ideal_document(const BinomialIdeal& ideal);

nlohmann::json semigroup_to_json(const AffineSemigroup& s);
nlohmann::json binomial_to_json(const Binomial& b);
nlohmann::json basis_to_json(const std::vector<Binomial>& elems, const VarNames& names);

ExponentVector parse_point(const std::string& text, std::size_t dim);

}  // namespace toric
