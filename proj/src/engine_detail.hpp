#pragma once

#include "toric/binomial.hpp"

#include <functional>
#include <optional>
#include <vector>

namespace toric::detail {

struct SPair {
    std::size_t i, j;
    ExponentVector lcm;
    Int lcm_degree;
};

using ReduceFn =
    std::function<std::optional<Binomial>(const Binomial&, std::span<const Binomial>)>;

/// Gebauer-Moeller pair update; shared by the global and local basis loops.
void update_pairs(std::vector<Binomial>& basis, std::vector<SPair>& pairs, const Binomial& f);

/// Buchberger/Mora driver: normal selection by lcm degree with index
/// tie-break. The reduce callback decides full NF vs Mora weak NF.
std::vector<Binomial> basis_loop(const std::vector<Binomial>& input, const TermOrder& ord,
                                 const ReduceFn& reduce);

/// Keeps only elements whose lead no other kept lead divides.
std::vector<Binomial> minimalize_by_lead(std::vector<Binomial> elems, const TermOrder& ord);

std::vector<Binomial> sort_by_lead(std::vector<Binomial> elems, const TermOrder& ord);

}  // namespace toric::detail
