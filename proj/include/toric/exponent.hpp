#pragma once

#include "toric/common.hpp"

#include <initializer_list>
#include <iosfwd>
#include <vector>

namespace toric {

/// Exponent vector of a monomial (all entries >= 0), fixed length per ring.
/// Doubles as a lattice point of N^d when describing semigroup generators.
class ExponentVector {
  public:
    ExponentVector() = default;
    explicit ExponentVector(std::size_t n) : entries_(n) {}
    explicit ExponentVector(std::vector<Int> entries) : entries_(std::move(entries)) {}
    ExponentVector(std::initializer_list<long long> entries);

    std::size_t size() const { return entries_.size(); }
    const Int& operator[](std::size_t i) const { return entries_[i]; }
    Int& operator[](std::size_t i) { return entries_[i]; }
    const std::vector<Int>& entries() const { return entries_; }

    Int total_degree() const;
    bool is_zero() const;
    bool divides(const ExponentVector& other) const;

    ExponentVector operator+(const ExponentVector& rhs) const;
    /// Componentwise difference; requires rhs.divides(*this).
    ExponentVector operator-(const ExponentVector& rhs) const;

    static ExponentVector lcm(const ExponentVector& a, const ExponentVector& b);
    static ExponentVector unit(std::size_t n, std::size_t var, const Int& power = 1);

    /// Same entries followed by `extra` zeros.
    ExponentVector extended(std::size_t extra) const;
    /// Entries re-indexed by perm: result[i] = (*this)[perm[i]].
    ExponentVector permuted(const std::vector<std::size_t>& perm) const;
    /// The sub-vector entries [from, to).
    ExponentVector slice(std::size_t from, std::size_t to) const;

    bool operator==(const ExponentVector& rhs) const { return entries_ == rhs.entries_; }
    bool operator!=(const ExponentVector& rhs) const { return entries_ != rhs.entries_; }
    /// Order-agnostic lexicographic compare, for use as a map key.
    bool operator<(const ExponentVector& rhs) const { return entries_ < rhs.entries_; }

    std::string str() const;

  private:
    std::vector<Int> entries_;
};

std::ostream& operator<<(std::ostream& os, const ExponentVector& ev);

}  // namespace toric
