#pragma once

#include "toric/exponent.hpp"

#include <vector>

namespace toric {

enum class OrderKind {
    Lex,
    DegRevLex,
    BlockElim,      // degrevlex on the first block, then degrevlex on the rest
    NegDegRevLex,   // local: lower total degree wins, revlex tie-break
};

/// Strict total order on monomials of a fixed ring. The priority permutation
/// lists variable indices from biggest to smallest; global kinds are
/// well-orders (1 smallest), NegDegRevLex is local (1 biggest).
class TermOrder {
  public:
    static TermOrder lex(std::size_t nvars);
    static TermOrder degrevlex(std::size_t nvars);
    static TermOrder degrevlex(std::size_t nvars, std::vector<std::size_t> priority);
    static TermOrder neg_degrevlex(std::size_t nvars);
    static TermOrder neg_degrevlex(std::size_t nvars, std::vector<std::size_t> priority);
    /// Eliminates the variables listed first in `priority` (the first
    /// `block` many): any monomial involving them beats any monomial without.
    static TermOrder block_elim(std::size_t nvars, std::size_t block);

    OrderKind kind() const { return kind_; }
    std::size_t nvars() const { return priority_.size(); }
    const std::vector<std::size_t>& priority() const { return priority_; }
    std::size_t block() const { return block_; }

    bool is_global() const { return kind_ != OrderKind::NegDegRevLex; }
    bool is_local() const { return kind_ == OrderKind::NegDegRevLex; }
    bool is_degree_refining() const {
        return kind_ == OrderKind::DegRevLex || kind_ == OrderKind::NegDegRevLex;
    }

    /// -1, 0, +1 for a < b, a = b, a > b. Length mismatch is an error.
    int compare(const ExponentVector& a, const ExponentVector& b) const;
    bool greater(const ExponentVector& a, const ExponentVector& b) const {
        return compare(a, b) > 0;
    }

    /// Same kind over one more variable, the new variable biggest.
    TermOrder extended_with_biggest() const;
    /// Same kind over one more variable, the new variable smallest.
    TermOrder extended_with_smallest() const;

    bool operator==(const TermOrder& rhs) const {
        return kind_ == rhs.kind_ && priority_ == rhs.priority_ && block_ == rhs.block_;
    }

    std::string str() const;

  private:
    TermOrder(OrderKind kind, std::vector<std::size_t> priority, std::size_t block);

    // Compares a and b restricted to priority ranks [from, to) by
    // degree-then-revlex.
    int degrevlex_on_range(const ExponentVector& a, const ExponentVector& b,
                           std::size_t from, std::size_t to) const;

    OrderKind kind_;
    std::vector<std::size_t> priority_;  // priority_[0] = biggest variable
    std::size_t block_ = 0;
};

}  // namespace toric
