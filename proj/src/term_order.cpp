#include "toric/term_order.hpp"

#include <numeric>
#include <sstream>

namespace toric {

namespace {

std::vector<std::size_t> identity_priority(std::size_t n) {
    std::vector<std::size_t> p(n);
    std::iota(p.begin(), p.end(), std::size_t{0});
    return p;
}

void validate_priority(const std::vector<std::size_t>& p) {
    std::vector<bool> seen(p.size(), false);
    for (std::size_t v : p) {
        check_invariant(v < p.size() && !seen[v], "priority is not a permutation");
        seen[v] = true;
    }
}

}  // namespace

TermOrder::TermOrder(OrderKind kind, std::vector<std::size_t> priority, std::size_t block)
    : kind_(kind), priority_(std::move(priority)), block_(block) {
    validate_priority(priority_);
    if (kind_ == OrderKind::BlockElim)
        check_invariant(block_ >= 1 && block_ < priority_.size(), "bad elimination block");
}

TermOrder TermOrder::lex(std::size_t n) { return TermOrder(OrderKind::Lex, identity_priority(n), 0); }

TermOrder TermOrder::degrevlex(std::size_t n) {
    return TermOrder(OrderKind::DegRevLex, identity_priority(n), 0);
}

TermOrder TermOrder::degrevlex(std::size_t n, std::vector<std::size_t> priority) {
    check_invariant(priority.size() == n, "priority size mismatch");
    return TermOrder(OrderKind::DegRevLex, std::move(priority), 0);
}

TermOrder TermOrder::neg_degrevlex(std::size_t n) {
    return TermOrder(OrderKind::NegDegRevLex, identity_priority(n), 0);
}

TermOrder TermOrder::neg_degrevlex(std::size_t n, std::vector<std::size_t> priority) {
    check_invariant(priority.size() == n, "priority size mismatch");
    return TermOrder(OrderKind::NegDegRevLex, std::move(priority), 0);
}

TermOrder TermOrder::block_elim(std::size_t n, std::size_t block) {
    return TermOrder(OrderKind::BlockElim, identity_priority(n), block);
}

int TermOrder::degrevlex_on_range(const ExponentVector& a, const ExponentVector& b,
                                  std::size_t from, std::size_t to) const {
    Int da = 0, db = 0;
    for (std::size_t r = from; r < to; ++r) {
        da += a[priority_[r]];
        db += b[priority_[r]];
    }
    if (da != db)
        return da > db ? 1 : -1;
    // Revlex tie-break: the smallest variable with differing exponent
    // decides, smaller exponent winning.
    for (std::size_t r = to; r-- > from;) {
        const Int& ea = a[priority_[r]];
        const Int& eb = b[priority_[r]];
        if (ea != eb)
            return ea < eb ? 1 : -1;
    }
    return 0;
}

int TermOrder::compare(const ExponentVector& a, const ExponentVector& b) const {
    if (a.size() != nvars() || b.size() != nvars())
        throw InputError("term order arity mismatch");
    switch (kind_) {
    case OrderKind::Lex:
        for (std::size_t r = 0; r < nvars(); ++r) {
            const Int& ea = a[priority_[r]];
            const Int& eb = b[priority_[r]];
            if (ea != eb)
                return ea > eb ? 1 : -1;
        }
        return 0;
    case OrderKind::DegRevLex:
        return degrevlex_on_range(a, b, 0, nvars());
    case OrderKind::BlockElim: {
        int first = degrevlex_on_range(a, b, 0, block_);
        if (first != 0)
            return first;
        return degrevlex_on_range(a, b, block_, nvars());
    }
    case OrderKind::NegDegRevLex: {
        Int da = a.total_degree(), db = b.total_degree();
        if (da != db)
            return da < db ? 1 : -1;
        return degrevlex_on_range(a, b, 0, nvars());
    }
    }
    throw InvariantError("unknown order kind");
}

TermOrder TermOrder::extended_with_biggest() const {
    check_invariant(kind_ != OrderKind::BlockElim, "block boundary would shift");
    std::vector<std::size_t> p;
    p.reserve(nvars() + 1);
    p.push_back(nvars());
    p.insert(p.end(), priority_.begin(), priority_.end());
    return TermOrder(kind_, std::move(p), block_);
}

TermOrder TermOrder::extended_with_smallest() const {
    std::vector<std::size_t> p = priority_;
    p.push_back(nvars());
    return TermOrder(kind_, std::move(p), block_);
}

std::string TermOrder::str() const {
    std::ostringstream os;
    switch (kind_) {
    case OrderKind::Lex: os << "lex"; break;
    case OrderKind::DegRevLex: os << "degrevlex"; break;
    case OrderKind::BlockElim: os << "blockelim" << block_; break;
    case OrderKind::NegDegRevLex: os << "negdegrevlex"; break;
    }
    os << '[';
    for (std::size_t r = 0; r < priority_.size(); ++r) {
        if (r)
            os << '>';
        os << priority_[r];
    }
    os << ']';
    return os.str();
}

}  // namespace toric
