#include "toric/exponent.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>

namespace toric {

ExponentVector::ExponentVector(std::initializer_list<long long> entries) {
    entries_.reserve(entries.size());
    for (long long e : entries)
        entries_.emplace_back(e);
}

Int ExponentVector::total_degree() const {
    Int sum = 0;
    for (const Int& e : entries_)
        sum += e;
    return sum;
}

bool ExponentVector::is_zero() const {
    return std::all_of(entries_.begin(), entries_.end(), [](const Int& e) { return e == 0; });
}

bool ExponentVector::divides(const ExponentVector& other) const {
    check_invariant(size() == other.size(), "exponent length mismatch in divides");
    for (std::size_t i = 0; i < size(); ++i)
        if (entries_[i] > other.entries_[i])
            return false;
    return true;
}

ExponentVector ExponentVector::operator+(const ExponentVector& rhs) const {
    check_invariant(size() == rhs.size(), "exponent length mismatch in +");
    ExponentVector out(size());
    for (std::size_t i = 0; i < size(); ++i)
        out.entries_[i] = entries_[i] + rhs.entries_[i];
    return out;
}

ExponentVector ExponentVector::operator-(const ExponentVector& rhs) const {
    check_invariant(size() == rhs.size(), "exponent length mismatch in -");
    ExponentVector out(size());
    for (std::size_t i = 0; i < size(); ++i) {
        check_invariant(entries_[i] >= rhs.entries_[i], "negative exponent in -");
        out.entries_[i] = entries_[i] - rhs.entries_[i];
    }
    return out;
}

ExponentVector ExponentVector::lcm(const ExponentVector& a, const ExponentVector& b) {
    check_invariant(a.size() == b.size(), "exponent length mismatch in lcm");
    ExponentVector out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i)
        out.entries_[i] = std::max(a.entries_[i], b.entries_[i]);
    return out;
}

ExponentVector ExponentVector::unit(std::size_t n, std::size_t var, const Int& power) {
    check_invariant(var < n, "unit variable out of range");
    ExponentVector out(n);
    out.entries_[var] = power;
    return out;
}

ExponentVector ExponentVector::extended(std::size_t extra) const {
    ExponentVector out(size() + extra);
    for (std::size_t i = 0; i < size(); ++i)
        out.entries_[i] = entries_[i];
    return out;
}

ExponentVector ExponentVector::permuted(const std::vector<std::size_t>& perm) const {
    check_invariant(perm.size() == size(), "permutation length mismatch");
    ExponentVector out(size());
    for (std::size_t i = 0; i < size(); ++i)
        out.entries_[i] = entries_[perm[i]];
    return out;
}

ExponentVector ExponentVector::slice(std::size_t from, std::size_t to) const {
    check_invariant(from <= to && to <= size(), "bad slice bounds");
    ExponentVector out(to - from);
    for (std::size_t i = from; i < to; ++i)
        out.entries_[i - from] = entries_[i];
    return out;
}

std::string ExponentVector::str() const {
    std::ostringstream os;
    os << *this;
    return os.str();
}

std::ostream& operator<<(std::ostream& os, const ExponentVector& ev) {
    os << '(';
    for (std::size_t i = 0; i < ev.size(); ++i) {
        if (i)
            os << ',';
        os << ev[i];
    }
    return os << ')';
}

}  // namespace toric
