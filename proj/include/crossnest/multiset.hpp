#pragma once

#include <initializer_list>
#include <map>
#include <stdexcept>
#include <type_traits>
#include <utility>

namespace crossnest {

/// Finite multiset: each stored value carries a positive multiplicity.
/// Union adds multiplicities, difference subtracts and is never allowed
/// to go negative.
template <typename T>
class MultiSet {
public:
    using map_type = std::map<T, long long>;

    MultiSet() = default;
    MultiSet(std::initializer_list<T> values) {
        for (const T& v : values) add(v);
    }

    void add(const T& value, long long mult = 1) {
        if (mult <= 0) throw std::invalid_argument("MultiSet::add: multiplicity must be positive");
        counts_[value] += mult;
    }

    long long count(const T& value) const {
        auto it = counts_.find(value);
        return it == counts_.end() ? 0 : it->second;
    }

    long long total() const {
        long long t = 0;
        for (const auto& [v, m] : counts_) t += m;
        return t;
    }

    bool empty() const { return counts_.empty(); }

    MultiSet& operator+=(const MultiSet& other) {
        for (const auto& [v, m] : other.counts_) counts_[v] += m;
        return *this;
    }

    MultiSet& operator-=(const MultiSet& other) {
        for (const auto& [v, m] : other.counts_) {
            auto it = counts_.find(v);
            if (it == counts_.end() || it->second < m)
                throw std::domain_error("MultiSet: difference would drop a multiplicity below zero");
            it->second -= m;
            if (it->second == 0) counts_.erase(it);
        }
        return *this;
    }

    friend MultiSet operator+(MultiSet lhs, const MultiSet& rhs) {
        lhs += rhs;
        return lhs;
    }
    friend MultiSet operator-(MultiSet lhs, const MultiSet& rhs) {
        lhs -= rhs;
        return lhs;
    }

    friend bool operator==(const MultiSet&, const MultiSet&) = default;

    const map_type& items() const { return counts_; }

    /// Image multiset under f; multiplicities of equal images add up.
    template <typename F>
    auto map(F&& f) const {
        MultiSet<std::decay_t<decltype(f(std::declval<const T&>()))>> out;
        for (const auto& [v, m] : counts_) out.add(f(v), m);
        return out;
    }

private:
    map_type counts_;
};

}  // namespace crossnest
