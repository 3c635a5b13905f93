#pragma once

#include <algorithm>
#include <string>
#include <string_view>
#include <vector>

namespace crossnest {

/// A partition of {1,...,n} into disjoint nonempty blocks.
///
/// Blocks are kept canonical: elements of each block increasing, blocks
/// ordered by their minimal elements. n == 0 is the empty partition.
/// Values are immutable after construction.
class SetPartition {
public:
    SetPartition() = default;

    /// Canonicalizes and validates. Throws std::invalid_argument if the
    /// blocks are not a partition of {1,...,n}.
    SetPartition(int n, std::vector<std::vector<int>> blocks);

    int n() const { return n_; }
    int block_count() const { return static_cast<int>(blocks_.size()); }
    const std::vector<std::vector<int>>& blocks() const { return blocks_; }

    /// Canonical text form, e.g. "1,2,5/3,4". The empty partition is "".
    std::string str() const;

    friend bool operator==(const SetPartition&, const SetPartition&) = default;
    friend auto operator<=>(const SetPartition&, const SetPartition&) = default;

private:
    int n_ = 0;
    std::vector<std::vector<int>> blocks_;
};

/// Parses the canonical block form: blocks separated by '/', elements
/// comma-separated, e.g. "1,2,5/3,4". "" is the empty partition.
/// Throws std::invalid_argument naming the offending token.
SetPartition parse_partition(std::string_view text);

/// An arc of the standard diagram: consecutive elements i < j of a block.
struct Arc {
    int i = 0;
    int j = 0;
    friend bool operator==(const Arc&, const Arc&) = default;
    friend auto operator<=>(const Arc&, const Arc&) = default;
};

enum class VertexRole { Opener, Closer, Singleton, Transient };

/// Arcs join consecutive elements of each block, so a partition of [n]
/// with k blocks has exactly n - k arcs.
std::vector<Arc> arcs(const SetPartition& p);

/// Unordered arc pairs with i1 < i2 < j1 < j2.
long long cr(const SetPartition& p);
/// Unordered arc pairs with i1 < i2 < j2 < j1.
long long ne(const SetPartition& p);
/// Unordered arc pairs forming neither a crossing nor a nesting.
long long al(const SetPartition& p);

/// Role of each vertex 1..n: minimum/maximum membership in its block.
std::vector<VertexRole> vertex_roles(const SetPartition& p);

namespace detail {

SetPartition partition_from_rgs(const std::vector<int>& rgs);

// Restricted-growth strings in lexicographic order; want_k == -1 means any
// block count, otherwise exactly want_k blocks (with pruning).
template <typename F>
void rgs_enumerate(int n, int want_k, F& visit) {
    if (n == 0) {
        if (want_k <= 0) visit(SetPartition{});
        return;
    }
    if (want_k == 0 || want_k > n) return;
    std::vector<int> rgs(n, 0);
    auto rec = [&](auto&& self, int pos, int mx) -> void {
        if (pos == n) {
            visit(partition_from_rgs(rgs));
            return;
        }
        for (int v = 0; v <= mx + 1; ++v) {
            const int new_mx = std::max(mx, v);
            if (want_k >= 0) {
                if (new_mx + 1 > want_k) break;
                if (new_mx + 1 + (n - pos - 1) < want_k) continue;
            }
            rgs[pos] = v;
            self(self, pos + 1, new_mx);
        }
    };
    rec(rec, 0, -1);
}

}  // namespace detail

/// Visits every partition of [n] exactly once, lexicographically by
/// restricted-growth string. Single-consumer stream.
template <typename F>
void for_each_partition(int n, F&& visit) {
    detail::rgs_enumerate(n, -1, visit);
}

/// As above, restricted to partitions with exactly k blocks.
template <typename F>
void for_each_partition_k(int n, int k, F&& visit) {
    detail::rgs_enumerate(n, k, visit);
}

std::vector<SetPartition> all_partitions(int n);
std::vector<SetPartition> all_partitions_k(int n, int k);

}  // namespace crossnest
