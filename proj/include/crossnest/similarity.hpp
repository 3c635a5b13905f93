#pragma once

#include <vector>

#include "crossnest/partition.hpp"

namespace crossnest {

/// C(n, k) over the integers; 0 outside 0 <= k <= n.
long long binom(int n, int k);

/// crseq = (u_1,...,u_k): crossings contributed per block minimum.
std::vector<int> crseq(const SetPartition& lam);

/// crset as a profile vector (d_0,...,d_l): d_j = multiplicity of j in
/// crseq, trimmed at the largest value present.
std::vector<int> crset_profile(const SetPartition& lam);

/// neseq = (v_1,...,v_k); always nondecreasing.
std::vector<int> neseq(const SetPartition& lam);

enum class SimStat { cr, ne };

/// Number of distinct similarity-class keys over the partitions of [n]
/// with k blocks: (crset, cr) for SimStat::cr, (neseq, ne) for SimStat::ne.
long long count_classes_brute(int n, int k, SimStat which);

/// Crossing-similarity class count,
///   sum_{l=0}^{m} C(k-1,l) * [(n-k-1) l - l(l-1)/2 + 1],  m = min(n-k, k-1).
long long count_cr_formula(int n, int k);

/// Closed form valid for n >= 2k-1:
///   (n-k-1)(k-1) 2^{k-2} + 2^{k-1} - (k-1)(k-2) 2^{k-4}.
long long count_cr_closed(int n, int k);

/// Nesting-similarity class count by the recurrence
///   f_{n,1} = 1,   f_{n,k} = sum_{r=k-1}^{n-1} f_{r,k-1} + (k-1) C(n-2, k).
long long count_ne_recurrence(int n, int k);

/// Total nesting-similarity classes over all of Pi_n:
///   F_1 = 1, F_2 = 2, F_n = 2^{n-5} (n^2 - 5n + 22) for n >= 3.
long long count_ne_total(int n);

/// sum of step heights over the 1-positions of eps, summed over all binary
/// eps of length n with k zeros and eps_1 = 0 (g), or all such eps with no
/// first-position restriction (gstar). Bookkeeping quantities behind the
/// nesting-class recurrence; 0 when no such sequence exists.
long long g_semitype_sum(int n, int k);
long long gstar_semitype_sum(int n, int k);

/// Builds a partition of [n] with k blocks, crset {0^{d_0},...,l^{d_l}} and
/// exactly c crossings, where composition = (d_0,...,d_l). Throws
/// std::invalid_argument when the parameters are infeasible, i.e. unless
/// composition is a composition of k into l+1 <= n-k+1 parts and
/// 0 <= c <= (n-k-1) l - l(l-1)/2.
SetPartition witness_cr(int n, int k, const std::vector<int>& composition, long long c);

/// Largest crossing count compatible with a (k into l+1 parts) crset in
/// Pi_{n,k}: (n-k-1) l - l(l-1)/2.
long long cr_upper_bound(int n, int k, int l);

namespace detail {

template <typename F>
void compositions_rec(int remaining, int parts_left, std::vector<int>& acc, F& visit) {
    if (parts_left == 1) {
        acc.push_back(remaining);
        visit(acc);
        acc.pop_back();
        return;
    }
    for (int first = 1; first + (parts_left - 1) <= remaining; ++first) {
        acc.push_back(first);
        compositions_rec(remaining - first, parts_left - 1, acc, visit);
        acc.pop_back();
    }
}

}  // namespace detail

/// Visits every composition of k into exactly `parts` positive parts.
template <typename F>
void for_each_composition(int k, int parts, F&& visit) {
    if (parts < 1 || parts > k) return;
    std::vector<int> acc;
    detail::compositions_rec(k, parts, acc, visit);
}

}  // namespace crossnest
