#pragma once

#include <optional>
#include <vector>

#include "crossnest/group_seq.hpp"
#include "crossnest/multiset.hpp"
#include "crossnest/partition.hpp"

namespace crossnest {

/// The k+1 children of lam in the partition tree. Child 0 prepends a new
/// singleton {1}; child i (1 <= i <= k) merges the new smallest vertex into
/// the shifted i-th block. The empty partition has the single child {{1}}.
std::vector<SetPartition> children(const SetPartition& lam);

/// Restriction to {2,...,n}, relabeled down to [n-1]. Requires n >= 1.
SetPartition parent(const SetPartition& p);

/// All descendants of lam at depth l (depth 0 is lam itself).
std::vector<SetPartition> level(const SetPartition& lam, int l);

/// Descendants at depth l having exactly m blocks; nonempty iff
/// k <= m <= k + l.
std::vector<SetPartition> level_m(const SetPartition& lam, int l, int m);

/// Multiset { cr(mu)*alpha + ne(mu)*beta : mu in T(lam, l, m) };
/// m == nullopt ranges over the whole level.
MultiSet<GroupVec> stat_distribution(const SetPartition& lam, int l,
                                     std::optional<int> m, GroupVec alpha,
                                     GroupVec beta);

}  // namespace crossnest
