#pragma once

#include <vector>

#include "crossnest/multiset.hpp"
#include "crossnest/partition.hpp"

namespace crossnest {

/// Element of the group Z (+) Z, written in the (alpha, beta) basis.
struct GroupVec {
    long long a = 0;
    long long b = 0;

    GroupVec& operator+=(GroupVec o) {
        a += o.a;
        b += o.b;
        return *this;
    }
    GroupVec& operator-=(GroupVec o) {
        a -= o.a;
        b -= o.b;
        return *this;
    }
    friend GroupVec operator+(GroupVec x, GroupVec y) { return x += y; }
    friend GroupVec operator-(GroupVec x, GroupVec y) { return x -= y; }
    friend GroupVec operator-(GroupVec x) { return {-x.a, -x.b}; }
    friend GroupVec operator*(long long c, GroupVec g) { return {c * g.a, c * g.b}; }
    friend GroupVec operator*(GroupVec g, long long c) { return c * g; }
    friend bool operator==(const GroupVec&, const GroupVec&) = default;
    friend auto operator<=>(const GroupVec&, const GroupVec&) = default;
};

inline constexpr GroupVec kAlpha{1, 0};
inline constexpr GroupVec kBeta{0, 1};

std::string to_string(GroupVec g);

/// Finite nonempty sequence over Z (+) Z.
using GSeq = std::vector<GroupVec>;

/// cr(p)*alpha + ne(p)*beta.
GroupVec stat(const SetPartition& p, GroupVec alpha, GroupVec beta);

struct UV {
    std::vector<int> u;  // u[i] = arcs (p,q) with p < b_{i+1} < q
    std::vector<int> v;  // v[i] = arcs (p,q) with q < b_{i+1}
};

/// Covering/left-arc counts at the block minima b_1 < ... < b_k.
/// Requires a nonempty partition.
UV uv_seq(const SetPartition& p);

/// seq(lam) = s(lam^1) s(lam^2) ... s(lam^k); element j equals
/// s(lam) + u_j*alpha + v_j*beta. Requires a nonempty partition.
GSeq seq_stat(const SetPartition& p, GroupVec alpha, GroupVec beta);

/// M(x1 x2 ... xl) = x1 x1 x2 ... xl.
GSeq op_M(const GSeq& s);

/// R_{alpha,beta,i}(x1...xl) =
///   x_i (x1..x_{i-1} + (x_i - x_1 + alpha)) (x_{i+1}..x_l + (x_i - x_1 + beta)).
/// i is 1-based; throws std::out_of_range outside [1, l].
GSeq op_R(const GSeq& s, GroupVec alpha, GroupVec beta, int i);

/// f_gamma^r(x1...xl) = { x_{a1}+...+x_{ar} - (r-1) x_1 + gamma :
///                        1 < a1 < ... < ar <= l }, one entry per r-subset.
MultiSet<GroupVec> f_gamma_r(const GSeq& s, GroupVec gamma, int r);

// Multiset extensions: multiplicities are carried through.
MultiSet<GSeq> op_M(const MultiSet<GSeq>& x);
MultiSet<GSeq> op_R_all(const MultiSet<GSeq>& x, GroupVec alpha, GroupVec beta);
MultiSet<GroupVec> f_gamma_r(const MultiSet<GSeq>& x, GroupVec gamma, int r);

/// Multiset { seq(mu) : mu in T(lam, l, m) }, by direct level enumeration.
MultiSet<GSeq> level_seq_direct(const SetPartition& lam, int l, int m,
                                GroupVec alpha, GroupVec beta);

/// Same multiset through the level recurrence
///   E(l, m) = R(E(l-1, m)) u M(E(l-1, m-1)),  E(0, k) = {seq(lam)}.
MultiSet<GSeq> level_seq_recurrence(const SetPartition& lam, int l, int m,
                                    GroupVec alpha, GroupVec beta);

/// Computes both routes and insists they agree (throws std::logic_error
/// otherwise), returning the common value.
MultiSet<GSeq> level_seq_multiset(const SetPartition& lam, int l, int m,
                                  GroupVec alpha, GroupVec beta);

}  // namespace crossnest
