#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "crossnest/partition.hpp"

namespace crossnest {

/// Exact polynomial over the integers in two variables q, p; sparse map
/// from (deg_q, deg_p) to coefficient, zero coefficients never stored.
class BivarPoly {
public:
    using Key = std::pair<int, int>;  // (deg_q, deg_p)

    BivarPoly() = default;

    static BivarPoly constant(long long c);
    static BivarPoly monomial(int deg_q, int deg_p, long long c = 1);

    bool is_zero() const { return terms_.empty(); }
    long long coeff(int deg_q, int deg_p) const;
    const std::map<Key, long long>& terms() const { return terms_; }

    BivarPoly& operator+=(const BivarPoly& o);
    BivarPoly& operator-=(const BivarPoly& o);
    BivarPoly& operator*=(long long c);
    friend BivarPoly operator+(BivarPoly x, const BivarPoly& y) { return x += y; }
    friend BivarPoly operator-(BivarPoly x, const BivarPoly& y) { return x -= y; }
    friend BivarPoly operator*(const BivarPoly& x, const BivarPoly& y);
    friend BivarPoly operator*(BivarPoly x, long long c) { return x *= c; }
    friend BivarPoly operator*(long long c, BivarPoly x) { return x *= c; }
    friend BivarPoly operator-(const BivarPoly& x) { return x * -1; }
    friend bool operator==(const BivarPoly&, const BivarPoly&) = default;

    long long eval(long long q, long long p) const;
    BivarPoly swapped_qp() const;
    /// Substitutes p := q; the result lives on the q-axis.
    BivarPoly subst_p_to_q() const;
    int max_total_degree() const;

    std::string str() const;

private:
    void add_term(int deg_q, int deg_p, long long c);
    std::map<Key, long long> terms_;
};

/// [r]_{q,p} = q^{r-1} + q^{r-2} p + ... + p^{r-1}; [0] = 0, [1] = 1.
BivarPoly qp_int(int r);

/// Power series in z truncated at a fixed order, with BivarPoly
/// coefficients. All arithmetic stays at the common truncation order.
class ZSeries {
public:
    explicit ZSeries(int order);

    static ZSeries constant(const BivarPoly& c, int order);
    static ZSeries one(int order);

    int order() const { return order_; }
    const BivarPoly& coeff(int l) const;
    void set_coeff(int l, BivarPoly c);

    ZSeries& operator+=(const ZSeries& o);
    ZSeries& operator-=(const ZSeries& o);
    friend ZSeries operator+(ZSeries x, const ZSeries& y) { return x += y; }
    friend ZSeries operator-(ZSeries x, const ZSeries& y) { return x -= y; }
    friend ZSeries operator*(const ZSeries& x, const ZSeries& y);
    friend bool operator==(const ZSeries&, const ZSeries&) = default;

    ZSeries mul_poly(const BivarPoly& c) const;
    /// Multiplies by z^s, dropping what falls past the truncation order.
    ZSeries shift_z(int s) const;

    /// Multiplicative inverse; the constant term must be the constant
    /// polynomial +1 or -1. Throws std::domain_error otherwise.
    ZSeries reciprocal() const;

    ZSeries swapped_qp() const;
    std::vector<long long> eval(long long q, long long p) const;

private:
    int order_ = 0;
    std::vector<BivarPoly> coeffs_;
};

/// b_{0,r} of a nonempty partition: sum over 1 < i_1 < ... < i_r <= k of
/// q^{u_{i_1}+...+u_{i_r} - (r-1) u_1} p^{v_{i_1}+...+v_{i_r} - (r-1) v_1};
/// b_{0,0} = q^{u_1} p^{v_1}, and 0 when r >= k.
BivarPoly b0r(const SetPartition& pi, int r);

/// Rows l = 0..L of the b-table; row l has entries r = 0..k+L+1 and follows
///   b_{l,r} = b_{l-1,r-1} + (1 + [r+1]) b_{l-1,r} + [r+1] b_{l-1,r+1}.
std::vector<std::vector<BivarPoly>> blr_table(const SetPartition& pi, int L);

/// Weighted-path coefficients tying b_{l,0} to the initial row:
/// b_{l,0} = sum_s c_{l,s} b_{0,s}. Derived from the b-table recurrence by
/// propagating a unit vector, so the identity holds by construction.
BivarPoly c_path_weight(int l, int s);
std::vector<BivarPoly> c_path_row(int l);

/// S_pi(q,p,z) to order L: sum_s b_{0,s} K_s(z) with [z^l] K_s = c_{l,s}.
ZSeries s_pi_theorem(const SetPartition& pi, int L);
/// S_pi(q,p,z) to order L by enumerating the levels below pi.
ZSeries s_pi_brute(const SetPartition& pi, int L);

/// Bottom-up truncated J-fraction
///   1 / (1 - c_0 z - a_0 z^2 / (1 - c_1 z - a_1 z^2 / ...))
/// with tail == 1 below min(a.size(), c.size()) levels.
ZSeries cf_truncate(const std::vector<BivarPoly>& a,
                    const std::vector<BivarPoly>& c, int L);

/// Generating function of q^cr p^ne over all partitions (coefficient of
/// z^n ranges over Pi_n), as the fraction
///   1 / (1 - z - z^2 / (1 - ([1]+1) z - [2] z^2 / ...)).
ZSeries fraction_allpartitions_v1(int L);

/// The same series as 1 + z * S_{{1}}(q,p,z) with S_{{1}} the J-fraction of
/// weights a_r = [r+1], c_r = [r+1] + 1.
ZSeries fraction_allpartitions_v2(int L);

/// Both sides of the contraction identity
///   c0 / (1 - c1 z / (1 - c2 z / ...))
///   = c0 + c0 c1 z / (1 - (c1+c2) z - c2 c3 z^2 / (1 - (c3+c4) z - ...)),
/// truncated at order L. Weights past the end of c_weights are zero.
std::pair<ZSeries, ZSeries> cf_contract(const std::vector<BivarPoly>& c_weights, int L);

/// Plain S-fraction evaluation c0 / (1 - c1 z / (1 - c2 z / ...)).
ZSeries s_fraction(const std::vector<BivarPoly>& c_weights, int L);

}  // namespace crossnest
