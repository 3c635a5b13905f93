#include "crossnest/genfun.hpp"

#include <sstream>
#include <stdexcept>

#include "crossnest/group_seq.hpp"
#include "crossnest/tree.hpp"

namespace crossnest {

BivarPoly BivarPoly::constant(long long c) { return monomial(0, 0, c); }

BivarPoly BivarPoly::monomial(int deg_q, int deg_p, long long c) {
    BivarPoly out;
    out.add_term(deg_q, deg_p, c);
    return out;
}

long long BivarPoly::coeff(int deg_q, int deg_p) const {
    auto it = terms_.find({deg_q, deg_p});
    return it == terms_.end() ? 0 : it->second;
}

void BivarPoly::add_term(int deg_q, int deg_p, long long c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace({deg_q, deg_p}, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

BivarPoly& BivarPoly::operator+=(const BivarPoly& o) {
    for (const auto& [key, c] : o.terms_) add_term(key.first, key.second, c);
    return *this;
}

BivarPoly& BivarPoly::operator-=(const BivarPoly& o) {
    for (const auto& [key, c] : o.terms_) add_term(key.first, key.second, -c);
    return *this;
}

BivarPoly& BivarPoly::operator*=(long long c) {
    if (c == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [key, coeff] : terms_) coeff *= c;
    return *this;
}

BivarPoly operator*(const BivarPoly& x, const BivarPoly& y) {
    BivarPoly out;
    for (const auto& [kx, cx] : x.terms_)
        for (const auto& [ky, cy] : y.terms_)
            out.add_term(kx.first + ky.first, kx.second + ky.second, cx * cy);
    return out;
}

long long BivarPoly::eval(long long q, long long p) const {
    long long total = 0;
    for (const auto& [key, c] : terms_) {
        long long term = c;
        for (int i = 0; i < key.first; ++i) term *= q;
        for (int i = 0; i < key.second; ++i) term *= p;
        total += term;
    }
    return total;
}

BivarPoly BivarPoly::swapped_qp() const {
    BivarPoly out;
    for (const auto& [key, c] : terms_) out.add_term(key.second, key.first, c);
    return out;
}

BivarPoly BivarPoly::subst_p_to_q() const {
    BivarPoly out;
    for (const auto& [key, c] : terms_) out.add_term(key.first + key.second, 0, c);
    return out;
}

int BivarPoly::max_total_degree() const {
    int best = 0;
    for (const auto& [key, c] : terms_) best = std::max(best, key.first + key.second);
    return best;
}

std::string BivarPoly::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& [key, c] : terms_) {
        if (!first) out << (c >= 0 ? " + " : " - ");
        else if (c < 0) out << "-";
        first = false;
        const long long mag = c < 0 ? -c : c;
        const bool bare = key.first == 0 && key.second == 0;
        if (mag != 1 || bare) out << mag;
        if (key.first > 0) {
            out << "q";
            if (key.first > 1) out << "^" << key.first;
        }
        if (key.second > 0) {
            out << "p";
            if (key.second > 1) out << "^" << key.second;
        }
    }
    return out.str();
}

BivarPoly qp_int(int r) {
    if (r < 0) throw std::invalid_argument("qp_int: negative r");
    BivarPoly out;
    for (int t = 0; t < r; ++t) out += BivarPoly::monomial(r - 1 - t, t);
    return out;
}

ZSeries::ZSeries(int order) : order_(order) {
    if (order < 0) throw std::invalid_argument("ZSeries: negative order");
    coeffs_.resize(static_cast<size_t>(order) + 1);
}

ZSeries ZSeries::constant(const BivarPoly& c, int order) {
    ZSeries out(order);
    out.coeffs_[0] = c;
    return out;
}

ZSeries ZSeries::one(int order) { return constant(BivarPoly::constant(1), order); }

const BivarPoly& ZSeries::coeff(int l) const {
    if (l < 0 || l > order_) throw std::out_of_range("ZSeries::coeff");
    return coeffs_[static_cast<size_t>(l)];
}

void ZSeries::set_coeff(int l, BivarPoly c) {
    if (l < 0 || l > order_) throw std::out_of_range("ZSeries::set_coeff");
    coeffs_[static_cast<size_t>(l)] = std::move(c);
}

namespace {
void require_same_order(const ZSeries& x, const ZSeries& y, const char* who) {
    if (x.order() != y.order())
        throw std::logic_error(std::string(who) + ": mixed truncation orders");
}
}  // namespace

ZSeries& ZSeries::operator+=(const ZSeries& o) {
    require_same_order(*this, o, "ZSeries::operator+=");
    for (int l = 0; l <= order_; ++l) coeffs_[static_cast<size_t>(l)] += o.coeffs_[static_cast<size_t>(l)];
    return *this;
}

ZSeries& ZSeries::operator-=(const ZSeries& o) {
    require_same_order(*this, o, "ZSeries::operator-=");
    for (int l = 0; l <= order_; ++l) coeffs_[static_cast<size_t>(l)] -= o.coeffs_[static_cast<size_t>(l)];
    return *this;
}

ZSeries operator*(const ZSeries& x, const ZSeries& y) {
    require_same_order(x, y, "ZSeries::operator*");
    ZSeries out(x.order());
    for (int i = 0; i <= x.order(); ++i) {
        if (x.coeffs_[static_cast<size_t>(i)].is_zero()) continue;
        for (int j = 0; i + j <= x.order(); ++j)
            out.coeffs_[static_cast<size_t>(i + j)] +=
                x.coeffs_[static_cast<size_t>(i)] * y.coeffs_[static_cast<size_t>(j)];
    }
    return out;
}

ZSeries ZSeries::mul_poly(const BivarPoly& c) const {
    ZSeries out(order_);
    for (int l = 0; l <= order_; ++l) out.coeffs_[static_cast<size_t>(l)] = coeffs_[static_cast<size_t>(l)] * c;
    return out;
}

ZSeries ZSeries::shift_z(int s) const {
    if (s < 0) throw std::invalid_argument("ZSeries::shift_z: negative shift");
    ZSeries out(order_);
    for (int l = s; l <= order_; ++l) out.coeffs_[static_cast<size_t>(l)] = coeffs_[static_cast<size_t>(l - s)];
    return out;
}

ZSeries ZSeries::reciprocal() const {
    const BivarPoly& c0 = coeffs_[0];
    const long long unit = c0.coeff(0, 0);
    if ((unit != 1 && unit != -1) || c0 != BivarPoly::constant(unit))
        throw std::domain_error("ZSeries::reciprocal: constant term must be +1 or -1");
    ZSeries out(order_);
    out.coeffs_[0] = BivarPoly::constant(unit);
    for (int l = 1; l <= order_; ++l) {
        BivarPoly acc;
        for (int i = 1; i <= l; ++i)
            acc += coeffs_[static_cast<size_t>(i)] * out.coeffs_[static_cast<size_t>(l - i)];
        out.coeffs_[static_cast<size_t>(l)] = acc * -unit;
    }
    return out;
}

ZSeries ZSeries::swapped_qp() const {
    ZSeries out(order_);
    for (int l = 0; l <= order_; ++l) out.coeffs_[static_cast<size_t>(l)] = coeffs_[static_cast<size_t>(l)].swapped_qp();
    return out;
}

std::vector<long long> ZSeries::eval(long long q, long long p) const {
    std::vector<long long> out(static_cast<size_t>(order_) + 1);
    for (int l = 0; l <= order_; ++l) out[static_cast<size_t>(l)] = coeffs_[static_cast<size_t>(l)].eval(q, p);
    return out;
}

BivarPoly b0r(const SetPartition& pi, int r) {
    if (pi.block_count() < 1) throw std::invalid_argument("b0r: empty partition");
    if (r < 0) throw std::invalid_argument("b0r: negative r");
    const int k = pi.block_count();
    if (r >= k) return {};
    // Exponents come from the coordinates of the child-statistic sequence
    // x_j = (cr + u_j, ne + v_j), so column 0 carries q^cr p^ne of the root.
    const GSeq seq = seq_stat(pi, kAlpha, kBeta);
    if (r == 0)
        return BivarPoly::monomial(static_cast<int>(seq[0].a), static_cast<int>(seq[0].b));

    BivarPoly out;
    std::vector<int> pick;
    auto rec = [&](auto&& self, int from, long long qsum, long long psum) -> void {
        if (static_cast<int>(pick.size()) == r) {
            out += BivarPoly::monomial(static_cast<int>(qsum - (r - 1) * seq[0].a),
                                       static_cast<int>(psum - (r - 1) * seq[0].b));
            return;
        }
        const int still_needed = r - static_cast<int>(pick.size());
        for (int idx = from; idx + still_needed - 1 <= k; ++idx) {
            pick.push_back(idx);
            self(self, idx + 1, qsum + seq[static_cast<size_t>(idx - 1)].a,
                 psum + seq[static_cast<size_t>(idx - 1)].b);
            pick.pop_back();
        }
    };
    rec(rec, 2, 0, 0);
    return out;
}

std::vector<std::vector<BivarPoly>> blr_table(const SetPartition& pi, int L) {
    if (L < 0) throw std::invalid_argument("blr_table: negative order");
    const int k = pi.block_count();
    const int width = k + L + 2;  // entries r = 0..width-1; zero from r = k+l on
    std::vector<std::vector<BivarPoly>> table(static_cast<size_t>(L) + 1);
    auto& row0 = table[0];
    row0.resize(static_cast<size_t>(width));
    for (int r = 0; r < k; ++r) row0[static_cast<size_t>(r)] = b0r(pi, r);
    for (int l = 1; l <= L; ++l) {
        const auto& prev = table[static_cast<size_t>(l - 1)];
        auto& row = table[static_cast<size_t>(l)];
        row.resize(static_cast<size_t>(width));
        for (int r = 0; r < width; ++r) {
            const BivarPoly bracket = qp_int(r + 1);
            BivarPoly acc;
            if (r >= 1) acc += prev[static_cast<size_t>(r - 1)];
            acc += prev[static_cast<size_t>(r)];
            acc += bracket * prev[static_cast<size_t>(r)];
            if (r + 1 < width) acc += bracket * prev[static_cast<size_t>(r + 1)];
            row[static_cast<size_t>(r)] = std::move(acc);
        }
    }
    return table;
}

std::vector<BivarPoly> c_path_row(int l) {
    if (l < 0) throw std::invalid_argument("c_path_row: negative l");
    // Transposed transfer recurrence of the b-table, seeded at r = 0:
    //   w_j(s) = w_{j-1}(s+1) + (1 + [s+1]) w_{j-1}(s) + [s] w_{j-1}(s-1).
    std::vector<BivarPoly> w(static_cast<size_t>(l) + 2);
    w[0] = BivarPoly::constant(1);
    for (int j = 1; j <= l; ++j) {
        std::vector<BivarPoly> next(w.size());
        for (int s = 0; s <= l; ++s) {
            BivarPoly acc = w[static_cast<size_t>(s + 1)];
            acc += w[static_cast<size_t>(s)];
            acc += qp_int(s + 1) * w[static_cast<size_t>(s)];
            if (s >= 1) acc += qp_int(s) * w[static_cast<size_t>(s - 1)];
            next[static_cast<size_t>(s)] = std::move(acc);
        }
        w = std::move(next);
    }
    w.resize(static_cast<size_t>(l) + 1);
    return w;
}

BivarPoly c_path_weight(int l, int s) {
    if (s < 0) throw std::invalid_argument("c_path_weight: negative s");
    if (s > l) return {};
    return c_path_row(l)[static_cast<size_t>(s)];
}

ZSeries s_pi_theorem(const SetPartition& pi, int L) {
    if (pi.block_count() < 1) throw std::invalid_argument("s_pi_theorem: empty partition");
    const int k = pi.block_count();
    std::vector<BivarPoly> b0(static_cast<size_t>(k));
    for (int s = 0; s < k; ++s) b0[static_cast<size_t>(s)] = b0r(pi, s);
    ZSeries out(L);
    for (int l = 0; l <= L; ++l) {
        const auto c_row = c_path_row(l);
        BivarPoly acc;
        for (int s = 0; s <= std::min(l, k - 1); ++s) acc += c_row[static_cast<size_t>(s)] * b0[static_cast<size_t>(s)];
        out.set_coeff(l, std::move(acc));
    }
    return out;
}

ZSeries s_pi_brute(const SetPartition& pi, int L) {
    if (pi.block_count() < 1) throw std::invalid_argument("s_pi_brute: empty partition");
    ZSeries out(L);
    std::vector<SetPartition> frontier{pi};
    for (int l = 0; l <= L; ++l) {
        BivarPoly acc;
        for (const SetPartition& mu : frontier)
            acc += BivarPoly::monomial(static_cast<int>(cr(mu)), static_cast<int>(ne(mu)));
        out.set_coeff(l, std::move(acc));
        if (l == L) break;
        std::vector<SetPartition> next;
        next.reserve(frontier.size() * 2);
        for (const SetPartition& p : frontier)
            for (SetPartition& child : children(p)) next.push_back(std::move(child));
        frontier = std::move(next);
    }
    return out;
}

ZSeries cf_truncate(const std::vector<BivarPoly>& a,
                    const std::vector<BivarPoly>& c, int L) {
    const size_t depth = std::min(a.size(), c.size());
    ZSeries f = ZSeries::one(L);
    for (size_t h = depth; h-- > 0;) {
        ZSeries denom = ZSeries::one(L);
        denom -= ZSeries::constant(c[h], L).shift_z(1);
        denom -= f.mul_poly(a[h]).shift_z(2);
        f = denom.reciprocal();
    }
    return f;
}

ZSeries fraction_allpartitions_v1(int L) {
    // 1 / (1 - z - z^2 / (1 - ([1]+1) z - [2] z^2 / ...)):
    // level h >= 1 carries c_h = [h] + 1 and a_h = [h+1].
    std::vector<BivarPoly> a, c;
    for (int h = 0; h <= L; ++h) {
        a.push_back(qp_int(h + 1));
        c.push_back(h == 0 ? BivarPoly::constant(1)
                           : qp_int(h) + BivarPoly::constant(1));
    }
    return cf_truncate(a, c, L);
}

ZSeries fraction_allpartitions_v2(int L) {
    std::vector<BivarPoly> a, c;
    for (int h = 0; h <= L; ++h) {
        a.push_back(qp_int(h + 1));
        c.push_back(qp_int(h + 1) + BivarPoly::constant(1));
    }
    const ZSeries s_single = cf_truncate(a, c, L);
    return ZSeries::one(L) + s_single.shift_z(1);
}

namespace {
BivarPoly weight_at(const std::vector<BivarPoly>& w, size_t i) {
    return i < w.size() ? w[i] : BivarPoly{};
}
}  // namespace

ZSeries s_fraction(const std::vector<BivarPoly>& c_weights, int L) {
    ZSeries h = ZSeries::one(L);
    for (size_t j = static_cast<size_t>(L) + 1; j >= 1; --j) {
        ZSeries denom = ZSeries::one(L);
        denom -= h.mul_poly(weight_at(c_weights, j)).shift_z(1);
        h = denom.reciprocal();
    }
    return h.mul_poly(weight_at(c_weights, 0));
}

std::pair<ZSeries, ZSeries> cf_contract(const std::vector<BivarPoly>& c_weights, int L) {
    const ZSeries lhs = s_fraction(c_weights, L);

    // c0 + c0 c1 z / (1 - (c1+c2) z - c2 c3 z^2 / (1 - (c3+c4) z - ...)).
    ZSeries w = ZSeries::one(L);
    for (int m = L; m >= 0; --m) {
        const BivarPoly c1 = weight_at(c_weights, static_cast<size_t>(2 * m + 1));
        const BivarPoly c2 = weight_at(c_weights, static_cast<size_t>(2 * m + 2));
        const BivarPoly c3 = weight_at(c_weights, static_cast<size_t>(2 * m + 3));
        ZSeries denom = ZSeries::one(L);
        denom -= ZSeries::constant(c1 + c2, L).shift_z(1);
        denom -= w.mul_poly(c2 * c3).shift_z(2);
        w = denom.reciprocal();
    }
    ZSeries rhs = ZSeries::constant(weight_at(c_weights, 0), L);
    rhs += w.mul_poly(weight_at(c_weights, 0) * weight_at(c_weights, 1)).shift_z(1);
    return {lhs, rhs};
}

}  // namespace crossnest
