#include <doctest.h>

#include "crossnest/genfun.hpp"
#include "crossnest/group_seq.hpp"
#include "crossnest/similarity.hpp"
#include "crossnest/tree.hpp"
#include "oracles.hpp"

using namespace crossnest;

namespace {
ZSeries z_power(int s, int order) {
    return ZSeries::one(order).shift_z(s);
}
}  // namespace

TEST_CASE("the (q,p)-integer") {
    CHECK(qp_int(0).is_zero());
    CHECK(qp_int(1) == BivarPoly::constant(1));
    CHECK(qp_int(3) == BivarPoly::monomial(2, 0) + BivarPoly::monomial(1, 1) +
                           BivarPoly::monomial(0, 2));
    for (int r = 0; r <= 5; ++r) {
        // At p = q it degenerates to r q^{r-1}.
        const BivarPoly merged = qp_int(r).subst_p_to_q();
        CHECK(merged == (r == 0 ? BivarPoly{} : BivarPoly::monomial(r - 1, 0, r)));
    }
}

TEST_CASE("polynomial arithmetic basics") {
    const BivarPoly q = BivarPoly::monomial(1, 0);
    const BivarPoly p = BivarPoly::monomial(0, 1);
    CHECK((BivarPoly::constant(1) + q) * (BivarPoly::constant(1) - q) ==
          BivarPoly::constant(1) - q * q);
    CHECK((q + p).swapped_qp() == q + p);
    CHECK((q * q + p).swapped_qp() == p * p + q);
    CHECK((q - q).is_zero());
    CHECK((q + p).eval(2, 3) == 5);
    CHECK(BivarPoly{}.str() == "0");
    CHECK((BivarPoly::constant(2) * q * p).max_total_degree() == 2);
}

TEST_CASE("series arithmetic and reciprocals") {
    const ZSeries one = ZSeries::one(6);
    const ZSeries geom = (one - z_power(1, 6)).reciprocal();
    for (int l = 0; l <= 6; ++l) CHECK(geom.coeff(l) == BivarPoly::constant(1));

    ZSeries a = one + z_power(1, 6).mul_poly(BivarPoly::monomial(1, 0)) -
                z_power(3, 6).mul_poly(BivarPoly::monomial(0, 2, 4));
    CHECK(a * a.reciprocal() == one);
    CHECK(a.reciprocal().reciprocal() == a);

    CHECK_THROWS_AS(z_power(1, 4).reciprocal(), std::domain_error);
    CHECK_THROWS_AS(ZSeries::constant(BivarPoly::constant(2), 4).reciprocal(),
                    std::domain_error);
    CHECK_THROWS_AS(ZSeries::one(3) + ZSeries::one(4), std::logic_error);
}

TEST_CASE("initial data of the b-table") {
    CHECK(b0r(parse_partition("1"), 0) == BivarPoly::constant(1));
    // Column 0 carries the root statistics; the r = 1 term for 1,2,5/3,4 is
    // q^{cr+u_2} p^{ne+v_2} = q p^2.
    CHECK(b0r(parse_partition("1,2,5/3,4"), 0) == BivarPoly::monomial(0, 1));
    CHECK(b0r(parse_partition("1,2,5/3,4"), 1) == BivarPoly::monomial(1, 2));
    for (const char* text : {"1", "1,2,5/3,4", "1,7/2,6/3,4/5,8"}) {
        const SetPartition pi = parse_partition(text);
        CHECK(b0r(pi, pi.block_count()).is_zero());
        CHECK(b0r(pi, pi.block_count() + 3).is_zero());
        for (int r = 0; r < pi.block_count(); ++r)
            CHECK(b0r(pi, r).eval(1, 1) == binom(pi.block_count() - 1, r));
    }
    CHECK_THROWS_AS(b0r(SetPartition{}, 0), std::invalid_argument);
}

TEST_CASE("b-table column 0 against direct tree sums") {
    const auto bell = oracles::bell_numbers(5);
    const auto single = blr_table(parse_partition("1"), 4);
    for (int l = 0; l <= 4; ++l)
        CHECK(single[static_cast<size_t>(l)][0].eval(1, 1) ==
              bell[static_cast<size_t>(l) + 1]);

    for (const char* text : {"1,2,5/3,4", "1,2,4/3,5"}) {
        const SetPartition pi = parse_partition(text);
        const auto table = blr_table(pi, 4);
        std::vector<SetPartition> frontier{pi};
        for (int l = 0; l <= 4; ++l) {
            BivarPoly level_sum;
            for (const SetPartition& mu : frontier)
                level_sum += BivarPoly::monomial(static_cast<int>(cr(mu)),
                                                 static_cast<int>(ne(mu)));
            CHECK(table[static_cast<size_t>(l)][0] == level_sum);
            std::vector<SetPartition> next;
            for (const SetPartition& p : frontier)
                for (SetPartition& c : children(p)) next.push_back(std::move(c));
            frontier = std::move(next);
        }
    }
}

TEST_CASE("b-table base row matches the initial data") {
    const SetPartition pi = parse_partition("1,7/2,6/3,4/5,8");
    const auto table = blr_table(pi, 3);
    for (size_t r = 0; r < table[0].size(); ++r)
        CHECK(table[0][r] == b0r(pi, static_cast<int>(r)));
}

TEST_CASE("total degree of the level sums stays under the pair count") {
    for (const char* text : {"1,2,5/3,4", "1,7/2,6/3,4/5,8"}) {
        const SetPartition pi = parse_partition(text);
        const auto table = blr_table(pi, 5);
        for (int l = 0; l <= 5; ++l) {
            const int pairs_bound =
                (pi.n() + l - pi.block_count()) * (pi.n() + l - pi.block_count() - 1) / 2;
            CHECK(table[static_cast<size_t>(l)][0].max_total_degree() <= pairs_bound);
        }
    }
}

TEST_CASE("weighted-path coefficients") {
    CHECK(c_path_weight(0, 0) == BivarPoly::constant(1));
    for (int s = 1; s <= 4; ++s) CHECK(c_path_weight(0, s).is_zero());
    for (int l = 0; l <= 5; ++l)
        for (int s = l + 1; s <= l + 3; ++s) CHECK(c_path_weight(l, s).is_zero());

    const SetPartition pi = parse_partition("1,2,5/3,4");
    const auto table = blr_table(pi, 4);
    for (int l = 0; l <= 4; ++l) {
        BivarPoly acc;
        for (int s = 0; s < pi.block_count(); ++s)
            acc += c_path_weight(l, s) * b0r(pi, s);
        CHECK(acc == table[static_cast<size_t>(l)][0]);
    }
}

TEST_CASE("tail products of the fraction recover the path coefficients") {
    // K_s as a product of fraction tails: J^{/0/} a_0 z J^{/1/} ... J^{/s/}.
    const int L = 6;
    auto tail = [&](int from) {
        std::vector<BivarPoly> a, c;
        for (int h = from; h <= from + L; ++h) {
            a.push_back(qp_int(h + 1));
            c.push_back(qp_int(h + 1) + BivarPoly::constant(1));
        }
        return cf_truncate(a, c, L);
    };
    for (int s = 0; s <= 3; ++s) {
        ZSeries k_s = tail(0);
        for (int h = 1; h <= s; ++h)
            k_s = (k_s * tail(h)).mul_poly(qp_int(h)).shift_z(1);
        ZSeries expected(L);
        for (int l = 0; l <= L; ++l) expected.set_coeff(l, c_path_weight(l, s));
        CHECK(k_s == expected);
    }
}

TEST_CASE("series routes agree and start at the root monomial") {
    for (const char* text : {"1,2,5/3,4", "1,2,4/3,5", "1,3/2,4"}) {
        const SetPartition pi = parse_partition(text);
        const ZSeries a = s_pi_theorem(pi, 5);
        const ZSeries b = s_pi_brute(pi, 5);
        CHECK(a == b);
        CHECK(a.coeff(0) ==
              BivarPoly::monomial(static_cast<int>(cr(pi)), static_cast<int>(ne(pi))));
    }
    CHECK_THROWS_AS(s_pi_theorem(SetPartition{}, 3), std::invalid_argument);
    CHECK_THROWS_AS(s_pi_brute(SetPartition{}, 3), std::invalid_argument);
}

TEST_CASE("series over all partitions") {
    const ZSeries v1 = fraction_allpartitions_v1(6);
    const ZSeries v2 = fraction_allpartitions_v2(6);
    CHECK(v1 == v2);
    CHECK(v2.eval(1, 1) == std::vector<long long>{1, 1, 2, 5, 15, 52, 203});
    CHECK(v2.coeff(3) == BivarPoly::constant(5));
    CHECK(v2.coeff(4) == BivarPoly::constant(13) + BivarPoly::monomial(1, 0) +
                             BivarPoly::monomial(0, 1));
    CHECK(v2.swapped_qp() == v2);
}

TEST_CASE("contraction identity") {
    {
        const std::vector<BivarPoly> ones(16, BivarPoly::constant(1));
        const auto [lhs, rhs] = cf_contract(ones, 6);
        CHECK(lhs == rhs);
        const auto catalan = oracles::catalan_numbers(6);
        CHECK(lhs.eval(1, 1) == catalan);
    }
    {
        const std::vector<BivarPoly> only{BivarPoly::constant(9)};
        const auto [lhs, rhs] = cf_contract(only, 5);
        CHECK(lhs == rhs);
        CHECK(lhs == ZSeries::constant(BivarPoly::constant(9), 5));
    }
    {
        // The weights whose even/odd contractions are the two published
        // fraction forms.
        std::vector<BivarPoly> w{BivarPoly::constant(1), BivarPoly::constant(1)};
        for (int r = 1; static_cast<int>(w.size()) < 22; ++r) {
            w.push_back(qp_int(r));
            w.push_back(BivarPoly::constant(1));
        }
        const auto [lhs, rhs] = cf_contract(w, 6);
        CHECK(lhs == rhs);
        CHECK(s_fraction(w, 6) == fraction_allpartitions_v1(6));
        CHECK(rhs == fraction_allpartitions_v2(6));
    }
}
