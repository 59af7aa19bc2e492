#include <doctest.h>

#include <random>

#include "eolab/series.hpp"

using namespace eolab;

namespace {

QSeries q_of(int n, std::vector<Coeff> c) {
    c.resize(n + 1, 0);
    return QSeries(TruncOrder(n), c);
}

ZQSeries random_series(std::mt19937& rng, TruncOrder n) {
    std::uniform_int_distribution<int> coeff(-3, 3);
    std::uniform_int_distribution<int> zexp(-2, 2);
    ZQSeries s(n);
    for (int q = 0; q <= n.value(); ++q) {
        for (int j = 0; j < 2; ++j) {
            s.accumulate(zexp(rng), q, coeff(rng));
        }
    }
    return s;
}

// (q;q)_inf by multiplying out (1 - q^k) for k <= N with plain vectors.
std::vector<Coeff> brute_euler(int n) {
    std::vector<Coeff> c(n + 1, 0);
    c[0] = 1;
    for (int k = 1; k <= n; ++k) {
        for (int i = n; i >= k; --i) {
            c[i] -= c[i - k];
        }
    }
    return c;
}

} // namespace

TEST_CASE("monomials") {
    const TruncOrder n(10);
    CHECK(monomial(1, 0, 0, n) == ZQSeries::one(n));
    const ZQSeries m = monomial(2, -4, 4, n);
    CHECK(m.coeff(-4, 4) == 2);
    CHECK(m.row(4).size() == 1);
    CHECK(monomial(-1, 2, 2, n).coeff(2, 2) == -1);
    CHECK_THROWS_AS(monomial(1, 0, 11, n), OrderOverflowError);
    CHECK(truncated_monomial(1, 0, 11, n).is_zero());
}

TEST_CASE("truncation order rejects negative values") {
    CHECK_THROWS_AS(TruncOrder(-1), OrderOverflowError);
}

TEST_CASE("ring operations") {
    const TruncOrder n(3);
    const ZQSeries one_minus_q = ZQSeries::one(n) - monomial(1, 0, 1, n);
    ZQSeries geo(n);
    for (int i = 0; i <= 3; ++i) {
        geo.accumulate(0, i, 1);
    }
    CHECK(one_minus_q * geo == ZQSeries::one(n));
    CHECK(geo * ZQSeries::one(n) == geo);

    const TruncOrder ten(10);
    const ZQSeries both = monomial(1, 2, 2, ten) + monomial(1, -2, 2, ten);
    CHECK(both.row(2).size() == 2);

    const ZQSeries cancel = monomial(3, 1, 1, ten) - monomial(3, 1, 1, ten);
    CHECK(cancel.is_zero());
    CHECK(cancel.row(1).empty());
}

TEST_CASE("mismatched orders are rejected") {
    CHECK_THROWS_AS(ZQSeries::one(TruncOrder(3)) + ZQSeries::one(TruncOrder(4)),
                    OrderMismatchError);
    CHECK_THROWS_AS(ZQSeries::one(TruncOrder(3)) * ZQSeries::one(TruncOrder(4)),
                    OrderMismatchError);
    CHECK_THROWS_AS(eq_upto(ZQSeries::one(TruncOrder(3)), ZQSeries::one(TruncOrder(4))),
                    OrderMismatchError);
}

TEST_CASE("coefficient overflow is detected") {
    const TruncOrder n(2);
    const ZQSeries big = monomial(Coeff{1} << 62, 0, 0, n);
    CHECK_THROWS_AS(big + big, CoefficientOverflowError);
    CHECK_THROWS_AS(big * monomial(4, 0, 1, n), CoefficientOverflowError);
    CHECK_THROWS_AS(checked_mul(Coeff{1} << 40, Coeff{1} << 40), CoefficientOverflowError);
}

TEST_CASE("ring laws on random series") {
    std::mt19937 rng(20240917);
    for (int trial = 0; trial < 120; ++trial) {
        const TruncOrder n(static_cast<int>(rng() % 13));
        const ZQSeries a = random_series(rng, n);
        const ZQSeries b = random_series(rng, n);
        const ZQSeries c = random_series(rng, n);
        CHECK(a * b == b * a);
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a + b == b + a);
        CHECK(a - a == ZQSeries(n));
    }
}

TEST_CASE("invert") {
    const TruncOrder n(4);
    const ZQSeries inv = invert(ZQSeries::one(n) - monomial(1, 0, 1, n));
    for (int i = 0; i <= 4; ++i) {
        CHECK(inv.coeff(0, i) == 1);
    }
    CHECK(invert(ZQSeries::one(n)) == ZQSeries::one(n));

    const TruncOrder ten(10);
    const ZQSeries s = qpoch(1, 0, 1, 1, 3, ten);
    CHECK(invert(s) * s == ZQSeries::one(ten));
    CHECK(s * invert(s) == ZQSeries::one(ten));

    CHECK_THROWS_AS(invert(monomial(2, 0, 0, n)), NotInvertibleError);
    CHECK_THROWS_AS(invert(monomial(1, 0, 1, n)), NotInvertibleError);
    CHECK_THROWS_AS(invert(ZQSeries::one(n) + monomial(1, 1, 0, n)), NotInvertibleError);
    CHECK(invert(monomial(-1, 0, 0, n)) == monomial(-1, 0, 0, n));

    CHECK(invert(q_of(4, {1, -1})) == q_of(4, {1, 1, 1, 1, 1}));
    CHECK_THROWS_AS(invert(q_of(4, {3})), NotInvertibleError);
}

TEST_CASE("invert is two-sided on random units") {
    std::mt19937 rng(7);
    for (int trial = 0; trial < 50; ++trial) {
        const TruncOrder n(static_cast<int>(rng() % 13));
        ZQSeries s = random_series(rng, n) - ZQSeries::from_q(eval_z(random_series(rng, n), 0));
        // Force a unit constant term.
        ZQSeries unit = ZQSeries::one(n);
        for (int q = 1; q <= n.value(); ++q) {
            for (const auto& [m, c] : s.row(q)) {
                unit.accumulate(m, q, c);
            }
        }
        CHECK(unit * invert(unit) == ZQSeries::one(n));
        CHECK(invert(unit) * unit == ZQSeries::one(n));
    }
}

TEST_CASE("power") {
    const TruncOrder n(6);
    const ZQSeries s = ZQSeries::one(n) + monomial(1, 1, 1, n);
    CHECK(power(s, 0) == ZQSeries::one(n));
    CHECK(power(s, 3) == s * s * s);
    CHECK(power(s, -2) == invert(s * s));
}

TEST_CASE("pochhammer") {
    const TruncOrder six(6);
    const ZQSeries euler = pochhammer(PochSpec{-1, 0, 1, 1, std::nullopt}, six);
    CHECK(euler == ZQSeries::from_q(q_of(6, {1, -1, -1, 0, 0, 1, 0})));
    CHECK(pochhammer(PochSpec{-1, 0, 1, 1, 2}, six) ==
          ZQSeries::from_q(q_of(6, {1, -1, -1, 1})));
    const ZQSeries single = pochhammer(PochSpec{1, 2, 2, 4, 1}, six);
    CHECK(single == ZQSeries::one(six) + monomial(1, 2, 2, six));
    CHECK_THROWS_AS(pochhammer(PochSpec{-1, 0, 0, 1, std::nullopt}, six),
                    NonconvergentProductError);
    CHECK(pochhammer(PochSpec{-1, 0, 0, 1, 3}, six).is_zero());
}

TEST_CASE("qpoch uses the (x; q^s) convention") {
    const TruncOrder n(8);
    // (q^2; q^4)_2 = (1 - q^2)(1 - q^6)
    CHECK(qpoch(1, 0, 2, 4, 2, n) ==
          ZQSeries::from_q(q_of(8, {1, 0, -1, 0, 0, 0, -1, 0, 1})));
    // (-z; q)_1 = 1 + z
    CHECK(qpoch(-1, 1, 0, 1, 1, n) == ZQSeries::one(n) + monomial(1, 1, 0, n));
}

TEST_CASE("infinite product agrees with a long finite one") {
    const TruncOrder n(20);
    for (int step = 1; step <= 4; ++step) {
        for (int b = 1; b <= 3; ++b) {
            int k = 0;
            while (b + k * step <= 20) {
                ++k;
            }
            CHECK(qpoch(1, 1, b, step, std::nullopt, n) == qpoch(1, 1, b, step, k, n));
            CHECK(qpoch(1, 1, b, step, std::nullopt, n) == qpoch(1, 1, b, step, k + 3, n));
        }
    }
}

TEST_CASE("Euler product matches the pentagonal numbers") {
    for (int n = 0; n <= 50; ++n) {
        const QSeries e = eval_z(qpoch(1, 0, 1, 1, std::nullopt, TruncOrder(n)), 1);
        const std::vector<Coeff> brute = brute_euler(n);
        for (int i = 0; i <= n; ++i) {
            REQUIRE(e.coeff(i) == brute[i]);
        }
    }
    const QSeries e = eval_z(qpoch(1, 0, 1, 1, std::nullopt, TruncOrder(50)), 1);
    std::map<int, Coeff> pent;
    for (int j = -10; j <= 10; ++j) {
        const int g = j * (3 * j - 1) / 2;
        if (g <= 50) {
            pent[g] = (j % 2 == 0) ? 1 : -1;
        }
    }
    for (int i = 0; i <= 50; ++i) {
        const Coeff expected = pent.count(i) ? pent[i] : 0;
        CHECK(e.coeff(i) == expected);
    }
}

TEST_CASE("sum_until_stable") {
    const TruncOrder n(5);
    const ZQSeries s = sum_until_stable(
        [&](int k) { return truncated_monomial(1, 0, static_cast<long long>(k) * k, n); }, n);
    CHECK(s == ZQSeries::from_q(q_of(5, {1, 1, 0, 0, 1})));

    const TruncOrder four(4);
    const ZQSeries inner = sum_until_stable(
        [&](int k) {
            const ZQSeries lead = truncated_monomial(1, 0, static_cast<long long>(k) * (k + 1), four);
            if (lead.is_zero()) {
                return lead;
            }
            const ZQSeries qk = invert(qpoch(1, 0, 1, 1, k, four));
            return lead * qk * qk;
        },
        four);
    CHECK(inner == ZQSeries::from_q(q_of(4, {1, 0, 1, 2, 3})));

    CHECK_THROWS_AS(sum_until_stable([&](int) { return ZQSeries::one(n); }, n), DivergentSumError);
}

TEST_CASE("eval_z and reflect_z") {
    const TruncOrder n(8);
    const ZQSeries s = monomial(1, 4, 4, n) + monomial(1, -4, 4, n);
    CHECK(eval_z(s, 1) == q_of(8, {0, 0, 0, 0, 2}));
    CHECK(eval_z(s, 0) == QSeries(n));
    CHECK(reflect_z(s) == s);
    CHECK(reflect_z(monomial(3, 2, 1, n)) == monomial(3, -2, 1, n));
    CHECK_THROWS_AS(eval_z(s, 2), ParameterError);
}

TEST_CASE("coeff and eq_upto") {
    const TruncOrder ten(10);
    const ZQSeries rhs = qpoch(1, 0, 4, 4, std::nullopt, ten) *
                         power(invert(qpoch(1, 0, 2, 4, std::nullopt, ten)), 2);
    CHECK(rhs.coeff(0, 8) == 5);
    CHECK(rhs.coeff(7, 8) == 0);
    CHECK_THROWS_AS(rhs.coeff(0, 11), OrderOverflowError);

    CHECK(eq_upto(rhs, rhs).equal());
    const ZQSeries one = ZQSeries::one(ten);
    const Comparison c = eq_upto(one, one + monomial(1, 0, 1, ten));
    REQUIRE_FALSE(c.equal());
    CHECK(c.first_mismatch->n == 1);
    CHECK(c.first_mismatch->m == 0);
    CHECK(c.first_mismatch->left == 0);
    CHECK(c.first_mismatch->right == 1);

    // Smallest n first, then smallest m.
    const ZQSeries a = monomial(1, 3, 2, ten) + monomial(1, -1, 2, ten) + monomial(1, 0, 1, ten);
    const Comparison d = eq_upto(a, ZQSeries(ten));
    CHECK(d.first_mismatch->n == 1);
    const Comparison e = eq_upto(a - monomial(1, 0, 1, ten), ZQSeries(ten));
    CHECK(e.first_mismatch->n == 2);
    CHECK(e.first_mismatch->m == -1);
}

TEST_CASE("to_string") {
    const TruncOrder six(6);
    CHECK(to_string(pochhammer(PochSpec{}, six)) == "1 - q - q^2 + q^5 + O(q^7)");
    CHECK(to_string(ZQSeries(TruncOrder(2))) == "0 + O(q^3)");
}
