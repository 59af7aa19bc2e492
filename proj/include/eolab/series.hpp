#pragma once

// Truncated formal power series with exact integer coefficients.
//
// QSeries is univariate in q. ZQSeries is Laurent in z and truncated in q:
// every series is exact for q-exponents 0..N and says nothing beyond N.
// Coefficients are 64-bit integers; any operation whose exact result does
// not fit throws CoefficientOverflowError instead of wrapping.

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <vector>

#include "eolab/error.hpp"

namespace eolab {

using Coeff = std::int64_t;

Coeff checked_add(Coeff a, Coeff b);
Coeff checked_mul(Coeff a, Coeff b);

// Largest q-exponent carried by a series.
class TruncOrder {
public:
    explicit TruncOrder(int n);

    int value() const noexcept { return n_; }
    friend bool operator==(TruncOrder, TruncOrder) = default;

private:
    int n_;
};

// First coefficient at which two series differ, ordered by (n, then m).
struct Mismatch {
    int n = 0;
    int m = 0;
    Coeff left = 0;
    Coeff right = 0;
};

struct Comparison {
    std::optional<Mismatch> first_mismatch;

    bool equal() const noexcept { return !first_mismatch.has_value(); }
    explicit operator bool() const noexcept { return equal(); }
};

class QSeries {
public:
    explicit QSeries(TruncOrder order);
    QSeries(TruncOrder order, std::vector<Coeff> coeffs);

    TruncOrder order() const noexcept { return order_; }
    std::span<const Coeff> coeffs() const noexcept { return coeffs_; }
    Coeff coeff(int n) const;

    friend QSeries operator+(const QSeries& a, const QSeries& b);
    friend QSeries operator-(const QSeries& a, const QSeries& b);
    friend QSeries operator*(const QSeries& a, const QSeries& b);
    friend bool operator==(const QSeries&, const QSeries&) = default;

private:
    TruncOrder order_;
    std::vector<Coeff> coeffs_;
};

QSeries invert(const QSeries& s);
Comparison eq_upto(const QSeries& a, const QSeries& b);
std::string to_string(const QSeries& s);
std::ostream& operator<<(std::ostream& os, const QSeries& s);

class ZQSeries {
public:
    // Sparse z-support of a single q-exponent; zero entries are never stored.
    using Row = std::map<int, Coeff>;

    explicit ZQSeries(TruncOrder order);

    static ZQSeries one(TruncOrder order);
    static ZQSeries monomial(Coeff c, int z_exp, int q_exp, TruncOrder order);
    static ZQSeries from_q(const QSeries& s);

    TruncOrder order() const noexcept { return order_; }
    const Row& row(int n) const;
    Coeff coeff(int z_exp, int q_exp) const;
    bool is_zero() const noexcept;
    // Smallest q-exponent with a nonzero row, or nullopt for the zero series.
    std::optional<int> min_q_order() const noexcept;

    // Builder entry point used by enumerators: adds c*z^m*q^n in place.
    void accumulate(int z_exp, int q_exp, Coeff c);

    friend ZQSeries operator+(const ZQSeries& a, const ZQSeries& b);
    friend ZQSeries operator-(const ZQSeries& a, const ZQSeries& b);
    friend ZQSeries operator-(const ZQSeries& a);
    friend ZQSeries operator*(const ZQSeries& a, const ZQSeries& b);
    friend bool operator==(const ZQSeries&, const ZQSeries&) = default;

private:
    TruncOrder order_;
    std::vector<Row> rows_;
};

ZQSeries monomial(Coeff c, int z_exp, int q_exp, TruncOrder order);
// Like monomial, but exponents past the order give the zero series.
ZQSeries truncated_monomial(Coeff c, int z_exp, long long q_exp, TruncOrder order);
ZQSeries invert(const ZQSeries& s);
ZQSeries power(const ZQSeries& s, int exponent);
// z -> 1/z.
ZQSeries reflect_z(const ZQSeries& s);
// Specializes z to 0 or 1 on the expanded series.
QSeries eval_z(const ZQSeries& s, int value);
Comparison eq_upto(const ZQSeries& a, const ZQSeries& b);
std::string to_string(const ZQSeries& s);
std::ostream& operator<<(std::ostream& os, const ZQSeries& s);

// prod_{k=0}^{count-1} (1 + sign * z^z_exp * q^(q_exp + k*q_step)).
// An empty count means the infinite product, truncated at the order.
struct PochSpec {
    int sign = -1;
    int z_exp = 0;
    int q_exp = 1;
    int q_step = 1;
    std::optional<int> count;
};

ZQSeries pochhammer(const PochSpec& spec, TruncOrder order);

// (x; q^step)_count for x = sign * z^z_exp * q^q_exp, i.e. factors (1 - x q^(k*step)).
ZQSeries qpoch(int sign, int z_exp, int q_exp, int q_step, std::optional<int> count,
               TruncOrder order);

using TermGenerator = std::function<ZQSeries(int k)>;

// Sums term(0) + term(1) + ... and stops at the first term whose minimum
// q-order exceeds the truncation order. Throws DivergentSumError when
// 10*(N+2) consecutive terms fail to raise the minimum order.
ZQSeries sum_until_stable(const TermGenerator& term, TruncOrder order);

} // namespace eolab
