#include "eolab/series.hpp"

#include <sstream>
#include <utility>

namespace eolab {

Coeff checked_add(Coeff a, Coeff b) {
    Coeff out;
    if (__builtin_add_overflow(a, b, &out)) {
        throw CoefficientOverflowError("coefficient overflow in addition");
    }
    return out;
}

Coeff checked_mul(Coeff a, Coeff b) {
    Coeff out;
    if (__builtin_mul_overflow(a, b, &out)) {
        throw CoefficientOverflowError("coefficient overflow in multiplication");
    }
    return out;
}

TruncOrder::TruncOrder(int n) : n_(n) {
    if (n < 0) {
        throw OrderOverflowError("truncation order must be nonnegative, got " + std::to_string(n));
    }
}

namespace {

void require_same_order(TruncOrder a, TruncOrder b) {
    if (a != b) {
        throw OrderMismatchError("series orders differ: " + std::to_string(a.value()) + " vs " +
                                 std::to_string(b.value()));
    }
}

void require_in_range(int n, TruncOrder order) {
    if (n < 0 || n > order.value()) {
        throw OrderOverflowError("q-exponent " + std::to_string(n) + " outside 0.." +
                                 std::to_string(order.value()));
    }
}

void add_into(ZQSeries::Row& row, int m, Coeff c) {
    if (c == 0) {
        return;
    }
    auto [it, inserted] = row.try_emplace(m, c);
    if (!inserted) {
        it->second = checked_add(it->second, c);
        if (it->second == 0) {
            row.erase(it);
        }
    }
}

void add_product_into(ZQSeries::Row& out, const ZQSeries::Row& a, const ZQSeries::Row& b) {
    for (const auto& [ma, ca] : a) {
        for (const auto& [mb, cb] : b) {
            add_into(out, ma + mb, checked_mul(ca, cb));
        }
    }
}

std::string monomial_text(Coeff c, int m, int n, bool leading) {
    std::ostringstream os;
    Coeff mag = c < 0 ? -c : c;
    if (!leading) {
        os << (c < 0 ? " - " : " + ");
    } else if (c < 0) {
        os << "-";
    }
    bool bare = (m == 0 && n == 0);
    if (mag != 1 || bare) {
        os << mag;
        if (!bare) {
            os << "*";
        }
    }
    if (m != 0) {
        os << "z";
        if (m != 1) {
            os << "^" << m;
        }
        if (n != 0) {
            os << "*";
        }
    }
    if (n != 0) {
        os << "q";
        if (n != 1) {
            os << "^" << n;
        }
    }
    return os.str();
}

} // namespace

// QSeries

QSeries::QSeries(TruncOrder order) : order_(order), coeffs_(order.value() + 1, 0) {}

QSeries::QSeries(TruncOrder order, std::vector<Coeff> coeffs)
    : order_(order), coeffs_(std::move(coeffs)) {
    if (coeffs_.size() != static_cast<std::size_t>(order.value()) + 1) {
        throw OrderMismatchError("QSeries needs exactly N+1 coefficients");
    }
}

Coeff QSeries::coeff(int n) const {
    require_in_range(n, order_);
    return coeffs_[n];
}

QSeries operator+(const QSeries& a, const QSeries& b) {
    require_same_order(a.order_, b.order_);
    QSeries out(a.order_);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
        out.coeffs_[i] = checked_add(a.coeffs_[i], b.coeffs_[i]);
    }
    return out;
}

QSeries operator-(const QSeries& a, const QSeries& b) {
    require_same_order(a.order_, b.order_);
    QSeries out(a.order_);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
        out.coeffs_[i] = checked_add(a.coeffs_[i], checked_mul(-1, b.coeffs_[i]));
    }
    return out;
}

QSeries operator*(const QSeries& a, const QSeries& b) {
    require_same_order(a.order_, b.order_);
    const int n_max = a.order_.value();
    QSeries out(a.order_);
    for (int i = 0; i <= n_max; ++i) {
        if (a.coeffs_[i] == 0) {
            continue;
        }
        for (int j = 0; i + j <= n_max; ++j) {
            if (b.coeffs_[j] != 0) {
                out.coeffs_[i + j] =
                    checked_add(out.coeffs_[i + j], checked_mul(a.coeffs_[i], b.coeffs_[j]));
            }
        }
    }
    return out;
}

QSeries invert(const QSeries& s) {
    const Coeff c0 = s.coeff(0);
    if (c0 != 1 && c0 != -1) {
        throw NotInvertibleError("constant term must be +1 or -1, got " + std::to_string(c0));
    }
    const int n_max = s.order().value();
    std::vector<Coeff> t(n_max + 1, 0);
    t[0] = c0;
    for (int n = 1; n <= n_max; ++n) {
        Coeff acc = 0;
        for (int j = 1; j <= n; ++j) {
            acc = checked_add(acc, checked_mul(s.coeffs()[j], t[n - j]));
        }
        t[n] = checked_mul(-c0, acc);
    }
    return QSeries(s.order(), std::move(t));
}

Comparison eq_upto(const QSeries& a, const QSeries& b) {
    require_same_order(a.order(), b.order());
    for (int n = 0; n <= a.order().value(); ++n) {
        if (a.coeff(n) != b.coeff(n)) {
            return Comparison{Mismatch{n, 0, a.coeff(n), b.coeff(n)}};
        }
    }
    return {};
}

std::string to_string(const QSeries& s) {
    return to_string(ZQSeries::from_q(s));
}

std::ostream& operator<<(std::ostream& os, const QSeries& s) {
    return os << to_string(s);
}

// ZQSeries

ZQSeries::ZQSeries(TruncOrder order) : order_(order), rows_(order.value() + 1) {}

ZQSeries ZQSeries::one(TruncOrder order) {
    return monomial(1, 0, 0, order);
}

ZQSeries ZQSeries::monomial(Coeff c, int z_exp, int q_exp, TruncOrder order) {
    ZQSeries out(order);
    out.accumulate(z_exp, q_exp, c);
    return out;
}

ZQSeries ZQSeries::from_q(const QSeries& s) {
    ZQSeries out(s.order());
    for (int n = 0; n <= s.order().value(); ++n) {
        out.accumulate(0, n, s.coeff(n));
    }
    return out;
}

const ZQSeries::Row& ZQSeries::row(int n) const {
    require_in_range(n, order_);
    return rows_[n];
}

Coeff ZQSeries::coeff(int z_exp, int q_exp) const {
    const Row& r = row(q_exp);
    auto it = r.find(z_exp);
    return it == r.end() ? 0 : it->second;
}

bool ZQSeries::is_zero() const noexcept {
    return !min_q_order().has_value();
}

std::optional<int> ZQSeries::min_q_order() const noexcept {
    for (std::size_t n = 0; n < rows_.size(); ++n) {
        if (!rows_[n].empty()) {
            return static_cast<int>(n);
        }
    }
    return std::nullopt;
}

void ZQSeries::accumulate(int z_exp, int q_exp, Coeff c) {
    require_in_range(q_exp, order_);
    add_into(rows_[q_exp], z_exp, c);
}

ZQSeries operator+(const ZQSeries& a, const ZQSeries& b) {
    require_same_order(a.order_, b.order_);
    ZQSeries out = a;
    for (std::size_t n = 0; n < b.rows_.size(); ++n) {
        for (const auto& [m, c] : b.rows_[n]) {
            add_into(out.rows_[n], m, c);
        }
    }
    return out;
}

ZQSeries operator-(const ZQSeries& a) {
    ZQSeries out(a.order_);
    for (std::size_t n = 0; n < a.rows_.size(); ++n) {
        for (const auto& [m, c] : a.rows_[n]) {
            out.rows_[n].emplace(m, checked_mul(-1, c));
        }
    }
    return out;
}

ZQSeries operator-(const ZQSeries& a, const ZQSeries& b) {
    return a + (-b);
}

ZQSeries operator*(const ZQSeries& a, const ZQSeries& b) {
    require_same_order(a.order_, b.order_);
    const std::size_t size = a.rows_.size();
    ZQSeries out(a.order_);
    for (std::size_t i = 0; i < size; ++i) {
        if (a.rows_[i].empty()) {
            continue;
        }
        for (std::size_t j = 0; i + j < size; ++j) {
            if (!b.rows_[j].empty()) {
                add_product_into(out.rows_[i + j], a.rows_[i], b.rows_[j]);
            }
        }
    }
    return out;
}

ZQSeries monomial(Coeff c, int z_exp, int q_exp, TruncOrder order) {
    return ZQSeries::monomial(c, z_exp, q_exp, order);
}

ZQSeries truncated_monomial(Coeff c, int z_exp, long long q_exp, TruncOrder order) {
    if (q_exp > order.value()) {
        return ZQSeries(order);
    }
    return ZQSeries::monomial(c, z_exp, static_cast<int>(q_exp), order);
}

ZQSeries invert(const ZQSeries& s) {
    const ZQSeries::Row& head = s.row(0);
    if (head.size() != 1 || head.begin()->first != 0 ||
        (head.begin()->second != 1 && head.begin()->second != -1)) {
        throw NotInvertibleError("constant term must be exactly +1 or -1 with no z-dependence");
    }
    const Coeff c0 = head.begin()->second;
    const int n_max = s.order().value();
    std::vector<ZQSeries::Row> t(n_max + 1);
    t[0].emplace(0, c0);
    for (int n = 1; n <= n_max; ++n) {
        ZQSeries::Row acc;
        for (int j = 1; j <= n; ++j) {
            add_product_into(acc, s.row(j), t[n - j]);
        }
        for (const auto& [m, c] : acc) {
            t[n].emplace(m, checked_mul(-c0, c));
        }
    }
    ZQSeries out(s.order());
    for (int n = 0; n <= n_max; ++n) {
        for (const auto& [m, c] : t[n]) {
            out.accumulate(m, n, c);
        }
    }
    return out;
}

ZQSeries power(const ZQSeries& s, int exponent) {
    if (exponent < 0) {
        return power(invert(s), -exponent);
    }
    ZQSeries out = ZQSeries::one(s.order());
    for (int i = 0; i < exponent; ++i) {
        out = out * s;
    }
    return out;
}

ZQSeries reflect_z(const ZQSeries& s) {
    ZQSeries out(s.order());
    for (int n = 0; n <= s.order().value(); ++n) {
        for (const auto& [m, c] : s.row(n)) {
            out.accumulate(-m, n, c);
        }
    }
    return out;
}

QSeries eval_z(const ZQSeries& s, int value) {
    if (value != 0 && value != 1) {
        throw ParameterError("eval_z supports z=0 and z=1 only");
    }
    const int n_max = s.order().value();
    std::vector<Coeff> out(n_max + 1, 0);
    for (int n = 0; n <= n_max; ++n) {
        if (value == 0) {
            out[n] = s.coeff(0, n);
        } else {
            for (const auto& [m, c] : s.row(n)) {
                out[n] = checked_add(out[n], c);
            }
        }
    }
    return QSeries(s.order(), std::move(out));
}

Comparison eq_upto(const ZQSeries& a, const ZQSeries& b) {
    require_same_order(a.order(), b.order());
    for (int n = 0; n <= a.order().value(); ++n) {
        const auto& ra = a.row(n);
        const auto& rb = b.row(n);
        if (ra == rb) {
            continue;
        }
        // Smallest m present in either row whose coefficients differ.
        auto ia = ra.begin();
        auto ib = rb.begin();
        while (true) {
            const bool a_done = ia == ra.end();
            const bool b_done = ib == rb.end();
            if (!a_done && (b_done || ia->first < ib->first)) {
                return Comparison{Mismatch{n, ia->first, ia->second, 0}};
            }
            if (!b_done && (a_done || ib->first < ia->first)) {
                return Comparison{Mismatch{n, ib->first, 0, ib->second}};
            }
            if (ia->second != ib->second) {
                return Comparison{Mismatch{n, ia->first, ia->second, ib->second}};
            }
            ++ia;
            ++ib;
        }
    }
    return {};
}

std::string to_string(const ZQSeries& s) {
    std::string out;
    for (int n = 0; n <= s.order().value(); ++n) {
        for (auto it = s.row(n).rbegin(); it != s.row(n).rend(); ++it) {
            out += monomial_text(it->second, it->first, n, out.empty());
        }
    }
    if (out.empty()) {
        out = "0";
    }
    return out + " + O(q^" + std::to_string(s.order().value() + 1) + ")";
}

std::ostream& operator<<(std::ostream& os, const ZQSeries& s) {
    return os << to_string(s);
}

ZQSeries pochhammer(const PochSpec& spec, TruncOrder order) {
    if (spec.sign != 1 && spec.sign != -1) {
        throw ParameterError("pochhammer sign must be +1 or -1");
    }
    if (spec.q_step < 1 || spec.q_exp < 0) {
        throw ParameterError("pochhammer needs q_step >= 1 and q_exp >= 0");
    }
    if (spec.count && *spec.count < 0) {
        throw ParameterError("pochhammer count must be nonnegative");
    }
    if (!spec.count && spec.q_exp == 0) {
        throw NonconvergentProductError("infinite q-Pochhammer product needs q_exp >= 1");
    }
    const int n_max = order.value();
    ZQSeries out = ZQSeries::one(order);
    for (int k = 0; !spec.count || k < *spec.count; ++k) {
        const long long q = spec.q_exp + static_cast<long long>(k) * spec.q_step;
        if (q > n_max) {
            if (!spec.count) {
                break;
            }
            continue;
        }
        ZQSeries factor = ZQSeries::one(order);
        factor.accumulate(spec.z_exp, static_cast<int>(q), spec.sign);
        out = out * factor;
    }
    return out;
}

ZQSeries qpoch(int sign, int z_exp, int q_exp, int q_step, std::optional<int> count,
               TruncOrder order) {
    return pochhammer(PochSpec{-sign, z_exp, q_exp, q_step, count}, order);
}

ZQSeries sum_until_stable(const TermGenerator& term, TruncOrder order) {
    const long long stall_limit = 10LL * (order.value() + 2);
    ZQSeries total(order);
    int best = -1;
    long long stalled = 0;
    for (int k = 0;; ++k) {
        ZQSeries t = term(k);
        const std::optional<int> low = t.min_q_order();
        if (!low) {
            break;
        }
        if (*low > best) {
            best = *low;
            stalled = 0;
        } else if (++stalled >= stall_limit) {
            throw DivergentSumError("sum terms stopped raising the minimum q-order at k=" +
                                    std::to_string(k));
        }
        total = total + t;
    }
    return total;
}

} // namespace eolab
