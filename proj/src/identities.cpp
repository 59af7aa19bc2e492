#include "eolab/identities.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "eolab/bijections.hpp"
#include "eolab/harness.hpp"
#include "eolab/overpartitions.hpp"
#include "eolab/partitions.hpp"

namespace eolab {

namespace {

constexpr std::size_t kMaxWitnesses = 20;

using WitnessFn = std::function<std::vector<std::string>(int n)>;

class ReportBuilder {
public:
    ReportBuilder(std::string name, int order) {
        report_.name = std::move(name);
        report_.order = order;
    }

    ReportBuilder& param(std::string key, long long value) {
        report_.params.emplace_back(std::move(key), value);
        return *this;
    }

    void note(std::string text) { report_.notes.push_back(std::move(text)); }

    // Records the check; only the first failing comparison is kept.
    bool compare(const std::string& label, const ZQSeries& left, const ZQSeries& right,
                 const WitnessFn& witnesses = {}) {
        report_.checks.push_back(label);
        const Comparison cmp = eq_upto(left, right);
        if (cmp.equal()) {
            return true;
        }
        const Mismatch& m = *cmp.first_mismatch;
        fail(label, m.n, m.m, m.left, m.right, witnesses);
        return false;
    }

    void fail(const std::string& label, int n, int m, Coeff left, Coeff right,
              const WitnessFn& witnesses = {}) {
        if (report_.mismatch) {
            return;
        }
        report_.mismatch = ReportMismatch{label, n, m, left, right};
        if (witnesses) {
            std::vector<std::string> found = witnesses(n);
            if (found.size() > kMaxWitnesses) {
                found.resize(kMaxWitnesses);
            }
            report_.witnesses = std::move(found);
        }
    }

    void check(const std::string& label) { report_.checks.push_back(label); }

    VerificationReport done() { return std::move(report_); }

private:
    VerificationReport report_;
};

// (x; q^step)_count with x = sign * z^z_exp * q^q_exp; count empty for infinite.
ZQSeries poch(int sign, int z_exp, int q_exp, int step, std::optional<int> count, TruncOrder n) {
    return qpoch(sign, z_exp, q_exp, step, count, n);
}

ZQSeries poch_inf(int sign, int z_exp, int q_exp, int step, TruncOrder n) {
    return qpoch(sign, z_exp, q_exp, step, std::nullopt, n);
}

ZQSeries signed_q_power(int sign, long long q_exp, TruncOrder n) {
    return truncated_monomial(sign, 0, q_exp, n);
}

int alternating(int k) {
    return k % 2 == 0 ? 1 : -1;
}

std::vector<std::string> eo_members_at(int n) {
    std::vector<std::string> out;
    for (const Partition& p : gen_eo_star(n)) {
        out.push_back(to_string(p) + " eoc=" + std::to_string(eoc(p)) + " " +
                      to_string(classify_eo(p)));
    }
    return out;
}

std::vector<std::string> eobar_members_at(int n) {
    std::vector<std::string> out;
    for (const Overpartition& p : gen_eobar_star(n)) {
        out.push_back(to_string(p) + " o=" + std::to_string(o_count(p)) +
                      " w=" + std::to_string(weight_w(p)));
    }
    return out;
}

// A z-value used inside formal-z products: z -> z^z_exp * q^q_exp.
struct ZMonomial {
    int z_exp = 1;
    int q_exp = 0;
};

ZQSeries bailey_daum_sum(ZMonomial z, TruncOrder n) {
    return sum_until_stable(
        [&](int k) {
            const ZQSeries lead = signed_q_power(alternating(k), 2LL * k, n);
            if (lead.is_zero()) {
                return lead;
            }
            return lead * poch(-1, z.z_exp, z.q_exp, 4, k, n) * poch(1, 0, 2, 4, k, n) *
                   invert(poch(1, 0, 4, 4, k, n)) * invert(poch(-1, z.z_exp, z.q_exp + 2, 4, k, n));
        },
        n);
}

ZQSeries bailey_daum_product(ZMonomial z, TruncOrder n) {
    return poch_inf(-1, 0, 4, 4, n) * power(poch_inf(-1, z.z_exp, z.q_exp + 4, 8, n), 2) *
           invert(poch_inf(-1, 0, 2, 4, n)) * invert(poch_inf(-1, z.z_exp, z.q_exp + 2, 4, n));
}

ZQSeries eobar_prefactor(ZMonomial z, TruncOrder n) {
    return poch_inf(-1, z.z_exp, z.q_exp + 2, 4, n) * invert(poch_inf(1, 0, 2, 4, n));
}

ZQSeries gfover_closed(ZMonomial z, TruncOrder n) {
    return poch_inf(-1, 0, 4, 4, n) * power(poch_inf(-1, z.z_exp, z.q_exp + 4, 8, n), 2) *
           invert(poch_inf(1, 0, 4, 8, n));
}

// Coefficients are all >= 0 and sit on q-exponents divisible by 4.
void check_positive_on_multiples_of_4(ReportBuilder& b, const std::string& label,
                                      const ZQSeries& s, const WitnessFn& witnesses) {
    b.check(label);
    for (int n = 0; n <= s.order().value(); ++n) {
        for (const auto& [m, c] : s.row(n)) {
            if (n % 4 != 0 || c < 0) {
                b.fail(label, n, m, c, 0, witnesses);
                return;
            }
        }
    }
}

} // namespace

namespace sides {

ZQSeries eq1_enumerated(TruncOrder order) {
    ZQSeries out(order);
    for (int n = 0; n <= order.value(); ++n) {
        out.accumulate(0, n, static_cast<Coeff>(gen_eo_star(n).size()));
    }
    return out;
}

ZQSeries eq1_product(TruncOrder order) {
    return poch_inf(1, 0, 4, 4, order) * power(invert(poch_inf(1, 0, 2, 4, order)), 2);
}

ZQSeries eq2_product(TruncOrder order) {
    return poch_inf(1, 0, 4, 4, order) * invert(poch_inf(1, 2, 2, 4, order)) *
           invert(poch_inf(1, -2, 2, 4, order));
}

ZQSeries lemma1_left_sum(int r, TruncOrder order) {
    return sum_until_stable(
        [&](int k) {
            const ZQSeries lead = signed_q_power(1, k, order);
            if (lead.is_zero()) {
                return lead;
            }
            return lead * invert(poch(1, 0, 1, 1, k, order)) *
                   invert(poch(1, 0, 1, 1, k + r, order));
        },
        order);
}

ZQSeries lemma1_right_sum(int r, TruncOrder order) {
    const ZQSeries inner = sum_until_stable(
        [&](int k) {
            const ZQSeries lead = signed_q_power(1, static_cast<long long>(k) * (k + r + 1), order);
            if (lead.is_zero()) {
                return lead;
            }
            return lead * invert(poch(1, 0, 1, 1, k, order)) *
                   invert(poch(1, 0, 1, 1, k + r, order));
        },
        order);
    return invert(poch_inf(1, 0, 1, 1, order)) * inner;
}

ZQSeries lemma1_enumerated(int r, TruncOrder order) {
    const int n_max = order.value();
    // upto[b][m]: partitions of b with largest part <= m (m capped at b).
    std::vector<std::vector<Coeff>> upto(n_max + 1);
    std::vector<std::vector<Partition>> all(n_max + 1);
    for (int b = 0; b <= n_max; ++b) {
        all[b] = gen_partitions(b);
        upto[b].assign(b + 1, 0);
        for (const Partition& p : all[b]) {
            upto[b][p.largest()] += 1;
        }
        for (int m = 1; m <= b; ++m) {
            upto[b][m] += upto[b][m - 1];
        }
    }
    ZQSeries out(order);
    for (int a = 0; a <= n_max; ++a) {
        for (const Partition& lambda : all[a]) {
            const int bound = lambda.largest() + r;
            for (int b = 0; a + b <= n_max; ++b) {
                out.accumulate(0, a + b, upto[b][std::min(bound, b)]);
            }
        }
    }
    return out;
}

ZQSeries section3_enumerated(TruncOrder order) {
    ZQSeries out(order);
    for (int n = 0; n <= order.value(); ++n) {
        for (const Partition& p : gen_eo_star(n)) {
            out.accumulate(0, n, alternating(largest_even_part(p) / 2));
        }
    }
    return out;
}

ZQSeries section3_k_sum(TruncOrder order) {
    return sum_until_stable(
        [&](int k) {
            const ZQSeries lead = signed_q_power(alternating(k), 2LL * k, order);
            if (lead.is_zero()) {
                return lead;
            }
            return lead * invert(poch(1, 0, 4, 4, k, order)) *
                   invert(poch_inf(1, 0, 4 * k + 2, 4, order));
        },
        order);
}

ZQSeries section3_closed_form(TruncOrder order) {
    return poch_inf(-1, 0, 4, 4, order) * invert(poch_inf(1, 0, 4, 8, order));
}

ZQSeries eobar_k_sum(TruncOrder order, bool weighted) {
    const ZMonomial z{};
    return sum_until_stable(
        [&](int k) {
            if (k == 0) {
                return eobar_prefactor(z, order);
            }
            const ZQSeries lead = signed_q_power(weighted ? alternating(k) : 1, 2LL * k, order);
            if (lead.is_zero()) {
                return lead;
            }
            ZQSeries one_plus_z = ZQSeries::one(order) + monomial(1, 1, 0, order);
            return lead * one_plus_z * poch(-1, 1, 4, 4, k - 1, order) *
                   poch_inf(-1, 1, 4 * k + 2, 4, order) * invert(poch(1, 0, 4, 4, k, order)) *
                   invert(poch_inf(1, 0, 4 * k + 2, 4, order));
        },
        order);
}

ZQSeries eobar_single_sum(TruncOrder order, bool weighted) {
    const ZMonomial z{};
    const ZQSeries inner = sum_until_stable(
        [&](int k) {
            const ZQSeries lead = signed_q_power(weighted ? alternating(k) : 1, 2LL * k, order);
            if (lead.is_zero()) {
                return lead;
            }
            return lead * poch(-1, 1, 0, 4, k, order) * poch(1, 0, 2, 4, k, order) *
                   invert(poch(1, 0, 4, 4, k, order)) * invert(poch(-1, 1, 2, 4, k, order));
        },
        order);
    return eobar_prefactor(z, order) * inner;
}

ZQSeries gfover_closed_form(TruncOrder order) {
    return gfover_closed(ZMonomial{}, order);
}

} // namespace sides

VerificationReport verify_eq1(int order) {
    const TruncOrder n(order);
    ReportBuilder b("eq1", order);
    b.compare("enumeration vs (q^4;q^4)_inf/(q^2;q^4)_inf^2", sides::eq1_enumerated(n),
              sides::eq1_product(n), eo_members_at);
    return b.done();
}

VerificationReport verify_eq2(int order) {
    const TruncOrder n(order);
    ReportBuilder b("eq2", order);
    b.compare("crank enumeration vs (q^4;q^4)_inf/((z^2q^2;q^4)_inf (z^-2q^2;q^4)_inf)",
              crank_series(n), sides::eq2_product(n), eo_members_at);
    return b.done();
}

VerificationReport verify_crank_symmetry(int order) {
    const TruncOrder n(order);
    ReportBuilder b("crank-symmetry", order);
    const ZQSeries crank = crank_series(n);
    b.compare("crank series vs crank series with z -> 1/z", crank, reflect_z(crank),
              eo_members_at);
    b.compare("crank series vs product", crank, sides::eq2_product(n), eo_members_at);
    b.compare("crank series at z=1 vs enumeration count", ZQSeries::from_q(eval_z(crank, 1)),
              sides::eq1_enumerated(n), eo_members_at);
    return b.done();
}

VerificationReport verify_lemma1(int r, int order) {
    if (r < 0) {
        throw ParameterError("lemma1 needs r >= 0");
    }
    const TruncOrder n(order);
    ReportBuilder b("lemma1", order);
    b.param("r", r);
    const ZQSeries left = sides::lemma1_left_sum(r, n);
    const ZQSeries right = sides::lemma1_right_sum(r, n);
    const ZQSeries pairs = sides::lemma1_enumerated(r, n);
    b.compare("sum q^k/((q)_k (q)_{k+r}) vs (1/(q)_inf) sum q^{k(k+r+1)}/((q)_k (q)_{k+r})", left,
              right);
    b.compare("sum q^k/((q)_k (q)_{k+r}) vs enumeration of P_k x P_{<=k+r}", left, pairs);
    return b.done();
}

VerificationReport verify_lemma2(int r, int order) {
    if (r < 0) {
        throw ParameterError("lemma2 needs r >= 0");
    }
    const TruncOrder n(order);
    ReportBuilder b("lemma2", order);
    b.param("r", r);
    PairEnumerator pairs(r);

    ZQSeries left(n);
    std::map<PartitionPair, int> hits;
    for (int t = 0; t <= order; ++t) {
        for (const PartitionPair& p : pairs.ostar_pairs(t)) {
            left.accumulate(0, t, 1);
            hits.emplace(p, 0);
        }
    }
    ZQSeries right(n);
    std::vector<PartitionPair> outside;
    for (int w = 0; 4 * w + 2 * r <= order; ++w) {
        for (const auto& [lambda, pi] : pairs.phi_domain(w)) {
            right.accumulate(0, 4 * w + 2 * r, 1);
            const PartitionPair image = lemma2_forward(lambda, pi, r);
            auto it = hits.find(image);
            if (it == hits.end()) {
                outside.push_back(image);
            } else {
                ++it->second;
            }
        }
    }
    b.compare("enumeration of O*_k x O*_{k+r} vs enumeration of P_k x P_{<=k+r} at 4w+2r", left,
              right);
    b.check("forward map hits every element of O*_k x O*_{k+r} exactly once");
    for (const PartitionPair& p : outside) {
        b.fail("forward image outside O*_k x O*_{k+r}", p.first.weight() + p.second.weight(), 0, 0,
               1);
    }
    for (const auto& [p, count] : hits) {
        if (count != 1) {
            b.fail("forward map hits (" + to_string(p.first) + ", " + to_string(p.second) + ") " +
                       std::to_string(count) + " times",
                   p.first.weight() + p.second.weight(), 0, count, 1);
        }
    }
    return b.done();
}

VerificationReport verify_lemma3(int r, int order) {
    if (r < 0) {
        throw ParameterError("lemma3 needs r >= 0");
    }
    const TruncOrder n(order);
    ReportBuilder b("lemma3", order);
    b.param("r", r);
    PairEnumerator pairs(r);

    ZQSeries left(n);
    std::map<PartitionPair, int> hits;
    for (int t = 0; t <= order; ++t) {
        for (const PartitionPair& p : pairs.eo_pairs(t)) {
            left.accumulate(0, t, 1);
            hits.emplace(p, 0);
        }
    }
    ZQSeries right(n);
    std::vector<PartitionPair> outside;
    for (int w = 0; 4 * w + 2 * r <= order; ++w) {
        for (const auto& [mu, nu] : pairs.q_pairs(w)) {
            right.accumulate(0, 4 * w + 2 * r, 1);
            const PartitionPair image = lemma3_forward(mu, nu, r);
            auto it = hits.find(image);
            if (it == hits.end()) {
                outside.push_back(image);
            } else {
                ++it->second;
            }
        }
    }
    b.compare("enumeration of E* x EO*_{k,r} vs enumeration of P x Q_{k,r} at 4w+2r", left, right);
    b.check("forward map hits every element of E* x EO*_{k,r} exactly once");
    for (const PartitionPair& p : outside) {
        b.fail("forward image outside E* x EO*_{k,r}", p.first.weight() + p.second.weight(), 0, 0,
               1);
    }
    for (const auto& [p, count] : hits) {
        if (count != 1) {
            b.fail("forward map hits (" + to_string(p.first) + ", " + to_string(p.second) + ") " +
                       std::to_string(count) + " times",
                   p.first.weight() + p.second.weight(), 0, count, 1);
        }
    }
    return b.done();
}

VerificationReport verify_qbinomial(const QBinomialParams& params, int order) {
    if (params.z.exp < 1) {
        throw ParameterError("q-binomial check needs z = +-q^e with e >= 1");
    }
    if (params.base < 1) {
        throw ParameterError("q-binomial check needs base >= 1");
    }
    if (params.a && params.a->exp < 0) {
        throw ParameterError("q-binomial check needs a = +-q^e with e >= 0");
    }
    const TruncOrder n(order);
    const int base = params.base;
    const SignedMonomial z = params.z;
    ReportBuilder b("qbinomial", order);
    if (params.a) {
        b.param("a_sign", params.a->sign).param("a_exp", params.a->exp);
    }
    b.param("z_sign", z.sign).param("z_exp", z.exp).param("base", base);

    const ZQSeries left = sum_until_stable(
        [&](int k) {
            const int sign = z.sign < 0 ? alternating(k) : 1;
            const ZQSeries lead = signed_q_power(sign, static_cast<long long>(k) * z.exp, n);
            if (lead.is_zero()) {
                return lead;
            }
            ZQSeries term = lead * invert(poch(1, 0, base, base, k, n));
            if (params.a) {
                term = term * poch(params.a->sign, 0, params.a->exp, base, k, n);
            }
            return term;
        },
        n);
    ZQSeries right = invert(poch_inf(z.sign, 0, z.exp, base, n));
    if (params.a) {
        right = right * poch_inf(params.a->sign * z.sign, 0, params.a->exp + z.exp, base, n);
    }
    b.compare("sum (a;p)_n z^n/(p;p)_n vs (az;p)_inf/(z;p)_inf", left, right);
    return b.done();
}

VerificationReport verify_section3(int order) {
    const TruncOrder n(order);
    ReportBuilder b("section3", order);
    const ZQSeries enumerated = sides::section3_enumerated(n);
    const ZQSeries k_sum = sides::section3_k_sum(n);
    const ZQSeries binomial_form =
        invert(poch_inf(1, 0, 2, 4, n)) *
        sum_until_stable(
            [&](int k) {
                const ZQSeries lead = signed_q_power(alternating(k), 2LL * k, n);
                if (lead.is_zero()) {
                    return lead;
                }
                return lead * poch(1, 0, 2, 4, k, n) * invert(poch(1, 0, 4, 4, k, n));
            },
            n);
    const ZQSeries summed_form = invert(poch_inf(1, 0, 2, 4, n)) * poch_inf(-1, 0, 4, 4, n) *
                                 invert(poch_inf(-1, 0, 2, 4, n));
    const ZQSeries closed = sides::section3_closed_form(n);

    b.compare("signed enumeration vs sum (-q^2)^k/((q^4;q^4)_k (q^{4k+2};q^4)_inf)", enumerated,
              k_sum, eo_members_at);
    b.compare("k-sum vs (1/(q^2;q^4)_inf) sum (q^2;q^4)_k (-q^2)^k/(q^4;q^4)_k", k_sum,
              binomial_form);
    b.compare("q-binomial form vs (-q^4;q^4)_inf/((q^2;q^4)_inf (-q^2;q^4)_inf)", binomial_form,
              summed_form);
    b.compare("summed form vs (-q^4;q^4)_inf/(q^4;q^8)_inf", summed_form, closed);
    b.compare("signed enumeration vs closed form", enumerated, closed, eo_members_at);
    check_positive_on_multiples_of_4(b, "eo0(n) - eo2(n) is >= 0 and vanishes unless 4 | n",
                                     enumerated, eo_members_at);
    return b.done();
}

VerificationReport verify_bailey_daum(ZChoice z, int order) {
    const TruncOrder n(order);
    ReportBuilder b("bailey-daum", order);
    ZMonomial zm{};
    switch (z.kind) {
    case ZChoice::Kind::Generic:
        b.note("z generic");
        break;
    case ZChoice::Kind::Zero:
        b.note("z = 0");
        b.param("z", 0);
        break;
    case ZChoice::Kind::QPower:
        if (z.exp < 0) {
            throw ParameterError("bailey-daum needs z = q^e with e >= 0");
        }
        zm = ZMonomial{0, z.exp};
        b.note(z.exp == 0 ? std::string("z = 1") : "z = q^" + std::to_string(z.exp));
        b.param("z_exp", z.exp);
        break;
    }

    auto specialize = [&](const ZQSeries& s) {
        return z.kind == ZChoice::Kind::Zero ? ZQSeries::from_q(eval_z(s, 0)) : s;
    };
    const ZQSeries sum = specialize(bailey_daum_sum(zm, n));
    const ZQSeries product = specialize(bailey_daum_product(zm, n));
    const ZQSeries full = specialize(eobar_prefactor(zm, n)) * sum;

    b.compare("sum (-z;q^4)_k (q^2;q^4)_k (-q^2)^k/((q^4;q^4)_k (-zq^2;q^4)_k) vs product", sum,
              product);
    if (z.kind == ZChoice::Kind::Zero) {
        b.compare("prefactor * sum vs (-q^4;q^4)_inf/(q^4;q^8)_inf", full,
                  sides::section3_closed_form(n));
    } else if (z.kind == ZChoice::Kind::QPower && z.exp == 0) {
        b.compare("prefactor * sum vs (-q^4;q^4)_inf (-q^4;q^8)_inf^2/(q^4;q^8)_inf", full,
                  ZQSeries::from_q(eval_z(sides::gfover_closed_form(n), 1)));
    } else {
        b.compare("prefactor * sum vs (-q^4;q^4)_inf (-zq^4;q^8)_inf^2/(q^4;q^8)_inf", full,
                  gfover_closed(zm, n));
    }
    return b.done();
}

VerificationReport verify_heine3(const HeineParams& params, int order) {
    if (params.z_exp < 1) {
        throw ParameterError("heine3 needs z = q^e with e >= 1");
    }
    if (params.c_exp < 1) {
        throw ParameterError("heine3 needs c = q^e with e >= 1");
    }
    const auto& a = params.a_exp;
    const auto& bb = params.b_exp;
    const int c = params.c_exp;
    const int z = params.z_exp;
    if ((a && (*a < 0 || *a > c)) || (bb && (*bb < 0 || *bb > c))) {
        throw ParameterError("heine3 needs 0 <= a_exp, b_exp <= c_exp so that c/a, c/b are q-powers");
    }
    if (a && bb && *a + *bb + z - c < 1) {
        throw ParameterError("heine3 needs abz/c = q^e with e >= 1");
    }
    const TruncOrder n(order);
    ReportBuilder b("heine3", order);
    if (a) {
        b.param("a_exp", *a);
    }
    if (bb) {
        b.param("b_exp", *bb);
    }
    b.param("c_exp", c).param("z_exp", z);
    if (!a || !bb) {
        b.note("omitted parameters are taken in the limit a, b -> 0");
    }

    const ZQSeries left = sum_until_stable(
        [&](int k) {
            const ZQSeries lead = signed_q_power(1, static_cast<long long>(k) * z, n);
            if (lead.is_zero()) {
                return lead;
            }
            ZQSeries term = lead * invert(poch(1, 0, 1, 1, k, n)) * invert(poch(1, 0, c, 1, k, n));
            if (a) {
                term = term * poch(1, 0, *a, 1, k, n);
            }
            if (bb) {
                term = term * poch(1, 0, *bb, 1, k, n);
            }
            return term;
        },
        n);

    // Right side term k: (c/a)_k (c/b)_k (abz/c)^k / ((q)_k (c)_k), with the
    // a -> 0 limit of (c/a)_k a^k being (-c)^k q^{k(k-1)/2}.
    const ZQSeries inner = sum_until_stable(
        [&](int k) {
            long long q_exp = static_cast<long long>(k) * (z - c);
            int sign = 1;
            ZQSeries factors = ZQSeries::one(n);
            for (const auto& p : {a, bb}) {
                if (p) {
                    q_exp += static_cast<long long>(k) * *p;
                    factors = factors * poch(1, 0, c - *p, 1, k, n);
                } else {
                    q_exp += static_cast<long long>(k) * c + static_cast<long long>(k) * (k - 1) / 2;
                    sign *= alternating(k);
                }
            }
            const ZQSeries lead = signed_q_power(sign, q_exp, n);
            if (lead.is_zero()) {
                return lead;
            }
            return lead * factors * invert(poch(1, 0, 1, 1, k, n)) *
                   invert(poch(1, 0, c, 1, k, n));
        },
        n);
    ZQSeries right = invert(poch_inf(1, 0, z, 1, n)) * inner;
    if (a && bb) {
        right = right * poch_inf(1, 0, *a + *bb + z - c, 1, n);
    }
    b.compare("sum (a)_n (b)_n z^n/((q)_n (c)_n) vs transformed sum", left, right);

    if (!a && !bb && z == 1) {
        // Rectangle-identity configuration: left side is (q;q)_{c-1} times its left sum.
        const int r = c - 1;
        b.param("r", r);
        b.compare("left side vs (q;q)_r * sum q^k/((q)_k (q)_{k+r})", left,
                  poch(1, 0, 1, 1, r, n) * sides::lemma1_left_sum(r, n));
        b.compare("transformed side vs (q;q)_r * (1/(q)_inf) sum q^{k(k+r+1)}/((q)_k (q)_{k+r})",
                  right, poch(1, 0, 1, 1, r, n) * sides::lemma1_right_sum(r, n));
    }
    return b.done();
}

VerificationReport verify_gfover(int order) {
    const TruncOrder n(order);
    ReportBuilder b("gfover", order);
    const ZQSeries enumerated = eobar_weighted_series(n, true);
    const ZQSeries k_sum = sides::eobar_k_sum(n, true);
    const ZQSeries single = sides::eobar_single_sum(n, true);
    const ZQSeries closed = sides::gfover_closed_form(n);
    b.compare("weighted enumeration vs k-sum with (-q^2)^k", enumerated, k_sum, eobar_members_at);
    b.compare("k-sum vs single-sum form", k_sum, single);
    b.compare("weighted enumeration vs (-q^4;q^4)_inf (-zq^4;q^8)_inf^2/(q^4;q^8)_inf", enumerated,
              closed, eobar_members_at);
    check_positive_on_multiples_of_4(b, "weighted series is >= 0 and vanishes unless 4 | n",
                                     enumerated, eobar_members_at);
    return b.done();
}

VerificationReport verify_eobar_unweighted(int order) {
    const TruncOrder n(order);
    ReportBuilder b("eobar-unweighted", order);
    const ZQSeries enumerated = eobar_weighted_series(n, false);
    b.compare("enumeration vs k-sum with q^{2k}", enumerated, sides::eobar_k_sum(n, false),
              eobar_members_at);
    b.compare("enumeration vs single-sum form", enumerated, sides::eobar_single_sum(n, false),
              eobar_members_at);
    b.compare("enumeration at z=0 vs the even-odd count", ZQSeries::from_q(eval_z(enumerated, 0)),
              sides::eq1_enumerated(n));
    return b.done();
}

namespace {

VerificationReport verify_class_inequality(const std::string& name,
                                           const std::vector<ClassCountRow>& rows, int max_n,
                                           const WitnessFn& witnesses) {
    ReportBuilder b(name, max_n);
    b.check("c0(n) = c2(n) when 4 does not divide n");
    b.check("c0(n) > c2(n) when 4 divides n, n > 0");
    for (const ClassCountRow& row : rows) {
        if (row.n % 4 != 0 && row.c0 != row.c2) {
            b.fail("c0(n) = c2(n) when 4 does not divide n", row.n, 0, row.c0, row.c2, witnesses);
        } else if (row.n % 4 == 0 && row.n > 0 && row.c0 <= row.c2) {
            b.fail("c0(n) > c2(n) when 4 divides n", row.n, 0, row.c0, row.c2, witnesses);
        }
    }
    for (const ClassCountRow& row : rows) {
        if (row.n == 2 || row.n == 4 || row.n == 6 || row.n == 8) {
            b.note("row (" + std::to_string(row.n) + ", " + std::to_string(row.c0) + ", " +
                   std::to_string(row.c2) + ")");
        }
    }
    return b.done();
}

} // namespace

VerificationReport verify_theorem1(int max_n) {
    VerificationReport rep = verify_class_inequality("theorem1", eo_table(max_n), max_n,
                                                     eo_members_at);
    if (max_n >= 8) {
        rep.notes.push_back(
            "the eo2 member of weight 8 is (3,3,2); 3+2+2 is not a member (3 has odd "
            "multiplicity and the largest even part 2 has even multiplicity)");
    }
    return rep;
}

VerificationReport verify_theorem2(int max_n) {
    return verify_class_inequality("theorem2", eobar_table(max_n), max_n, eobar_members_at);
}

namespace {

std::vector<int> r_grid(const CatalogOptions& o, int top) {
    if (o.r) {
        return {*o.r};
    }
    std::vector<int> out;
    for (int r = 0; r <= top; ++r) {
        out.push_back(r);
    }
    return out;
}

std::vector<CatalogEntry> build_catalog() {
    using Reports = std::vector<VerificationReport>;
    std::vector<CatalogEntry> c;
    c.push_back({"eq1", "even-odd partitions vs (q^4;q^4)/(q^2;q^4)^2",
                 [](const CatalogOptions& o) { return Reports{verify_eq1(o.order)}; }});
    c.push_back({"eq2", "crank generating function vs its product",
                 [](const CatalogOptions& o) { return Reports{verify_eq2(o.order)}; }});
    c.push_back({"crank-symmetry", "crank series is symmetric under z -> 1/z",
                 [](const CatalogOptions& o) { return Reports{verify_crank_symmetry(o.order)}; }});
    c.push_back({"lemma1", "three-way check of the Durfee-rectangle identity (r = 0..4)",
                 [](const CatalogOptions& o) {
                     Reports out;
                     for (int r : r_grid(o, 4)) {
                         out.push_back(verify_lemma1(r, o.order));
                     }
                     return out;
                 }});
    c.push_back({"lemma2", "O*_k x O*_{k+r} vs quadrupled P_k x P_{<=k+r} (r = 0..2)",
                 [](const CatalogOptions& o) {
                     Reports out;
                     for (int r : r_grid(o, 2)) {
                         out.push_back(verify_lemma2(r, o.order));
                     }
                     return out;
                 }});
    c.push_back({"lemma3", "E* x EO*_{k,r} vs quadrupled P x Q_{k,r} (r = 0..2)",
                 [](const CatalogOptions& o) {
                     Reports out;
                     for (int r : r_grid(o, 2)) {
                         out.push_back(verify_lemma3(r, o.order));
                     }
                     return out;
                 }});
    c.push_back({"qbinomial", "q-binomial theorem: a=q^2, z=-q^2, base 4; and a=0, z=q, base 1",
                 [](const CatalogOptions& o) {
                     return Reports{
                         verify_qbinomial({SignedMonomial{1, 2}, SignedMonomial{-1, 2}, 4},
                                          o.order),
                         verify_qbinomial({std::nullopt, SignedMonomial{1, 1}, 1}, o.order)};
                 }});
    c.push_back({"section3", "eo0 - eo2 via enumeration, k-sum, q-binomial chain, closed form",
                 [](const CatalogOptions& o) { return Reports{verify_section3(o.order)}; }});
    c.push_back({"bailey-daum", "Bailey-Daum application, z generic, z=0 and z=1",
                 [](const CatalogOptions& o) {
                     if (o.z_exp) {
                         return Reports{verify_bailey_daum(ZChoice::q_power(*o.z_exp), o.order)};
                     }
                     return Reports{verify_bailey_daum(ZChoice::generic(), o.order),
                                    verify_bailey_daum(ZChoice::zero(), o.order),
                                    verify_bailey_daum(ZChoice::q_power(0), o.order)};
                 }});
    c.push_back({"heine3", "Heine's third transformation: a,b -> 0 with c=q^{r+1}, z=q; a=q, b=q^2, "
                           "c=q^3, z=q",
                 [](const CatalogOptions& o) {
                     Reports out;
                     for (int r : r_grid(o, 2)) {
                         out.push_back(verify_heine3({std::nullopt, std::nullopt, r + 1, 1}, o.order));
                     }
                     if (!o.r) {
                         out.push_back(verify_heine3({1, 2, 3, 1}, o.order));
                     }
                     return out;
                 }});
    c.push_back({"gfover", "weighted overpartitions: enumeration, k-sums, closed form",
                 [](const CatalogOptions& o) { return Reports{verify_gfover(o.order)}; }});
    c.push_back({"eobar-unweighted", "overpartitions: enumeration vs both k-sum forms",
                 [](const CatalogOptions& o) { return Reports{verify_eobar_unweighted(o.order)}; }});
    c.push_back({"theorem1", "eo0(n) = eo2(n) unless 4 | n, where eo0(n) > eo2(n)",
                 [](const CatalogOptions& o) { return Reports{verify_theorem1(o.order)}; }});
    c.push_back({"theorem2", "same inequality for overpartitions",
                 [](const CatalogOptions& o) { return Reports{verify_theorem2(o.order)}; }});
    return c;
}

} // namespace

const std::vector<CatalogEntry>& catalog() {
    static const std::vector<CatalogEntry> entries = build_catalog();
    return entries;
}

const CatalogEntry* find_catalog_entry(const std::string& name) {
    for (const CatalogEntry& e : catalog()) {
        if (e.name == name) {
            return &e;
        }
    }
    return nullptr;
}

} // namespace eolab
