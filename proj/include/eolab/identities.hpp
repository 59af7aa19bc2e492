#pragma once

// Truncated verification of the generating-function identities for the
// even-parts-below-odd-parts family. Every check builds its sides through
// independent pipelines (enumeration, q-Pochhammer products, term-wise sums)
// and compares them coefficient by coefficient up to the truncation order.

#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "eolab/series.hpp"

namespace eolab {

struct ReportMismatch {
    // Which comparison failed, e.g. "enumeration vs product".
    std::string comparison;
    int n = 0;
    int m = 0;
    Coeff left = 0;
    Coeff right = 0;
};

struct VerificationReport {
    std::string name;
    int order = 0;
    std::vector<std::pair<std::string, long long>> params;
    // Labels of the comparisons that were run, in order.
    std::vector<std::string> checks;
    std::optional<ReportMismatch> mismatch;
    // Enumerated objects at the mismatching weight, when one side enumerates.
    std::vector<std::string> witnesses;
    std::vector<std::string> notes;

    bool passed() const noexcept { return !mismatch.has_value(); }
};

// sign * q^exp.
struct SignedMonomial {
    int sign = 1;
    int exp = 0;
};

// Parameters of sum_n (a; p)_n z^n / (p; p)_n = (az; p)_inf / (z; p)_inf with p = q^base.
// An empty a is the a = 0 specialization.
struct QBinomialParams {
    std::optional<SignedMonomial> a;
    SignedMonomial z{1, 1};
    int base = 1;
};

// How z enters a formal-z identity.
struct ZChoice {
    enum class Kind { Generic, Zero, QPower };
    Kind kind = Kind::Generic;
    // z = q^exp for QPower (exp = 0 is z = 1).
    int exp = 0;

    static ZChoice generic() { return {Kind::Generic, 0}; }
    static ZChoice zero() { return {Kind::Zero, 0}; }
    static ZChoice q_power(int e) { return {Kind::QPower, e}; }
};

// Heine's third transformation with a = q^a_exp, b = q^b_exp, c = q^c_exp,
// z = q^z_exp. An empty a or b is the limit of that parameter tending to 0.
struct HeineParams {
    std::optional<int> a_exp;
    std::optional<int> b_exp;
    int c_exp = 1;
    int z_exp = 1;
};

// Independent constructions of the individual sides, exposed for tests and
// diagnostics. Names describe how the series is built.
namespace sides {

ZQSeries eq1_enumerated(TruncOrder order);
ZQSeries eq1_product(TruncOrder order);
ZQSeries eq2_product(TruncOrder order);
ZQSeries lemma1_left_sum(int r, TruncOrder order);
ZQSeries lemma1_right_sum(int r, TruncOrder order);
ZQSeries lemma1_enumerated(int r, TruncOrder order);
ZQSeries section3_enumerated(TruncOrder order);
ZQSeries section3_k_sum(TruncOrder order);
ZQSeries section3_closed_form(TruncOrder order);
// Overpartition sums with the (+-q^2)^k factor; weighted selects the minus sign.
ZQSeries eobar_k_sum(TruncOrder order, bool weighted);
ZQSeries eobar_single_sum(TruncOrder order, bool weighted);
ZQSeries gfover_closed_form(TruncOrder order);

} // namespace sides

VerificationReport verify_eq1(int order);
VerificationReport verify_eq2(int order);
// z <-> 1/z symmetry of the crank series, and its agreement with the product side.
VerificationReport verify_crank_symmetry(int order);
VerificationReport verify_lemma1(int r, int order);
VerificationReport verify_lemma2(int r, int order);
VerificationReport verify_lemma3(int r, int order);
// Throws ParameterError for z.exp < 1 or base < 1.
VerificationReport verify_qbinomial(const QBinomialParams& params, int order);
VerificationReport verify_section3(int order);
VerificationReport verify_bailey_daum(ZChoice z, int order);
// Throws ParameterError on nonconvergent exponents.
VerificationReport verify_heine3(const HeineParams& params, int order);
VerificationReport verify_gfover(int order);
VerificationReport verify_eobar_unweighted(int order);
VerificationReport verify_theorem1(int max_n);
VerificationReport verify_theorem2(int max_n);

struct CatalogOptions {
    int order = 30;
    std::optional<int> r;
    std::optional<int> z_exp;
};

struct CatalogEntry {
    std::string name;
    std::string summary;
    std::function<std::vector<VerificationReport>(const CatalogOptions&)> run;
};

// Every registered identity with its default parameter grid, in a fixed order.
const std::vector<CatalogEntry>& catalog();
const CatalogEntry* find_catalog_entry(const std::string& name);

} // namespace eolab
