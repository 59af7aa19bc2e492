#pragma once

// Forward and inverse forms of the Young-diagram bijections behind the
// even-odd crank generating function:
//
//   phi     : U_k P_k x P_{<=k+r}  <->  U_k P x Q_{k,r}          (weight preserving)
//   lemma2  : P_k x P_{<=k+r}      <->  O*_k x O*_{k+r}          (|.| -> 4|.| + 2r)
//   lemma3  : P x Q_{k,r}          <->  E* x EO*_{k,r}           (|.| -> 4|.| + 2r)
//   crank   : lemma3 o phi o lemma2^-1, from U_k O*_k x O*_{k+r} to U_k E* x EO*_{k,r}
//
// k is always read off the data; inputs outside a map's domain raise DomainError.

#include <optional>
#include <string>
#include <vector>

#include "eolab/partitions.hpp"

namespace eolab {

enum class PhiCaseKind { Case1, Case2, Case3 };

struct PhiCase {
    PhiCaseKind kind = PhiCaseKind::Case1;
    // Rectangle width of the input partition; only meaningful for Case3 (s >= 1).
    int s = 0;

    friend bool operator==(const PhiCase&, const PhiCase&) = default;
};

std::string to_string(const PhiCase& c);

struct TraceStep {
    std::string label;
    // Empty for a plain annotation.
    std::optional<Partition> snapshot;
};

// Diagnostic record of the intermediate diagrams of a bijection.
class BijectionTrace {
public:
    void add(std::string label, const Partition& p) { steps_.push_back({std::move(label), p}); }
    void note(std::string label) { steps_.push_back({std::move(label), std::nullopt}); }
    const std::vector<TraceStep>& steps() const noexcept { return steps_; }

private:
    std::vector<TraceStep> steps_;
};

struct PartitionPair {
    Partition first;
    Partition second;

    friend bool operator==(const PartitionPair&, const PartitionPair&) = default;
    friend auto operator<=>(const PartitionPair&, const PartitionPair&) = default;
};

struct PhiResult {
    Partition first;
    Partition second;
    PhiCase which;
};

// (lambda, pi) with lambda_1 = k and pi_1 <= k + r, mapped to (mu, nu) with nu in Q_{t,r}.
PhiResult phi_forward(const Partition& lambda, const Partition& pi, int r,
                      BijectionTrace* trace = nullptr);
PhiResult phi_inverse(const Partition& mu, const Partition& nu, int r,
                      BijectionTrace* trace = nullptr);

// Splits every cell into a 2x2 block: each part m becomes two parts 2m.
Partition quadruple(const Partition& p);
// Inverse of quadruple; DomainError unless all parts are even with even multiplicity.
Partition unquadruple(const Partition& p);

PartitionPair lemma2_forward(const Partition& lambda, const Partition& pi, int r,
                             BijectionTrace* trace = nullptr);
PartitionPair lemma2_inverse(const Partition& lambda_star, const Partition& pi_star, int r,
                             BijectionTrace* trace = nullptr);

PartitionPair lemma3_forward(const Partition& mu, const Partition& nu, int r,
                             BijectionTrace* trace = nullptr);
PartitionPair lemma3_inverse(const Partition& mu_star, const Partition& nu_star, int r,
                             BijectionTrace* trace = nullptr);

struct CrankResult {
    Partition first;
    Partition second;
    // Case taken by phi in the middle of the composite.
    PhiCase middle;
};

CrankResult crank_bijection(const Partition& lambda_star, const Partition& pi_star, int r,
                            BijectionTrace* trace = nullptr);
CrankResult crank_bijection_inverse(const Partition& mu_star, const Partition& nu_star, int r,
                                    BijectionTrace* trace = nullptr);

} // namespace eolab
