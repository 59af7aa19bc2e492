#pragma once

// Exhaustive round-trip checks for the bijections. Each harness enumerates
// the whole domain and the whole codomain up to a weight bound, runs both
// directions on every element and checks weight laws, set membership, case
// separation, injectivity and equal cardinality weight by weight.

#include <map>
#include <string>
#include <vector>

#include "eolab/bijections.hpp"

namespace eolab {

// Enumerates the domains and codomains of the bijections by total weight,
// caching the underlying partition lists. Not thread-safe.
class PairEnumerator {
public:
    explicit PairEnumerator(int r);

    int r() const noexcept { return r_; }

    // (lambda, pi) with lambda_1 = k and pi_1 <= k + r.
    std::vector<PartitionPair> phi_domain(int weight);
    // (mu, nu) with nu in some Q_{t,r}.
    std::vector<PartitionPair> q_pairs(int weight);
    // Union over k of O*_k x O*_{k+r}.
    std::vector<PartitionPair> ostar_pairs(int weight);
    // E* x (union over k of EO*_{k,r}).
    std::vector<PartitionPair> eo_pairs(int weight);

private:
    const std::vector<Partition>& partitions_of(int n);
    const std::vector<Partition>& eo_kr_of(int n);
    const std::vector<Partition>& e_star_of(int n);

    int r_;
    std::vector<std::vector<Partition>> partitions_;
    std::vector<std::vector<Partition>> eo_kr_;
    std::vector<std::vector<Partition>> e_star_;
};

enum class BijectionMap { Phi, Lemma2, Lemma3, Crank };

std::string to_string(BijectionMap map);
// Accepts "phi", "lemma2", "lemma3", "crank"; throws ParameterError otherwise.
BijectionMap parse_bijection_map(const std::string& name);

struct HarnessReport {
    BijectionMap map = BijectionMap::Phi;
    int r = 0;
    int max_weight = 0;
    long long domain_size = 0;
    long long codomain_size = 0;
    // Forward-direction element counts by case label.
    std::map<std::string, long long> case_counts;
    long long failure_count = 0;
    // The first few failures, human readable.
    std::vector<std::string> failures;

    bool passed() const noexcept { return failure_count == 0; }
};

// max_weight bounds the input weight: |lambda|+|pi| for phi, lemma2 and
// lemma3 (whose codomains are then checked up to 4*max_weight + 2r), and
// |lambda*|+|pi*| for the composite.
HarnessReport run_harness(BijectionMap map, int r, int max_weight);

} // namespace eolab
