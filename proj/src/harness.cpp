#include "eolab/harness.hpp"

#include <functional>
#include <set>
#include <sstream>

#include "eolab/bijections.hpp"
#include "eolab/error.hpp"
#include "eolab/partitions.hpp"

namespace eolab {

std::string to_string(BijectionMap map) {
    switch (map) {
    case BijectionMap::Phi:
        return "phi";
    case BijectionMap::Lemma2:
        return "lemma2";
    case BijectionMap::Lemma3:
        return "lemma3";
    case BijectionMap::Crank:
        return "crank";
    }
    return "?";
}

BijectionMap parse_bijection_map(const std::string& name) {
    for (BijectionMap m :
         {BijectionMap::Phi, BijectionMap::Lemma2, BijectionMap::Lemma3, BijectionMap::Crank}) {
        if (to_string(m) == name) {
            return m;
        }
    }
    throw ParameterError("unknown bijection '" + name + "' (expected phi, lemma2, lemma3, crank)");
}

PairEnumerator::PairEnumerator(int r) : r_(r) {
    if (r < 0) {
        throw ParameterError("r must be nonnegative");
    }
}

const std::vector<Partition>& PairEnumerator::partitions_of(int n) {
    while (static_cast<int>(partitions_.size()) <= n) {
        partitions_.push_back(gen_partitions(static_cast<int>(partitions_.size())));
    }
    return partitions_[n];
}

const std::vector<Partition>& PairEnumerator::e_star_of(int n) {
    while (static_cast<int>(e_star_.size()) <= n) {
        e_star_.push_back(gen_e_star(static_cast<int>(e_star_.size())));
    }
    return e_star_[n];
}

const std::vector<Partition>& PairEnumerator::eo_kr_of(int n) {
    while (static_cast<int>(eo_kr_.size()) <= n) {
        const int m = static_cast<int>(eo_kr_.size());
        std::vector<Partition> all;
        for (int k = 0; 2 * k + 2 * r_ <= m; ++k) {
            for (Partition& p : gen_eo_star_kr(m, k, r_)) {
                all.push_back(std::move(p));
            }
        }
        eo_kr_.push_back(std::move(all));
    }
    return eo_kr_[n];
}

std::vector<PartitionPair> PairEnumerator::phi_domain(int w) {
    std::vector<PartitionPair> out;
    partitions_of(w); // fill the cache so references below stay valid
    for (int a = 0; a <= w; ++a) {
        for (const Partition& lambda : partitions_of(a)) {
            for (const Partition& pi : partitions_of(w - a)) {
                if (is_p_upto(pi, lambda.largest() + r_)) {
                    out.push_back({lambda, pi});
                }
            }
        }
    }
    return out;
}

std::vector<PartitionPair> PairEnumerator::q_pairs(int w) {
    std::vector<PartitionPair> out;
    partitions_of(w);
    for (int a = 0; a <= w; ++a) {
        for (const Partition& nu : partitions_of(w - a)) {
            if (!in_q(nu, durfee_width(nu, r_), r_)) {
                continue;
            }
            for (const Partition& mu : partitions_of(a)) {
                out.push_back({mu, nu});
            }
        }
    }
    return out;
}

std::vector<PartitionPair> PairEnumerator::ostar_pairs(int t) {
    std::vector<PartitionPair> out;
    for (int k = 0; 4 * k + 2 * r_ <= t; ++k) {
        for (int a = 0; a <= t; ++a) {
            const std::vector<Partition> left = gen_o_star(a, k);
            if (left.empty()) {
                continue;
            }
            const std::vector<Partition> right = gen_o_star(t - a, k + r_);
            for (const Partition& ls : left) {
                for (const Partition& ps : right) {
                    out.push_back({ls, ps});
                }
            }
        }
    }
    return out;
}

std::vector<PartitionPair> PairEnumerator::eo_pairs(int t) {
    std::vector<PartitionPair> out;
    for (int a = 0; a <= t; ++a) {
        const std::vector<Partition>& evens = e_star_of(a);
        if (evens.empty()) {
            continue;
        }
        for (const Partition& nu_star : eo_kr_of(t - a)) {
            for (const Partition& mu_star : evens) {
                out.push_back({mu_star, nu_star});
            }
        }
    }
    return out;
}

namespace {

constexpr std::size_t kKeptFailures = 20;

using Pairs = std::vector<PartitionPair>;

class Harness {
public:
    Harness(BijectionMap map, int r, int max_weight) : pairs_(r) {
        report_.map = map;
        report_.r = r;
        report_.max_weight = max_weight;
    }

    HarnessReport run() {
        switch (report_.map) {
        case BijectionMap::Phi:
            run_phi();
            break;
        case BijectionMap::Lemma2:
            run_lemma2();
            break;
        case BijectionMap::Lemma3:
            run_lemma3();
            break;
        case BijectionMap::Crank:
            run_crank();
            break;
        }
        return std::move(report_);
    }

private:
    int r() const { return report_.r; }

    void fail(const std::string& what) {
        ++report_.failure_count;
        if (report_.failures.size() < kKeptFailures) {
            report_.failures.push_back(what);
        }
    }

    static std::string show(const Partition& a, const Partition& b) {
        return "(" + to_string(a) + ", " + to_string(b) + ")";
    }

    void count_sizes(const std::string& where, std::size_t domain, std::size_t codomain) {
        report_.domain_size += static_cast<long long>(domain);
        report_.codomain_size += static_cast<long long>(codomain);
        if (domain != codomain) {
            fail(where + ": domain has " + std::to_string(domain) + " elements, codomain " +
                 std::to_string(codomain));
        }
    }

    // Codomains of the quadrupling maps only live on weights 2r mod 4.
    void check_residue_gap(const std::function<Pairs(int)>& codomain) {
        const int top = 4 * report_.max_weight + 2 * r();
        for (int t = 0; t <= top; ++t) {
            if ((t - 2 * r()) % 4 != 0 && !codomain(t).empty()) {
                fail("codomain has elements at weight " + std::to_string(t) +
                     ", which is not 4w + 2r");
            }
        }
    }

    template <typename Body>
    void guarded(const std::string& what, Body&& body) {
        try {
            body();
        } catch (const Error& e) {
            fail(what + ": " + e.what());
        }
    }

    void run_phi() {
        for (int w = 0; w <= report_.max_weight; ++w) {
            const Pairs domain = phi_domain(w);
            const Pairs codomain = q_pairs(w);
            count_sizes("weight " + std::to_string(w), domain.size(), codomain.size());
            std::set<PartitionPair> images;
            for (const auto& [lambda, pi] : domain) {
                guarded("phi" + show(lambda, pi), [&] {
                    const PhiResult out = phi_forward(lambda, pi, r());
                    const Partition& mu = out.first;
                    const Partition& nu = out.second;
                    const std::string tag = "phi" + show(lambda, pi) + " = " + show(mu, nu);
                    report_.case_counts[to_string(out.which).substr(0, 5)] += 1;
                    if (mu.weight() + nu.weight() != w) {
                        fail(tag + ": weight not preserved");
                    }
                    const int t = durfee_width(nu, r());
                    if (!in_q(nu, t, r())) {
                        fail(tag + ": nu outside every Q_{t,r}");
                    }
                    const bool above = nu.largest() > mu.largest() + r();
                    switch (out.which.kind) {
                    case PhiCaseKind::Case1:
                        if (above) {
                            fail(tag + ": CASE1 image has nu_1 > mu_1 + r");
                        }
                        break;
                    case PhiCaseKind::Case2:
                        if (!above || t != 1) {
                            fail(tag + ": CASE2 image not separated (width " + std::to_string(t) +
                                 ")");
                        }
                        break;
                    case PhiCaseKind::Case3:
                        if (!above || t != out.which.s + 1 || t < 2) {
                            fail(tag + ": CASE3 image not separated (width " + std::to_string(t) +
                                 ")");
                        }
                        break;
                    }
                    const PhiResult back = phi_inverse(mu, nu, r());
                    if (back.first != lambda || back.second != pi || !(back.which == out.which)) {
                        fail(tag + ": inverse gives " + show(back.first, back.second));
                    }
                    if (!images.insert({mu, nu}).second) {
                        fail(tag + ": image already hit");
                    }
                });
            }
            for (const auto& [mu, nu] : codomain) {
                guarded("phi^-1" + show(mu, nu), [&] {
                    const PhiResult back = phi_inverse(mu, nu, r());
                    const std::string tag = "phi^-1" + show(mu, nu);
                    if (!is_p_upto(back.second, back.first.largest() + r())) {
                        fail(tag + ": preimage outside P_k x P_{<=k+r}");
                    }
                    const PhiResult again = phi_forward(back.first, back.second, r());
                    if (again.first != mu || again.second != nu) {
                        fail(tag + ": forward of inverse gives " + show(again.first, again.second));
                    }
                });
            }
        }
    }

    void run_lemma2() {
        for (int w = 0; w <= report_.max_weight; ++w) {
            const Pairs domain = phi_domain(w);
            const int target = 4 * w + 2 * r();
            const Pairs codomain = ostar_pairs(target);
            count_sizes("input weight " + std::to_string(w), domain.size(), codomain.size());
            std::set<PartitionPair> images;
            for (const auto& [lambda, pi] : domain) {
                guarded("lemma2" + show(lambda, pi), [&] {
                    const int k = lambda.largest();
                    const PartitionPair out = lemma2_forward(lambda, pi, r());
                    const std::string tag =
                        "lemma2" + show(lambda, pi) + " = " + show(out.first, out.second);
                    report_.case_counts["k=" + std::to_string(k)] += 1;
                    if (out.first.weight() + out.second.weight() != target) {
                        fail(tag + ": weight law 4|lambda|+4|pi|+2r violated");
                    }
                    if (!is_o_star(out.first, k) || !is_o_star(out.second, k + r())) {
                        fail(tag + ": image outside O*_k x O*_{k+r}");
                    }
                    const PartitionPair back = lemma2_inverse(out.first, out.second, r());
                    if (back.first != lambda || back.second != pi) {
                        fail(tag + ": inverse gives " + show(back.first, back.second));
                    }
                    if (!images.insert(out).second) {
                        fail(tag + ": image already hit");
                    }
                });
            }
            for (const auto& [ls, ps] : codomain) {
                guarded("lemma2^-1" + show(ls, ps), [&] {
                    const PartitionPair back = lemma2_inverse(ls, ps, r());
                    const PartitionPair again = lemma2_forward(back.first, back.second, r());
                    if (again.first != ls || again.second != ps) {
                        fail("lemma2^-1" + show(ls, ps) + ": forward of inverse gives " +
                             show(again.first, again.second));
                    }
                });
            }
        }
        check_residue_gap([this](int t) { return ostar_pairs(t); });
    }

    void run_lemma3() {
        for (int w = 0; w <= report_.max_weight; ++w) {
            const Pairs domain = q_pairs(w);
            const int target = 4 * w + 2 * r();
            const Pairs codomain = eo_pairs(target);
            count_sizes("input weight " + std::to_string(w), domain.size(), codomain.size());
            std::set<PartitionPair> images;
            for (const auto& [mu, nu] : domain) {
                guarded("lemma3" + show(mu, nu), [&] {
                    const int k = durfee_width(nu, r());
                    const PartitionPair out = lemma3_forward(mu, nu, r());
                    const std::string tag =
                        "lemma3" + show(mu, nu) + " = " + show(out.first, out.second);
                    report_.case_counts["k=" + std::to_string(k)] += 1;
                    if (out.first.weight() + out.second.weight() != target) {
                        fail(tag + ": weight law 4|mu|+4|nu|+2r violated");
                    }
                    if (!is_e_star(out.first) || !is_eo_star_kr(out.second, k, r())) {
                        fail(tag + ": image outside E* x EO*_{k,r}");
                    }
                    if (eoc(out.second) != 2 * r()) {
                        fail(tag + ": eoc(nu*) != 2r");
                    }
                    const PartitionPair back = lemma3_inverse(out.first, out.second, r());
                    if (back.first != mu || back.second != nu) {
                        fail(tag + ": inverse gives " + show(back.first, back.second));
                    }
                    if (!images.insert(out).second) {
                        fail(tag + ": image already hit");
                    }
                });
            }
            for (const auto& [ms, ns] : codomain) {
                guarded("lemma3^-1" + show(ms, ns), [&] {
                    const PartitionPair back = lemma3_inverse(ms, ns, r());
                    const PartitionPair again = lemma3_forward(back.first, back.second, r());
                    if (again.first != ms || again.second != ns) {
                        fail("lemma3^-1" + show(ms, ns) + ": forward of inverse gives " +
                             show(again.first, again.second));
                    }
                });
            }
        }
        check_residue_gap([this](int t) { return eo_pairs(t); });
    }

    void run_crank() {
        for (int t = 0; t <= report_.max_weight; ++t) {
            const Pairs domain = ostar_pairs(t);
            const Pairs codomain = eo_pairs(t);
            count_sizes("weight " + std::to_string(t), domain.size(), codomain.size());
            std::set<PartitionPair> images;
            for (const auto& [ls, ps] : domain) {
                guarded("crank" + show(ls, ps), [&] {
                    const CrankResult out = crank_bijection(ls, ps, r());
                    const std::string tag =
                        "crank" + show(ls, ps) + " = " + show(out.first, out.second);
                    report_.case_counts[to_string(out.middle).substr(0, 5)] += 1;
                    if (out.first.weight() + out.second.weight() != t) {
                        fail(tag + ": weight not preserved");
                    }
                    if (!is_e_star(out.first) || !is_eo_star(out.second)) {
                        fail(tag + ": image outside E* x EO*");
                    }
                    if (eoc(out.second) != 2 * r()) {
                        fail(tag + ": eoc(nu*) != 2r");
                    }
                    const CrankResult back = crank_bijection_inverse(out.first, out.second, r());
                    if (back.first != ls || back.second != ps) {
                        fail(tag + ": inverse gives " + show(back.first, back.second));
                    }
                    if (!images.insert({out.first, out.second}).second) {
                        fail(tag + ": image already hit");
                    }
                });
            }
            for (const auto& [ms, ns] : codomain) {
                guarded("crank^-1" + show(ms, ns), [&] {
                    const CrankResult back = crank_bijection_inverse(ms, ns, r());
                    const CrankResult again = crank_bijection(back.first, back.second, r());
                    if (again.first != ms || again.second != ns) {
                        fail("crank^-1" + show(ms, ns) + ": forward of inverse gives " +
                             show(again.first, again.second));
                    }
                });
            }
        }
    }

    Pairs phi_domain(int w) { return pairs_.phi_domain(w); }
    Pairs q_pairs(int w) { return pairs_.q_pairs(w); }
    Pairs ostar_pairs(int t) { return pairs_.ostar_pairs(t); }
    Pairs eo_pairs(int t) { return pairs_.eo_pairs(t); }

    HarnessReport report_;
    PairEnumerator pairs_;
};

} // namespace

HarnessReport run_harness(BijectionMap map, int r, int max_weight) {
    if (r < 0 || max_weight < 0) {
        throw ParameterError("harness needs r >= 0 and max_weight >= 0");
    }
    return Harness(map, r, max_weight).run();
}

} // namespace eolab
