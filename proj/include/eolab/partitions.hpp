#pragma once

#include <compare>
#include <functional>
#include <map>
#include <initializer_list>
#include <ostream>
#include <span>
#include <string>
#include <vector>

#include "eolab/series.hpp"

namespace eolab {

// A weakly decreasing list of positive parts. The empty list is the empty
// partition of 0.
class Partition {
public:
    Partition() = default;
    // Parts must already be weakly decreasing and positive.
    explicit Partition(std::vector<int> parts);
    Partition(std::initializer_list<int> parts);

    // Sorts the parts into canonical order first; parts must be positive.
    static Partition from_unsorted(std::vector<int> parts);

    std::span<const int> parts() const noexcept { return parts_; }
    bool empty() const noexcept { return parts_.empty(); }
    int length() const noexcept { return static_cast<int>(parts_.size()); }
    int weight() const noexcept { return weight_; }
    int largest() const noexcept { return parts_.empty() ? 0 : parts_.front(); }
    // 1-based part access; absent parts read as 0.
    int part(int i) const noexcept;
    // Number of parts equal to size.
    int multiplicity(int size) const noexcept;
    // Distinct part sizes, largest first.
    std::vector<int> distinct_sizes() const;

    friend bool operator==(const Partition& a, const Partition& b) { return a.parts_ == b.parts_; }
    friend std::strong_ordering operator<=>(const Partition& a, const Partition& b) {
        return a.parts_ <=> b.parts_;
    }

private:
    std::vector<int> parts_;
    int weight_ = 0;
};

std::string to_string(const Partition& p);
std::ostream& operator<<(std::ostream& os, const Partition& p);

// Parses "4,2,2" (any order, canonicalized). Empty text or "-" is the empty partition.
Partition parse_partition(const std::string& text);

Partition conjugate(const Partition& p);

// 0 when there are no even parts.
int largest_even_part(const Partition& p);
int odd_part_count(const Partition& p);
// Even-odd crank: largest even part minus the number of odd parts.
int eoc(const Partition& p);

enum class EOClass { EO0, EO2, NotMember };

// Every even part below every odd part; only the largest even size has odd
// multiplicity. The empty partition is a member with largest even part 0.
bool is_eo_star(const Partition& p);
EOClass classify_eo(const Partition& p);
std::string to_string(EOClass c);

// Largest part exactly k (the empty partition has largest part 0).
bool is_p_exact(const Partition& p, int k);
bool is_p_upto(const Partition& p, int k);

// Largest k >= 0 with p_k >= k + r + 1: the number of rows of the largest
// k x (k+r+1) rectangle inside the Young diagram.
int durfee_width(const Partition& p, int r);

// p has a k x (k+r+1) rectangle and the part directly below it is at most k+r.
bool in_q(const Partition& p, int k, int r);

// All parts odd, exactly 2k parts, every size with even multiplicity.
bool is_o_star(const Partition& p, int k);
// All parts even, every size with even multiplicity.
bool is_e_star(const Partition& p);
// Member of the even-odd set with 2k odd parts and largest even part 2k+2r.
bool is_eo_star_kr(const Partition& p, int k, int r);

// All partitions of n with parts at most max_part (n when negative), in
// reverse-lexicographic order: (n), (n-1,1), (n-2,2), (n-2,1,1), ...
std::vector<Partition> gen_partitions(int n, int max_part = -1);

// Members of the even-odd set of weight n, in reverse-lexicographic order.
// Built by pair-halving around the largest even part 2k rather than by filtering.
std::vector<Partition> gen_eo_star(int n);

// Odd partitions of n with 2k parts and even multiplicities.
std::vector<Partition> gen_o_star(int n, int k);
// Even partitions of n with even multiplicities.
std::vector<Partition> gen_e_star(int n);
// Members of weight n with 2k odd parts and largest even part 2k+2r.
std::vector<Partition> gen_eo_star_kr(int n, int k, int r);

// Contribution sign * z^z_exp of a single partition.
struct SeriesTerm {
    int z_exp = 0;
    int sign = 1;
};

using PartitionPredicate = std::function<bool(const Partition&)>;
using PartitionWeight = std::function<SeriesTerm(const Partition&)>;

// Sum of sign * z^z_exp * q^|p| over every partition of weight <= N that
// passes the predicate. Enumerates all partitions; meant for small N.
ZQSeries series_of_predicate(const PartitionPredicate& pred, const PartitionWeight& weight,
                             TruncOrder order);

// Sum over members p of the even-odd set of z^eoc(p) q^|p|.
ZQSeries crank_series(TruncOrder order);

struct ClassCountRow {
    int n = 0;
    long long c0 = 0;
    long long c2 = 0;

    friend bool operator==(const ClassCountRow&, const ClassCountRow&) = default;
};

// eoc value -> number of members of weight n, ordered by eoc.
std::map<int, long long> crank_distribution(int n);

// Members of weight n split by largest even part mod 4, for n = 0..max_n.
std::vector<ClassCountRow> eo_table(int max_n);

} // namespace eolab
