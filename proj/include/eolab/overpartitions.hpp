#pragma once

#include <ostream>
#include <string>
#include <vector>

#include "eolab/partitions.hpp"
#include "eolab/series.hpp"

namespace eolab {

// A partition with an overline on some of its distinct part sizes. The mark
// belongs to the size, so at most one occurrence of each size is overlined.
class Overpartition {
public:
    Overpartition() = default;
    // marked must be a subset of the distinct sizes of base.
    Overpartition(Partition base, std::vector<int> marked);

    const Partition& base() const noexcept { return base_; }
    // Marked sizes, largest first.
    const std::vector<int>& marked() const noexcept { return marked_; }
    bool is_marked(int size) const noexcept;
    int weight() const noexcept { return base_.weight(); }

    friend bool operator==(const Overpartition&, const Overpartition&) = default;
    friend auto operator<=>(const Overpartition&, const Overpartition&) = default;

private:
    Partition base_;
    std::vector<int> marked_;
};

// Parts written largest first, a marked size gets a trailing "~" on its first occurrence.
std::string to_string(const Overpartition& p);
std::ostream& operator<<(std::ostream& os, const Overpartition& p);

// Bases from gen_eo_star(n), each with every subset of its distinct sizes marked.
std::vector<Overpartition> gen_eobar_star(int n);

// Number of overlined parts.
int o_count(const Overpartition& p);
// +1 when the largest even part of the base is divisible by 4 (0 included), else -1.
int weight_w(const Overpartition& p);

// Sum of [w(p) if use_w] * z^o(p) * q^|p| over the overpartition set.
ZQSeries eobar_weighted_series(TruncOrder order, bool use_w);

// Overpartition counts split by largest even part of the base mod 4.
std::vector<ClassCountRow> eobar_table(int max_n);

} // namespace eolab
