#include "eolab/overpartitions.hpp"

#include <algorithm>
#include <functional>

namespace eolab {

Overpartition::Overpartition(Partition base, std::vector<int> marked)
    : base_(std::move(base)), marked_(std::move(marked)) {
    std::sort(marked_.begin(), marked_.end(), std::greater<>());
    if (std::adjacent_find(marked_.begin(), marked_.end()) != marked_.end()) {
        throw DomainError("an overpartition marks each size at most once");
    }
    for (int size : marked_) {
        if (base_.multiplicity(size) == 0) {
            throw DomainError("marked size " + std::to_string(size) + " is not a part");
        }
    }
}

bool Overpartition::is_marked(int size) const noexcept {
    return std::find(marked_.begin(), marked_.end(), size) != marked_.end();
}

std::string to_string(const Overpartition& p) {
    if (p.base().empty()) {
        return "()";
    }
    std::string out = "(";
    int previous = 0;
    for (int i = 0; i < p.base().length(); ++i) {
        const int part = p.base().parts()[i];
        if (i > 0) {
            out += ",";
        }
        out += std::to_string(part);
        if (part != previous && p.is_marked(part)) {
            out += "~";
        }
        previous = part;
    }
    return out + ")";
}

std::ostream& operator<<(std::ostream& os, const Overpartition& p) {
    return os << to_string(p);
}

std::vector<Overpartition> gen_eobar_star(int n) {
    std::vector<Overpartition> out;
    for (const Partition& base : gen_eo_star(n)) {
        const std::vector<int> sizes = base.distinct_sizes();
        const unsigned subsets = 1u << sizes.size();
        for (unsigned mask = 0; mask < subsets; ++mask) {
            std::vector<int> marked;
            for (std::size_t i = 0; i < sizes.size(); ++i) {
                if (mask & (1u << i)) {
                    marked.push_back(sizes[i]);
                }
            }
            out.emplace_back(base, std::move(marked));
        }
    }
    return out;
}

int o_count(const Overpartition& p) {
    return static_cast<int>(p.marked().size());
}

int weight_w(const Overpartition& p) {
    return largest_even_part(p.base()) % 4 == 0 ? 1 : -1;
}

ZQSeries eobar_weighted_series(TruncOrder order, bool use_w) {
    ZQSeries out(order);
    for (int n = 0; n <= order.value(); ++n) {
        for (const Overpartition& p : gen_eobar_star(n)) {
            out.accumulate(o_count(p), n, use_w ? weight_w(p) : 1);
        }
    }
    return out;
}

std::vector<ClassCountRow> eobar_table(int max_n) {
    std::vector<ClassCountRow> rows;
    for (int n = 0; n <= max_n; ++n) {
        ClassCountRow row{n, 0, 0};
        for (const Overpartition& p : gen_eobar_star(n)) {
            (weight_w(p) > 0 ? row.c0 : row.c2) += 1;
        }
        rows.push_back(row);
    }
    return rows;
}

} // namespace eolab
