#include "eolab/partitions.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <sstream>

namespace eolab {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] < 1) {
            throw DomainError("partition parts must be positive");
        }
        if (i > 0 && parts_[i] > parts_[i - 1]) {
            throw DomainError("partition parts must be weakly decreasing");
        }
        weight_ += parts_[i];
    }
}

Partition::Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

Partition Partition::from_unsorted(std::vector<int> parts) {
    std::sort(parts.begin(), parts.end(), std::greater<>());
    return Partition(std::move(parts));
}

int Partition::part(int i) const noexcept {
    return (i >= 1 && i <= length()) ? parts_[i - 1] : 0;
}

int Partition::multiplicity(int size) const noexcept {
    return static_cast<int>(std::count(parts_.begin(), parts_.end(), size));
}

std::vector<int> Partition::distinct_sizes() const {
    std::vector<int> out;
    for (int p : parts_) {
        if (out.empty() || out.back() != p) {
            out.push_back(p);
        }
    }
    return out;
}

std::string to_string(const Partition& p) {
    if (p.empty()) {
        return "()";
    }
    std::string out = "(";
    for (int i = 0; i < p.length(); ++i) {
        if (i > 0) {
            out += ",";
        }
        out += std::to_string(p.parts()[i]);
    }
    return out + ")";
}

std::ostream& operator<<(std::ostream& os, const Partition& p) {
    return os << to_string(p);
}

Partition parse_partition(const std::string& text) {
    std::vector<int> parts;
    if (text.empty() || text == "-" || text == "()") {
        return {};
    }
    std::string body = text;
    if (body.front() == '(' && body.back() == ')') {
        body = body.substr(1, body.size() - 2);
    }
    std::stringstream ss(body);
    std::string item;
    while (std::getline(ss, item, ',')) {
        std::size_t used = 0;
        int value = 0;
        try {
            value = std::stoi(item, &used);
        } catch (const std::exception&) {
            throw DomainError("malformed partition literal: '" + text + "'");
        }
        if (used != item.size() || value < 1) {
            throw DomainError("malformed partition literal: '" + text + "'");
        }
        parts.push_back(value);
    }
    return Partition::from_unsorted(std::move(parts));
}

Partition conjugate(const Partition& p) {
    std::vector<int> cols(p.largest(), 0);
    for (int part : p.parts()) {
        for (int c = 0; c < part; ++c) {
            ++cols[c];
        }
    }
    return Partition(std::move(cols));
}

int largest_even_part(const Partition& p) {
    for (int part : p.parts()) {
        if (part % 2 == 0) {
            return part;
        }
    }
    return 0;
}

int odd_part_count(const Partition& p) {
    return static_cast<int>(std::count_if(p.parts().begin(), p.parts().end(),
                                          [](int part) { return part % 2 == 1; }));
}

int eoc(const Partition& p) {
    return largest_even_part(p) - odd_part_count(p);
}

bool is_eo_star(const Partition& p) {
    const int top_even = largest_even_part(p);
    int min_odd = 0;
    for (int part : p.parts()) {
        if (part % 2 == 1) {
            min_odd = part;
        }
    }
    if (top_even > 0 && min_odd > 0 && top_even >= min_odd) {
        return false;
    }
    for (int size : p.distinct_sizes()) {
        const bool odd_mult = p.multiplicity(size) % 2 == 1;
        if (odd_mult != (size == top_even)) {
            return false;
        }
    }
    return true;
}

EOClass classify_eo(const Partition& p) {
    if (!is_eo_star(p)) {
        return EOClass::NotMember;
    }
    return largest_even_part(p) % 4 == 0 ? EOClass::EO0 : EOClass::EO2;
}

std::string to_string(EOClass c) {
    switch (c) {
    case EOClass::EO0:
        return "EO0";
    case EOClass::EO2:
        return "EO2";
    case EOClass::NotMember:
        return "NOT_MEMBER";
    }
    return "?";
}

bool is_p_exact(const Partition& p, int k) {
    return p.largest() == k;
}

bool is_p_upto(const Partition& p, int k) {
    return p.largest() <= k;
}

int durfee_width(const Partition& p, int r) {
    int k = 0;
    while (p.part(k + 1) >= k + 1 + r + 1) {
        ++k;
    }
    return k;
}

bool in_q(const Partition& p, int k, int r) {
    for (int i = 1; i <= k; ++i) {
        if (p.part(i) < k + r + 1) {
            return false;
        }
    }
    return p.part(k + 1) <= k + r;
}

namespace {

bool sizes_have_even_multiplicity(const Partition& p) {
    for (int size : p.distinct_sizes()) {
        if (p.multiplicity(size) % 2 != 0) {
            return false;
        }
    }
    return true;
}

// Depth-first, largest part first, which yields reverse-lexicographic order.
void enumerate(int remaining, int max_part, int parts_left,
               const std::function<bool(int)>& allowed, std::vector<int>& prefix,
               const std::function<void(const std::vector<int>&)>& emit) {
    if (remaining == 0) {
        if (parts_left <= 0) {
            emit(prefix);
        }
        return;
    }
    if (parts_left == 0) {
        return;
    }
    for (int part = std::min(remaining, max_part); part >= 1; --part) {
        if (!allowed(part)) {
            continue;
        }
        prefix.push_back(part);
        enumerate(remaining - part, part, parts_left < 0 ? -1 : parts_left - 1, allowed, prefix,
                  emit);
        prefix.pop_back();
    }
}

std::vector<std::vector<int>> restricted_partitions(int n, int max_part, int exact_parts,
                                                    const std::function<bool(int)>& allowed) {
    std::vector<std::vector<int>> out;
    std::vector<int> prefix;
    if (n < 0) {
        return out;
    }
    enumerate(n, max_part, exact_parts, allowed, prefix,
              [&](const std::vector<int>& parts) { out.push_back(parts); });
    return out;
}

std::vector<int> doubled(const std::vector<int>& parts) {
    std::vector<int> out;
    out.reserve(parts.size() * 2);
    for (int p : parts) {
        out.push_back(p);
        out.push_back(p);
    }
    return out;
}

void sort_reverse_lex(std::vector<Partition>& ps) {
    std::sort(ps.begin(), ps.end(), std::greater<>());
}

} // namespace

bool is_o_star(const Partition& p, int k) {
    if (p.length() != 2 * k) {
        return false;
    }
    for (int part : p.parts()) {
        if (part % 2 == 0) {
            return false;
        }
    }
    return sizes_have_even_multiplicity(p);
}

bool is_e_star(const Partition& p) {
    for (int part : p.parts()) {
        if (part % 2 == 1) {
            return false;
        }
    }
    return sizes_have_even_multiplicity(p);
}

bool is_eo_star_kr(const Partition& p, int k, int r) {
    return is_eo_star(p) && odd_part_count(p) == 2 * k && largest_even_part(p) == 2 * k + 2 * r;
}

std::vector<Partition> gen_partitions(int n, int max_part) {
    std::vector<Partition> out;
    if (max_part < 0) {
        max_part = n;
    }
    for (auto& parts : restricted_partitions(n, max_part, -1, [](int) { return true; })) {
        out.emplace_back(std::move(parts));
    }
    return out;
}

std::vector<Partition> gen_eo_star(int n) {
    std::vector<Partition> out;
    if (n < 0) {
        return out;
    }
    for (int k = 0; 2 * k <= n; ++k) {
        if ((n - 2 * k) % 2 != 0) {
            continue;
        }
        const int top = 2 * k;
        auto allowed = [top](int part) {
            return part % 2 == 0 ? (top > 0 && part <= top) : part > top;
        };
        for (const auto& half : restricted_partitions((n - top) / 2, (n - top) / 2, -1, allowed)) {
            std::vector<int> parts = doubled(half);
            if (top > 0) {
                parts.push_back(top);
            }
            out.push_back(Partition::from_unsorted(std::move(parts)));
        }
    }
    sort_reverse_lex(out);
    return out;
}

std::vector<Partition> gen_o_star(int n, int k) {
    std::vector<Partition> out;
    if (n < 0 || n % 2 != 0 || k < 0) {
        return out;
    }
    for (const auto& half :
         restricted_partitions(n / 2, n / 2, k, [](int part) { return part % 2 == 1; })) {
        out.emplace_back(doubled(half));
    }
    return out;
}

std::vector<Partition> gen_e_star(int n) {
    std::vector<Partition> out;
    if (n < 0 || n % 2 != 0) {
        return out;
    }
    for (const auto& half :
         restricted_partitions(n / 2, n / 2, -1, [](int part) { return part % 2 == 0; })) {
        out.emplace_back(doubled(half));
    }
    return out;
}

std::vector<Partition> gen_eo_star_kr(int n, int k, int r) {
    std::vector<Partition> out;
    const int top = 2 * k + 2 * r;
    if (n < top || (n - top) % 2 != 0 || k < 0 || r < 0) {
        return out;
    }
    auto allowed = [top](int part) {
        return part % 2 == 0 ? (top > 0 && part <= top) : part > top;
    };
    const int half_weight = (n - top) / 2;
    for (const auto& half : restricted_partitions(half_weight, half_weight, -1, allowed)) {
        const auto odd = std::count_if(half.begin(), half.end(), [](int p) { return p % 2 == 1; });
        if (odd != k) {
            continue;
        }
        std::vector<int> parts = doubled(half);
        if (top > 0) {
            parts.push_back(top);
        }
        out.push_back(Partition::from_unsorted(std::move(parts)));
    }
    sort_reverse_lex(out);
    return out;
}

ZQSeries series_of_predicate(const PartitionPredicate& pred, const PartitionWeight& weight,
                             TruncOrder order) {
    ZQSeries out(order);
    for (int n = 0; n <= order.value(); ++n) {
        for (const Partition& p : gen_partitions(n)) {
            if (pred(p)) {
                const SeriesTerm t = weight(p);
                out.accumulate(t.z_exp, n, t.sign);
            }
        }
    }
    return out;
}

ZQSeries crank_series(TruncOrder order) {
    ZQSeries out(order);
    for (int n = 0; n <= order.value(); ++n) {
        for (const Partition& p : gen_eo_star(n)) {
            out.accumulate(eoc(p), n, 1);
        }
    }
    return out;
}

std::map<int, long long> crank_distribution(int n) {
    std::map<int, long long> out;
    for (const Partition& p : gen_eo_star(n)) {
        ++out[eoc(p)];
    }
    return out;
}

std::vector<ClassCountRow> eo_table(int max_n) {
    std::vector<ClassCountRow> rows;
    for (int n = 0; n <= max_n; ++n) {
        ClassCountRow row{n, 0, 0};
        for (const Partition& p : gen_eo_star(n)) {
            (largest_even_part(p) % 4 == 0 ? row.c0 : row.c2) += 1;
        }
        rows.push_back(row);
    }
    return rows;
}

} // namespace eolab
