#include <doctest.h>

#include "eolab/overpartitions.hpp"

using namespace eolab;

TEST_CASE("construction") {
    const Overpartition p(Partition{4, 2, 2}, {2});
    CHECK(p.is_marked(2));
    CHECK_FALSE(p.is_marked(4));
    CHECK(p.weight() == 8);
    CHECK(to_string(p) == "(4,2~,2)");
    CHECK(Overpartition(Partition{3, 3, 2}, {2, 3}).marked() == std::vector<int>{3, 2});
    CHECK_THROWS_AS(Overpartition(Partition{4}, {2}), DomainError);
    CHECK_THROWS_AS(Overpartition(Partition{4}, {4, 4}), DomainError);
}

TEST_CASE("enumeration") {
    const std::vector<Overpartition> two = gen_eobar_star(2);
    CHECK(two.size() == 4);
    for (const Overpartition& p : two) {
        CHECK((p.base() == Partition{2} || p.base() == Partition{1, 1}));
    }
    CHECK(gen_eobar_star(0) == std::vector<Overpartition>{Overpartition()});
    const std::vector<Overpartition> four = gen_eobar_star(4);
    CHECK(four.size() == 4);
    for (const Overpartition& p : four) {
        CHECK((p.base() == Partition{4} || p.base() == Partition{1, 1, 1, 1}));
    }
}

TEST_CASE("statistics") {
    const Overpartition a(Partition{4, 2, 2}, {2});
    CHECK(o_count(a) == 1);
    CHECK(weight_w(a) == 1);
    const Overpartition b(Partition{3, 3, 2}, {3, 2});
    CHECK(o_count(b) == 2);
    CHECK(weight_w(b) == -1);
    CHECK(o_count(Overpartition()) == 0);
    CHECK(weight_w(Overpartition()) == 1);
}

TEST_CASE("counts follow the base counts") {
    for (int n = 0; n <= 24; ++n) {
        long long expected = 0;
        for (const Partition& p : gen_eo_star(n)) {
            expected += 1LL << p.distinct_sizes().size();
        }
        REQUIRE(static_cast<long long>(gen_eobar_star(n).size()) == expected);
    }
}

TEST_CASE("weighted series") {
    const TruncOrder n(24);
    const ZQSeries plain = eobar_weighted_series(n, false);
    const ZQSeries::Row two{{0, 2}, {1, 2}};
    CHECK(plain.row(2) == two);
    CHECK(eval_z(plain, 0) == eval_z(crank_series(n), 1));

    const ZQSeries weighted = eobar_weighted_series(n, true);
    CHECK(eval_z(weighted, 1).coeff(4) == 4);
    for (int q = 0; q <= 24; ++q) {
        for (const auto& [m, c] : weighted.row(q)) {
            CHECK(q % 4 == 0);
            CHECK(c > 0);
        }
    }
}

TEST_CASE("tables") {
    const std::vector<ClassCountRow> frozen{{0, 1, 0},  {2, 2, 2},   {4, 4, 0},  {6, 4, 4},
                                            {8, 12, 4}, {10, 8, 8}, {12, 24, 8}};
    const std::vector<ClassCountRow> t = eobar_table(12);
    for (const ClassCountRow& row : frozen) {
        CHECK(t[row.n] == row);
    }
}
