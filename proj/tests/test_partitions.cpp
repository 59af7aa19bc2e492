#include <doctest.h>

#include <algorithm>
#include <set>

#include "eolab/partitions.hpp"

using namespace eolab;

namespace {

std::vector<Partition> naive_eo_star(int n) {
    std::vector<Partition> out;
    for (const Partition& p : gen_partitions(n)) {
        if (is_eo_star(p)) {
            out.push_back(p);
        }
    }
    return out;
}

Partition ones(int n) {
    return Partition(std::vector<int>(n, 1));
}

} // namespace

TEST_CASE("construction and validation") {
    const Partition p{4, 2, 2};
    CHECK(p.weight() == 8);
    CHECK(p.length() == 3);
    CHECK(p.largest() == 4);
    CHECK(p.part(1) == 4);
    CHECK(p.part(4) == 0);
    CHECK(p.multiplicity(2) == 2);
    CHECK(p.distinct_sizes() == std::vector<int>{4, 2});
    CHECK(Partition().empty());
    CHECK(Partition().weight() == 0);
    CHECK_THROWS_AS(Partition({2, 3}), DomainError);
    CHECK_THROWS_AS(Partition({2, 0}), DomainError);
    CHECK(Partition::from_unsorted({1, 3, 2}) == Partition{3, 2, 1});
}

TEST_CASE("literals") {
    CHECK(parse_partition("2,2,4") == Partition{4, 2, 2});
    CHECK(parse_partition("(3,1)") == Partition{3, 1});
    CHECK(parse_partition("") == Partition());
    CHECK(parse_partition("-") == Partition());
    CHECK(parse_partition("()") == Partition());
    CHECK(to_string(Partition{4, 2, 2}) == "(4,2,2)");
    CHECK(to_string(Partition()) == "()");
    CHECK_THROWS_AS(parse_partition("2,x"), DomainError);
    CHECK_THROWS_AS(parse_partition("2,,1"), DomainError);
    CHECK_THROWS_AS(parse_partition("0"), DomainError);
    CHECK_THROWS_AS(parse_partition("-3"), DomainError);
    CHECK_THROWS_AS(parse_partition("2.5"), DomainError);
}

TEST_CASE("conjugate") {
    CHECK(conjugate(Partition()) == Partition());
    CHECK(conjugate(Partition{8}) == ones(8));
    CHECK(conjugate(Partition{4, 2, 2}) == Partition{3, 3, 1, 1});
}

TEST_CASE("conjugate is a weight-preserving involution") {
    for (int n = 0; n <= 25; ++n) {
        for (const Partition& p : gen_partitions(n)) {
            const Partition c = conjugate(p);
            REQUIRE(c.weight() == n);
            REQUIRE(conjugate(c) == p);
        }
    }
}

TEST_CASE("statistics") {
    CHECK(largest_even_part(Partition{8}) == 8);
    CHECK(odd_part_count(Partition{8}) == 0);
    CHECK(eoc(Partition{8}) == 8);
    CHECK(largest_even_part(Partition{3, 3, 1, 1}) == 0);
    CHECK(odd_part_count(Partition{3, 3, 1, 1}) == 4);
    CHECK(eoc(Partition{3, 3, 1, 1}) == -4);
    CHECK(eoc(Partition()) == 0);
}

TEST_CASE("even-odd membership and class") {
    CHECK(is_eo_star(Partition{4, 2, 2}));
    CHECK(classify_eo(Partition{4, 2, 2}) == EOClass::EO0);
    CHECK(is_eo_star(Partition{3, 3, 2}));
    CHECK(classify_eo(Partition{3, 3, 2}) == EOClass::EO2);
    CHECK_FALSE(is_eo_star(Partition{2, 1, 1}));
    CHECK_FALSE(is_eo_star(Partition{3, 2, 2}));
    CHECK(classify_eo(Partition{3, 2, 2}) == EOClass::NotMember);
    CHECK(is_eo_star(Partition()));
    CHECK(classify_eo(Partition()) == EOClass::EO0);
    CHECK(to_string(EOClass::EO2) == "EO2");
}

TEST_CASE("P_k and P_{<=k}") {
    CHECK(is_p_exact(Partition{2, 1}, 2));
    CHECK(is_p_exact(Partition(), 0));
    CHECK_FALSE(is_p_upto(Partition{3}, 2));
    CHECK(is_p_upto(Partition(), 0));
}

TEST_CASE("Durfee width and Q sets") {
    CHECK(durfee_width(Partition{3, 3, 2}, 0) == 2);
    CHECK(durfee_width(Partition(), 4) == 0);
    CHECK(durfee_width(Partition{2, 2}, 0) == 1);
    CHECK(in_q(Partition{3, 3}, 2, 0));
    CHECK_FALSE(in_q(Partition{2, 2}, 1, 0));
    CHECK(in_q(Partition(), 0, 5));
    CHECK(in_q(Partition{5, 5}, 0, 5));
    CHECK_FALSE(in_q(Partition{6}, 0, 5));
}

TEST_CASE("O*, E* and EO*_{k,r}") {
    CHECK(is_o_star(Partition{3, 3}, 1));
    CHECK_FALSE(is_o_star(Partition{3, 3}, 2));
    CHECK_FALSE(is_o_star(Partition{3, 1}, 1));
    CHECK(is_o_star(Partition(), 0));
    CHECK(is_e_star(Partition{2, 2}));
    CHECK(is_e_star(Partition()));
    CHECK_FALSE(is_e_star(Partition{2}));
    CHECK(is_eo_star_kr(Partition{3, 3, 2}, 1, 0));
    CHECK(is_eo_star_kr(Partition(), 0, 0));
    CHECK_FALSE(is_eo_star_kr(Partition{3, 3, 2}, 1, 1));
}

TEST_CASE("generators") {
    CHECK(gen_partitions(0) == std::vector<Partition>{Partition()});
    CHECK(gen_partitions(4) == std::vector<Partition>{Partition{4}, Partition{3, 1}, Partition{2, 2},
                                                      Partition{2, 1, 1}, ones(4)});
    CHECK(gen_partitions(8).size() == 22);
    CHECK(gen_partitions(5, 2).size() == 3);

    CHECK(gen_eo_star(8) == std::vector<Partition>{Partition{8}, Partition{4, 2, 2},
                                                   Partition{3, 3, 2}, Partition{3, 3, 1, 1},
                                                   ones(8)});
    CHECK(gen_eo_star(6) ==
          std::vector<Partition>{Partition{6}, Partition{3, 3}, Partition{2, 2, 2}, ones(6)});
    CHECK(gen_eo_star(0) == std::vector<Partition>{Partition()});
    CHECK(gen_eo_star(7).empty());
}

TEST_CASE("structured generator matches the naive filter") {
    for (int n = 0; n <= 30; ++n) {
        REQUIRE(gen_eo_star(n) == naive_eo_star(n));
    }
}

TEST_CASE("restricted generators match their predicates") {
    for (int n = 0; n <= 24; ++n) {
        for (int k = 0; k <= 6; ++k) {
            std::vector<Partition> expected;
            for (const Partition& p : gen_partitions(n)) {
                if (is_o_star(p, k)) {
                    expected.push_back(p);
                }
            }
            REQUIRE(gen_o_star(n, k) == expected);
            for (int r = 0; r <= 2; ++r) {
                std::vector<Partition> kr;
                for (const Partition& p : gen_partitions(n)) {
                    if (is_eo_star_kr(p, k, r)) {
                        kr.push_back(p);
                    }
                }
                REQUIRE(gen_eo_star_kr(n, k, r) == kr);
            }
        }
        std::vector<Partition> evens;
        for (const Partition& p : gen_partitions(n)) {
            if (is_e_star(p)) {
                evens.push_back(p);
            }
        }
        REQUIRE(gen_e_star(n) == evens);
    }
}

TEST_CASE("conjugation negates the crank on the even-odd set") {
    for (int n = 0; n <= 30; ++n) {
        for (const Partition& p : gen_eo_star(n)) {
            const Partition c = conjugate(p);
            REQUIRE(is_eo_star(c));
            REQUIRE(eoc(c) == -eoc(p));
        }
    }
}

TEST_CASE("crank series and tables") {
    const ZQSeries crank = crank_series(TruncOrder(12));
    const ZQSeries::Row row8{{-8, 1}, {-4, 1}, {0, 1}, {4, 1}, {8, 1}};
    CHECK(crank.row(8) == row8);
    const ZQSeries::Row row4{{-4, 1}, {4, 1}};
    CHECK(crank.row(4) == row4);
    CHECK(reflect_z(crank) == crank);

    const ZQSeries via_predicate = series_of_predicate(
        is_eo_star, [](const Partition& p) { return SeriesTerm{eoc(p), 1}; }, TruncOrder(12));
    CHECK(via_predicate == crank);

    const std::map<int, long long> dist8{{-8, 1}, {-4, 1}, {0, 1}, {4, 1}, {8, 1}};
    CHECK(crank_distribution(8) == dist8);
    const std::map<int, long long> dist12{{-12, 1}, {-8, 1}, {-4, 2}, {0, 2},
                                          {4, 2},   {8, 1},  {12, 1}};
    CHECK(crank_distribution(12) == dist12);
    CHECK(crank_distribution(0) == std::map<int, long long>{{0, 1}});
    CHECK(crank_distribution(1).empty());

    const std::vector<ClassCountRow> t = eo_table(8);
    CHECK(t[4] == ClassCountRow{4, 2, 0});
    CHECK(t[6] == ClassCountRow{6, 2, 2});
    CHECK(t[8] == ClassCountRow{8, 4, 1});
}

TEST_CASE("class counts match a brute-force oracle") {
    // Independent enumeration of the even-odd set, split by largest even part mod 4.
    const std::vector<ClassCountRow> frozen{
        {0, 1, 0},   {2, 1, 1},   {4, 2, 0},   {6, 2, 2},   {8, 4, 1},   {10, 3, 3},
        {12, 8, 2},  {14, 6, 6},  {16, 12, 3}, {18, 10, 10}, {20, 20, 6}, {22, 16, 16},
        {24, 31, 9}, {26, 25, 25}, {28, 46, 14}, {30, 38, 38}};
    const std::vector<ClassCountRow> t = eo_table(30);
    for (const ClassCountRow& row : frozen) {
        CHECK(t[row.n] == row);
    }
    for (int n = 1; n <= 30; n += 2) {
        CHECK(t[n] == ClassCountRow{n, 0, 0});
    }
}

TEST_CASE("even-odd counts match the frozen product coefficients") {
    const std::vector<Coeff> frozen{1,  2,  2,  4,  5,  6,  10,  12,  15,  20, 26,
                                    32, 40, 50, 60, 76, 92, 110, 134, 160, 191};
    const QSeries s = eval_z(crank_series(TruncOrder(40)), 1);
    for (int j = 0; j <= 20; ++j) {
        CHECK(s.coeff(2 * j) == frozen[j]);
        if (2 * j + 1 <= 40) {
            CHECK(s.coeff(2 * j + 1) == 0);
        }
    }
}

TEST_CASE("the three cases of the rectangle argument are exhaustive and disjoint") {
    for (int r = 0; r <= 3; ++r) {
        for (int n = 0; n <= 20; ++n) {
            for (const Partition& p : gen_partitions(n)) {
                int q_hits = 0;
                for (int s = 0; s <= n + 1; ++s) {
                    q_hits += in_q(p, s, r) ? 1 : 0;
                }
                const int w = durfee_width(p, r);
                const bool case2 = w == 0 && p.part(1) == r + 1;
                const bool case3 = w >= 1 && p.part(w + 1) == w + r + 1;
                REQUIRE(q_hits <= 1);
                REQUIRE((q_hits == 1) + case2 + case3 == 1);
            }
        }
    }
}
