#include <map>
#include <stdexcept>
#include <vector>

#include "doctest.h"
#include "slocc/class_count.hpp"

using slocc::BigInt;
using slocc::ClassCount;
using slocc::Partition;

TEST_CASE("partitions enumerate non-decreasing splits with >= 2 parts") {
    const auto p2 = slocc::partitions(2);
    REQUIRE(p2.size() == 1);
    CHECK(p2[0].parts == std::vector<int>{1, 1});
    CHECK(p2[0].multiplicities == std::vector<int>{2});

    const auto p4 = slocc::partitions(4);
    REQUIRE(p4.size() == 4);
    CHECK(p4[0].parts == std::vector<int>{1, 1, 1, 1});
    CHECK(p4[1].parts == std::vector<int>{1, 1, 2});
    CHECK(p4[2].parts == std::vector<int>{1, 3});
    CHECK(p4[3].parts == std::vector<int>{2, 2});
    CHECK(p4[1].multiplicities == std::vector<int>{2, 1});
    CHECK(p4[2].multiplicities == std::vector<int>{1, 1});
    CHECK(p4[3].multiplicities == std::vector<int>{2});

    CHECK_THROWS_AS(slocc::partitions(1), std::invalid_argument);
}

TEST_CASE("per-partition contributions at n = 4") {
    // Multinomial coefficient times the true-class count of each factor,
    // divided by the repetition symmetry: 1, 6, 8, 3 -- summing to 18.
    const auto p4 = slocc::partitions(4);
    const std::vector<int> expected{1, 6, 8, 3};
    BigInt total = 0;
    for (std::size_t i = 0; i < p4.size(); ++i) {
        const ClassCount term = slocc::partition_term(4, p4[i]);
        REQUIRE(term.is_numeric());
        CHECK(term.constant == expected[i]);
        total += term.constant;
    }
    CHECK(total == 18);
}

TEST_CASE("degenerate class counts for small n") {
    CHECK(slocc::degenerate_count(2).constant == 1);
    CHECK(slocc::degenerate_count(3).constant == 4);
    const ClassCount d4 = slocc::degenerate_count(4);
    REQUIRE(d4.is_numeric());
    CHECK(d4.constant == 18);
    CHECK(d4.to_string() == "18");
}

TEST_CASE("unknown true-class counts stay symbolic") {
    const ClassCount d5 = slocc::degenerate_count(5, {}, true);
    CHECK_FALSE(d5.is_numeric());
    CHECK(d5.to_string() == "5*t(4) + 66");
    CHECK(d5.constant == 66);
    CHECK(d5.coeffs.at(4) == 5);

    CHECK(slocc::degenerate_count(6, {}, true).to_string() ==
          "6*t(5) + 30*t(4) + 276");
    CHECK(slocc::degenerate_count(7, {}, true).to_string() ==
          "7*t(6) + 42*t(5) + 210*t(4) + 1212");
}

TEST_CASE("supplying t(4) = 28 resolves n = 5 numerically") {
    const std::map<int, BigInt> known{{4, BigInt(28)}};
    const ClassCount d5 = slocc::degenerate_count(5, known);
    REQUIRE(d5.is_numeric());
    CHECK(d5.constant == 206);
}

TEST_CASE("numeric mode demands every needed true-class count") {
    CHECK_THROWS_AS(slocc::degenerate_count(5), std::invalid_argument);
    CHECK_THROWS_AS(slocc::degenerate_count(6, {{4, BigInt(28)}}),
                    std::invalid_argument);  // still missing t(5)
}

TEST_CASE("products of unknown counts are rejected as nonlinear") {
    // n = 8 reaches the partition 4+4 whose term carries t(4)^2.
    CHECK_THROWS_AS(slocc::degenerate_count(8, {}, true), std::domain_error);
    // Supplying t(4) removes the nonlinearity; the rest stays symbolic.
    const ClassCount d8 =
        slocc::degenerate_count(8, {{4, BigInt(28)}}, true);
    CHECK_FALSE(d8.is_numeric());
    CHECK(d8.coeffs.count(7) == 1);

    CHECK_THROWS_AS(slocc::degenerate_count(1), std::invalid_argument);
}

TEST_CASE("count rendering") {
    ClassCount c;
    c.constant = 0;
    CHECK(c.to_string() == "0");
    c.coeffs[4] = 2;
    CHECK(c.to_string() == "2*t(4)");
    c.constant = 7;
    c.coeffs[6] = 1;
    CHECK(c.to_string() == "1*t(6) + 2*t(4) + 7");
}
