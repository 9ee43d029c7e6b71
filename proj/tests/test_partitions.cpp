#include <doctest.h>

#include "chern/partition.hpp"
#include "oracles.hpp"

using chern::dominance_leq;
using chern::enumerate_gamma;
using chern::Partition;

TEST_CASE("partition construction and invariants") {
    Partition p{4, 2, 1};
    CHECK(p.weight() == 7);
    CHECK(p.length() == 3);
    CHECK(Partition{}.weight() == 0);
    CHECK(Partition(std::vector<int>{3, 2, 0, 0}) == Partition{3, 2});
    CHECK_THROWS_AS(Partition(std::vector<int>{1, 2}), std::invalid_argument);
    CHECK_THROWS_AS(Partition(std::vector<int>{2, -1}), std::invalid_argument);
}

TEST_CASE("partition parsing") {
    CHECK(Partition::from_string("2,1") == Partition{2, 1});
    CHECK(Partition::from_string("") == Partition{});
    CHECK(Partition::from_string("2,1").to_string() == "2,1");
    CHECK_THROWS_AS(Partition::from_string("2,"), std::invalid_argument);
    CHECK_THROWS_AS(Partition::from_string("a"), std::invalid_argument);
    CHECK_THROWS_AS(Partition::from_string("1,2"), std::invalid_argument);
}

TEST_CASE("gamma enumeration matches the hand examples") {
    CHECK(enumerate_gamma(2, 1) == std::vector<Partition>{Partition{1, 1}});
    CHECK(enumerate_gamma(3, 2) == std::vector<Partition>{Partition{2, 1}, Partition{1, 1, 1}});
    CHECK(enumerate_gamma(6, 3).size() == 7);
    CHECK_THROWS_AS(enumerate_gamma(0, 3), std::invalid_argument);
}

TEST_CASE("gamma enumeration: counts, bounds, order") {
    for (int k = 1; k <= 12; ++k) {
        for (int r = 1; r <= 6; ++r) {
            auto gamma = enumerate_gamma(k, r);
            CHECK(static_cast<long>(gamma.size()) == oracle::count_partitions(k, r));
            for (size_t i = 0; i < gamma.size(); ++i) {
                CHECK(gamma[i].weight() == k);
                CHECK(gamma[i].parts().front() <= r);
                if (i > 0) CHECK(gamma[i - 1] > gamma[i]);  // descending lex, no repeats
            }
        }
    }
}

TEST_CASE("conjugation") {
    CHECK(Partition{2, 1}.conjugate() == Partition{2, 1});
    CHECK(Partition{3}.conjugate() == Partition{1, 1, 1});
    CHECK(Partition{4, 2, 1}.conjugate() == Partition{3, 2, 1, 1});
    for (int k = 1; k <= 8; ++k)
        for (const Partition& lam : enumerate_gamma(k, k)) {
            CHECK(lam.conjugate().conjugate() == lam);
            CHECK(lam.conjugate().weight() == k);
        }
}

TEST_CASE("dominance order") {
    CHECK(dominance_leq(Partition{1, 1}, Partition{2}));
    CHECK_FALSE(dominance_leq(Partition{2}, Partition{1, 1}));
    CHECK(dominance_leq(Partition{2, 2, 1}, Partition{3, 1, 1}));
    CHECK_THROWS_AS(dominance_leq(Partition{2}, Partition{1}), std::invalid_argument);
}

TEST_CASE("dominance is a partial order on each gamma set") {
    for (int k = 1; k <= 6; ++k) {
        auto gamma = enumerate_gamma(k, 4);
        for (const auto& a : gamma) {
            CHECK(dominance_leq(a, a));
            for (const auto& b : gamma) {
                if (dominance_leq(a, b) && dominance_leq(b, a)) CHECK(a == b);
                for (const auto& c : gamma)
                    if (dominance_leq(a, b) && dominance_leq(b, c)) CHECK(dominance_leq(a, c));
            }
        }
    }
}
