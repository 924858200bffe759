#include <vector>

#include <doctest.h>

#include "oracles.hpp"
#include "sgpart/partitions.hpp"

using sgpart::Family;
using sgpart::GeneratorSet;
using sgpart::Int;
using sgpart::MembershipTable;
using sgpart::Partition;

namespace {

std::vector<std::vector<Int>> family_part_lists(Int n, const GeneratorSet& gens, Family family) {
    std::vector<std::vector<Int>> out;
    for_each_in_family(n, gens, family,
                       [&](std::span<const Int> parts) { out.emplace_back(parts.begin(), parts.end()); });
    return out;
}

bool oracle_predicate(const std::vector<Int>& parts, const std::vector<Int>& gens, Family family) {
    switch (family) {
        case Family::flat: return oracles::flat_by_definition(parts, gens);
        case Family::mult: return oracles::mult_by_definition(parts, gens);
        case Family::div: return oracles::div_by_definition(parts, gens);
    }
    return false;
}

}  // namespace

TEST_CASE("partition construction") {
    CHECK(Partition().empty());
    CHECK(Partition().sum() == 0);
    const Partition p({1, 3, 2, 3});
    CHECK(p.parts() == std::vector<Int>({3, 3, 2, 1}));
    CHECK(p.sum() == 9);
    CHECK_THROWS_AS(Partition({3, 0}), sgpart::InvalidInput);
    CHECK_THROWS_AS(Partition({-2}), sgpart::InvalidInput);
}

TEST_CASE("conjugation") {
    CHECK(conjugate(Partition({4, 2, 1})) == Partition({3, 2, 1, 1}));
    CHECK(conjugate(Partition({13})) == Partition(std::vector<Int>(13, 1)));
    CHECK(conjugate(Partition()) == Partition());

    SUBCASE("matches counting diagram columns") {
        for (Int n = 0; n <= 12; ++n)
            for (const auto& parts : oracles::all_partitions(n)) {
                CAPTURE(parts);
                CHECK(conjugate(Partition(parts)).parts() == oracles::conjugate_by_grid(parts));
            }
    }

    SUBCASE("is an involution") {
        for (Int n = 0; n <= 25; ++n)
            for (const auto& parts : oracles::all_partitions(n)) {
                const Partition p(parts);
                CHECK(conjugate(conjugate(p)) == p);
            }
    }
}

TEST_CASE("family predicates") {
    const GeneratorSet g34({3, 4});
    const MembershipTable t34(g34, 20);

    CHECK(is_flat(Partition({13}), MembershipTable(g34, 13)));
    CHECK(is_flat(Partition({10, 3}), MembershipTable(g34, 13)));
    CHECK(is_flat(Partition({7, 3, 3}), MembershipTable(g34, 13)));
    CHECK_FALSE(is_flat(Partition({9, 4}), t34));   // difference 5 is a gap
    CHECK_FALSE(is_flat(Partition({5}), t34));      // the part itself is a gap
    CHECK(is_flat(Partition(), t34));

    CHECK(is_mult(Partition({3, 3, 3, 1, 1, 1, 1}), t34));
    CHECK_FALSE(is_mult(Partition({13}), MembershipTable(g34, 13)));
    CHECK(is_mult(Partition(), t34));

    CHECK(is_div(Partition({9, 4}), g34));
    CHECK(is_div(Partition({6, 4, 3}), g34));
    CHECK_FALSE(is_div(Partition({13}), g34));
    CHECK(is_div(Partition(), g34));

    SUBCASE("a table shorter than the largest part is rejected") {
        CHECK_THROWS_AS(is_flat(Partition({25}), t34), sgpart::BoundTooSmall);
        CHECK_THROWS_AS(is_flat_adjacent(Partition({25}), t34), sgpart::BoundTooSmall);
        CHECK_THROWS_AS(is_mult(Partition(std::vector<Int>(25, 1)), t34), sgpart::BoundTooSmall);
    }
}

TEST_CASE("pairwise and adjacent difference conditions agree") {
    // The two formulations coincide because members are closed under addition.
    for (const auto& values : {std::vector<Int>{3, 4}, {2, 5}, {4, 6, 9}}) {
        const GeneratorSet gens(values);
        const MembershipTable table(gens, 25);
        for (Int n = 0; n <= 25; ++n)
            for (const auto& parts : oracles::all_partitions(n)) {
                const Partition p(parts);
                CAPTURE(values);
                CAPTURE(parts);
                CHECK(is_flat(p, table) == is_flat_adjacent(p, table));
            }
    }
}

TEST_CASE("worked example: the three families of 13 over generators 3,4") {
    const GeneratorSet gens({3, 4});

    const std::vector<std::vector<Int>> expected_flat = {{13}, {10, 3}, {7, 3, 3}};
    const std::vector<std::vector<Int>> expected_mult = {
        {3, 3, 3, 1, 1, 1, 1}, {2, 2, 2, 1, 1, 1, 1, 1, 1, 1}, std::vector<Int>(13, 1)};
    const std::vector<std::vector<Int>> expected_div = {{9, 4}, {6, 4, 3}, {4, 3, 3, 3}};

    CHECK(family_part_lists(13, gens, Family::flat) == expected_flat);
    CHECK(family_part_lists(13, gens, Family::mult) == expected_mult);
    CHECK(family_part_lists(13, gens, Family::div) == expected_div);
}

TEST_CASE("small counterexample counts at n = 5 over generators 2,3,5") {
    const GeneratorSet gens({2, 3, 5});
    CHECK(count_family(5, gens, Family::flat) == 1);
    CHECK(count_family(5, gens, Family::mult) == 1);
    CHECK(count_family(5, gens, Family::div) == 2);
    CHECK(family_part_lists(5, gens, Family::div) ==
          std::vector<std::vector<Int>>({{5}, {3, 2}}));
}

TEST_CASE("n = 0 has exactly the empty partition in every family") {
    const GeneratorSet gens({3, 4});
    for (Family family : {Family::flat, Family::mult, Family::div}) {
        const auto lists = family_part_lists(0, gens, family);
        REQUIRE(lists.size() == 1);
        CHECK(lists[0].empty());
        CHECK(count_family(0, gens, family) == 1);
    }
    CHECK_THROWS_AS(count_family(-1, gens, Family::flat), sgpart::InvalidInput);
}

TEST_CASE("pruned enumeration equals filtering all partitions, order included") {
    const std::vector<std::vector<Int>> gen_lists = {{3, 4}, {2, 3}, {2, 3, 5}, {4, 6, 9}, {1}};
    for (const auto& values : gen_lists) {
        const GeneratorSet gens(values);
        for (Int n = 0; n <= 25; ++n) {
            std::vector<std::vector<Int>> expected_flat, expected_mult, expected_div;
            for (const auto& parts : oracles::all_partitions(n)) {
                if (oracle_predicate(parts, values, Family::flat)) expected_flat.push_back(parts);
                if (oracle_predicate(parts, values, Family::mult)) expected_mult.push_back(parts);
                if (oracle_predicate(parts, values, Family::div)) expected_div.push_back(parts);
            }
            CAPTURE(values);
            CAPTURE(n);
            CHECK(family_part_lists(n, gens, Family::flat) == expected_flat);
            CHECK(family_part_lists(n, gens, Family::mult) == expected_mult);
            CHECK(family_part_lists(n, gens, Family::div) == expected_div);
        }
    }
}

TEST_CASE("conjugation carries the flat family onto the mult family") {
    for (const auto& values : {std::vector<Int>{3, 4}, {2, 5}, {4, 6, 9}, {2, 3, 5}}) {
        const GeneratorSet gens(values);
        for (Int n = 0; n <= 20; ++n) {
            const auto flat = family_partitions(n, gens, Family::flat);
            auto mult = family_partitions(n, gens, Family::mult);
            REQUIRE(flat.size() == mult.size());
            for (const auto& p : flat) {
                const Partition image = conjugate(p);
                CAPTURE(values);
                CAPTURE(n);
                CAPTURE(p.parts());
                CHECK(std::find(mult.begin(), mult.end(), image) != mult.end());
            }
        }
    }
}
