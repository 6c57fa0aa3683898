#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <set>

#include "gnq/abelian.hpp"

using namespace gnq;

TEST_CASE("element arithmetic and indexing") {
    AbelianGroup g({2, 4});
    CHECK(g.order() == 8);
    CHECK(g.exponent() == 4);
    for (long long i = 0; i < g.order(); ++i) CHECK(g.index_of(g.element(i)) == i);
    CHECK(g.add({1, 3}, {1, 2}) == GroupElem{0, 1});
    CHECK(g.neg({1, 3}) == GroupElem{1, 1});
    CHECK(g.scale(-3, {1, 1}) == GroupElem{1, 1});
    CHECK(g.element_order({1, 2}) == 2);
    CHECK(g.element_order({0, 1}) == 4);
    CHECK(g.elem_str({1, 2}) == "(1,2)");
    CHECK(AbelianGroup::parse_elem("(1,2)", 2) == GroupElem{1, 2});
    CHECK_THROWS_AS(AbelianGroup::parse_elem("(1)", 2), ParseError);
    CHECK_THROWS_AS(AbelianGroup({1}), NotAGroup);
}

TEST_CASE("trivial group") {
    AbelianGroup t;
    CHECK(t.order() == 1);
    CHECK(t.name() == "1");
    CHECK(t.element(0) == GroupElem{});
    CHECK(t.all_subgroups().size() == 1);
}

TEST_CASE("subgroup closure and enumeration") {
    AbelianGroup g({2, 4});
    auto sub = g.subgroup_closure({{0, 2}});
    CHECK(sub.size() == 2);
    auto whole = g.subgroup_closure({{1, 0}, {0, 1}});
    CHECK((long long)whole.size() == g.order());

    // C2 x C2 has 5 subgroups; C4 has 3; C2 x C4 has 8
    CHECK(AbelianGroup({2, 2}).all_subgroups().size() == 5);
    CHECK(AbelianGroup({4}).all_subgroups().size() == 3);
    CHECK(AbelianGroup({2, 4}).all_subgroups().size() == 8);
    // every subgroup order divides the group order
    for (const auto& s : g.all_subgroups()) CHECK(g.order() % (long long)s.size() == 0);
}

TEST_CASE("invariant factors") {
    CHECK(canonical_invariant_factors({2, 4}) == std::vector<long long>{2, 4});
    CHECK(canonical_invariant_factors({4, 2}) == std::vector<long long>{2, 4});
    CHECK(canonical_invariant_factors({2, 3}) == std::vector<long long>{6});
    CHECK(canonical_invariant_factors({2, 2, 3}) == std::vector<long long>{2, 6});
    CHECK(canonical_invariant_factors({8, 3, 9}) == std::vector<long long>{3, 72});
    CHECK(abelian_name({2, 4}) == "C2 x C4");
    CHECK(AbelianGroup({3, 2}).name() == "C6");
}

TEST_CASE("all abelian groups of a given order") {
    CHECK(all_abelian_groups(1).size() == 1);   // the trivial group
    CHECK(all_abelian_groups(8).size() == 3);   // C8, C4xC2, C2^3
    CHECK(all_abelian_groups(16).size() == 5);
    CHECK(all_abelian_groups(12).size() == 2);  // C4xC3, C2xC2xC3
    CHECK(all_abelian_groups(30).size() == 1);
    // orders multiply out correctly
    for (long long n = 1; n <= 32; ++n)
        for (const auto& f : all_abelian_groups(n)) {
            long long prod = 1;
            for (long long x : f) prod *= x;
            CHECK(prod == n);
        }
}

TEST_CASE("group table recognition") {
    // Z3 table
    std::vector<std::vector<long long>> z3{{0, 1, 2}, {1, 2, 0}, {2, 0, 1}};
    CHECK(is_group_table(3, 0, [&](long long a, long long b) { return z3[a][b]; }));
    // broken: not associative / no inverses
    std::vector<std::vector<long long>> bad{{0, 1, 2}, {1, 1, 1}, {2, 1, 0}};
    CHECK(!is_group_table(3, 0, [&](long long a, long long b) { return bad[a][b]; }));
}

TEST_CASE("decompose abelian groups from opaque multiplication") {
    // C6 presented multiplicatively by residues mod 7 under multiplication
    std::vector<long long> units{1, 2, 3, 4, 5, 6};
    auto mul7 = [&](long long a, long long b) {
        long long prod = units[a] * units[b] % 7;
        return (long long)(std::find(units.begin(), units.end(), prod) - units.begin());
    };
    auto dec = decompose_abelian(6, 0, mul7);
    CHECK(dec.group.invariant_factors() == std::vector<long long>{6});

    // C2 x C4 shuffled: indices are (a + 2b) with a in C2, b in C4
    auto mul24 = [](long long x, long long y) {
        long long a = (x % 2 + y % 2) % 2;
        long long b = (x / 2 + y / 2) % 4;
        return a + 2 * b;
    };
    auto dec24 = decompose_abelian(8, 0, mul24);
    CHECK(dec24.group.invariant_factors() == std::vector<long long>{2, 4});
    // the iso is a bijective homomorphism
    std::set<GroupElem> images(dec24.iso.begin(), dec24.iso.end());
    CHECK(images.size() == 8);
    for (long long x = 0; x < 8; ++x)
        for (long long y = 0; y < 8; ++y)
            CHECK(dec24.group.add(dec24.iso[x], dec24.iso[y]) == dec24.iso[mul24(x, y)]);

    // elementary abelian
    auto xor3 = [](long long a, long long b) { return a ^ b; };
    CHECK(decompose_abelian(8, 0, xor3).group.invariant_factors() ==
          std::vector<long long>{2, 2, 2});

    // nonabelian input is rejected: S3 as permutation composition
    std::vector<std::vector<int>> perms{{0, 1, 2}};
    {
        std::vector<int> p{0, 1, 2};
        while (std::next_permutation(p.begin(), p.end())) perms.push_back(p);
    }
    auto compose = [&](long long a, long long b) {
        std::vector<int> c(3);
        for (int i = 0; i < 3; ++i) c[i] = perms[a][perms[b][i]];
        return (long long)(std::find(perms.begin(), perms.end(), c) - perms.begin());
    };
    CHECK(is_group_table(6, 0, compose));
    CHECK_THROWS_AS(decompose_abelian(6, 0, compose), NotAGroup);
}
