#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <numeric>
#include <set>

#include "oracles.hpp"
#include "schur/group.hpp"

using namespace schur;

TEST_CASE("make_group basic shapes") {
  CHECK(make_group({5}).order() == 5);
  CHECK(make_group({2, 2, 2}).order() == 8);
  CHECK(make_group({3, 7}).order() == 21);
  CHECK(make_group({3, 7}).factors() == std::vector<int64_t>{3, 7});
  CHECK_THROWS_AS(make_group({1}), std::invalid_argument);
  CHECK_THROWS_AS(make_group({0, 3}), std::invalid_argument);
  CHECK_THROWS_AS(make_group({}), std::invalid_argument);
  CHECK_THROWS_AS(make_group({1 << 13, 1 << 13}, 1 << 24), std::invalid_argument);
  CHECK_NOTHROW(make_group({1 << 12, 1 << 12}, 1 << 24));
}

TEST_CASE("index/coords round-trip") {
  for (const auto& factors :
       {std::vector<int64_t>{5}, {2, 2, 2}, {3, 7}, {4, 3, 2}, {2, 3, 4, 5}}) {
    GroupSpec g = make_group(factors);
    for (int64_t i = 0; i < g.order(); ++i) CHECK(g.index_of(g.coords_of(i)) == i);
  }
}

TEST_CASE("indexing is big-endian in the first factor") {
  GroupSpec g = make_group({2, 2, 2});
  CHECK(g.index_of(std::vector<int64_t>{1, 0, 0}) == 4);
  CHECK(g.index_of(std::vector<int64_t>{0, 0, 1}) == 1);
  CHECK(g.index_of(std::vector<int64_t>{1, 1, 1}) == 7);
}

TEST_CASE("add and neg examples") {
  GroupSpec z5 = make_group({5});
  CHECK(add(z5, element_at(z5, 3), element_at(z5, 4)).index == 2);
  GroupSpec z22 = make_group({2, 2});
  auto r = add(z22, element_of(z22, {1, 0}), element_of(z22, {1, 1}));
  CHECK(r.coords == std::vector<int64_t>{0, 1});
  GroupSpec z7 = make_group({7});
  CHECK(neg(z7, element_at(z7, 3)).index == 4);

  GroupElement bogus{{1, 0}, 1};  // inconsistent coords/index
  CHECK_THROWS_AS(add(z22, bogus, element_at(z22, 0)), std::invalid_argument);
  CHECK_THROWS_AS(add(z5, element_at(z22, 1), element_at(z5, 0)), std::invalid_argument);
}

TEST_CASE("add is commutative and associative on small groups") {
  for (const auto& factors : {std::vector<int64_t>{9}, {2, 2, 2}, {4, 4}, {2, 3, 5},
                              {8, 8}, {3, 3, 3}}) {
    GroupSpec g = make_group(factors);
    REQUIRE(g.order() <= 64);
    for (int64_t x = 0; x < g.order(); ++x) {
      CHECK(g.add_index(x, g.neg_index(x)) == 0);
      for (int64_t y = 0; y < g.order(); ++y) {
        CHECK(g.add_index(x, y) == g.add_index(y, x));
        for (int64_t z = 0; z < g.order(); ++z)
          CHECK(g.add_index(g.add_index(x, y), z) == g.add_index(x, g.add_index(y, z)));
      }
    }
  }
}

TEST_CASE("element set basics") {
  GroupSpec g = make_group({7});
  ElementSet s = ElementSet::from_indices(g, {2, 3, 4});
  CHECK(s.size() == 3);
  CHECK(s.contains(3));
  CHECK_FALSE(s.contains(5));
  s.insert(3);
  CHECK(s.size() == 3);
  s.erase(3);
  CHECK(s.size() == 2);
  CHECK(s.indices() == std::vector<int64_t>{2, 4});
  CHECK(s.complement().size() == 5);
  CHECK_THROWS_AS(s.insert(7), std::invalid_argument);
  CHECK_THROWS_AS(ElementSet::from_indices(g, {-1}), std::invalid_argument);
}

TEST_CASE("subgroups of prime index: examples") {
  SUBCASE("Z_2^2 has three index-2 subgroups of order 2") {
    auto subs = subgroups_of_prime_index(make_group({2, 2}), 2);
    CHECK(subs.size() == 3);
    std::set<std::vector<int64_t>> carriers;
    for (const auto& h : subs) {
      CHECK(h.index_in_g == 2);
      CHECK(h.carrier.size() == 2);
      CHECK(is_valid_subgroup(h));
      carriers.insert(h.carrier.indices());
    }
    CHECK(carriers.size() == 3);  // proportional kernels merged
  }
  SUBCASE("Z_9 has the unique index-3 subgroup {0,3,6}") {
    auto subs = subgroups_of_prime_index(make_group({9}), 3);
    REQUIRE(subs.size() == 1);
    CHECK(subs[0].carrier.indices() == std::vector<int64_t>{0, 3, 6});
  }
  SUBCASE("Z_5 has no index-2 subgroup") {
    CHECK(subgroups_of_prime_index(make_group({5}), 2).empty());
  }
  CHECK_THROWS_AS(subgroups_of_prime_index(make_group({4}), 4), std::invalid_argument);
}

TEST_CASE("subgroup count over Z_q^k is (q^k-1)/(q-1)") {
  for (auto [q, k] : {std::pair<int64_t, int64_t>{2, 2}, {2, 3}, {2, 4}, {3, 2}, {3, 3}, {5, 2}}) {
    GroupSpec g = make_group(std::vector<int64_t>(static_cast<std::size_t>(k), q));
    auto subs = subgroups_of_prime_index(g, q);
    int64_t expect = 1;
    for (int64_t i = 1; i < k; ++i) expect = expect * q + 1;
    CHECK(static_cast<int64_t>(subs.size()) == expect);
    int64_t sub_order = g.order() / q;
    for (const auto& h : subs) {
      CHECK(h.carrier.size() == sub_order);
      CHECK(is_valid_subgroup(h));
    }
  }
}

TEST_CASE("surjections to cyclic groups") {
  SUBCASE("Z_10 -> Z_2 includes the parity map") {
    auto homs = surjections_to_cyclic(make_group({10}), 2);
    REQUIRE(homs.size() == 1);
    CHECK(homs[0].gen_images == std::vector<int64_t>{1});
    GroupSpec g = make_group({10});
    CHECK(homs[0].apply_index(g, 7) == 1);
    CHECK(homs[0].apply_index(g, 4) == 0);
  }
  SUBCASE("Z_3 x Z_7 -> Z_3 includes projection to the first factor") {
    GroupSpec g = make_group({3, 7});
    auto homs = surjections_to_cyclic(g, 3);
    bool found = false;
    for (const auto& h : homs)
      if (h.gen_images == std::vector<int64_t>{1, 0}) found = true;
    CHECK(found);
  }
  SUBCASE("Z_25 -> Z_5 includes reduction mod 5") {
    GroupSpec g = make_group({25});
    auto homs = surjections_to_cyclic(g, 5);
    REQUIRE(!homs.empty());
    CHECK(homs[0].gen_images == std::vector<int64_t>{1});
    CHECK(homs[0].apply_index(g, 17) == 2);
  }
  SUBCASE("returned maps are surjective homomorphisms") {
    GroupSpec g = make_group({2, 3});
    auto homs = surjections_to_cyclic(g, 6);
    REQUIRE(!homs.empty());
    for (const auto& h : homs) {
      std::set<int64_t> image;
      for (int64_t i = 0; i < g.order(); ++i) image.insert(h.apply_index(g, i));
      CHECK(static_cast<int64_t>(image.size()) == 6);
      for (int64_t x = 0; x < g.order(); ++x)
        for (int64_t y = 0; y < g.order(); ++y)
          CHECK((h.apply_index(g, x) + h.apply_index(g, y)) % 6 ==
                h.apply_index(g, g.add_index(x, y)));
    }
  }
  CHECK_THROWS_AS(surjections_to_cyclic(make_group({10}), 3), std::invalid_argument);
}

TEST_CASE("group type classification") {
  auto tag = classify_group_type(make_group({10}));
  CHECK(tag.kind == GroupTypeTag::Kind::TypeI);
  CHECK(tag.param == 2);
  CHECK(tag.str() == "I(2)");

  tag = classify_group_type(make_group({9}));
  CHECK(tag.kind == GroupTypeTag::Kind::TypeII);

  tag = classify_group_type(make_group({7}));
  CHECK(tag.kind == GroupTypeTag::Kind::TypeIII);
  CHECK(tag.param == 7);

  CHECK(classify_group_type(make_group({3, 7})).kind == GroupTypeTag::Kind::TypeII);
  CHECK(classify_group_type(make_group({49})).param == 49);
  CHECK(classify_group_type(make_group({7, 7})).param == 7);
  CHECK(classify_group_type(make_group({15})).param == 5);  // 5 = 2 mod 3, 3 | 15
}

TEST_CASE("max sum-free size formulas") {
  CHECK(max_sumfree_size(make_group({10})) == 5);
  CHECK(max_sumfree_size(make_group({9})) == 3);
  CHECK(max_sumfree_size(make_group({7})) == 2);
}

TEST_CASE("max sum-free size matches exhaustive search up to order 16") {
  for (const auto& factors :
       {std::vector<int64_t>{2}, {3}, {4}, {5}, {6}, {7}, {8}, {9}, {10}, {11}, {12}, {13},
        {14}, {15}, {16}, {2, 2}, {2, 2, 2}, {2, 4}, {3, 3}, {2, 6}, {2, 2, 3}, {4, 4},
        {2, 8}, {2, 2, 4}, {2, 2, 2, 2}, {3, 5}, {2, 7}}) {
    GroupSpec g = make_group(factors);
    CAPTURE(format_group_spec(g));
    CHECK(max_sumfree_size(g) == testing::max_sumfree_by_search(g));
  }
}

TEST_CASE("group spec grammar") {
  CHECK(parse_group_spec("Z5").factors() == std::vector<int64_t>{5});
  CHECK(parse_group_spec("z2^5").factors() == std::vector<int64_t>(5, 2));
  CHECK(parse_group_spec("Z3xZ7").factors() == std::vector<int64_t>{3, 7});
  CHECK(parse_group_spec("Z2^2XZ3").factors() == std::vector<int64_t>{2, 2, 3});
  CHECK(format_group_spec(parse_group_spec("Z2^2xZ3")) == "Z2^2xZ3");
  CHECK(format_group_spec(parse_group_spec("Z2xZ2xZ3")) == "Z2^2xZ3");

  CHECK_THROWS_AS(parse_group_spec(""), std::invalid_argument);
  CHECK_THROWS_AS(parse_group_spec("Z1"), std::invalid_argument);
  CHECK_THROWS_AS(parse_group_spec("Z"), std::invalid_argument);
  CHECK_THROWS_AS(parse_group_spec("Y3"), std::invalid_argument);
  CHECK_THROWS_AS(parse_group_spec("Z3x"), std::invalid_argument);
  CHECK_THROWS_AS(parse_group_spec("Z4^0"), std::invalid_argument);
  CHECK_THROWS_AS(parse_group_spec("Z 4"), std::invalid_argument);
  CHECK_THROWS_AS(parse_group_spec("Z3 xZ7"), std::invalid_argument);
}
