#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "cayley/families.hpp"
#include "cayley/isomorphism.hpp"
#include "cayley/lattice.hpp"
#include "oracles.hpp"

using namespace cayley;

TEST_CASE("subgroup counts of the classic small groups") {
  CHECK(all_subgroups(cyclic_group(5)).size() == 2);
  CHECK(all_subgroups(cyclic_group(7)).size() == 2);
  CHECK(all_subgroups(symmetric_group(3)).size() == 6);
  CHECK(all_subgroups(quaternion_group(2)).size() == 6);
  CHECK(all_subgroups(dihedral_group(4)).size() == 10);
  CHECK(all_subgroups(alternating_group(4)).size() == 10);
}

TEST_CASE("lattice agrees with the subset-closure oracle") {
  for (const std::string text :
       {"s:3", "q:8", "d:8", "c:12", "d:12", "c:2xc:2xc:2", "q:16", "gm:2"}) {
    const FiniteGroup g = FamilySpec::parse(text).build();
    const auto lattice = all_subgroups(g);
    std::set<std::vector<int>> got;
    for (const auto& h : lattice) got.insert(h.elements());
    CHECK(got.size() == lattice.size());
    CHECK(got == oracle::subgroups_by_subsets(g, 4));

    for (const auto& h : lattice) {
      CHECK(g.order() % h.order() == 0);
      CHECK(h.elements() == oracle::naive_closure(g, h.elements()));
    }
    for (std::size_t i = 1; i < lattice.size(); ++i) {
      const bool ordered = lattice[i - 1].order() < lattice[i].order() ||
                           (lattice[i - 1].order() == lattice[i].order() &&
                            lattice[i - 1].elements() < lattice[i].elements());
      CHECK(ordered);
    }
  }
}

TEST_CASE("lattice respects its bound") {
  CHECK_THROWS_AS((void)all_subgroups(cyclic_group(24), 16), Error);
  try {
    (void)all_subgroups(cyclic_group(24), 16);
  } catch (const Error& e) {
    CHECK(e.code() == Errc::too_large);
  }
}

TEST_CASE("isomorphism rejections") {
  CHECK(!find_isomorphism(cyclic_group(4),
                          direct_product(cyclic_group(2), cyclic_group(2))));
  CHECK(!find_isomorphism(dihedral_group(4), quaternion_group(2)));
  CHECK(!find_isomorphism(cyclic_group(6), symmetric_group(3)));
  CHECK(!find_isomorphism(cyclic_group(6), cyclic_group(7)));
}

TEST_CASE("isomorphism hits with audited maps") {
  const auto iso = find_isomorphism(cyclic_group(6),
                                    direct_product(cyclic_group(2), cyclic_group(3)));
  REQUIRE(iso.has_value());
  CHECK(iso->is_isomorphism());

  CHECK(find_isomorphism(symmetric_group(3), dihedral_group(3)).has_value());
  CHECK(find_isomorphism(modular_g(1), symmetric_group(3)).has_value());
  CHECK(find_isomorphism(extraspecial_group(3, 1, '-'), semidirect_cyclic(9, 3, 4))
            .has_value());
  CHECK(find_isomorphism(dihedral_group(2),
                         direct_product(cyclic_group(2), cyclic_group(2)))
            .has_value());
}

TEST_CASE("search is deterministic") {
  const auto first = find_isomorphism(quaternion_group(2), quaternion_group(2));
  const auto second = find_isomorphism(quaternion_group(2), quaternion_group(2));
  REQUIRE(first.has_value());
  REQUIRE(second.has_value());
  CHECK(first->images() == second->images());
}

TEST_CASE("minimal generating sequences generate") {
  for (const std::string text : {"c:16", "q:8", "s:4", "c:2xc:2xc:2xc:2", "frob:4:5:2"}) {
    const FiniteGroup g = FamilySpec::parse(text).build();
    const auto gens = minimal_generating_sequence(g);
    CHECK(generated_subgroup(g, gens).order() == g.order());
  }
  CHECK(minimal_generating_sequence(cyclic_group(1)).empty());
}

TEST_CASE("presence and absence agree with the all-bijections oracle on spot pairs") {
  const std::vector<std::string> names = {"c:8",  "c:2xc:2xc:2", "d:8",     "q:8",
                                          "d:16", "q:16",        "d:8xc:2", "q:8xc:2",
                                          "c:12", "gm:2",        "s:3xc:2"};
  std::vector<FiniteGroup> groups;
  for (const auto& n : names) groups.push_back(FamilySpec::parse(n).build());
  for (std::size_t i = 0; i < groups.size(); ++i)
    for (std::size_t j = i; j < groups.size(); ++j) {
      const auto fast = find_isomorphism(groups[i], groups[j]);
      const auto brute = oracle::brute_isomorphism(groups[i], groups[j]);
      CHECK(fast.has_value() == brute.has_value());
      if (fast) CHECK(fast->is_isomorphism());
    }
}

TEST_CASE("every enumerated automorphism is distinct and multiplicative") {
  const FiniteGroup v8 = FamilySpec::parse("c:2xc:2xc:2").build();
  std::set<std::vector<int>> images;
  for_each_isomorphism(v8, v8, [&](const std::vector<int>& img) {
    CHECK(images.insert(img).second);
    return false;
  });
  CHECK(images.size() == 168);  // |GL(3,2)|

  const FiniteGroup s3 = symmetric_group(3);
  int autos = 0;
  for_each_isomorphism(s3, s3, [&](const std::vector<int>&) {
    ++autos;
    return false;
  });
  CHECK(autos == 6);
}
