#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "cayley/analysis.hpp"
#include "cayley/families.hpp"
#include "cayley/io.hpp"
#include "cayley/isoclinism.hpp"
#include "cayley/isomorphism.hpp"
#include "cayley/lattice.hpp"
#include "oracles.hpp"

using namespace cayley;

TEST_CASE("central quotients") {
  CHECK(central_quotient(cyclic_group(9)).first.order() == 1);

  const auto [q8_quo, q8_proj] = central_quotient(quaternion_group(2));
  CHECK(q8_quo.order() == 4);
  for (int x = 1; x < 4; ++x) CHECK(q8_quo.element_order(x) == 2);

  const auto [q16_quo, q16_proj] = central_quotient(quaternion_group(4));
  CHECK(find_isomorphism(q16_quo, dihedral_group(4)).has_value());
}

TEST_CASE("commutator pairing") {
  const CommutatorPairing abelian = commutator_pairing(cyclic_group(6));
  for (int v : abelian.table) CHECK(v == 0);

  // q:8: the pairing takes the central involution on exactly the 6
  // off-diagonal pairs of non-identity cosets.
  const CommutatorPairing q8 = commutator_pairing(quaternion_group(2));
  int nontrivial = 0;
  for (int v : q8.table) nontrivial += v != 0;
  CHECK(q8.quotient.order() == 4);
  CHECK(nontrivial == 6);

  // s:3: pairing values generate the order-3 derived subgroup.
  const CommutatorPairing s3 = commutator_pairing(symmetric_group(3));
  std::vector<int> values(s3.table.begin(), s3.table.end());
  CHECK(oracle::naive_closure(symmetric_group(3), values) ==
        derived_subgroup(symmetric_group(3)).elements());
}

TEST_CASE("fingerprints") {
  CHECK(fingerprint(dihedral_group(4)) == fingerprint(quaternion_group(2)));

  const Fingerprint s3 = fingerprint(symmetric_group(3));
  const Fingerprint es27 = fingerprint(extraspecial_group(3, 1, '+'));
  CHECK(s3 != es27);
  CHECK(s3.central_quotient_order == 6);
  CHECK(es27.central_quotient_order == 9);

  const Fingerprint trivial = fingerprint(cyclic_group(1));
  CHECK(trivial.central_quotient_order == 1);
  CHECK(trivial.derived_order == 1);
  CHECK(trivial.cent_count == 1);
  CHECK(trivial.nacent_count == 0);
  CHECK(trivial.omega == 1);
  CHECK(trivial.z_class_count == 1);
  CHECK(trivial.pairing_fiber_multiset == std::vector<int>{1});
}

TEST_CASE("isoclinism hits") {
  const FiniteGroup q8 = quaternion_group(2);
  const auto self = are_isoclinic(q8, q8);
  REQUIRE(self.has_value());
  CHECK(verify_witness(q8, q8, *self));

  const FiniteGroup d8 = dihedral_group(4);
  const auto dq = are_isoclinic(d8, q8);
  REQUIRE(dq.has_value());
  CHECK(verify_witness(d8, q8, *dq));

  // G and G x A are isoclinic for abelian A.
  for (const std::string base : {"s:3", "q:8", "d:10", "a:4"})
    for (const std::string factor : {"c:2", "c:3"}) {
      const FiniteGroup g = FamilySpec::parse(base).build();
      const std::string prod_name = base + "x" + factor;
      const FiniteGroup prod = FamilySpec::parse(prod_name).build();
      const auto w = are_isoclinic(g, prod);
      REQUIRE_MESSAGE(w.has_value(), prod_name);
      CHECK(verify_witness(g, prod, *w));
    }

  // Any two abelian groups are isoclinic.
  const auto ab = are_isoclinic(cyclic_group(5), direct_product(cyclic_group(2), cyclic_group(2)));
  REQUIRE(ab.has_value());
  CHECK(verify_witness(cyclic_group(5), direct_product(cyclic_group(2), cyclic_group(2)), *ab));
}

TEST_CASE("isoclinism misses") {
  CHECK(!are_isoclinic(symmetric_group(3), extraspecial_group(3, 1, '+')));
  CHECK(!are_isoclinic(symmetric_group(3), extraspecial_group(3, 1, '-')));
  CHECK(!are_isoclinic(quaternion_group(4), quaternion_group(2)));
  CHECK(!are_isoclinic(dihedral_group(8), alternating_group(4)));
  CHECK(!are_isoclinic(cyclic_group(4), symmetric_group(3)));
}

TEST_CASE("isoclinism respects its bound") {
  Limits tight;
  tight.max_isoclinism = 4;
  CHECK_THROWS_AS((void)are_isoclinic(quaternion_group(4), quaternion_group(4), tight), Error);
}

TEST_CASE("witness audit rejects corrupted and mismatched witnesses") {
  const FiniteGroup s3 = symmetric_group(3);
  const FiniteGroup q8 = quaternion_group(2);
  const FiniteGroup d8 = dihedral_group(4);

  const auto good = are_isoclinic(s3, s3);
  REQUIRE(good.has_value());
  CHECK(verify_witness(s3, s3, *good));

  // Swap the two non-identity values of psi on the order-3 derived subgroup:
  // compatibility with the same phi must now fail.
  {
    IsoclinismWitness bad = *good;
    std::vector<int> swapped = bad.psi.images();
    REQUIRE(swapped.size() == 3);
    std::swap(swapped[1], swapped[2]);
    bad.psi = GroupMap(bad.psi.domain(), bad.psi.codomain(), swapped);
    CHECK(!verify_witness(s3, s3, bad));
  }

  // Mismatched domains.
  CHECK(!verify_witness(q8, d8, *good));
  CHECK(!verify_witness(s3, q8, *good));

  // Composing phi with any quotient automorphism keeps the q:8 vs d:8
  // witness compatible: every pair of distinct non-identity cosets
  // anticommutes on both sides, so the audit accepts each variant.
  const auto dq = are_isoclinic(d8, q8);
  REQUIRE(dq.has_value());
  int variants = 0;
  for_each_isomorphism(dq->phi.codomain(), dq->phi.codomain(),
                       [&](const std::vector<int>& alpha) {
                         IsoclinismWitness w = *dq;
                         w.phi = GroupMap::compose(
                             w.phi, GroupMap(w.phi.codomain(), w.phi.codomain(), alpha));
                         CHECK(verify_witness(d8, q8, w));
                         ++variants;
                         return false;
                       });
  CHECK(variants == 6);  // |GL(2,2)|
}

TEST_CASE("witnesses invert and compose") {
  const FiniteGroup d8 = dihedral_group(4);
  const FiniteGroup q8 = quaternion_group(2);
  const FiniteGroup q8c2 = direct_product(quaternion_group(2), cyclic_group(2));

  const auto ab = are_isoclinic(d8, q8);
  const auto bc = are_isoclinic(q8, q8c2);
  REQUIRE(ab.has_value());
  REQUIRE(bc.has_value());

  CHECK(verify_witness(q8, d8, inverted_witness(*ab)));
  CHECK(verify_witness(d8, q8c2, composed_witness(*ab, *bc)));
  CHECK_THROWS_AS((void)composed_witness(*bc, *ab), Error);
}

TEST_CASE("witness serialization carries both sides") {
  const auto w = are_isoclinic(dihedral_group(4), quaternion_group(2));
  REQUIRE(w.has_value());
  const json j = witness_json(*w);
  CHECK(j["phi"].size() == 4);
  CHECK(j["g_coset_reps"].size() == 4);
  CHECK(j["h_coset_reps"].size() == 4);
  CHECK(j["g_derived"].size() == 2);
  CHECK(j["psi"].size() == 2);
}

TEST_CASE("fast decision agrees with the definition oracle on spot pairs") {
  std::vector<FiniteGroup> groups;
  for (const std::string text : {"c:4", "c:2xc:2", "s:3", "d:8", "q:8", "d:12", "q:12",
                                 "a:4", "gm:2", "d:8xc:2", "s:3xc:3", "d:16"})
    groups.push_back(FamilySpec::parse(text).build());

  for (std::size_t i = 0; i < groups.size(); ++i)
    for (std::size_t j = i; j < groups.size(); ++j) {
      const bool fast = are_isoclinic(groups[i], groups[j]).has_value();
      const bool brute = oracle::brute_isoclinic(groups[i], groups[j]);
      CHECK_MESSAGE(fast == brute, "pair (", groups[i].name(), ", ", groups[j].name(), ")");
    }
}

TEST_CASE("certified pairs share the invariant statistics") {
  std::vector<FiniteGroup> groups;
  for (const std::string text :
       {"s:3", "d:8", "q:8", "q:16", "d:12", "a:4", "es:3:1:+", "es:3:1:-", "sd:9:3:4",
        "gm:1", "gm:2", "frob:4:5:2", "d:10"})
    groups.push_back(FamilySpec::parse(text).build());

  for (std::size_t i = 0; i < groups.size(); ++i)
    for (std::size_t j = i + 1; j < groups.size(); ++j) {
      const auto w = are_isoclinic(groups[i], groups[j]);
      if (!w) continue;
      CHECK(verify_witness(groups[i], groups[j], *w));
      const CentralizerProfile a = profile(groups[i]);
      const CentralizerProfile b = profile(groups[j]);
      CHECK(a.cent_count == b.cent_count);
      CHECK(a.nacent_count == b.nacent_count);
      CHECK(a.omega == b.omega);
      CHECK(a.z_class_count == b.z_class_count);
      CHECK(a.is_ca == b.is_ca);
      CHECK(a.is_f == b.is_f);
      CHECK(a.is_i == b.is_i);
      // z-class size multisets: observed, not asserted.
      auto sizes = [](const FiniteGroup& g) {
        std::vector<int> s;
        for (const auto& cls : z_classes(g)) s.push_back(static_cast<int>(cls.size()));
        std::sort(s.begin(), s.end());
        return s;
      };
      if (sizes(groups[i]) != sizes(groups[j]))
        MESSAGE("z-class size multisets differ for ", groups[i].name(), " vs ",
                groups[j].name());
    }
}

TEST_CASE("isoclinism is an equivalence relation on a corpus slice") {
  std::vector<FiniteGroup> groups;
  for (const std::string text :
       {"c:6", "s:3", "d:8", "q:8", "es:2:1:-", "d:12", "gm:2", "q:8xc:2", "a:4"})
    groups.push_back(FamilySpec::parse(text).build());

  // Reflexive.
  for (const auto& g : groups) {
    const auto w = are_isoclinic(g, g);
    REQUIRE(w.has_value());
    CHECK(verify_witness(g, g, *w));
  }
  // Symmetric via inversion, transitive via composition, both re-audited.
  for (std::size_t i = 0; i < groups.size(); ++i)
    for (std::size_t j = 0; j < groups.size(); ++j) {
      if (i == j) continue;
      const auto ij = are_isoclinic(groups[i], groups[j]);
      if (!ij) continue;
      CHECK(verify_witness(groups[j], groups[i], inverted_witness(*ij)));
      for (std::size_t k = 0; k < groups.size(); ++k) {
        if (k == i || k == j) continue;
        const auto jk = are_isoclinic(groups[j], groups[k]);
        if (!jk) continue;
        CHECK(verify_witness(groups[i], groups[k], composed_witness(*ij, *jk)));
      }
    }
}

TEST_CASE("HZ criterion on q:16") {
  const FiniteGroup q16 = quaternion_group(4);
  const Subgroup z = center(q16);
  for (const auto& h : all_subgroups(q16)) {
    const bool spans = set_product(q16, h.bits(), z.bits()).count() == q16.order();
    const bool isoc = are_isoclinic(q16, h.as_group()).has_value();
    CHECK(spans == isoc);
  }
}
