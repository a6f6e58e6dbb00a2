#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "cayley/analysis.hpp"
#include "cayley/families.hpp"
#include "cayley/io.hpp"
#include "oracles.hpp"

using namespace cayley;

namespace {

std::vector<FiniteGroup> small_nonabelian() {
  std::vector<FiniteGroup> out;
  for (const std::string text :
       {"s:3", "d:8", "q:8", "d:10", "d:12", "q:12", "a:4", "gm:2", "q:16", "d:16"})
    out.push_back(FamilySpec::parse(text).build());
  return out;
}

}  // namespace

TEST_CASE("distinct centralizer counts") {
  CHECK(distinct_centralizers(cyclic_group(12)).size() == 1);
  CHECK(distinct_centralizers(symmetric_group(3)).size() == 5);
  CHECK(distinct_centralizers(quaternion_group(2)).size() == 4);

  // The whole group is always a member (centralizer of the identity).
  for (const auto& g : small_nonabelian()) {
    const auto cents = distinct_centralizers(g);
    bool has_g = false;
    for (const auto& c : cents) has_g = has_g || c.order() == g.order();
    CHECK(has_g);
    for (const auto& c : cents) {
      CHECK(center(g).bits().is_subset_of(c.bits()));
      CHECK(c.elements() == oracle::naive_closure(g, c.elements()));
    }
  }
}

TEST_CASE("nacent") {
  CHECK(nacent(cyclic_group(9)).empty());
  const auto s3_nacent = nacent(symmetric_group(3));
  REQUIRE(s3_nacent.size() == 1);
  CHECK(s3_nacent[0].order() == 6);
  CHECK(nacent(extraspecial_group(2, 2, '+')).size() > 1);
  CHECK(nacent(extraspecial_group(2, 2, '-')).size() > 1);
}

TEST_CASE("CA, F and I predicates") {
  CHECK(is_ca(quaternion_group(4)));  // q:16
  CHECK(is_f(extraspecial_group(2, 2, '+')));
  CHECK(!is_ca(extraspecial_group(2, 2, '+')));
  CHECK(is_f(extraspecial_group(2, 2, '-')));
  CHECK(!is_ca(extraspecial_group(2, 2, '-')));
  CHECK(is_i(quaternion_group(2)));
  CHECK(!is_i(symmetric_group(3)));

  // Abelian conventions.
  const FiniteGroup c6 = cyclic_group(6);
  CHECK(is_ca(c6));
  CHECK(is_f(c6));
  CHECK(!is_i(c6));

  // S4 is not an F-group: a 4-cycle centralizer sits strictly inside the
  // centralizer of its square.
  CHECK(!is_f(symmetric_group(4)));
}

TEST_CASE("conjugate type") {
  CHECK(conjugate_type(cyclic_group(5)) == std::vector<int>{1});
  CHECK(conjugate_type(quaternion_group(2)) == std::vector<int>{1, 2});
  CHECK(conjugate_type(extraspecial_group(3, 1, '+')) == std::vector<int>{1, 3});
  CHECK(conjugate_type(extraspecial_group(3, 1, '-')) == std::vector<int>{1, 3});
  CHECK(conjugate_type(symmetric_group(3)) == std::vector<int>{1, 2, 3});
  CHECK(is_conjugate_type(quaternion_group(2), 2));
  CHECK(!is_conjugate_type(symmetric_group(3), 2));
  CHECK(!is_conjugate_type(cyclic_group(4), 1));
}

TEST_CASE("z-classes") {
  CHECK(z_classes(cyclic_group(8)).size() == 1);
  CHECK(z_classes(symmetric_group(3)).size() == 3);
  CHECK(z_classes(quaternion_group(2)).size() == 4);

  for (const auto& g : small_nonabelian()) {
    const auto zc = z_classes(g);
    // Central elements share one class.
    const Subgroup z = center(g);
    int with_identity = -1;
    for (std::size_t i = 0; i < zc.size(); ++i)
      if (zc[i].front() == 0) with_identity = static_cast<int>(i);
    REQUIRE(with_identity >= 0);
    for (int x : z.elements())
      CHECK(std::find(zc[with_identity].begin(), zc[with_identity].end(), x) !=
            zc[with_identity].end());
    // Conjugate elements are z-equivalent.
    std::vector<int> class_of(g.order(), -1);
    for (std::size_t i = 0; i < zc.size(); ++i)
      for (int x : zc[i]) class_of[x] = static_cast<int>(i);
    for (const auto& cls : conjugacy_classes(g))
      for (int x : cls) CHECK(class_of[x] == class_of[cls.front()]);
  }
}

TEST_CASE("z-classes match the conjugation oracle") {
  std::vector<FiniteGroup> sweep = small_nonabelian();
  sweep.push_back(FamilySpec::parse("frob:4:5:2").build());
  sweep.push_back(FamilySpec::parse("s:4").build());
  sweep.push_back(FamilySpec::parse("c:6").build());
  for (const auto& g : sweep) CHECK(z_classes(g) == oracle::naive_z_classes(g));
}

TEST_CASE("omega matches the subset oracle on small groups") {
  CHECK(omega(cyclic_group(16)) == 1);
  CHECK(omega(symmetric_group(3)) == 4);
  CHECK(omega(quaternion_group(2)) == 3);

  for (const auto& g : small_nonabelian()) CHECK(omega(g) == oracle::brute_omega(g));

  CHECK_THROWS_AS((void)omega(symmetric_group(4), 10), Error);
}

TEST_CASE("special family flags") {
  const SpecialFamily d8 = special_family(dihedral_group(4));
  CHECK(d8.special_prime == 2);
  CHECK(d8.is_extraspecial);

  const SpecialFamily klein =
      special_family(direct_product(cyclic_group(2), cyclic_group(2)));
  CHECK(klein.elementary_abelian_prime == 2);
  CHECK(!klein.is_extraspecial);

  // q:8 arithmetic: |G'| = 2, |G:G'| = 4, so |G'|^2 = |G:G'| and the
  // ultraspecial flag lands true.
  const SpecialFamily q8 = special_family(quaternion_group(2));
  CHECK(q8.is_extraspecial);
  CHECK(q8.is_semi_extraspecial);
  CHECK(q8.is_ultraspecial);

  for (char sign : {'+', '-'}) {
    CHECK(special_family(extraspecial_group(3, 1, sign)).is_extraspecial);
    const SpecialFamily es32 = special_family(extraspecial_group(2, 2, sign));
    CHECK(es32.is_extraspecial);
    CHECK(es32.is_semi_extraspecial);
    CHECK(!es32.is_ultraspecial);  // |G'|^2 = 4 != 16 = |G:G'|
  }

  CHECK(!special_family(symmetric_group(3)).special_prime.has_value());
  CHECK(!special_family(cyclic_group(9)).elementary_abelian_prime.has_value());
  CHECK(special_family(cyclic_group(1)).elementary_abelian_prime == std::nullopt);
  CHECK(special_family(direct_product(cyclic_group(3), cyclic_group(3)))
            .elementary_abelian_prime == 3);

  const SpecialFamily d8c2 =
      special_family(direct_product(dihedral_group(4), cyclic_group(2)));
  CHECK(!d8c2.special_prime.has_value());
  CHECK(!d8c2.is_semi_extraspecial);
}

TEST_CASE("the Heisenberg group over GF(4) is ultraspecial but not extraspecial") {
  // Triples (a, b, c) over GF(4) with product
  // (a1+a2, b1+b2, c1+c2+a1*b2); addition is xor, multiplication is the
  // field of four elements.
  const int mul4[4][4] = {{0, 0, 0, 0}, {0, 1, 2, 3}, {0, 2, 3, 1}, {0, 3, 1, 2}};
  const int n = 64;
  std::vector<std::vector<int>> table(n, std::vector<int>(n));
  auto pack = [](int a, int b, int c) { return (a << 4) | (b << 2) | c; };
  for (int u = 0; u < n; ++u)
    for (int v = 0; v < n; ++v) {
      const int a1 = u >> 4, b1 = (u >> 2) & 3, c1 = u & 3;
      const int a2 = v >> 4, b2 = (v >> 2) & 3, c2 = v & 3;
      table[u][v] = pack(a1 ^ a2, b1 ^ b2, c1 ^ c2 ^ mul4[a1][b2]);
    }
  const FiniteGroup h4 = FiniteGroup::from_cayley_table(table, "heisenberg-gf4");

  CHECK(center(h4).order() == 4);
  CHECK(derived_subgroup(h4).order() == 4);
  const SpecialFamily f = special_family(h4);
  CHECK(f.special_prime == 2);
  CHECK(!f.is_extraspecial);        // |Z| = 4, not 2
  CHECK(f.is_semi_extraspecial);    // all three central quotients of order 32
  CHECK(f.is_ultraspecial);         // |G'|^2 = 16 = |G : G'|
}

TEST_CASE("profiles") {
  const CentralizerProfile s3 = profile(symmetric_group(3));
  CHECK(s3.cent_count == 5);
  CHECK(s3.omega == 4);
  CHECK(s3.is_ca);
  CHECK(s3.conjugate_type == std::vector<int>{1, 2, 3});
  CHECK(s3.derived_order == 3);
  CHECK(s3.central_quotient_order == 6);

  const CentralizerProfile q8 = profile(quaternion_group(2));
  CHECK(q8.cent_count == 4);
  CHECK(q8.derived_order == 2);
  CHECK(q8.nacent_count == 1);

  const CentralizerProfile trivial = profile(cyclic_group(1));
  CHECK(trivial.cent_count == 1);
  CHECK(trivial.omega == 1);
  CHECK(trivial.nacent_count == 0);
  CHECK(trivial.z_class_count == 1);
  CHECK(trivial.conjugate_type == std::vector<int>{1});
}

TEST_CASE("profile invariants over a mixed sweep") {
  std::vector<FiniteGroup> sweep = small_nonabelian();
  for (const std::string text : {"c:1", "c:2", "c:12", "c:2xc:2", "es:3:1:+", "frob:4:5:2"})
    sweep.push_back(FamilySpec::parse(text).build());

  for (const auto& g : sweep) {
    const CentralizerProfile p = profile(g);
    CHECK((p.cent_count == 1) == g.is_abelian());
    if (g.is_abelian()) {
      CHECK(p.nacent_count == 0);
      CHECK(p.omega == 1);
    } else {
      // A maximal pairwise non-commuting set gives pairwise distinct
      // centralizers, plus the whole group.
      CHECK(p.cent_count >= p.omega + 1);
    }
    CHECK(p.conjugate_type.front() == 1);
    CHECK(p.cent_count != 2);
    CHECK(p.cent_count != 3);
  }
}

TEST_CASE("profile serialization has stable keys and golden content") {
  const json j = profile_json(profile(quaternion_group(2)));
  const std::string expected =
      "{\"cent_count\":4,\"nacent_count\":1,\"omega\":3,\"z_class_count\":4,"
      "\"conjugate_type\":[1,2],\"is_ca\":true,\"is_f\":true,\"is_i\":true,"
      "\"center_order\":2,\"derived_order\":2,\"central_quotient_order\":4}";
  CHECK(j.dump() == expected);
}
