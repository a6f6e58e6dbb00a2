#include "cayley/isoclinism.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "cayley/analysis.hpp"
#include "cayley/isomorphism.hpp"

namespace cayley {

std::pair<FiniteGroup, GroupMap> central_quotient(const FiniteGroup& g) {
  auto [quo, proj] = quotient(g, center(g));
  if (!g.name().empty()) quo = quo.renamed(g.name() + "/Z");
  return {std::move(quo), GroupMap(g, quo, proj.images())};
}

CommutatorPairing commutator_pairing(const FiniteGroup& g) {
  auto [quo, proj] = central_quotient(g);
  const int q = quo.order();
  std::vector<int> reps(q, -1);
  for (int x = 0; x < g.order(); ++x)
    if (reps[proj.images()[x]] == -1) reps[proj.images()[x]] = x;
  std::vector<int> table(static_cast<std::size_t>(q) * q);
  for (int i = 0; i < q; ++i)
    for (int j = 0; j < q; ++j) table[i * q + j] = commutator(g, reps[i], reps[j]);
  // Representative independence, re-checked over every element pair.
  for (int x = 0; x < g.order(); ++x)
    for (int y = 0; y < g.order(); ++y)
      if (commutator(g, x, y) != table[proj.images()[x] * q + proj.images()[y]])
        throw std::logic_error("commutator pairing depends on coset representatives");
  return CommutatorPairing{std::move(quo), std::move(proj), std::move(reps), std::move(table)};
}

Fingerprint fingerprint(const FiniteGroup& g, const Limits& limits) {
  Fingerprint fp;
  const CentralizerProfile p = profile(g, limits.max_clique);
  fp.central_quotient_order = p.central_quotient_order;
  fp.derived_order = p.derived_order;
  fp.cent_count = p.cent_count;
  fp.nacent_count = p.nacent_count;
  fp.omega = p.omega;
  fp.z_class_count = p.z_class_count;
  const CommutatorPairing pairing = commutator_pairing(g);
  std::map<int, int> fibers;
  for (int v : pairing.table) ++fibers[v];
  for (const auto& [value, count] : fibers) fp.pairing_fiber_multiset.push_back(count);
  std::sort(fp.pairing_fiber_multiset.begin(), fp.pairing_fiber_multiset.end());
  return fp;
}

namespace {

// Extends the coset-pair constraints psi([g1,g2]) = [h1,h2] to a total map on
// the derived subgroup by product propagation; empty on conflict.
std::optional<std::vector<int>> propagate_psi(const FiniteGroup& g, const FiniteGroup& h,
                                              const CommutatorPairing& kg,
                                              const CommutatorPairing& kh,
                                              const std::vector<int>& phi,
                                              const Subgroup& gder, const Subgroup& hder) {
  std::vector<int> img(g.order(), -1);
  std::vector<char> used(h.order(), 0);
  std::vector<int> known;

  auto assign = [&](int a, int b) {
    if (img[a] != -1) return img[a] == b;
    if (used[b]) return false;
    img[a] = b;
    used[b] = 1;
    known.push_back(a);
    return true;
  };

  const int q = kg.quotient.order();
  for (int i = 0; i < q; ++i)
    for (int j = 0; j < q; ++j)
      if (!assign(kg.at(i, j), kh.table[phi[i] * q + phi[j]])) return std::nullopt;

  for (std::size_t f = 0; f < known.size(); ++f)
    for (std::size_t j2 = 0; j2 <= f; ++j2) {
      const int x = known[f], y = known[j2];
      if (!assign(g.at(x, y), h.at(img[x], img[y]))) return std::nullopt;
      if (!assign(g.at(y, x), h.at(img[y], img[x]))) return std::nullopt;
    }

  // The pairing image generates the derived subgroup, so propagation must
  // have covered it; the image must exhaust the other derived subgroup.
  if (static_cast<int>(known.size()) != gder.order()) return std::nullopt;
  for (int x : gder.elements())
    if (img[x] < 0 || !hder.contains(img[x])) return std::nullopt;
  return img;
}

}  // namespace

std::optional<IsoclinismWitness> are_isoclinic(const FiniteGroup& g, const FiniteGroup& h,
                                               const Limits& limits) {
  const auto [qg, projg] = central_quotient(g);
  const auto [qh, projh] = central_quotient(h);
  if (qg.order() > limits.max_isoclinism || qh.order() > limits.max_isoclinism)
    fail(Errc::too_large, "central quotient order exceeds the isoclinism bound " +
                              std::to_string(limits.max_isoclinism));
  if (fingerprint(g, limits) != fingerprint(h, limits)) return std::nullopt;

  const CommutatorPairing kg = commutator_pairing(g);
  const CommutatorPairing kh = commutator_pairing(h);
  const Subgroup gder = derived_subgroup(g);
  const Subgroup hder = derived_subgroup(h);

  std::vector<int> gpos(g.order(), -1), hpos(h.order(), -1);
  for (int i = 0; i < gder.order(); ++i) gpos[gder.elements()[i]] = i;
  for (int i = 0; i < hder.order(); ++i) hpos[hder.elements()[i]] = i;

  std::optional<IsoclinismWitness> witness;
  for_each_isomorphism(kg.quotient, kh.quotient, [&](const std::vector<int>& phi) {
    const auto psi_parent = propagate_psi(g, h, kg, kh, phi, gder, hder);
    if (!psi_parent) return false;
    std::vector<int> psi(gder.order());
    for (int i = 0; i < gder.order(); ++i) psi[i] = hpos[(*psi_parent)[gder.elements()[i]]];
    witness = IsoclinismWitness{
        kg.projection,
        kh.projection,
        GroupMap(kg.quotient, kh.quotient, phi),
        GroupMap(gder.as_group(), hder.as_group(), std::move(psi)),
        gder,
        hder,
    };
    return true;
  });
  return witness;
}

bool verify_witness(const FiniteGroup& g, const FiniteGroup& h, const IsoclinismWitness& w) {
  if (!(w.proj_g.domain() == g) || !(w.proj_h.domain() == h)) return false;
  if (!(w.phi.domain() == w.proj_g.codomain()) || !(w.phi.codomain() == w.proj_h.codomain()))
    return false;
  if (!w.phi.is_isomorphism() || !w.psi.is_isomorphism()) return false;
  if (!w.proj_g.is_surjective() || !w.proj_h.is_surjective()) return false;

  // Projections must be exactly the central quotient maps.
  if (!(w.proj_g.kernel().elements() == center(g).elements())) return false;
  if (!(w.proj_h.kernel().elements() == center(h).elements())) return false;

  const Subgroup gder = derived_subgroup(g);
  const Subgroup hder = derived_subgroup(h);
  if (!(w.g_derived == gder) || !(w.h_derived == hder)) return false;
  if (!(w.psi.domain() == gder.as_group()) || !(w.psi.codomain() == hder.as_group()))
    return false;

  std::vector<int> gpos(g.order(), -1);
  for (int i = 0; i < gder.order(); ++i) gpos[gder.elements()[i]] = i;

  // kappa on the H side built from the witness's own projection, checked for
  // representative independence over every pair of H elements.
  const int q = w.phi.domain().order();
  if (w.phi.codomain().order() != q) return false;
  std::vector<int> hreps(q, -1);
  for (int x = 0; x < h.order(); ++x)
    if (hreps[w.proj_h.images()[x]] == -1) hreps[w.proj_h.images()[x]] = x;
  std::vector<int> kh(static_cast<std::size_t>(q) * q);
  for (int i = 0; i < q; ++i)
    for (int j = 0; j < q; ++j) kh[i * q + j] = commutator(h, hreps[i], hreps[j]);
  for (int x = 0; x < h.order(); ++x)
    for (int y = 0; y < h.order(); ++y)
      if (commutator(h, x, y) != kh[w.proj_h.images()[x] * q + w.proj_h.images()[y]])
        return false;

  // Compatibility over every pair of G elements.
  for (int x = 0; x < g.order(); ++x)
    for (int y = 0; y < g.order(); ++y) {
      const int c = commutator(g, x, y);
      if (gpos[c] < 0) return false;
      const int mapped = hder.elements()[w.psi.images()[gpos[c]]];
      const int i = w.phi.images()[w.proj_g.images()[x]];
      const int j = w.phi.images()[w.proj_g.images()[y]];
      if (mapped != kh[i * q + j]) return false;
    }
  return true;
}

IsoclinismWitness inverted_witness(const IsoclinismWitness& w) {
  return IsoclinismWitness{w.proj_h,     w.proj_g,     w.phi.inverted(),
                           w.psi.inverted(), w.h_derived, w.g_derived};
}

IsoclinismWitness composed_witness(const IsoclinismWitness& gh, const IsoclinismWitness& hk) {
  if (!(gh.proj_h.domain() == hk.proj_g.domain()))
    fail(Errc::bad_parameter, "witness composition requires a common middle group");
  return IsoclinismWitness{gh.proj_g,
                           hk.proj_h,
                           GroupMap::compose(gh.phi, hk.phi),
                           GroupMap::compose(gh.psi, hk.psi),
                           gh.g_derived,
                           hk.h_derived};
}

}  // namespace cayley
