#pragma once

#include <optional>
#include <vector>

#include "cayley/group.hpp"

namespace cayley {

/// The commutator map on central cosets: kappa(aZ, bZ) = [a, b], which is
/// well defined because commutators are constant on cosets of the center
/// (re-verified exhaustively at construction).
struct CommutatorPairing {
  FiniteGroup quotient;   // G/Z(G)
  GroupMap projection;    // G -> G/Z(G)
  std::vector<int> reps;  // minimal representative of each coset
  std::vector<int> table; // q*q values, elements of the derived subgroup

  int at(int i, int j) const { return table[i * quotient.order() + j]; }
};

/// quotient(g, center(g)) with its projection.
std::pair<FiniteGroup, GroupMap> central_quotient(const FiniteGroup& g);

CommutatorPairing commutator_pairing(const FiniteGroup& g);

/// Isoclinism invariants used for fast rejection, equal for isoclinic groups.
/// pairing_fiber_multiset counts, per value of the commutator pairing, how
/// many coset pairs hit it (sorted ascending).
struct Fingerprint {
  int central_quotient_order = 0;
  int derived_order = 0;
  int cent_count = 0;
  int nacent_count = 0;
  int omega = 0;
  int z_class_count = 0;
  std::vector<int> pairing_fiber_multiset;

  friend bool operator==(const Fingerprint&, const Fingerprint&) = default;
};

Fingerprint fingerprint(const FiniteGroup& g, const Limits& limits = {});

/// A compatible pair of isomorphisms certifying isoclinism: phi between the
/// central quotients and psi between the derived subgroups (as standalone
/// groups, element i being the i-th smallest member), with
/// psi([g1,g2]) = [h1,h2] whenever phi matches the cosets of g1, g2 with
/// those of h1, h2.
struct IsoclinismWitness {
  GroupMap proj_g;        // G -> G/Z(G)
  GroupMap proj_h;        // H -> H/Z(H)
  GroupMap phi;           // G/Z(G) -> H/Z(H)
  GroupMap psi;           // derived(G) -> derived(H), in as_group coordinates
  Subgroup g_derived;
  Subgroup h_derived;
};

/// Decides isoclinism. Fingerprint mismatch means absent; otherwise the
/// quotient isomorphisms phi are enumerated deterministically and psi is
/// propagated from the compatibility constraints (it is fully determined on
/// the pairing image, which generates the derived subgroup).
std::optional<IsoclinismWitness> are_isoclinic(const FiniteGroup& g, const FiniteGroup& h,
                                               const Limits& limits = {});

/// Exhaustive audit of a witness against the two groups; false on any
/// structural mismatch or compatibility violation, never throws.
bool verify_witness(const FiniteGroup& g, const FiniteGroup& h, const IsoclinismWitness& w);

/// The same witness read in the other direction.
IsoclinismWitness inverted_witness(const IsoclinismWitness& w);

/// Witness for g ~ k from witnesses g ~ h and h ~ k.
IsoclinismWitness composed_witness(const IsoclinismWitness& gh, const IsoclinismWitness& hk);

}  // namespace cayley
