#pragma once

#include <optional>
#include <vector>

#include "cayley/group.hpp"

namespace cayley {

/// The centralizer statistics of one group. Conventions for abelian groups:
/// cent_count = 1, omega = 1, is_ca and is_f hold vacuously, is_i is false.
struct CentralizerProfile {
  int cent_count = 0;               // |Cent(G)|, distinct element centralizers
  int nacent_count = 0;             // non-abelian members of Cent(G)
  int omega = 0;                    // largest set of pairwise non-commuting elements
  int z_class_count = 0;            // classes of conjugate centralizers
  std::vector<int> conjugate_type;  // distinct centralizer indices [G : C(x)], ascending
  bool is_ca = false;               // every non-central element centralizer abelian
  bool is_f = false;                // no strict containment among those centralizers
  bool is_i = false;                // exactly two conjugacy class sizes
  int center_order = 0;
  int derived_order = 0;
  int central_quotient_order = 0;
};

/// { C_G(x) : x in G } deduplicated, sorted by (order, elements).
/// Always contains G itself.
std::vector<Subgroup> distinct_centralizers(const FiniteGroup& g);

/// The non-abelian members of distinct_centralizers.
std::vector<Subgroup> nacent(const FiniteGroup& g);

bool is_ca(const FiniteGroup& g);
bool is_f(const FiniteGroup& g);
bool is_i(const FiniteGroup& g);

std::vector<int> conjugate_type(const FiniteGroup& g);
bool is_conjugate_type(const FiniteGroup& g, int m);

/// Partition by conjugacy of centralizers: x ~ y iff some g conjugates
/// C(x) onto C(y). Classes sorted by smallest member; all central elements
/// share one class.
std::vector<std::vector<int>> z_classes(const FiniteGroup& g);

/// Exact clique number of the non-commuting graph (vertices are the
/// non-central elements), by branch and bound with greedy-coloring bounds;
/// 1 for abelian groups.
int omega(const FiniteGroup& g, int max_clique = Limits().max_clique);

struct SpecialFamily {
  std::optional<int> special_prime;             // set when G is a special p-group
  bool is_extraspecial = false;                 // special with |G'| = |Z| = p
  bool is_semi_extraspecial = false;            // G/N extraspecial for all maximal N < Z(G)
  bool is_ultraspecial = false;                 // semi-extraspecial with |G'|^2 = |G : G'|
  std::optional<int> elementary_abelian_prime;  // abelian, every non-identity element order p
};

SpecialFamily special_family(const FiniteGroup& g, int max_lattice = Limits().max_lattice);

CentralizerProfile profile(const FiniteGroup& g, int max_clique = Limits().max_clique);

}  // namespace cayley
