#pragma once

#include <string>
#include <vector>

#include "cayley/group.hpp"

namespace cayley {

struct CorpusEntry {
  std::string name;
  FiniteGroup group;
  std::vector<std::string> tags;
};

/// A named collection of validated groups. Names are unique.
struct Corpus {
  int max_order = 0;
  std::vector<CorpusEntry> entries;

  void add(std::string name, FiniteGroup group, std::vector<std::string> tags = {});
};

/// Deterministic corpus of the named families up to max_order: cyclic groups
/// (n <= 16 within bound), elementary abelian groups, dihedral and
/// generalized quaternion groups within bound, S3/S4/A4, extraspecial groups
/// for p in {2,3,5}, the Frobenius groups (4,5) and (6,7), semidirect and
/// gm:m instances, and direct products of small non-abelian groups with C2
/// and C3. Requires max_order >= 8.
Corpus builtin_corpus(int max_order);

}  // namespace cayley
