#include "cayley/lattice.hpp"

#include <algorithm>
#include <unordered_set>

namespace cayley {

namespace {

ElementSet closure_set(const FiniteGroup& g, const std::vector<int>& seed) {
  ElementSet bits(g.order());
  std::vector<int> members;
  for (int x : seed)
    if (!bits.contains(x)) {
      bits.insert(x);
      members.push_back(x);
    }
  for (std::size_t f = 0; f < members.size(); ++f)
    for (std::size_t j = 0; j < members.size(); ++j) {
      const int p = g.at(members[f], members[j]);
      if (!bits.contains(p)) {
        bits.insert(p);
        members.push_back(p);
      }
      const int q = g.at(members[j], members[f]);
      if (!bits.contains(q)) {
        bits.insert(q);
        members.push_back(q);
      }
    }
  return bits;
}

}  // namespace

std::vector<Subgroup> all_subgroups(const FiniteGroup& g, int max_lattice) {
  const int n = g.order();
  if (n > max_lattice)
    fail(Errc::too_large, "subgroup lattice of a group of order " + std::to_string(n) +
                              " exceeds the bound " + std::to_string(max_lattice));

  ElementSet trivial(n);
  trivial.insert(0);
  std::unordered_set<ElementSet, ElementSetHash> known{trivial};
  std::vector<ElementSet> frontier{trivial};

  while (!frontier.empty()) {
    std::vector<ElementSet> next;
    for (const ElementSet& s : frontier) {
      std::vector<int> seed = s.to_vector();
      seed.push_back(-1);
      for (int x = 1; x < n; ++x) {
        if (s.contains(x)) continue;
        seed.back() = x;
        ElementSet t = closure_set(g, seed);
        if (known.insert(t).second) next.push_back(std::move(t));
      }
    }
    frontier = std::move(next);
  }

  std::vector<Subgroup> out;
  out.reserve(known.size());
  for (const ElementSet& s : known) out.emplace_back(g, s.to_vector());
  std::sort(out.begin(), out.end(), [](const Subgroup& a, const Subgroup& b) {
    if (a.order() != b.order()) return a.order() < b.order();
    return a.elements() < b.elements();
  });
  return out;
}

}  // namespace cayley
