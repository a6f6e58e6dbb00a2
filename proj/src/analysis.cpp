#include "cayley/analysis.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <unordered_map>

#include "cayley/families.hpp"
#include "cayley/lattice.hpp"

namespace cayley {

namespace {

std::vector<ElementSet> centralizer_sets(const FiniteGroup& g) {
  const int n = g.order();
  std::vector<ElementSet> sets(n, ElementSet(n));
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      if (g.at(x, y) == g.at(y, x)) sets[x].insert(y);
  return sets;
}

std::vector<ElementSet> distinct_sets(const std::vector<ElementSet>& sets) {
  std::vector<ElementSet> out;
  std::unordered_map<ElementSet, char, ElementSetHash> seen;
  for (const auto& s : sets)
    if (seen.emplace(s, 1).second) out.push_back(s);
  return out;
}

bool set_abelian(const FiniteGroup& g, const ElementSet& s) {
  const auto elems = s.to_vector();
  for (std::size_t i = 0; i < elems.size(); ++i)
    for (std::size_t j = i + 1; j < elems.size(); ++j)
      if (g.at(elems[i], elems[j]) != g.at(elems[j], elems[i])) return false;
  return true;
}

}  // namespace

std::vector<Subgroup> distinct_centralizers(const FiniteGroup& g) {
  std::vector<Subgroup> out;
  for (const auto& s : distinct_sets(centralizer_sets(g))) out.emplace_back(g, s.to_vector());
  std::sort(out.begin(), out.end(), [](const Subgroup& a, const Subgroup& b) {
    if (a.order() != b.order()) return a.order() < b.order();
    return a.elements() < b.elements();
  });
  return out;
}

std::vector<Subgroup> nacent(const FiniteGroup& g) {
  std::vector<Subgroup> out;
  for (auto& c : distinct_centralizers(g))
    if (!c.is_abelian()) out.push_back(std::move(c));
  return out;
}

bool is_ca(const FiniteGroup& g) {
  const int n = g.order();
  for (const auto& c : distinct_sets(centralizer_sets(g))) {
    if (c.count() == n) continue;  // centralizer of a central element
    if (!set_abelian(g, c)) return false;
  }
  return true;
}

bool is_f(const FiniteGroup& g) {
  const int n = g.order();
  std::vector<ElementSet> proper;
  for (auto& c : distinct_sets(centralizer_sets(g)))
    if (c.count() < n) proper.push_back(std::move(c));
  for (std::size_t i = 0; i < proper.size(); ++i)
    for (std::size_t j = 0; j < proper.size(); ++j) {
      if (i == j) continue;
      if (proper[i].count() < proper[j].count() && proper[i].is_subset_of(proper[j]))
        return false;
    }
  return true;
}

bool is_i(const FiniteGroup& g) {
  std::vector<int> sizes;
  for (const auto& cls : conjugacy_classes(g)) sizes.push_back(static_cast<int>(cls.size()));
  std::sort(sizes.begin(), sizes.end());
  sizes.erase(std::unique(sizes.begin(), sizes.end()), sizes.end());
  return sizes.size() == 2 && sizes[0] == 1;
}

std::vector<int> conjugate_type(const FiniteGroup& g) {
  const int n = g.order();
  std::vector<int> indices;
  for (const auto& c : centralizer_sets(g)) indices.push_back(n / c.count());
  std::sort(indices.begin(), indices.end());
  indices.erase(std::unique(indices.begin(), indices.end()), indices.end());
  return indices;
}

bool is_conjugate_type(const FiniteGroup& g, int m) {
  return conjugate_type(g) == std::vector<int>{1, m};
}

std::vector<std::vector<int>> z_classes(const FiniteGroup& g) {
  const int n = g.order();
  const auto sets = centralizer_sets(g);

  // Group elements with identical centralizers, then merge groups whose
  // centralizers are conjugate as sets.
  std::unordered_map<ElementSet, int, ElementSetHash> id_of;
  std::vector<ElementSet> reps;
  std::vector<int> elem_id(n);
  for (int x = 0; x < n; ++x) {
    auto [it, fresh] = id_of.emplace(sets[x], static_cast<int>(reps.size()));
    if (fresh) reps.push_back(sets[x]);
    elem_id[x] = it->second;
  }

  const int k = static_cast<int>(reps.size());
  std::vector<int> root(k);
  for (int i = 0; i < k; ++i) root[i] = i;
  std::function<int(int)> find = [&](int i) {
    while (root[i] != i) i = root[i] = root[root[i]];
    return i;
  };

  for (int i = 0; i < k; ++i) {
    const auto elems = reps[i].to_vector();
    for (int a = 0; a < n; ++a) {
      const int ai = g.inverse(a);
      ElementSet conj(n);
      for (int x : elems) conj.insert(g.at(g.at(a, x), ai));
      auto it = id_of.find(conj);
      if (it != id_of.end()) {
        const int ri = find(i), rj = find(it->second);
        if (ri != rj) root[std::max(ri, rj)] = std::min(ri, rj);
      }
    }
  }

  std::map<int, std::vector<int>> by_root;
  for (int x = 0; x < n; ++x) by_root[find(elem_id[x])].push_back(x);
  std::vector<std::vector<int>> classes;
  for (auto& [r, members] : by_root) {
    std::sort(members.begin(), members.end());
    classes.push_back(std::move(members));
  }
  std::sort(classes.begin(), classes.end(),
            [](const auto& a, const auto& b) { return a.front() < b.front(); });
  return classes;
}

namespace {

// Tomita-style max clique: candidates kept sorted by greedy color, the color
// giving the bound for pruning.
struct CliqueSearch {
  const std::vector<ElementSet>& adj;
  int best = 0;

  void color_sort(const std::vector<int>& p, std::vector<int>& order, std::vector<int>& bound) {
    order.clear();
    bound.clear();
    std::vector<std::vector<int>> classes;
    for (int v : p) {
      bool placed = false;
      for (auto& cls : classes) {
        bool clash = false;
        for (int u : cls)
          if (adj[v].contains(u)) {
            clash = true;
            break;
          }
        if (!clash) {
          cls.push_back(v);
          placed = true;
          break;
        }
      }
      if (!placed) classes.push_back({v});
    }
    for (std::size_t c = 0; c < classes.size(); ++c)
      for (int v : classes[c]) {
        order.push_back(v);
        bound.push_back(static_cast<int>(c) + 1);
      }
  }

  void expand(std::vector<int> order, std::vector<int> bound, int depth) {
    while (!order.empty()) {
      const int v = order.back();
      const int b = bound.back();
      if (depth + b <= best) return;
      order.pop_back();
      bound.pop_back();
      std::vector<int> next;
      for (int u : order)
        if (adj[v].contains(u)) next.push_back(u);
      if (next.empty()) {
        best = std::max(best, depth + 1);
      } else {
        std::vector<int> norder, nbound;
        color_sort(next, norder, nbound);
        expand(std::move(norder), std::move(nbound), depth + 1);
      }
    }
  }
};

}  // namespace

int omega(const FiniteGroup& g, int max_clique) {
  if (g.order() > max_clique)
    fail(Errc::too_large, "clique search on a group of order " + std::to_string(g.order()) +
                              " exceeds the bound " + std::to_string(max_clique));
  if (g.is_abelian()) return 1;

  const Subgroup z = center(g);
  std::vector<int> verts;
  for (int x = 0; x < g.order(); ++x)
    if (!z.contains(x)) verts.push_back(x);
  const int m = static_cast<int>(verts.size());

  std::vector<ElementSet> adj(m, ElementSet(m));
  for (int i = 0; i < m; ++i)
    for (int j = i + 1; j < m; ++j)
      if (g.at(verts[i], verts[j]) != g.at(verts[j], verts[i])) {
        adj[i].insert(j);
        adj[j].insert(i);
      }

  std::vector<int> all(m);
  for (int i = 0; i < m; ++i) all[i] = i;
  std::stable_sort(all.begin(), all.end(),
                   [&](int a, int b) { return adj[a].count() > adj[b].count(); });

  CliqueSearch search{adj};
  std::vector<int> order, bound;
  search.color_sort(all, order, bound);
  search.expand(std::move(order), std::move(bound), 0);
  return search.best;
}

namespace {

std::optional<int> p_power_prime(int order) {
  if (order < 2) return std::nullopt;
  int p = 2;
  while (order % p != 0) ++p;
  int rest = order;
  while (rest % p == 0) rest /= p;
  if (rest != 1) return std::nullopt;
  return p;
}

bool set_elementary_abelian(const FiniteGroup& g, const std::vector<int>& elems, int p) {
  for (int x : elems) {
    if (x == 0) continue;
    if (g.element_order(x) != p) return false;
    for (int y : elems)
      if (g.at(x, y) != g.at(y, x)) return false;
  }
  return true;
}

bool group_elementary_abelian(const FiniteGroup& g, int p) {
  if (!g.is_abelian()) return false;
  for (int x = 1; x < g.order(); ++x)
    if (g.element_order(x) != p) return false;
  return true;
}

bool extraspecial_flag(const FiniteGroup& g) {
  const auto p = p_power_prime(g.order());
  if (!p) return false;
  const Subgroup z = center(g);
  const Subgroup der = derived_subgroup(g);
  if (z.order() != *p || der.order() != *p) return false;
  if (!(z.elements() == der.elements())) return false;
  const auto [quo, proj] = quotient(g, der);
  return group_elementary_abelian(quo, *p);
}

}  // namespace

SpecialFamily special_family(const FiniteGroup& g, int max_lattice) {
  SpecialFamily out;

  if (g.is_abelian() && g.order() > 1) {
    const int p = g.element_order(1);
    if (is_prime(p) && group_elementary_abelian(g, p)) out.elementary_abelian_prime = p;
  }

  const auto p = p_power_prime(g.order());
  if (!p) return out;

  const Subgroup z = center(g);
  const Subgroup der = derived_subgroup(g);
  if (z.elements() == der.elements() && set_elementary_abelian(g, z.elements(), *p)) {
    const auto [quo, proj] = quotient(g, der);
    if (group_elementary_abelian(quo, *p)) out.special_prime = *p;
  }
  out.is_extraspecial = out.special_prime.has_value() && z.order() == *p;

  // Semi-extraspecial: every quotient by a maximal subgroup of the center is
  // extraspecial. Maximal subgroups are found in the center's own lattice.
  bool semi = true;
  const FiniteGroup zg = z.as_group();
  const auto zsubs = all_subgroups(zg, max_lattice);
  bool any = false;
  for (const auto& s : zsubs) {
    if (s.order() * *p != z.order()) continue;  // maximal in Z(G) means index p
    any = true;
    std::vector<int> parent_elems;
    for (int i : s.elements()) parent_elems.push_back(z.elements()[i]);
    const auto [quo, proj] = quotient(g, Subgroup(g, parent_elems));
    if (!extraspecial_flag(quo)) {
      semi = false;
      break;
    }
  }
  out.is_semi_extraspecial = any && semi;
  out.is_ultraspecial = out.is_semi_extraspecial &&
                        der.order() * der.order() == g.order() / der.order();
  return out;
}

CentralizerProfile profile(const FiniteGroup& g, int max_clique) {
  CentralizerProfile p;
  const int n = g.order();
  auto dist = distinct_sets(centralizer_sets(g));
  p.cent_count = static_cast<int>(dist.size());
  for (const auto& c : dist)
    if (!set_abelian(g, c)) ++p.nacent_count;
  p.omega = omega(g, max_clique);
  p.z_class_count = static_cast<int>(z_classes(g).size());
  p.conjugate_type = conjugate_type(g);
  p.is_ca = is_ca(g);
  p.is_f = is_f(g);
  p.is_i = is_i(g);
  p.center_order = center(g).order();
  p.derived_order = derived_subgroup(g).order();
  p.central_quotient_order = n / p.center_order;
  return p;
}

}  // namespace cayley
