#include "cayley/isomorphism.hpp"

#include <algorithm>

namespace cayley {

namespace {

ElementSet span_closure(const FiniteGroup& g, ElementSet bits) {
  std::vector<int> members = bits.to_vector();
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

int centralizer_size(const FiniteGroup& g, int x) {
  int c = 0;
  for (int y = 0; y < g.order(); ++y)
    if (g.at(x, y) == g.at(y, x)) ++c;
  return c;
}

struct IsoSearch {
  const FiniteGroup& g;
  const FiniteGroup& h;
  const std::function<bool(const std::vector<int>&)>& visit;
  std::vector<int> gens;
  std::vector<std::vector<int>> candidates;  // per generator
  std::vector<int> img;                      // domain -> codomain, -1 unknown
  std::vector<char> used;                    // codomain hit
  std::vector<int> known;                    // discovery order of mapped elements

  bool assign(int a, int b) {
    if (img[a] != -1) return img[a] == b;
    if (used[b]) return false;
    img[a] = b;
    used[b] = 1;
    known.push_back(a);
    return true;
  }

  // Processes all products among mapped elements from position `from` on;
  // extends the map where forced, fails on any conflict.
  bool propagate(std::size_t from) {
    for (std::size_t f = from; f < known.size(); ++f) {
      const int x = known[f];
      for (std::size_t j = 0; j <= f; ++j) {
        const int y = known[j];
        if (!assign(g.at(x, y), h.at(img[x], img[y]))) return false;
        if (!assign(g.at(y, x), h.at(img[y], img[x]))) return false;
      }
    }
    return true;
  }

  void undo(std::size_t mark) {
    while (known.size() > mark) {
      const int a = known.back();
      known.pop_back();
      used[img[a]] = 0;
      img[a] = -1;
    }
  }

  // Returns true when the visitor asked to stop.
  bool search(std::size_t k) {
    if (k == gens.size()) return visit(img);
    const int a = gens[k];
    for (int b : candidates[k]) {
      if (used[b]) continue;
      const std::size_t mark = known.size();
      if (assign(a, b) && propagate(mark)) {
        if (search(k + 1)) return true;
      }
      undo(mark);
    }
    return false;
  }
};

}  // namespace

std::vector<int> minimal_generating_sequence(const FiniteGroup& g) {
  const int n = g.order();
  ElementSet span(n);
  span.insert(0);
  std::vector<int> gens;
  int next = 1;
  while (span.count() < n) {
    while (span.contains(next)) ++next;
    gens.push_back(next);
    span.insert(next);
    span = span_closure(g, std::move(span));
  }
  return gens;
}

void for_each_isomorphism(const FiniteGroup& g, const FiniteGroup& h,
                          const std::function<bool(const std::vector<int>&)>& visit) {
  const int n = g.order();
  if (n != h.order()) return;
  if (g.is_abelian() != h.is_abelian()) return;

  std::vector<int> g_ord(n), h_ord(n), g_cent(n), h_cent(n);
  for (int x = 0; x < n; ++x) {
    g_ord[x] = g.element_order(x);
    h_ord[x] = h.element_order(x);
    g_cent[x] = centralizer_size(g, x);
    h_cent[x] = centralizer_size(h, x);
  }
  {
    auto gs = g_ord, hs = h_ord;
    std::sort(gs.begin(), gs.end());
    std::sort(hs.begin(), hs.end());
    if (gs != hs) return;
    gs = g_cent;
    hs = h_cent;
    std::sort(gs.begin(), gs.end());
    std::sort(hs.begin(), hs.end());
    if (gs != hs) return;
  }

  IsoSearch s{g, h, visit, minimal_generating_sequence(g), {}, {}, {}, {}};
  s.candidates.resize(s.gens.size());
  for (std::size_t k = 0; k < s.gens.size(); ++k) {
    const int a = s.gens[k];
    for (int b = 1; b < n; ++b)
      if (h_ord[b] == g_ord[a] && h_cent[b] == g_cent[a]) s.candidates[k].push_back(b);
    if (s.candidates[k].empty()) return;
  }
  s.img.assign(n, -1);
  s.used.assign(n, 0);
  s.assign(0, 0);
  s.search(0);
}

std::optional<GroupMap> find_isomorphism(const FiniteGroup& g, const FiniteGroup& h) {
  std::optional<GroupMap> found;
  for_each_isomorphism(g, h, [&](const std::vector<int>& images) {
    found.emplace(g, h, images);
    return true;
  });
  return found;
}

}  // namespace cayley
