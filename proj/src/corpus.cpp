#include "cayley/corpus.hpp"

#include <algorithm>

#include "cayley/families.hpp"

namespace cayley {

void Corpus::add(std::string name, FiniteGroup group, std::vector<std::string> tags) {
  for (const auto& e : entries)
    if (e.name == name) fail(Errc::bad_parameter, "duplicate corpus name '" + name + "'");
  entries.push_back(CorpusEntry{std::move(name), std::move(group), std::move(tags)});
}

Corpus builtin_corpus(int max_order) {
  if (max_order < 8) fail(Errc::bad_parameter, "builtin corpus needs max_order >= 8");
  Corpus corpus;
  corpus.max_order = max_order;

  auto add_spec = [&](const std::string& text, std::vector<std::string> tags) {
    FamilySpec spec = FamilySpec::parse(text);
    FiniteGroup g = spec.build();
    if (g.order() > max_order) return;
    corpus.add(text, g.renamed(text), std::move(tags));
  };

  for (int n = 1; n <= std::min(16, max_order); ++n)
    add_spec("c:" + std::to_string(n), {"cyclic"});

  add_spec("c:2xc:2", {"elementary-abelian"});
  add_spec("c:2xc:2xc:2", {"elementary-abelian"});
  add_spec("c:2xc:2xc:2xc:2", {"elementary-abelian"});
  add_spec("c:3xc:3", {"elementary-abelian"});
  add_spec("c:5xc:5", {"elementary-abelian"});

  for (int order = 4; order <= max_order; order += 2)
    add_spec("d:" + std::to_string(order), {"dihedral"});

  for (int order = 8; order <= max_order; order += 4)
    add_spec("q:" + std::to_string(order), {"quaternion"});

  add_spec("s:3", {"symmetric"});
  add_spec("s:4", {"symmetric"});
  add_spec("a:4", {"alternating"});

  for (int p : {2, 3, 5})
    for (int a = 1;; ++a) {
      long long order = 1;
      for (int i = 0; i < 2 * a + 1; ++i) order *= p;
      if (order > max_order) break;
      add_spec("es:" + std::to_string(p) + ":" + std::to_string(a) + ":+", {"extraspecial"});
      add_spec("es:" + std::to_string(p) + ":" + std::to_string(a) + ":-", {"extraspecial"});
    }

  add_spec("frob:4:5:2", {"frobenius"});
  add_spec("frob:6:7:3", {"frobenius"});

  add_spec("sd:7:3:2", {"semidirect"});
  add_spec("sd:9:3:4", {"semidirect"});

  for (int m = 1; (3 << m) <= max_order; ++m) add_spec("gm:" + std::to_string(m), {"modular"});

  for (const std::string base : {"s:3", "d:8", "q:8", "d:10", "d:14", "a:4"})
    for (const std::string factor : {"c:2", "c:3"})
      add_spec(base + "x" + factor, {"product"});

  return corpus;
}

}  // namespace cayley
