#include "cayley/group.hpp"

#include <algorithm>
#include <string>

namespace cayley {

const char* errc_name(Errc c) {
  switch (c) {
    case Errc::no_identity: return "no_identity";
    case Errc::not_latin_square: return "not_latin_square";
    case Errc::not_associative: return "not_associative";
    case Errc::too_large: return "too_large";
    case Errc::invalid_action: return "invalid_action";
    case Errc::bad_parameter: return "bad_parameter";
    case Errc::index_out_of_range: return "index_out_of_range";
    case Errc::foreign_subgroup: return "foreign_subgroup";
    case Errc::not_normal: return "not_normal";
    case Errc::unknown_check: return "unknown_check";
    case Errc::parse_error: return "parse_error";
    case Errc::io_error: return "io_error";
  }
  return "unknown";
}

namespace {

void check_index(const FiniteGroup& g, int a) {
  if (a < 0 || a >= g.order())
    fail(Errc::index_out_of_range,
         "element index " + std::to_string(a) + " out of range for group of order " +
             std::to_string(g.order()));
}

}  // namespace

FiniteGroup::FiniteGroup() {
  auto d = std::make_shared<Data>();
  d->n = 1;
  d->table = {0};
  d->inv = {0};
  d->abelian = true;
  d_ = std::move(d);
}

FiniteGroup FiniteGroup::from_cayley_table(const std::vector<std::vector<int>>& rows,
                                           std::string name, int max_order) {
  const int n = static_cast<int>(rows.size());
  std::vector<int> flat;
  flat.reserve(static_cast<std::size_t>(n) * n);
  for (const auto& row : rows) {
    if (static_cast<int>(row.size()) != n)
      fail(Errc::not_latin_square, "table is not square: row of length " +
                                       std::to_string(row.size()) + " in a table of order " +
                                       std::to_string(n));
    flat.insert(flat.end(), row.begin(), row.end());
  }
  return from_flat_table(n, std::move(flat), std::move(name), max_order);
}

FiniteGroup FiniteGroup::from_flat_table(int n, std::vector<int> table, std::string name,
                                         int max_order) {
  if (n < 1) fail(Errc::bad_parameter, "group order must be positive");
  if (n > max_order)
    fail(Errc::too_large, "order " + std::to_string(n) + " exceeds the validation bound " +
                              std::to_string(max_order));
  if (static_cast<int>(table.size()) != n * n)
    fail(Errc::not_latin_square, "flat table has " + std::to_string(table.size()) +
                                     " entries, expected " + std::to_string(n * n));

  auto entry = [&](int i, int j) { return table[i * n + j]; };

  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      const int v = entry(i, j);
      if (v < 0 || v >= n)
        fail(Errc::not_latin_square, "entry (" + std::to_string(i) + "," + std::to_string(j) +
                                         ") = " + std::to_string(v) + " is out of range");
    }

  for (int j = 0; j < n; ++j)
    if (entry(0, j) != j || entry(j, 0) != j)
      fail(Errc::no_identity, "element 0 is not a two-sided identity (fails at " +
                                  std::to_string(j) + ")");

  // Latin square: every row and column is a permutation.
  {
    std::vector<char> seen(n);
    for (int i = 0; i < n; ++i) {
      std::fill(seen.begin(), seen.end(), 0);
      for (int j = 0; j < n; ++j) {
        if (seen[entry(i, j)])
          fail(Errc::not_latin_square, "row " + std::to_string(i) + " repeats entry " +
                                           std::to_string(entry(i, j)));
        seen[entry(i, j)] = 1;
      }
    }
    for (int j = 0; j < n; ++j) {
      std::fill(seen.begin(), seen.end(), 0);
      for (int i = 0; i < n; ++i) {
        if (seen[entry(i, j)])
          fail(Errc::not_latin_square, "column " + std::to_string(j) + " repeats entry " +
                                           std::to_string(entry(i, j)));
        seen[entry(i, j)] = 1;
      }
    }
  }

  // Full associativity sweep; reports the first failing triple.
  const int* t = table.data();
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      const int ij = t[i * n + j];
      for (int k = 0; k < n; ++k)
        if (t[ij * n + k] != t[i * n + t[j * n + k]])
          fail(Errc::not_associative, "associativity fails at triple (" + std::to_string(i) +
                                          "," + std::to_string(j) + "," + std::to_string(k) +
                                          ")");
    }

  auto d = std::make_shared<Data>();
  d->n = n;
  d->table = std::move(table);
  d->name = std::move(name);

  // Two-sided inverses, asserted independently of the properties above.
  d->inv.assign(n, -1);
  for (int i = 0; i < n; ++i) {
    int found = -1;
    for (int j = 0; j < n; ++j)
      if (d->table[i * n + j] == 0 && d->table[j * n + i] == 0) {
        found = j;
        break;
      }
    if (found < 0)
      fail(Errc::not_latin_square, "element " + std::to_string(i) + " has no two-sided inverse");
    d->inv[i] = found;
  }

  d->abelian = true;
  for (int i = 0; i < n && d->abelian; ++i)
    for (int j = i + 1; j < n; ++j)
      if (d->table[i * n + j] != d->table[j * n + i]) {
        d->abelian = false;
        break;
      }

  return FiniteGroup(std::move(d));
}

int FiniteGroup::product(int a, int b) const {
  check_index(*this, a);
  check_index(*this, b);
  return at(a, b);
}

int FiniteGroup::inverse(int a) const {
  check_index(*this, a);
  return d_->inv[a];
}

int FiniteGroup::element_order(int a) const {
  check_index(*this, a);
  int x = a;
  int k = 1;
  while (x != 0) {
    x = at(x, a);
    ++k;
  }
  return k;
}

FiniteGroup FiniteGroup::renamed(std::string name) const {
  auto d = std::make_shared<Data>(*d_);
  d->name = std::move(name);
  return FiniteGroup(std::move(d));
}

std::vector<std::vector<int>> FiniteGroup::table_rows() const {
  const int n = d_->n;
  std::vector<std::vector<int>> rows(n);
  for (int i = 0; i < n; ++i)
    rows[i].assign(d_->table.begin() + i * n, d_->table.begin() + (i + 1) * n);
  return rows;
}

Subgroup::Subgroup(FiniteGroup parent, std::vector<int> elements)
    : parent_(std::move(parent)), elems_(std::move(elements)), bits_(parent_.order()) {
  std::sort(elems_.begin(), elems_.end());
  elems_.erase(std::unique(elems_.begin(), elems_.end()), elems_.end());
  const int n = parent_.order();
  for (int x : elems_) {
    if (x < 0 || x >= n)
      fail(Errc::index_out_of_range, "subgroup element " + std::to_string(x) + " out of range");
    bits_.insert(x);
  }
  if (elems_.empty() || elems_[0] != 0)
    fail(Errc::bad_parameter, "subgroup must contain the identity");
  for (int x : elems_) {
    if (!bits_.contains(parent_.inverse(x)))
      fail(Errc::bad_parameter, "subgroup not closed under inverse at " + std::to_string(x));
    for (int y : elems_)
      if (!bits_.contains(parent_.at(x, y)))
        fail(Errc::bad_parameter, "subgroup not closed under product at (" + std::to_string(x) +
                                      "," + std::to_string(y) + ")");
  }
  if (n % static_cast<int>(elems_.size()) != 0)
    fail(Errc::bad_parameter, "subgroup order does not divide group order");
}

bool Subgroup::is_abelian() const {
  for (int x : elems_)
    for (int y : elems_) {
      if (y >= x) break;
      if (parent_.at(x, y) != parent_.at(y, x)) return false;
    }
  return true;
}

FiniteGroup Subgroup::as_group(std::string name) const {
  const int m = order();
  std::vector<int> pos(parent_.order(), -1);
  for (int i = 0; i < m; ++i) pos[elems_[i]] = i;
  std::vector<int> table(static_cast<std::size_t>(m) * m);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) table[i * m + j] = pos[parent_.at(elems_[i], elems_[j])];
  return FiniteGroup::from_flat_table(m, std::move(table), std::move(name));
}

GroupMap::GroupMap(FiniteGroup domain, FiniteGroup codomain, std::vector<int> images)
    : domain_(std::move(domain)), codomain_(std::move(codomain)), images_(std::move(images)) {
  const int n = domain_.order();
  const int m = codomain_.order();
  if (static_cast<int>(images_.size()) != n)
    fail(Errc::bad_parameter, "map must assign an image to every domain element");
  for (int v : images_)
    if (v < 0 || v >= m) fail(Errc::bad_parameter, "map image out of codomain range");
  if (images_[0] != 0) fail(Errc::bad_parameter, "map must send identity to identity");
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      if (images_[domain_.at(a, b)] != codomain_.at(images_[a], images_[b]))
        fail(Errc::bad_parameter, "map is not multiplicative at (" + std::to_string(a) + "," +
                                      std::to_string(b) + ")");
  if (n == m) {
    std::vector<char> hit(m, 0);
    bijective_ = true;
    for (int v : images_) {
      if (hit[v]) {
        bijective_ = false;
        break;
      }
      hit[v] = 1;
    }
  }
}

int GroupMap::operator()(int a) const {
  check_index(domain_, a);
  return images_[a];
}

bool GroupMap::is_surjective() const {
  std::vector<char> hit(codomain_.order(), 0);
  for (int v : images_) hit[v] = 1;
  for (char h : hit)
    if (!h) return false;
  return true;
}

Subgroup GroupMap::kernel() const {
  std::vector<int> ker;
  for (int a = 0; a < domain_.order(); ++a)
    if (images_[a] == 0) ker.push_back(a);
  return Subgroup(domain_, std::move(ker));
}

GroupMap GroupMap::inverted() const {
  if (!bijective_) fail(Errc::bad_parameter, "cannot invert a non-bijective map");
  std::vector<int> inv(images_.size());
  for (int a = 0; a < static_cast<int>(images_.size()); ++a) inv[images_[a]] = a;
  return GroupMap(codomain_, domain_, std::move(inv));
}

GroupMap GroupMap::compose(const GroupMap& f, const GroupMap& g) {
  if (!(f.codomain() == g.domain()))
    fail(Errc::bad_parameter, "composition requires matching middle group");
  std::vector<int> images(f.domain().order());
  for (int a = 0; a < f.domain().order(); ++a) images[a] = g.images()[f.images()[a]];
  return GroupMap(f.domain(), g.codomain(), std::move(images));
}

int commutator(const FiniteGroup& g, int a, int b) {
  check_index(g, a);
  check_index(g, b);
  const int ia = g.inverse(a);
  const int ib = g.inverse(b);
  return g.at(g.at(g.at(ia, ib), a), b);
}

namespace {

// Closure of a seed set under products, as a bitset plus discovery list.
void close_under_product(const FiniteGroup& g, std::vector<int>& members, ElementSet& bits) {
  for (std::size_t f = 0; f < members.size(); ++f) {
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
  }
}

}  // namespace

Subgroup generated_subgroup(const FiniteGroup& g, std::span<const int> gens) {
  ElementSet bits(g.order());
  std::vector<int> members{0};
  bits.insert(0);
  for (int x : gens) {
    check_index(g, x);
    if (!bits.contains(x)) {
      bits.insert(x);
      members.push_back(x);
    }
  }
  close_under_product(g, members, bits);
  return Subgroup(g, std::move(members));
}

Subgroup center(const FiniteGroup& g) {
  const int n = g.order();
  std::vector<int> z;
  for (int x = 0; x < n; ++x) {
    bool central = true;
    for (int y = 0; y < n; ++y)
      if (g.at(x, y) != g.at(y, x)) {
        central = false;
        break;
      }
    if (central) z.push_back(x);
  }
  return Subgroup(g, std::move(z));
}

Subgroup centralizer(const FiniteGroup& g, int x) {
  check_index(g, x);
  std::vector<int> c;
  for (int y = 0; y < g.order(); ++y)
    if (g.at(x, y) == g.at(y, x)) c.push_back(y);
  return Subgroup(g, std::move(c));
}

Subgroup derived_subgroup(const FiniteGroup& g) {
  const int n = g.order();
  ElementSet bits(n);
  std::vector<int> members{0};
  bits.insert(0);
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b) {
      const int c = commutator(g, a, b);
      if (!bits.contains(c)) {
        bits.insert(c);
        members.push_back(c);
      }
      const int ci = g.inverse(c);  // [b,a] = [a,b]^-1
      if (!bits.contains(ci)) {
        bits.insert(ci);
        members.push_back(ci);
      }
    }
  close_under_product(g, members, bits);
  return Subgroup(g, std::move(members));
}

bool is_normal(const FiniteGroup& g, const Subgroup& s) {
  if (!(s.parent() == g))
    fail(Errc::foreign_subgroup, "subgroup belongs to a different parent group");
  for (int x = 0; x < g.order(); ++x) {
    const int xi = g.inverse(x);
    for (int h : s.elements())
      if (!s.contains(g.at(g.at(x, h), xi))) return false;
  }
  return true;
}

std::pair<FiniteGroup, GroupMap> quotient(const FiniteGroup& g, const Subgroup& n) {
  if (!is_normal(g, n)) fail(Errc::not_normal, "quotient requires a normal subgroup");
  const int order = g.order();
  std::vector<int> coset_of(order, -1);
  std::vector<int> reps;
  for (int x = 0; x < order; ++x) {
    if (coset_of[x] >= 0) continue;
    const int c = static_cast<int>(reps.size());
    reps.push_back(x);
    for (int h : n.elements()) coset_of[g.at(x, h)] = c;
  }
  const int q = static_cast<int>(reps.size());
  std::vector<int> table(static_cast<std::size_t>(q) * q);
  for (int i = 0; i < q; ++i)
    for (int j = 0; j < q; ++j) table[i * q + j] = coset_of[g.at(reps[i], reps[j])];
  std::string qname = g.name().empty() ? "" : g.name() + "/N";
  FiniteGroup quo = FiniteGroup::from_flat_table(q, std::move(table), std::move(qname));
  GroupMap proj(g, quo, std::move(coset_of));
  return {std::move(quo), std::move(proj)};
}

std::vector<std::vector<int>> conjugacy_classes(const FiniteGroup& g) {
  const int n = g.order();
  std::vector<char> seen(n, 0);
  std::vector<std::vector<int>> classes;
  for (int x = 0; x < n; ++x) {
    if (seen[x]) continue;
    std::vector<int> cls;
    for (int a = 0; a < n; ++a) {
      const int y = g.at(g.at(a, x), g.inverse(a));
      if (!seen[y]) {
        seen[y] = 1;
        cls.push_back(y);
      }
    }
    std::sort(cls.begin(), cls.end());
    classes.push_back(std::move(cls));
  }
  return classes;
}

ElementSet set_product(const FiniteGroup& g, const ElementSet& s, const ElementSet& t) {
  ElementSet out(g.order());
  for (int a = 0; a < g.order(); ++a) {
    if (!s.contains(a)) continue;
    for (int b = 0; b < g.order(); ++b)
      if (t.contains(b)) out.insert(g.at(a, b));
  }
  return out;
}

}  // namespace cayley
