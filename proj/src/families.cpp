#include "cayley/families.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>

namespace cayley {

bool is_prime(int p) {
  if (p < 2) return false;
  for (int d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

int powmod(long long base, long long exp, long long mod) {
  if (mod == 1) return 0;
  long long r = 1;
  base %= mod;
  if (base < 0) base += mod;
  while (exp > 0) {
    if (exp & 1) r = r * base % mod;
    base = base * base % mod;
    exp >>= 1;
  }
  return static_cast<int>(r);
}

namespace {

FiniteGroup build_table(int n, const std::string& name,
                        const std::function<int(int, int)>& mul) {
  std::vector<int> table(static_cast<std::size_t>(n) * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) table[i * n + j] = mul(i, j);
  return FiniteGroup::from_flat_table(n, std::move(table), name);
}

int mod(int a, int m) {
  const int r = a % m;
  return r < 0 ? r + m : r;
}

}  // namespace

FiniteGroup cyclic_group(int n) {
  if (n < 1) fail(Errc::bad_parameter, "cyclic group needs n >= 1");
  return build_table(n, "c:" + std::to_string(n),
                     [n](int i, int j) { return (i + j) % n; });
}

FiniteGroup dihedral_group(int n) {
  if (n < 1) fail(Errc::bad_parameter, "dihedral group needs n >= 1");
  // (k1,e1)(k2,e2) = (k1 + (-1)^e1 k2, e1+e2) with index k + e*n.
  return build_table(2 * n, "d:" + std::to_string(2 * n), [n](int x, int y) {
    const int k1 = x % n, e1 = x / n;
    const int k2 = y % n, e2 = y / n;
    const int k = mod(k1 + (e1 ? -k2 : k2), n);
    return k + ((e1 ^ e2) ? n : 0);
  });
}

FiniteGroup quaternion_group(int m) {
  if (m < 2) fail(Errc::bad_parameter, "generalized quaternion group needs m >= 2");
  const int n2 = 2 * m;
  // a^i . a^j = a^(i+j);  a^i . a^j b = a^(i+j) b
  // a^i b . a^j = a^(i-j) b;  a^i b . a^j b = a^(i-j+m)
  return build_table(4 * m, "q:" + std::to_string(4 * m), [m, n2](int x, int y) {
    const int i = x % n2, bi = x / n2;
    const int j = y % n2, bj = y / n2;
    if (!bi && !bj) return mod(i + j, n2);
    if (!bi && bj) return mod(i + j, n2) + n2;
    if (bi && !bj) return mod(i - j, n2) + n2;
    return mod(i - j + m, n2);
  });
}

namespace {

std::vector<std::vector<int>> permutations_lex(int n) {
  std::vector<int> p(n);
  std::iota(p.begin(), p.end(), 0);
  std::vector<std::vector<int>> all;
  do {
    all.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  return all;
}

bool is_even_permutation(const std::vector<int>& p) {
  int inversions = 0;
  for (std::size_t i = 0; i < p.size(); ++i)
    for (std::size_t j = i + 1; j < p.size(); ++j)
      if (p[i] > p[j]) ++inversions;
  return inversions % 2 == 0;
}

FiniteGroup permutation_group(std::vector<std::vector<int>> perms, const std::string& name) {
  const int n = static_cast<int>(perms.size());
  std::map<std::vector<int>, int> index;
  for (int i = 0; i < n; ++i) index[perms[i]] = i;
  std::vector<int> table(static_cast<std::size_t>(n) * n);
  std::vector<int> comp(perms[0].size());
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      for (std::size_t x = 0; x < comp.size(); ++x) comp[x] = perms[i][perms[j][x]];
      table[i * n + j] = index.at(comp);
    }
  return FiniteGroup::from_flat_table(n, std::move(table), name);
}

}  // namespace

FiniteGroup symmetric_group(int n) {
  if (n < 1 || n > 5) fail(Errc::bad_parameter, "symmetric group supported for 1 <= n <= 5");
  return permutation_group(permutations_lex(n), "s:" + std::to_string(n));
}

FiniteGroup alternating_group(int n) {
  if (n != 4) fail(Errc::bad_parameter, "alternating group supported for n = 4 only");
  std::vector<std::vector<int>> evens;
  for (auto& p : permutations_lex(n))
    if (is_even_permutation(p)) evens.push_back(std::move(p));
  return permutation_group(std::move(evens), "a:" + std::to_string(n));
}

FiniteGroup direct_product(const FiniteGroup& a, const FiniteGroup& b) {
  const int na = a.order(), nb = b.order();
  std::string name;
  if (!a.name().empty() && !b.name().empty()) name = a.name() + "x" + b.name();
  return build_table(na * nb, name, [&a, &b, nb](int x, int y) {
    return a.at(x / nb, y / nb) * nb + b.at(x % nb, y % nb);
  });
}

FiniteGroup semidirect_cyclic(int n, int p, int r) {
  if (n < 1 || p < 1) fail(Errc::bad_parameter, "semidirect product needs n, p >= 1");
  r = mod(r, std::max(n, 1));
  if (n > 1 && std::gcd(r, n) != 1)
    fail(Errc::invalid_action, "action x -> x^" + std::to_string(r) + " is not invertible mod " +
                                   std::to_string(n));
  if (n > 1 && powmod(r, p, n) != 1)
    fail(Errc::invalid_action, "r^p != 1 (mod n): the action does not define C_" +
                                   std::to_string(p) + " on C_" + std::to_string(n));
  // Powers of r per exponent of the acting generator.
  std::vector<int> rp(p, 0);
  if (n > 1) {
    rp[0] = 1;
    for (int k = 1; k < p; ++k) rp[k] = static_cast<int>(1LL * rp[k - 1] * r % n);
  }
  const std::string name =
      "sd:" + std::to_string(n) + ":" + std::to_string(p) + ":" + std::to_string(r);
  // (x1,k1)(x2,k2) = (x1 + r^k1 x2, k1 + k2), index x*p + k.
  return build_table(n * p, name, [n, p, &rp](int u, int v) {
    const int x1 = u / p, k1 = u % p;
    const int x2 = v / p, k2 = v % p;
    const int x = n == 1 ? 0 : static_cast<int>((x1 + 1LL * rp[k1] * x2) % n);
    return x * p + (k1 + k2) % p;
  });
}

FiniteGroup frobenius_group(int m, int n, int r) {
  if (m < 2 || n < 2) fail(Errc::bad_parameter, "Frobenius group needs m, n >= 2");
  r = mod(r, n);
  if (std::gcd(r, n) != 1 || powmod(r, m, n) != 1)
    fail(Errc::invalid_action, "r must have multiplicative order exactly " + std::to_string(m) +
                                   " mod " + std::to_string(n));
  // Fixed-point-free: r^k - 1 must be invertible mod n for 0 < k < m. This
  // also forces the order of r to be exactly m.
  int rk = 1;
  for (int k = 1; k < m; ++k) {
    rk = static_cast<int>(1LL * rk * r % n);
    if (std::gcd(mod(rk - 1, n), n) != 1)
      fail(Errc::invalid_action, "action has a fixed point: gcd(r^" + std::to_string(k) +
                                     " - 1, n) != 1");
  }
  FiniteGroup g = semidirect_cyclic(n, m, r);
  return g.renamed("frob:" + std::to_string(m) + ":" + std::to_string(n) + ":" +
                   std::to_string(r));
}

namespace {

// Exponent-p group of order p^3 (odd p): triples (x,y,z) with
// (x1,y1,z1)(x2,y2,z2) = (x1+x2, y1+y2, z1+z2+x1*y2), index x*p^2 + y*p + z.
FiniteGroup heisenberg_group(int p) {
  const int p2 = p * p;
  return build_table(p2 * p, "", [p, p2](int u, int v) {
    const int x1 = u / p2, y1 = (u / p) % p, z1 = u % p;
    const int x2 = v / p2, y2 = (v / p) % p, z2 = v % p;
    return ((x1 + x2) % p) * p2 + ((y1 + y2) % p) * p + (z1 + z2 + x1 * y2) % p;
  });
}

}  // namespace

FiniteGroup central_product(const FiniteGroup& g, const FiniteGroup& h) {
  const Subgroup zg = center(g);
  const Subgroup zh = center(h);
  if (zg.order() != zh.order() || zg.order() < 2 || !is_prime(zg.order()))
    fail(Errc::bad_parameter, "central product requires centers of equal prime order");
  const int a = zg.elements()[1];
  const int b = zh.elements()[1];
  FiniteGroup d = direct_product(g, h);
  // Identify (a, 1) with (1, b): divide by <(a, b^-1)>.
  const int gen = a * h.order() + h.inverse(b);
  Subgroup ker = generated_subgroup(d, std::vector<int>{gen});
  return quotient(d, ker).first;
}

FiniteGroup extraspecial_group(int p, int a, char sign) {
  if (!is_prime(p)) fail(Errc::bad_parameter, "extraspecial group needs a prime p");
  if (a < 1) fail(Errc::bad_parameter, "extraspecial group needs a >= 1");
  if (sign != '+' && sign != '-') fail(Errc::bad_parameter, "extraspecial sign must be + or -");
  long long order = 1;
  for (int i = 0; i < 2 * a + 1; ++i) order *= p;
  if (order > Limits().max_order)
    fail(Errc::too_large, "extraspecial order " + std::to_string(order) + " exceeds bound");

  auto base_plus = [&] { return p == 2 ? dihedral_group(4) : heisenberg_group(p); };
  auto base_minus = [&] {
    return p == 2 ? quaternion_group(2) : semidirect_cyclic(p * p, p, 1 + p);
  };

  FiniteGroup result = sign == '-' ? base_minus() : base_plus();
  for (int i = 1; i < a; ++i) result = central_product(result, base_plus());
  const std::string name =
      "es:" + std::to_string(p) + ":" + std::to_string(a) + ":" + std::string(1, sign);
  return result.renamed(name);
}

FiniteGroup modular_g(int m) {
  if (m < 1 || m > 8) fail(Errc::bad_parameter, "gm:m supported for 1 <= m <= 8");
  const int pw = 1 << m;
  FiniteGroup g = semidirect_cyclic(3, pw, 2);
  return g.renamed("gm:" + std::to_string(m));
}

namespace {

std::vector<std::string> split(std::string_view s, char sep) {
  std::vector<std::string> parts;
  std::size_t start = 0;
  while (true) {
    const std::size_t pos = s.find(sep, start);
    if (pos == std::string_view::npos) {
      parts.emplace_back(s.substr(start));
      return parts;
    }
    parts.emplace_back(s.substr(start, pos - start));
    start = pos + 1;
  }
}

int parse_int(const std::string& tok, const std::string& ctx) {
  if (tok.empty() || tok.find_first_not_of("0123456789") != std::string::npos)
    fail(Errc::bad_parameter, "invalid number '" + tok + "' in builtin spec '" + ctx + "'");
  try {
    return std::stoi(tok);
  } catch (const std::exception&) {
    fail(Errc::bad_parameter, "number out of range in builtin spec '" + ctx + "'");
  }
}

FamilySpec parse_factor(const std::string& text) {
  const auto parts = split(text, ':');
  const std::string& tag = parts[0];
  auto arity = [&](std::size_t k) {
    if (parts.size() != k + 1)
      fail(Errc::bad_parameter, "builtin spec '" + text + "' expects " + std::to_string(k) +
                                    " parameter(s)");
  };
  FamilySpec spec;
  if (tag == "c") {
    arity(1);
    spec.node = FamilySpec::Cyclic{parse_int(parts[1], text)};
  } else if (tag == "d") {
    arity(1);
    spec.node = FamilySpec::Dihedral{parse_int(parts[1], text)};
  } else if (tag == "q") {
    arity(1);
    spec.node = FamilySpec::Quaternion{parse_int(parts[1], text)};
  } else if (tag == "s") {
    arity(1);
    spec.node = FamilySpec::Symmetric{parse_int(parts[1], text)};
  } else if (tag == "a") {
    arity(1);
    spec.node = FamilySpec::Alternating{parse_int(parts[1], text)};
  } else if (tag == "sd") {
    arity(3);
    spec.node = FamilySpec::Semidirect{parse_int(parts[1], text), parse_int(parts[2], text),
                                       parse_int(parts[3], text)};
  } else if (tag == "frob") {
    arity(3);
    spec.node = FamilySpec::Frobenius{parse_int(parts[1], text), parse_int(parts[2], text),
                                      parse_int(parts[3], text)};
  } else if (tag == "es") {
    arity(3);
    if (parts[3] != "+" && parts[3] != "-")
      fail(Errc::bad_parameter, "extraspecial sign must be + or - in '" + text + "'");
    spec.node = FamilySpec::Extraspecial{parse_int(parts[1], text), parse_int(parts[2], text),
                                         parts[3][0]};
  } else if (tag == "gm") {
    arity(1);
    spec.node = FamilySpec::Modular{parse_int(parts[1], text)};
  } else {
    fail(Errc::bad_parameter, "unknown builtin family '" + tag + "' in spec '" + text + "'");
  }
  return spec;
}

}  // namespace

FamilySpec FamilySpec::parse(std::string_view text) {
  if (text.empty()) fail(Errc::bad_parameter, "empty builtin spec");
  const auto factors = split(text, 'x');
  if (factors.size() == 1) return parse_factor(factors[0]);
  Product prod;
  for (const auto& f : factors) {
    if (f.empty()) fail(Errc::bad_parameter, "empty factor in builtin spec");
    prod.factors.push_back(parse_factor(f));
  }
  FamilySpec spec;
  spec.node = std::move(prod);
  return spec;
}

std::string FamilySpec::str() const {
  struct Visitor {
    std::string operator()(const Cyclic& c) const { return "c:" + std::to_string(c.n); }
    std::string operator()(const Dihedral& d) const { return "d:" + std::to_string(d.order); }
    std::string operator()(const Quaternion& q) const { return "q:" + std::to_string(q.order); }
    std::string operator()(const Symmetric& s) const { return "s:" + std::to_string(s.n); }
    std::string operator()(const Alternating& a) const { return "a:" + std::to_string(a.n); }
    std::string operator()(const Semidirect& s) const {
      return "sd:" + std::to_string(s.n) + ":" + std::to_string(s.p) + ":" + std::to_string(s.r);
    }
    std::string operator()(const Frobenius& f) const {
      return "frob:" + std::to_string(f.m) + ":" + std::to_string(f.n) + ":" +
             std::to_string(f.r);
    }
    std::string operator()(const Extraspecial& e) const {
      return "es:" + std::to_string(e.p) + ":" + std::to_string(e.a) + ":" +
             std::string(1, e.sign);
    }
    std::string operator()(const Modular& m) const { return "gm:" + std::to_string(m.m); }
    std::string operator()(const Product& p) const {
      std::string out;
      for (std::size_t i = 0; i < p.factors.size(); ++i) {
        if (i) out += 'x';
        out += p.factors[i].str();
      }
      return out;
    }
    std::string operator()(const FromTable& t) const {
      return "table:" + std::to_string(t.order);
    }
  };
  return std::visit(Visitor{}, node);
}

FiniteGroup FamilySpec::build() const {
  struct Visitor {
    FiniteGroup operator()(const Cyclic& c) const { return cyclic_group(c.n); }
    FiniteGroup operator()(const Dihedral& d) const {
      if (d.order < 2 || d.order % 2 != 0)
        fail(Errc::bad_parameter, "dihedral spec d:ORDER needs a positive even order");
      return dihedral_group(d.order / 2);
    }
    FiniteGroup operator()(const Quaternion& q) const {
      if (q.order < 8 || q.order % 4 != 0)
        fail(Errc::bad_parameter, "quaternion spec q:ORDER needs order 4m, m >= 2");
      return quaternion_group(q.order / 4);
    }
    FiniteGroup operator()(const Symmetric& s) const { return symmetric_group(s.n); }
    FiniteGroup operator()(const Alternating& a) const { return alternating_group(a.n); }
    FiniteGroup operator()(const Semidirect& s) const {
      return semidirect_cyclic(s.n, s.p, s.r);
    }
    FiniteGroup operator()(const Frobenius& f) const { return frobenius_group(f.m, f.n, f.r); }
    FiniteGroup operator()(const Extraspecial& e) const {
      return extraspecial_group(e.p, e.a, e.sign);
    }
    FiniteGroup operator()(const Modular& m) const { return modular_g(m.m); }
    FiniteGroup operator()(const Product& p) const {
      FiniteGroup g = p.factors.front().build();
      for (std::size_t i = 1; i < p.factors.size(); ++i)
        g = direct_product(g, p.factors[i].build());
      return g;
    }
    FiniteGroup operator()(const FromTable& t) const {
      return FiniteGroup::from_flat_table(t.order, t.flat);
    }
  };
  return std::visit(Visitor{}, node);
}

}  // namespace cayley
