#pragma once

#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "cayley/group.hpp"

namespace cayley {

// Named constructions. Each documents its element enumeration so indices in
// examples and golden files are reproducible; the identity is always index 0.

/// C_n; element k is g^k.
FiniteGroup cyclic_group(int n);

/// D_2n of order 2n: indices 0..n-1 are r^k, n..2n-1 are r^(k-n) s.
FiniteGroup dihedral_group(int n);

/// Q_4m (m >= 2), <a,b | a^2m = 1, b^2 = a^m, b a b^-1 = a^-1>:
/// indices 0..2m-1 are a^k, 2m..4m-1 are a^(k-2m) b.
FiniteGroup quaternion_group(int m);

/// S_n for n <= 5; elements are the one-line permutations in lexicographic
/// order (identity first); product i*j applies j first, then i.
FiniteGroup symmetric_group(int n);

/// A_4; the even permutations of S_4 in lexicographic order.
FiniteGroup alternating_group(int n);

/// A x B; element a*|B| + b is the pair (a, b).
FiniteGroup direct_product(const FiniteGroup& a, const FiniteGroup& b);

/// C_n x| C_p where the C_p generator acts by x -> x^r. Requires gcd(r,n) = 1
/// and r^p = 1 (mod n); r = 1 gives the direct product. Element x*p + k is
/// the pair (x, k) in normal form a^x t^k.
FiniteGroup semidirect_cyclic(int n, int p, int r);

/// Frobenius group with kernel C_n and complement C_m acting by x -> x^r;
/// requires the action to be fixed-point-free with r of order exactly m
/// mod n. Element x*m + k is a^x t^k.
FiniteGroup frobenius_group(int m, int n, int r);

/// Extraspecial group of order p^(2a+1). For p = 2, an iterated central
/// product of D8 copies ('+') or of D8 copies with one Q8 factor ('-').
/// For odd p, central products of the exponent-p group of order p^3 ('+'),
/// with one exponent-p^2 factor for '-'.
FiniteGroup extraspecial_group(int p, int a, char sign);

/// <a,b | a^3 = b^(2^m) = 1, b a b^-1 = a^-1> of order 3*2^m, m >= 1.
FiniteGroup modular_g(int m);

/// Central product G o H identifying the (order-p, cyclic) centers; both
/// centers must have the same prime order.
FiniteGroup central_product(const FiniteGroup& g, const FiniteGroup& h);

bool is_prime(int p);
int powmod(long long base, long long exp, long long mod);

/// A tagged description of a constructible group. Text grammar, factors
/// joined by 'x':
///   c:N  d:ORDER  q:ORDER  s:N  a:4  es:P:A:+|-  frob:M:N:R  sd:N:P:R  gm:M
struct FamilySpec {
  struct Cyclic { int n; };
  struct Dihedral { int order; };
  struct Quaternion { int order; };
  struct Symmetric { int n; };
  struct Alternating { int n; };
  struct Semidirect { int n, p, r; };
  struct Frobenius { int m, n, r; };
  struct Extraspecial { int p, a; char sign; };
  struct Modular { int m; };
  struct Product { std::vector<FamilySpec> factors; };
  struct FromTable { int order; std::vector<int> flat; };

  std::variant<Cyclic, Dihedral, Quaternion, Symmetric, Alternating, Semidirect, Frobenius,
               Extraspecial, Modular, Product, FromTable>
      node;

  /// Parses the grammar above; FromTable specs have no text form.
  static FamilySpec parse(std::string_view text);

  /// Canonical grammar text (used as the built group's name).
  std::string str() const;

  FiniteGroup build() const;
};

}  // namespace cayley
