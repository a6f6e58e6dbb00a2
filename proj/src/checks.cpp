#include "cayley/checks.hpp"

#include <algorithm>
#include <future>
#include <numeric>
#include <optional>
#include <unordered_set>

#include "cayley/analysis.hpp"
#include "cayley/families.hpp"
#include "cayley/isoclinism.hpp"
#include "cayley/isomorphism.hpp"
#include "cayley/lattice.hpp"

namespace cayley {

namespace {

struct Recorder {
  CheckReport report;

  void instance(const std::string& desc, bool ok, const std::string& expected,
                const std::string& actual) {
    ++report.instances_examined;
    if (!ok) report.failures.push_back({desc, expected, actual});
  }

  void skip(const std::string& desc, const std::string& reason) {
    report.skipped.push_back({desc, reason});
  }
};

std::string show(bool b) { return b ? "true" : "false"; }

int cent_count_of(const FiniteGroup& g) {
  const int n = g.order();
  std::unordered_set<ElementSet, ElementSetHash> seen;
  for (int x = 0; x < n; ++x) {
    ElementSet c(n);
    for (int y = 0; y < n; ++y)
      if (g.at(x, y) == g.at(y, x)) c.insert(y);
    seen.insert(std::move(c));
  }
  return static_cast<int>(seen.size());
}

// Distinct parent centralizers produced by the members of a subgroup.
int parent_cent_count_over(const FiniteGroup& g, const Subgroup& h) {
  std::unordered_set<ElementSet, ElementSetHash> seen;
  for (int x : h.elements()) {
    ElementSet c(g.order());
    for (int y = 0; y < g.order(); ++y)
      if (g.at(x, y) == g.at(y, x)) c.insert(y);
    seen.insert(std::move(c));
  }
  return static_cast<int>(seen.size());
}

// Center of a subgroup, in parent coordinates.
std::vector<int> subgroup_center(const FiniteGroup& g, const Subgroup& h) {
  std::vector<int> z;
  for (int x : h.elements()) {
    bool central = true;
    for (int y : h.elements())
      if (g.at(x, y) != g.at(y, x)) {
        central = false;
        break;
      }
    if (central) z.push_back(x);
  }
  return z;
}

std::optional<std::vector<Subgroup>> try_lattice(const FiniteGroup& g, const Limits& limits,
                                                 Recorder& rec, const std::string& desc) {
  try {
    return all_subgroups(g, limits.max_lattice);
  } catch (const Error& e) {
    if (e.code() == Errc::too_large) {
      rec.skip(desc, "subgroup lattice exceeds bound");
      return std::nullopt;
    }
    throw;
  }
}

std::optional<bool> try_isoclinic(const FiniteGroup& g, const FiniteGroup& h,
                                  const Limits& limits, Recorder& rec,
                                  const std::string& desc) {
  try {
    return are_isoclinic(g, h, limits).has_value();
  } catch (const Error& e) {
    if (e.code() == Errc::too_large) {
      rec.skip(desc, "isoclinism bound exceeded");
      return std::nullopt;
    }
    throw;
  }
}

bool iso_present(const FiniteGroup& a, const FiniteGroup& b) {
  return find_isomorphism(a, b).has_value();
}

// Recognizes Q as a non-abelian C_n x| C_p, p prime, returning (n, p).
std::optional<std::pair<int, int>> identify_semidirect_cp(const FiniteGroup& q) {
  if (q.is_abelian()) return std::nullopt;
  const int order = q.order();
  for (int p = 2; p <= order; ++p) {
    if (!is_prime(p) || order % p != 0) continue;
    const int n = order / p;
    if (n < 3) continue;
    for (int r = 2; r < n; ++r) {
      if (std::gcd(r, n) != 1 || powmod(r, p, n) != 1) continue;
      if (iso_present(q, semidirect_cyclic(n, p, r))) return std::make_pair(n, p);
    }
  }
  return std::nullopt;
}

std::optional<int> identify_dihedral(const FiniteGroup& q) {
  if (q.order() % 2 != 0 || q.order() < 6 || q.is_abelian()) return std::nullopt;
  const int n = q.order() / 2;
  if (iso_present(q, dihedral_group(n))) return n;
  return std::nullopt;
}

bool elementary_abelian_of(const FiniteGroup& g, int p, int expected_order) {
  if (g.order() != expected_order || !g.is_abelian()) return false;
  for (int x = 1; x < g.order(); ++x)
    if (g.element_order(x) != p) return false;
  return true;
}

std::optional<int> prime_square(int n) {
  for (int p = 2; p * p <= n; ++p)
    if (p * p == n && is_prime(p)) return p;
  return std::nullopt;
}

const CorpusEntry* entry_named(const Corpus& corpus, const std::string& name) {
  for (const auto& e : corpus.entries)
    if (e.name == name) return &e;
  return nullptr;
}

std::optional<Subgroup> find_subgroup_isomorphic(const std::vector<Subgroup>& lattice,
                                                 const FiniteGroup& target) {
  for (const auto& h : lattice)
    if (h.order() == target.order() && iso_present(h.as_group(), target)) return h;
  return std::nullopt;
}

using CheckFn = void (*)(const Corpus&, const Limits&, Recorder&);

// --- check bodies ---------------------------------------------------------

void check_b439_invariants(const Corpus& corpus, const Limits& limits, Recorder& rec) {
  for (const auto& e : corpus.entries) {
    if (e.group.is_abelian()) continue;
    for (int k : {2, 3}) {
      const std::string desc = e.name + " vs " + e.name + "xc:" + std::to_string(k);
      try {
        const FiniteGroup prod = direct_product(e.group, cyclic_group(k));
        const auto w = are_isoclinic(e.group, prod, limits);
        if (!w) {
          rec.instance(desc, false, "isoclinic", "no witness");
          continue;
        }
        if (!verify_witness(e.group, prod, *w)) {
          rec.instance(desc, false, "witness passes audit", "audit failed");
          continue;
        }
        const CentralizerProfile a = profile(e.group, limits.max_clique);
        const CentralizerProfile b = profile(prod, limits.max_clique);
        const bool same = a.cent_count == b.cent_count && a.nacent_count == b.nacent_count &&
                          a.omega == b.omega && a.z_class_count == b.z_class_count &&
                          a.is_ca == b.is_ca && a.is_f == b.is_f && a.is_i == b.is_i;
        rec.instance(desc, same, "equal centralizer statistics and CA/F/I flags",
                     same ? "equal" : "mismatch");
      } catch (const Error& err) {
        if (err.code() != Errc::too_large) throw;
        rec.skip(desc, "bound exceeded");
      }
    }
  }
}

void check_b0_subgroup_count(const Corpus& corpus, const Limits& limits, Recorder& rec) {
  for (const auto& e : corpus.entries) {
    const auto lattice = try_lattice(e.group, limits, rec, e.name);
    if (!lattice) continue;
    const Subgroup z = center(e.group);
    for (const auto& h : *lattice) {
      const std::vector<int> zh = subgroup_center(e.group, h);
      std::vector<int> meet;
      for (int x : h.elements())
        if (z.contains(x)) meet.push_back(x);
      if (meet.size() >= zh.size()) continue;  // hypothesis: H meet Z(G) strictly below Z(H)
      const int produced = parent_cent_count_over(e.group, h);
      const int inner = cent_count_of(h.as_group());
      rec.instance(e.name + " subgroup of order " + std::to_string(h.order()),
                   produced >= inner + 1, ">= " + std::to_string(inner + 1),
                   std::to_string(produced));
    }
  }
}

void check_np101(const Corpus& corpus, const Limits&, Recorder& rec) {
  for (const auto& e : corpus.entries) {
    const Subgroup z = center(e.group);
    std::vector<int> primes;
    for (int x = 0; x < e.group.order(); ++x) {
      if (z.contains(x)) continue;
      const int p = e.group.element_order(x);
      if (is_prime(p) && std::find(primes.begin(), primes.end(), p) == primes.end())
        primes.push_back(p);
    }
    std::sort(primes.begin(), primes.end());
    const int cents = primes.empty() ? 0 : cent_count_of(e.group);
    for (int p : primes)
      rec.instance(e.name + " with non-central element of order " + std::to_string(p),
                   cents >= p + 2, "|Cent| >= " + std::to_string(p + 2), std::to_string(cents));
  }
}

void check_b1_quotient(const Corpus& corpus, const Limits& limits, Recorder& rec) {
  for (const auto& e : corpus.entries) {
    const auto lattice = try_lattice(e.group, limits, rec, e.name);
    if (!lattice) continue;
    const Subgroup der = derived_subgroup(e.group);
    const int cents = cent_count_of(e.group);
    for (const auto& n : *lattice) {
      bool trivial_meet = true;
      for (int x : n.elements())
        if (x != 0 && der.contains(x)) {
          trivial_meet = false;
          break;
        }
      if (!trivial_meet || !is_normal(e.group, n)) continue;
      const auto [quo, proj] = quotient(e.group, n);
      const int qcents = cent_count_of(quo);
      rec.instance(e.name + " / N of order " + std::to_string(n.order()), qcents == cents,
                   std::to_string(cents), std::to_string(qcents));
    }
  }
}

void check_bcc1(const Corpus& corpus, const Limits& limits, Recorder& rec) {
  for (const auto& e : corpus.entries) {
    const auto [quo, proj] = central_quotient(e.group);
    if (quo.is_abelian()) continue;
    if (quo.order() > limits.max_lattice) {
      rec.skip(e.name, "central quotient exceeds the identification bound");
      continue;
    }
    const auto np = identify_semidirect_cp(quo);
    if (!np) continue;
    const int n = np->first;
    const int cents = cent_count_of(e.group);
    const bool ca = is_ca(e.group);
    rec.instance(e.name + " with G/Z = c:" + std::to_string(n) + " x| c:" +
                     std::to_string(np->second),
                 cents == n + 2 && ca,
                 std::to_string(n + 2) + "-centralizer CA-group",
                 std::to_string(cents) + "-centralizer, CA=" + show(ca));
  }
}

void check_bcor1(const Corpus& corpus, const Limits&, Recorder& rec) {
  for (const auto& e : corpus.entries) {
    if (e.group.order() % 4 != 0 || e.group.order() < 8) continue;
    const int m = e.group.order() / 4;
    if (!iso_present(e.group, quaternion_group(m))) continue;
    const int cents = cent_count_of(e.group);
    const bool ca = is_ca(e.group);
    rec.instance(e.name, cents == m + 2 && ca,
                 std::to_string(m + 2) + "-centralizer CA-group",
                 std::to_string(cents) + "-centralizer, CA=" + show(ca));
  }
}

void check_bcor2(const Corpus& corpus, const Limits& limits, Recorder& rec) {
  for (const auto& e : corpus.entries) {
    if (e.group.order() < 32) continue;
    int order = e.group.order();
    bool pow2 = true;
    while (order > 1) {
      if (order % 2) {
        pow2 = false;
        break;
      }
      order /= 2;
    }
    if (!pow2) continue;
    if (!special_family(e.group, limits.max_lattice).is_extraspecial) continue;
    const int expected = e.group.order() / 2;
    const int cents = cent_count_of(e.group);
    const bool f = is_f(e.group);
    const bool ca = is_ca(e.group);
    rec.instance(e.name, cents == expected && f && !ca,
                 std::to_string(expected) + "-centralizer F-group, not CA",
                 std::to_string(cents) + "-centralizer, F=" + show(f) + ", CA=" + show(ca));
  }
}

void check_b011_ca_iff(const Corpus& corpus, const Limits& limits, Recorder& rec) {
  for (const auto& e : corpus.entries) {
    const auto lattice = try_lattice(e.group, limits, rec, e.name);
    if (!lattice) continue;
    const Subgroup z = center(e.group);
    bool rhs = true;
    for (const auto& h : *lattice) {
      if (h.is_abelian()) continue;
      std::vector<int> meet;
      for (int x : h.elements())
        if (z.contains(x)) meet.push_back(x);
      if (subgroup_center(e.group, h) != meet) {
        rhs = false;
        break;
      }
    }
    const bool lhs = is_ca(e.group);
    rec.instance(e.name, lhs == rhs, "CA iff Z(H) = Z(G) meet H for all non-abelian H",
                 "CA=" + show(lhs) + ", subgroup condition=" + show(rhs));
  }
}

void check_p2_dihedral_quotient(const Corpus& corpus, const Limits& limits, Recorder& rec) {
  for (const auto& e : corpus.entries) {
    const auto [quo, proj] = central_quotient(e.group);
    const auto n = identify_dihedral(quo);
    if (!n) continue;
    const int cents = cent_count_of(e.group);
    rec.instance(e.name + " (G/Z dihedral of order " + std::to_string(2 * *n) + ")",
                 cents == *n + 2 && is_ca(e.group),
                 std::to_string(*n + 2) + "-centralizer CA-group",
                 std::to_string(cents) + "-centralizer, CA=" + show(is_ca(e.group)));
    const auto lattice = try_lattice(e.group, limits, rec, e.name);
    if (!lattice) continue;
    for (const auto& h : *lattice) {
      if (h.is_abelian()) continue;
      const FiniteGroup hg = h.as_group();
      const auto [hq, hproj] = central_quotient(hg);
      bool dihedral_match = false;
      for (int d = 1; d <= *n; ++d)
        if (*n % d == 0 && hq.order() == 2 * (*n / d) &&
            iso_present(hq, dihedral_group(*n / d))) {
          dihedral_match = true;
          break;
        }
      rec.instance(e.name + " subgroup of order " + std::to_string(h.order()), dihedral_match,
                   "H/Z(H) dihedral of order dividing", "order " + std::to_string(hq.order()));
      if (cent_count_of(hg) == cents) {
        const auto isoc = try_isoclinic(e.group, hg, limits, rec, e.name);
        if (isoc)
          rec.instance(e.name + " subgroup with equal |Cent|", *isoc, "isoclinic with G",
                       *isoc ? "isoclinic" : "not isoclinic");
      }
    }
  }
}

void check_bp4_hz(const Corpus& corpus, const Limits& limits, Recorder& rec) {
  for (const auto& e : corpus.entries) {
    const auto lattice = try_lattice(e.group, limits, rec, e.name);
    if (!lattice) continue;
    const Subgroup z = center(e.group);
    for (const auto& h : *lattice) {
      const ElementSet hz = set_product(e.group, h.bits(), z.bits());
      const bool spans = hz.count() == e.group.order();
      const auto isoc = try_isoclinic(e.group, h.as_group(), limits, rec,
                                      e.name + " subgroup " + std::to_string(h.order()));
      if (!isoc) continue;
      rec.instance(e.name + " subgroup of order " + std::to_string(h.order()), spans == *isoc,
                   "HZ(G) = G iff isoclinic",
                   "HZ=G is " + show(spans) + ", isoclinic is " + show(*isoc));
    }
  }
}

void check_b4_bs4(const Corpus& corpus, const Limits& limits, Recorder& rec) {
  for (const auto& e : corpus.entries) {
    const auto lattice = try_lattice(e.group, limits, rec, e.name);
    if (!lattice) continue;
    const auto [qg, projg] = central_quotient(e.group);
    const int cents = cent_count_of(e.group);
    const bool ca = is_ca(e.group);
    for (const auto& h : *lattice) {
      const FiniteGroup hg = h.as_group();
      const auto [qh, projh] = central_quotient(hg);
      const bool qiso = qh.order() == qg.order() && iso_present(qg, qh);
      const std::string desc = e.name + " subgroup of order " + std::to_string(h.order());
      if (ca) {
        const auto isoc = try_isoclinic(e.group, hg, limits, rec, desc);
        if (!isoc) continue;
        rec.instance(desc, qiso == *isoc, "G/Z iso H/Z(H) iff isoclinic (CA case)",
                     "quotient iso is " + show(qiso) + ", isoclinic is " + show(*isoc));
        if (qiso)
          rec.instance(desc + " |Cent|", cent_count_of(hg) == cents, std::to_string(cents),
                       std::to_string(cent_count_of(hg)));
      } else if (qiso) {
        const auto isoc = try_isoclinic(e.group, hg, limits, rec, desc);
        if (!isoc) continue;
        const bool cent_eq = cent_count_of(hg) == cents;
        rec.instance(desc, cent_eq == *isoc, "equal |Cent| iff isoclinic",
                     "|Cent| equal is " + show(cent_eq) + ", isoclinic is " + show(*isoc));
      }
    }
  }
}

void check_b57_pq(const Corpus& corpus, const Limits& limits, Recorder& rec) {
  for (const auto& e : corpus.entries) {
    const int q0 = e.group.order() / center(e.group).order();
    int a = -1, b = -1;
    for (int p = 2; p * p <= q0; ++p)
      if (q0 % p == 0) {
        a = p;
        b = q0 / p;
        break;
      }
    if (a < 0 || !is_prime(a) || !is_prime(b)) continue;
    const int q = std::max(a, b);
    const auto lattice = try_lattice(e.group, limits, rec, e.name);
    if (!lattice) continue;
    for (const auto& h : *lattice) {
      if (h.is_abelian()) continue;
      const FiniteGroup hg = h.as_group();
      const auto isoc = try_isoclinic(e.group, hg, limits, rec, e.name);
      if (!isoc) continue;
      const int hc = cent_count_of(hg);
      rec.instance(e.name + " non-abelian subgroup of order " + std::to_string(h.order()),
                   *isoc && hc == q + 2,
                   "isoclinic with G and |Cent| = " + std::to_string(q + 2),
                   "isoclinic=" + show(*isoc) + ", |Cent|=" + std::to_string(hc));
    }
  }
}

void check_cg17_frobenius(const Corpus& corpus, const Limits& limits, Recorder& rec) {
  for (const auto& e : corpus.entries) {
    const auto [quo, proj] = central_quotient(e.group);
    if (quo.is_abelian() || quo.order() < 6) continue;
    const auto qlattice = try_lattice(quo, limits, rec, e.name + " central quotient");
    if (!qlattice) continue;

    auto abelian_preimage = [&](const Subgroup& s) {
      std::vector<int> pre;
      for (int x = 0; x < e.group.order(); ++x)
        if (s.contains(proj.images()[x])) pre.push_back(x);
      for (std::size_t i = 0; i < pre.size(); ++i)
        for (std::size_t j = i + 1; j < pre.size(); ++j)
          if (e.group.at(pre[i], pre[j]) != e.group.at(pre[j], pre[i])) return false;
      return true;
    };

    bool hypothesis = false;
    for (const auto& nsub : *qlattice) {
      if (nsub.order() <= 1 || nsub.order() >= quo.order()) continue;
      if (!is_normal(quo, nsub)) continue;
      for (const auto& csub : *qlattice) {
        if (csub.order() * nsub.order() != quo.order()) continue;
        bool trivial_meet = true;
        for (int x : csub.elements())
          if (x != 0 && nsub.contains(x)) {
            trivial_meet = false;
            break;
          }
        if (!trivial_meet) continue;
        bool fpf = true;
        for (int c : csub.elements()) {
          if (c == 0) continue;
          const int ci = quo.inverse(c);
          for (int x : nsub.elements()) {
            if (x == 0) continue;
            if (quo.at(quo.at(c, x), ci) == x) {
              fpf = false;
              break;
            }
          }
          if (!fpf) break;
        }
        if (!fpf) continue;
        if (abelian_preimage(nsub) && abelian_preimage(csub)) {
          hypothesis = true;
          break;
        }
      }
      if (hypothesis) break;
    }
    if (!hypothesis) continue;
    const int cents = cent_count_of(e.group);
    const int der = derived_subgroup(e.group).order();
    rec.instance(e.name + " (Frobenius central quotient, abelian parts)", cents == der + 2,
                 "|Cent| = |G'| + 2 = " + std::to_string(der + 2), std::to_string(cents));
  }
}

void check_c1_a(const Corpus& corpus, const Limits& limits, Recorder& rec) {
  for (const auto& e : corpus.entries) {
    const int n = cent_count_of(e.group);
    if (n != 4 && n != 5) continue;
    const auto lattice = try_lattice(e.group, limits, rec, e.name);
    if (!lattice) continue;
    for (const auto& h : *lattice) {
      if (h.is_abelian()) continue;
      const auto isoc = try_isoclinic(e.group, h.as_group(), limits, rec, e.name);
      if (!isoc) continue;
      rec.instance(e.name + " non-abelian subgroup of order " + std::to_string(h.order()),
                   *isoc, "isoclinic with G", *isoc ? "isoclinic" : "not isoclinic");
    }
  }
}

void check_c1_b(const Corpus& corpus, const Limits& limits, Recorder& rec) {
  for (const auto& e : corpus.entries) {
    const int n = cent_count_of(e.group);
    if (n != 4 && n != 5 && n != 7 && n != 9) continue;
    const auto lattice = try_lattice(e.group, limits, rec, e.name);
    if (!lattice) continue;
    const FiniteGroup target = cyclic_group(n - 2);
    for (const auto& h : *lattice) {
      if (h.is_abelian()) continue;
      const FiniteGroup hg = h.as_group();
      const int hc = cent_count_of(hg);
      const Subgroup hder = derived_subgroup(hg);
      const bool der_ok = hder.order() == n - 2 && iso_present(hder.as_group(), target);
      rec.instance(e.name + " non-abelian subgroup of order " + std::to_string(h.order()),
                   hc == n && der_ok,
                   "|Cent(H)| = " + std::to_string(n) + " and H' cyclic of order " +
                       std::to_string(n - 2),
                   "|Cent(H)|=" + std::to_string(hc) + ", |H'|=" + std::to_string(hder.order()));
    }
  }
}

void check_c1_c(const Corpus& corpus, const Limits& limits, Recorder& rec) {
  for (const auto& e : corpus.entries) {
    if (cent_count_of(e.group) != 8) continue;
    const auto lattice = try_lattice(e.group, limits, rec, e.name);
    if (!lattice) continue;
    for (const auto& h : *lattice) {
      if (h.is_abelian()) continue;
      const FiniteGroup hg = h.as_group();
      if (cent_count_of(hg) != 8) continue;
      const auto isoc = try_isoclinic(e.group, hg, limits, rec, e.name);
      if (!isoc) continue;
      rec.instance(e.name + " subgroup with |Cent| = 8, order " + std::to_string(h.order()),
                   *isoc, "isoclinic with G", *isoc ? "isoclinic" : "not isoclinic");
    }
  }
}

void check_ppp1(const Corpus& corpus, const Limits&, Recorder& rec) {
  for (const auto& e : corpus.entries) {
    const int n = cent_count_of(e.group);
    if (n != 4 && n != 5 && n != 6 && n != 7 && n != 9) continue;
    const int der = derived_subgroup(e.group).order();
    rec.instance(e.name + " (" + std::to_string(n) + "-centralizer)", der == n - 2,
                 "|G'| = " + std::to_string(n - 2), std::to_string(der));
  }
}

void check_p212(const Corpus& corpus, const Limits& limits, Recorder& rec) {
  struct TypeInfo {
    int p = 0;
    int cents = 0;
  };
  std::vector<TypeInfo> info(corpus.entries.size());
  for (std::size_t i = 0; i < corpus.entries.size(); ++i) {
    const auto type = conjugate_type(corpus.entries[i].group);
    if (type.size() == 2 && type[0] == 1 && is_prime(type[1])) {
      info[i].p = type[1];
      info[i].cents = cent_count_of(corpus.entries[i].group);
    }
  }
  for (std::size_t i = 0; i < corpus.entries.size(); ++i) {
    if (!info[i].p) continue;
    for (std::size_t j = i + 1; j < corpus.entries.size(); ++j) {
      if (info[j].p != info[i].p || info[j].cents != info[i].cents) continue;
      const std::string desc = corpus.entries[i].name + " vs " + corpus.entries[j].name;
      const auto isoc =
          try_isoclinic(corpus.entries[i].group, corpus.entries[j].group, limits, rec, desc);
      if (!isoc) continue;
      rec.instance(desc, *isoc, "isoclinic", *isoc ? "isoclinic" : "not isoclinic");
    }
  }
}

void check_p21_rigidity(const Corpus& corpus, const Limits& limits, Recorder& rec) {
  for (const auto& e : corpus.entries) {
    if (!special_family(e.group, limits.max_lattice).is_extraspecial) continue;
    const auto lattice = try_lattice(e.group, limits, rec, e.name);
    if (!lattice) continue;
    const int cents = cent_count_of(e.group);
    bool ok = true;
    std::string offender;
    for (const auto& h : *lattice) {
      if (cent_count_of(h.as_group()) != cents) continue;
      if (h.order() != e.group.order()) {
        ok = false;
        offender = "proper subgroup of order " + std::to_string(h.order());
        break;
      }
    }
    rec.instance(e.name, ok, "only G itself has |Cent(H)| = |Cent(G)|",
                 ok ? "holds" : offender);
  }
}

void check_per_cpxcp(const Corpus& corpus, const Limits& limits, Recorder& rec) {
  for (const auto& e : corpus.entries) {
    const auto [quo, proj] = central_quotient(e.group);
    const auto p = prime_square(quo.order());
    if (!p || !elementary_abelian_of(quo, *p, quo.order())) continue;
    const std::string desc = e.name + " (G/Z elementary abelian of order " +
                             std::to_string(quo.order()) + ")";
    const auto isoc = try_isoclinic(e.group, extraspecial_group(*p, 1, '+'), limits, rec, desc);
    if (!isoc) continue;
    rec.instance(desc, *isoc, "isoclinic with an extraspecial group of order p^3",
                 *isoc ? "isoclinic" : "not isoclinic");
  }
}

void check_cor341(const Corpus& corpus, const Limits& limits, Recorder& rec) {
  const FiniteGroup q8 = quaternion_group(2);
  for (const auto& e : corpus.entries) {
    if (cent_count_of(e.group) != 4) continue;
    const auto isoc = try_isoclinic(e.group, q8, limits, rec, e.name);
    if (!isoc) continue;
    rec.instance(e.name, *isoc, "isoclinic with q:8", *isoc ? "isoclinic" : "not isoclinic");
  }
}

void check_cor1_five(const Corpus& corpus, const Limits& limits, Recorder& rec) {
  std::vector<FiniteGroup> targets;
  for (int m = 1; (3 << m) <= std::max(corpus.max_order, 8); ++m) targets.push_back(modular_g(m));
  targets.push_back(extraspecial_group(3, 1, '+'));
  targets.push_back(extraspecial_group(3, 1, '-'));
  for (const auto& e : corpus.entries) {
    if (cent_count_of(e.group) != 5) continue;
    bool matched = false;
    std::string desc = e.name;
    try {
      for (const auto& t : targets)
        if (are_isoclinic(e.group, t, limits)) {
          matched = true;
          break;
        }
    } catch (const Error& err) {
      if (err.code() != Errc::too_large) throw;
      rec.skip(desc, "isoclinism bound exceeded");
      continue;
    }
    rec.instance(desc, matched, "isoclinic with some gm:m or an extraspecial group of order 27",
                 matched ? "matched" : "no target matched");
  }
}

void check_p1_maximal(const Corpus& corpus, const Limits& limits, Recorder& rec) {
  for (const auto& e : corpus.entries) {
    if (e.group.is_abelian() || !is_ca(e.group)) continue;
    const auto lattice = try_lattice(e.group, limits, rec, e.name);
    if (!lattice) continue;
    for (const auto& m : *lattice) {
      if (m.order() == e.group.order() || m.is_abelian()) continue;
      bool maximal = true;
      for (const auto& k : *lattice) {
        if (k.order() <= m.order() || k.order() == e.group.order()) continue;
        if (m.bits().is_subset_of(k.bits())) {
          maximal = false;
          break;
        }
      }
      if (!maximal) continue;
      const std::vector<int> zm = subgroup_center(e.group, m);
      const bool same_center = zm == center(e.group).elements();
      bool ok = same_center;
      if (!ok) {
        const auto isoc = try_isoclinic(e.group, m.as_group(), limits, rec, e.name);
        if (!isoc) continue;
        ok = *isoc;
      }
      rec.instance(e.name + " maximal non-abelian subgroup of order " +
                       std::to_string(m.order()),
                   ok, "Z(G) = Z(M) or isoclinic with M", ok ? "holds" : "neither");
    }
  }
}

void check_ba567_p3(const Corpus& corpus, const Limits& limits, Recorder& rec) {
  for (const auto& e : corpus.entries) {
    const int q0 = e.group.order() / center(e.group).order();
    int p = 0;
    for (int c = 2; c * c * c <= q0; ++c)
      if (c * c * c == q0 && is_prime(c)) p = c;
    if (!p) continue;
    const auto lattice = try_lattice(e.group, limits, rec, e.name);
    if (!lattice) continue;
    const int cents = cent_count_of(e.group);
    for (const auto& h : *lattice) {
      if (h.is_abelian()) continue;
      const FiniteGroup hg = h.as_group();
      if (cent_count_of(hg) != cents) continue;
      const auto isoc = try_isoclinic(e.group, hg, limits, rec, e.name);
      if (!isoc) continue;
      rec.instance(e.name + " subgroup with equal |Cent|, order " + std::to_string(h.order()),
                   *isoc, "isoclinic with G", *isoc ? "isoclinic" : "not isoclinic");
    }
  }
}

void check_b7_type_n1(const Corpus& corpus, const Limits&, Recorder& rec) {
  for (const auto& e : corpus.entries) {
    const auto type = conjugate_type(e.group);
    if (type.size() != 2 || type[0] != 1) continue;
    const int n = type[1];
    if (cent_count_of(e.group) != n + 2) continue;
    const auto [quo, proj] = central_quotient(e.group);
    bool elem = quo.order() == n * n;
    if (elem) {
      int p = 2;
      while (p <= n && n % p) ++p;
      elem = p <= n && elementary_abelian_of(quo, p, n * n);
    }
    const bool ca = is_ca(e.group);
    rec.instance(e.name + " (conjugate type (" + std::to_string(n) + ",1))", ca && elem,
                 "CA-group with G/Z elementary abelian of order " + std::to_string(n * n),
                 "CA=" + show(ca) + ", |G/Z|=" + std::to_string(quo.order()));
  }
}

void check_counterexamples(const Corpus& corpus, const Limits& limits, Recorder& rec) {
  const FiniteGroup q8 = quaternion_group(2);

  auto quaternion_scene = [&](const std::string& name, int expect_cents) {
    const CorpusEntry* e = entry_named(corpus, name);
    if (!e) {
      rec.skip(name, "not in corpus");
      return;
    }
    const auto lattice = try_lattice(e->group, limits, rec, name);
    if (!lattice) return;
    const auto sub = find_subgroup_isomorphic(*lattice, q8);
    bool ok = cent_count_of(e->group) == expect_cents && sub.has_value();
    std::string actual = "|Cent|=" + std::to_string(cent_count_of(e->group));
    if (ok) {
      const FiniteGroup hg = sub->as_group();
      const auto isoc = try_isoclinic(e->group, hg, limits, rec, name);
      if (!isoc) return;
      ok = cent_count_of(hg) == 4 && !*isoc;
      actual += ", subgroup |Cent|=" + std::to_string(cent_count_of(hg)) +
                ", isoclinic=" + show(*isoc);
    } else if (!sub) {
      actual += ", no q:8 subgroup";
    }
    rec.instance(name + " has a non-isoclinic 4-centralizer q:8 subgroup", ok,
                 std::to_string(expect_cents) +
                     "-centralizer with 4-centralizer q:8 subgroup, not isoclinic",
                 actual);
  };
  quaternion_scene("q:16", 6);
  quaternion_scene("q:24", 8);

  auto frobenius_scene = [&](const std::string& name, int expect_cents, int sub_order) {
    const CorpusEntry* e = entry_named(corpus, name);
    if (!e) {
      rec.skip(name, "not in corpus");
      return;
    }
    const auto lattice = try_lattice(e->group, limits, rec, name);
    if (!lattice) return;
    bool found = false;
    bool undecided = false;
    for (const auto& h : *lattice) {
      if (h.order() != sub_order) continue;
      const FiniteGroup hg = h.as_group();
      if (cent_count_of(hg) != expect_cents) continue;
      const auto isoc = try_isoclinic(e->group, hg, limits, rec, name);
      if (!isoc) {
        undecided = true;
        continue;
      }
      if (!*isoc) {
        found = true;
        break;
      }
    }
    if (!found && undecided) return;  // skips were recorded by try_isoclinic
    const bool ok = cent_count_of(e->group) == expect_cents && found;
    rec.instance(name + " has a non-isoclinic " + std::to_string(expect_cents) +
                     "-centralizer subgroup of order " + std::to_string(sub_order),
                 ok, "present", ok ? "present" : "missing");
  };
  frobenius_scene("frob:4:5:2", 7, 10);
  frobenius_scene("frob:6:7:3", 9, 21);

  {
    const CorpusEntry* d16 = entry_named(corpus, "d:16");
    const CorpusEntry* a4 = entry_named(corpus, "a:4");
    if (!d16 || !a4) {
      rec.skip("d:16 vs a:4", "not in corpus");
    } else {
      const bool cents_ok =
          cent_count_of(d16->group) == 6 && cent_count_of(a4->group) == 6;
      const bool derived_ok =
          iso_present(derived_subgroup(d16->group).as_group(), cyclic_group(4)) &&
          iso_present(derived_subgroup(a4->group).as_group(),
                      direct_product(cyclic_group(2), cyclic_group(2)));
      const auto isoc = try_isoclinic(d16->group, a4->group, limits, rec, "d:16 vs a:4");
      if (isoc)
        rec.instance("d:16 vs a:4", cents_ok && derived_ok && !*isoc,
                     "both 6-centralizer, derived c:4 vs c:2xc:2, not isoclinic",
                     "cents=" + show(cents_ok) + ", derived=" + show(derived_ok) +
                         ", isoclinic=" + show(*isoc));
    }
  }

  for (const std::string es : {"es:3:1:+", "es:3:1:-"}) {
    const CorpusEntry* s3 = entry_named(corpus, "s:3");
    const CorpusEntry* g27 = entry_named(corpus, es);
    if (!s3 || !g27) {
      rec.skip("s:3 vs " + es, "not in corpus");
      continue;
    }
    const bool cents_ok = cent_count_of(s3->group) == 5 && cent_count_of(g27->group) == 5;
    const auto isoc = try_isoclinic(s3->group, g27->group, limits, rec, "s:3 vs " + es);
    if (isoc)
      rec.instance("s:3 vs " + es, cents_ok && !*isoc,
                   "both 5-centralizer, not isoclinic",
                   "cents=" + show(cents_ok) + ", isoclinic=" + show(*isoc));
  }
}

void check_never_2_or_3(const Corpus& corpus, const Limits&, Recorder& rec) {
  for (const auto& e : corpus.entries) {
    const int cents = cent_count_of(e.group);
    rec.instance(e.name, cents != 2 && cents != 3, "|Cent| not in {2,3}",
                 std::to_string(cents));
  }
}

struct RegistryEntry {
  const char* id;
  const char* title;
  CheckFn fn;
};

const RegistryEntry kRegistry[] = {
    {"b439_invariants",
     "isoclinic pairs (G, G x A) share |Cent|, |nacent|, omega, z-class count and CA/F/I flags",
     check_b439_invariants},
    {"b0_subgroup_count",
     "H with H meet Z(G) strictly inside Z(H) produces at least |Cent(H)|+1 centralizers of G",
     check_b0_subgroup_count},
    {"np101", "a non-central element of prime order p forces |Cent(G)| >= p+2", check_np101},
    {"b1_quotient", "normal N with N meet G' trivial: |Cent(G)| = |Cent(G/N)|",
     check_b1_quotient},
    {"bcc1", "G/Z non-abelian C_n x| C_p (p prime) makes G an (n+2)-centralizer CA-group",
     check_bcc1},
    {"bcor1", "generalized quaternion groups of order 4m are (m+2)-centralizer CA-groups",
     check_bcor1},
    {"bcor2",
     "extraspecial 2-groups of order 2^(2n+1), n>1, are 2^(2n)-centralizer F-groups, not CA",
     check_bcor2},
    {"b011_ca_iff", "G is CA iff Z(H) = Z(G) meet H for every non-abelian subgroup H",
     check_b011_ca_iff},
    {"p2_dihedral_quotient",
     "G/Z dihedral of order 2n: (n+2)-centralizer CA, subgroups have dihedral quotients, "
     "equal |Cent| forces isoclinism",
     check_p2_dihedral_quotient},
    {"bp4_hz", "HZ(G) = G iff G is isoclinic with H, over all subgroups", check_bp4_hz},
    {"b4_bs4",
     "with G/Z iso H/Z(H): equal |Cent| iff isoclinic; for CA-groups the quotient alone decides",
     check_b4_bs4},
    {"b57_pq",
     "|G/Z| = pq: every non-abelian subgroup is isoclinic with G and |Cent| = q+2",
     check_b57_pq},
    {"cg17_frobenius",
     "Frobenius central quotient with abelian parts: |Cent(G)| = |G'| + 2",
     check_cg17_frobenius},
    {"c1_a", "4- and 5-centralizer groups are isoclinic with every non-abelian subgroup",
     check_c1_a},
    {"c1_b",
     "n in {4,5,7,9}: non-abelian subgroups have |Cent(H)| = n and H' cyclic of order n-2",
     check_c1_b},
    {"c1_c", "8-centralizer groups are isoclinic with subgroups of equal |Cent|", check_c1_c},
    {"ppp1", "n in {4,5,6,7,9}-centralizer groups have |G'| = n-2", check_ppp1},
    {"p212", "equal |Cent| groups of conjugate type (p,1) are isoclinic", check_p212},
    {"p21_extraspecial_rigidity",
     "an extraspecial group admits no proper subgroup with the same |Cent|",
     check_p21_rigidity},
    {"per_cpxcp", "G/Z iso C_p x C_p: G is isoclinic with an extraspecial group of order p^3",
     check_per_cpxcp},
    {"cor341", "every 4-centralizer group is isoclinic with q:8", check_cor341},
    {"cor1_five",
     "every 5-centralizer group is isoclinic with some gm:m or an extraspecial group of order 27",
     check_cor1_five},
    {"p1_maximal",
     "maximal non-abelian subgroup M of a CA-group: Z(G) = Z(M) or G isoclinic with M",
     check_p1_maximal},
    {"ba567_p3", "|G/Z| = p^3: non-abelian subgroups with equal |Cent| are isoclinic with G",
     check_ba567_p3},
    {"b7_type_n1",
     "(n+2)-centralizer groups of conjugate type (n,1) are CA with G/Z elementary abelian of "
     "order n^2",
     check_b7_type_n1},
    {"counterexamples",
     "the named non-isoclinic pairs and subgroup counterexamples hold verbatim",
     check_counterexamples},
    {"never_2_or_3", "no group has exactly 2 or 3 element centralizers", check_never_2_or_3},
};

const RegistryEntry* find_entry(const std::string& id) {
  for (const auto& entry : kRegistry)
    if (id == entry.id) return &entry;
  return nullptr;
}

}  // namespace

std::vector<std::string> registered_checks() {
  std::vector<std::string> ids;
  for (const auto& entry : kRegistry) ids.emplace_back(entry.id);
  return ids;
}

std::string check_title(const std::string& check_id) {
  const RegistryEntry* entry = find_entry(check_id);
  if (!entry) fail(Errc::unknown_check, "unknown check '" + check_id + "'");
  return entry->title;
}

CheckReport run_check(const std::string& check_id, const Corpus& corpus, const Limits& limits) {
  const RegistryEntry* entry = find_entry(check_id);
  if (!entry) fail(Errc::unknown_check, "unknown check '" + check_id + "'");
  Recorder rec;
  rec.report.check_id = check_id;
  entry->fn(corpus, limits, rec);
  return std::move(rec.report);
}

std::vector<CheckReport> run_suite(const Corpus& corpus,
                                   const std::vector<std::string>& selection,
                                   const Limits& limits) {
  std::vector<std::string> ids = selection.empty() ? registered_checks() : selection;
  for (const auto& id : ids)
    if (!find_entry(id)) fail(Errc::unknown_check, "unknown check '" + id + "'");

  std::vector<std::future<CheckReport>> futures;
  futures.reserve(ids.size());
  for (const auto& id : ids)
    futures.push_back(std::async(std::launch::async,
                                 [&corpus, &limits, id] { return run_check(id, corpus, limits); }));
  std::vector<CheckReport> reports;
  reports.reserve(ids.size());
  for (auto& f : futures) reports.push_back(f.get());
  return reports;
}

bool suite_passes(const std::vector<CheckReport>& reports) {
  for (const auto& r : reports)
    if (r.verdict() == "fail") return false;
  return true;
}

}  // namespace cayley
