#include "cayley/io.hpp"

#include <fstream>
#include <sstream>

namespace cayley {

namespace {

[[noreturn]] void parse_fail(int line, int col, const std::string& msg) {
  fail(Errc::parse_error,
       "line " + std::to_string(line) + ", column " + std::to_string(col) + ": " + msg);
}

}  // namespace

FiniteGroup read_cayley(std::istream& in, int max_order) {
  std::string line;
  int lineno = 0;
  std::string name;

  // Leading comment lines; "# name: <label>" sets the group name.
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    if (line[0] == '#') {
      const std::string prefix = "# name:";
      if (line.compare(0, prefix.size(), prefix) == 0) {
        name = line.substr(prefix.size());
        while (!name.empty() && name.front() == ' ') name.erase(name.begin());
      }
      continue;
    }
    break;
  }
  if (line.empty() || in.fail())
    parse_fail(lineno ? lineno : 1, 1, "expected the group order");

  int n = 0;
  {
    std::istringstream os(line);
    if (!(os >> n)) parse_fail(lineno, 1, "expected the group order");
    std::string rest;
    if (os >> rest) parse_fail(lineno, static_cast<int>(line.find(rest)) + 1,
                               "unexpected token after the order");
  }
  if (n < 1) parse_fail(lineno, 1, "order must be positive");
  if (n > max_order)
    fail(Errc::too_large, "declared order " + std::to_string(n) +
                              " exceeds the validation bound " + std::to_string(max_order));

  std::vector<int> flat;
  flat.reserve(static_cast<std::size_t>(n) * n);
  for (int i = 0; i < n; ++i) {
    if (!std::getline(in, line)) parse_fail(lineno + 1, 1, "missing table row");
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    std::istringstream row(line);
    for (int j = 0; j < n; ++j) {
      int v = 0;
      if (!(row >> v)) {
        const auto pos = row.tellg();
        parse_fail(lineno, pos < 0 ? static_cast<int>(line.size()) + 1
                                   : static_cast<int>(pos) + 1,
                   "expected " + std::to_string(n) + " integers in the row");
      }
      flat.push_back(v);
    }
    std::string extra;
    if (row >> extra)
      parse_fail(lineno, static_cast<int>(line.rfind(extra)) + 1, "extra token in table row");
  }
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (!line.empty() && line[0] != '#')
      parse_fail(lineno, 1, "unexpected content after the table");
  }
  return FiniteGroup::from_flat_table(n, std::move(flat), std::move(name), max_order);
}

FiniteGroup read_cayley_file(const std::string& path, int max_order) {
  std::ifstream in(path);
  if (!in) fail(Errc::io_error, "cannot open '" + path + "' for reading");
  return read_cayley(in, max_order);
}

void write_cayley(const FiniteGroup& g, std::ostream& out) {
  if (!g.name().empty()) out << "# name: " << g.name() << "\n";
  const int n = g.order();
  out << n << "\n";
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (j) out << ' ';
      out << g.at(i, j);
    }
    out << "\n";
  }
}

void write_cayley_file(const FiniteGroup& g, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) fail(Errc::io_error, "cannot open '" + path + "' for writing");
  write_cayley(g, out);
  if (!out) fail(Errc::io_error, "failed writing '" + path + "'");
}

std::string cayley_text(const FiniteGroup& g) {
  std::ostringstream os;
  write_cayley(g, os);
  return os.str();
}

json profile_json(const CentralizerProfile& p) {
  json j;
  j["cent_count"] = p.cent_count;
  j["nacent_count"] = p.nacent_count;
  j["omega"] = p.omega;
  j["z_class_count"] = p.z_class_count;
  j["conjugate_type"] = p.conjugate_type;
  j["is_ca"] = p.is_ca;
  j["is_f"] = p.is_f;
  j["is_i"] = p.is_i;
  j["center_order"] = p.center_order;
  j["derived_order"] = p.derived_order;
  j["central_quotient_order"] = p.central_quotient_order;
  return j;
}

json special_family_json(const SpecialFamily& f) {
  json j;
  j["is_special_p"] = f.special_prime ? json(*f.special_prime) : json(nullptr);
  j["is_extraspecial"] = f.is_extraspecial;
  j["is_semi_extraspecial"] = f.is_semi_extraspecial;
  j["is_ultraspecial"] = f.is_ultraspecial;
  j["is_elementary_abelian"] =
      f.elementary_abelian_prime ? json(*f.elementary_abelian_prime) : json(nullptr);
  return j;
}

json witness_json(const IsoclinismWitness& w) {
  const int q = w.phi.domain().order();
  std::vector<int> g_reps(q, -1), h_reps(q, -1);
  for (int x = 0; x < w.proj_g.domain().order(); ++x)
    if (g_reps[w.proj_g.images()[x]] == -1) g_reps[w.proj_g.images()[x]] = x;
  for (int x = 0; x < w.proj_h.domain().order(); ++x)
    if (h_reps[w.proj_h.images()[x]] == -1) h_reps[w.proj_h.images()[x]] = x;

  std::vector<int> psi_parent(w.g_derived.order());
  for (int i = 0; i < w.g_derived.order(); ++i)
    psi_parent[i] = w.h_derived.elements()[w.psi.images()[i]];

  json j;
  j["g_coset_reps"] = g_reps;
  j["h_coset_reps"] = h_reps;
  j["phi"] = w.phi.images();
  j["g_derived"] = w.g_derived.elements();
  j["h_derived"] = w.h_derived.elements();
  j["psi"] = psi_parent;
  return j;
}

json report_json(const CheckReport& r) {
  json j;
  j["check_id"] = r.check_id;
  j["instances_examined"] = r.instances_examined;
  json failures = json::array();
  for (const auto& f : r.failures) {
    json jf;
    jf["instance"] = f.instance;
    jf["expected"] = f.expected;
    jf["actual"] = f.actual;
    failures.push_back(std::move(jf));
  }
  j["failures"] = std::move(failures);
  json skipped = json::array();
  for (const auto& s : r.skipped) {
    json js;
    js["instance"] = s.instance;
    js["reason"] = s.reason;
    skipped.push_back(std::move(js));
  }
  j["skipped"] = std::move(skipped);
  j["verdict"] = r.verdict();
  return j;
}

json reports_json(const std::vector<CheckReport>& reports) {
  json arr = json::array();
  for (const auto& r : reports) arr.push_back(report_json(r));
  return arr;
}

}  // namespace cayley
