#include "cayley/cli.hpp"

#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "cayley/analysis.hpp"
#include "cayley/checks.hpp"
#include "cayley/corpus.hpp"
#include "cayley/families.hpp"
#include "cayley/io.hpp"
#include "cayley/isoclinism.hpp"
#include "cayley/isomorphism.hpp"
#include "cayley/lattice.hpp"

namespace cayley {

namespace {

struct NamedGroup {
  std::string name;
  FiniteGroup group;
};

// Input tokens are either explicit pairs ("builtin SPEC" / "file PATH") or
// bare tokens classified by shape: anything that exists on disk, contains a
// path separator or ends in .cayley is a file, the rest is a builtin spec.
std::vector<NamedGroup> resolve_inputs(const std::vector<std::string>& tokens, int max_order) {
  std::vector<NamedGroup> groups;
  for (std::size_t i = 0; i < tokens.size(); ++i) {
    const std::string& tok = tokens[i];
    bool as_file = false;
    std::string value = tok;
    if (tok == "builtin" || tok == "file") {
      if (i + 1 == tokens.size())
        fail(Errc::bad_parameter, "'" + tok + "' must be followed by a value");
      as_file = tok == "file";
      value = tokens[++i];
    } else {
      as_file = value.size() > 7 && value.rfind(".cayley") == value.size() - 7;
      as_file = as_file || value.find('/') != std::string::npos ||
                std::filesystem::exists(value);
    }
    if (as_file) {
      FiniteGroup g = read_cayley_file(value, max_order);
      groups.push_back({g.name().empty() ? value : g.name(), std::move(g)});
    } else {
      const FamilySpec spec = FamilySpec::parse(value);
      FiniteGroup g = spec.build();
      groups.push_back({spec.str(), g.renamed(spec.str())});
    }
  }
  return groups;
}

void emit(const std::string& text, const std::string& output_path, std::ostream& out) {
  if (output_path.empty()) {
    out << text;
    return;
  }
  std::ofstream file(output_path, std::ios::binary);
  if (!file) fail(Errc::io_error, "cannot open '" + output_path + "' for writing");
  file << text;
  if (!file) fail(Errc::io_error, "failed writing '" + output_path + "'");
}

std::string yesno(bool b) { return b ? "yes" : "no"; }

std::string tuple_text(const std::vector<int>& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ", ";
    s += std::to_string(v[i]);
  }
  return s + ")";
}

std::string special_text(const SpecialFamily& f) {
  std::vector<std::string> parts;
  if (f.elementary_abelian_prime)
    parts.push_back("elementary abelian (p = " + std::to_string(*f.elementary_abelian_prime) +
                    ")");
  if (f.special_prime)
    parts.push_back("special " + std::to_string(*f.special_prime) + "-group");
  if (f.is_extraspecial) parts.push_back("extraspecial");
  if (f.is_semi_extraspecial) parts.push_back("semi-extraspecial");
  if (f.is_ultraspecial) parts.push_back("ultraspecial");
  if (parts.empty()) return "none";
  std::string s;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i) s += ", ";
    s += parts[i];
  }
  return s;
}

int cmd_analyze(const std::vector<NamedGroup>& groups, const Limits& limits, bool as_json,
                const std::string& output, std::ostream& out) {
  json arr = json::array();
  std::ostringstream text;
  for (const auto& [name, g] : groups) {
    const CentralizerProfile p = profile(g, limits.max_clique);
    const SpecialFamily f = special_family(g, limits.max_lattice);
    if (as_json) {
      json j;
      j["name"] = name;
      j["order"] = g.order();
      j["profile"] = profile_json(p);
      j["special_family"] = special_family_json(f);
      arr.push_back(std::move(j));
    } else {
      text << "group " << name << " (order " << g.order() << ")\n"
           << "  |Cent(G)|      = " << p.cent_count << "\n"
           << "  |nacent(G)|    = " << p.nacent_count << "\n"
           << "  omega(G)       = " << p.omega << "\n"
           << "  z-classes      = " << p.z_class_count << "\n"
           << "  conjugate type = " << tuple_text(p.conjugate_type) << "\n"
           << "  CA-group: " << yesno(p.is_ca) << "   F-group: " << yesno(p.is_f)
           << "   I-group: " << yesno(p.is_i) << "\n"
           << "  |Z(G)| = " << p.center_order << "   |G'| = " << p.derived_order
           << "   |G/Z(G)| = " << p.central_quotient_order << "\n"
           << "  special family: " << special_text(f) << "\n";
    }
  }
  if (as_json)
    emit((groups.size() == 1 ? arr[0] : arr).dump(2) + "\n", output, out);
  else
    emit(text.str(), output, out);
  return 0;
}

int cmd_compare(const std::vector<NamedGroup>& groups, const Limits& limits, bool as_json,
                const std::string& output, std::ostream& out) {
  const auto& [aname, a] = groups[0];
  const auto& [bname, b] = groups[1];
  const auto iso = find_isomorphism(a, b);
  const auto witness = are_isoclinic(a, b, limits);
  if (as_json) {
    json j;
    j["a"] = aname;
    j["b"] = bname;
    j["isomorphic"] = iso.has_value();
    j["isomorphism"] = iso ? json(iso->images()) : json(nullptr);
    j["isoclinic"] = witness.has_value();
    j["witness"] = witness ? witness_json(*witness) : json(nullptr);
    emit(j.dump(2) + "\n", output, out);
  } else {
    std::ostringstream text;
    text << "A = " << aname << " (order " << a.order() << ")\n"
         << "B = " << bname << " (order " << b.order() << ")\n"
         << "isomorphic: " << yesno(iso.has_value()) << "\n"
         << "isoclinic:  " << yesno(witness.has_value()) << "\n";
    if (witness)
      text << "witness: phi on G/Z of order " << witness->phi.domain().order()
           << ", psi on G' of order " << witness->g_derived.order() << "\n";
    emit(text.str(), output, out);
  }
  return 0;
}

int cmd_subgroups(const NamedGroup& input, const Limits& limits, bool as_json,
                  const std::string& output, std::ostream& out) {
  const auto subs = all_subgroups(input.group, limits.max_lattice);
  if (as_json) {
    json j;
    j["name"] = input.name;
    j["order"] = input.group.order();
    j["count"] = subs.size();
    json arr = json::array();
    for (const auto& h : subs) {
      json js;
      js["order"] = h.order();
      js["elements"] = h.elements();
      js["cent_count"] = static_cast<int>(distinct_centralizers(h.as_group()).size());
      js["abelian"] = h.is_abelian();
      js["normal"] = is_normal(input.group, h);
      arr.push_back(std::move(js));
    }
    j["subgroups"] = std::move(arr);
    emit(j.dump(2) + "\n", output, out);
  } else {
    std::ostringstream text;
    text << "subgroups of " << input.name << " (order " << input.group.order()
         << "): " << subs.size() << "\n";
    for (const auto& h : subs) {
      text << "  order " << h.order() << "  |Cent| " <<
          distinct_centralizers(h.as_group()).size()
           << (h.is_abelian() ? "  abelian" : "  non-abelian")
           << (is_normal(input.group, h) ? "  normal" : "") << "  {";
      for (std::size_t i = 0; i < h.elements().size(); ++i) {
        if (i) text << ",";
        text << h.elements()[i];
      }
      text << "}\n";
    }
    emit(text.str(), output, out);
  }
  return 0;
}

int cmd_verify(const std::vector<NamedGroup>& extra, int corpus_max, const std::string& checks,
               const Limits& limits, bool as_json, const std::string& output,
               std::ostream& out) {
  Corpus corpus = builtin_corpus(corpus_max);
  for (const auto& [name, g] : extra) corpus.add(name, g, {"imported"});
  std::vector<std::string> selection;
  if (!checks.empty()) {
    std::istringstream is(checks);
    std::string id;
    while (std::getline(is, id, ','))
      if (!id.empty()) selection.push_back(id);
  }
  const auto reports = run_suite(corpus, selection, limits);
  const bool pass = suite_passes(reports);
  if (as_json) {
    emit(reports_json(reports).dump(2) + "\n", output, out);
  } else {
    std::ostringstream text;
    for (const auto& r : reports) {
      text << "check " << r.check_id << ": " << r.verdict() << " ("
           << r.instances_examined << " instances";
      if (!r.skipped.empty()) text << ", " << r.skipped.size() << " skipped";
      text << ")\n";
      for (const auto& f : r.failures)
        text << "    FAIL " << f.instance << ": expected " << f.expected << ", got "
             << f.actual << "\n";
    }
    text << "suite: " << (pass ? "PASS" : "FAIL") << "\n";
    emit(text.str(), output, out);
  }
  return pass ? 0 : 1;
}

int cmd_catalog(int corpus_max, bool as_json, const std::string& output, std::ostream& out) {
  const Corpus corpus = builtin_corpus(corpus_max);
  if (as_json) {
    json arr = json::array();
    for (const auto& e : corpus.entries) {
      json j;
      j["name"] = e.name;
      j["order"] = e.group.order();
      j["tags"] = e.tags;
      arr.push_back(std::move(j));
    }
    emit(arr.dump(2) + "\n", output, out);
  } else {
    std::ostringstream text;
    for (const auto& e : corpus.entries) {
      text << e.name << "  order " << e.group.order();
      for (const auto& t : e.tags) text << "  [" << t << "]";
      text << "\n";
    }
    emit(text.str(), output, out);
  }
  return 0;
}

int cmd_convert(const NamedGroup& input, const std::string& output, std::ostream& out) {
  FiniteGroup g = input.group.name().empty() ? input.group.renamed(input.name) : input.group;
  emit(cayley_text(g), output, out);
  return 0;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"finite group analysis over multiplication tables"};
  app.require_subcommand(1);
  app.fallthrough();

  std::string format = "text";
  std::string output;
  Limits limits;
  app.add_option("--format", format, "output format")
      ->check(CLI::IsMember({"text", "json"}));
  app.add_option("--output", output, "write output to a file instead of stdout");
  app.add_option("--max-lattice", limits.max_lattice, "subgroup lattice order bound");
  app.add_option("--max-clique", limits.max_clique, "clique search order bound");
  app.add_option("--max-isoclinism", limits.max_isoclinism,
                 "central quotient order bound for isoclinism search");

  std::vector<std::string> analyze_inputs, compare_inputs, subgroup_inputs, verify_inputs,
      convert_inputs;
  int corpus_max = 48;
  std::string checks;

  CLI::App* analyze = app.add_subcommand("analyze", "centralizer statistics of groups");
  analyze->add_option("inputs", analyze_inputs, "group sources")->required()->expected(-1);

  CLI::App* compare = app.add_subcommand("compare", "isomorphism and isoclinism of two groups");
  compare->add_option("inputs", compare_inputs, "two group sources")->required()->expected(-1);

  CLI::App* subgroups_cmd = app.add_subcommand("subgroups", "subgroup lattice listing");
  subgroups_cmd->add_option("inputs", subgroup_inputs, "group source")->required()->expected(-1);

  CLI::App* verify = app.add_subcommand("verify", "run the verification suite");
  verify->add_option("inputs", verify_inputs, "extra group sources added to the corpus")
      ->expected(-1);
  verify->add_option("--corpus-max-order", corpus_max, "builtin corpus order bound");
  verify->add_option("--checks", checks, "comma-separated check ids (default: all)");

  CLI::App* catalog = app.add_subcommand("catalog", "list the builtin corpus");
  catalog->add_option("--corpus-max-order", corpus_max, "builtin corpus order bound");

  CLI::App* convert = app.add_subcommand("convert", "re-emit a group in .cayley format");
  convert->add_option("inputs", convert_inputs, "group source")->required()->expected(-1);

  std::vector<const char*> argv;
  argv.push_back("cayley");
  for (const auto& a : args) argv.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n";
    return 2;
  }

  const bool as_json = format == "json";
  try {
    if (analyze->parsed())
      return cmd_analyze(resolve_inputs(analyze_inputs, limits.max_order), limits, as_json,
                         output, out);
    if (compare->parsed()) {
      const auto groups = resolve_inputs(compare_inputs, limits.max_order);
      if (groups.size() != 2) {
        err << "usage error: compare needs exactly two group sources\n";
        return 2;
      }
      return cmd_compare(groups, limits, as_json, output, out);
    }
    if (subgroups_cmd->parsed()) {
      const auto groups = resolve_inputs(subgroup_inputs, limits.max_order);
      if (groups.size() != 1) {
        err << "usage error: subgroups needs exactly one group source\n";
        return 2;
      }
      return cmd_subgroups(groups[0], limits, as_json, output, out);
    }
    if (verify->parsed())
      return cmd_verify(resolve_inputs(verify_inputs, limits.max_order), corpus_max, checks,
                        limits, as_json, output, out);
    if (catalog->parsed()) return cmd_catalog(corpus_max, as_json, output, out);
    if (convert->parsed()) {
      const auto groups = resolve_inputs(convert_inputs, limits.max_order);
      if (groups.size() != 1) {
        err << "usage error: convert needs exactly one group source\n";
        return 2;
      }
      return cmd_convert(groups[0], output, out);
    }
  } catch (const Error& e) {
    if (as_json) {
      json j;
      j["error"]["type"] = errc_name(e.code());
      j["error"]["message"] = e.what();
      out << j.dump(2) << "\n";
    } else {
      err << "error: " << e.what() << "\n";
    }
    return 1;
  }
  return 2;
}

}  // namespace cayley
