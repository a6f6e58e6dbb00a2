#pragma once

#include <iosfwd>
#include <string>

#include <json.hpp>

#include "cayley/analysis.hpp"
#include "cayley/checks.hpp"
#include "cayley/group.hpp"
#include "cayley/isoclinism.hpp"

namespace cayley {

using json = nlohmann::ordered_json;

// .cayley text format: an optional leading "# name: <label>" comment, a line
// with the order n, then n lines of n space-separated entries (row i lists
// the products i*j). Export is byte-exact: LF endings, single spaces, no
// trailing whitespace.

FiniteGroup read_cayley(std::istream& in, int max_order = Limits().max_order);
FiniteGroup read_cayley_file(const std::string& path, int max_order = Limits().max_order);

void write_cayley(const FiniteGroup& g, std::ostream& out);
void write_cayley_file(const FiniteGroup& g, const std::string& path);
std::string cayley_text(const FiniteGroup& g);

json profile_json(const CentralizerProfile& p);
json special_family_json(const SpecialFamily& f);
json witness_json(const IsoclinismWitness& w);
json report_json(const CheckReport& r);
json reports_json(const std::vector<CheckReport>& reports);

}  // namespace cayley
