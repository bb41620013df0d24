#include "wellfound/theory_io.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include <json.hpp>

namespace wellfound {

namespace {

using nlohmann::json;

std::pair<int, int> line_column(const std::string& text, std::size_t byte_pos) {
  int line = 1, column = 1;
  for (std::size_t i = 0; i < byte_pos && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      column = 1;
    } else {
      ++column;
    }
  }
  return {line, column};
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

AtomSet atoms_from_list(const json& list, const std::vector<std::string>& names) {
  AtomSet out = 0;
  for (const auto& item : list) {
    std::string name = item.get<std::string>();
    auto it = std::find(names.begin(), names.end(), name);
    if (it == names.end()) throw FileParseError("unknown atom: " + name);
    out |= AtomSet{1} << (it - names.begin());
  }
  return out;
}

json atom_list(const ClauseTheory& t, AtomSet set) {
  json out = json::array();
  for (int a = 0; a < t.atom_count(); ++a) {
    if (set & (AtomSet{1} << a)) out.push_back(t.atom_name(a));
  }
  return out;
}

json derivation_json(const ClauseTheory& t, const Sequent& s, const Derivation& d) {
  json node;
  switch (d.rule) {
    case Derivation::Rule::Ax:
      node["rule"] = "AX";
      node["atom"] = t.atom_name(d.atom);
      break;
    case Derivation::Rule::AxT: {
      node["rule"] = "AXT";
      const Sequent& c = t.clauses()[static_cast<std::size_t>(d.clause_index)];
      node["clause"] = {{"antecedent", atom_list(t, c.gamma)}, {"succedent", atom_list(t, c.delta)}};
      break;
    }
    case Derivation::Rule::Cut: {
      node["rule"] = "CUT";
      node["atom"] = t.atom_name(d.atom);
      AtomSet f = AtomSet{1} << d.atom;
      node["left"] = derivation_json(t, Sequent{s.gamma | f, s.delta}, *d.left);
      node["right"] = derivation_json(t, Sequent{s.gamma, s.delta | f}, *d.right);
      break;
    }
  }
  return node;
}

}  // namespace

ClauseTheory parse_theory(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    auto [line, column] = line_column(text, e.byte > 0 ? e.byte - 1 : 0);
    throw FileParseError(e.what(), line, column);
  }
  try {
    if (!doc.is_object() || !doc.contains("atoms") || !doc.contains("clauses")) {
      throw FileParseError("theory file needs \"atoms\" and \"clauses\" fields");
    }
    std::vector<std::string> names;
    for (const auto& a : doc["atoms"]) {
      std::string name = a.get<std::string>();
      if (std::find(names.begin(), names.end(), name) != names.end()) {
        throw FileParseError("duplicate atom: " + name);
      }
      names.push_back(std::move(name));
    }
    if (static_cast<int>(names.size()) > kMaxAtoms) {
      throw FileParseError("too many atoms (limit " + std::to_string(kMaxAtoms) + ")");
    }
    std::vector<Sequent> clauses;
    for (const auto& c : doc["clauses"]) {
      Sequent s;
      if (c.contains("antecedent")) s.gamma = atoms_from_list(c["antecedent"], names);
      if (c.contains("succedent")) s.delta = atoms_from_list(c["succedent"], names);
      clauses.push_back(s);
    }
    int atom_count = static_cast<int>(names.size());
    return ClauseTheory(atom_count, std::move(clauses), std::move(names));
  } catch (const json::exception& e) {
    throw FileParseError(std::string("malformed theory file: ") + e.what());
  }
}

ClauseTheory load_theory_file(const std::string& path) { return parse_theory(read_file(path)); }

std::string theory_to_json(const ClauseTheory& t) {
  json doc;
  doc["atoms"] = json::array();
  for (int a = 0; a < t.atom_count(); ++a) doc["atoms"].push_back(t.atom_name(a));
  doc["clauses"] = json::array();
  for (const Sequent& c : t.clauses()) {
    doc["clauses"].push_back(
        {{"antecedent", atom_list(t, c.gamma)}, {"succedent", atom_list(t, c.delta)}});
  }
  return doc.dump();
}

std::string sequent_to_json(const ClauseTheory& t, const Sequent& s) {
  json doc = {{"antecedent", atom_list(t, s.gamma)}, {"succedent", atom_list(t, s.delta)}};
  return doc.dump();
}

std::string derivation_to_json(const ClauseTheory& t, const Sequent& root, const Derivation& d) {
  return derivation_json(t, root, d).dump();
}

std::string valuation_to_json(const ClauseTheory& t, const Valuation& v) {
  json doc;
  for (int a = 0; a < t.atom_count(); ++a) doc[t.atom_name(a)] = v.value(a) ? 1 : 0;
  return doc.dump();
}

Pred parse_predicate(const std::string& text, const Universe& universe) {
  Pred out(universe);
  std::istringstream in(text);
  std::string raw;
  int line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    std::string line = raw.substr(0, raw.find('#'));
    std::size_t begin = line.find_first_not_of(" \t\r");
    if (begin == std::string::npos) continue;
    std::size_t end = line.find_last_not_of(" \t\r");
    std::string token = line.substr(begin, end - begin + 1);
    std::vector<int> items;
    if (token != "\xce\xb5" && token != "-") {
      for (std::size_t i = 0; i < token.size(); ++i) {
        char c = token[i];
        if (c < '0' || c > '9') {
          throw FileParseError("expected a digit string", line_no, static_cast<int>(begin + i) + 1);
        }
        items.push_back(c - '0');
      }
    }
    SeqU u(std::move(items));
    try {
      out.set(universe.rank(u), true);
    } catch (const Error& e) {
      throw FileParseError(e.what(), line_no, static_cast<int>(begin) + 1);
    }
  }
  return out;
}

Pred load_predicate_file(const std::string& path, const Universe& universe) {
  return parse_predicate(read_file(path), universe);
}

}  // namespace wellfound
