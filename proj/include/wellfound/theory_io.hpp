#pragma once

#include <string>

#include "wellfound/boolalg.hpp"

namespace wellfound {

// Theory files are JSON documents:
//   {"atoms": ["a","b"],
//    "clauses": [{"antecedent": ["a"], "succedent": ["b"]}]}
// antecedent = Gamma, succedent = Delta of a clause Gamma |> Delta, read as
// the implication "and Gamma -> or Delta".
ClauseTheory parse_theory(const std::string& text);
ClauseTheory load_theory_file(const std::string& path);

std::string theory_to_json(const ClauseTheory& t);
std::string sequent_to_json(const ClauseTheory& t, const Sequent& s);

// Derivations serialize as nested records with rule tags AX | AXT | CUT;
// CUT's "left" premise carries the split atom on the antecedent side.
std::string derivation_to_json(const ClauseTheory& t, const Sequent& root, const Derivation& d);
std::string valuation_to_json(const ClauseTheory& t, const Valuation& v);

// Predicate files: one member sequence per line as a digit string; the empty
// sequence is written as epsilon (or "-").  '#' starts a comment.
Pred parse_predicate(const std::string& text, const Universe& universe);
Pred load_predicate_file(const std::string& path, const Universe& universe);

}  // namespace wellfound
