#pragma once

#include <string>

#include "lascoux/expansion.hpp"

namespace lascoux {

/// Text formats: compositions "1,0,2"; permutations "3,2,1" (single-token
/// digit strings accepted for support <= 9); tableaux one row per line with
/// space-separated entries, set-valued cells comma-joined in decreasing
/// order; a blank line separates the tableaux of a pair file; beta prints
/// as the token "b".

std::string format_composition(const WeakComposition& a);
WeakComposition parse_composition(const std::string& text);

std::string format_permutation(const Permutation& w);
Permutation parse_permutation(const std::string& text);

std::string format_word(const Word& w);
Word parse_word(const std::string& text);

std::string format_increasing_tableau(const IncreasingTableau& t);
IncreasingTableau parse_increasing_tableau(const std::string& text);

std::string format_rsvt(const RSVT& t);
RSVT parse_rsvt(const std::string& text);

std::string format_pair_file(const TableauPair& pair);
TableauPair parse_pair_file(const std::string& text);

std::string format_polynomial(const LPolynomial& p);
LPolynomial parse_polynomial(const std::string& text, int n);

std::string format_expansion(const ExpansionResult& r);
std::string format_expansion_json(const ExpansionResult& r);
ExpansionResult parse_expansion_json(const std::string& text, int n);

} // namespace lascoux
