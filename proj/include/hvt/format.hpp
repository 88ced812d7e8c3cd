#pragma once

// Canonical text forms.
//
//   partition / diagram   "4,4,2,1"  "4,4,2,1@3,2"  empty: "-" (or "")
//   tableau               "1,2,3,4/2,3,5/4,5/5,7"  Hecke tableau adds "@r,c"
//   word                  "2 1 1 3 1 3 2 1" (spaces or commas); empty: "-"
//   linked                "n=7; 1-2,1-3,1-5"      arc-free: "n=7;"
//   blocks                "n=10; {1,3,5}{2,6,10}{4}"
//   vht                   diagrams joined by ";"
//
// Parsers run the domain validators, so a successful parse always yields a
// valid object. Syntax errors throw ErrorCode::parse with a 1-based position.

#include <set>
#include <string>
#include <string_view>

#include "hvt/hecke.hpp"
#include "hvt/linked.hpp"
#include "hvt/shapes.hpp"
#include "hvt/tableaux.hpp"
#include "hvt/vacillating.hpp"

namespace hvt {

std::string to_text(const Partition &p);
std::string to_text(const HeckeDiagram &d);
std::string to_text(const IncreasingTableau &t);
std::string to_text(const HeckeTableau &t);
std::string to_text(const Word &w);
std::string to_text(const LinkedPartition &lp);
std::string to_text(const BlockPartition &bp);
std::string to_text(const VacillatingTableau &v);
std::string to_text(Cell c);
/// "{1,2,7}"
std::string to_text(const std::set<int> &s);

Partition parse_partition(std::string_view text);
HeckeDiagram parse_diagram(std::string_view text);
IncreasingTableau parse_tableau(std::string_view text);
HeckeTableau parse_hecke_tableau(std::string_view text);
Word parse_word(std::string_view text);
LinkedPartition parse_linked(std::string_view text);
BlockPartition parse_blocks(std::string_view text);
VacillatingTableau parse_vht(std::string_view text);
/// "r,c"
Cell parse_cell(std::string_view text);
/// "1,2,7", "{1,2,7}", or "" / "-" / "{}" for the empty set.
std::set<int> parse_int_set(std::string_view text);

} // namespace hvt
