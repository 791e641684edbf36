#pragma once

#include "tgraph/core.hpp"
#include "tgraph/gadgets.hpp"

#include <string>
#include <vector>

namespace tgraph {

/// Malformed input; the message carries the offending line number.
struct ParseError : std::runtime_error {
    int line = 0;
    ParseError(int line_no, const std::string& reason);
};

/// Reads the `tg 1` text format:
///
///   tg 1
///   directed | undirected
///   nodes <n>
///   <u> <v> : <l1>,<l2>,...      (optionally `; w=<weight>`)
///
/// Blank lines are skipped and `#` starts a comment. The label list may be
/// empty. Duplicate labels are deduplicated with a warning; duplicate edges
/// are errors. Weights must cover either no edge or every edge.
TemporalGraph parse_temporal_graph(const std::string& text,
                                   std::vector<std::string>* warnings = nullptr);

/// Canonical text form: edges sorted, labels sorted, integral weights printed
/// without a decimal point. parse(serialize(tg)) is the identity and
/// serialize(parse(text)) canonicalizes.
std::string serialize_temporal_graph(const TemporalGraph& tg);

/// Reads `p xor2 <vars> <clauses>` followed by one `<lit> <lit> 0` line per
/// clause, DIMACS-style: positive integers are variables 1..n, negative
/// their negations.
XorFormula parse_xor_formula(const std::string& text);

std::string serialize_xor_formula(const XorFormula& f);

} // namespace tgraph
