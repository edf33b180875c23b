// alist parity-check interchange format and DOT graph export.
#pragma once

#include <stdexcept>
#include <string>

#include "arg/gf2.hpp"
#include "arg/graph.hpp"

namespace arg {

struct AlistError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Canonical zero-padded alist:
//   line 1: n m
//   line 2: max_col_deg max_row_deg
//   line 3: n column degrees      line 4: m row degrees
//   then n column lists and m row lists, 1-indexed, zero-padded to the
//   respective maximum, single-space separated, newline-terminated.
std::string write_alist(const SparseMatrixGF2& h);

// Accepts both the padded and unpadded variants; rejects dimension
// mismatches, degree/list inconsistencies and duplicate indices.
SparseMatrixGF2 read_alist(const std::string& text);

// Undirected DOT. Left vertices v1..vn, right c1..cm, edges in insertion
// order; byte-identical for identical graphs.
std::string write_dot(const BipartiteGraph& g);

}  // namespace arg
