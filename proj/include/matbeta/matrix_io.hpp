#pragma once

#include <string>

#include "matbeta/symmat.hpp"

namespace matbeta {

// Matrix text in one of two formats, sniffed by the first non-space
// character: '{' starts a JSON object {"dim": m, "data": [row major]},
// anything else is CSV with one matrix row per line.
Mat parse_matrix_text(const std::string& text);

Mat read_matrix_file(const std::string& path);

// Checked conversion to a symmetric matrix: the input must be square and
// symmetric within rel_tol relative to its largest entry.
SymMatrix sym_from_mat_checked(const Mat& m, double rel_tol = 1e-9);

SymMatrix read_sym_matrix_file(const std::string& path);

}  // namespace matbeta
