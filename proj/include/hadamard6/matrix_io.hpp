#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "hadamard6/mat_core.hpp"

namespace hadamard6 {

// Matrix text format: optional '#' comment lines, then exactly 6 data lines
// of 12 space-separated decimal floats (re,im pairs of the 6 entries of that
// row), 17 significant digits. One matrix per file.

Mat6 read_mat6(std::istream& in);
Mat6 read_mat6_file(const std::string& path);

void write_mat6(std::ostream& out, const Mat6& m, const std::vector<std::string>& comments = {});
void write_mat6_file(const std::string& path, const Mat6& m, const std::vector<std::string>& comments = {});

/// Render a double with 17 significant digits (round-trip exact).
std::string format_double(double v);

}  // namespace hadamard6
