#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "lnfft/types.hpp"

namespace lnfft {

// Plain-text formats. Blank lines and lines starting with '#' are skipped.
// Vectors: one "re im" pair per line (a lone value is a real number).
// Grids: one instant per line.
// Malformed input raises Errc::Parse naming the line.

CVector read_vector(std::istream& in);
std::vector<double> read_reals(std::istream& in);
void write_vector(std::ostream& out, const CVector& values);
void write_reals(std::ostream& out, const std::vector<double>& values);

CVector read_vector_file(const std::string& path);
std::vector<double> read_reals_file(const std::string& path);
void write_vector_file(const std::string& path, const CVector& values);

}  // namespace lnfft
