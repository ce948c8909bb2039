#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "oloid/sampling.hpp"

namespace oloid::io {

// Header line for rows with the given number of coordinates (2 or 3).
std::string csv_header(std::size_t dimension);

// Numbers are printed with 17 significant digits so that reading the file
// back reproduces every double exactly.
void write_csv(std::ostream& out, const std::vector<sampling::Row>& rows, std::size_t dimension);
std::vector<sampling::Row> read_csv(std::istream& in);

// Array of {object, lambda, branch, t, coords}.
void write_json(std::ostream& out, const std::vector<sampling::Row>& rows);

std::string format_double(double v);

}  // namespace oloid::io
