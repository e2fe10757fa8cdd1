#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>
#include <vector>

#include "polyeig/kernels.hpp"

namespace polyeig {

/// Coefficients A_0 .. A_n as read from a file, before normalization.
using CoefficientList = std::vector<ComplexMatrix>;

/// Text format:
///
///   matpoly <m> <n>
///   coeff 0
///   <m lines of m entries>
///   ...
///   coeff <n>
///   <m lines of m entries>
///
/// Entries are `a`, `bi` or `a+bi` / `a-bi` (also `i`, `-i`); `#` starts a
/// comment and blank lines are ignored. Throws ParseError with the 1-based
/// line number.
CoefficientList parse_text(std::istream& in);

/// Structured format: {"m": m, "n": n, "coeffs": [C_0, ..., C_n]} where each
/// C_i is a list of m rows of [re, im] pairs or a flat row-major list of m*m pairs.
CoefficientList parse_json(const std::string& text);

/// One complex entry in the text syntax; throws ParseError(line) on bad input.
Complex parse_entry(const std::string& token, std::size_t line = 0);

/// Entry in the text syntax with 17 significant digits.
std::string format_entry(Complex z);

void write_text(std::ostream& out, const CoefficientList& coeffs);
void write_json(std::ostream& out, const CoefficientList& coeffs);

/// Reads `path`, choosing the structured format for a `.json` extension.
CoefficientList read_coefficients(const std::filesystem::path& path);

/// Writes `path` in the format its extension selects.
void write_coefficients(const std::filesystem::path& path, const CoefficientList& coeffs);

}  // namespace polyeig
