// Matrix files and report artifacts: JSON, CSV and SVG.
#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "json.hpp"

#include "qnr/twobytwo.hpp"

namespace qnr {

class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Reads {"n": n, "entries": [[[q0, q1, q2, q3], ...], ...]} (row-major).
QMatrix parse_matrix(const std::string& path);
QMatrix parse_matrix_text(const std::string& text);
QMatrix parse_matrix_json(const nlohmann::json& doc);

nlohmann::json matrix_to_json(const QMatrix& a);
nlohmann::json complex_to_json(Complex z);
nlohmann::json quaternion_to_json(const Quaternion& q);
nlohmann::json region_to_json(const Region2D& r);

/// Two-space indented dump with a trailing newline.
std::string dump_json(const nlohmann::json& doc);

/// Header `re,im`, one line per point.
std::string csv_text(const std::vector<Complex>& points);
void emit_csv(const Section2D& section, const std::string& path);

/// 600x600 plot: axes, sample scatter (at most 4000 points drawn), hull
/// polyline and, when given, the region outline in a second stroke.
std::string svg_text(const Section2D& section, const Region2D* region);
void emit_svg(const Section2D& section, const Region2D* region, const std::string& path);

void write_file(const std::string& path, const std::string& contents);

}  // namespace qnr
