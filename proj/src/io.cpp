#include "qnr/io.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

namespace qnr {

using nlohmann::json;

namespace {

std::string index_name(std::size_t r, std::size_t c) {
  return "(" + std::to_string(r) + "," + std::to_string(c) + ")";
}

std::string fmt(const char* spec, double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, spec, v == 0.0 ? 0.0 : v);
  return buf;
}

}  // namespace

QMatrix parse_matrix_json(const json& doc) {
  if (!doc.is_object()) throw ParseError("matrix document must be a JSON object");
  if (!doc.contains("n")) throw ParseError("field \"n\" absent");
  if (!doc["n"].is_number_integer() || doc["n"].get<long long>() < 1)
    throw ParseError("field \"n\" must be a positive integer");
  const auto n = static_cast<std::size_t>(doc["n"].get<long long>());
  if (!doc.contains("entries")) throw ParseError("field \"entries\" absent");
  const json& rows = doc["entries"];
  if (!rows.is_array()) throw ParseError("field \"entries\" must be an array of rows");
  if (rows.size() != n)
    throw ParseError("entries has " + std::to_string(rows.size()) + " rows, expected n = " + std::to_string(n));

  QMatrix a(n);
  for (std::size_t r = 0; r < n; ++r) {
    const json& row = rows[r];
    if (!row.is_array()) throw ParseError("row " + std::to_string(r) + " is not an array");
    if (row.size() > n)
      throw ParseError("row " + std::to_string(r) + " has " + std::to_string(row.size()) + " entries, expected " +
                       std::to_string(n));
    for (std::size_t c = 0; c < n; ++c) {
      if (c >= row.size()) throw ParseError("entry " + index_name(r, c) + " absent");
      const json& e = row[c];
      if (!e.is_array() || e.size() != 4)
        throw ParseError("entry " + index_name(r, c) + " must be an array of 4 numbers");
      std::array<double, 4> v{};
      for (std::size_t l = 0; l < 4; ++l) {
        if (!e[l].is_number())
          throw ParseError("entry " + index_name(r, c) + " component " + std::to_string(l) + " is not a number");
        v[l] = e[l].get<double>();
      }
      a(r, c) = Quaternion(v[0], v[1], v[2], v[3]);
    }
  }
  return a;
}

QMatrix parse_matrix_text(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("malformed JSON: ") + e.what());
  }
  return parse_matrix_json(doc);
}

QMatrix parse_matrix(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_matrix_text(buf.str());
}

json matrix_to_json(const QMatrix& a) {
  json rows = json::array();
  for (std::size_t r = 0; r < a.n(); ++r) {
    json row = json::array();
    for (std::size_t c = 0; c < a.n(); ++c) {
      const auto& q = a(r, c);
      row.push_back({q.q0, q.q1, q.q2, q.q3});
    }
    rows.push_back(row);
  }
  return {{"n", a.n()}, {"entries", rows}};
}

json complex_to_json(Complex z) { return {{"re", z.real()}, {"im", z.imag()}}; }

json quaternion_to_json(const Quaternion& q) { return json::array({q.q0, q.q1, q.q2, q.q3}); }

json region_to_json(const Region2D& r) {
  json out{{"kind", to_string(r.kind)}};
  json verts = json::array();
  for (const auto& v : r.vertices) verts.push_back(complex_to_json(v));
  switch (r.kind) {
    case RegionKind::Segment:
    case RegionKind::Triangle:
      out["vertices"] = verts;
      break;
    case RegionKind::HalfDisk:
      out["center"] = complex_to_json(r.center);
      out["radius"] = r.radius;
      break;
    case RegionKind::MinkowskiBound:
      out["base"] = verts;
      out["radius"] = r.radius;
      out["leftover"] = r.leftover;
      break;
  }
  return out;
}

std::string dump_json(const json& doc) { return doc.dump(2) + "\n"; }

void write_file(const std::string& path, const std::string& contents) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << contents;
  if (!out) throw std::runtime_error("write failed: " + path);
}

std::string csv_text(const std::vector<Complex>& points) {
  std::string out = "re,im\n";
  for (const auto& z : points) out += fmt("%.17g", z.real()) + "," + fmt("%.17g", z.imag()) + "\n";
  return out;
}

void emit_csv(const Section2D& section, const std::string& path) { write_file(path, csv_text(section.points)); }

std::string svg_text(const Section2D& section, const Region2D* region) {
  constexpr double kSize = 600.0, kPad = 40.0;
  std::vector<Complex> extent(section.hull);
  std::vector<Complex> outline;
  if (region) {
    outline = region_outline(*region);
    extent.insert(extent.end(), outline.begin(), outline.end());
  }
  extent.emplace_back(0.0, 0.0);
  double x0 = 0.0, x1 = 0.0, y0 = 0.0, y1 = 0.0;
  for (const auto& z : extent) {
    x0 = std::min(x0, z.real());
    x1 = std::max(x1, z.real());
    y0 = std::min(y0, z.imag());
    y1 = std::max(y1, z.imag());
  }
  const double span = std::max({x1 - x0, y1 - y0, 1e-6});
  const double scale = (kSize - 2.0 * kPad) / span;
  auto px = [&](double x) { return fmt("%.3f", kPad + (x - x0) * scale); };
  auto py = [&](double y) { return fmt("%.3f", kSize - kPad - (y - y0) * scale); };
  auto points_attr = [&](const std::vector<Complex>& pts) {
    std::string s;
    for (const auto& z : pts) s += px(z.real()) + "," + py(z.imag()) + " ";
    if (!s.empty()) s.pop_back();
    return s;
  };

  std::string out =
      "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"600\" height=\"600\" viewBox=\"0 0 600 600\">\n"
      "<rect width=\"600\" height=\"600\" fill=\"white\"/>\n";
  out += "<g stroke=\"#888\" stroke-width=\"1\">\n";
  out += "<line x1=\"0\" y1=\"" + py(0.0) + "\" x2=\"600\" y2=\"" + py(0.0) + "\"/>\n";
  out += "<line x1=\"" + px(0.0) + "\" y1=\"0\" x2=\"" + px(0.0) + "\" y2=\"600\"/>\n";
  out += "</g>\n<g fill=\"#1f77b4\" fill-opacity=\"0.4\">\n";
  const std::size_t stride = std::max<std::size_t>(1, (section.points.size() + 3999) / 4000);
  for (std::size_t l = 0; l < section.points.size(); l += stride) {
    const auto& z = section.points[l];
    out += "<circle cx=\"" + px(z.real()) + "\" cy=\"" + py(z.imag()) + "\" r=\"1.2\"/>\n";
  }
  out += "</g>\n";
  if (!section.hull.empty()) {
    auto closed = section.hull;
    closed.push_back(closed.front());
    out += "<polyline fill=\"none\" stroke=\"#1f3b73\" stroke-width=\"1.5\" points=\"" + points_attr(closed) + "\"/>\n";
  }
  if (region) {
    const std::string stroke = " fill=\"none\" stroke=\"#d62728\" stroke-width=\"2\"";
    switch (region->kind) {
      case RegionKind::Segment:
        out += "<line" + stroke + " x1=\"" + px(outline[0].real()) + "\" y1=\"" + py(outline[0].imag()) +
               "\" x2=\"" + px(outline[1].real()) + "\" y2=\"" + py(outline[1].imag()) + "\"/>\n";
        break;
      case RegionKind::Triangle:
      case RegionKind::MinkowskiBound:
        out += "<polygon" + stroke + " points=\"" + points_attr(outline) + "\"/>\n";
        break;
      case RegionKind::HalfDisk: {
        const Complex c = region->center;
        const std::string r = fmt("%.3f", region->radius * scale);
        out += "<path" + stroke + " d=\"M " + px(c.real() + region->radius) + " " + py(c.imag()) + " A " + r + " " + r +
               " 0 0 0 " + px(c.real() - region->radius) + " " + py(c.imag()) + " Z\"/>\n";
        break;
      }
    }
  }
  out += "</svg>\n";
  return out;
}

void emit_svg(const Section2D& section, const Region2D* region, const std::string& path) {
  write_file(path, svg_text(section, region));
}

}  // namespace qnr
