#include "tetrig/instance.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

namespace tetrig {

namespace {

using nlohmann::json;

const json& expect_rows(const json& doc, const std::string& key, std::size_t rows) {
  if (!doc.contains(key)) throw ParseError("instance missing key '" + key + "'");
  const json& value = doc.at(key);
  if (!value.is_array() || value.size() != rows)
    throw ParseError("instance key '" + key + "' must be an array of " + std::to_string(rows) +
                     " rows");
  for (const json& row : value) {
    if (!row.is_array() || row.size() != 3)
      throw ParseError("each row of '" + key + "' must hold 3 scalar strings");
    for (const json& cell : row) {
      if (!cell.is_string()) throw ParseError("scalars must be strings in '" + key + "'");
    }
  }
  return value;
}

Scalar cell(const json& rows, std::size_t r, std::size_t c, const FieldSpec& spec) {
  return Scalar::parse(rows.at(r).at(c).get<std::string>(), spec);
}

}  // namespace

Tetrahedron parse_instance(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::exception& e) {
    throw ParseError(std::string("bad instance JSON: ") + e.what());
  }
  if (!doc.is_object()) throw ParseError("instance must be a JSON object");
  for (const auto& item : doc.items()) {
    if (item.key() != "field" && item.key() != "form" && item.key() != "points")
      throw ParseError("unknown instance key '" + item.key() + "'");
  }
  if (!doc.contains("field") || !doc.at("field").is_string())
    throw ParseError("instance missing string key 'field'");
  FieldSpec spec = FieldSpec::parse(doc.at("field").get<std::string>());

  const json& form_rows = expect_rows(doc, "form", 3);
  Mat3 grid(cell(form_rows, 0, 0, spec), cell(form_rows, 0, 1, spec), cell(form_rows, 0, 2, spec),
            cell(form_rows, 1, 0, spec), cell(form_rows, 1, 1, spec), cell(form_rows, 1, 2, spec),
            cell(form_rows, 2, 0, spec), cell(form_rows, 2, 1, spec), cell(form_rows, 2, 2, spec));
  SymForm form = SymForm::from_matrix(grid);

  const json& point_rows = expect_rows(doc, "points", 4);
  auto point = [&](std::size_t r) {
    return Point3{cell(point_rows, r, 0, spec), cell(point_rows, r, 1, spec),
                  cell(point_rows, r, 2, spec)};
  };
  return Tetrahedron(point(0), point(1), point(2), point(3), form);
}

Tetrahedron load_instance(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open instance file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_instance(buf.str());
}

std::string render_instance(const Tetrahedron& t) {
  json doc;
  doc["field"] = t.spec().str();
  Mat3 m = t.form().matrix();
  json form = json::array();
  for (int r = 0; r < 3; ++r)
    form.push_back({m.at(r, 0).str(), m.at(r, 1).str(), m.at(r, 2).str()});
  doc["form"] = form;
  json points = json::array();
  for (int i = 0; i < 4; ++i) {
    const Point3& p = t.point(i);
    points.push_back({p.x.str(), p.y.str(), p.z.str()});
  }
  doc["points"] = points;
  return doc.dump(2) + "\n";
}

}  // namespace tetrig
