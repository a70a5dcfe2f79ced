#include "ultra/io.hpp"

#include <cctype>
#include <fstream>
#include <sstream>

#include "ultra/diametrical.hpp"
#include "ultra/errors.hpp"

namespace ultra {
namespace {

using nlohmann::json;

Rational value_from_json(const json& v) {
  if (v.is_string()) return parse_rational(v.get<std::string>());
  if (v.is_number_integer() || v.is_number_unsigned()) return parse_rational(v.dump());
  if (v.is_number_float()) return parse_rational(v.dump());  // shortest round-trip text
  throw SyntaxError("distance must be a number or a numeric string, got " + v.dump());
}

std::vector<std::string> split_csv_row(std::string_view line) {
  std::vector<std::string> cells;
  std::string cell;
  for (char c : line) {
    if (c == ',') {
      cells.push_back(cell);
      cell.clear();
    } else if (c != '\r') {
      cell.push_back(c);
    }
  }
  cells.push_back(cell);
  for (auto& s : cells) {
    const auto b = s.find_first_not_of(" \t");
    const auto e = s.find_last_not_of(" \t");
    s = b == std::string::npos ? std::string() : s.substr(b, e - b + 1);
  }
  return cells;
}

SemimetricSpace parse_csv(std::string_view text) {
  std::vector<std::vector<std::string>> rows;
  std::istringstream in{std::string(text)};
  std::string line;
  while (std::getline(in, line)) {
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    rows.push_back(split_csv_row(line));
  }
  if (rows.empty()) throw SyntaxError("csv: missing header row");
  std::vector<std::string> labels = rows.front();
  const std::size_t n = labels.size();
  if (rows.size() != n + 1) {
    throw SyntaxError("csv: expected " + std::to_string(n) + " matrix rows, found " +
                      std::to_string(rows.size() - 1));
  }
  std::vector<std::vector<Rational>> matrix;
  for (std::size_t i = 1; i < rows.size(); ++i) {
    if (rows[i].size() != n) {
      throw SyntaxError("csv: row " + std::to_string(i) + " has " +
                        std::to_string(rows[i].size()) + " cells, expected " + std::to_string(n));
    }
    std::vector<Rational> row;
    for (const auto& cell : rows[i]) row.push_back(parse_rational(cell));
    matrix.push_back(std::move(row));
  }
  return SemimetricSpace(std::move(labels), std::move(matrix));
}

std::string dot_quote(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out.push_back('\\');
    if (c == '\n') {
      out += "\\n";
      continue;
    }
    out.push_back(c);
  }
  return out + "\"";
}

}  // namespace

Format format_for_path(std::string_view path) {
  if (path.size() >= 4) {
    std::string ext(path.substr(path.size() - 4));
    for (auto& c : ext) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    if (ext == ".csv") return Format::csv;
  }
  return Format::json;
}

SemimetricSpace space_from_json(const json& j) {
  if (!j.is_object() || !j.contains("points") || !j.contains("distances")) {
    throw SyntaxError("json space needs \"points\" and \"distances\"");
  }
  const auto& points = j.at("points");
  const auto& rows = j.at("distances");
  if (!points.is_array() || !rows.is_array()) {
    throw SyntaxError("\"points\" and \"distances\" must be arrays");
  }
  std::vector<std::string> labels;
  for (const auto& p : points) {
    if (!p.is_string()) throw SyntaxError("point labels must be strings");
    labels.push_back(p.get<std::string>());
  }
  std::vector<std::vector<Rational>> matrix;
  for (const auto& row : rows) {
    if (!row.is_array()) throw SyntaxError("each distance row must be an array");
    std::vector<Rational> r;
    for (const auto& v : row) r.push_back(value_from_json(v));
    matrix.push_back(std::move(r));
  }
  return SemimetricSpace(std::move(labels), std::move(matrix));
}

SemimetricSpace parse_space(std::string_view text, Format format) {
  if (format == Format::csv) return parse_csv(text);
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw SyntaxError(std::string("json: ") + e.what());
  }
  return space_from_json(j);
}

json space_to_json(const SemimetricSpace& space) {
  json rows = json::array();
  for (std::size_t i = 0; i < space.size(); ++i) {
    json row = json::array();
    for (std::size_t k = 0; k < space.size(); ++k) row.push_back(to_string(space.d(i, k)));
    rows.push_back(std::move(row));
  }
  return json{{"points", space.labels()}, {"distances", std::move(rows)}};
}

std::string serialize_space(const SemimetricSpace& space, Format format) {
  if (format == Format::json) return space_to_json(space).dump(2) + "\n";
  std::string out;
  for (std::size_t i = 0; i < space.size(); ++i) {
    if (i > 0) out += ",";
    out += space.label(i);
  }
  out += "\n";
  for (std::size_t i = 0; i < space.size(); ++i) {
    for (std::size_t k = 0; k < space.size(); ++k) {
      if (k > 0) out += ",";
      out += to_string(space.d(i, k));
    }
    out += "\n";
  }
  return out;
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

SemimetricSpace read_space_file(const std::string& path) {
  return parse_space(read_text_file(path), format_for_path(path));
}

json path_to_json(const std::vector<std::string>& order, const std::vector<Rational>& weights) {
  json w = json::array();
  for (const auto& v : weights) w.push_back(to_string(v));
  return json{{"order", order}, {"weights", std::move(w)}};
}

namespace {

std::pair<std::vector<std::string>, std::vector<Rational>> parse_walk(std::string_view text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw SyntaxError(std::string("json: ") + e.what());
  }
  if (!j.is_object() || !j.contains("order") || !j.contains("weights") ||
      !j["order"].is_array() || !j["weights"].is_array()) {
    throw SyntaxError("path file needs \"order\" and \"weights\" arrays");
  }
  std::vector<std::string> order;
  for (const auto& p : j["order"]) {
    if (!p.is_string()) throw SyntaxError("order entries must be strings");
    order.push_back(p.get<std::string>());
  }
  std::vector<Rational> weights;
  for (const auto& v : j["weights"]) weights.push_back(value_from_json(v));
  return {std::move(order), std::move(weights)};
}

}  // namespace

CharacteristicPath parse_path(std::string_view text) {
  auto [order, weights] = parse_walk(text);
  return CharacteristicPath{std::move(order), std::move(weights)};
}

CharacteristicCycle parse_cycle(std::string_view text) {
  auto [order, weights] = parse_walk(text);
  return CharacteristicCycle{std::move(order), std::move(weights)};
}

json point_map_to_json(const PointMap& map) {
  json j = json::object();
  for (std::size_t x = 0; x < map.from->size(); ++x) {
    j[map.from->label(x)] = map.to->label(map(x));
  }
  return j;
}

std::string ball_text(const std::vector<std::size_t>& members, const SemimetricSpace& space) {
  std::string s = "{";
  for (std::size_t i = 0; i < members.size(); ++i) {
    if (i > 0) s += ",";
    s += space.label(members[i]);
  }
  return s + "}";
}

std::string reptree_dot(const RepTree& tree) {
  std::ostringstream out;
  out << "digraph representing_tree {\n";
  for (std::size_t v = 0; v < tree.node_count(); ++v) {
    const auto& node = tree.node(v);
    if (node.is_leaf()) {
      out << "  n" << v << " [shape=box, label=" << dot_quote(tree.point_labels()[*node.point])
          << "];\n";
    } else {
      out << "  n" << v << " [shape=ellipse, label=" << dot_quote(to_string(node.label))
          << "];\n";
    }
  }
  for (std::size_t v = 0; v < tree.node_count(); ++v) {
    for (auto c : tree.node(v).children) out << "  n" << v << " -> n" << c << ";\n";
  }
  out << "}\n";
  return out.str();
}

std::string diametrical_dot(const UltrametricSpace& space) {
  std::ostringstream out;
  out << "graph diametrical {\n";
  for (std::size_t i = 0; i < space.size(); ++i) out << "  " << dot_quote(space.label(i)) << ";\n";
  const std::string diam = dot_quote(to_string(space.diameter()));
  for (const auto& [a, b] : diametrical_edges(space)) {
    out << "  " << dot_quote(space.label(a)) << " -- " << dot_quote(space.label(b))
        << " [label=" << diam << "];\n";
  }
  out << "}\n";
  return out.str();
}

std::string hasse_dot(const HasseDiagram& diagram, const SemimetricSpace& space) {
  std::ostringstream out;
  out << "digraph hasse {\n";
  for (std::size_t v = 0; v < diagram.vertices.size(); ++v) {
    out << "  b" << v << " [label=" << dot_quote(ball_text(diagram.vertices[v].members, space))
        << "];\n";
  }
  for (const auto& [a, b] : diagram.arcs) out << "  b" << a << " -> b" << b << ";\n";
  out << "}\n";
  return out.str();
}

}  // namespace ultra
