#pragma once

#include <string>
#include <string_view>

#include <nlohmann/json.hpp>

#include "ultra/ballposet.hpp"
#include "ultra/extremal.hpp"
#include "ultra/reptree.hpp"
#include "ultra/space.hpp"

namespace ultra {

enum class Format { json, csv };

/// csv for a ".csv" extension, json otherwise.
Format format_for_path(std::string_view path);

/// JSON: {"points": [labels], "distances": [[values]]}, values as decimal or
/// "p/q" strings (plain JSON numbers are accepted too).
/// CSV: a header row of labels followed by the matrix rows.
/// Throws SyntaxError or AxiomViolation.
SemimetricSpace parse_space(std::string_view text, Format format);

/// Inverse of parse_space; values printed as exact fractions.
std::string serialize_space(const SemimetricSpace& space, Format format);

/// Reads and parses a file; the format follows the extension.
SemimetricSpace read_space_file(const std::string& path);
std::string read_text_file(const std::string& path);

nlohmann::json space_to_json(const SemimetricSpace& space);
SemimetricSpace space_from_json(const nlohmann::json& j);

/// {"order": [labels], "weights": [values]}
nlohmann::json path_to_json(const std::vector<std::string>& order,
                            const std::vector<Rational>& weights);
CharacteristicPath parse_path(std::string_view text);
CharacteristicCycle parse_cycle(std::string_view text);

/// {source label: target label, ...}
nlohmann::json point_map_to_json(const PointMap& map);

std::string reptree_dot(const RepTree& tree);
std::string diametrical_dot(const UltrametricSpace& space);
std::string hasse_dot(const HasseDiagram& diagram, const SemimetricSpace& space);

/// "{a,b,c}" with members in index order.
std::string ball_text(const std::vector<std::size_t>& members, const SemimetricSpace& space);

}  // namespace ultra
