#include "ultra/cli.hpp"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iomanip>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "ultra/ballposet.hpp"
#include "ultra/census.hpp"
#include "ultra/diametrical.hpp"
#include "ultra/errors.hpp"
#include "ultra/extremal.hpp"
#include "ultra/io.hpp"
#include "ultra/reptree.hpp"
#include "ultra/transforms.hpp"

namespace ultra::cli {
namespace {

using nlohmann::json;

struct Printer {
  int decimal = -1;

  std::string operator()(const Rational& v) const {
    return decimal >= 0 ? to_decimal(v, decimal) : to_string(v);
  }

  json space(const SemimetricSpace& s) const {
    json rows = json::array();
    for (std::size_t i = 0; i < s.size(); ++i) {
      json row = json::array();
      for (std::size_t k = 0; k < s.size(); ++k) row.push_back((*this)(s.d(i, k)));
      rows.push_back(std::move(row));
    }
    return json{{"points", s.labels()}, {"distances", std::move(rows)}};
  }

  json walk(const std::vector<std::string>& order, const std::vector<Rational>& weights) const {
    json w = json::array();
    for (const auto& v : weights) w.push_back((*this)(v));
    return json{{"order", order}, {"weights", std::move(w)}};
  }
};

UltrametricSpace read_ultrametric(const std::string& path) {
  return UltrametricSpace(read_space_file(path));
}

std::size_t enumeration_limit() {
  if (const char* env = std::getenv(kEnumLimitEnv); env && *env) {
    try {
      return static_cast<std::size_t>(std::stoul(env));
    } catch (const std::exception&) {
      throw Error(std::string(kEnumLimitEnv) + " is not a number: '" + env + "'");
    }
  }
  return kDefaultEnumerationLimit;
}

void print_tree(std::ostream& out, const RepTree& tree, std::size_t v, std::size_t indent,
                const Printer& fmt) {
  const auto& node = tree.node(v);
  out << std::string(indent * 2, ' ');
  if (node.is_leaf()) {
    out << tree.point_labels()[*node.point] << "\n";
    return;
  }
  out << fmt(node.label) << "\n";
  for (auto c : node.children) print_tree(out, tree, c, indent + 1, fmt);
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Finite ultrametric and semimetric spaces: extremal class, trees, balls"};
  app.require_subcommand(1);
  int decimal = -1;
  app.add_option("--decimal", decimal, "Print values as K-digit decimals (display only)")
      ->check(CLI::NonNegativeNumber);

  std::string file, file2, out_dir;
  std::string epsilon_text;
  bool dot = false, as_cycle = false;
  std::size_t n = 0, jobs = 1;
  std::string out_format = "json";

  auto* check = app.add_subcommand("check", "Strong triangle inequality verdict");
  auto* spectrum = app.add_subcommand("spectrum", "Sorted distinct distances");
  auto* extremal = app.add_subcommand("extremal", "Is |Sp X| = |X|?");
  auto* path = app.add_subcommand("path", "Characteristic Hamiltonian path (JSON)");
  auto* cycle = app.add_subcommand("cycle", "Characteristic Hamiltonian cycle (JSON)");
  auto* reconstruct = app.add_subcommand("reconstruct", "Ultrametric from a path file");
  auto* tree = app.add_subcommand("tree", "Representing tree");
  auto* diam = app.add_subcommand("diametrical", "Diametrical decomposition");
  auto* balls = app.add_subcommand("balls", "All closed balls");
  auto* hasse = app.add_subcommand("hasse", "Hasse diagram of the balls");
  auto* lift = app.add_subcommand("lift", "Ultrametric lift with a ball-preserving projection");
  auto* approx = app.add_subcommand("approx", "Extremal epsilon-approximation");
  auto* pipeline = app.add_subcommand("pipeline", "Lift followed by approximation");
  auto* count = app.add_subcommand("count", "Number of extremal spaces per spectrum");
  auto* enumerate = app.add_subcommand("enumerate", "Write every extremal n-point space");
  auto* similar = app.add_subcommand("similar", "Weak similarity test");
  auto* isometric = app.add_subcommand("isometric", "Isometry test");

  for (auto* sub : {check, spectrum, extremal, path, cycle, tree, diam, balls, hasse, lift,
                    approx, pipeline, similar, isometric}) {
    sub->add_option("file", file, "Space file (.json or .csv)")->required();
  }
  reconstruct->add_option("file", file, "Path file {\"order\", \"weights\"}")->required();
  reconstruct->add_flag("--cycle", as_cycle, "Input is a characteristic cycle");
  reconstruct->add_option("--format", out_format, "Output format")
      ->check(CLI::IsMember({"json", "csv"}));
  for (auto* sub : {similar, isometric}) {
    sub->add_option("file2", file2, "Second space file")->required();
  }
  for (auto* sub : {tree, diam, hasse}) sub->add_flag("--dot", dot, "Emit Graphviz DOT");
  for (auto* sub : {approx, pipeline}) {
    sub->add_option("--epsilon", epsilon_text, "Positive tolerance")->required();
  }
  for (auto* sub : {count, enumerate}) sub->add_option("n", n, "Point count")->required();
  enumerate->add_option("--out", out_dir, "Output directory")->required();
  enumerate->add_option("--jobs", jobs, "Worker threads")->check(CLI::PositiveNumber);

  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kTrue;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n" << "run with --help for usage\n";
    return kError;
  }

  const Printer fmt{decimal};
  try {
    if (*check) {
      const auto space = read_space_file(file);
      if (auto t = check_ultrametric(space)) {
        out << "not ultrametric: (" << space.label((*t)[0]) << ", " << space.label((*t)[1])
            << ", " << space.label((*t)[2]) << ")\n";
        return kFalse;
      }
      out << "ultrametric\n";
      return kTrue;
    }
    if (*spectrum) {
      const auto sp = spectrum_of(read_space_file(file));
      for (std::size_t i = 0; i < sp.size(); ++i) out << (i ? " " : "") << fmt(sp.values[i]);
      out << "\n";
      return kTrue;
    }
    if (*extremal) {
      const auto m = gomory_hu_margin(read_ultrametric(file));
      const bool yes = m.spectrum_size == m.point_count;
      out << (yes ? "extremal" : "not extremal") << " |Sp|=" << m.spectrum_size
          << " |X|=" << m.point_count << "\n";
      return yes ? kTrue : kFalse;
    }
    if (*path) {
      const auto p = characteristic_ham_path(read_ultrametric(file));
      out << fmt.walk(p.order, p.weights).dump(2) << "\n";
      return kTrue;
    }
    if (*cycle) {
      const auto space = read_ultrametric(file);
      const auto c = path_to_cycle(characteristic_ham_path(space), space);
      out << fmt.walk(c.order, c.weights).dump(2) << "\n";
      return kTrue;
    }
    if (*reconstruct) {
      const auto text = read_text_file(file);
      const auto space =
          as_cycle ? reconstruct_from_cycle(parse_cycle(text)) : reconstruct_from_path(parse_path(text));
      if (decimal >= 0) {
        out << fmt.space(space).dump(2) << "\n";
      } else {
        out << serialize_space(space, out_format == "csv" ? Format::csv : Format::json);
      }
      return kTrue;
    }
    if (*tree) {
      const auto t = build_representing_tree(read_ultrametric(file));
      if (dot) {
        out << reptree_dot(t);
      } else {
        print_tree(out, t, t.root(), 0, fmt);
      }
      return kTrue;
    }
    if (*diam) {
      const auto space = read_ultrametric(file);
      if (dot) {
        out << diametrical_dot(space);
        return kTrue;
      }
      const auto dec = diametrical_decompose(space);
      out << "diameter " << fmt(dec.diameter) << " k=" << dec.k() << "\n";
      for (const auto& part : dec.parts) out << ball_text(part, space) << "\n";
      return kTrue;
    }
    if (*balls) {
      const auto space = read_space_file(file);
      for (const auto& b : all_balls(space)) {
        out << ball_text(b.members, space) << " center=" << space.label(b.center)
            << " radius=" << fmt(b.radius) << "\n";
      }
      return kTrue;
    }
    if (*hasse) {
      const auto space = read_space_file(file);
      const auto diagram = hasse_diagram(all_balls(space));
      if (dot) {
        out << hasse_dot(diagram, space);
        return kTrue;
      }
      for (const auto& [a, b] : diagram.arcs) {
        out << ball_text(diagram.vertices[a].members, space) << " -> "
            << ball_text(diagram.vertices[b].members, space) << "\n";
      }
      return kTrue;
    }
    if (*lift) {
      const auto result = lift_semimetric(read_space_file(file));
      json j{{"lifted", fmt.space(*result.lifted)},
             {"projection", point_map_to_json(result.projection)},
             {"ball_preserving", check_ball_preserving(result.projection)},
             {"diagram_map", to_string(check_arc_surjective_hom(result.projection))}};
      out << j.dump(2) << "\n";
      return kTrue;
    }
    if (*approx) {
      const auto result = approximate_extremal(read_ultrametric(file), parse_rational(epsilon_text));
      json j{{"space", fmt.space(*result.space)},
             {"map", point_map_to_json(result.witness.map)},
             {"epsilon", fmt(result.witness.epsilon)},
             {"max_deviation", fmt(result.witness.max_deviation)},
             {"extremal", is_extremal(*result.space)}};
      out << j.dump(2) << "\n";
      return kTrue;
    }
    if (*pipeline) {
      const auto space = read_space_file(file);
      const auto result = compose_pipeline(space, parse_rational(epsilon_text));
      json composite = json::object();
      for (std::size_t z = 0; z < result.composite.size(); ++z) {
        composite[result.approximation.space->label(z)] = space.label(result.composite[z]);
      }
      json j{{"lifted", fmt.space(*result.lift.lifted)},
             {"projection", point_map_to_json(result.lift.projection)},
             {"extremal", fmt.space(*result.approximation.space)},
             {"approximation_map", point_map_to_json(result.approximation.witness.map)},
             {"max_deviation", fmt(result.approximation.witness.max_deviation)},
             {"composite", std::move(composite)}};
      out << j.dump(2) << "\n";
      return kTrue;
    }
    if (*count) {
      out << kappa(n).str() << "\n";
      return kTrue;
    }
    if (*enumerate) {
      const auto spaces = enumerate_extremal(n, EnumerationOptions{enumeration_limit(), jobs});
      namespace fs = std::filesystem;
      fs::create_directories(out_dir);
      json manifest{{"n", n}, {"count", spaces.size()}, {"spaces", json::array()}};
      const int width = static_cast<int>(std::to_string(spaces.size()).size());
      for (std::size_t i = 0; i < spaces.size(); ++i) {
        std::ostringstream name;
        name << "space_" << std::setw(width) << std::setfill('0') << (i + 1) << ".json";
        std::ofstream f(fs::path(out_dir) / name.str(), std::ios::binary);
        if (!f) throw Error("cannot write into '" + out_dir + "'");
        f << serialize_space(spaces[i], Format::json);
        manifest["spaces"].push_back(
            {{"file", name.str()},
             {"code", canonical_code(build_representing_tree(spaces[i]), CodeMode::isometry).code}});
      }
      std::ofstream m(fs::path(out_dir) / "manifest.json", std::ios::binary);
      m << manifest.dump(2) << "\n";
      out << "wrote " << spaces.size() << " spaces to " << out_dir << "\n";
      return kTrue;
    }
    if (*similar) {
      const auto x = read_ultrametric(file);
      const auto y = read_ultrametric(file2);
      const auto w = are_weakly_similar(x, y);
      if (!w) {
        out << "not weakly similar\n";
        return kFalse;
      }
      json phi = json::object();
      for (std::size_t i = 0; i < w->phi.size(); ++i) phi[x.label(i)] = y.label(w->phi[i]);
      json f = json::array();
      for (const auto& [from, to] : w->f) f.push_back({fmt(from), fmt(to)});
      out << json{{"phi", std::move(phi)}, {"f", std::move(f)}}.dump(2) << "\n";
      return kTrue;
    }
    if (*isometric) {
      const bool yes = are_isometric(read_ultrametric(file), read_ultrametric(file2));
      out << (yes ? "isometric" : "not isometric") << "\n";
      return yes ? kTrue : kFalse;
    }
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kError;
  }
  err << "error: no subcommand\n";
  return kError;
}

}  // namespace ultra::cli
