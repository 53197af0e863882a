#include <CLI11.hpp>
#include <cstdlib>
#include <fstream>
#include <iostream>

#include "goeritz/complexes.hpp"
#include "goeritz/json_io.hpp"
#include "goeritz/nt_classifier.hpp"
#include "goeritz/recognizer.hpp"
#include "goeritz/selfcheck.hpp"
#include "goeritz/slope_lab.hpp"

namespace {

using namespace goeritz;

std::size_t default_budget() {
  if (const char* env = std::getenv("GOERITZ_BUDGET")) {
    char* end = nullptr;
    unsigned long long v = std::strtoull(env, &end, 10);
    if (end && *end == '\0' && v > 0) return static_cast<std::size_t>(v);
  }
  return 1u << 20;
}

void print_verdict_human(const Verdict& v) {
  switch (v.type) {
    case VerdictType::FiniteOrder:
      std::cout << "finite order " << *v.order;
      if (v.conjugator) {
        std::string w = v.conjugator->to_word();
        std::cout << "  (vertex conjugator " << (w.empty() ? "e" : w) << ")";
      }
      std::cout << "\n";
      break;
    case VerdictType::Reducible: {
      std::cout << "reducible: conjugate into " << subgroup_name(*v.subgroup);
      std::string w = v.conjugator ? v.conjugator->to_word() : "";
      std::cout << "  (conjugator " << (w.empty() ? "e" : w) << ")";
      if (v.crs_label) std::cout << "  [reduction: " << *v.crs_label << "]";
      std::cout << "\n";
      break;
    }
    case VerdictType::PseudoAnosov:
      std::cout << "pseudo-Anosov\n";
      if (v.evidence) {
        std::cout << "  vertex:    " << v.evidence->vertex << "\n";
        std::cout << "  fig8:      " << v.evidence->fig8 << "\n";
        std::cout << "  disk_stab: " << v.evidence->disk_stab << "\n";
      }
      break;
    case VerdictType::Unknown:
      std::cout << "unknown (budget " << (v.budget_spent ? *v.budget_spent : 0) << " spent)\n";
      break;
  }
}

int verdict_exit_code(const Verdict& v) { return v.definitive() ? 0 : 2; }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"goeritz: computations in the genus-2 Goeritz group"};
  app.require_subcommand(1);
  bool as_json = false;
  app.add_flag("--json", as_json, "machine-readable output");

  // classify
  auto* cmd_classify = app.add_subcommand("classify", "Nielsen-Thurston type of a word");
  std::string classify_word_arg;
  std::size_t budget = default_budget();
  cmd_classify->add_option("word", classify_word_arg, "word over a,b,B,g,d,D")->required();
  cmd_classify->add_option("--budget", budget, "search budget");

  // scan
  auto* cmd_scan = app.add_subcommand("scan", "classify all short words in a subgroup");
  std::string gens_arg;
  std::size_t scan_maxlen = 4;
  cmd_scan->add_option("--gens", gens_arg, "comma-separated generator words")->required();
  cmd_scan->add_option("--maxlen", scan_maxlen, "maximum word length in the generators");
  cmd_scan->add_option("--budget", budget, "search budget");

  // primitive
  auto* cmd_prim = app.add_subcommand("primitive", "primitivity of an F2 word (letters x,X,y,Y)");
  std::string prim_word;
  cmd_prim->add_option("word", prim_word, "word over x,X,y,Y")->required();

  // slopes
  auto* cmd_slopes = app.add_subcommand("slopes", "vertical primitive disk slopes");
  std::string mono_arg = "trefoil";
  long long slope_bound = 34;
  bool slopes_dot = false;
  cmd_slopes->add_option("--mono", mono_arg, "trefoil or fig8")->required();
  cmd_slopes->add_option("--bound", slope_bound, "max |p|, |q|");
  cmd_slopes->add_flag("--dot", slopes_dot, "emit the Farey subgraph in DOT format");

  // dist
  auto* cmd_dist = app.add_subcommand("dist", "distance in the tree or cone model");
  std::string space = "tree", w1_arg, w2_arg, kinds = "AA";
  int horizon = 8;
  cmd_dist->add_option("--space", space, "tree or cone")->required();
  cmd_dist->add_option("w1", w1_arg, "first word")->required();
  cmd_dist->add_option("w2", w2_arg, "second word")->required();
  cmd_dist->add_option("--kinds", kinds, "tree vertex kinds, e.g. AA, AB");
  cmd_dist->add_option("--horizon", horizon, "exploration horizon for the cone model");

  // ball
  auto* cmd_ball = app.add_subcommand("ball", "ball in the tree or cone model");
  std::string ball_space = "tree", ball_center = "", dot_file;
  int ball_radius = 1, ball_horizon = 3;
  cmd_ball->add_option("--space", ball_space, "tree or cone")->required();
  cmd_ball->add_option("--radius", ball_radius, "radius (half-units for cone)");
  cmd_ball->add_option("--horizon", ball_horizon, "truncation horizon");
  cmd_ball->add_option("--center", ball_center, "center word (default identity)");
  cmd_ball->add_option("--dot", dot_file, "write DOT to this file");

  // recognize
  auto* cmd_rec = app.add_subcommand("recognize", "genus-1 fibered knot from a monodromy word");
  std::string rec_word;
  cmd_rec->add_option("word", rec_word, "word over t,T,u,U,z,Z")->required();

  // selfcheck
  auto* cmd_check = app.add_subcommand("selfcheck", "run the presentation validation suite");
  unsigned seed = 12345;
  cmd_check->add_option("--seed", seed, "seed for the randomized checks");

  for (CLI::App* sc : app.get_subcommands([](const CLI::App*) { return true; }))
    sc->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 1;  // usage errors exit 1; --help exits 0
  }

  try {
    if (cmd_classify->parsed()) {
      if (classify_word_arg.empty()) throw std::invalid_argument("empty word");
      Verdict v = classify_word(parse_goeritz_word(classify_word_arg), budget);
      if (as_json)
        std::cout << verdict_to_json(v).dump() << "\n";
      else
        print_verdict_human(v);
      return verdict_exit_code(v);
    }
    if (cmd_scan->parsed()) {
      std::vector<GoeritzWord> gens;
      std::string cur;
      for (char c : gens_arg + ",") {
        if (c == ',') {
          if (!cur.empty()) gens.push_back(parse_goeritz_word(cur));
          cur.clear();
        } else {
          cur.push_back(c);
        }
      }
      ScanReport rep = scan_subgroup(gens, scan_maxlen, budget);
      if (as_json) {
        std::cout << scan_report_to_json(rep).dump() << "\n";
      } else {
        std::cout << "words: " << rep.total << "\n";
        for (auto [type, n] : rep.counts)
          std::cout << "  " << verdict_type_name(type) << ": " << n << "\n";
        std::cout << "  unknown rate: " << rep.unknown_rate << "\n";
        for (const auto& e : rep.exceptional) {
          std::cout << "  hit " << e.word << " = " << e.expanded << ": ";
          print_verdict_human(e.verdict);
        }
      }
      return rep.counts.count(VerdictType::Unknown) && rep.counts.at(VerdictType::Unknown) > 0
                 ? 2
                 : 0;
    }
    if (cmd_prim->parsed()) {
      PrimitivityResult r = f2_is_primitive(f2_reduce(prim_word));
      if (as_json) {
        json j;
        j["word"] = prim_word;
        j["primitive"] = r.primitive;
        if (r.primitive) {
          json moves = json::array();
          for (std::size_t idx : r.certificate) moves.push_back(whitehead_moves()[idx].name);
          j["certificate"] = moves;
        } else {
          j["obstruction"] =
              r.obstruction == PrimitivityObstruction::NonUnimodularAbelianization
                  ? "non-unimodular abelianization"
                  : (r.obstruction == PrimitivityObstruction::MixedSignLetterPair
                         ? "mixed-sign letter pair"
                         : "reduction stuck");
        }
        std::cout << j.dump() << "\n";
      } else {
        std::cout << (r.primitive ? "primitive" : "not primitive") << "\n";
      }
      return 0;
    }
    if (cmd_slopes->parsed()) {
      Monodromy mono;
      if (mono_arg == "trefoil") mono = Monodromy::Trefoil;
      else if (mono_arg == "fig8") mono = Monodromy::Fig8;
      else throw std::invalid_argument("--mono must be trefoil or fig8");
      auto slopes = vertical_primitive_scan(mono, slope_bound);
      if (slopes_dot) {
        std::cout << "graph farey {\n";
        std::vector<Slope> v(slopes.begin(), slopes.end());
        for (std::size_t i = 0; i < v.size(); ++i)
          std::cout << "  s" << i << " [label=\"" << v[i].to_string() << "\"];\n";
        for (std::size_t i = 0; i < v.size(); ++i)
          for (std::size_t j = i + 1; j < v.size(); ++j)
            if (farey_adjacent(v[i], v[j]))
              std::cout << "  s" << i << " -- s" << j << ";\n";
        std::cout << "}\n";
      } else if (as_json) {
        std::cout << slopes_to_json(mono, slope_bound, slopes).dump() << "\n";
      } else {
        for (const auto& s : slopes) std::cout << s.to_string() << "\n";
      }
      return 0;
    }
    if (cmd_dist->parsed()) {
      NormalForm g1 = normal_form(parse_goeritz_word(w1_arg));
      NormalForm g2 = normal_form(parse_goeritz_word(w2_arg));
      if (space == "tree") {
        if (kinds.size() != 2) throw std::invalid_argument("--kinds must be two of A,B");
        TreeVertex u = tree_vertex(kinds[0], g1);
        TreeVertex v = tree_vertex(kinds[1], g2);
        long long d = tree_distance(u, v);
        if (as_json) {
          json j;
          j["space"] = "tree";
          j["distance"] = d;
          std::cout << j.dump() << "\n";
        } else {
          std::cout << d << "\n";
        }
        return 0;
      }
      if (space != "cone") throw std::invalid_argument("--space must be tree or cone");
      ConeDistance cd = cone_distance_upper(g1, g2, horizon);
      if (as_json) {
        json j;
        j["space"] = "cone";
        if (cd.half_units >= 0) j["distance"] = cd.half_units / 2.0;
        j["exact"] = cd.exact;
        std::cout << j.dump() << "\n";
      } else {
        if (cd.half_units < 0)
          std::cout << "no path found within horizon\n";
        else
          std::cout << cd.half_units / 2.0 << (cd.exact ? " (exact)" : " (upper bound)") << "\n";
      }
      return cd.exact ? 0 : 2;
    }
    if (cmd_ball->parsed()) {
      NormalForm center = ball_center.empty()
                              ? NormalForm::identity()
                              : normal_form(parse_goeritz_word(ball_center));
      Graph g;
      if (ball_space == "tree")
        g = tree_ball(tree_vertex('A', center), ball_radius, ball_horizon);
      else if (ball_space == "cone")
        g = cone_ball(center, ball_radius, ball_horizon);
      else
        throw std::invalid_argument("--space must be tree or cone");
      std::string dot = graph_to_dot(g);
      if (!dot_file.empty()) {
        std::ofstream out(dot_file);
        out << dot;
      }
      if (as_json) {
        json j;
        j["vertices"] = g.labels.size();
        j["edges"] = g.edges.size();
        j["truncated"] = g.truncated;
        std::cout << j.dump() << "\n";
      } else {
        std::cout << g.labels.size() << " vertices, " << g.edges.size() << " edges"
                  << (g.truncated ? " (truncated)" : "") << "\n";
        if (dot_file.empty() && g.labels.size() <= 64) std::cout << dot;
      }
      return 0;
    }
    if (cmd_rec->parsed()) {
      RecognitionResult r = recognize(parse_monodromy_word(rec_word));
      if (as_json) {
        std::cout << recognition_to_json(r).dump() << "\n";
      } else {
        std::cout << recognition_kind_name(r.kind);
        if (r.kind == RecognitionKind::NotS3) {
          std::cout << (r.reason == NotS3Reason::Homology ? " (homology)" : " (casson");
          if (r.reason == NotS3Reason::Casson)
            std::cout << ", n=" << *r.central_twist << ", |lambda|=" << *r.casson_magnitude
                      << ")";
        }
        std::cout << "\n";
      }
      return 0;
    }
    // selfcheck
    auto checks = presentation_selfcheck(seed);
    bool all_ok = true;
    for (const auto& c : checks) {
      std::cout << (c.ok ? "PASS " : "FAIL ") << c.name << "\n";
      all_ok = all_ok && c.ok;
    }
    return all_ok ? 0 : 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
