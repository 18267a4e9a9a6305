/*
   Copyright 2026 The stringy authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#include "cli.hpp"

#include <algorithm>
#include <fstream>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "stringy/catalog.hpp"
#include "stringy/dcc.hpp"
#include "stringy/dualgraph.hpp"
#include "stringy/equivariant.hpp"
#include "stringy/error.hpp"
#include "stringy/laurent.hpp"
#include "stringy/stringy.hpp"

namespace stringy::cli {

namespace {

using nlohmann::ordered_json;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot read '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

ResolutionGraph load_graph(const std::string& path) {
  ResolutionGraph g = graph_from_json(read_file(path));
  const bool missing_a = std::any_of(g.vertices.begin(), g.vertices.end(), [](const Vertex& v) { return !v.a; });
  const bool has_w = std::all_of(g.vertices.begin(), g.vertices.end(), [](const Vertex& v) { return v.w.has_value(); });
  if (missing_a && has_w && !g.empty()) g = discrepancies_from_weights(g);
  return g;
}

void emit_motive_record(std::ostream& out, bool machine, const MotiveValue& motive, bool with_report) {
  const TruncationReport report = truncation_report(motive);
  if (machine) {
    ordered_json doc;
    doc["motive"] = to_string(motive);
    doc["N"] = to_string(report.N);
    doc["C"] = report.C.get_si();
    out << doc.dump() << "\n";
    return;
  }
  out << to_string(motive) << "\n";
  if (with_report) {
    out << "N = " << to_string(report.N) << "\n";
    out << "C = " << report.C.get_str() << "\n";
  }
}

ordered_json terms_json(const std::vector<SeriesTerm>& terms) {
  ordered_json arr = ordered_json::array();
  for (const auto& t : terms) {
    ordered_json jt;
    jt["exponent"] = to_string(t.exponent);
    jt["coefficient"] = to_string(t.coefficient);
    arr.push_back(std::move(jt));
  }
  return arr;
}

std::string edge_list(const TreeShape& tree) {
  std::string s = "{";
  for (std::size_t k = 0; k < tree.edges.size(); ++k) {
    if (k > 0) s += ",";
    s += std::to_string(tree.edges[k].first) + "-" + std::to_string(tree.edges[k].second);
  }
  return s + "}";
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact stringy motives of log terminal surface singularities with group actions", "stringy"};
  app.require_subcommand(1);
  app.fallthrough();
  std::string format = "text";
  app.add_option("--format", format, "Output rendering")->check(CLI::IsMember({"text", "machine"}));

  std::string graph_path;
  std::string action_path;
  auto* compute = app.add_subcommand("compute", "Stringy motive of a graph with the trivial action");
  compute->add_option("graph", graph_path, "Graph file")->required();

  auto* quotient_cmd = app.add_subcommand("quotient", "Quotient stringy motive of a graph with a group action");
  quotient_cmd->add_option("graph", graph_path, "Graph file")->required();
  quotient_cmd->add_option("--action", action_path, "Action file")->required();

  auto* discrepancies = app.add_subcommand("discrepancies", "Solve log discrepancies from self-intersections");
  discrepancies->add_option("graph", graph_path, "Graph file")->required();

  std::string lhs;
  std::string rhs;
  auto* compare_cmd = app.add_subcommand("compare", "Order two motive expressions");
  compare_cmd->add_option("f", lhs, "First expression")->required();
  compare_cmd->add_option("g", rhs, "Second expression")->required();

  std::string cutoff_text = "0";
  bool as_poincare = false;
  auto* expand_cmd = app.add_subcommand("expand", "Laurent expansion at L -> infinity");
  expand_cmd->add_option("f", lhs, "Expression")->required();
  expand_cmd->add_option("--cutoff", cutoff_text, "Lowest exponent kept (rational)");
  expand_cmd->add_flag("--poincare", as_poincare, "Render the Poincare realization in T (cutoff in T)");

  std::vector<std::string> tower_names;
  auto* tower = app.add_subcommand("tower", "Strict descent along a tower of covers");
  tower->add_option("covers", tower_names, "Catalogued covers, e.g. E7 E6:Z2 D4:S3 A0:BO")->required();

  unsigned root_index = 1;
  std::size_t max_vertices = 1;
  bool verify_dcc = false;
  auto* enumerate = app.add_subcommand("enumerate", "Enumerate abstract quotient data for a root index");
  enumerate->add_option("--r", root_index, "Root index")->required()->check(CLI::PositiveNumber);
  enumerate->add_option("--max-vertices", max_vertices, "Largest orbit-vertex count")->required();
  enumerate->add_flag("--verify-dcc", verify_dcc, "Check the vertex bounds and chain finiteness");

  auto* catalog = app.add_subcommand("catalog", "Built-in ADE catalog");
  catalog->require_subcommand(1);
  auto* catalog_list = catalog->add_subcommand("list", "List catalogued singularities and actions");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      out << app.help();
      return kExitOk;
    }
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  const bool machine = format == "machine";

  try {
    if (*compute) {
      const ResolutionGraph g = load_graph(graph_path);
      validate(g);
      const MotiveValue motive = stringy_local(quotient(g, GraphAction::trivial(g)));
      emit_motive_record(out, machine, motive, true);
    } else if (*quotient_cmd) {
      const ResolutionGraph g = load_graph(graph_path);
      const GraphAction act = action_from_json(read_file(action_path), g);
      emit_motive_record(out, machine, quotient_motive(g, act), false);
    } else if (*discrepancies) {
      const ResolutionGraph g = graph_from_json(read_file(graph_path));
      const ResolutionGraph solved = discrepancies_from_weights(g);
      if (!is_negative_definite(g)) err << "warning: intersection matrix is not negative definite\n";
      const unsigned r = gorenstein_index(solved);
      if (machine) {
        ordered_json doc;
        doc["a"] = ordered_json::array();
        for (const auto& v : solved.vertices) doc["a"].push_back(to_string(*v.a));
        doc["index"] = r;
        out << doc.dump() << "\n";
      } else {
        out << "a = [";
        for (std::size_t i = 0; i < solved.size(); ++i) out << (i ? ", " : "") << to_string(*solved.vertices[i].a);
        out << "], index r = " << r << "\n";
      }
    } else if (*compare_cmd) {
      const auto order = compare(parse_motive(lhs), parse_motive(rhs));
      if (machine) {
        out << ordered_json{{"result", std::string(ordering_name(order))}}.dump() << "\n";
      } else {
        out << ordering_name(order) << "\n";
      }
    } else if (*expand_cmd) {
      const MotiveValue f = parse_motive(lhs);
      const Rational cutoff = parse_rational(cutoff_text);
      ordered_json doc;
      if (as_poincare) {
        const PoincareSeries s = poincare(f, cutoff);
        if (!machine) {
          out << to_string(s) << "\n";
          return kExitOk;
        }
        doc["symbol"] = "T";
        doc["terms"] = terms_json(s.terms);
        doc["cutoff"] = to_string(s.cutoff);
        doc["exact"] = s.exact;
      } else {
        const LaurentExpansion s = expand(f, cutoff);
        if (!machine) {
          out << to_string(s) << "\n";
          return kExitOk;
        }
        doc["symbol"] = "L";
        doc["terms"] = terms_json(s.terms);
        doc["cutoff"] = to_string(s.cutoff);
        doc["exact"] = s.exact;
      }
      out << doc.dump() << "\n";
    } else if (*tower) {
      const TowerResult result = verify_tower(tower_names);
      if (machine) {
        ordered_json doc;
        doc["chain"] = ordered_json::array();
        for (const auto& e : result.chain.entries) {
          doc["chain"].push_back(ordered_json{{"label", e.label}, {"motive", to_string(e.value)}});
        }
        doc["strict"] = true;
        doc["pass"] = result.descent.pass;
        doc["first_violation"] = result.descent.first_violation ? ordered_json(*result.descent.first_violation)
                                                                : ordered_json(nullptr);
        out << doc.dump() << "\n";
      } else {
        for (const auto& e : result.chain.entries) out << e.label << ": " << to_string(e.value) << "\n";
        out << "strict descent: ";
        if (result.descent.pass) {
          out << "PASS\n";
        } else {
          out << "FAIL at index " << *result.descent.first_violation << "\n";
        }
      }
    } else if (*enumerate) {
      if (verify_dcc) {
        const DccReport report = verify_dcc_on_enumeration(root_index, max_vertices);
        if (machine) {
          ordered_json doc;
          doc["label"] = "combinatorial DCC";
          doc["r"] = report.root_index;
          doc["max_vertices"] = report.max_vertices;
          doc["data"] = report.data_count;
          doc["distinct_values"] = report.distinct_values;
          doc["fibers"] = report.fiber_count;
          doc["largest_fiber"] = report.largest_fiber;
          doc["longest_strict_chain"] = report.longest_strict_chain;
          doc["non_special_bound_violations"] = report.non_special_bound_violations;
          doc["total_bound_violations"] = report.total_bound_violations;
          doc["negative_coefficient_violations"] = report.negative_coefficient_violations;
          doc["monotonicity_violations"] = report.monotonicity_violations;
          doc["pass"] = report.pass;
          out << doc.dump() << "\n";
        } else {
          out << to_text(report);
        }
      } else {
        for (const auto& entry : enumerate_space(root_index, max_vertices)) {
          if (machine) {
            out << enumeration_record(entry) << "\n";
          } else {
            out << shape_name(entry.datum.tree.shape) << " " << edge_list(entry.datum.tree) << " a=[";
            for (std::size_t i = 0; i < entry.datum.a.size(); ++i) out << (i ? "," : "") << to_string(entry.datum.a[i]);
            out << "] " << to_string(entry.motive) << "\n";
          }
        }
      }
    } else if (*catalog_list) {
      if (machine) {
        for (const auto& e : catalog_entries()) {
          ordered_json doc;
          doc["name"] = e.name;
          doc["vertices"] = e.graph.size();
          doc["actions"] = ordered_json::array();
          for (const auto& act : e.known_actions) doc["actions"].push_back(act.label());
          out << doc.dump() << "\n";
        }
      } else {
        out << catalog_listing();
      }
    }
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return e.code() == ErrorCode::kParseError ? kExitUsage : kExitDomainError;
  }
  return kExitOk;
}

}  // namespace stringy::cli
