// Command-line front end for the realgw library.
//
// Exit codes: 0 success, 1 domain or input error (structured JSON on
// stderr), 2 usage error.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"

#include "realgw/realgw.hpp"

namespace {

using realgw::DomainError;
using json = nlohmann::json;

constexpr int kExitOk = 0;
constexpr int kExitDomain = 1;
constexpr int kExitUsage = 2;

void emit(const json& j) { std::cout << j.dump(2) << '\n'; }

int fail(const std::string& kind, const std::string& message) {
  std::cerr << json{{"error", kind}, {"message", message}}.dump() << '\n';
  return kExitDomain;
}

int series_order() {
  const char* env = std::getenv("REALGW_ORDER");
  if (env == nullptr || *env == '\0') return realgw::kDefaultSeriesOrder;
  std::string s(env);
  if (s.find_first_not_of("0123456789") != std::string::npos || s.size() > 6) {
    throw DomainError("REALGW_ORDER must be a nonnegative integer, got '" + s + "'");
  }
  return std::stoi(s);
}

json read_document(const std::string& path) {
  std::string text;
  if (path.empty() || path == "-") {
    text.assign(std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>());
  } else {
    std::ifstream in(path);
    if (!in) throw DomainError("cannot open input file '" + path + "'");
    text.assign(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
  }
  return json::parse(text);  // parse_error carries the byte position
}

void require_order(int needed, int order, const std::string& what) {
  if (needed > order) {
    throw DomainError(what + " needs series order " + std::to_string(needed) +
                      " but REALGW_ORDER is " + std::to_string(order));
  }
}

// "a..b" or a single integer.
std::pair<std::uint64_t, std::uint64_t> parse_seed_range(const std::string& s) {
  auto parse = [&](const std::string& part) {
    if (part.empty() || part.find_first_not_of("0123456789") != std::string::npos ||
        part.size() > 18) {
      throw DomainError("--seeds expects a..b with nonnegative integers, got '" + s + "'");
    }
    return std::stoull(part);
  };
  auto dots = s.find("..");
  if (dots == std::string::npos) {
    auto v = parse(s);
    return {v, v};
  }
  auto lo = parse(s.substr(0, dots));
  auto hi = parse(s.substr(dots + 2));
  if (lo > hi) throw DomainError("--seeds range is empty: '" + s + "'");
  return {lo, hi};
}

realgw::GraphBounds parse_bounds(const std::string& s) {
  realgw::GraphBounds b;
  for (const auto& [key, value] : realgw::parse_params(s)) {
    realgw::ParamMap one{{key, value}};
    int v = static_cast<int>(realgw::detail::int_param(one, key));
    if (key == "vertices") b.max_vertices = v;
    else if (key == "real") b.max_real_edges = v;
    else if (key == "conj") b.max_conj_edges = v;
    else if (key == "genus") b.max_vertex_genus = v;
    else if (key == "degree") b.max_degree = v;
    else if (key == "n") b.max_n = v;
    else if (key == "k") b.max_k = v;
    else if (key == "a") b.max_a = v;
    else if (key == "flags") b.max_flags = v;
    else if (key == "flagval") b.max_flag_value = v;
    else throw DomainError("unknown bound '" + key + "'");
  }
  return b;
}

json congruence_json(const realgw::DecoratedGraph& g) {
  auto report = realgw::congruence_identity_check(g);
  auto [genus, degree] = realgw::derive_genus_degree(g);
  return json{{"d", degree},
              {"epsilon_gamma", realgw::epsilon_gamma(g)},
              {"g", genus},
              {"holds", report.holds},
              {"lhs", report.lhs},
              {"rhs", report.rhs}};
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact sign calculus and multiple-cover transform for real GW invariants",
               "realgw"};
  app.require_subcommand(1, 1);
  // -h is taken by coeff's --h, so help is long-form only.
  app.set_help_flag("--help", "Print this help message and exit");

  // coeff
  auto* coeff = app.add_subcommand("coeff", "Multiple-cover coefficient C_h(g)");
  std::int64_t c_h = 0, c_c1b = 0;
  int c_g = 0;
  std::string c_conv = "sinh";
  coeff->add_option("--h", c_h, "curve genus h")->required();
  coeff->add_option("--c1b", c_c1b, "even pairing <c1(X), B>")->required();
  coeff->add_option("--g", c_g, "index g of the t^{2g} coefficient")->required();
  coeff->add_option("--conv", c_conv, "sinh or sin");

  // dim
  auto* dim = app.add_subcommand("dim", "Virtual dimension of the real moduli space");
  realgw::ModuliDescriptor m;
  dim->add_option("--g", m.g, "genus")->required();
  dim->add_option("--ell", m.ell, "number of conjugate pairs of marked points")->required();
  dim->add_option("--n", m.n, "odd complex dimension of X")->required();
  dim->add_option("--c1b", m.c1B, "even pairing <c1(X), B>")->required();

  // transform / invert
  auto* transform = app.add_subcommand("transform", "Curve counts E -> GW invariants");
  std::string t_in;
  transform->add_option("--in", t_in, "input JSON file (default stdin)");
  auto* invert = app.add_subcommand("invert", "GW invariants -> curve counts E");
  std::string i_in;
  invert->add_option("--in", i_in, "input JSON file (default stdin)");

  // sign
  auto* sign = app.add_subcommand("sign", "Evaluate an orientation-comparison predicate");
  std::string s_id, s_params;
  sign->add_option("predicate", s_id, "predicate id")->required();
  sign->add_option("--params", s_params, "comma-separated key=value list");

  // graph-check
  auto* graph = app.add_subcommand("graph-check", "Check the localization sign congruence");
  std::string gc_seeds = "1..1000", gc_bounds, gc_in;
  graph->add_option("--seeds", gc_seeds, "seed range a..b");
  graph->add_option("--bounds", gc_bounds, "generator bounds, e.g. vertices=4,real=4,degree=7");
  graph->add_option("--in", gc_in, "check one graph from a JSON file instead of fuzzing");

  // verify
  auto* verify = app.add_subcommand("verify", "Run derivation identities on their default grids");
  bool v_all = false;
  std::string v_id;
  verify->add_flag("--all", v_all, "run every identity");
  verify->add_option("identity", v_id, "identity id");

  // schema
  auto* schema = app.add_subcommand("schema", "Print a JSON schema");
  std::string sc_kind;
  schema->add_option("kind", sc_kind, "graph, invariants or report")
      ->required()
      ->check(CLI::IsMember({"graph", "invariants", "report"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (coeff->parsed()) {
      int order = series_order();
      if (c_g < 0 || c_h < 0) throw DomainError("coeff: h and g must be nonnegative");
      require_order(2 * c_g, order, "coeff");
      auto conv = realgw::parse_convention(c_conv);
      auto value = realgw::multicover_coefficient(c_h, c_c1b, c_g, conv);
      emit(json{{"value", value.to_string()}});
      return kExitOk;
    }
    if (dim->parsed()) {
      emit(json{{"dim", realgw::virtual_dimension(m)}});
      return kExitOk;
    }
    if (transform->parsed() || invert->parsed()) {
      const bool forward = transform->parsed();
      json doc = read_document(forward ? t_in : i_in);
      auto req = realgw::io::transform_request_from_json(doc, forward ? "E" : "gw");
      require_order(req.vector.max_genus, series_order(), forward ? "transform" : "invert");
      if (forward) {
        emit(realgw::io::transform_response(realgw::forward_transform(req.vector, req.convention),
                                            req.convention));
      } else {
        emit(realgw::io::invert_response(realgw::invert_transform(req.vector, req.convention),
                                         req.convention));
      }
      return kExitOk;
    }
    if (sign->parsed()) {
      auto result = realgw::evaluate_sign(s_id, realgw::parse_params(s_params));
      emit(json{{"condition", result.condition},
                {"preserves", result.comparison.preserves},
                {"sign", result.comparison.sign()}});
      return kExitOk;
    }
    if (graph->parsed()) {
      if (!gc_in.empty()) {
        auto g = realgw::io::graph_from_json(read_document(gc_in));
        json out = congruence_json(g);
        emit(out);
        return out.at("holds").get<bool>() ? kExitOk : kExitDomain;
      }
      auto [lo, hi] = parse_seed_range(gc_seeds);
      auto bounds = parse_bounds(gc_bounds);
      std::uint64_t passed = 0, failed = 0;
      json first = nullptr;
      for (std::uint64_t seed = lo;; ++seed) {
        auto g = realgw::generate_random_graph(seed, bounds);
        auto report = realgw::congruence_identity_check(g);
        if (report.holds) {
          ++passed;
        } else {
          ++failed;
          if (first.is_null()) first = json{{"graph", realgw::io::to_json(g)}, {"seed", seed}};
        }
        if (seed == hi) break;
      }
      emit(json{{"checked", passed + failed},
                {"failed", failed},
                {"first_counterexample", first},
                {"passed", passed}});
      return failed == 0 ? kExitOk : kExitDomain;
    }
    if (verify->parsed()) {
      if (v_all == !v_id.empty()) {
        std::cerr << "verify: pass either --all or a single identity id\n" << verify->help();
        return kExitUsage;
      }
      int order = series_order();
      json reports = json::array();
      bool ok = true;
      const auto& ids = realgw::identity_ids();
      for (const auto& id : v_all ? ids : std::vector<std::string>{v_id}) {
        auto report = realgw::run_identity(id, order);
        ok = ok && report.holds();
        reports.push_back(realgw::io::to_json(report));
      }
      emit(json{{"all_hold", ok}, {"reports", reports}});
      return ok ? kExitOk : kExitDomain;
    }
    if (schema->parsed()) {
      if (sc_kind == "graph") emit(realgw::io::graph_schema());
      else if (sc_kind == "invariants") emit(realgw::io::invariants_schema());
      else emit(realgw::io::report_schema());
      return kExitOk;
    }
  } catch (const json::parse_error& e) {
    return fail("malformed_json", e.what());
  } catch (const json::exception& e) {
    return fail("invalid_input", e.what());
  } catch (const DomainError& e) {
    return fail("domain_error", e.what());
  }
  return kExitUsage;
}
