// splinereg: command-line front end for the regularity engine.

#include <algorithm>
#include <atomic>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>

#include "splinereg/splinereg.hpp"

namespace sr = splinereg;
using sr::Json;

namespace {

constexpr int kMaxR = 24;
constexpr int kMaxSlopes = 16;
constexpr int kMaxD = 40;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Range {
  int lo = 0;
  int hi = -1;
  bool empty() const { return hi < lo; }
};

Range parse_range(const std::string& text) {
  Range out;
  try {
    auto dots = text.find("..");
    std::size_t used = 0;
    if (dots == std::string::npos) {
      out.lo = out.hi = std::stoi(text, &used);
      if (used != text.size()) throw UsageError("");
    } else {
      const std::string lo = text.substr(0, dots), hi = text.substr(dots + 2);
      out.lo = std::stoi(lo, &used);
      if (used != lo.size()) throw UsageError("");
      out.hi = std::stoi(hi, &used);
      if (used != hi.size()) throw UsageError("");
    }
  } catch (const std::exception&) {
    throw UsageError("bad range '" + text + "', expected N or LO..HI");
  }
  if (out.empty()) throw UsageError("empty range '" + text + "'");
  return out;
}

struct RunConfig {
  std::string command;
  std::optional<int> a, b, r, s, d;
  std::string a_range, b_range, r_range;
  std::string input;
  std::string format = "json";
  bool emit_graph = false;
  bool oracle = false;
  bool unsafe_no_cap = false;
  unsigned threads = 0;
};

void check_caps(const RunConfig& cfg, std::optional<int> a, std::optional<int> b, std::optional<int> r) {
  if (r && *r < 0) throw UsageError("--r must be >= 0");
  if (cfg.d && *cfg.d < 0) throw UsageError("--d must be >= 0");
  if (cfg.unsafe_no_cap) return;
  if (r && *r > kMaxR) throw UsageError("r = " + std::to_string(*r) + " exceeds the cap " + std::to_string(kMaxR));
  for (auto v : {a, b})
    if (v && *v > kMaxSlopes)
      throw UsageError("slope count " + std::to_string(*v) + " exceeds the cap " + std::to_string(kMaxSlopes));
  if (cfg.s && *cfg.s > kMaxSlopes) throw UsageError("--s exceeds the cap " + std::to_string(kMaxSlopes));
  if (cfg.d && *cfg.d > kMaxD) throw UsageError("--d exceeds the cap " + std::to_string(kMaxD));
}

int need(const std::optional<int>& v, const char* flag) {
  if (!v) throw UsageError(std::string("missing ") + flag);
  return *v;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Json header(const std::string& command) {
  Json out;
  out["schema"] = sr::kSchema;
  out["command"] = command;
  return out;
}

// ---------------------------------------------------------------------------
// Table rendering: one "path: value" line per leaf.

void flatten(const Json& j, const std::string& path, std::ostream& os) {
  if (j.is_object()) {
    for (auto it = j.begin(); it != j.end(); ++it) flatten(it.value(), path.empty() ? it.key() : path + "." + it.key(), os);
  } else if (j.is_array() && std::any_of(j.begin(), j.end(), [](const Json& e) { return e.is_structured(); })) {
    for (std::size_t i = 0; i < j.size(); ++i) flatten(j[i], path + "[" + std::to_string(i) + "]", os);
  } else if (j.is_array()) {
    os << path << ":";
    const char* sep = " ";
    for (const auto& e : j) {
      os << sep << (e.is_string() ? e.get<std::string>() : e.dump());
      sep = ", ";
    }
    os << "\n";
  } else {
    os << path << ": " << (j.is_string() ? j.get<std::string>() : j.dump()) << "\n";
  }
}

// ---------------------------------------------------------------------------
// Commands. Each returns the document and whether every check passed.

struct Outcome {
  Json doc;
  bool ok = true;
};

Outcome cmd_regularity(const RunConfig& cfg) {
  const int a = need(cfg.a, "--a"), b = need(cfg.b, "--b"), r = need(cfg.r, "--r");
  check_caps(cfg, a, b, r);
  Outcome out{header("regularity")};
  sr::RegularityReport rep;
  if (!cfg.input.empty()) {
    const auto c = sr::parse_complex(read_file(cfg.input));
    rep = sr::regularity_from_complex(c, r);
    if (rep.a != std::min(a, b) || rep.b != std::max(a, b))
      throw sr::Error(sr::ErrorKind::RouteDisagreement, "complex has (a, b) = (" + std::to_string(rep.a) + ", " +
                                                            std::to_string(rep.b) + "), not the requested pair");
  } else {
    rep = sr::regularity_one_edge(a, b, r);
  }
  out.doc["report"] = sr::to_json(rep);
  if (cfg.oracle && rep.exact) {
    const bool socle_ok = rep.socle_route == rep.exact;
    out.doc["oracle"] = {{"socle_route_agrees", socle_ok}};
    out.ok = socle_ok;
  }
  out.ok = out.ok && rep.routes_agree();
  return out;
}

Outcome cmd_analyze(const RunConfig& cfg) {
  if (cfg.input.empty()) throw UsageError("analyze needs --input");
  const int r = need(cfg.r, "--r");
  check_caps(cfg, std::nullopt, std::nullopt, r);
  const auto c = sr::parse_complex(read_file(cfg.input));
  const auto data = sr::interior_stats(c, r);

  Outcome out{header("analyze")};
  out.doc["complex"] = {{"vertices", c.vertices().size()},
                        {"edges", c.edges().size()},
                        {"triangles", c.triangles().size()},
                        {"euler_characteristic", c.euler_characteristic()}};
  out.doc["interior"] = sr::to_json(data, c);
  if (data.totally_interior_edges.size() == 1) {
    const auto rep = sr::regularity_from_complex(c, r);
    out.doc["regularity"] = sr::to_json(rep);
    out.ok = rep.routes_agree();
  } else {
    const auto pb = sr::path_bounds(c, r, cfg.oracle);
    out.doc["path_bounds"] = sr::to_json(pb);
    out.ok = pb.within.value_or(true);
  }
  if (cfg.d) {
    Json dims = Json::array();
    for (int d = 0; d <= *cfg.d; ++d) {
      Json row{{"d", d}, {"formula", sr::spline_dim_formula(c, r, d)}};
      if (cfg.oracle) {
        const auto o = sr::spline_dim_oracle(c, r, d);
        row["oracle"] = o;
        out.ok = out.ok && o == row["formula"].get<long long>();
      }
      dims.push_back(row);
    }
    out.doc["dimensions"] = dims;
  }
  return out;
}

struct Cell {
  int a, b, r;
  std::optional<sr::RegularityReport> rep;
  std::string error;
  bool syzygy_ok = true;
};

void run_cell(Cell& cell, bool oracle) {
  try {
    cell.rep = sr::regularity_one_edge(cell.a, cell.b, cell.r);
    if (oracle && cell.rep->exact) {
      const auto q = sr::build_q(cell.a, cell.b, cell.r);
      const auto g = sr::buchberger_graph(q.in_q);
      const auto betti = sr::betti_oracle(q.in_q);
      cell.syzygy_ok = betti.multidegrees(1) == sr::syz2_closed_form(q) && g.euler_characteristic() == 1;
      auto faces = sr::syz3_closed_form(g);
      std::sort(faces.begin(), faces.end(), std::greater<>());
      cell.syzygy_ok = cell.syzygy_ok && betti.multidegrees(2) == faces;
    }
  } catch (const sr::Error& e) {
    cell.error = e.what();
  }
}

Outcome cmd_sweep(const RunConfig& cfg) {
  if (cfg.a_range.empty() || cfg.b_range.empty() || cfg.r_range.empty())
    throw UsageError("sweep needs --a, --b and --r ranges");
  const Range ra = parse_range(cfg.a_range), rb = parse_range(cfg.b_range), rr = parse_range(cfg.r_range);
  check_caps(cfg, ra.hi, rb.hi, rr.hi);
  if (rr.lo < 0) throw UsageError("r range must be nonnegative");

  std::vector<Cell> cells;
  for (int a = ra.lo; a <= ra.hi; ++a)
    for (int b = std::max(a, rb.lo); b <= rb.hi; ++b)
      for (int r = rr.lo; r <= rr.hi; ++r) cells.push_back({a, b, r, std::nullopt, {}, true});
  if (cells.empty()) throw UsageError("no cells with a <= b in the given ranges");

  std::atomic<std::size_t> next{0};
  unsigned n = cfg.threads ? cfg.threads : std::max(1u, std::thread::hardware_concurrency());
  n = std::min<unsigned>(n, static_cast<unsigned>(cells.size()));
  std::vector<std::thread> pool;
  for (unsigned t = 0; t < n; ++t)
    pool.emplace_back([&] {
      for (std::size_t i; (i = next.fetch_add(1)) < cells.size();) run_cell(cells[i], cfg.oracle);
    });
  for (auto& t : pool) t.join();

  Outcome out{header("sweep")};
  Json rows = Json::array();
  long long violations = 0;
  for (const auto& c : cells) {
    Json row{{"a", c.a}, {"b", c.b}, {"r", c.r}};
    bool bad = !c.error.empty() || !c.syzygy_ok;
    if (c.rep) {
      row["exact"] = sr::optional_json(c.rep->exact);
      row["lower"] = c.rep->lower;
      row["upper"] = c.rep->upper;
      row["zeta0"] = sr::optional_json(c.rep->zeta0);
      row["conjecture_holds"] = c.rep->conjecture_holds;
      row["routes_agree"] = c.rep->routes_agree();
      bad = bad || !c.rep->conjecture_holds || !c.rep->routes_agree();
    }
    if (cfg.oracle) row["syzygy_oracle_agrees"] = c.syzygy_ok;
    if (!c.error.empty()) row["error"] = c.error;
    violations += bad;
    rows.push_back(row);
  }
  out.doc["cells"] = rows;
  out.doc["violations"] = violations;
  out.ok = violations == 0;
  return out;
}

void print_sweep_table(const Json& doc, std::ostream& os) {
  os << std::setw(3) << "a" << std::setw(4) << "b" << std::setw(4) << "r" << std::setw(7) << "exact" << std::setw(7)
     << "lower" << std::setw(7) << "upper" << std::setw(7) << "zeta0" << std::setw(6) << "2r" << std::setw(8) << "agree"
     << "\n";
  auto cell = [](const Json& row, const char* key) {
    if (!row.contains(key) || row[key].is_null()) return std::string("-");
    if (row[key].is_boolean()) return std::string(row[key].get<bool>() ? "yes" : "NO");
    return row[key].dump();
  };
  for (const auto& row : doc["cells"]) {
    os << std::setw(3) << row["a"].dump() << std::setw(4) << row["b"].dump() << std::setw(4) << row["r"].dump()
       << std::setw(7) << cell(row, "exact") << std::setw(7) << cell(row, "lower") << std::setw(7)
       << cell(row, "upper") << std::setw(7) << cell(row, "zeta0") << std::setw(6) << cell(row, "conjecture_holds")
       << std::setw(8) << cell(row, "routes_agree");
    if (row.contains("error")) os << "  " << row["error"].get<std::string>();
    os << "\n";
  }
  os << "cells: " << doc["cells"].size() << ", violations: " << doc["violations"].dump() << "\n";
}

Outcome cmd_staircase(const RunConfig& cfg) {
  const int r = need(cfg.r, "--r");
  Outcome out{header("staircase")};
  if (cfg.s) {
    if (cfg.a || cfg.b) throw UsageError("give either --s or --a/--b, not both");
    check_caps(cfg, std::nullopt, std::nullopt, r);
    const auto st = sr::staircase_closed_form(r, *cfg.s);
    const auto cs = sr::colon_staircase(st);
    out.doc["staircase"] = sr::to_json(st);
    out.doc["ideal"] = sr::to_json(sr::staircase_ideal(st));
    out.doc["colon"] = sr::to_json(cs);
    out.doc["colon_ideal"] = sr::to_json(sr::colon_ideal(cs));
    return out;
  }
  int a = need(cfg.a, "--a or --s"), b = need(cfg.b, "--b");
  check_caps(cfg, a, b, r);
  if (a < 3 || b < 3) throw sr::Error(sr::ErrorKind::InvalidSlopeCount, "a and b must be >= 3");
  if (a > b) std::swap(a, b);
  const auto q = sr::build_q(a, b, r);
  out.doc["in_j_v1"] = sr::to_json(sr::staircase_ideal(q.stair1, sr::Var::X));
  out.doc["in_j_v2"] = sr::to_json(sr::staircase_ideal(q.stair2, sr::Var::Y));
  out.doc["q"] = sr::to_json(q);
  if (!q.trivial()) out.doc["reg_in_q"] = sr::max_socle_degree(q.in_q);
  if (cfg.emit_graph && !q.trivial()) {
    const auto g = sr::buchberger_graph(q.in_q);
    out.doc["graph"] = sr::to_json(g);
    out.doc["syz2"] = sr::monomials_json(sr::syz2_closed_form(q));
    out.doc["syz3"] = sr::monomials_json(sr::syz3_closed_form(g));
  }
  return out;
}

Outcome cmd_betti(const RunConfig& cfg) {
  int a = need(cfg.a, "--a"), b = need(cfg.b, "--b");
  const int r = need(cfg.r, "--r");
  check_caps(cfg, a, b, r);
  if (a < 3 || b < 3) throw sr::Error(sr::ErrorKind::InvalidSlopeCount, "a and b must be >= 3");
  if (a > b) std::swap(a, b);
  const auto q = sr::build_q(a, b, r);
  if (q.trivial()) throw sr::Error(sr::ErrorKind::TrivialIdeal, "In Q is the unit ideal");
  const auto betti = sr::betti_oracle(q.in_q);
  const auto g = sr::buchberger_graph(q.in_q);
  auto syz3 = sr::syz3_closed_form(g);
  std::sort(syz3.begin(), syz3.end(), std::greater<>());
  Outcome out{header("betti")};
  out.doc["ideal"] = sr::to_json(q.in_q);
  out.doc["betti"] = sr::to_json(betti);
  const bool syz2_ok = betti.multidegrees(1) == sr::syz2_closed_form(q);
  const bool syz3_ok = betti.multidegrees(2) == syz3;
  out.doc["closed_form_agrees"] = {{"syz2", syz2_ok}, {"syz3", syz3_ok}};
  out.ok = syz2_ok && syz3_ok;
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Regularity of spline homology modules, exact arithmetic"};
  app.require_subcommand(1);
  RunConfig cfg;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--format", cfg.format, "Output format")->check(CLI::IsMember({"json", "table"}));
    sub->add_flag("--unsafe-no-cap", cfg.unsafe_no_cap, "Lift the caps r <= 24, a, b <= 16, d <= 40");
  };

  auto* reg = app.add_subcommand("regularity", "Exact regularity for a one-edge configuration (a, b, r)");
  reg->add_option("--a", cfg.a, "Slopes at v1 (k(v1))")->required();
  reg->add_option("--b", cfg.b, "Slopes at v2 (k(v2))")->required();
  reg->add_option("--r", cfg.r, "Smoothness order")->required();
  reg->add_option("--input", cfg.input, "Complex file; adds the chain-complex route");
  reg->add_flag("--oracle", cfg.oracle, "Report the socle route check");
  add_common(reg);

  auto* ana = app.add_subcommand("analyze", "Interior data, regularity or bounds, and dimensions for a complex file");
  ana->add_option("--input", cfg.input, "Complex file")->required();
  ana->add_option("--r", cfg.r, "Smoothness order")->required();
  ana->add_option("--d", cfg.d, "Also report dim C^r_d for d = 0..N");
  ana->add_flag("--oracle", cfg.oracle, "Run brute-force oracles as well");
  add_common(ana);

  auto* sw = app.add_subcommand("sweep", "Regularity over a grid of (a, b, r)");
  sw->add_option("--a", cfg.a_range, "Range LO..HI")->required();
  sw->add_option("--b", cfg.b_range, "Range LO..HI")->required();
  sw->add_option("--r", cfg.r_range, "Range LO..HI")->required();
  sw->add_flag("--oracle", cfg.oracle, "Check syzygy closed forms against the Betti oracle");
  sw->add_option("--threads", cfg.threads, "Worker threads (0: hardware)");
  add_common(sw);

  auto* st = app.add_subcommand("staircase", "Staircase exponents, In Q and optionally its Buchberger graph");
  st->add_option("--r", cfg.r, "Smoothness order")->required();
  st->add_option("--s", cfg.s, "Number of forms for a single staircase");
  st->add_option("--a", cfg.a, "Slopes at v1");
  st->add_option("--b", cfg.b, "Slopes at v2");
  st->add_flag("--emit-graph", cfg.emit_graph, "Include Buchberger graph and syzygy lists");
  add_common(st);

  auto* be = app.add_subcommand("betti", "Multigraded Betti numbers of In Q via upper Koszul complexes");
  be->add_option("--a", cfg.a, "Slopes at v1")->required();
  be->add_option("--b", cfg.b, "Slopes at v2")->required();
  be->add_option("--r", cfg.r, "Smoothness order")->required();
  add_common(be);

  CLI11_PARSE(app, argc, argv);
  cfg.command = app.get_subcommands().front()->get_name();

  try {
    Outcome out;
    if (cfg.command == "regularity") out = cmd_regularity(cfg);
    else if (cfg.command == "analyze") out = cmd_analyze(cfg);
    else if (cfg.command == "sweep") out = cmd_sweep(cfg);
    else if (cfg.command == "staircase") out = cmd_staircase(cfg);
    else out = cmd_betti(cfg);
    out.doc["ok"] = out.ok;

    if (cfg.format == "json")
      std::cout << out.doc.dump(2) << "\n";
    else if (cfg.command == "sweep")
      print_sweep_table(out.doc, std::cout);
    else
      flatten(out.doc, "", std::cout);
    return out.ok ? 0 : 3;
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const sr::Error& e) {
    std::cout << sr::error_json(e).dump(2) << "\n";
    std::cerr << e.what() << "\n";
    return 1;
  }
}
