#pragma once

#include <algorithm>
#include <fstream>
#include <iostream>
#include <limits>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "scrollink/base.hpp"
#include "scrollink/chow.hpp"
#include "scrollink/classification.hpp"
#include "scrollink/expr.hpp"
#include "scrollink/hilbert.hpp"
#include "scrollink/linkage.hpp"
#include "scrollink/rational.hpp"
#include "scrollink/scroll.hpp"
#include "scrollink/transforms.hpp"

namespace scrollink::cli {

using json = nlohmann::ordered_json;

/// Bad command line or config file contents: exit code 1.
class usage_error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

// ---------------------------------------------------------------------------
// Value rendering
// ---------------------------------------------------------------------------

namespace detail {

/// Rationals enter JSON as plain integers when integral (and in 64-bit
/// range), as exact "p/q" strings otherwise.  No value is ever a float.
inline json rational_json(const Rational& q) {
  if (is_integer(q)) {
    const BigInt& num = boost::multiprecision::numerator(q);
    if (num >= std::numeric_limits<Int>::min() && num <= std::numeric_limits<Int>::max()) {
      return num.convert_to<Int>();
    }
  }
  return fraction_string(q);
}

inline json class_json(AmbientClass c) { return json{{"h", c.h}, {"r", c.r}}; }
inline json class_json(ResolvedClass c) { return json{{"h", c.h}, {"r", c.r}}; }

inline std::string scalar_string(const json& j) {
  if (j.is_string()) return j.get<std::string>();
  return j.dump();
}

inline void flatten_json(const json& j, const std::string& prefix,
                         std::vector<std::pair<std::string, std::string>>& out) {
  if (j.is_object()) {
    for (auto it = j.begin(); it != j.end(); ++it) {
      std::string key = prefix.empty() ? it.key() : prefix + "." + it.key();
      flatten_json(it.value(), key, out);
    }
    return;
  }
  if (j.is_array()) {
    std::string joined;
    for (const auto& element : j) {
      if (!joined.empty()) joined += " ";
      joined += element.is_structured() ? element.dump() : scalar_string(element);
    }
    out.emplace_back(prefix, joined);
    return;
  }
  out.emplace_back(prefix, scalar_string(j));
}

/// Values carrying only a one-sided guarantee are displayed as such.
inline std::string display_value(const std::string& key, const std::string& value) {
  if (key.size() >= 23 && key.ends_with("line_vertex_lower_bound")) return ">= " + value;
  return value;
}

inline std::string csv_escape(const std::string& field) {
  if (field.find_first_of(",\"\n") == std::string::npos) return field;
  std::string quoted = "\"";
  for (char c : field) {
    if (c == '"') quoted += '"';
    quoted += c;
  }
  quoted += '"';
  return quoted;
}

}  // namespace detail

/// Canonical output of one command.  `data` is the JSON form; when `columns`
/// is nonempty the table and CSV formats render those rows instead of a
/// flattened view of `data`.
struct Document {
  json data;
  std::vector<std::string> columns;
  std::vector<std::vector<std::string>> rows;
  std::vector<std::string> footers;  // table format only
};

inline void emit(const Document& doc, const std::string& format, std::ostream& out) {
  if (format == "json") {
    out << doc.data.dump(2) << "\n";
    return;
  }
  if (!doc.columns.empty()) {
    if (format == "csv") {
      for (std::size_t i = 0; i < doc.columns.size(); ++i) {
        if (i) out << ",";
        out << detail::csv_escape(doc.columns[i]);
      }
      out << "\n";
      for (const auto& row : doc.rows) {
        for (std::size_t i = 0; i < row.size(); ++i) {
          if (i) out << ",";
          out << detail::csv_escape(row[i]);
        }
        out << "\n";
      }
      return;
    }
    std::vector<std::size_t> width(doc.columns.size());
    for (std::size_t i = 0; i < doc.columns.size(); ++i) width[i] = doc.columns[i].size();
    for (const auto& row : doc.rows) {
      for (std::size_t i = 0; i < row.size(); ++i) width[i] = std::max(width[i], row[i].size());
    }
    auto print_row = [&](const std::vector<std::string>& row) {
      for (std::size_t i = 0; i < row.size(); ++i) {
        out << row[i];
        if (i + 1 < row.size()) out << std::string(width[i] - row[i].size() + 2, ' ');
      }
      out << "\n";
    };
    print_row(doc.columns);
    for (const auto& row : doc.rows) print_row(row);
    for (const auto& footer : doc.footers) out << footer << "\n";
    return;
  }
  std::vector<std::pair<std::string, std::string>> fields;
  detail::flatten_json(doc.data, "", fields);
  if (format == "csv") {
    for (std::size_t i = 0; i < fields.size(); ++i) {
      if (i) out << ",";
      out << detail::csv_escape(fields[i].first);
    }
    out << "\n";
    for (std::size_t i = 0; i < fields.size(); ++i) {
      if (i) out << ",";
      out << detail::csv_escape(detail::display_value(fields[i].first, fields[i].second));
    }
    out << "\n";
    return;
  }
  std::size_t width = 0;
  for (const auto& [key, value] : fields) width = std::max(width, key.size());
  for (const auto& [key, value] : fields) {
    out << key << std::string(width - key.size(), ' ') << "  "
        << detail::display_value(key, value) << "\n";
  }
  for (const auto& footer : doc.footers) out << footer << "\n";
}

// ---------------------------------------------------------------------------
// Input parsing helpers
// ---------------------------------------------------------------------------

namespace detail {

inline Int parse_int(std::string_view text, const std::string& what) {
  std::string trimmed(text);
  trimmed.erase(0, trimmed.find_first_not_of(" \t"));
  trimmed.erase(trimmed.find_last_not_of(" \t") + 1);
  if (trimmed.empty()) throw usage_error("empty integer in " + what);
  std::size_t used = 0;
  Int value = 0;
  try {
    value = std::stoll(trimmed, &used);
  } catch (const std::exception&) {
    throw usage_error("bad integer '" + trimmed + "' in " + what);
  }
  if (used != trimmed.size()) throw usage_error("bad integer '" + trimmed + "' in " + what);
  return value;
}

inline std::vector<Int> parse_degree_list(const std::string& text) {
  std::vector<Int> degrees;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t comma = text.find(',', start);
    std::string_view piece(text.data() + start,
                           (comma == std::string::npos ? text.size() : comma) - start);
    degrees.push_back(parse_int(piece, "scroll degree list"));
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  return degrees;
}

inline IntRange parse_range(const std::string& text, const std::string& key) {
  std::size_t dots = text.find("..");
  IntRange range;
  if (dots == std::string::npos) {
    range.lo = range.hi = parse_int(text, "sweep config key '" + key + "'");
  } else {
    range.lo = parse_int(text.substr(0, dots), "sweep config key '" + key + "'");
    range.hi = parse_int(text.substr(dots + 2), "sweep config key '" + key + "'");
  }
  if (range.lo > range.hi) {
    throw usage_error("empty range '" + text + "' for sweep config key '" + key + "'");
  }
  return range;
}

inline std::string range_string(IntRange r) {
  return std::to_string(r.lo) + ".." + std::to_string(r.hi);
}

}  // namespace detail

/// Flat key = value file with '#' comments.  Keys n, s, m take "lo..hi"
/// ranges (or a single integer); eps additionally accepts "planar" or "all"
/// and defaults to "all".
inline SweepOptions parse_sweep_config(std::istream& in) {
  SweepOptions opt;
  bool have_n = false, have_s = false, have_m = false;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::size_t hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::size_t begin = line.find_first_not_of(" \t\r");
    if (begin == std::string::npos) continue;
    std::size_t end = line.find_last_not_of(" \t\r");
    std::string body = line.substr(begin, end - begin + 1);
    std::size_t equals = body.find('=');
    if (equals == std::string::npos) {
      throw usage_error("sweep config line " + std::to_string(line_no) + ": expected key = value");
    }
    std::string key = body.substr(0, equals);
    std::string value = body.substr(equals + 1);
    key.erase(key.find_last_not_of(" \t") + 1);
    value.erase(0, value.find_first_not_of(" \t"));
    if (key == "n") {
      opt.n = detail::parse_range(value, key);
      have_n = true;
    } else if (key == "s") {
      opt.s = detail::parse_range(value, key);
      have_s = true;
    } else if (key == "m") {
      opt.m = detail::parse_range(value, key);
      have_m = true;
    } else if (key == "eps") {
      if (value == "planar") {
        opt.eps_filter = EpsFilter::Planar;
      } else if (value == "all") {
        opt.eps_filter = EpsFilter::All;
      } else {
        opt.eps_filter = EpsFilter::Range;
        opt.eps_range = detail::parse_range(value, key);
      }
    } else {
      throw usage_error("sweep config line " + std::to_string(line_no) + ": unknown key '" +
                        key + "'");
    }
  }
  if (!have_n || !have_s || !have_m) {
    throw usage_error("sweep config must set all of n, s, m");
  }
  return opt;
}

// ---------------------------------------------------------------------------
// Command documents
// ---------------------------------------------------------------------------

namespace detail {

inline json params_json(const MaxGenusParams& p) {
  json j;
  j["d"] = p.d;
  j["n"] = p.n;
  j["s"] = p.s;
  j["m"] = p.m;
  j["eps"] = p.eps;
  j["w"] = p.w;
  j["v"] = p.v;
  j["k"] = p.k;
  j["delta"] = p.delta;
  j["e"] = p.e;
  j["in_asymptotic_range"] = p.in_asymptotic_range;
  j["planar_residual_range"] = p.planar_residual_range;
  return j;
}

inline Document params_doc(Int d, Int n, Int s) {
  Document doc;
  doc.data = params_json(decompose(d, n, s));
  return doc;
}

inline Document bound_doc(Int d, Int n, Int s) {
  MaxGenusParams p = decompose(d, n, s);
  ClosedFormReport report = genus_closed_form(p);
  CastelnuovoBound castelnuovo = castelnuovo_genus(s, n - 1);
  Document doc;
  doc.data["d"] = d;
  doc.data["n"] = n;
  doc.data["s"] = s;
  doc.data["G_profile"] = report.profile_sum;
  doc.data["G_closed_form"] = rational_json(report.closed_form);
  doc.data["discrepancy"] = rational_json(report.difference);
  doc.data["castelnuovo_classical"] = castelnuovo.classical;
  doc.data["castelnuovo_printed"] = castelnuovo.printed_variant;
  return doc;
}

inline Document deltah_doc(Int d, Int n, Int s) {
  MaxGenusParams p = decompose(d, n, s);
  HilbertProfile hp = profile(p);
  Document doc;
  doc.data["d"] = d;
  doc.data["n"] = n;
  doc.data["s"] = s;
  doc.data["max_r"] = hp.max_index();
  doc.data["mass"] = hp.mass();
  doc.data["deltas"] = hp.deltas();
  json cumulative = json::array();
  for (Int r = 0; r <= hp.max_index(); ++r) cumulative.push_back(hp.cumulative(r));
  doc.data["cumulative"] = cumulative;
  doc.columns = {"r", "delta_h", "h"};
  for (Int r = 0; r <= hp.max_index(); ++r) {
    doc.rows.push_back({std::to_string(r), std::to_string(hp.delta(r)),
                        std::to_string(hp.cumulative(r))});
  }
  return doc;
}

inline Document scroll_doc(const Scroll& x) {
  Document doc;
  doc.data["degrees"] = x.degrees();
  doc.data["dimension"] = x.dimension();
  doc.data["degree"] = x.degree();
  doc.data["embedding_dimension"] = x.embedding_dimension();
  doc.data["zero_count"] = x.zero_count();
  doc.data["vertex_dimension"] = x.vertex_dimension();
  doc.data["smooth"] = x.smooth();
  doc.data["class_group"] = to_string(class_group(x));
  doc.data["canonical_class"] = class_json(canonical_class(x));
  doc.data["canonical_class_normalized"] = class_json(normalize_class(x, canonical_class(x)));
  if (x.dimension() >= 3) {
    HyperplaneSectionInfo section = hyperplane_section(x);
    doc.data["hyperplane_section"] = json{{"dimension", section.dimension},
                                          {"degree", section.degree},
                                          {"smooth", section.smooth}};
  }
  return doc;
}

inline Document intersect_doc(const Scroll& x, const std::string& expression) {
  std::vector<ResolvedClass> factors = expr::parse_divisor_product(expression);
  Int value = intersect(x, std::span<const ResolvedClass>(factors.data(), factors.size()));
  Document doc;
  doc.data["degrees"] = x.degrees();
  doc.data["expression"] = expression;
  json factor_array = json::array();
  for (ResolvedClass c : factors) factor_array.push_back(class_json(c));
  doc.data["factors"] = factor_array;
  doc.data["value"] = value;
  return doc;
}

inline Document total_transform_doc(const Scroll& x, Int d) {
  ResolvedClass t = total_transform(x, d);
  Document doc;
  doc.data["degrees"] = x.degrees();
  doc.data["kind"] = "total";
  doc.data["d"] = d;
  doc.data["transform"] = class_json(t);
  return doc;
}

inline Document proper_transform_doc(const Scroll& x, Int cut, Int mult) {
  ResolvedClass t = proper_transform_through_vertex(x, cut, mult);
  Document doc;
  doc.data["degrees"] = x.degrees();
  doc.data["kind"] = "proper";
  doc.data["cut"] = cut;
  doc.data["mult"] = mult;
  doc.data["transform"] = class_json(t);
  return doc;
}

inline Document cigenus_doc(const Scroll& x, Int a, Int b) {
  CiCurveData ci = ci_invariants(x, a, b);
  Document doc;
  doc.data["degrees"] = x.degrees();
  doc.data["a"] = ci.a;
  doc.data["b"] = ci.b;
  doc.data["degree"] = ci.degree;
  doc.data["ruling_degree"] = ci.ruling_degree;
  doc.data["genus"] = ci.genus;
  return doc;
}

inline Document link_doc(const Scroll& x, Int a, Int b, const CurveInvariants& known,
                         Int unknown_degree, Int unknown_ruling) {
  LinkResult result = link_genus(x, a, b, known, unknown_degree, unknown_ruling);
  Document doc;
  doc.data["degrees"] = x.degrees();
  doc.data["a"] = a;
  doc.data["b"] = b;
  doc.data["known"] = json{{"degree", known.degree},
                           {"genus", known.genus},
                           {"ruling_degree", known.ruling_degree}};
  doc.data["variant"] = to_string(result.variant);
  doc.data["empty_curve"] = result.empty_curve;
  doc.data["curve"] = json{{"degree", result.curve.degree},
                           {"genus", result.curve.genus},
                           {"ruling_degree", result.curve.ruling_degree}};
  return doc;
}

inline Document quadric_residual_doc(Int n) {
  ResidualQuadricData q = residual_quadric_invariants(n);
  Document doc;
  doc.data["n"] = q.n;
  doc.data["yb_class"] = class_json(q.yb_class);
  doc.data["yb_degree"] = q.yb_degree;
  doc.data["pa_AH"] = q.pa_AH;
  doc.data["pa_BH"] = q.pa_BH;
  doc.data["noether_closure_ok"] = (q.pa_AH == noether_union(q.pa_BH, 0, q.yb_degree));
  return doc;
}

inline Document classify_doc(Int d, Int n, Int s) {
  ClassificationReport rep = classify(d, n, s);
  Document doc;
  doc.data["params"] = params_json(rep.params);
  doc.data["in_planar_range"] = rep.in_planar_range;
  doc.data["residual"] = to_string(rep.residual);
  doc.data["residual_degree"] = rep.residual_degree;
  doc.data["residual_genus"] = rep.residual_genus;
  doc.data["surface_class"] = class_json(rep.surface_class);
  if (rep.construction_D_degree) {
    doc.data["construction_D_degree"] = *rep.construction_D_degree;
    doc.data["d_degree_in_window"] = rep.d_degree_in_window;
  }
  doc.data["bound_G"] = rep.bound_G;
  doc.data["G_closed_form"] = rational_json(rep.closed_form);
  doc.data["closure_attempted"] = rep.closure_attempted;
  doc.data["closure_ok"] = rep.closure_ok;
  if (rep.noether_t) doc.data["noether_t"] = *rep.noether_t;
  if (rep.line_vertex_lower_bound) {
    doc.data["line_vertex_lower_bound"] = *rep.line_vertex_lower_bound;
  }
  return doc;
}

inline Document verify_doc(Int d, Int n, Int s) {
  ClosureReport rep = verify_closure(d, n, s);
  Document doc;
  doc.data["d"] = rep.d;
  doc.data["n"] = rep.n;
  doc.data["s"] = rep.s;
  doc.data["a"] = rep.a;
  doc.data["b"] = rep.b;
  doc.data["bound_G"] = rep.bound_G;
  doc.data["ci_genus"] = rep.ci_genus;
  doc.data["residual_degree"] = rep.residual_degree;
  doc.data["linked_genus"] = rep.linked_genus;
  doc.data["expected_genus"] = rep.expected_genus;
  doc.data["ok"] = rep.ok;
  return doc;
}

inline Document sweep_doc(const SweepOptions& opt) {
  SweepResult result = sweep(opt);
  Document doc;
  json config;
  config["n"] = range_string(opt.n);
  config["s"] = range_string(opt.s);
  config["m"] = range_string(opt.m);
  config["eps"] = opt.eps_filter == EpsFilter::Planar
                      ? "planar"
                      : (opt.eps_filter == EpsFilter::All ? "all" : range_string(opt.eps_range));
  doc.data["config"] = config;
  doc.columns = {"n", "s", "d", "m", "eps", "w", "v", "k", "delta", "e",
                 "planar", "residual_deg", "residual_genus", "G_profile", "G_closed",
                 "closure_ok"};
  json rows = json::array();
  for (const ClassificationReport& row : result.rows) {
    const MaxGenusParams& p = row.params;
    json r;
    r["n"] = p.n;
    r["s"] = p.s;
    r["d"] = p.d;
    r["m"] = p.m;
    r["eps"] = p.eps;
    r["w"] = p.w;
    r["v"] = p.v;
    r["k"] = p.k;
    r["delta"] = p.delta;
    r["e"] = p.e;
    r["planar"] = row.in_planar_range;
    r["residual_deg"] = row.residual_degree;
    r["residual_genus"] = row.residual_genus;
    r["G_profile"] = row.bound_G;
    r["G_closed"] = rational_json(row.closed_form);
    r["closure_ok"] = row.closure_ok;
    rows.push_back(r);
    std::vector<std::string> cells;
    cells.reserve(doc.columns.size());
    for (const auto& column : doc.columns) cells.push_back(scalar_string(r[column]));
    doc.rows.push_back(std::move(cells));
  }
  doc.data["rows"] = rows;
  doc.data["aggregate"] = json{{"rows", static_cast<Int>(result.rows.size())},
                               {"planar", result.planar_rows},
                               {"closure_attempted", result.closure_attempted},
                               {"closure_ok", result.closure_ok}};
  doc.footers.push_back("rows " + std::to_string(result.rows.size()) + "  planar " +
                        std::to_string(result.planar_rows) + "  closure_attempted " +
                        std::to_string(result.closure_attempted) + "  closure_ok " +
                        std::to_string(result.closure_ok));
  return doc;
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Entry point
// ---------------------------------------------------------------------------

/// Runs one command.  `args` excludes the program name.  Exit codes:
///   0 success, 1 usage (bad flags, bad expressions, bad config),
///   2 domain error (violated precondition, named on stderr),
///   3 internal consistency failure.
inline int run(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
  try {
    CLI::App app{"exact divisor, genus-bound and liaison calculator for rational normal scrolls"};
    app.name("scrollink");
    app.require_subcommand(1);

    std::string format = "table";
    app.add_option("--format", format, "output format")
        ->check(CLI::IsMember({"table", "json", "csv"}))
        ->capture_default_str();

    Int d = 0, n = 0, s = 0, a = 0, b = 0;
    std::string degrees_text, expression, config_path;

    CLI::App* params_cmd = app.add_subcommand("params", "parameter decomposition of (d, n, s)");
    params_cmd->add_option("d", d, "curve degree")->required();
    params_cmd->add_option("n", n, "ambient projective dimension")->required();
    params_cmd->add_option("s", s, "surface degree")->required();

    CLI::App* bound_cmd =
        app.add_subcommand("bound", "genus bound G(d,n,s): table route vs closed form");
    bound_cmd->add_option("d", d, "curve degree")->required();
    bound_cmd->add_option("n", n, "ambient projective dimension")->required();
    bound_cmd->add_option("s", s, "surface degree")->required();

    CLI::App* deltah_cmd = app.add_subcommand("deltah", "growth table for (d, n, s)");
    deltah_cmd->add_option("d", d, "curve degree")->required();
    deltah_cmd->add_option("n", n, "ambient projective dimension")->required();
    deltah_cmd->add_option("s", s, "surface degree")->required();

    CLI::App* scroll_cmd = app.add_subcommand("scroll", "scroll and divisor-class data");
    scroll_cmd->add_option("degrees", degrees_text, "splitting degrees, e.g. 0,0,3")->required();

    CLI::App* intersect_cmd =
        app.add_subcommand("intersect", "intersection number of a divisor product");
    intersect_cmd->add_option("--scroll", degrees_text, "splitting degrees")->required();
    intersect_cmd->add_option("expression", expression, "product of dim(X) linear factors")
        ->required();

    CLI::App* transform_cmd =
        app.add_subcommand("transform", "total or proper transform across the vertex");
    transform_cmd->add_option("--scroll", degrees_text, "splitting degrees")->required();
    Int transform_d = 0, transform_cut = 0, transform_mult = 0;
    CLI::Option* opt_d = transform_cmd->add_option("--d", transform_d, "total transform of d*R");
    CLI::Option* opt_cut =
        transform_cmd->add_option("--cut", transform_cut, "proper transform: cutting degree");
    CLI::Option* opt_mult =
        transform_cmd->add_option("--mult", transform_mult, "proper transform: vertex multiplicity");

    CLI::App* cigenus_cmd =
        app.add_subcommand("cigenus", "complete intersection curve invariants");
    cigenus_cmd->add_option("--scroll", degrees_text, "splitting degrees")->required();
    cigenus_cmd->add_option("a", a, "first hypersurface degree")->required();
    cigenus_cmd->add_option("b", b, "second hypersurface degree")->required();

    CLI::App* link_cmd = app.add_subcommand("link", "genus of the linked curve");
    link_cmd->add_option("--scroll", degrees_text, "splitting degrees")->required();
    link_cmd->add_option("-a,--ci-a", a, "first hypersurface degree")->required();
    link_cmd->add_option("-b,--ci-b", b, "second hypersurface degree")->required();
    CurveInvariants known;
    Int unknown_degree = 0, unknown_ruling = 0;
    link_cmd->add_option("--known-degree", known.degree, "degree of the known curve")->required();
    link_cmd->add_option("--known-genus", known.genus, "genus of the known curve")->required();
    link_cmd->add_option("--known-ruling", known.ruling_degree, "ruling degree of the known curve")
        ->required();
    link_cmd->add_option("--unknown-degree", unknown_degree, "degree of the linked curve")
        ->required();
    link_cmd->add_option("--unknown-ruling", unknown_ruling, "ruling degree of the linked curve")
        ->required();

    CLI::App* quadric_cmd =
        app.add_subcommand("quadric-residual", "residual of a scroll in a quadric complete intersection");
    quadric_cmd->add_option("n", n, "ambient projective dimension")->required();

    CLI::App* classify_cmd = app.add_subcommand("classify", "full classification report");
    classify_cmd->add_option("d", d, "curve degree")->required();
    classify_cmd->add_option("n", n, "ambient projective dimension")->required();
    classify_cmd->add_option("s", s, "surface degree")->required();

    CLI::App* verify_cmd = app.add_subcommand("verify", "full-circle closure check");
    verify_cmd->add_option("d", d, "curve degree")->required();
    verify_cmd->add_option("n", n, "ambient projective dimension")->required();
    verify_cmd->add_option("s", s, "surface degree")->required();

    CLI::App* sweep_cmd = app.add_subcommand("sweep", "classification sweep over a box");
    sweep_cmd->add_option("--config", config_path, "flat key = value config file")->required();
    int sweep_threads = 0;
    sweep_cmd->add_option("--threads", sweep_threads, "worker thread cap")
        ->check(CLI::Range(1, 1024));

    for (CLI::App* sub :
         {params_cmd, bound_cmd, deltah_cmd, scroll_cmd, intersect_cmd, transform_cmd,
          cigenus_cmd, link_cmd, quadric_cmd, classify_cmd, verify_cmd, sweep_cmd}) {
      sub->fallthrough();
    }

    std::reverse(args.begin(), args.end());
    try {
      app.parse(args);
    } catch (const CLI::ParseError& e) {
      int code = app.exit(e, out, err);
      return code == 0 ? 0 : 1;
    }

    Document doc;
    if (params_cmd->parsed()) {
      doc = detail::params_doc(d, n, s);
    } else if (bound_cmd->parsed()) {
      doc = detail::bound_doc(d, n, s);
    } else if (deltah_cmd->parsed()) {
      doc = detail::deltah_doc(d, n, s);
    } else if (scroll_cmd->parsed()) {
      doc = detail::scroll_doc(Scroll(detail::parse_degree_list(degrees_text)));
    } else if (intersect_cmd->parsed()) {
      doc = detail::intersect_doc(Scroll(detail::parse_degree_list(degrees_text)), expression);
    } else if (transform_cmd->parsed()) {
      Scroll x(detail::parse_degree_list(degrees_text));
      bool want_total = opt_d->count() > 0;
      bool want_proper = opt_cut->count() > 0 || opt_mult->count() > 0;
      if (want_total == want_proper) {
        throw usage_error("transform needs either --d or both --cut and --mult");
      }
      if (want_proper && (opt_cut->count() == 0 || opt_mult->count() == 0)) {
        throw usage_error("proper transform needs both --cut and --mult");
      }
      doc = want_total ? detail::total_transform_doc(x, transform_d)
                       : detail::proper_transform_doc(x, transform_cut, transform_mult);
    } else if (cigenus_cmd->parsed()) {
      doc = detail::cigenus_doc(Scroll(detail::parse_degree_list(degrees_text)), a, b);
    } else if (link_cmd->parsed()) {
      doc = detail::link_doc(Scroll(detail::parse_degree_list(degrees_text)), a, b, known,
                             unknown_degree, unknown_ruling);
    } else if (quadric_cmd->parsed()) {
      doc = detail::quadric_residual_doc(n);
    } else if (classify_cmd->parsed()) {
      doc = detail::classify_doc(d, n, s);
    } else if (verify_cmd->parsed()) {
      doc = detail::verify_doc(d, n, s);
    } else if (sweep_cmd->parsed()) {
      std::ifstream config_file(config_path);
      if (!config_file) throw usage_error("cannot open sweep config '" + config_path + "'");
      SweepOptions opt = parse_sweep_config(config_file);
      opt.threads = sweep_threads;
      doc = detail::sweep_doc(opt);
    }
    emit(doc, format, out);
    return 0;
  } catch (const usage_error& e) {
    err << "usage error: " << e.what() << "\n";
    return 1;
  } catch (const expr::parse_error& e) {
    err << "expression error: " << e.what() << "\n";
    return 1;
  } catch (const domain_error& e) {
    err << "domain error: " << e.what() << "\n";
    return 2;
  } catch (const consistency_error& e) {
    err << "internal consistency error: " << e.what() << "\n";
    return 3;
  }
}

}  // namespace scrollink::cli
