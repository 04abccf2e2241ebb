#pragma once

// Report builders behind the `ponsyz` command-line tool. Each command
// returns the JSON report, an equivalent text rendering and the exit code,
// so the tool itself only parses flags and prints.

#include <cstdint>
#include <json.hpp>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "ponsyz/binform.hpp"
#include "ponsyz/error.hpp"
#include "ponsyz/io.hpp"
#include "ponsyz/mpoly.hpp"
#include "ponsyz/poncelet.hpp"
#include "ponsyz/syzygy.hpp"

namespace ponsyz::cli {

using Json = nlohmann::ordered_json;

inline constexpr const char* kVersion = "ponsyz 0.1.0";

enum ExitCode : int {
  kPass = 0,
  kCheckFailed = 1,
  kUsageError = 2,
  kDegenerate = 3,
};

struct Outcome {
  Json report;
  std::string text;
  int exit_code = kPass;
};

/// 64-bit FNV-1a of the canonical inputs, printed as hex.
inline std::string digest(const Json& inputs) {
  std::uint64_t h = 14695981039346656037ull;
  for (unsigned char c : inputs.dump()) {
    h ^= c;
    h *= 1099511628211ull;
  }
  std::ostringstream os;
  os << std::hex;
  os.width(16);
  os.fill('0');
  os << h;
  return os.str();
}

inline Outcome finish(const std::string& command, Json inputs, std::uint64_t seed, Json results, bool pass,
                      std::string text, int failing_code = kCheckFailed) {
  Outcome out;
  out.report["command"] = command;
  out.report["version"] = kVersion;
  out.report["digest"] = digest(inputs);
  out.report["inputs"] = std::move(inputs);
  out.report["seed"] = seed;
  out.report["results"] = std::move(results);
  out.report["pass"] = pass;
  text += std::string("pass: ") + (pass ? "true" : "false") + "\n";
  out.text = std::move(text);
  out.exit_code = pass ? kPass : failing_code;
  return out;
}

inline Json forms_json(const std::vector<BinForm>& forms) {
  Json arr = Json::array();
  for (const auto& f : forms) arr.push_back(to_string(f));
  return arr;
}

inline Json param_json(const Param& p) { return to_string(p); }

inline Json params_json(const std::vector<Param>& ps) {
  Json arr = Json::array();
  for (const auto& p : ps) arr.push_back(param_json(p));
  return arr;
}

inline Json point_json(const ProjPoint& p) {
  Json arr = Json::array();
  for (const auto& c : p.coords()) arr.push_back(c.get_str());
  return arr;
}

inline Json system_inputs(const LinearSystem& system) {
  return Json{{"n", system.n()}, {"k", system.k()}, {"forms", forms_json(system.forms())}};
}

inline std::string join(const std::vector<std::string>& parts, const std::string& sep) {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) out += (i ? sep : "") + parts[i];
  return out;
}

inline std::string tuple_text(const std::vector<BinForm>& forms) {
  std::vector<std::string> parts;
  for (const auto& f : forms) parts.push_back(to_string(f));
  return "(" + join(parts, ", ") + ")";
}

inline Outcome cmd_syzygy(const LinearSystem& system, std::size_t d) {
  Json inputs = system_inputs(system);
  inputs["d"] = d;
  const auto basis = syzygy_basis(system, d);
  Json tuples = Json::array();
  bool all_vanish = true;
  std::ostringstream text;
  text << "r(" << d << ") = " << basis.size() << "\n";
  for (const auto& s : basis) {
    const bool vanishes = apply_syzygy(system, s).is_zero();
    all_vanish = all_vanish && vanishes;
    tuples.push_back(Json{{"entries", forms_json(s.entries)}, {"vanishes", vanishes}});
    text << "  " << tuple_text(s.entries) << (vanishes ? "" : "  [does not vanish]") << "\n";
  }
  Json results = Json::array({Json{{"d", d}, {"r", basis.size()}, {"basis", std::move(tuples)}}});
  return finish("syzygy", std::move(inputs), 0, std::move(results), all_vanish, text.str());
}

inline Outcome cmd_splitting(const LinearSystem& system) {
  const SplittingType s = splitting_type(system);
  const auto table = syzygy_counts(system, system.n());
  Json parts = Json::array();
  for (auto b : s.parts) parts.push_back(b);
  Json r_table = Json::array();
  for (auto r : table) r_table.push_back(r);
  const BinForm base = base_divisor(system);

  std::ostringstream text;
  text << "parts: " << to_string(s) << "\n";
  text << "base divisor: " << to_string(base) << " (degree " << s.base_degree << ")\n";
  text << "r(d), d = 0.." << system.n() << ":";
  for (auto r : table) text << ' ' << r;
  text << "\n";

  Json results = Json::array({Json{{"parts", std::move(parts)},
                                   {"base_degree", s.base_degree},
                                   {"base_divisor", to_string(base)},
                                   {"r_table", std::move(r_table)}}});
  return finish("splitting", system_inputs(system), 0, std::move(results), true, text.str());
}

inline Json matrix_json(const PolyMatrix& m) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(to_string(m(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

inline std::string complement_label(std::size_t n, std::size_t c) {
  return to_string(BinForm::monomial(c, n - c));
}

inline Outcome cmd_poncelet(const LinearSystem& system, const std::optional<MPoly>& compare = std::nullopt) {
  Json inputs = system_inputs(system);
  if (compare) inputs["compare"] = to_string(*compare);
  const auto pm = poncelet_matrix(system);
  const MPoly det = poly_matrix_det(pm.matrix);

  std::ostringstream text;
  Json complement = Json::array();
  std::vector<std::string> labels;
  for (auto c : pm.complement) {
    complement.push_back(complement_label(system.n(), c));
    labels.push_back(complement_label(system.n(), c));
  }
  text << "columns: " << join(labels, ", ") << "\n";
  for (std::size_t i = 0; i < pm.matrix.rows(); ++i) {
    std::vector<std::string> cells;
    for (std::size_t j = 0; j < pm.matrix.cols(); ++j) cells.push_back(to_string(pm.matrix(i, j)));
    text << "  [" << join(cells, " | ") << "]\n";
  }

  Json result{{"matrix", matrix_json(pm.matrix)}, {"complement", std::move(complement)}};
  if (det.is_zero()) {
    result["equation"] = nullptr;
    result["degenerate"] = true;
    text << "equation: degenerate (determinant vanishes identically)\n";
    return finish("poncelet", std::move(inputs), 0, Json::array({std::move(result)}), false, text.str(), kDegenerate);
  }
  const MPoly equation = normalize_primitive(det);
  result["equation"] = to_string(equation);
  result["degree"] = equation.total_degree();
  result["degenerate"] = false;
  text << "equation: " << to_string(equation) << " = 0\n";
  bool pass = true;
  if (compare) {
    const bool prop = proportional(equation, *compare);
    result["proportional"] = prop;
    text << "proportional: " << (prop ? "true" : "false") << "\n";
    pass = prop;
  }
  return finish("poncelet", std::move(inputs), 0, Json::array({std::move(result)}), pass, text.str());
}

inline Outcome cmd_basepoints(const LinearSystem& system, std::optional<std::vector<Param>> roots = std::nullopt) {
  Json inputs = system_inputs(system);
  if (roots) inputs["points"] = params_json(*roots);
  const BasePointFactorization fb = factor_base_points(system, roots);

  MPoly product = fb.residual;
  Json factors = Json::array();
  std::vector<std::string> factor_text;
  for (const auto& l : fb.factors) {
    product = product * l;
    factors.push_back(to_string(l));
    factor_text.push_back("(" + to_string(l) + ")");
  }
  const bool reconstructs = proportional(product, fb.equation);
  const bool matches = fb.residual_matches();

  std::ostringstream text;
  text << "base divisor: " << to_string(base_divisor(system)) << "\n";
  std::vector<std::string> pts;
  for (const auto& p : fb.base_points) pts.push_back(to_string(p));
  text << "base points: " << (pts.empty() ? "none" : join(pts, ", ")) << "\n";
  text << "equation: " << to_string(fb.equation) << "\n";
  text << "osculating factors: " << (factor_text.empty() ? "none" : join(factor_text, " ")) << "\n";
  text << "residual: " << to_string(fb.residual) << "\n";
  text << "residual system equation: " << to_string(fb.residual_system_equation) << "\n";
  text << "reconstructs: " << (reconstructs ? "true" : "false") << "\n";
  text << "residual matches: " << (matches ? "true" : "false") << "\n";

  Json results = Json::array({Json{{"base_divisor", to_string(base_divisor(system))},
                                   {"base_points", params_json(fb.base_points)},
                                   {"equation", to_string(fb.equation)},
                                   {"factors", std::move(factors)},
                                   {"residual", to_string(fb.residual)},
                                   {"residual_system_equation", to_string(fb.residual_system_equation)},
                                   {"reconstructs", reconstructs},
                                   {"residual_matches", matches}}});
  return finish("basepoints", std::move(inputs), 0, std::move(results), reconstructs && matches, text.str());
}

inline Json splitting_json(const SplittingType& s) {
  Json parts = Json::array();
  for (auto b : s.parts) parts.push_back(b);
  return parts;
}

inline Outcome cmd_verify_dime(long k, long n, long r, long d, int trials, std::uint64_t seed) {
  Json inputs{{"k", k}, {"n", n}, {"r", r}, {"d", d}, {"trials", trials}};
  const auto reports = verify_dime(k, n, r, d, trials, seed);
  Json results = Json::array();
  bool pass = true;
  std::ostringstream text;
  text << "generic splitting: " << to_string(generic_splitting(k, n, r, d)) << "\n";
  for (const auto& rep : reports) {
    pass = pass && rep.agree();
    results.push_back(Json{{"seed", rep.seed},
                           {"forms", forms_json(rep.forms)},
                           {"splitting", splitting_json(rep.splitting)},
                           {"expected_codim", rep.expected_codim},
                           {"tangent_codim", rep.tangent_codim},
                           {"h1_codim", rep.h1_codim},
                           {"agree", rep.agree()}});
    text << "seed " << rep.seed << ": splitting " << to_string(rep.splitting) << ", expected "
         << rep.expected_codim << ", tangent " << rep.tangent_codim << ", h1 " << rep.h1_codim
         << (rep.agree() ? "  ok" : "  MISMATCH") << "\n";
  }
  return finish("verify dime", std::move(inputs), seed, std::move(results), pass, text.str());
}

inline Outcome cmd_verify_teorema(std::size_t n, std::size_t k, const std::vector<Param>& params, std::uint64_t seed) {
  Json inputs{{"n", n}, {"k", k}, {"points", params_json(params)}};
  const ConfigReport rep = verify_teorema(n, k, params, seed);
  Json lines = Json::array();
  for (const auto& l : rep.lines)
    lines.push_back(Json{{"subset", l.subset},
                         {"span", Json::array({point_json(l.line.first()), point_json(l.line.second())})},
                         {"contained", l.contained}});
  Json vertices = Json::array();
  for (const auto& v : rep.vertices)
    vertices.push_back(Json{{"subset", v.subset}, {"point", point_json(v.point)}, {"singular", v.singular}});

  std::ostringstream text;
  text << "system: " << tuple_text(rep.forms) << "\n";
  text << "equation: " << to_string(rep.equation) << " = 0\n";
  text << "lines contained: " << rep.lines_contained() << "/" << rep.lines.size() << " (expected "
       << binomial(n - 1, k) << ")\n";
  text << "singular vertices: " << rep.vertices_singular() << "/" << rep.vertices.size() << " (expected "
       << binomial(n - 1, k + 1) << ")\n";
  text << "lines span P^" << k + 1 << ": " << (rep.lines_span_space ? "true" : "false") << "\n";
  text << "vertices distinct: " << (rep.vertices_distinct ? "true" : "false") << "\n";

  Json results = Json::array({Json{{"forms", forms_json(rep.forms)},
                                   {"equation", to_string(rep.equation)},
                                   {"lines_expected", binomial(n - 1, k)},
                                   {"lines_contained", rep.lines_contained()},
                                   {"vertices_expected", binomial(n - 1, k + 1)},
                                   {"vertices_singular", rep.vertices_singular()},
                                   {"lines_span_space", rep.lines_span_space},
                                   {"vertices_distinct", rep.vertices_distinct},
                                   {"lines", std::move(lines)},
                                   {"vertices", std::move(vertices)}}});
  return finish("verify teorema", std::move(inputs), seed, std::move(results), rep.pass(), text.str());
}

/// Base degree alternates between 1 and 2 (capped at n - k) unless fixed.
inline Outcome cmd_verify_tpenc(std::size_t n, std::size_t k, std::optional<std::size_t> base_degree, int trials,
                                std::uint64_t seed) {
  Json inputs{{"n", n}, {"k", k}, {"trials", trials}};
  if (base_degree) inputs["base_degree"] = *base_degree;
  if (n <= k) throw Error(ErrorKind::InvalidArgument, "tpenc needs n > k so a base point fits");
  const std::size_t max_base = n - k;
  if (base_degree && (*base_degree == 0 || *base_degree > max_base))
    throw Error(ErrorKind::InvalidArgument, "base degree must be between 1 and n - k");

  Json results = Json::array();
  bool pass = true;
  std::ostringstream text;
  for (int t = 0; t < trials; ++t) {
    const std::uint64_t trial_seed = seed + static_cast<std::uint64_t>(t);
    const std::size_t d0 = base_degree ? *base_degree : 1 + static_cast<std::size_t>(t) % std::min<std::size_t>(2, max_base);
    const PlantedSystem planted = planted_base_point_system(n, k, d0, trial_seed);
    const BasePointFactorization fb = factor_base_points(planted.system);

    MPoly product = fb.residual;
    for (const auto& l : fb.factors) product = product * l;
    const bool reconstructs = proportional(product, fb.equation);
    bool found_all = fb.base_points.size() == planted.base_points.size();
    for (const auto& p : planted.base_points) {
      bool hit = false;
      for (const auto& q : fb.base_points) hit = hit || projectively_equal(p, q);
      found_all = found_all && hit;
    }
    const bool ok = reconstructs && found_all && fb.residual_matches() &&
                    fb.residual.total_degree() == static_cast<int>(n - k - d0);
    pass = pass && ok;
    Json factors = Json::array();
    for (const auto& l : fb.factors) factors.push_back(to_string(l));
    results.push_back(Json{{"seed", trial_seed},
                           {"base_degree", d0},
                           {"forms", forms_json(planted.system.forms())},
                           {"planted_points", params_json(planted.base_points)},
                           {"detected_points", params_json(fb.base_points)},
                           {"factors", std::move(factors)},
                           {"residual", to_string(fb.residual)},
                           {"reconstructs", reconstructs},
                           {"residual_matches", fb.residual_matches()},
                           {"pass", ok}});
    text << "seed " << trial_seed << ": base degree " << d0 << ", " << fb.factors.size()
         << " osculating factors, residual degree " << fb.residual.total_degree()
         << (ok ? "  ok" : "  FAILED") << "\n";
  }
  return finish("verify tpenc", std::move(inputs), seed, std::move(results), pass, text.str());
}

inline Outcome cmd_verify_prozero(std::size_t n, std::size_t k, std::optional<std::vector<Param>> roots,
                                  std::size_t probes, std::uint64_t seed) {
  if (roots && roots->size() != n) throw Error(ErrorKind::InvalidArgument, "need exactly n points");
  if (!roots) {
    SeededRng rng(seed);
    roots = random_params(rng, n);
  }
  Json inputs{{"n", n}, {"k", k}, {"points", params_json(*roots)}, {"probes", probes}};
  check_distinct(*roots);

  const BinForm s = form_with_roots(*roots);
  Json vertices = Json::array();
  bool all_vertices = true;
  for (const auto& subset : subsets(n, k + 1)) {
    std::vector<Param> chosen;
    for (auto i : subset) chosen.push_back((*roots)[i]);
    const ProjPoint a = vertex_point(chosen, k);
    const bool by_division = divides(point_form(a), s);
    const bool by_membership = band_membership(s, a);
    all_vertices = all_vertices && by_division && by_membership;
    vertices.push_back(
        Json{{"subset", subset}, {"point", point_json(a)}, {"divisibility", by_division}, {"membership", by_membership}});
  }
  const ZeroLocusProbeSummary sum = zero_locus_probes(n, k, probes, seed);
  const bool pass = all_vertices && vertices.size() == binomial(n, k + 1) && sum.pass();

  std::ostringstream text;
  text << "section: " << to_string(s) << "\n";
  text << "vertices in zero locus: " << vertices.size() << " (expected " << binomial(n, k + 1) << "), all pass: "
       << (all_vertices ? "true" : "false") << "\n";
  text << "random probes: " << sum.probes << ", disagreements " << sum.disagreements << ", vertex hits "
       << sum.vertex_hits << "/" << sum.vertex_probes << ", off-vertex hits " << sum.off_vertex_hits << "/"
       << sum.off_vertex_probes << "\n";

  Json results = Json::array({Json{{"section", to_string(s)},
                                   {"vertex_count", vertices.size()},
                                   {"vertices_expected", binomial(n, k + 1)},
                                   {"vertices", std::move(vertices)},
                                   {"probes", Json{{"total", sum.probes},
                                                   {"disagreements", sum.disagreements},
                                                   {"vertex_probes", sum.vertex_probes},
                                                   {"vertex_hits", sum.vertex_hits},
                                                   {"off_vertex_probes", sum.off_vertex_probes},
                                                   {"off_vertex_hits", sum.off_vertex_hits}}}}});
  return finish("verify prozero", std::move(inputs), seed, std::move(results), pass, text.str());
}

/// Report for inputs that could not be processed.
inline Outcome error_outcome(const std::string& command, const Error& e) {
  Outcome out;
  out.report["command"] = command;
  out.report["version"] = kVersion;
  out.report["error"] = Json{{"kind", to_string(e.kind())}, {"message", e.what()}};
  out.report["pass"] = false;
  out.text = std::string("error: ") + e.what() + "\n";
  switch (e.kind()) {
    case ErrorKind::Degenerate: out.exit_code = kDegenerate; break;
    case ErrorKind::Parse:
    case ErrorKind::InvalidArgument:
    case ErrorKind::Precondition: out.exit_code = kUsageError; break;
    default: out.exit_code = kCheckFailed; break;
  }
  return out;
}

}  // namespace ponsyz::cli
