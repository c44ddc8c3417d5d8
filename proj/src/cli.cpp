#include "chainmod/cli.hpp"

#include <algorithm>
#include <fstream>
#include <functional>
#include <map>
#include <optional>
#include <ostream>
#include <set>
#include <sstream>

#include <CLI11.hpp>

#include "chainmod/checked.hpp"
#include "chainmod/components.hpp"
#include "chainmod/errors.hpp"
#include "chainmod/euler.hpp"
#include "chainmod/gluing.hpp"
#include "chainmod/json_io.hpp"
#include "chainmod/oracles.hpp"
#include "chainmod/polarization_solver.hpp"
#include "chainmod/stability.hpp"

namespace chainmod::cli {
namespace {

using io::Json;

// Raw option values keyed by long flag name. Flags given on the command line
// win; anything unset may be filled from a --config document.
class Options {
 public:
  void text(CLI::App* app, const std::string& key, const std::string& help) {
    opts_[key] = app->add_option("--" + key, text_[key], help);
  }
  void flag(CLI::App* app, const std::string& key, const std::string& help) {
    flags_[key] = false;
    opts_[key] = app->add_flag("--" + key, flags_[key], help);
  }
  bool knows(const std::string& key) const { return opts_.contains(key); }

  void fill_from(const std::string& key, const Json& value) {
    if (opts_.at(key)->count() > 0) return;
    if (flags_.contains(key)) {
      if (!value.is_boolean()) throw InvalidInput("config key '" + key + "' must be a boolean");
      flags_[key] = value.get<bool>();
    } else {
      text_[key] = config_text(key, value);
    }
  }

  bool has(const std::string& key) const {
    auto it = text_.find(key);
    return it != text_.end() && !it->second.empty();
  }
  const std::string& get(const std::string& key) const {
    if (!has(key)) throw InvalidInput("missing required --" + key);
    return text_.at(key);
  }
  bool on(const std::string& key) const { return flags_.at(key); }

  std::int64_t integer(const std::string& key) const {
    auto v = io::parse_int_list(get(key));
    if (v.size() != 1) throw InvalidInput("--" + key + " expects a single integer");
    return v[0];
  }
  std::vector<std::int64_t> ints(const std::string& key) const { return io::parse_int_list(get(key)); }
  std::vector<Rat> rats(const std::string& key) const { return io::parse_rat_list(get(key)); }

 private:
  static std::string config_text(const std::string& key, const Json& value) {
    if (value.is_string()) return value.get<std::string>();
    if (value.is_number_integer()) return std::to_string(value.get<std::int64_t>());
    if (value.is_array()) {
      // A list becomes "a,b,c"; a list of lists (a matrix) becomes "a,b;c,d".
      std::string out;
      for (std::size_t i = 0; i < value.size(); ++i) {
        const auto& e = value[i];
        if (i > 0) out += e.is_array() ? ";" : ",";
        out += e.is_array() ? config_text(key, e) : scalar_text(key, e);
      }
      return out;
    }
    throw InvalidInput("config key '" + key + "' has an unsupported value " + value.dump());
  }
  static std::string scalar_text(const std::string& key, const Json& e) {
    if (e.is_string()) return e.get<std::string>();
    if (e.is_number_integer()) return std::to_string(e.get<std::int64_t>());
    throw InvalidInput("config key '" + key + "' must hold integers or \"p/q\" strings");
  }

  std::map<std::string, std::string> text_;
  std::map<std::string, bool> flags_;
  std::map<std::string, CLI::Option*> opts_;
};

struct Outcome {
  Json body;
  int code = kOk;
};

Json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InvalidInput("cannot open " + path);
  try {
    return Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw InvalidInput(path + ": " + e.what());
  }
}

Json header(const std::string& command) {
  return Json{{"schema", io::kSchemaVersion}, {"command", command}};
}

ChainCurve curve_for(const Options& o, std::size_t n) {
  if (!o.has("genera")) return ChainCurve(std::vector<std::int64_t>(n, 0));
  ChainCurve curve(o.ints("genera"));
  if (curve.n() != n) throw InvalidInput("--genera and --chi have different lengths");
  return curve;
}

std::vector<bool> bool_list(const std::string& key, const std::vector<std::int64_t>& v) {
  std::vector<bool> out;
  for (auto x : v) {
    if (x != 0 && x != 1) throw InvalidInput("--" + key + " expects entries 0 or 1");
    out.push_back(x == 1);
  }
  return out;
}

// ---- chi -------------------------------------------------------------------

Outcome cmd_chi(const Options& o) {
  const auto r = o.integer("r");
  Json body = header("chi");
  std::vector<std::int64_t> euler;
  std::optional<ChainCurve> curve;
  if (o.has("genera")) curve.emplace(o.ints("genera"));
  if (o.has("degrees")) {
    if (!curve) throw InvalidInput("--degrees needs --genera");
    auto d = o.ints("degrees");
    if (d.size() != curve->n()) throw InvalidInput("--degrees and --genera have different lengths");
    for (std::size_t i = 0; i < d.size(); ++i) euler.push_back(chi_from_degree(d[i], r, curve->genus(i + 1)));
  } else {
    euler = o.ints("chi");
    if (curve && curve->n() != euler.size()) throw InvalidInput("--chi and --genera have different lengths");
  }
  if (euler.empty()) throw InvalidInput("empty Euler vector");
  const auto chi = chi_total(euler, r);
  body["r"] = r;
  body["euler"] = euler;
  body["chi"] = chi;
  if (curve) {
    std::vector<std::int64_t> degrees;
    for (std::size_t i = 0; i < euler.size(); ++i) degrees.push_back(degree_from_chi(euler[i], r, curve->genus(i + 1)));
    body["degrees"] = degrees;
    body["degree"] = degree_from_chi(chi, r, arithmetic_genus(*curve));
  }
  if (o.has("twist")) {
    LineBundleData line{o.ints("twist")};
    std::vector<std::int64_t> multirank(euler.size(), r);
    body["twisted_euler"] = twist_euler_vector(euler, multirank, line);
    body["twisted_chi"] = twist_chi(chi, multirank, line);
  }
  return {body};
}

// ---- dim -------------------------------------------------------------------

Outcome cmd_dim(const Options& o) {
  const auto r = o.integer("r");
  if (r < 1) throw InvalidInput("--r must be positive");
  ChainCurve curve(o.ints("genera"));
  std::vector<std::int64_t> parts;
  for (auto g : curve.genera()) parts.push_back(smooth_component_dimension(g, r));
  Json body = header("dim");
  body["r"] = r;
  body["genera"] = curve.genera();
  body["arithmetic_genus"] = arithmetic_genus(curve);
  body["component_dimensions"] = parts;
  body["node_contribution"] = checked::mul(checked::sub(checked::mul(r, r), 1),
                                           static_cast<std::int64_t>(curve.node_count()));
  body["moduli_dimension"] = moduli_dimension(curve, r);
  return {body};
}

// ---- slope -----------------------------------------------------------------

Outcome cmd_slope(const Options& o) {
  Json body = header("slope");
  if (o.has("degree")) {
    const auto deg = o.integer("degree");
    const auto rank = o.integer("rank");
    const auto k = o.has("k") ? o.integer("k") : 0;
    body["mu_k"] = mu_k(deg, rank, k).str();
    return {body};
  }
  const auto chi = o.integer("chi");
  auto w = validate_polarization(o.rats("w"));
  std::vector<std::int64_t> multirank =
      o.has("multirank") ? o.ints("multirank") : std::vector<std::int64_t>(w.size(), o.integer("r"));
  body["slope"] = slope_w(chi, multirank, w).str();
  return {body};
}

// ---- check -----------------------------------------------------------------

ComponentFlags flags_for(const Options& o, const Json* config_flags) {
  ComponentFlags f;
  if (config_flags) {
    static const std::set<std::string> allowed{"mk_semistable", "mk_stable_any",
                                               "restriction_semistable", "restriction_stable_any"};
    for (const auto& [key, value] : config_flags->items()) {
      if (!allowed.contains(key)) throw InvalidInput("unknown component_flags key '" + key + "'");
    }
    if (config_flags->contains("mk_semistable"))
      f.mk_semistable = bool_list("mk-semistable", io::int_list_from_json((*config_flags)["mk_semistable"]));
    if (config_flags->contains("restriction_semistable"))
      f.restriction_semistable =
          bool_list("restriction-semistable", io::int_list_from_json((*config_flags)["restriction_semistable"]));
    f.mk_stable_any = config_flags->value("mk_stable_any", false);
    f.restriction_stable_any = config_flags->value("restriction_stable_any", false);
  }
  if (o.has("mk-semistable")) f.mk_semistable = bool_list("mk-semistable", o.ints("mk-semistable"));
  if (o.has("restriction-semistable"))
    f.restriction_semistable = bool_list("restriction-semistable", o.ints("restriction-semistable"));
  if (o.on("mk-stable-any")) f.mk_stable_any = true;
  if (o.on("restriction-stable-any")) f.restriction_stable_any = true;
  return f;
}

bool any_flag(const ComponentFlags& f) {
  return !f.mk_semistable.empty() || !f.restriction_semistable.empty() || f.mk_stable_any ||
         f.restriction_stable_any;
}

Outcome cmd_check(const Options& o, const Json* config_flags) {
  const auto r = o.integer("r");
  const auto chi_vec = o.ints("chi");
  const auto curve = curve_for(o, chi_vec.size());
  const auto w = validate_polarization(o.rats("w"));
  if (w.size() != curve.n()) throw InvalidInput("--w and --chi have different lengths");
  const bool strict = o.on("strict");

  std::optional<std::vector<std::int64_t>> k_vec;
  if (o.has("k")) k_vec = o.ints("k");
  if (o.has("sigma")) {
    auto g = io::gluing_from_json(load_json_file(o.get("sigma")));
    if (g.r != r || g.n() != curve.n()) throw InvalidInput("sigma file does not match --r / --chi");
    std::vector<std::int64_t> ranks;
    for (const auto& m : g.matrices) ranks.push_back(rank(m));
    if (k_vec && *k_vec != ranks) throw InvalidInput("--k disagrees with the ranks of the sigma file");
    k_vec = ranks;
  }
  const auto flags = flags_for(o, config_flags);

  Json body = header("check");
  body["r"] = r;
  body["chi"] = chi_total(chi_vec, r);
  body["weights"] = io::to_json(w.weights());
  const auto partial = check_partial_euler(curve, r, chi_vec, w, strict);
  body["partial_euler_bounds"] = io::to_json(partial);
  auto primary = partial.verdict;
  if (k_vec) {
    const auto sigma = sigma_rank_bounds(curve, r, chi_vec, *k_vec, w, strict);
    body["k"] = *k_vec;
    body["node_rank_bounds"] = io::to_json(sigma);
    body["hypothesis"] = io::to_json(hypothesis_system(curve, r, chi_vec, *k_vec, w));
    primary = sigma.verdict;
  }
  int code = primary == InequalityVerdict::Violated ? kNegative : kOk;
  if (k_vec || any_flag(flags)) {
    std::vector<std::int64_t> k = k_vec ? *k_vec : std::vector<std::int64_t>(curve.node_count(), r);
    const auto verdict = classify(curve, r, chi_vec, k, w, flags);
    body["verdict"] = io::to_json(verdict);
    if (verdict.status == StabilityStatus::NecessaryViolated) code = kNegative;
  }
  return {body, code};
}

// ---- glue ------------------------------------------------------------------

Outcome cmd_glue(const Options& o) {
  const auto doc = load_json_file(o.get("input"));
  const auto g = io::gluing_from_json(doc);
  std::vector<std::int64_t> chi_vec;
  if (o.has("chi")) {
    chi_vec = o.ints("chi");
  } else if (doc.contains("euler")) {
    chi_vec = io::int_list_from_json(doc["euler"]);
  } else {
    throw InvalidInput("glue needs an Euler vector (--chi or \"euler\" in the input)");
  }
  const auto sheaf = to_numerical_sheaf(g, chi_vec);
  Json stalks = Json::array();
  for (std::size_t i = 1; i < sheaf.n(); ++i) {
    auto s = stalk_structure(sheaf, i);
    stalks.push_back(Json{{"node", i},
                          {"free_rank", s.free_rank},
                          {"left_torsion", s.left_torsion},
                          {"right_torsion", s.right_torsion}});
  }
  Json body = header("glue");
  body["sheaf"] = io::to_json(sheaf);
  body["chi"] = chi_total(chi_vec, g.r);
  body["diagonal_dimension"] = diagonal_dimension(g);
  body["vector_bundle"] = is_vector_bundle(sheaf);
  body["stalks"] = stalks;
  return {body};
}

// ---- polarize --------------------------------------------------------------

Outcome cmd_polarize(const Options& o) {
  const auto r = o.integer("r");
  const auto chi_vec = o.ints("chi");
  const auto result = construct_polarization(r, chi_vec);
  Json body = header("polarize");
  body["r"] = r;
  body["chi_vec"] = chi_vec;
  body["chi"] = chi_total(chi_vec, r);
  const auto solved = io::to_json(result);
  for (const auto& [k, v] : solved.items()) body[k] = v;
  int code = result.status == SolveStatus::Feasible ? kOk : kNegative;
  if (o.has("oracle-den")) {
    const auto den = o.integer("oracle-den");
    const auto hit = grid_oracle(r, chi_vec, den);
    body["oracle"] = Json{{"max_den", den},
                          {"found", hit.has_value()},
                          {"weights", hit ? io::to_json(hit->weights()) : Json(nullptr)}};
    if (hit && result.status == SolveStatus::Infeasible) code = kInvariantBreach;
  }
  return {body, code};
}

// ---- components ------------------------------------------------------------

Outcome cmd_components(const Options& o, std::uint64_t seed) {
  const auto r = o.integer("r");
  const auto chi = o.integer("chi");
  ChainCurve curve(o.ints("genera"));
  const bool sampled = !o.has("w");
  const auto w = sampled ? generic_w_sampler(curve, r, chi, seed) : validate_polarization(o.rats("w"));
  if (w.size() != curve.n()) throw InvalidInput("--w and --genera have different lengths");
  const auto e = enumerate_with_report(curve, r, chi, w);
  Json body = header("components");
  body["r"] = r;
  body["chi"] = chi;
  body["genera"] = curve.genera();
  body["weights"] = io::to_json(w.weights());
  body["sampled_weights"] = sampled;
  if (sampled) body["seed"] = seed;
  body["generic"] = is_generic(w, chi);
  body["count"] = e.components.size();
  const auto listed = io::to_json(e);
  for (const auto& [k, v] : listed.items()) body[k] = v;
  auto warnings = curve.genus_warnings(2, "the rationality verdict");
  if (!warnings.empty()) body["warnings"] = warnings;
  const bool any_rational = std::any_of(e.components.begin(), e.components.end(), [](const Component& c) {
    return c.verdict == Rationality::RationalByMainTheorem;
  });
  return {body, any_rational ? kOk : kNegative};
}

// ---- oracle ----------------------------------------------------------------

RatMatrix matrix_from_text(const std::string& text) {
  std::vector<std::vector<Rat>> rows;
  std::stringstream ss(text);
  std::string row;
  while (std::getline(ss, row, ';')) rows.push_back(io::parse_rat_list(row));
  std::vector<Rat> entries;
  const std::size_t cols = rows.empty() ? 0 : rows[0].size();
  for (const auto& rw : rows) {
    if (rw.size() != cols) throw InvalidInput("matrix rows must have equal length");
    entries.insert(entries.end(), rw.begin(), rw.end());
  }
  return RatMatrix(rows.size(), cols, std::move(entries));
}

Outcome cmd_oracle(const Options& o, const std::string& name) {
  Json body = header("oracle");
  body["check"] = name;
  bool agree = true;
  if (name == "subset") {
    const auto r = o.integer("r");
    const auto chi_vec = o.ints("chi");
    const bool fast = subset_condition(r, chi_vec);
    const bool brute = oracle::subset_bruteforce(r, chi_vec);
    body["reduction"] = fast;
    body["bruteforce"] = brute;
    agree = fast == brute;
  } else if (name == "rank") {
    RatMatrix m;
    if (o.has("matrix")) {
      m = matrix_from_text(o.get("matrix"));
    } else {
      m = io::matrix_from_json(load_json_file(o.get("input")));
    }
    const auto fast = rank(m);
    const auto brute = oracle::minor_rank(m);
    body["matrix"] = io::to_json(m);
    body["rank"] = fast;
    body["minor_rank"] = brute;
    agree = fast == brute;
  } else if (name == "feasibility") {
    const auto r = o.integer("r");
    const auto chi_vec = o.ints("chi");
    const auto den = o.has("oracle-den") ? o.integer("oracle-den") : 64;
    const auto result = construct_polarization(r, chi_vec);
    const auto hit = grid_oracle(r, chi_vec, den);
    body["solver"] = to_string(result.status);
    body["solver_weights"] = result.weights ? io::to_json(result.weights->weights()) : Json(nullptr);
    body["max_den"] = den;
    body["oracle_found"] = hit.has_value();
    body["oracle_weights"] = hit ? io::to_json(hit->weights()) : Json(nullptr);
    agree = !(hit && result.status == SolveStatus::Infeasible);
  } else if (name == "implication") {
    oracle::SweepBounds b;
    b.n = static_cast<std::size_t>(o.integer("n"));
    b.r = o.integer("r");
    b.chi_min = o.integer("chi-min");
    b.chi_max = o.integer("chi-max");
    if (o.has("den")) b.w_den = o.integer("den");
    const auto rep = oracle::sweep_implication(b);
    auto tuples = [](const std::vector<oracle::SweepTuple>& ts) {
      Json out = Json::array();
      for (const auto& t : ts) {
        out.push_back(Json{{"chi_vec", t.chi_vec}, {"k", t.k_vec}, {"weights", io::to_json(t.weights)}});
      }
      return out;
    };
    body["tuples"] = rep.tuples;
    body["hypothesis_true"] = rep.hypothesis_true;
    body["bounds_true"] = rep.bounds_true;
    body["implication_failures"] = tuples(rep.implication_failures);
    body["non_equivalence_count"] = rep.non_equivalence_count;
    body["non_equivalence_witnesses"] = tuples(rep.non_equivalence_witnesses);
    agree = rep.passed();
  } else if (name == "enumeration") {
    const auto r = o.integer("r");
    const auto chi = o.integer("chi");
    ChainCurve curve(o.ints("genera"));
    const auto w = validate_polarization(o.rats("w"));
    std::vector<std::vector<std::int64_t>> fast;
    for (const auto& c : enumerate_components(curve, r, chi, w)) fast.push_back(c.chi_vec);
    const auto brute = oracle::component_euler_vectors(curve.n(), r, chi, w);
    body["enumerator"] = fast;
    body["partial_sum_route"] = brute;
    agree = fast == brute;
  } else {
    throw InvalidInput("unknown oracle check '" + name +
                       "' (subset, rank, feasibility, implication, enumeration)");
  }
  body["agree"] = agree;
  return {body, agree ? kOk : kInvariantBreach};
}

// ---- pretty ----------------------------------------------------------------

std::string scalar(const Json& j) {
  if (j.is_string()) return j.get<std::string>();
  if (j.is_null()) return "-";
  return j.dump();
}

// Small objects of scalars (intervals, mostly) print on one line.
bool is_small_record(const Json& j) {
  return j.is_object() && j.size() <= 4 &&
         std::all_of(j.begin(), j.end(), [](const Json& e) { return !e.is_structured(); });
}

bool is_flat(const Json& j) {
  if (is_small_record(j)) return true;
  if (!j.is_array()) return !j.is_object();
  return std::all_of(j.begin(), j.end(), [](const Json& e) { return !e.is_structured(); });
}

std::string flat(const Json& j) {
  if (is_small_record(j)) {
    std::string out = "{";
    bool first = true;
    for (const auto& [k, v] : j.items()) {
      out += (first ? "" : " ") + k + "=" + scalar(v);
      first = false;
    }
    return out + "}";
  }
  if (!j.is_array()) return scalar(j);
  std::string out = "(";
  for (std::size_t i = 0; i < j.size(); ++i) out += (i ? ", " : "") + scalar(j[i]);
  return out + ")";
}

// An array of objects whose fields are all flat becomes an aligned table.
bool tabular(const Json& j) {
  if (!j.is_array() || j.empty()) return false;
  for (const auto& row : j) {
    if (!row.is_object() || row.size() != j[0].size()) return false;
    for (const auto& [k, v] : row.items()) {
      if (!j[0].contains(k) || !is_flat(v)) return false;
    }
  }
  return true;
}

void render(const Json& j, int indent, std::ostream& os) {
  const std::string pad(indent, ' ');
  if (tabular(j)) {
    std::vector<std::string> keys;
    for (const auto& [k, v] : j[0].items()) keys.push_back(k);
    std::vector<std::vector<std::string>> cells{keys};
    for (const auto& row : j) {
      std::vector<std::string> line;
      for (const auto& k : keys) line.push_back(flat(row[k]));
      cells.push_back(line);
    }
    std::vector<std::size_t> width(keys.size(), 0);
    for (const auto& line : cells)
      for (std::size_t c = 0; c < line.size(); ++c) width[c] = std::max(width[c], line[c].size());
    for (const auto& line : cells) {
      os << pad;
      for (std::size_t c = 0; c < line.size(); ++c) {
        os << line[c];
        if (c + 1 < line.size()) os << std::string(width[c] - line[c].size() + 2, ' ');
      }
      os << '\n';
    }
    return;
  }
  if (j.is_object()) {
    for (const auto& [k, v] : j.items()) {
      if (is_flat(v)) {
        os << pad << k << ": " << flat(v) << '\n';
      } else if (v.empty()) {
        os << pad << k << ": (none)\n";
      } else {
        os << pad << k << ":\n";
        render(v, indent + 2, os);
      }
    }
    return;
  }
  if (j.is_array()) {
    for (std::size_t i = 0; i < j.size(); ++i) {
      if (is_flat(j[i])) {
        os << pad << "- " << flat(j[i]) << '\n';
      } else {
        os << pad << "[" << i << "]\n";
        render(j[i], indent + 2, os);
      }
    }
    return;
  }
  os << pad << scalar(j) << '\n';
}

const std::set<std::string> kGlobalKeys{"command", "config", "pretty", "output", "seed"};

}  // namespace

std::string render_pretty(const std::string& json_text) {
  std::ostringstream os;
  render(Json::parse(json_text), 0, os);
  return os.str();
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact numerical invariants of sheaves on chain-like curves", "chainmod"};
  app.require_subcommand(0, 1);
  app.fallthrough();

  Options global;
  global.text(&app, "config", "JSON file of option values; command-line flags win");
  global.text(&app, "output", "write the JSON result to this file instead of stdout");
  global.text(&app, "seed", "seed for every sampler (default 0)");
  global.flag(&app, "pretty", "print a text rendering instead of JSON");

  std::map<std::string, std::pair<CLI::App*, Options>> commands;
  auto add = [&](const std::string& name, const std::string& help) -> std::pair<CLI::App*, Options>& {
    auto& slot = commands[name];
    slot.first = app.add_subcommand(name, help);
    return slot;
  };

  {
    auto& [sub, o] = add("chi", "total Euler characteristic, degrees and twists");
    o.text(sub, "r", "rank");
    o.text(sub, "chi", "Euler vector \"c1,c2,..\"");
    o.text(sub, "degrees", "multidegree \"d1,d2,..\" (needs --genera)");
    o.text(sub, "genera", "genera \"g1,g2,..\"");
    o.text(sub, "twist", "degrees of a line bundle to twist by");
  }
  {
    auto& [sub, o] = add("dim", "dimension of a component of the moduli space");
    o.text(sub, "genera", "genera \"g1,g2,..\"");
    o.text(sub, "r", "rank");
  }
  {
    auto& [sub, o] = add("slope", "w-slope chi / sum w_i r_i, or mu_k = (deg + k) / rank");
    o.text(sub, "chi", "total Euler characteristic");
    o.text(sub, "w", "polarization \"p/q,p/q,..\"");
    o.text(sub, "multirank", "ranks \"r1,r2,..\"");
    o.text(sub, "r", "uniform rank (instead of --multirank)");
    o.text(sub, "degree", "degree of a bundle on a smooth curve");
    o.text(sub, "rank", "its rank");
    o.text(sub, "k", "the integer k of mu_k");
  }
  {
    auto& [sub, o] = add("check", "evaluate the stability inequality systems");
    o.text(sub, "r", "rank");
    o.text(sub, "chi", "Euler vector \"c1,c2,..\"");
    o.text(sub, "w", "polarization \"p/q,p/q,..\"");
    o.text(sub, "genera", "genera (default all 0)");
    o.text(sub, "k", "ranks of the node maps \"k1,..\"");
    o.text(sub, "sigma", "gluing datum JSON; its ranks give k");
    o.flag(sub, "strict", "require strict inequalities");
    o.text(sub, "mk-semistable", "per-component 0/1 flags");
    o.flag(sub, "mk-stable-any", "some component satisfies the stable version");
    o.text(sub, "restriction-semistable", "per-component 0/1 flags");
    o.flag(sub, "restriction-stable-any", "some restriction is stable");
  }
  {
    auto& [sub, o] = add("glue", "numerical data of a gluing datum");
    o.text(sub, "input", "gluing datum JSON {\"r\":..,\"matrices\":[..],\"euler\":[..]}");
    o.text(sub, "chi", "Euler vector (overrides \"euler\" in the input)");
  }
  {
    auto& [sub, o] = add("polarize", "construct a polarization making the Euler vector stable");
    o.text(sub, "r", "rank");
    o.text(sub, "chi", "Euler vector \"c1,c2,..\"");
    o.text(sub, "oracle-den", "also run the grid search with this denominator");
  }
  {
    auto& [sub, o] = add("components", "enumerate irreducible components with rationality verdicts");
    o.text(sub, "genera", "genera \"g1,g2,..\"");
    o.text(sub, "r", "rank");
    o.text(sub, "chi", "total Euler characteristic");
    o.text(sub, "w", "polarization; sampled generically from --seed when absent");
  }
  std::string oracle_name;
  {
    auto& [sub, o] = add("oracle", "cross-check a library routine against brute force");
    sub->add_option("check", oracle_name, "subset | rank | feasibility | implication | enumeration");
    o.text(sub, "r", "rank");
    o.text(sub, "chi", "Euler vector, or total chi for enumeration");
    o.text(sub, "w", "polarization");
    o.text(sub, "genera", "genera");
    o.text(sub, "matrix", "matrix \"a,b;c,d\"");
    o.text(sub, "input", "matrix JSON file");
    o.text(sub, "oracle-den", "grid denominator (default 64)");
    o.text(sub, "n", "chain length for the implication sweep");
    o.text(sub, "chi-min", "sweep range lower end");
    o.text(sub, "chi-max", "sweep range upper end");
    o.text(sub, "den", "weight grid denominator (default 6)");
  }

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kInvalidInput;
  }

  try {
    Json config = Json::object();
    if (global.has("config")) {
      config = load_json_file(global.get("config"));
      if (!config.is_object()) throw InvalidInput("config must be a JSON object");
    }

    std::string name;
    for (auto& [n, slot] : commands) {
      if (slot.first->parsed()) name = n;
    }
    if (name.empty() && config.contains("command")) name = config["command"].get<std::string>();
    if (name.empty()) {
      err << app.help();
      return kInvalidInput;
    }
    if (!commands.contains(name)) throw InvalidInput("unknown command '" + name + "'");
    auto& opts = commands.at(name).second;

    const Json* config_flags = nullptr;
    for (const auto& [raw_key, value] : config.items()) {
      std::string key = raw_key;
      std::replace(key.begin(), key.end(), '_', '-');
      if (raw_key == "command" || raw_key == "config") continue;
      if (name == "check" && raw_key == "component_flags") {
        config_flags = &value;
      } else if (name == "oracle" && raw_key == "check") {
        if (oracle_name.empty()) oracle_name = value.get<std::string>();
      } else if (key == "chi-vec" && opts.knows("chi")) {
        opts.fill_from("chi", value);
      } else if (opts.knows(key)) {
        opts.fill_from(key, value);
      } else if (global.knows(key)) {
        global.fill_from(key, value);
      } else {
        throw InvalidInput("unknown config key '" + raw_key + "' for command " + name);
      }
    }

    std::uint64_t seed = 0;
    if (global.has("seed")) {
      try {
        seed = std::stoull(global.get("seed"));
      } catch (const std::exception&) {
        throw InvalidInput("--seed must be a non-negative integer");
      }
    }

    Outcome outcome;
    if (name == "chi") outcome = cmd_chi(opts);
    else if (name == "dim") outcome = cmd_dim(opts);
    else if (name == "slope") outcome = cmd_slope(opts);
    else if (name == "check") outcome = cmd_check(opts, config_flags);
    else if (name == "glue") outcome = cmd_glue(opts);
    else if (name == "polarize") outcome = cmd_polarize(opts);
    else if (name == "components") outcome = cmd_components(opts, seed);
    else if (name == "oracle") outcome = cmd_oracle(opts, oracle_name);

    const std::string text = outcome.body.dump();
    std::string rendered = global.on("pretty") ? render_pretty(text) : text + "\n";
    if (global.has("output")) {
      std::ofstream file(global.get("output"));
      if (!file) throw InvalidInput("cannot write " + global.get("output"));
      file << rendered;
    } else {
      out << rendered;
    }
    return outcome.code;
  } catch (const ValidationError& e) {
    err << "error: " << e.what() << " (index " << e.index() << ")\n";
    return kInvalidInput;
  } catch (const InvalidInput& e) {
    err << "error: " << e.what() << '\n';
    return kInvalidInput;
  } catch (const Json::exception& e) {
    err << "error: " << e.what() << '\n';
    return kInvalidInput;
  } catch (const Infeasible& e) {
    err << "infeasible: " << e.what() << '\n';
    return kNegative;
  } catch (const Degenerate& e) {
    err << "degenerate: " << e.what() << '\n';
    return kNegative;
  } catch (const InvariantViolation& e) {
    err << "invariant violation: " << e.what() << '\n';
    return kInvariantBreach;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    return kInvariantBreach;
  }
}

}  // namespace chainmod::cli
