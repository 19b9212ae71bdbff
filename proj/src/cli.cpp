#include "tunnel_atlas/cli.hpp"

#include "tunnel_atlas/bridge.hpp"
#include "tunnel_atlas/cabling.hpp"
#include "tunnel_atlas/errors.hpp"
#include "tunnel_atlas/oracle.hpp"
#include "tunnel_atlas/torus.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cstdlib>
#include <functional>
#include <limits>
#include <sstream>
#include <stdexcept>

namespace tunnel_atlas::cli {

using json = nlohmann::ordered_json;

namespace {

std::string render_inline(const json& value) {
  if (value.is_string()) {
    return value.get<std::string>();
  }
  if (value.is_boolean()) {
    return value.get<bool>() ? "true" : "false";
  }
  if (value.is_null()) {
    return "none";
  }
  std::string out;
  if (value.is_array()) {
    out += '[';
    for (std::size_t i = 0; i < value.size(); ++i) {
      out += (i ? ", " : "") + render_inline(value[i]);
    }
    return out + ']';
  }
  out += '{';
  bool first = true;
  for (const auto& [key, item] : value.items()) {
    out += (first ? "" : ", ") + key + ": " + render_inline(item);
    first = false;
  }
  return out + '}';
}

void render_block(std::ostream& os, const char* title, const json& object) {
  os << title << ":\n";
  for (const auto& [key, value] : object.items()) {
    if (value.is_array() && !value.empty() && value.front().is_object()) {
      os << "  " << key << ":\n";
      for (const auto& item : value) {
        os << "    - " << render_inline(item) << '\n';
      }
    } else {
      os << "  " << key << ": " << render_inline(value) << '\n';
    }
  }
}

} // namespace

json OutputDocument::to_json() const {
  json doc;
  doc["command"] = command;
  doc["inputs"] = inputs;
  doc["results"] = results;
  doc["warnings"] = warnings;
  return doc;
}

std::string OutputDocument::to_text() const {
  std::ostringstream os;
  for (const auto& line : summary) {
    os << line << '\n';
  }
  if (!summary.empty()) {
    os << '\n';
  }
  os << "command: " << command << '\n';
  render_block(os, "inputs", inputs);
  render_block(os, "results", results);
  if (!warnings.empty()) {
    os << "warnings:\n";
    for (const auto& w : warnings) {
      os << "  - " << w << '\n';
    }
  }
  return os.str();
}

namespace {

/// Input the user got wrong that is not one of the library's own errors.
class UsageError : public Error {
public:
  using Error::Error;
};

/// A computed table broke one of its own invariants.
class InvariantViolation : public std::logic_error {
public:
  using std::logic_error::logic_error;
};

std::string decimal_join(const std::vector<BigInt>& values) {
  std::string out;
  for (std::size_t i = 0; i < values.size(); ++i) {
    out += (i ? ", " : "") + to_decimal(values[i]);
  }
  return out;
}

json decimal_array(const std::vector<BigInt>& values) {
  json arr = json::array();
  for (const auto& v : values) {
    arr.push_back(to_decimal(v));
  }
  return arr;
}

BigInt parse_integer(const std::string& text, const std::string& name) {
  BigInt value;
  if (!parse_decimal(text, value)) {
    throw UsageError(name + " must be an integer, got '" + text + "'");
  }
  return value;
}

long parse_small(const std::string& text, const std::string& name) {
  const BigInt value = parse_integer(text, name);
  if (!value.fits_slong_p()) {
    throw UsageError(name + " is out of range: " + text);
  }
  return value.get_si();
}

struct PathOptions {
  std::string input;
  bool empty = false;
  bool force_binary = false;
  bool force_steps = false;
};

void add_path_options(CLI::App* sub, PathOptions& opts, const std::string& what) {
  sub->add_option("input", opts.input, what + ": binary word (0/1) or step sequence (D/L/R)");
  sub->add_flag("--empty", opts.empty, "Use the empty binary word");
  auto* b = sub->add_flag("--binary", opts.force_binary, "Read input as a binary word");
  auto* s = sub->add_flag("--steps", opts.force_steps, "Read input as a step sequence");
  b->excludes(s);
}

/// Resolves either encoding to a binary word and records both in inputs.
BinaryWord read_path(const PathOptions& opts, json& inputs) {
  BinaryWord word;
  if (opts.empty) {
    if (!opts.input.empty()) {
      throw UsageError("--empty given together with a non-empty input");
    }
    if (opts.force_steps) {
      throw UsageError("the empty word has no step sequence form shorter than DR");
    }
  } else {
    if (opts.input.empty()) {
      throw UsageError("empty input requires explicit --empty flag");
    }
    Encoding enc = opts.force_binary  ? Encoding::binary
                   : opts.force_steps ? Encoding::steps
                                      : detect_encoding(opts.input);
    word = enc == Encoding::binary ? parse_binary(opts.input)
                                   : steps_to_binary(parse_steps(opts.input));
    inputs["encoding"] = enc == Encoding::binary ? "binary" : "steps";
  }
  inputs["word"] = word.str();
  return word;
}

OutputDocument cmd_depth(const PathOptions& opts) {
  OutputDocument doc;
  doc.command = "depth";
  const BinaryWord word = read_path(opts, doc.inputs);
  const StepSequence steps = binary_to_steps(word);
  const CablingProfile p = profile(word);
  if (depth_of_steps(steps) != p.depth) {
    throw InvariantViolation("depth from blocks of ones and from D steps disagree");
  }
  doc.results["depth"] = std::to_string(p.depth);
  doc.results["cabling_count"] = std::to_string(p.cabling_count);
  doc.results["semisimple_count"] = std::to_string(p.semisimple_count);
  doc.results["regular"] = p.regular;
  doc.results["binary"] = word.str();
  doc.results["steps"] = steps.str();
  return doc;
}

OutputDocument cmd_convert(const PathOptions& opts) {
  OutputDocument doc;
  doc.command = "convert";
  const BinaryWord word = read_path(opts, doc.inputs);
  doc.results["binary"] = word.str();
  doc.results["steps"] = binary_to_steps(word).str();
  return doc;
}

OutputDocument cmd_fib(const PathOptions& opts, const std::string& a_text, const std::string& b_text,
                       bool with_trace) {
  OutputDocument doc;
  doc.command = "fib";
  const BinaryWord word = read_path(opts, doc.inputs);
  const SeedPair<BigInt> seed{parse_integer(a_text, "a"), parse_integer(b_text, "b")};
  doc.inputs["seed"] = decimal_array({seed.a, seed.b});
  const IterationTrace<BigInt> trace = fibonacci_trace(word, seed);
  const std::string value = to_decimal(trace.back());
  doc.summary.push_back("F_tau( " + to_decimal(seed.a) + ", " + to_decimal(seed.b) + " ) = " + value);
  doc.results["value"] = value;
  if (with_trace) {
    doc.summary.push_back("The iteration sequence is:");
    doc.summary.push_back("   " + decimal_join(trace));
    doc.results["trace"] = decimal_array(trace);
  }
  return doc;
}

OutputDocument cmd_bridge_set(const PathOptions& opts) {
  OutputDocument doc;
  doc.command = "bridge-set";
  const BinaryWord word = read_path(opts, doc.inputs);
  if (!word.has_one()) {
    throw NotRegular();
  }
  const auto candidates = bridge_set_candidates(word);
  std::vector<BigInt> values;
  json labelled = json::array();
  for (const auto& c : candidates) {
    values.push_back(c.value);
    json entry;
    entry["seed"] = decimal_array({c.seed.a, c.seed.b});
    entry["value"] = to_decimal(c.value);
    labelled.push_back(entry);
  }
  doc.summary.push_back("[" + decimal_join(values) + "]");
  doc.results["semisimple_count"] = std::to_string(semisimple_count(word));
  doc.results["values"] = decimal_array(values);
  doc.results["candidates"] = labelled;
  return doc;
}

struct BoundsOptions {
  std::string min_depth;
  std::string torus_min_depth;
  std::vector<std::string> max;
  std::string semisimple;
};

OutputDocument cmd_bounds(const BoundsOptions& opts) {
  OutputDocument doc;
  doc.command = "bounds";
  const int chosen = !opts.min_depth.empty() + !opts.torus_min_depth.empty() + !opts.max.empty() +
                     !opts.semisimple.empty();
  if (chosen != 1) {
    throw UsageError(
        "bounds needs exactly one of --min-depth, --torus-min-depth, --max, --semisimple");
  }
  if (!opts.min_depth.empty()) {
    const long d = parse_small(opts.min_depth, "depth");
    doc.inputs["depth"] = std::to_string(d);
    const std::string value = to_decimal(min_bridge(d));
    doc.summary.push_back("minimum bridge number at depth " + std::to_string(d) + ": " + value);
    doc.results["kind"] = to_string(BoundKind::min_by_depth);
    doc.results["value"] = value;
  } else if (!opts.torus_min_depth.empty()) {
    const long d = parse_small(opts.torus_min_depth, "depth");
    doc.inputs["depth"] = std::to_string(d);
    const std::string value = to_decimal(torus_min_bridge(d));
    doc.summary.push_back("minimum torus knot bridge number at depth " + std::to_string(d) + ": " +
                          value);
    doc.results["kind"] = to_string(BoundKind::torus_min_by_depth);
    doc.results["value"] = value;
  } else if (!opts.max.empty()) {
    const long n = parse_small(opts.max[0], "n");
    doc.inputs["cabling_count"] = std::to_string(n);
    std::string value;
    if (opts.max.size() == 2) {
      const long m = parse_small(opts.max[1], "m");
      doc.inputs["semisimple_count"] = std::to_string(m);
      value = to_decimal(max_bridge(n, m));
      doc.summary.push_back("maximum bridge number for n = " + std::to_string(n) +
                            ", m = " + std::to_string(m) + ": " + value);
      doc.results["kind"] = to_string(BoundKind::max_by_cablings);
    } else {
      value = to_decimal(max_bridge_overall(n));
      doc.summary.push_back("maximum bridge number for n = " + std::to_string(n) + ": " + value);
      doc.results["kind"] = to_string(BoundKind::max_overall);
    }
    doc.results["value"] = value;
  } else {
    const long n = parse_small(opts.semisimple, "n");
    doc.inputs["cabling_count"] = std::to_string(n);
    const auto range = semisimple_range(n);
    doc.summary.push_back("semisimple bridge numbers lie in [" + to_decimal(range.low) + ", " +
                          to_decimal(range.high) + "]");
    doc.results["kind"] = to_string(range.kind);
    doc.results["low"] = to_decimal(range.low);
    doc.results["high"] = to_decimal(range.high);
  }
  return doc;
}

struct TorusOptions {
  std::string p;
  std::string q;
  bool table = false;
  std::string convention = "offset";
};

json matrix_json(const Matrix2<BigInt>& m) {
  return json::array({decimal_array({m(0, 0), m(0, 1)}), decimal_array({m(1, 0), m(1, 1)})});
}

OutputDocument cmd_torus(const TorusOptions& opts) {
  OutputDocument doc;
  doc.command = "torus";
  const BigInt p = parse_integer(opts.p, "p");
  const BigInt q = parse_integer(opts.q, "q");
  doc.inputs["p"] = to_decimal(p);
  doc.inputs["q"] = to_decimal(q);
  const ShortcutConvention convention =
      opts.convention == "literal" ? ShortcutConvention::literal : ShortcutConvention::offset;

  const NormalizedTorus<BigInt> params = normalize_torus_params(p, q);
  const TorusTunnelTable<BigInt> table = invariant_table(params);
  if (!all_unimodular(table)) {
    throw InvariantViolation("a product matrix has determinant other than 1");
  }
  if (!(table.rows.back().knot == TorusKnot<BigInt>{table.p, table.q})) {
    throw InvariantViolation("last cabling does not produce the input torus knot");
  }
  const BridgeCrossCheck<BigInt> check = bridge_cross_check(table);
  if (!check.passed) {
    throw InvariantViolation("Fibonacci function of the middle tunnel gives " +
                             to_decimal(check.value) + ", expected bridge number " +
                             to_decimal(table.q));
  }
  const std::size_t shortcut = torus_depth_shortcut(table.cf, convention);

  doc.summary.push_back("(" + to_decimal(table.p) + ", " + to_decimal(table.q) + ") torus knot" +
                        (table.mirrored ? " (mirrored)" : "") + ", middle tunnel");
  doc.summary.push_back("p/q = [" + decimal_join(table.cf.terms) + "]");
  doc.summary.push_back("binary invariants: " +
                        (table.word.empty() ? std::string("(empty)") : table.word.str()));
  doc.summary.push_back("depth " + std::to_string(table.depth));

  doc.results["p"] = to_decimal(table.p);
  doc.results["q"] = to_decimal(table.q);
  doc.results["mirrored"] = table.mirrored;
  doc.results["continued_fraction"] = decimal_array(table.cf.terms);
  doc.results["letters"] = table.letters.str();
  doc.results["cabling_count"] = std::to_string(table.cabling_count());
  doc.results["word"] = table.word.str();
  doc.results["depth"] = std::to_string(table.depth);
  doc.results["bridge_number"] = to_decimal(table.q);
  json bridge;
  bridge["regular"] = check.regular;
  if (check.regular) {
    bridge["seed"] = decimal_array({check.seed.a, check.seed.b});
    bridge["value"] = to_decimal(check.value);
  }
  bridge["passed"] = check.passed;
  doc.results["bridge_check"] = bridge;
  json sc;
  sc["convention"] = to_string(convention);
  sc["depth"] = std::to_string(shortcut);
  doc.results["shortcut"] = sc;

  if (opts.table) {
    json rows = json::array();
    for (std::size_t t = 0; t < table.rows.size(); ++t) {
      const auto& row = table.rows[t];
      json r;
      r["t"] = std::to_string(t);
      r["matrix"] = matrix_json(row.product);
      r["slope"] = slope_string(row.slope);
      r["knot"] = decimal_array({row.knot.p, row.knot.q});
      rows.push_back(r);
    }
    doc.results["rows"] = rows;
  }

  if (shortcut != table.depth) {
    doc.warnings.push_back(std::string(to_string(convention)) + " shortcut depth " +
                           std::to_string(shortcut) + " differs from authoritative depth " +
                           std::to_string(table.depth) + " (binary invariants)");
  }
  return doc;
}

struct SearchOptions {
  std::string min_depth;
  std::string max_length;
  std::vector<std::string> max;
  std::vector<std::string> seed;
  bool admissible = false;
  unsigned workers = 0;
};

std::size_t enumeration_cap() {
  const char* env = std::getenv(kCapEnvVar);
  if (env == nullptr || *env == '\0') {
    return kDefaultLengthCap;
  }
  const long cap = parse_small(env, kCapEnvVar);
  if (cap < 0 || cap > 40) {
    throw UsageError(std::string(kCapEnvVar) + " must lie in [0, 40], got " + env);
  }
  return static_cast<std::size_t>(cap);
}

json witnesses_json(const SearchReport& report) {
  json arr = json::array();
  for (const auto& w : report.witnesses) {
    json item;
    item["word"] = w.word.str();
    if (w.seed) {
      item["seed"] = decimal_array({w.seed->a, w.seed->b});
    } else {
      item["seed"] = nullptr;
    }
    arr.push_back(item);
  }
  return arr;
}

OutputDocument cmd_search(const SearchOptions& opts) {
  OutputDocument doc;
  doc.command = "search";
  const bool min_mode = !opts.min_depth.empty();
  if (min_mode == !opts.max.empty()) {
    throw UsageError("search needs exactly one of --min-depth or --max");
  }
  if (opts.admissible && !opts.seed.empty()) {
    throw UsageError("--seed and --admissible-seeds are exclusive");
  }
  SearchConfig config;
  config.length_cap = enumeration_cap();
  config.workers = opts.workers;

  SeedPolicy seeds = min_mode ? SeedPolicy::fixed(2, 2) : SeedPolicy::admissible();
  if (opts.admissible) {
    seeds = SeedPolicy::admissible();
  } else if (!opts.seed.empty()) {
    seeds = SeedPolicy::fixed(parse_small(opts.seed[0], "seed a"), parse_small(opts.seed[1], "seed b"));
  }

  SearchReport report;
  std::string formula;
  if (min_mode) {
    if (opts.max_length.empty()) {
      throw UsageError("--min-depth needs --max-length");
    }
    const long d = parse_small(opts.min_depth, "depth");
    const long len = parse_small(opts.max_length, "max length");
    if (len < 0) {
      throw UsageError("max length must be non-negative");
    }
    doc.inputs["depth"] = std::to_string(d);
    doc.inputs["max_length"] = std::to_string(len);
    report = min_bridge_search(static_cast<std::size_t>(len), d, config, seeds);
    formula = to_decimal(min_bridge(d));
    doc.results["kind"] = "min_by_depth";
  } else {
    if (!opts.max_length.empty()) {
      throw UsageError("--max-length applies only to --min-depth");
    }
    const long n = parse_small(opts.max[0], "n");
    const long m = parse_small(opts.max[1], "m");
    doc.inputs["cabling_count"] = std::to_string(n);
    doc.inputs["semisimple_count"] = std::to_string(m);
    report = max_bridge_search(n, m, config, seeds);
    formula = to_decimal(max_bridge(n, m));
    doc.results["kind"] = "max_by_cablings";
  }
  doc.inputs["seeds"] = seeds.str();

  const std::string value = to_decimal(report.value);
  doc.summary.push_back(std::string(min_mode ? "minimum" : "maximum") + " found: " + value +
                        " (formula " + formula + ")");
  doc.summary.push_back("certified over words of length <= " + std::to_string(report.horizon) + "; " +
                        std::to_string(report.examined) + " words examined");
  doc.results["value"] = value;
  doc.results["formula"] = formula;
  doc.results["agrees"] = value == formula;
  doc.results["horizon"] = std::to_string(report.horizon);
  doc.results["examined"] = std::to_string(report.examined);
  doc.results["candidates"] = std::to_string(report.candidates);
  doc.results["witnesses"] = witnesses_json(report);
  if (value != formula) {
    doc.warnings.push_back("search value " + value + " differs from formula value " + formula);
  }
  return doc;
}

void emit(const OutputDocument& doc, OutputFormat format, std::ostream& out) {
  if (format == OutputFormat::json) {
    out << doc.to_json().dump(2) << '\n';
  } else {
    out << doc.to_text();
  }
  out.flush();
}

int report_error(const std::string& command, const std::string& kind, const std::string& message,
                 int code, OutputFormat format, std::ostream& out, std::ostream& err) {
  err << "error: " << message << '\n';
  if (format == OutputFormat::json) {
    json doc;
    doc["command"] = command;
    doc["error"] = {{"kind", kind}, {"message", message}};
    doc["warnings"] = json::array();
    out << doc.dump(2) << '\n';
  }
  return code;
}

const char* error_kind(const Error& e) {
  if (dynamic_cast<const ParseError*>(&e)) return "ParseError";
  if (dynamic_cast<const NotRegular*>(&e)) return "NotRegular";
  if (dynamic_cast<const InvalidSeed*>(&e)) return "InvalidSeed";
  if (dynamic_cast<const NotCoprime*>(&e)) return "NotCoprime";
  if (dynamic_cast<const TrivialKnot*>(&e)) return "TrivialKnot";
  if (dynamic_cast<const OutOfRange*>(&e)) return "OutOfRange";
  if (dynamic_cast<const SearchError*>(&e)) return "SearchError";
  return "InvalidInput";
}

bool requests_json(const std::vector<std::string>& args) {
  for (std::size_t i = 0; i < args.size(); ++i) {
    if (args[i] == "--format=json" || (args[i] == "--format" && i + 1 < args.size() && args[i + 1] == "json")) {
      return true;
    }
  }
  return false;
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Invariants of tunnel number one knot tunnels", "tunnel-atlas"};
  app.require_subcommand(1);
  std::string format_name = "text";
  app.add_option("--format", format_name, "Output format")
      ->check(CLI::IsMember({"text", "json"}))
      ->capture_default_str();
  app.fallthrough();

  PathOptions depth_opts;
  auto* depth = app.add_subcommand("depth", "Depth, cabling count and semisimple count of a tunnel");
  add_path_options(depth, depth_opts, "principal path");

  PathOptions convert_opts;
  auto* convert = app.add_subcommand("convert", "Convert between binary word and step sequence");
  add_path_options(convert, convert_opts, "principal path");

  PathOptions fib_opts;
  std::string fib_a;
  std::string fib_b;
  bool fib_trace = false;
  auto* fib = app.add_subcommand("fib", "Evaluate the Fibonacci function F_tau(a, b)");
  add_path_options(fib, fib_opts, "principal path");
  fib->add_option("a", fib_a, "Bridge number of tau_{m-2}")->required();
  fib->add_option("b", fib_b, "Bridge number of tau_{m-1}")->required();
  fib->add_flag("--trace", fib_trace, "Print the iteration sequence");

  PathOptions set_opts;
  auto* bridge_set_cmd = app.add_subcommand("bridge-set", "The 2m-2 candidate bridge numbers");
  add_path_options(bridge_set_cmd, set_opts, "principal path");

  BoundsOptions bounds_opts;
  auto* bounds = app.add_subcommand("bounds", "Extremal bridge-number bounds");
  bounds->add_option("--min-depth", bounds_opts.min_depth, "Minimum over all knots at depth D");
  bounds->add_option("--torus-min-depth", bounds_opts.torus_min_depth,
                     "Minimum over torus knots at depth D");
  bounds->add_option("--max", bounds_opts.max, "Maximum for n cablings, optionally m semisimple")
      ->expected(1, 2);
  bounds->add_option("--semisimple", bounds_opts.semisimple, "Range for a semisimple tunnel of n cablings");

  TorusOptions torus_opts;
  auto* torus = app.add_subcommand("torus", "Invariants of the middle tunnel of a (p, q) torus knot");
  torus->add_option("p", torus_opts.p, "First torus parameter")->required();
  torus->add_option("q", torus_opts.q, "Second torus parameter")->required();
  torus->add_flag("--table", torus_opts.table, "Print matrix, slope and knot for every cabling");
  torus->add_option("--shortcut-convention", torus_opts.convention,
                    "Which terms the continued-fraction depth shortcut reads")
      ->check(CLI::IsMember({"literal", "offset"}))
      ->capture_default_str();

  SearchOptions search_opts;
  auto* search = app.add_subcommand("search", "Exhaustive certification of the extremal formulas");
  search->add_option("--min-depth", search_opts.min_depth, "Minimize over regular words of depth d");
  search->add_option("--max-length", search_opts.max_length, "Longest word examined");
  search->add_option("--max", search_opts.max, "Maximize over words with n cablings, m semisimple")
      ->expected(2);
  search->add_option("--seed", search_opts.seed, "Evaluate at a fixed seed pair")->expected(2);
  search->add_flag("--admissible-seeds", search_opts.admissible,
                   "Evaluate at every admissible seed pair");
  search->add_option("--workers", search_opts.workers, "Worker threads (0: all cores)");

  // CLI11 consumes arguments from the back.
  std::vector<std::string> reversed(args.rbegin(), args.rend());
  OutputFormat format = OutputFormat::text;
  try {
    app.parse(reversed);
  } catch (const CLI::Success& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    if (requests_json(args)) {
      format = OutputFormat::json;
    }
    std::string command = app.get_subcommands().empty() ? "" : app.get_subcommands().front()->get_name();
    return report_error(command, "UsageError", e.what(), kExitInvalidInput, format, out, err);
  }
  format = format_name == "json" ? OutputFormat::json : OutputFormat::text;
  const std::string command = app.get_subcommands().front()->get_name();

  try {
    OutputDocument doc;
    if (*depth) {
      doc = cmd_depth(depth_opts);
    } else if (*convert) {
      doc = cmd_convert(convert_opts);
    } else if (*fib) {
      doc = cmd_fib(fib_opts, fib_a, fib_b, fib_trace);
    } else if (*bridge_set_cmd) {
      try {
        doc = cmd_bridge_set(set_opts);
      } catch (const NotRegular&) {
        throw NotRegular(
            "word has no 1, so the tunnel is simple or semisimple and has no bridge set; "
            "use `bounds --semisimple n` for its range");
      }
    } else if (*bounds) {
      doc = cmd_bounds(bounds_opts);
    } else if (*torus) {
      doc = cmd_torus(torus_opts);
    } else {
      doc = cmd_search(search_opts);
    }
    emit(doc, format, out);
    return kExitOk;
  } catch (const UsageError& e) {
    return report_error(command, "UsageError", e.what(), kExitInvalidInput, format, out, err);
  } catch (const Error& e) {
    return report_error(command, error_kind(e), e.what(), kExitInvalidInput, format, out, err);
  } catch (const std::logic_error& e) {
    return report_error(command, "InternalError", e.what(), kExitInternal, format, out, err);
  }
}

} // namespace tunnel_atlas::cli
