#include "davkit/cli.hpp"

#include <algorithm>
#include <chrono>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

#include "davkit/bounds.hpp"
#include "davkit/constructions.hpp"
#include "davkit/inverse.hpp"
#include "davkit/reorder.hpp"
#include "davkit/search.hpp"
#include "davkit/zerosum.hpp"

namespace davkit::cli {

namespace {

constexpr std::pair<Command, const char*> kCommands[] = {
    {Command::kDavenport, "davenport"}, {Command::kAtoms, "atoms"},       {Command::kCheckMinimal, "check-minimal"},
    {Command::kReorder, "reorder"},     {Command::kBounds, "bounds"},     {Command::kConstruct, "construct"},
    {Command::kClassify, "classify"},   {Command::kVerify, "verify"},     {Command::kHuntChiGap, "hunt-chi-gap"},
};

const std::map<Command, std::set<std::string>> kAllowedKeys{
    {Command::kDavenport, {"cap", "threads", "time_limit", "max_nodes"}},
    {Command::kAtoms, {"length", "threads", "time_limit", "max_nodes"}},
    {Command::kCheckMinimal, {"sequence"}},
    {Command::kReorder, {"sequence", "seed_element"}},
    {Command::kBounds, {"m", "M", "d", "n"}},
    {Command::kConstruct, {"kind", "m", "M", "d", "n", "x", "y", "u"}},
    {Command::kClassify, {"sequence", "m", "M"}},
    {Command::kVerify, {"kind", "m", "max_sum", "threads"}},
    {Command::kHuntChiGap, {"max_abs", "max_size", "threads", "time_limit"}},
};

struct Report {
  json result = json::object();
  std::vector<std::string> provenance;
  std::optional<bool> exact;
  json stats = json::object();
  int exit_code = kOk;
  // Rows for CSV output; empty when the command has no tabular form.
  std::vector<std::vector<std::string>> rows;
  std::vector<std::string> header;
};

// ---- parameter access ------------------------------------------------------

i64 parse_int(const std::string& key, const std::string& text) {
  std::size_t used = 0;
  i64 v = 0;
  try {
    v = std::stoll(text, &used);
  } catch (const std::exception&) {
    throw InvalidArgument("parameter " + key + " must be an integer, got '" + text + "'");
  }
  if (used != text.size()) throw InvalidArgument("parameter " + key + " must be an integer, got '" + text + "'");
  return v;
}

std::optional<i64> int_param(const json& p, const std::string& key) {
  if (!p.contains(key)) return std::nullopt;
  const auto& v = p.at(key);
  if (v.is_number_integer()) return v.get<i64>();
  if (v.is_string()) return parse_int(key, v.get<std::string>());
  throw InvalidArgument("parameter " + key + " must be an integer");
}

i64 require_int(const json& p, const std::string& key) {
  auto v = int_param(p, key);
  if (!v) throw InvalidArgument("missing parameter " + key);
  return *v;
}

std::optional<std::string> str_param(const json& p, const std::string& key) {
  if (!p.contains(key)) return std::nullopt;
  const auto& v = p.at(key);
  if (v.is_string()) return v.get<std::string>();
  if (v.is_number_integer()) return std::to_string(v.get<i64>());
  throw InvalidArgument("parameter " + key + " must be a string");
}

// "3", "2..5" or "2,3,7".
std::vector<i64> int_list_param(const json& p, const std::string& key) {
  auto text = str_param(p, key);
  if (!text) throw InvalidArgument("missing parameter " + key);
  std::vector<i64> out;
  if (auto dots = text->find(".."); dots != std::string::npos) {
    const i64 lo = parse_int(key, text->substr(0, dots));
    const i64 hi = parse_int(key, text->substr(dots + 2));
    if (lo > hi) throw InvalidArgument("empty range for " + key);
    if (hi - lo > 1000) throw InvalidArgument("range for " + key + " is too long");
    for (i64 v = lo; v <= hi; ++v) out.push_back(v);
    return out;
  }
  std::stringstream ss(*text);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(parse_int(key, item));
  if (out.empty()) throw InvalidArgument("empty list for " + key);
  return out;
}

SearchOptions search_options(const json& p, const RunContext& ctx) {
  SearchOptions o;
  if (auto v = int_param(p, "cap")) o.cap = *v;
  if (auto v = int_param(p, "threads")) {
    if (*v < 0) throw InvalidArgument("threads must be >= 0");
    o.threads = static_cast<unsigned>(*v);
  }
  if (p.contains("time_limit")) {
    const auto& t = p.at("time_limit");
    if (!t.is_number()) throw InvalidArgument("time_limit must be a number of seconds");
    o.time_limit_seconds = t.get<double>();
  }
  if (auto v = int_param(p, "max_nodes")) {
    if (*v < 0) throw InvalidArgument("max_nodes must be >= 0");
    o.max_nodes = static_cast<std::uint64_t>(*v);
  }
  if (ctx.guard) o.element_cap = *ctx.guard;
  if (ctx.progress) {
    // Quiet for the first second, then at most one line per second.
    auto last = std::make_shared<std::chrono::steady_clock::time_point>(std::chrono::steady_clock::now());
    o.progress = [sink = ctx.progress, last](const SearchProgress& pr) {
      const auto now = std::chrono::steady_clock::now();
      if (now - *last < std::chrono::seconds(1)) return;
      *last = now;
      sink("branches " + std::to_string(pr.branches_done) + "/" + std::to_string(pr.branches_total) + ", best " +
           std::to_string(pr.best_length) + ", nodes " + std::to_string(pr.nodes));
    };
  }
  return o;
}

json stats_json(const SearchStats& s) {
  return {{"nodes", s.nodes}, {"prunes", s.prunes}, {"atoms_met", s.atoms}, {"seconds", s.seconds}};
}

json sequence_list(const std::vector<Sequence>& v) {
  json a = json::array();
  for (const auto& s : v) a.push_back(to_json(s));
  return a;
}

json text_list(const std::vector<Sequence>& v) {
  json a = json::array();
  for (const auto& s : v) a.push_back(to_string(s));
  return a;
}

json bound_json(const BoundReport& b) {
  return {{"lower", b.lower}, {"upper", b.upper}, {"exact", b.exact}};
}

GroundSet require_ground(const JobSpec& spec) {
  if (spec.ground.empty()) throw InvalidArgument(std::string(command_name(spec.command)) + " needs a ground set");
  return parse_ground_set(spec.ground);
}

std::optional<GroundSet> optional_ground(const JobSpec& spec) {
  if (spec.ground.empty()) return std::nullopt;
  return parse_ground_set(spec.ground);
}

Sequence require_sequence(const json& p, const std::optional<GroundSet>& ground) {
  auto text = str_param(p, "sequence");
  if (!text) throw InvalidArgument("missing parameter sequence");
  Sequence s = parse_sequence(*text, ground ? group_of(*ground) : GroupSpec{});
  if (ground) {
    for (const auto& [e, k] : s.entries()) {
      if (e.lattice.dim() != dim(*ground) || !contains(*ground, e)) {
        throw InvalidArgument("element " + to_string(e) + " is not in " + emit(*ground));
      }
    }
  }
  return s;
}

json bool_or_null(const std::optional<bool>& b) { return b ? json(*b) : json(nullptr); }

// ---- commands --------------------------------------------------------------

Report do_davenport(const JobSpec& spec, const RunContext& ctx) {
  const GroundSet g = require_ground(spec);
  const DavenportResult r = davenport(g, search_options(spec.parameters, ctx));
  Report rep;
  rep.result = {{"value", r.exact ? json(r.lower) : json(nullptr)},
                {"lower", r.lower},
                {"upper", r.upper},
                {"complete", r.complete},
                {"depth", r.depth},
                {"length_bound", length_bound(g)},
                {"closed_form", bound_json(best_bounds(g))},
                {"witness", r.witness ? to_json(*r.witness) : json(nullptr)}};
  rep.provenance = r.provenance;
  rep.exact = r.exact;
  rep.stats = stats_json(r.stats);
  return rep;
}

Report do_atoms(const JobSpec& spec, const RunContext& ctx) {
  const GroundSet g = require_ground(spec);
  const SearchOptions o = search_options(spec.parameters, ctx);
  Report rep;
  std::vector<Sequence> atoms;
  i64 length = 0;
  const auto t0 = std::chrono::steady_clock::now();
  if (auto L = int_param(spec.parameters, "length")) {
    length = *L;
    atoms = atoms_of_length(g, length, o);
    rep.result["length"] = length;
  } else {
    const DavenportResult r = davenport(g, o);
    if (!r.exact) throw CapExceeded("D is not settled within the limits; pass --length");
    length = r.lower;
    atoms = length > 0 ? atoms_of_length(g, length, o) : std::vector<Sequence>{};
    rep.result["length"] = length;
    rep.result["maximal"] = true;
    rep.provenance = r.provenance;
    rep.exact = true;
  }
  rep.result["count"] = atoms.size();
  rep.result["atoms"] = sequence_list(atoms);
  rep.stats = {{"seconds", std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count()}};
  rep.header = {"length", "atom"};
  for (const auto& a : atoms) rep.rows.push_back({std::to_string(a.length()), to_string(a)});
  return rep;
}

Report do_check_minimal(const JobSpec& spec, const RunContext&) {
  const auto g = optional_ground(spec);
  const Sequence s = require_sequence(spec.parameters, g);
  if (s.empty()) throw InvalidArgument("the sequence is empty");
  const bool zero = is_zero_sum(s);
  const auto w = find_proper_zero_subsum(s);
  Report rep;
  rep.result = {{"sequence", to_json(s)},
                {"zero_sum", zero},
                {"minimal", zero && !w},
                {"proper_zero_sum_part", w ? to_json(w->sub) : json(nullptr)}};
  return rep;
}

Report do_reorder(const JobSpec& spec, const RunContext&) {
  const auto g = optional_ground(spec);
  if (g && std::holds_alternative<GroupProduct>(*g)) throw InvalidArgument("reorder works on lattice ground sets");
  const Sequence s = require_sequence(spec.parameters, g);
  const auto flat = s.flatten_lattice();
  std::optional<std::size_t> first;
  if (auto e = str_param(spec.parameters, "seed_element")) {
    const Sequence one = parse_sequence(*e);
    if (one.length() != 1) throw InvalidArgument("seed_element must be a single element");
    const Element target = one.flatten_lattice().front();
    auto it = std::find(flat.begin(), flat.end(), target);
    if (it == flat.end()) throw InvalidArgument("seed element " + to_string(target) + " does not occur");
    first = static_cast<std::size_t>(it - flat.begin());
  }
  Report rep;
  rep.result["sequence"] = to_json(s);
  Ordering ord;
  if (s.dim() == 1) {
    if (!is_minimal(s)) throw NotMinimalOrBadSeed("the sequence is not an atom: not minimal or bad seed");
    ord = nyctalopic_extend(s, {first.value_or(0)});
    Interval x{flat.front().value(), flat.back().value()};
    if (g) {
      auto iv = as_interval(lattice_part(*g));
      if (!iv) throw InvalidArgument("containment needs an interval ground set");
      x = *iv;
    }
    const ContainmentReport c = containment_check(s, ord, x);
    rep.result["method"] = "nyctalopic";
    rep.result["containment"] = {{"interval", emit(as_ground(x))},
                                 {"min_prefix", c.min_prefix},
                                 {"max_prefix", c.max_prefix},
                                 {"left_strict", c.left_strict},
                                 {"right_strict", c.right_strict}};
  } else {
    const GreedyReorder gr = greedy_box_reorder(s, first);
    ord = gr.ordering;
    rep.result["method"] = "greedy_heuristic";
    json box = json::array();
    for (const auto& a : gr.prefix_box) box.push_back({a.lo, a.hi});
    rep.result["prefix_box"] = box;
    rep.result["sup_norm"] = gr.sup_norm;
  }
  json order = json::array();
  json sums = json::array();
  for (auto p : ord.perm) order.push_back(to_json(flat[p]));
  for (const auto& ps : ord.prefix_sums) sums.push_back(to_json(ps));
  rep.result["order"] = order;
  rep.result["positions"] = ord.perm;
  rep.result["prefix_sums"] = sums;
  json checks = {{"prefix_sums_distinct", prefix_sums_distinct(ord)},
                 {"refine_exclusion", refine_exclusion_holds(s, ord)}};
  if (g) {
    checks["pigeonhole"] = pigeonhole_holds(ord, lattice_part(*g));
    checks["pigeonhole_sharp"] = pigeonhole_sharp_holds(s, ord, lattice_part(*g));
  }
  rep.result["checks"] = checks;
  return rep;
}

// Builds the ground set [-m, M], [-m, m]^d, optionally times C_n, from
// parameters.
GroundSet ground_from_parameters(const json& p) {
  const auto m = int_param(p, "m");
  if (!m) throw InvalidArgument("bounds needs a ground set or --m");
  const auto M = int_param(p, "M");
  const auto d = int_param(p, "d");
  const auto n = int_param(p, "n");
  if (*m < 1) throw InvalidArgument("m must be >= 1");
  if (M && d && *d != 1) throw InvalidArgument("--M applies to intervals only");
  LatticeSet base = make_interval(-*m, M.value_or(*m));
  if (d) {
    if (*d < 1 || *d > 64) throw InvalidArgument("d must lie in [1, 64]");
    if (*d > 1) base = make_cube(-*m, *m, static_cast<std::size_t>(*d));
  }
  if (n) return make_product(GroupSpec::cyclic(*n), base);
  return as_ground(base);
}

Report do_bounds(const JobSpec& spec, const RunContext&) {
  const GroundSet g = spec.ground.empty() ? ground_from_parameters(spec.parameters) : parse_ground_set(spec.ground);
  const BoundReport b = best_bounds(g);
  Report rep;
  rep.result = {{"ground", emit(g)}, {"lower", b.lower}, {"upper", b.upper}, {"length_bound", length_bound(g)}};
  rep.provenance = b.provenance;
  rep.exact = b.exact;
  return rep;
}

json construction_json(const Construction& c) {
  const auto p = profile(c.sequence);
  json supports = json::array();
  for (const auto& e : p.supports) supports.push_back(to_json(e));
  return {{"sequence", to_json(c.sequence)},
          {"length", c.sequence.length()},
          {"certificate", to_string(c.certificate)},
          {"profile", {{"supports", supports}, {"mults", p.mults}, {"gcd", p.gcd}}}};
}

Report do_construct(const JobSpec& spec, const RunContext& ctx) {
  const json& p = spec.parameters;
  const auto kind = str_param(p, "kind");
  if (!kind) throw InvalidArgument("construct needs a kind: two-element, interval, hypercube, group-box, power-check");
  Report rep;
  rep.result["kind"] = *kind;
  if (*kind == "two-element") {
    rep.result.update(construction_json(two_element_atom(require_int(p, "x"), require_int(p, "y"))));
  } else if (*kind == "interval") {
    rep.result.update(construction_json(interval_max_atom(require_int(p, "m"), require_int(p, "M"))));
  } else if (*kind == "hypercube") {
    rep.result.update(construction_json(hypercube_atom(require_int(p, "m"), require_int(p, "d"))));
  } else if (*kind == "group-box") {
    rep.result.update(
        construction_json(group_box_atom(require_int(p, "n"), require_int(p, "m"), require_int(p, "d"))));
  } else if (*kind == "power-check") {
    const auto r = power_subsequence_check(require_int(p, "m"), require_int(p, "d"), require_int(p, "u"),
                                           ctx.guard.value_or(kDefaultBruteGuard));
    rep.result["scanned"] = r.scanned;
    rep.result["zero_sum_parts"] = text_list(r.found);
    rep.result["matches"] = r.matches;
    if (!r.matches) rep.exit_code = kConsistency;
  } else {
    throw InvalidArgument("unknown construction kind '" + *kind + "'");
  }
  return rep;
}

Report do_classify(const JobSpec& spec, const RunContext&) {
  const json& p = spec.parameters;
  const Sequence s = require_sequence(p, std::nullopt);
  const i64 m = require_int(p, "m");
  const auto M = int_param(p, "M");
  InverseVerdict v;
  std::string family;
  if (M && *M != m) {
    family = "interval_max";
    v = classify_interval_max(m, *M, s);
  } else if (s.length() == 2 * m - 1) {
    family = "symmetric_max";
    v = classify_symmetric_max(m, s);
  } else if (s.length() == 2 * m - 2) {
    family = "symmetric_submax";
    v = classify_symmetric_submax(m, s);
  } else {
    throw InvalidArgument("length must be 2m - 1 or 2m - 2 (or m + M with --M)");
  }
  const bool minimal = !s.empty() && is_minimal(s);
  if (v.matches != minimal) {
    throw ConsistencyError("classification of " + to_string(s) + " disagrees with the minimality check");
  }
  Report rep;
  rep.result = {{"sequence", to_json(s)},
                {"family", family},
                {"matches", v.matches},
                {"case", case_tag(v.which)},
                {"minimal", minimal}};
  return rep;
}

Report do_verify(const JobSpec& spec, const RunContext& ctx) {
  const json& p = spec.parameters;
  const std::string kind = str_param(p, "kind").value_or("inverse");
  SearchOptions o = search_options(p, ctx);
  Report rep;
  rep.result["kind"] = kind;
  bool ok = true;
  json checks = json::array();
  if (kind == "inverse") {
    const InverseReport r = verify_inverse(int_list_param(p, "m"), o, false);
    for (const auto& c : r.checks) {
      checks.push_back({{"ground", c.ground},
                        {"length", c.length},
                        {"expected", text_list(c.expected)},
                        {"found", text_list(c.found)},
                        {"ok", c.ok}});
    }
    ok = r.ok;
  } else if (kind == "intervals") {
    const i64 max_sum = int_param(p, "max_sum").value_or(12);
    if (max_sum < 2) throw InvalidArgument("max_sum must be >= 2");
    for (i64 total = 2; total <= max_sum; ++total) {
      for (i64 m = 1; m < total; ++m) {
        const i64 M = total - m;
        const DavenportResult r = davenport(make_interval(-m, M), o);
        const BoundReport b = interval_davenport(m, M);
        const bool c_ok = r.exact && r.lower >= b.lower && r.lower <= b.upper;
        ok = ok && c_ok;
        checks.push_back({{"ground", emit(LatticeSet{make_interval(-m, M)})},
                          {"search", r.exact ? json(r.lower) : json(nullptr)},
                          {"closed_form", bound_json(b)},
                          {"ok", c_ok}});
      }
    }
  } else {
    throw InvalidArgument("unknown verify kind '" + kind + "' (inverse or intervals)");
  }
  rep.result["ok"] = ok;
  rep.result["checks"] = checks;
  if (!ok) rep.exit_code = kConsistency;
  return rep;
}

Report do_hunt(const JobSpec& spec, const RunContext& ctx) {
  const json& p = spec.parameters;
  const i64 max_abs = int_param(p, "max_abs").value_or(3);
  const i64 max_size = int_param(p, "max_size").value_or(4);
  if (max_abs < 1 || max_abs > 12) throw InvalidArgument("max_abs must lie in [1, 12]");
  if (max_size < 2) throw InvalidArgument("max_size must be >= 2");
  std::vector<i64> pool;
  for (i64 v = -max_abs; v <= max_abs; ++v) {
    if (v != 0) pool.push_back(v);
  }
  const SearchOptions o = search_options(p, ctx);
  Report rep;
  json gaps = json::array();
  i64 scanned = 0;
  i64 unsettled = 0;
  const auto n = pool.size();
  for (std::uint32_t mask = 1; mask < (1U << n); ++mask) {
    if (std::popcount(mask) > max_size) continue;
    std::vector<i64> xs;
    for (std::size_t i = 0; i < n; ++i) {
      if (mask & (1U << i)) xs.push_back(pool[i]);
    }
    if (xs.front() > 0 || xs.back() < 0) continue;
    ++scanned;
    const DavenportResult r = davenport(make_explicit_values(xs), o);
    if (!r.exact) {
      ++unsettled;
      continue;
    }
    const i64 c = chi(xs);
    if (c < r.lower) {
      gaps.push_back({{"set", emit(LatticeSet{make_explicit_values(xs)})}, {"chi", c}, {"davenport", r.lower},
                      {"witness", to_string(*r.witness)}});
      rep.rows.push_back({emit(LatticeSet{make_explicit_values(xs)}), std::to_string(c), std::to_string(r.lower)});
    }
  }
  rep.header = {"set", "chi", "davenport"};
  rep.result = {{"max_abs", max_abs}, {"max_size", max_size}, {"scanned", scanned}, {"unsettled", unsettled},
                {"gaps", gaps}};
  return rep;
}

Report dispatch(const JobSpec& spec, const RunContext& ctx) {
  switch (spec.command) {
    case Command::kDavenport: return do_davenport(spec, ctx);
    case Command::kAtoms: return do_atoms(spec, ctx);
    case Command::kCheckMinimal: return do_check_minimal(spec, ctx);
    case Command::kReorder: return do_reorder(spec, ctx);
    case Command::kBounds: return do_bounds(spec, ctx);
    case Command::kConstruct: return do_construct(spec, ctx);
    case Command::kClassify: return do_classify(spec, ctx);
    case Command::kVerify: return do_verify(spec, ctx);
    case Command::kHuntChiGap: return do_hunt(spec, ctx);
  }
  throw InvalidArgument("unknown command");
}

void validate_parameters(const JobSpec& spec) {
  if (!spec.parameters.is_object()) throw InvalidArgument("parameters must be an object");
  const auto& allowed = kAllowedKeys.at(spec.command);
  for (const auto& [key, value] : spec.parameters.items()) {
    if (!allowed.contains(key)) {
      throw InvalidArgument("parameter '" + key + "' does not apply to " + command_name(spec.command));
    }
  }
}

// ---- rendering -------------------------------------------------------------

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

void render_text(std::ostringstream& os, const json& j, const std::string& indent) {
  for (const auto& [key, value] : j.items()) {
    if (value.is_object() && value.contains("text") && value.contains("entries")) {
      os << indent << key << ": " << value.at("text").get<std::string>() << " (length "
         << value.at("length").get<i64>() << ")\n";
    } else if (value.is_object()) {
      os << indent << key << ":\n";
      render_text(os, value, indent + "  ");
    } else if (value.is_array() && !value.empty() && (value.front().is_object() || value.front().is_array())) {
      os << indent << key << ":\n";
      for (const auto& item : value) {
        if (item.is_object() && item.contains("text")) {
          os << indent << "  " << item.at("text").get<std::string>() << "\n";
        } else if (item.is_object()) {
          render_text(os, item, indent + "  ");
          os << indent << "  --\n";
        } else {
          os << indent << "  " << item.dump() << "\n";
        }
      }
    } else {
      os << indent << key << ": " << (value.is_string() ? value.get<std::string>() : value.dump()) << "\n";
    }
  }
}

json input_echo(const JobSpec& spec) {
  json in = {{"command", command_name(spec.command)}};
  in["ground"] = spec.ground.empty() ? json(nullptr) : json(spec.ground);
  // The thread count never changes a result, so it stays out of the report.
  json params = spec.parameters;
  params.erase("threads");
  in["parameters"] = params;
  return in;
}

JobResult failure(const JobSpec& spec, int code, const std::string& kind, const std::string& message) {
  JobResult out;
  out.exit_code = code;
  if (spec.output == OutputFormat::kJson) {
    json j = {{"schema", kSchema}, {"input", input_echo(spec)}, {"error", {{"kind", kind}, {"message", message}}}};
    out.output = j.dump(2) + "\n";
  } else {
    out.output = "error (" + kind + "): " + message + "\n";
  }
  return out;
}

}  // namespace

const char* command_name(Command c) {
  for (const auto& [cmd, name] : kCommands) {
    if (cmd == c) return name;
  }
  return "?";
}

Command parse_command(const std::string& name) {
  for (const auto& [cmd, n] : kCommands) {
    if (name == n) return cmd;
  }
  throw InvalidArgument("unknown command '" + name + "'");
}

const char* format_name(OutputFormat f) {
  switch (f) {
    case OutputFormat::kJson: return "json";
    case OutputFormat::kCsv: return "csv";
    case OutputFormat::kText: return "text";
  }
  return "?";
}

OutputFormat parse_format(const std::string& name) {
  if (name == "json") return OutputFormat::kJson;
  if (name == "csv") return OutputFormat::kCsv;
  if (name == "text") return OutputFormat::kText;
  throw InvalidArgument("unknown output format '" + name + "'");
}

json to_json(const JobSpec& spec) {
  return {{"schema", kSchema},
          {"command", command_name(spec.command)},
          {"ground", spec.ground},
          {"parameters", spec.parameters},
          {"output", format_name(spec.output)},
          {"stats", spec.stats}};
}

JobSpec job_spec_from_json(const json& j) {
  if (!j.is_object()) throw InvalidArgument("a job spec must be a JSON object");
  if (j.value("schema", std::string{}) != kSchema) throw InvalidArgument(std::string("job spec schema must be ") + kSchema);
  JobSpec spec;
  try {
    spec.command = parse_command(j.at("command").get<std::string>());
    spec.ground = j.value("ground", std::string{});
    spec.parameters = j.value("parameters", json::object());
    spec.output = parse_format(j.value("output", std::string{"json"}));
    spec.stats = j.value("stats", true);
  } catch (const json::exception& e) {
    throw InvalidArgument(std::string("malformed job spec: ") + e.what());
  }
  return spec;
}

JobResult run(const JobSpec& spec, const RunContext& ctx) {
  Report rep;
  try {
    validate_parameters(spec);
    if (spec.output == OutputFormat::kCsv && spec.command != Command::kAtoms &&
        spec.command != Command::kHuntChiGap) {
      throw InvalidArgument("CSV output is available for atom lists (atoms, hunt-chi-gap) only");
    }
    rep = dispatch(spec, ctx);
  } catch (const ConsistencyError& e) {
    return failure(spec, kConsistency, "consistency", e.what());
  } catch (const CapExceeded& e) {
    return failure(spec, kCapExceeded, "cap_exceeded", e.what());
  } catch (const OverflowError& e) {
    return failure(spec, kCapExceeded, "overflow", e.what());
  } catch (const InvalidArgument& e) {
    return failure(spec, kUsage, "usage", e.what());
  } catch (const Error& e) {
    return failure(spec, kUsage, "error", e.what());
  }

  JobResult out;
  out.exit_code = rep.exit_code;
  std::ostringstream os;
  switch (spec.output) {
    case OutputFormat::kJson: {
      json j = {{"schema", kSchema}, {"input", input_echo(spec)}, {"result", rep.result}};
      j["provenance"] = rep.provenance;
      j["exact"] = bool_or_null(rep.exact);
      if (spec.stats && !rep.stats.empty()) j["stats"] = rep.stats;
      os << j.dump(2) << "\n";
      break;
    }
    case OutputFormat::kCsv: {
      for (std::size_t i = 0; i < rep.header.size(); ++i) os << (i ? "," : "") << rep.header[i];
      os << "\n";
      for (const auto& row : rep.rows) {
        for (std::size_t i = 0; i < row.size(); ++i) os << (i ? "," : "") << csv_field(row[i]);
        os << "\n";
      }
      break;
    }
    case OutputFormat::kText: {
      render_text(os, rep.result, "");
      if (rep.exact) os << "exact: " << (*rep.exact ? "true" : "false") << "\n";
      if (!rep.provenance.empty()) {
        os << "provenance:";
        for (const auto& p : rep.provenance) os << " " << p;
        os << "\n";
      }
      if (spec.stats && !rep.stats.empty()) {
        os << "stats:\n";
        render_text(os, rep.stats, "  ");
      }
      break;
    }
  }
  out.output = os.str();
  return out;
}

}  // namespace davkit::cli
