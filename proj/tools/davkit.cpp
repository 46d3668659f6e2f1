#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "davkit/cli.hpp"

namespace {

using davkit::cli::Command;
using davkit::cli::JobSpec;
using davkit::json;

struct Flags {
  std::string ground;
  std::string format = "json";
  bool no_stats = false;
  bool emit_spec = false;
  std::string from_spec;
  std::optional<std::int64_t> length, cap, threads, max_nodes, m, M, d, n, x, y, u, max_abs, max_size, max_sum;
  std::optional<double> time_limit;
  std::string sequence, seed_element, kind, m_range;
};

void add_common(CLI::App* sub, Flags& f) {
  sub->add_option("--format", f.format, "json, csv or text")->check(CLI::IsMember({"json", "csv", "text"}));
  sub->add_flag("--no-stats", f.no_stats, "omit timing and node counts (byte-stable output)");
  sub->add_flag("--emit-spec", f.emit_spec, "print the job spec instead of running it");
}

void add_search(CLI::App* sub, Flags& f) {
  sub->add_option("--threads", f.threads, "worker threads (0 = all cores)");
  sub->add_option("--time-limit", f.time_limit, "wall-clock limit in seconds");
  sub->add_option("--max-nodes", f.max_nodes, "node limit per root branch");
}

template <class T>
void put(json& p, const char* key, const std::optional<T>& v) {
  if (v) p[key] = *v;
}

void put(json& p, const char* key, const std::string& v) {
  if (!v.empty()) p[key] = v;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"davkit: exact Davenport constants of lattice sets and groups"};
  app.require_subcommand(0, 1);
  Flags f;

  app.add_option("--from-spec", f.from_spec, "run a job spec file (JSON)");

  auto* dav = app.add_subcommand("davenport", "compute D(X) by exhaustive search");
  dav->add_option("ground", f.ground, "ground set, e.g. [-2,3], [-1,1]^2, C2x[-1,1]")->required();
  dav->add_option("--cap", f.cap, "maximal atom length to search");
  add_search(dav, f);
  add_common(dav, f);

  auto* atoms = app.add_subcommand("atoms", "list atoms of a given length (default: maximal atoms)");
  atoms->add_option("ground", f.ground)->required();
  atoms->add_option("--length", f.length, "atom length");
  add_search(atoms, f);
  add_common(atoms, f);

  auto* check = app.add_subcommand("check-minimal", "test whether a sequence is a minimal zero-sum sequence");
  check->add_option("sequence", f.sequence, "e.g. '3^2 * -2^3'")->required();
  check->add_option("--ground", f.ground, "ground set; supplies the group for mixed elements");
  add_common(check, f);

  auto* reorder = app.add_subcommand("reorder", "order an atom so its prefix sums stay small");
  reorder->add_option("sequence", f.sequence)->required();
  reorder->add_option("--seed-element", f.seed_element, "element to place first");
  reorder->add_option("--ground", f.ground, "ground set for containment and pigeonhole checks");
  add_common(reorder, f);

  auto* bounds = app.add_subcommand("bounds", "closed-form bounds on D");
  bounds->add_option("ground", f.ground);
  bounds->add_option("--m", f.m);
  bounds->add_option("--M", f.M);
  bounds->add_option("--d", f.d);
  bounds->add_option("--n", f.n);
  add_common(bounds, f);

  auto* construct = app.add_subcommand("construct", "explicit long atoms");
  construct->add_option("--kind", f.kind, "two-element, interval, hypercube, group-box, power-check")->required();
  for (auto [name, opt] : {std::pair{"--m", &f.m}, {"--M", &f.M}, {"--d", &f.d}, {"--n", &f.n},
                           {"--x", &f.x}, {"--y", &f.y}, {"--u", &f.u}}) {
    construct->add_option(name, *opt);
  }
  add_common(construct, f);

  auto* classify = app.add_subcommand("classify", "match a long atom over an interval against the known families");
  classify->add_option("sequence", f.sequence)->required();
  classify->add_option("--m", f.m)->required();
  classify->add_option("--M", f.M, "right end when the interval is [-m, M]");
  add_common(classify, f);

  auto* verify = app.add_subcommand("verify", "cross-check search against the structure results");
  bool inverse = false;
  bool intervals = false;
  verify->add_flag("--inverse", inverse, "atoms of length 2m-1, 2m-2 and m+M against the templates");
  verify->add_flag("--intervals", intervals, "search against closed forms on [-m, M], m + M <= --max-sum");
  verify->add_option("--m", f.m_range, "m values: 3, 2..5 or 2,3,7");
  verify->add_option("--max-sum", f.max_sum);
  verify->add_option("--threads", f.threads);
  add_common(verify, f);

  auto* hunt = app.add_subcommand("hunt-chi-gap", "find finite sets X with chi(X) < D(X)");
  hunt->add_option("--max-abs", f.max_abs, "elements drawn from [-max-abs, max-abs] minus 0");
  hunt->add_option("--max-size", f.max_size, "largest |X|");
  hunt->add_option("--threads", f.threads);
  hunt->add_option("--time-limit", f.time_limit, "per-set wall-clock limit in seconds");
  add_common(hunt, f);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : davkit::cli::kUsage;
  }

  JobSpec spec;
  try {
    if (!f.from_spec.empty()) {
      if (!app.get_subcommands().empty()) throw davkit::InvalidArgument("--from-spec takes no subcommand");
      std::ifstream in(f.from_spec);
      if (!in) throw davkit::InvalidArgument("cannot open " + f.from_spec);
      json j;
      try {
        j = json::parse(in);
      } catch (const json::exception& e) {
        throw davkit::InvalidArgument(std::string("invalid JSON in job spec: ") + e.what());
      }
      spec = davkit::cli::job_spec_from_json(j);
    } else {
      if (app.get_subcommands().empty()) {
        std::cerr << app.help();
        return davkit::cli::kUsage;
      }
      CLI::App* sub = app.get_subcommands().front();
      spec.command = davkit::cli::parse_command(sub->get_name());
      spec.ground = f.ground;
      spec.output = davkit::cli::parse_format(f.format);
      spec.stats = !f.no_stats;
      json& p = spec.parameters;
      put(p, "length", f.length);
      put(p, "cap", f.cap);
      put(p, "threads", f.threads);
      put(p, "max_nodes", f.max_nodes);
      put(p, "time_limit", f.time_limit);
      put(p, "sequence", f.sequence);
      put(p, "seed_element", f.seed_element);
      put(p, "m", f.m);
      put(p, "M", f.M);
      put(p, "d", f.d);
      put(p, "n", f.n);
      put(p, "x", f.x);
      put(p, "y", f.y);
      put(p, "u", f.u);
      put(p, "max_abs", f.max_abs);
      put(p, "max_size", f.max_size);
      put(p, "max_sum", f.max_sum);
      if (spec.command == Command::kConstruct) p["kind"] = f.kind;
      if (spec.command == Command::kVerify) {
        if (inverse == intervals) throw davkit::InvalidArgument("verify needs exactly one of --inverse, --intervals");
        p["kind"] = inverse ? "inverse" : "intervals";
        if (inverse) {
          if (f.m_range.empty()) throw davkit::InvalidArgument("verify --inverse needs --m");
          p["m"] = f.m_range;
        }
      }
    }
  } catch (const davkit::Error& e) {
    std::cerr << "davkit: " << e.what() << "\n";
    return davkit::cli::kUsage;
  }

  if (f.emit_spec) {
    std::cout << davkit::cli::to_json(spec).dump(2) << "\n";
    return davkit::cli::kOk;
  }

  davkit::cli::RunContext ctx;
  if (const char* g = std::getenv("DAVKIT_GUARD")) {
    try {
      ctx.guard = std::stoll(g);
    } catch (const std::exception&) {
      std::cerr << "davkit: DAVKIT_GUARD must be an integer\n";
      return davkit::cli::kUsage;
    }
  }
  ctx.progress = [](const std::string& line) { std::cerr << "davkit: " << line << "\n"; };
  const auto result = davkit::cli::run(spec, ctx);
  std::cout << result.output;
  return result.exit_code;
}
