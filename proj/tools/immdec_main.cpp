#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"

#include "immdec/errors.hpp"
#include "immdec/mono_model.hpp"
#include "immdec/problem.hpp"
#include "immdec/serialize.hpp"

namespace {

using namespace immdec;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw input_error("cannot read file '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

struct Options {
  std::string file;
  bool paper_literal = false;
  std::optional<int> max_degree;
  bool json = false;
};

DifferentialMode mode_of(const Options& o) {
  return o.paper_literal ? DifferentialMode::paper_literal
                         : DifferentialMode::dual_class;
}

// Exit 0 = lift exists, 1 = obstructed, 2 = input error (thrown).
int run_decide(const Options& o, bool full_report) {
  const ImmersionProblem p = parse_problem(read_file(o.file));
  const DifferentialMode mode = mode_of(o);
  const Verdict v = decide_immersion(p, mode, o.max_degree);
  if (o.json) {
    std::cout << verdict_to_json(v).dump(2) << "\n";
  } else {
    const RelativeModel r = build_mono_model(p.m, p.n, mode);
    const auto carrier =
        carrier_view(p, decision_cutoff(r, p.m, o.max_degree));
    if (full_report) {
      std::cout << explain(v, *carrier);
    } else {
      std::cout << (v.immersible ? "YES" : "NO") << " (differential mode: "
                << mode_name(v.mode) << ")\n";
      for (const auto& ob : v.obstructions)
        if (!ob.exact)
          std::cout << "  " << ob.name << ": class "
                    << carrier->describe(ob.degree, ob.class_coords)
                    << " in degree " << ob.degree << " is not exact\n";
    }
  }
  return v.immersible ? 0 : 1;
}

int run_check(const Options& o) {
  const ImmersionProblem p = parse_problem(read_file(o.file));
  // Assembling the morphism catches missing class data; the decision itself
  // is not run.
  const RelativeModel r = build_mono_model(p.m, p.n, mode_of(o));
  const auto carrier = carrier_view(p, decision_cutoff(r, p.m, o.max_degree));
  assemble_phi(p, r, *carrier);
  std::cout << "ok: valid problem for (m, n) = (" << p.m << ", " << p.n
            << ")\n";
  return 0;
}

int run_dump_model(int m, int n, const Options& o) {
  const DifferentialMode mode = mode_of(o);
  const RelativeModel r = build_mono_model(m, n, mode);
  Json out;
  out["format_version"] = 1;
  out["m"] = m;
  out["n"] = n;
  out["mode"] = mode_name(mode);
  out["model"] = relative_model_to_json(r);
  out["obstruction_degrees"] = obstruction_degrees(m, n);
  std::cout << out.dump(2) << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"decides lifting of characteristic-class data through the "
               "bundle-monomorphism model (immersion up to homotopy)"};
  app.require_subcommand(1);

  Options opt;
  int dump_m = 0, dump_n = 0;

  const auto add_common = [&](CLI::App* cmd, bool with_json) {
    cmd->add_flag("--paper-literal-differential", opt.paper_literal,
                  "use the plain linear differential (beta minus alpha per "
                  "slot) instead of the dual-class differential");
    cmd->add_option("--max-degree", opt.max_degree,
                    "enumeration cap (default: m + 1, raised to cover every "
                    "fiber generator)")
        ->check(CLI::PositiveNumber);
    if (with_json)
      cmd->add_flag("--json", opt.json, "machine-readable verdict");
  };

  CLI::App* decide =
      app.add_subcommand("decide", "decide a problem file (exit 0 = YES, 1 = "
                                   "NO, 2 = input error)");
  decide->add_option("file", opt.file, "problem file")->required();
  add_common(decide, true);

  CLI::App* expl =
      app.add_subcommand("explain", "decide and print the full obstruction "
                                    "report (same exit codes as decide)");
  expl->add_option("file", opt.file, "problem file")->required();
  add_common(expl, true);

  CLI::App* check =
      app.add_subcommand("check", "validate a problem file without deciding");
  check->add_option("file", opt.file, "problem file")->required();
  add_common(check, false);

  CLI::App* dump = app.add_subcommand("dump-model",
                                      "print the relative model for (m, n)");
  dump->add_option("--m", dump_m, "source dimension")->required();
  dump->add_option("--n", dump_n, "target dimension")->required();
  add_common(dump, false);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  try {
    if (app.got_subcommand(decide)) return run_decide(opt, false);
    if (app.got_subcommand(expl)) return run_decide(opt, true);
    if (app.got_subcommand(check)) return run_check(opt);
    return run_dump_model(dump_m, dump_n, opt);
  } catch (const input_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 3;
  }
}
