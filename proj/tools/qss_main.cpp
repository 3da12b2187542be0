// qss: finite quasigroup semisymmetrization toolkit.
//
// Exit codes: 0 success / property true, 1 property false or search empty,
// 2 input or usage error, 3 budget exceeded. Data goes to stdout,
// diagnostics to stderr.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"

#include "qss/catcheck.hpp"
#include "qss/enumerate.hpp"
#include "qss/qgt.hpp"

namespace {

using namespace qss;

constexpr int kExitTrue = 0;
constexpr int kExitFalse = 1;
constexpr int kExitInput = 2;
constexpr int kExitBudget = 3;

std::string read_all(const std::string& path) {
  if (path == "-") {
    std::ostringstream buf;
    buf << std::cin.rdbuf();
    return buf.str();
  }
  std::ifstream in(path);
  if (!in) throw input_error("cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

Quasigroup load_qgt(const std::string& path) {
  std::istringstream in(read_all(path));
  return parse_qgt(in);
}

Budget make_budget(std::optional<std::uint64_t> flag_value) {
  if (flag_value) return Budget(*flag_value);
  if (const char* env = std::getenv("QSS_BUDGET")) {
    try {
      std::size_t pos = 0;
      unsigned long long v = std::stoull(env, &pos);
      if (pos != std::string(env).size()) throw std::invalid_argument(env);
      return Budget(v);
    } catch (const std::exception&) {
      throw input_error(std::string("QSS_BUDGET is not a valid integer: '") + env + "'");
    }
  }
  return Budget();
}

int emit_check_lines(const std::vector<CheckLine>& lines) {
  for (const CheckLine& line : lines) std::cout << format_check_line(line) << '\n';
  return all_pass(lines) ? kExitTrue : kExitFalse;
}

int run_validate(const std::vector<std::string>& inputs) {
  bool all_latin = true;
  for (const std::string& path : inputs) {
    std::istringstream in(read_all(path));
    bool latin = validate_latin(parse_qgt_cells(in));
    std::cout << (latin ? "true" : "false") << '\n';
    all_latin = all_latin && latin;
  }
  return all_latin ? kExitTrue : kExitFalse;
}

int run_show(const std::string& input, const std::string& kind_name) {
  auto kind = parastrophe_from_string(kind_name);
  if (!kind) throw input_error("unknown parastrophe '" + kind_name + "'");
  Quasigroup q = load_qgt(input);
  std::cout << serialize_qgt(parastrophe(q, *kind));
  return kExitTrue;
}

int run_semisymmetrize(const std::string& input, const std::string& functor,
                       const std::string& variant_name, bool tagged) {
  Quasigroup q = load_qgt(input);

  if (functor == "delta") {
    if (tagged) throw input_error("--tagged applies to the gamma functor only");
    if (!variant_name.empty()) throw input_error("--variant applies to the gamma functor only");
    std::cout << serialize_qgt(delta_object(q));
    return kExitTrue;
  }

  GammaVariant variant = GammaVariant::V12;
  if (functor == "gamma") {
    if (!variant_name.empty()) {
      if (variant_name == "v12") variant = GammaVariant::V12;
      else if (variant_name == "v23") variant = GammaVariant::V23;
      else if (variant_name == "v31-verbatim") variant = GammaVariant::V31Verbatim;
      else if (variant_name == "v31-symmetric") variant = GammaVariant::V31Symmetric;
      else throw input_error("unknown gamma variant '" + variant_name + "'");
    }
  } else if (functor == "nabla23") {
    if (!variant_name.empty()) throw input_error("--variant conflicts with --functor nabla23");
    variant = GammaVariant::V23;
  } else if (functor == "nabla31") {
    if (!variant_name.empty()) throw input_error("--variant conflicts with --functor nabla31");
    variant = v31_default_variant();
  } else {
    throw input_error("unknown functor '" + functor + "'");
  }

  if (tagged) {
    if (variant != GammaVariant::V12) throw input_error("--tagged requires the v12 variant");
    std::cout << serialize_tagged(gamma_tagged(q));
    return kExitTrue;
  }

  auto cells = gamma_cells(q, variant);
  if (!validate_latin(cells)) {
    std::cerr << "gamma variant " << to_string(variant)
              << " did not produce a Latin square for this input\n";
    return kExitFalse;
  }
  std::cout << serialize_qgt_cells(cells);
  return kExitTrue;
}

int run_check(const std::string& mode, const std::vector<std::string>& inputs, int max_order,
              std::uint64_t samples, std::uint64_t seed, const std::string& functor,
              Budget& budget) {
  if (mode == "ss") {
    if (inputs.empty()) throw input_error("check ss needs at least one input");
    std::vector<CheckLine> lines;
    for (const std::string& path : inputs) {
      Quasigroup q = load_qgt(path);
      SemisymmetryReport rep = semisymmetry_report(q);
      std::ostringstream witness;
      witness << "flags=(" << rep.mul_left << ',' << rep.mul_right << ',' << rep.rdiv_is_opposite
              << ',' << rep.ldiv_is_opposite << ',' << rep.divisions_coincide << ')';
      lines.push_back({"ss", path, rep.all(), witness.str()});
    }
    return emit_check_lines(lines);
  }

  if (mode == "twisted") {
    if (inputs.empty()) throw input_error("check twisted needs an input");
    std::vector<CheckLine> lines;
    for (const std::string& path : inputs) {
      std::istringstream in(read_all(path));
      std::vector<std::vector<std::vector<int>>> records;
      records.push_back(parse_qgt_cells(in));
      while (qgt_stream_has_record(in)) records.push_back(parse_qgt_cells(in));
      bool ok;
      if (records.size() == 1) {
        // Derive the dual-division triple and check it plus its rotations.
        if (!validate_latin(records[0])) throw input_error("input is not a Latin square");
        TwistedQuasigroup t = twisted_from(Quasigroup::from_mul_table(records[0]));
        ok = is_twisted_quasigroup(t) && is_twisted_quasigroup(cyclic_rotate(t)) &&
             is_twisted_quasigroup(cyclic_rotate(cyclic_rotate(t)));
      } else if (records.size() == 3) {
        ok = twisted_axioms_hold(records[0], records[1], records[2]);
      } else {
        throw input_error("check twisted expects one record or a stream of three");
      }
      lines.push_back({"twisted", path, ok, ""});
    }
    return emit_check_lines(lines);
  }

  if (mode == "adjunction") return emit_check_lines(adjunction_sweep(max_order, budget));
  if (mode == "faithful") return emit_check_lines(faithful_sweep(max_order, budget));

  if (mode == "gf-algebra") {
    if (inputs.empty()) return emit_check_lines(gf_sweep(max_order, samples, seed, budget));
    // With explicit inputs, check those quasigroups instead of sweeping.
    std::vector<CheckLine> lines;
    for (const std::string& path : inputs) {
      Quasigroup q = load_qgt(path);
      GfCheckMode mode_for_q =
          q.order() == 1 ? GfCheckMode::exhaustive() : GfCheckMode::sampled(samples, seed);
      GfCheckResult res = check_gf_algebra(q, mode_for_q);
      std::ostringstream args;
      args << path << " points=" << res.points_checked;
      lines.push_back({"gf-unit-law", path, res.unit_law, ""});
      lines.push_back({"gf-main-law", args.str(), res.main_law, ""});
    }
    return emit_check_lines(lines);
  }

  if (mode == "object-injectivity") {
    std::vector<CheckLine> lines;
    auto run_functor = [&](InjectivityFunctor f) {
      auto sub = object_injectivity_sweep(max_order, f);
      lines.insert(lines.end(), sub.begin(), sub.end());
    };
    if (functor == "delta") run_functor(InjectivityFunctor::Delta);
    else if (functor == "gamma-tagged") run_functor(InjectivityFunctor::GammaTagged);
    else if (functor == "gamma-untagged") run_functor(InjectivityFunctor::GammaUntagged);
    else if (functor == "all") {
      run_functor(InjectivityFunctor::Delta);
      run_functor(InjectivityFunctor::GammaTagged);
      run_functor(InjectivityFunctor::GammaUntagged);
    } else if (functor.empty()) {
      run_functor(InjectivityFunctor::Delta);
      run_functor(InjectivityFunctor::GammaTagged);
    } else {
      throw input_error("unknown functor '" + functor + "'");
    }
    return emit_check_lines(lines);
  }

  throw input_error("unknown check mode '" + mode + "'");
}

int run_morph(const std::string& mode, const std::string& q_path, const std::string& r_path,
              Budget& budget) {
  Quasigroup q = load_qgt(q_path);
  Quasigroup r = load_qgt(r_path);

  if (mode == "find-iso") {
    auto iso = find_isomorphism(q, r, budget);
    if (!iso) return kExitFalse;
    std::cout << serialize_map(*iso);
    return kExitTrue;
  }
  if (mode == "find-isotopy") {
    auto isotopy = find_isotopy(q, r, budget);
    if (!isotopy) return kExitFalse;
    std::cout << serialize_homotopy_maps(*isotopy);
    return kExitTrue;
  }
  if (mode == "enumerate-homotopies") {
    auto arrows = enumerate_homotopies(q, r, budget);
    for (std::size_t i = 0; i < arrows.size(); ++i) {
      if (i) std::cout << kRecordSeparator << '\n';
      std::cout << serialize_homotopy_maps(arrows[i]);
    }
    return arrows.empty() ? kExitFalse : kExitTrue;
  }
  if (mode == "complete-homotopy") {
    std::string line1, line2;
    if (!std::getline(std::cin, line1) || !std::getline(std::cin, line2)) {
      throw input_error("complete-homotopy reads the two map lines from stdin");
    }
    std::vector<int> f1 = parse_map_line(line1, q.order(), r.order());
    std::vector<int> f2 = parse_map_line(line2, q.order(), r.order());
    auto h = complete_homotopy(q, r, f1, f2);
    if (!h) return kExitFalse;
    std::cout << serialize_homotopy_maps(*h);
    return kExitTrue;
  }
  throw input_error("unknown morph mode '" + mode + "'");
}

int run_enumerate(int order, bool reduced, bool count_only, std::optional<std::uint64_t> limit) {
  EnumerationConfig cfg;
  cfg.order = order;
  cfg.reduced = reduced;
  cfg.limit = limit;
  if (count_only) {
    std::cout << count_latin_squares(cfg) << '\n';
    return kExitTrue;
  }
  bool first = true;
  enumerate_latin_squares(cfg, [&first](const Quasigroup& q) {
    if (!first) std::cout << kRecordSeparator << '\n';
    first = false;
    std::cout << serialize_qgt(q);
    return true;
  });
  return kExitTrue;
}

int run_probe(const std::string& mode, const std::string& q_path, const std::string& r_path,
              Budget& budget) {
  if (mode != "isotopy-vs-ss") throw input_error("unknown probe '" + mode + "'");
  Quasigroup q = load_qgt(q_path);
  Quasigroup r = load_qgt(r_path);
  ProbeReport rep = probe_isotopy_vs_ss_iso(q, r, budget);
  auto show = [](const std::optional<bool>& v) {
    return !v.has_value() ? "?" : (*v ? "true" : "false");
  };
  std::cout << "PROBE isotopy-vs-ss isotopic=" << show(rep.isotopic)
            << " delta_iso=" << show(rep.delta_images_isomorphic)
            << " gamma_tables_equal=" << show(rep.gamma_tables_equal) << '\n';
  if (!rep.complete()) {
    std::cerr << "probe incomplete: budget exceeded\n";
    return kExitBudget;
  }
  return kExitTrue;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"finite quasigroup semisymmetrization toolkit"};
  app.require_subcommand(1);

  std::optional<std::uint64_t> budget_flag;
  app.add_option("--budget", budget_flag,
                 "candidate-visit budget for searches (overrides QSS_BUDGET)");

  // validate
  auto* validate = app.add_subcommand("validate", "check that inputs are Latin squares");
  std::vector<std::string> validate_inputs{"-"};
  validate->add_option("inputs", validate_inputs, "QGT files or '-'")->expected(-1);

  // show
  auto* show = app.add_subcommand("show", "print a parastrophe table");
  std::string show_input = "-";
  std::string show_kind = "mul";
  show->add_option("--parastrophe", show_kind, "mul|rdiv|ldiv|dual-mul|dual-rdiv|dual-ldiv");
  show->add_option("input", show_input, "QGT file or '-'");

  // semisymmetrize
  auto* semi = app.add_subcommand("semisymmetrize", "emit a semisymmetrization as QGT");
  std::string semi_functor = "delta";
  std::string semi_variant;
  bool semi_tagged = false;
  std::string semi_input = "-";
  semi->add_option("--functor", semi_functor, "delta|gamma|nabla23|nabla31");
  semi->add_option("--variant", semi_variant, "v12|v23|v31-verbatim|v31-symmetric (gamma)");
  semi->add_flag("--tagged", semi_tagged, "attach the source table as a tag (gamma v12)");
  semi->add_option("input", semi_input, "QGT file or '-'");

  // check
  auto* check = app.add_subcommand("check", "run law checks; prints CHECK lines");
  std::string check_mode;
  std::vector<std::string> check_inputs;
  int check_max_order = 3;
  std::uint64_t check_samples = 100000;
  std::uint64_t check_seed = 1;
  std::string check_functor;
  check->add_option("mode", check_mode,
                    "ss|twisted|adjunction|faithful|gf-algebra|object-injectivity")
      ->required();
  check->add_option("inputs", check_inputs, "QGT files or '-' (ss, twisted)")->expected(-1);
  check->add_option("--max-order", check_max_order, "sweep bound (default 3)");
  check->add_option("--samples", check_samples, "sampled points for the gf main law");
  check->add_option("--seed", check_seed, "sample seed");
  check->add_option("--functor", check_functor,
                    "delta|gamma-tagged|gamma-untagged|all (object-injectivity)");

  // morph
  auto* morph = app.add_subcommand("morph", "morphism searches between two quasigroups");
  std::string morph_mode;
  std::string morph_q, morph_r;
  morph->add_option("mode", morph_mode,
                    "find-iso|find-isotopy|enumerate-homotopies|complete-homotopy")
      ->required();
  morph->add_option("Q", morph_q, "domain QGT file or '-'")->required();
  morph->add_option("R", morph_r, "codomain QGT file or '-'")->required();

  // enumerate
  auto* enumerate = app.add_subcommand("enumerate", "stream Latin squares of a given order");
  int enum_order = 1;
  bool enum_reduced = false;
  bool enum_count_only = false;
  std::optional<std::uint64_t> enum_limit;
  enumerate->add_option("--order", enum_order, "square order")->required();
  enumerate->add_flag("--reduced", enum_reduced, "fix first row and column");
  enumerate->add_flag("--count-only", enum_count_only, "print the count instead of records");
  enumerate->add_option("--limit", enum_limit, "stop after this many records");

  // probe
  auto* probe = app.add_subcommand("probe", "empirical probes; prints PROBE lines");
  std::string probe_mode;
  std::string probe_q, probe_r;
  probe->add_option("mode", probe_mode, "isotopy-vs-ss")->required();
  probe->add_option("Q", probe_q, "QGT file or '-'")->required();
  probe->add_option("R", probe_r, "QGT file or '-'")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);  // prints help, exit 0
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitInput;
  }

  try {
    Budget budget = make_budget(budget_flag);
    if (app.got_subcommand(validate)) return run_validate(validate_inputs);
    if (app.got_subcommand(show)) return run_show(show_input, show_kind);
    if (app.got_subcommand(semi)) {
      return run_semisymmetrize(semi_input, semi_functor, semi_variant, semi_tagged);
    }
    if (app.got_subcommand(check)) {
      return run_check(check_mode, check_inputs, check_max_order, check_samples, check_seed,
                       check_functor, budget);
    }
    if (app.got_subcommand(morph)) return run_morph(morph_mode, morph_q, morph_r, budget);
    if (app.got_subcommand(enumerate)) {
      return run_enumerate(enum_order, enum_reduced, enum_count_only, enum_limit);
    }
    if (app.got_subcommand(probe)) return run_probe(probe_mode, probe_q, probe_r, budget);
    throw input_error("no command given");
  } catch (const budget_error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitBudget;
  } catch (const input_error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInput;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInput;
  }
}
