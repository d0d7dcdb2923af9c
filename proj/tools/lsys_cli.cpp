// Command-line front end for the lsys library.
//
// Exit codes: 0 success, 1 verification failure, 2 parse/validation or usage
// error, 3 resource limit.

#include <cmath>
#include <cstdint>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "lsys/lsys.hpp"

namespace {

constexpr int exit_ok = 0;
constexpr int exit_verify_failed = 1;
constexpr int exit_usage = 2;
constexpr int exit_resource = 3;

struct GlobalOptions {
  std::string system = "hilbert-a";
  std::uint64_t gen = 1;
  bool stream = false;
  std::size_t max_symbols = lsys::default_symbol_cap;
  bool seed_less = false;
  std::string normalize;
};

lsys::LSystem load_system(const std::string& spec) {
  if (auto def = lsys::preset_definition(spec)) return lsys::parse_system_file(*def);
  std::ifstream in(spec, std::ios::binary);
  if (!in) {
    throw lsys::ValidationError("'" + spec + "' is neither a preset nor a readable file", spec);
  }
  std::ostringstream text;
  text << in.rdbuf();
  return lsys::parse_system_file(text.str());
}

void require_materializable(const GlobalOptions& g) {
  if (g.gen > lsys::default_generation_cap) {
    throw lsys::ResourceLimit("generation " + std::to_string(g.gen) +
                              " exceeds the materialization cap of " +
                              std::to_string(lsys::default_generation_cap) +
                              "; use --stream");
  }
}

std::optional<lsys::NormalizeMode> normalize_mode(const GlobalOptions& g) {
  if (g.normalize.empty()) return std::nullopt;
  if (g.normalize == "paper_sqrt") return lsys::NormalizeMode::paper_sqrt;
  return lsys::NormalizeMode::unit_square;
}

int cmd_gen(const GlobalOptions& g, bool dump_system) {
  if (dump_system) {
    if (auto def = lsys::preset_definition(g.system)) {
      std::cout << *def;
    } else {
      std::cout << lsys::serialize_system(load_system(g.system));
    }
    return exit_ok;
  }
  const lsys::LSystem sys = load_system(g.system);
  if (g.stream) {
    std::uint64_t count = 0;
    lsys::stream_expand(sys, g.gen, [&](lsys::Symbol s) {
      if (count++ != 0) std::cout << ", ";
      std::cout << sys.alphabet().format(s);
    });
    if (count != 0) std::cout << '\n';
    return exit_ok;
  }
  require_materializable(g);
  const lsys::Word w =
      lsys::generation(sys, g.gen, lsys::GenerationStrategy::iterative, g.max_symbols);
  std::cout << lsys::emit_word_text(sys.alphabet(), w);
  return exit_ok;
}

int cmd_moves(const GlobalOptions& g) {
  const lsys::LSystem sys = load_system(g.system);
  if (g.stream) {
    lsys::MoveDecoder decoder(sys.interpretation);
    lsys::MoveTextWriter writer(std::cout);
    lsys::stream_expand(sys, g.gen, [&](lsys::Symbol s) {
      if (auto m = decoder.feed(s)) writer.write(*m);
    });
    writer.finish();
    return exit_ok;
  }
  require_materializable(g);
  const lsys::Word w =
      lsys::generation(sys, g.gen, lsys::GenerationStrategy::iterative, g.max_symbols);
  std::cout << lsys::emit_moves_text(lsys::to_moves(w, sys.interpretation));
  return exit_ok;
}

int cmd_points(const GlobalOptions& g) {
  const lsys::LSystem sys = load_system(g.system);
  const auto mode = normalize_mode(g);
  if (g.stream) {
    // Scale each point as it is produced; same arithmetic as normalize().
    std::optional<double> factor;
    std::optional<double> divisor;
    if (mode == lsys::NormalizeMode::paper_sqrt) {
      factor = std::sqrt(std::ldexp(1.0, -static_cast<int>(g.gen)));
    } else if (mode == lsys::NormalizeMode::unit_square) {
      if (g.gen == 0) throw lsys::DegenerateScale("unit_square normalization needs m >= 1");
      divisor = std::ldexp(1.0, static_cast<int>(g.gen)) - 1.0;
    }
    auto write = [&](lsys::Point p) {
      if (factor) {
        lsys::write_csv_row(std::cout, lsys::BasicPoint<double>{static_cast<double>(p.x) * *factor,
                                                                static_cast<double>(p.y) * *factor});
      } else if (divisor) {
        lsys::write_csv_row(std::cout, lsys::BasicPoint<double>{static_cast<double>(p.x) / *divisor,
                                                                static_cast<double>(p.y) / *divisor});
      } else {
        lsys::write_csv_row(std::cout, p);
      }
    };
    std::cout << lsys::csv_header;
    lsys::MoveDecoder decoder(sys.interpretation);
    lsys::Point at{0, 0};
    write(at);
    lsys::stream_expand(sys, g.gen, [&](lsys::Symbol s) {
      if (auto m = decoder.feed(s)) {
        at = lsys::step(at, *m);
        write(at);
      }
    });
    return exit_ok;
  }
  require_materializable(g);
  const lsys::Word w =
      lsys::generation(sys, g.gen, lsys::GenerationStrategy::iterative, g.max_symbols);
  const lsys::Path p = lsys::to_path(lsys::to_moves(w, sys.interpretation));
  if (mode) {
    std::cout << lsys::emit_csv(lsys::normalize(p, static_cast<unsigned>(g.gen), *mode));
  } else {
    std::cout << lsys::emit_csv(p);
  }
  return exit_ok;
}

int cmd_render(const GlobalOptions& g, const lsys::RenderOptions& opts, const std::string& output) {
  require_materializable(g);
  const lsys::LSystem sys = load_system(g.system);
  const lsys::Path p = lsys::decode_path(sys, g.gen);
  const auto mode = normalize_mode(g);
  const std::string svg = mode ? lsys::emit_svg(lsys::normalize(p, static_cast<unsigned>(g.gen), *mode), opts)
                               : lsys::emit_svg(p, opts);
  if (output.empty() || output == "-") {
    std::cout << svg;
  } else {
    std::ofstream out(output, std::ios::binary);
    if (!out) throw lsys::Error("cannot write '" + output + "'");
    out << svg;
  }
  return exit_ok;
}

int cmd_verify(const GlobalOptions& g, unsigned max_gen) {
  if (max_gen > lsys::default_generation_cap) {
    throw lsys::ResourceLimit("--max-gen above " + std::to_string(lsys::default_generation_cap));
  }
  const lsys::LSystem sys = load_system(g.system);
  const auto reports = lsys::run_verification(sys, max_gen);
  std::size_t passed = 0;
  for (const auto& r : reports) {
    std::cout << (r.passed ? "PASS " : "FAIL ") << r.check_name << " n=" << r.generation_index;
    if (!r.detail.empty()) std::cout << ": " << r.detail;
    std::cout << '\n';
    if (r.passed) ++passed;
  }
  std::cout << passed << "/" << reports.size() << " checks passed\n";
  return passed == reports.size() ? exit_ok : exit_verify_failed;
}

int cmd_bench(const GlobalOptions& g, const std::vector<std::uint64_t>& exponents, bool timing) {
  const lsys::LSystem sys = load_system(g.system);
  lsys::BenchOptions opts;
  opts.symbol_cap = g.max_symbols;
  const auto rows = lsys::run_bench(sys, exponents, opts);
  std::cout << std::left << std::setw(6) << "n" << std::setw(19) << "strategy" << std::setw(8)
            << "count" << std::setw(14) << "peak" << std::setw(14) << "symbols" << std::setw(8)
            << "match";
  if (timing) std::cout << std::setw(12) << "time_ms";
  std::cout << "status\n";
  for (const auto& r : rows) {
    std::cout << std::setw(6) << r.n << std::setw(19) << lsys::to_string(r.strategy) << std::setw(8)
              << r.compositions_or_applications << std::setw(14)
              << (r.skipped ? std::string("-") : std::to_string(r.peak_symbols)) << std::setw(14)
              << (r.skipped ? std::string("-") : std::to_string(r.output_symbols)) << std::setw(8)
              << (r.matches_iterative ? (*r.matches_iterative ? "yes" : "NO") : "-");
    if (timing) {
      std::ostringstream ms;
      ms << std::fixed << std::setprecision(3)
         << std::chrono::duration<double, std::milli>(r.wall_time).count();
      std::cout << std::setw(12) << (r.skipped ? std::string("-") : ms.str());
    }
    std::cout << (r.skipped ? "skipped: " + r.note : std::string("ok")) << '\n';
  }
  for (const auto& r : rows) {
    if (r.matches_iterative && !*r.matches_iterative) return exit_verify_failed;
  }
  return exit_ok;
}

int cmd_plan(std::uint64_t n) {
  const lsys::PowerPlan plan = lsys::plan_power(n);
  std::cout << "exponent: " << plan.target_exponent << '\n'
            << "binary: " << plan.binary_digits() << '\n'
            << "set_bits:";
  for (unsigned b : plan.set_bits) std::cout << ' ' << b;
  std::cout << '\n'
            << "squarings: " << plan.squarings << '\n'
            << "combines: " << plan.combines << '\n'
            << "total_compositions: " << plan.total_compositions << '\n'
            << "linear_compositions: " << (n == 0 ? 0 : n - 1) << '\n';
  return exit_ok;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Generate, verify and render curves from signed-alphabet L-systems"};
  app.require_subcommand(1);

  GlobalOptions g;
  app.add_option("--system", g.system, "Preset name (hilbert-a, hilbert-b) or definition file")
      ->capture_default_str();
  app.add_option("--gen", g.gen, "Generation index")->capture_default_str();
  app.add_flag("--stream", g.stream, "Expand depth-first without materializing the word");
  app.add_option("--max-symbols", g.max_symbols, "Cap on materialized symbols")
      ->capture_default_str()
      ->check(CLI::PositiveNumber);
  app.add_flag("--seed-less", g.seed_less, "Accepted for compatibility; output is always deterministic");
  app.add_option("--normalize", g.normalize, "Coordinate scaling for points/render")
      ->check(CLI::IsMember({"paper_sqrt", "unit_square"}));

  bool dump_system = false;
  auto* gen = app.add_subcommand("gen", "Print the generation word");
  gen->add_flag("--dump-system", dump_system, "Print the system definition instead");

  auto* moves = app.add_subcommand("moves", "Print the canonical move string");
  auto* points = app.add_subcommand("points", "Print the lattice path as CSV");

  lsys::RenderOptions render_opts;
  std::string output;
  bool no_y_flip = false;
  auto* render = app.add_subcommand("render", "Render the path as SVG");
  render->add_option("-o,--output", output, "Output file (stdout if omitted)");
  render->add_option("--stroke-width", render_opts.stroke_width)->capture_default_str();
  render->add_option("--margin", render_opts.margin)->capture_default_str();
  render->add_option("--cell-size", render_opts.cell_size)->capture_default_str();
  render->add_flag("--no-y-flip", no_y_flip, "Keep math orientation (y down on screen)");

  unsigned max_gen = 8;
  auto* verify = app.add_subcommand("verify", "Run every curve check up to --max-gen");
  verify->add_option("--max-gen", max_gen)->capture_default_str();

  std::vector<std::uint64_t> exponents{1, 2, 4, 8, 100};
  bool timing = false;
  auto* bench = app.add_subcommand("bench", "Compare iterative, repeated-squaring and streaming generation");
  bench->add_option("--n", exponents, "Exponents to run")->capture_default_str();
  bench->add_flag("--timing", timing, "Include wall-clock times (non-deterministic)");

  std::optional<std::uint64_t> plan_exponent;
  auto* plan = app.add_subcommand("plan", "Print the repeated-squaring plan for an exponent");
  plan->add_option("exponent", plan_exponent, "Exponent (defaults to --gen)");

  for (auto* sub : {gen, moves, points, render, verify, bench, plan}) sub->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? exit_ok : exit_usage;
  }

  try {
    if (*gen) return cmd_gen(g, dump_system);
    if (*moves) return cmd_moves(g);
    if (*points) return cmd_points(g);
    if (*render) {
      render_opts.y_flip = !no_y_flip;
      return cmd_render(g, render_opts, output);
    }
    if (*verify) return cmd_verify(g, max_gen);
    if (*bench) return cmd_bench(g, exponents, timing);
    if (*plan) return cmd_plan(plan_exponent.value_or(g.gen));
  } catch (const lsys::ResourceLimit& e) {
    std::cerr << "resource limit: " << e.what() << '\n';
    return exit_resource;
  } catch (const lsys::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return exit_usage;
  }
  return exit_usage;
}
