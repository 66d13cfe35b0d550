#include "qtg/cli.hpp"

#include <unistd.h>

#include <algorithm>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string_view>

#include <nlohmann/json.hpp>

#include "CLI11.hpp"
#include "qtg/analysis.hpp"
#include "qtg/notation.hpp"
#include "qtg/pitch.hpp"
#include "qtg/render.hpp"
#include "qtg/transform.hpp"
#include "qtg/triad.hpp"

namespace qtg {

namespace {

using nlohmann::json;

bool color_enabled(const std::ostream& out) {
  if (&out != &std::cout || isatty(fileno(stdout)) == 0) return false;
  const char* env = std::getenv("QTG_COLOR");
  return env == nullptr || std::string_view(env) != "0";
}

std::vector<std::string> split_csv(const std::string& text) {
  std::vector<std::string> parts;
  std::string item;
  std::istringstream in(text);
  while (std::getline(in, item, ',')) parts.push_back(item);
  return parts;
}

void print_verdict(std::ostream& out, const TheoremVerdict& v, bool color) {
  const char* tag = v.passed ? "PASS" : "FAIL";
  if (color) {
    out << (v.passed ? "\x1b[32m" : "\x1b[31m") << tag << "\x1b[0m";
  } else {
    out << tag;
  }
  out << " " << v.id << ": " << v.detail << " (checked " << v.checked << ")\n";
  if (v.counterexample) out << "     counterexample: " << *v.counterexample << "\n";
}

}  // namespace

int run_cli(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
  CLI::App app{"quarter-tone (24-EDO) pitch, triad and transformation-group toolkit",
               "qtg"};
  app.require_subcommand(1);

  std::string spelling_text;
  bool pc_json = false;
  auto* pc_cmd = app.add_subcommand("pc", "Pitch-class number of a note spelling");
  pc_cmd->add_option("spelling", spelling_text, "note spelling, e.g. C, Dq#, Btb")
      ->required();
  pc_cmd->add_flag("--json", pc_json, "machine-readable output");

  int name_number = 0;
  bool name_all = false;
  bool name_json = false;
  auto* name_cmd = app.add_subcommand("name", "Spelling(s) of a pitch-class number");
  name_cmd->add_option("number", name_number, "pitch class (any integer, reduced mod 24)")
      ->required();
  name_cmd->add_flag("--all", name_all, "list every clock-label spelling");
  name_cmd->add_flag("--json", name_json, "machine-readable output");

  std::string op_text;
  std::string transform_chord;
  bool transform_json = false;
  auto* transform_cmd = app.add_subcommand("transform", "Apply T<n> or I<n> to a chord");
  transform_cmd->add_option("--op", op_text, "TI element, e.g. T5 or I14")->required();
  transform_cmd->add_option("--chord", transform_chord, "chord, e.g. C:maj, c:min, F:neu")
      ->required();
  transform_cmd->add_flag("--json", transform_json, "machine-readable output");

  std::string plr_seq;
  std::string plr_chord;
  bool plr_trace = false;
  bool plr_json = false;
  auto* plr_cmd =
      app.add_subcommand("plr", "Apply a word over P, L, R to a chord (left to right)");
  plr_cmd->add_option("--seq", plr_seq, "transformation word, e.g. RLRLRLR")->required();
  plr_cmd->add_option("--chord", plr_chord, "starting chord")->required();
  plr_cmd->add_flag("--trace", plr_trace, "print every intermediate chord");
  plr_cmd->add_flag("--json", plr_json, "machine-readable output");

  std::string chain_start;
  std::string chain_pattern;
  int chain_steps = -1;
  bool chain_json = false;
  auto* chain_cmd =
      app.add_subcommand("chain", "Iterate a P/L/R pattern until the start repeats");
  chain_cmd->add_option("--start", chain_start, "starting chord")->required();
  chain_cmd->add_option("--pattern", chain_pattern, "word over P, L, R, e.g. RL")
      ->required();
  chain_cmd->add_option("--steps", chain_steps, "record exactly this many applications")
      ->check(CLI::NonNegativeNumber);
  chain_cmd->add_flag("--json", chain_json, "machine-readable output");

  bool verify_all = false;
  std::string verify_id;
  bool verify_json = false;
  auto* verify_cmd = app.add_subcommand("verify", "Run the exhaustive theorem checks");
  auto* verify_all_flag =
      verify_cmd->add_flag("--all", verify_all, "run every check (the default)");
  verify_cmd->add_option("--id", verify_id, "run a single check")
      ->check(CLI::IsMember(all_theorem_ids()))
      ->excludes(verify_all_flag);
  verify_cmd->add_flag("--json", verify_json, "machine-readable output");

  std::string clock_chords;
  std::vector<int> clock_axes;
  std::string clock_labels = "names";
  std::string clock_out;
  bool clock_json = false;
  auto* clock_cmd = app.add_subcommand("clock", "Render a musical-clock SVG diagram");
  clock_cmd->add_option("--chords", clock_chords, "comma-separated chords to draw");
  clock_cmd->add_option("--axis", clock_axes, "inversion axis index (repeatable)");
  clock_cmd->add_option("--labels", clock_labels, "numbers, names or both")
      ->check(CLI::IsMember({"numbers", "names", "both"}));
  clock_cmd->add_option("--out", clock_out, "output SVG path")->required();
  clock_cmd->add_flag("--json", clock_json, "machine-readable output");

  try {
    std::reverse(args.begin(), args.end());
    app.parse(std::move(args));
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  std::ostringstream buffer;
  int exit_code = kExitOk;
  try {
    if (*pc_cmd) {
      const PitchClass pc = parse_spelling(spelling_text).pitch_class();
      if (pc_json) {
        buffer << json{{"input", spelling_text}, {"pitch_class", pc.value()}}.dump() << "\n";
      } else {
        buffer << pc.value() << "\n";
      }
    } else if (*name_cmd) {
      const PitchClass pc(name_number);
      std::vector<std::string> names;
      for (const Spelling& s : names_of(pc)) names.push_back(format_spelling(s));
      if (name_json) {
        json j{{"pitch_class", pc.value()}};
        if (name_all) {
          j["names"] = names;
        } else {
          j["name"] = names.front();
        }
        buffer << j.dump() << "\n";
      } else if (name_all) {
        for (const auto& n : names) buffer << n << "\n";
      } else {
        buffer << names.front() << "\n";
      }
    } else if (*transform_cmd) {
      const TiElement e = parse_ti(op_text);
      const Triad result = apply_ti(e, parse_chord(transform_chord));
      if (transform_json) {
        buffer << json{{"op", to_string(e)},
                       {"input", transform_chord},
                       {"result", format_chord(result)}}
                      .dump()
               << "\n";
      } else {
        buffer << format_chord(result) << "\n";
      }
    } else if (*plr_cmd) {
      const auto word = parse_plr_word(plr_seq);
      Triad t = parse_chord(plr_chord);
      json trace = json::array();
      std::ostringstream trace_text;
      for (PlrOp op : word) {
        t = apply_plr(op, t);
        trace.push_back({{"op", std::string(1, plr_symbol(op))}, {"chord", format_chord(t)}});
        trace_text << plr_symbol(op) << " -> " << format_chord(t) << "\n";
      }
      if (plr_json) {
        buffer << json{{"seq", plr_seq},
                       {"input", plr_chord},
                       {"result", format_chord(t)},
                       {"trace", trace}}
                      .dump()
               << "\n";
      } else {
        if (plr_trace) buffer << trace_text.str();
        buffer << format_chord(t) << "\n";
      }
    } else if (*chain_cmd) {
      std::optional<int> steps;
      if (chain_cmd->count("--steps") > 0) steps = chain_steps;
      const ChainReport report =
          run_chain(parse_chord(chain_start), parse_plr_word(chain_pattern), steps);
      if (chain_json) {
        buffer << report.to_json().dump() << "\n";
      } else {
        for (size_t i = 0; i < report.sequence.size(); ++i) {
          buffer << i << ": " << format_chord(report.sequence[i]) << "\n";
        }
        buffer << "period: " << report.period << "\n";
      }
    } else if (*verify_cmd) {
      std::vector<TheoremVerdict> verdicts;
      if (!verify_id.empty()) {
        verdicts.push_back(run_theorem(verify_id));
      } else {
        verdicts = run_all_theorems();
      }
      const bool all_passed =
          std::all_of(verdicts.begin(), verdicts.end(),
                      [](const TheoremVerdict& v) { return v.passed; });
      if (verify_json) {
        json j = json::array();
        for (const auto& v : verdicts) j.push_back(v.to_json());
        buffer << j.dump() << "\n";
      } else {
        const bool color = color_enabled(out);
        for (const auto& v : verdicts) print_verdict(buffer, v, color);
        buffer << (all_passed ? "all checks passed" : "CHECKS FAILED") << " ("
               << verdicts.size() << " run)\n";
      }
      if (!all_passed) exit_code = kExitVerifyFailed;
    } else if (*clock_cmd) {
      ClockScene scene;
      scene.labels = parse_label_mode(clock_labels);
      std::vector<std::string> chord_names;
      if (!clock_chords.empty()) {
        for (const auto& name : split_csv(clock_chords)) {
          scene.add_chord(parse_chord(name));
          chord_names.push_back(name);
        }
      }
      for (int axis : clock_axes) scene.add_axis(axis);
      const std::string svg = render_clock(scene);
      std::ofstream file(clock_out, std::ios::binary);
      if (!file || !(file << svg)) {
        throw Error("cannot write '" + clock_out + "'");
      }
      if (clock_json) {
        buffer << json{{"out", clock_out},
                       {"bytes", svg.size()},
                       {"chords", chord_names},
                       {"axes", clock_axes},
                       {"labels", clock_labels}}
                      .dump()
               << "\n";
      } else {
        buffer << "wrote " << clock_out << " (" << svg.size() << " bytes)\n";
      }
    }
  } catch (const Error& e) {
    err << "qtg: error: " << e.what() << "\n";
    return kExitDomainError;
  }

  out << buffer.str();
  return exit_code;
}

}  // namespace qtg
