#pragma once

// The glinf-qva command line, callable in-process:
//
//   bracket glinf|glinf-e A B
//   vacuum [--level L] [--lambda JSON] WORD
//   module SELECTOR act|series|bbar|recover|witness [options]
//   verify SUITE [--window W] [--level L] [--seed S] [--timing]
//
// Every subcommand takes --format json|text. Exit codes: 0 success, 1 failed
// verification or a domain/precondition error, 2 usage or parse error.

#include <glinf_qva/glinf.hpp>
#include <glinf_qva/glinf_e.hpp>
#include <glinf_qva/parse.hpp>
#include <glinf_qva/pbw.hpp>
#include <glinf_qva/suites.hpp>
#include <glinf_qva/zoo.hpp>

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

namespace glinf::cli {

/// `v[0]*x^-2 + (x[0]*x[3] + x[1]^2)*x^-1 + v[1]`; `0` when empty.
inline std::string format_series(const ZooModule& mod, const TruncSeries<ZooVector>& s) {
  if (s.terms().empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [e, w] : s.terms()) {
    if (!first) out += " + ";
    first = false;
    std::string c = mod.format(w);
    const bool compound = w.size() > 1 || c.front() == '-';
    std::string mono;
    for (std::size_t i = 0; i < e.size(); ++i)
      if (e[i] != 0) mono += "*" + var_name(s.vars()[i]) + "^" + std::to_string(e[i]);
    out += (compound && !mono.empty()) ? "(" + c + ")" + mono : c + mono;
  }
  return out;
}

namespace detail {

struct Emitter {
  std::ostream& out;
  std::string format;

  void text(const std::string& result) {
    if (format == "json")
      out << nlohmann::ordered_json{{"result", result}}.dump() << "\n";
    else
      out << result << "\n";
  }
  void json(const nlohmann::ordered_json& j, const std::string& as_text) {
    if (format == "json")
      out << j.dump() << "\n";
    else
      out << as_text;
  }
};

}  // namespace detail

inline int run(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact computations and verification suites for gl~_inf and gl~^e_inf", "glinf-qva"};
  app.require_subcommand(1);
  const std::vector<std::string> formats{"json", "text"};

  std::string format = "text";
  auto add_format = [&](CLI::App* sub) {
    sub->add_option("--format", format, "Output format")->check(CLI::IsMember(formats))->capture_default_str();
  };

  // bracket
  auto* bracket = app.add_subcommand("bracket", "Bracket two elements");
  std::string algebra, expr_a, expr_b;
  bracket->add_option("algebra", algebra, "glinf or glinf-e")->required()->check(CLI::IsMember({"glinf", "glinf-e"}));
  bracket->add_option("a", expr_a, "First element")->required();
  bracket->add_option("b", expr_b, "Second element")->required();
  add_format(bracket);

  // vacuum
  auto* vacuum = app.add_subcommand("vacuum", "Apply a word of generators to the highest-weight vector of M(l,lambda)");
  std::string level_text = "0", lambda_text = "{}", word_text;
  vacuum->add_option("--level", level_text, "Level l (rational)")->capture_default_str();
  vacuum->add_option("--lambda", lambda_text, "JSON map index -> rational")->capture_default_str();
  vacuum->add_option("word,--word", word_text, "Generators, e.g. \"B[1,-1] B[0,-1]\"")->required();
  add_format(vacuum);

  // module
  auto* module = app.add_subcommand("module", "Operations on C_fin modules");
  std::string selector, action, elem_text, vector_text, elem_algebra = "glinf";
  std::optional<int> opt_m, opt_k, opt_order, opt_n;
  module->add_option("selector", selector, "cinf | sym:r | ext:r | vsa:{\"j\":\"alpha\"}")->required();
  module->add_option("action", action, "act | series | bbar | recover | witness")
      ->required()
      ->check(CLI::IsMember({"act", "series", "bbar", "recover", "witness"}));
  module->add_option("--elem", elem_text, "Element acting (act)");
  module->add_option("--algebra", elem_algebra, "Grammar of --elem")
      ->check(CLI::IsMember({"glinf", "glinf-e"}))
      ->capture_default_str();
  module->add_option("--vector", vector_text, "Vector in the module's grammar")->required();
  module->add_option("--m", opt_m, "Row index m");
  module->add_option("--k", opt_k, "Mode Bbar(m,-k-1) (bbar)");
  module->add_option("--order", opt_order, "Series order in x (bbar)");
  module->add_option("--N", opt_n, "Recovery bound N (recover)");
  add_format(module);

  // verify
  auto* verify = app.add_subcommand("verify", "Run a verification suite");
  std::string suite_name;
  std::optional<int> window;
  std::string verify_level = "0";
  std::uint64_t seed = 1;
  bool timing = false;
  verify->add_option("suite", suite_name, "Suite name")->required();
  verify->add_option("--window", window, "Suite window (default per suite)");
  verify->add_option("--level", verify_level, "Level l (rational)")->capture_default_str();
  verify->add_option("--seed", seed, "Sampling seed")->capture_default_str();
  verify->add_flag("--timing", timing, "Include wall time in the report");
  add_format(verify);

  std::reverse(args.begin(), args.end());
  try {
    app.parse(args);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  detail::Emitter emit{out, format};
  auto need = [&](const std::optional<int>& v, const char* name) {
    if (!v) throw CLI::RequiredError(std::string("--") + name);
    return *v;
  };

  try {
    if (*bracket) {
      if (algebra == "glinf")
        emit.text(to_string(gl_bracket(parse_glinf(expr_a), parse_glinf(expr_b))));
      else
        emit.text(to_string(e_bracket(parse_glinf_e(expr_a), parse_glinf_e(expr_b))));
      return 0;
    }
    if (*vacuum) {
      VermaModule mod(ModuleParams{parse_rational(level_text), parse_lambda(lambda_text)});
      emit.text(to_string(mod.apply_word(parse_word(word_text))));
      return 0;
    }
    if (*module) {
      const ZooModule mod = parse_selector(selector);
      const ZooVector w = parse_zoo(mod, vector_text);
      if (action == "act") {
        if (elem_text.empty()) throw CLI::RequiredError("--elem");
        const ZooVector r = elem_algebra == "glinf" ? mod.act_gl(parse_glinf(elem_text), w)
                                                    : mod.act_e(parse_glinf_e(elem_text), w);
        emit.text(mod.format(r));
      } else if (action == "series") {
        emit.text(format_series(mod, mod.E_series(need(opt_m, "m"), w)));
      } else if (action == "bbar") {
        const int m = need(opt_m, "m");
        if (opt_order)
          emit.text(format_series(mod, mod.bbar_series(m, w, *opt_order)));
        else
          emit.text(mod.format(mod.bbar_mode(m, need(opt_k, "k"), w)));
      } else if (action == "recover") {
        const auto rec = mod.recover_E(need(opt_m, "m"), w, need(opt_n, "N"));
        nlohmann::ordered_json j = nlohmann::ordered_json::object();
        std::string text;
        for (const auto& [n, y] : rec) {
          j[std::to_string(n)] = mod.format(y);
          text += std::to_string(n) + ": " + mod.format(y) + "\n";
        }
        emit.json({{"result", j}}, text);
      } else {
        const LevelWitness rep = mod.level_witness(w);
        const std::string forced = mod.format(rep.forced_central);
        emit.json({{"m", rep.m}, {"n", rep.n}, {"forced", forced}},
                  "m=" + std::to_string(rep.m) + " n=" + std::to_string(rep.n) + " forced=" + forced + "\n");
      }
      return 0;
    }
    if (*verify) {
      const suites::SuiteInfo* info = suites::find_suite(suite_name);
      if (!info) {
        err << "unknown suite '" << suite_name << "'; known suites:";
        for (const auto& s : suites::registry()) err << " " << s.name;
        err << "\n";
        return 2;
      }
      suites::Params params;
      params.window = window.value_or(info->default_window);
      if (params.window < 0) throw CLI::ValidationError("--window", "must be non-negative");
      params.level = parse_rational(verify_level);
      params.seed = seed;
      params.workers = suites::workers_from_env();
      const suites::Report report = info->run(params);
      emit.json(suites::to_json(report, timing), suites::to_text(report, timing));
      return report.passed() ? 0 : 1;
    }
  } catch (const ParseError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const CLI::Error& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}

}  // namespace glinf::cli
