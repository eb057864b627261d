// skewps: command-line front end for skew power series arithmetic.
//
// Exit codes: 0 success / suite passed (or failed exactly as predicted),
// 1 mathematical failure or violated hypothesis (error name on stderr),
// 2 usage or malformed literal.

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>

#include "skewps/errors.hpp"
#include "skewps/expr.hpp"
#include "skewps/reparam.hpp"
#include "skewps/series.hpp"
#include "skewps/serialize.hpp"
#include "skewps/session.hpp"
#include "skewps/suites.hpp"
#include "skewps/untwist.hpp"
#include "skewps/weierstrass.hpp"

using namespace skewps;

namespace {

/// An argument is an inline JSON literal when it starts like one, else a path.
json load_json(const std::string& arg, const std::string& what) {
  if (arg.empty()) throw ParseError(what + ": empty argument");
  const char c = arg.front();
  if (c == '{' || c == '[' || c == '-' || c == '"' || std::isdigit(static_cast<unsigned char>(c)))
    return parse_text(arg, what);
  if (!std::filesystem::exists(arg)) throw ParseError(what + ": no such file '" + arg + "'");
  return parse_file(arg);
}

struct SessionArgs {
  std::string context, ring, twist, out;
  int cap = -1;
  uint64_t seed = 0;
  int trials = 32;
  bool unchecked = false;
};

void add_session_flags(CLI::App* app, SessionArgs& s) {
  app->add_option("--context", s.context, "context file {ring, twist, cap} or witnessed context");
  app->add_option("--ring", s.ring, "ring descriptor (literal or file)");
  app->add_option("--twist", s.twist, "twist descriptor (literal or file); default sigma = id, delta = 0");
  app->add_option("--cap", s.cap, "truncation level N (default: the ring cap)");
  app->add_option("--seed", s.seed, "seed for all sampling");
  app->add_option("--trials", s.trials, "samples per check");
  app->add_option("--out", s.out, "output file (default stdout)");
  app->add_flag("--unchecked", s.unchecked, "skip the Leibniz/compatibility gate (recorded in the output)");
}

SessionOptions session_options(const SessionArgs& s) {
  SessionOptions o;
  o.cap = s.cap;
  o.checked = !s.unchecked;
  o.trials = s.trials;
  o.seed = s.seed;
  return o;
}

/// --context, or --ring with an optional --twist.
json session_context_json(const SessionArgs& s) {
  if (!s.context.empty()) return load_json(s.context, "--context");
  if (s.ring.empty()) throw ParseError("no context: give --context or --ring");
  json c = {{"ring", load_json(s.ring, "--ring")}};
  if (!s.twist.empty()) c["twist"] = load_json(s.twist, "--twist");
  return c;
}

Context session_context(const SessionArgs& s) { return context_from_json(session_context_json(s), session_options(s)); }

UntwistingIsomorphism session_map(const SessionArgs& s) {
  if (s.context.empty()) throw ParseError("this command needs --context with a witnessed context");
  return isomorphism_from_json(load_json(s.context, "--context"), session_options(s));
}

void emit(const SessionArgs& s, json out) {
  if (s.unchecked) out["unchecked"] = true;
  const std::string text = canonical(out) + "\n";
  if (s.out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(s.out);
  if (!f) throw ParseError("cannot write " + s.out);
  f << text;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"skewps: skew power series rings R[[x;sigma,delta]] at finite precision"};
  app.require_subcommand(1);
  SessionArgs s;

  // eval
  std::string expr_text;
  std::vector<std::string> inputs;
  auto* eval = app.add_subcommand("eval", "evaluate an expression over named series");
  eval->add_option("expr", expr_text, "expression, e.g. \"a*b + x\" or \"val(s)\"")->required();
  eval->add_option("--in", inputs, "named input name=<file or literal> (repeatable)");
  add_session_flags(eval, s);

  // check
  std::string suite;
  int configurations = -1, suite_trials = -1;
  auto* check = app.add_subcommand("check", "run a seeded property suite");
  check->add_option("suite", suite, "suite name (see --list)");
  check->add_option("--trials", suite_trials, "samples per configuration (suite default if omitted)");
  check->add_option("--configurations", configurations, "number of random configurations");
  check->add_option("--seed", s.seed, "seed");
  check->add_option("--out", s.out, "output file (default stdout)");
  bool list = false;
  check->add_flag("--list", list, "list the suites");

  // reparam
  std::string elt_arg, in_arg;
  auto* reparam = app.add_subcommand("reparam", "re-express a series in y = x - t or y = a x");
  reparam->require_subcommand(1);
  auto* shift = reparam->add_subcommand("shift", "y = x - t, v(t) >= 1");
  shift->add_option("--t", elt_arg, "t (literal or file)")->required();
  shift->add_option("--in", in_arg, "series in x")->required();
  add_session_flags(shift, s);
  auto* scale = reparam->add_subcommand("scale", "y = a x, a a unit");
  scale->add_option("--a", elt_arg, "a (literal or file)")->required();
  scale->add_option("--in", in_arg, "series in x")->required();
  add_session_flags(scale, s);

  // untwist / iso
  auto* untwist = app.add_subcommand("untwist", "build the untwisting isomorphism and its certificate chain");
  add_session_flags(untwist, s);
  auto* iso = app.add_subcommand("iso", "apply the untwisting isomorphism");
  iso->require_subcommand(1);
  auto* iso_apply = iso->add_subcommand("apply", "series in O[[x]] -> matrix of series in D[[y]]");
  iso_apply->add_option("--in", in_arg, "series")->required();
  add_session_flags(iso_apply, s);
  auto* iso_unapply = iso->add_subcommand("unapply", "matrix of series in D[[y]] -> series in O[[x]]");
  iso_unapply->add_option("--in", in_arg, "matrix of series")->required();
  add_session_flags(iso_unapply, s);

  // weierstrass / ideal
  auto* weier = app.add_subcommand("weierstrass", "Weierstrass preparation over Zp or F_q[[pi]]");
  weier->require_subcommand(1);
  auto* prep = weier->add_subcommand("prepare", "r = P u pi^m");
  prep->add_option("--series", in_arg, "series")->required();
  add_session_flags(prep, s);
  auto* ideal = app.add_subcommand("ideal", "polynomial elements of ideals");
  ideal->require_subcommand(1);
  auto* ipoly = ideal->add_subcommand("poly", "a nonzero polynomial in the ideal generated by r");
  ipoly->add_option("--generator", in_arg, "generator r")->required();
  add_session_flags(ipoly, s);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*eval) {
      const Context ctx = session_context(s);
      std::map<std::string, json> named;
      for (const auto& in : inputs) {
        const auto eq = in.find('=');
        if (eq == std::string::npos || eq == 0) throw ParseError("--in expects name=<file or literal>, got '" + in + "'");
        named[in.substr(0, eq)] = load_json(in.substr(eq + 1), "--in " + in.substr(0, eq));
      }
      emit(s, session_eval(ctx, expr_text, named));
      return 0;
    }
    if (*check) {
      if (list) {
        json names = suite_names();
        emit(s, {{"suites", names}});
        return 0;
      }
      if (suite.empty()) throw ParseError("check: missing suite name (see --list)");
      SuiteOptions o;
      o.trials = suite_trials;
      o.configurations = configurations;
      o.seed = s.seed;
      SuiteReport r = run_suite(suite, o);
      emit(s, r.to_json());
      // a suite encoding a statement that must fail succeeds when it fails as predicted
      const bool ok = r.expected_failure ? r.as_predicted : r.passed;
      if (!ok) std::cerr << "suite " << suite << " failed; reproduce with: " << r.reproduce << "\n";
      return ok ? 0 : 1;
    }
    if (*shift || *scale) {
      const Context ctx = session_context(s);
      emit(s, session_change_variable(ctx, load_json(in_arg, "--in"), *shift ? MoveKind::Shift : MoveKind::Scale,
                                      load_json(elt_arg, *shift ? "--t" : "--a")));
      return 0;
    }
    if (*untwist) {
      emit(s, session_untwist(session_map(s)));
      return 0;
    }
    if (*iso_apply) {
      emit(s, session_iso_apply(session_map(s), load_json(in_arg, "--in")));
      return 0;
    }
    if (*iso_unapply) {
      emit(s, session_iso_unapply(session_map(s), load_json(in_arg, "--in")));
      return 0;
    }
    if (*prep) {
      emit(s, session_prepare(session_context(s), load_json(in_arg, "--series")));
      return 0;
    }
    if (*ipoly) {
      const bool two_sided = !s.context.empty() && is_witnessed_context(load_json(s.context, "--context"));
      const json out = two_sided ? session_two_sided_ideal_poly(session_map(s), load_json(in_arg, "--generator"))
                                 : session_right_ideal_poly(session_context(s), load_json(in_arg, "--generator"));
      emit(s, out);
      return out.at("verified").get<bool>() ? 0 : 1;
    }
  } catch (const ParseError& e) {
    std::cerr << "error: ParseError: " << e.what() << "\n";
    return 2;
  } catch (const UnknownSuite& e) {
    std::cerr << "error: UnknownSuite: " << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    std::cerr << "error: " << e.name() << ": " << e.what() << "\n";
    return 1;
  } catch (const json::exception& e) {
    // a literal of the right JSON syntax but the wrong shape
    std::cerr << "error: ParseError: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
