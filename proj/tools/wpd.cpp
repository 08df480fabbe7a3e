#include <CLI11.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "wpd/json_out.hpp"
#include "wpd/verify.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInput = 2;
constexpr int kExitPrecondition = 3;
constexpr int kExitVerification = 4;

std::vector<long> parse_weights(const std::string &text) {
  std::vector<long> out;
  std::string cur;
  for (char c : text) {
    if (c == ',') {
      out.push_back(std::stol(cur));
      cur.clear();
    } else if (std::isdigit(static_cast<unsigned char>(c))) {
      cur += c;
    } else {
      throw wpd::ParseError("bad character in weight list", 0);
    }
  }
  if (!cur.empty())
    out.push_back(std::stol(cur));
  return out;
}

struct Options {
  std::string weights;
  std::string twist = "0";
  std::string format = "text";
  std::string out_path;
  long degree_lo = 0, degree_hi = 0;
  int order = -1;
  long padding = -1;
  unsigned long seed = 20240801;
  bool window_set = false;
};

wpd::Window resolve_window(const Options &opt, const wpd::WeightSystem &w) {
  wpd::Window win = wpd::Window::default_for(w);
  if (opt.window_set)
    win = wpd::Window(opt.degree_lo, opt.degree_hi,
                      opt.order >= 0 ? opt.order : 4,
                      opt.padding >= 0 ? opt.padding : w.max());
  else {
    if (opt.order >= 0)
      win.order_bound = opt.order;
    if (opt.padding >= 0)
      win.padding = opt.padding;
  }
  return win;
}

void emit(const Options &opt, const std::string &text) {
  if (opt.out_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(opt.out_path);
  if (!f)
    throw wpd::Error("cannot open output file " + opt.out_path);
  f << text;
}

void add_common(CLI::App *cmd, Options &opt, bool with_twist = true) {
  cmd->add_option("--weights", opt.weights, "comma separated positive weights")
      ->required();
  if (with_twist)
    cmd->add_option("--twist", opt.twist,
                    "rational twist p/q, or 'generic' for the symbolic class");
  cmd->add_option("--format", opt.format, "text or json")
      ->check(CLI::IsMember({"text", "json"}));
  cmd->add_option("--out", opt.out_path, "write the report to a file");
  cmd->add_option("--seed", opt.seed, "seed for randomized suites");
  auto *lo = cmd->add_option("--degree-lo", opt.degree_lo, "window low degree");
  auto *hi = cmd->add_option("--degree-hi", opt.degree_hi, "window high degree");
  cmd->add_option("--order", opt.order, "window order bound");
  cmd->add_option("--padding", opt.padding, "window padding");
  lo->needs(hi);
  hi->needs(lo);
  cmd->callback([&opt, lo]() { opt.window_set = lo->count() > 0; });
}

std::string classification_text(const wpd::Classification &c) {
  std::string s;
  s += "weights: ";
  {
    std::string ws = "(";
    for (std::size_t i = 0; i < c.weights.size(); ++i) {
      if (i)
        ws += ",";
      ws += std::to_string(c.weights[i]);
    }
    s += ws + ")\n";
  }
  s += "twist: " + c.twist.str() + "\n";
  s += "exactness: " + std::string(wpd::str(c.exactness)) + "\n";
  s += "kernel: " + std::string(wpd::str(c.kernel));
  if (c.witness) {
    if (c.witness->kind == wpd::WitnessKind::TwistingSheaf)
      s += " (TwistingSheaf " + std::to_string(c.witness->sheaf_twist) + ")";
    else
      s += " (FractionalModule base exponent " +
           c.witness->base_exponent.get_str() + ")";
  }
  s += "\n";
  s += "stack_equivalence: " + std::string(wpd::str(c.stack_equivalence)) + "\n";
  s += "pushforward_equivalence: " +
       std::string(wpd::str(c.pushforward_equivalence)) + "\n";
  s += "n_caveat: " + std::string(c.n_caveat ? "true" : "false") + "\n";
  return s;
}

std::string suites_text(const std::vector<wpd::SuiteResult> &suites) {
  std::string s;
  bool all = true;
  for (const auto &suite : suites) {
    for (const auto &c : suite.checks) {
      s += std::string(c.pass ? "[PASS] " : "[FAIL] ") + suite.suite + "/" +
           c.name;
      if (!c.detail.empty())
        s += ": " + c.detail;
      s += "\n";
    }
    all = all && suite.pass();
  }
  s += all ? "verify: PASS\n" : "verify: FAIL\n";
  return s;
}

} // namespace

int main(int argc, char **argv) {
  CLI::App app{"graded differential operators on weighted projective "
               "quotients: classification, span arithmetic, exact windows"};
  app.require_subcommand(1);

  Options opt;
  std::string query;
  long member_k = 0;
  std::string suite = "all";
  std::string expr;
  std::optional<long> expect_homology;

  auto *cmd_classify = app.add_subcommand("classify", "decide the twist");
  add_common(cmd_classify, opt);

  auto *cmd_semigroup =
      app.add_subcommand("semigroup", "weight span queries");
  add_common(cmd_semigroup, opt, false);
  cmd_semigroup->add_option("query", query, "frobenius | gaps | member")
      ->required()
      ->check(CLI::IsMember({"frobenius", "gaps", "member"}));
  auto *k_opt =
      cmd_semigroup->add_option("k", member_k, "integer for the member query");

  auto *cmd_verify = app.add_subcommand("verify", "run a property suite");
  add_common(cmd_verify, opt);
  cmd_verify->add_option("suite", suite, "euler | delta | koszul | witnesses | all")
      ->check(CLI::IsMember({"euler", "delta", "koszul", "witnesses", "all"}));
  long expect_val = 0;
  auto *expect_opt = cmd_verify->add_option(
      "--expect-homology", expect_val, "fail unless the homology total matches");

  auto *cmd_eval = app.add_subcommand("eval", "normal order an expression");
  add_common(cmd_eval, opt, false);
  cmd_eval->add_option("expr", expr, "expression over x_i, d_i, E")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError &e) {
    if (e.get_exit_code() == 0)
      return app.exit(e); // --help
    app.exit(e);
    return kExitInput;
  }

  try {
    wpd::WeightSystem w(parse_weights(opt.weights));

    if (cmd_classify->parsed()) {
      wpd::TwistParameter lam = wpd::TwistParameter::parse(opt.twist);
      wpd::Classification c = wpd::classify(w, lam);
      if (opt.format == "json")
        emit(opt, wpd::to_json(c).dump(2) + "\n");
      else
        emit(opt, classification_text(c));
      return kExitOk;
    }

    if (cmd_semigroup->parsed()) {
      wpd::OrderedJson j;
      j["weights"] = w.weights();
      j["query"] = query;
      std::string text;
      if (query == "frobenius") {
        long f = wpd::frobenius(w);
        j["value"] = f;
        text = "frobenius: " + std::to_string(f) + "\n";
      } else if (query == "gaps") {
        auto g = wpd::gaps(w);
        j["value"] = g;
        text = "gaps: [";
        for (std::size_t i = 0; i < g.size(); ++i)
          text += (i ? "," : "") + std::to_string(g[i]);
        text += "]\n";
      } else {
        if (k_opt->count() == 0)
          throw wpd::ParseError("the member query needs an integer", 0);
        auto r = wpd::is_member(w, member_k);
        j["k"] = member_k;
        j["member"] = r.member;
        if (r.member)
          j["representation"] = r.rep;
        else
          j["representation"] = nullptr;
        text = "member " + std::to_string(member_k) + ": " +
               (r.member ? "true" : "false");
        if (r.member) {
          text += ", representation: [";
          for (std::size_t i = 0; i < r.rep.size(); ++i)
            text += (i ? "," : "") + std::to_string(r.rep[i]);
          text += "]";
        }
        text += "\n";
      }
      emit(opt, opt.format == "json" ? j.dump(2) + "\n" : text);
      return kExitOk;
    }

    if (cmd_verify->parsed()) {
      wpd::TwistParameter lam = wpd::TwistParameter::parse(opt.twist);
      wpd::Window win = resolve_window(opt, w);
      if (expect_opt->count() > 0)
        expect_homology = expect_val;
      std::vector<wpd::SuiteResult> suites;
      if (suite == "euler")
        suites.push_back(wpd::verify_euler(w, win, opt.seed));
      else if (suite == "delta")
        suites.push_back(wpd::verify_delta(w, lam, win));
      else if (suite == "koszul")
        suites.push_back(
            wpd::verify_koszul(w, lam, win, opt.seed, expect_homology));
      else if (suite == "witnesses")
        suites.push_back(wpd::verify_witnesses(w, lam, win));
      else
        suites = wpd::verify_all(w, lam, win, opt.seed);
      bool pass = true;
      for (const auto &s : suites)
        pass = pass && s.pass();
      bool with_report = suite == "koszul" || suite == "all";
      if (opt.format == "json") {
        wpd::OrderedJson j;
        j["weights"] = w.weights();
        j["twist"] = lam.str();
        j["pass"] = pass;
        wpd::OrderedJson arr = wpd::OrderedJson::array();
        for (const auto &s : suites)
          arr.push_back(wpd::to_json(s));
        j["suites"] = std::move(arr);
        if (with_report)
          j["koszul_report"] =
              wpd::to_json(wpd::koszul_homology_window(w, lam, win));
        emit(opt, j.dump(2) + "\n");
      } else {
        std::string text = suites_text(suites);
        if (with_report) {
          wpd::KoszulReport rep = wpd::koszul_homology_window(w, lam, win);
          text += "koszul window: ker_phi1 " +
                  std::to_string(rep.ker_phi1_total) + ", homology " +
                  std::to_string(rep.homology_total) + "\n";
          for (const auto &d : rep.degrees) {
            text += "  degree " + std::to_string(d.degree) + ": ker_phi1 " +
                    std::to_string(d.ker_phi1_dim) + ", homology " +
                    std::to_string(d.homology_dim) + "\n";
            for (const auto &wit : d.witnesses) {
              text += "    witness (";
              for (std::size_t i = 0; i < wit.size(); ++i)
                text += (i ? ", " : "") + wit[i];
              text += ")\n";
            }
          }
        }
        emit(opt, text);
      }
      return pass ? kExitOk : kExitVerification;
    }

    if (cmd_eval->parsed()) {
      wpd::WeylElement<wpd::Rat> e = wpd::parse_element(expr, w);
      emit(opt, wpd::to_string(e) + "\n");
      return kExitOk;
    }
  } catch (const wpd::ParseError &e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kExitInput;
  } catch (const wpd::NotCoprimeError &e) {
    std::cerr << "precondition: " << e.what() << "\n";
    return kExitPrecondition;
  } catch (const wpd::WindowTooSmallError &e) {
    std::cerr << "precondition: " << e.what() << "\n";
    return kExitPrecondition;
  } catch (const wpd::NoWitnessApplicableError &e) {
    std::cerr << "precondition: " << e.what() << "\n";
    return kExitPrecondition;
  } catch (const wpd::VerificationFailedError &e) {
    std::cerr << "verification failed: " << e.what() << "\n";
    return kExitVerification;
  } catch (const wpd::Error &e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kExitInput;
  } catch (const std::exception &e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kExitInput;
  }
  return kExitOk;
}
