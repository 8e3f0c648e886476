// Command-line front end over the C interface.

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdint>
#include <functional>
#include <iostream>
#include <memory>
#include <string>

#include "recip.h"

namespace {

constexpr int kExitFailure = 1;
constexpr int kExitUsage = 2;

using Context = std::unique_ptr<recip_context, decltype(&recip_context_free)>;

int report_error(const recip_context* ctx, int status) {
  std::cerr << "error: " << recip_last_error(ctx) << "\n";
  return status == RECIP_F1_F2_MISMATCH ? kExitFailure : kExitUsage;
}

std::string signed_value(int v) { return v > 0 ? "+1" : (v < 0 ? "-1" : "0"); }

void print_trace(const nlohmann::json& ev, const std::string& name) {
  std::cout << name << " = " << signed_value(ev["value"].get<int>()) << "  solution " << ev["solution"].get<std::string>() << "\n";
  for (const auto& f : ev["factors"]) {
    std::cout << "  " << f["place"].get<std::string>() << ": " << signed_value(f["value"].get<int>()) << "  ["
              << f["case"].get<std::string>() << "] " << f["inputs"].get<std::string>() << "\n";
    if (f.contains("alternatives"))
      for (const auto& a : f["alternatives"])
        std::cout << "      also [" << a["case"].get<std::string>() << "] " << signed_value(a["value"].get<int>()) << "\n";
    if (f.contains("skipped"))
      for (const auto& s : f["skipped"]) std::cout << "      skipped " << s.get<std::string>() << "\n";
  }
}

}  // namespace

int main(int argc, char** argv) {
  Context ctx(recip_context_new(), &recip_context_free);
  if (!ctx) return kExitFailure;

  CLI::App app{"Verifier for the quartic reciprocity functions f1, f2 and the character chi"};
  app.require_subcommand(1);
  app.fallthrough();
  bool as_json = false;
  app.add_flag("--json", as_json, "Machine-readable output");

  int exit_code = 0;
  // Actions run after the whole command line is parsed, so trailing global
  // flags are seen.
  std::function<void()> action;
  auto defer = [&action](CLI::App* cmd, std::function<void()> fn) { cmd->callback([&action, fn] { action = fn; }); };
  auto finish_symbol = [&](int status, int value) {
    if (status != RECIP_OK) {
      exit_code = report_error(ctx.get(), status);
      return;
    }
    if (as_json) std::cout << recip_result(ctx.get()) << "\n";
    else std::cout << signed_value(value) << "\n";
  };

  // symbol
  auto* symbol = app.add_subcommand("symbol", "Local symbols");
  symbol->require_subcommand(1);
  std::string a, b, c, m, p, place;
  {
    auto* cmd = symbol->add_subcommand("legendre", "(a/p)");
    cmd->add_option("A", a)->required();
    cmd->add_option("P", p)->required();
    defer(cmd, [&] {
      int v = 0;
      const int status = recip_legendre(ctx.get(), a.c_str(), p.c_str(), &v);
      finish_symbol(status, v);
    });
  }
  {
    auto* cmd = symbol->add_subcommand("hilbert", "(a, b)_v; PLACE is a prime or inf");
    cmd->add_option("A", a)->required();
    cmd->add_option("B", b)->required();
    cmd->add_option("PLACE", place)->required();
    defer(cmd, [&] {
      int v = 0;
      const int status = recip_hilbert(ctx.get(), a.c_str(), b.c_str(), place.c_str(), &v);
      finish_symbol(status, v);
    });
  }
  {
    auto* cmd = symbol->add_subcommand("ext", "((a + b sqrt m)/p)");
    cmd->add_option("A", a)->required();
    cmd->add_option("B", b)->required();
    cmd->add_option("M", m)->required();
    cmd->add_option("P", p)->required();
    defer(cmd, [&] {
      int v = 0;
      const int status = recip_legendre_ext(ctx.get(), a.c_str(), b.c_str(), m.c_str(), p.c_str(), &v);
      finish_symbol(status, v);
    });
  }
  {
    auto* cmd = symbol->add_subcommand("quartic", "(m/p)_4, or <m/2>_4 for p = 2");
    cmd->add_option("M", m)->required();
    cmd->add_option("P", p)->required();
    defer(cmd, [&] {
      int v = 0;
      const int status = recip_quartic(ctx.get(), m.c_str(), p.c_str(), &v);
      finish_symbol(status, v);
    });
  }

  // conic
  auto* conic = app.add_subcommand("conic", "Rational points on x^2 - a y^2 = b z^2");
  conic->require_subcommand(1);
  {
    auto* cmd = conic->add_subcommand("solve", "First primitive solution");
    cmd->add_option("A", a)->required();
    cmd->add_option("B", b)->required();
    defer(cmd, [&] {
      const int status = recip_conic_solve(ctx.get(), a.c_str(), b.c_str());
      if (status != RECIP_OK) {
        exit_code = report_error(ctx.get(), status);
        return;
      }
      const auto j = nlohmann::json::parse(recip_result(ctx.get()));
      if (as_json) std::cout << j.dump() << "\n";
      else std::cout << j["x"].get<std::string>() << " " << j["y"].get<std::string>() << " " << j["z"].get<std::string>() << "\n";
    });
  }

  // f
  auto* fcmd = app.add_subcommand("f", "The reciprocity function f(B, A, C)");
  fcmd->require_subcommand(1);
  bool trace = false;
  auto eval_f = [&](bool with_trace) {
    int v = 0;
    const int status = recip_f_eval(ctx.get(), b.c_str(), a.c_str(), c.c_str(), with_trace ? 1 : 0, &v);
    if (status != RECIP_OK && status != RECIP_F1_F2_MISMATCH) {
      exit_code = report_error(ctx.get(), status);
      return;
    }
    const auto j = nlohmann::json::parse(recip_result(ctx.get()));
    if (as_json) {
      std::cout << j.dump() << "\n";
    } else {
      std::cout << "f" << j["triple"].get<std::string>() << " = " << signed_value(j.value("value", 0)) << "  (f1 "
                << signed_value(j["f1"].get<int>()) << ", f2 " << signed_value(j["f2"].get<int>()) << ")\n";
      if (with_trace) {
        print_trace(j["trace"]["f1"], "f1");
        print_trace(j["trace"]["f2"], "f2");
      }
    }
    if (status != RECIP_OK) exit_code = report_error(ctx.get(), status);
  };
  for (const char* name : {"eval", "trace"}) {
    auto* cmd = fcmd->add_subcommand(name, std::string(name) == "eval" ? "Evaluate f1 and f2" : "Evaluate with the per-place trace");
    cmd->add_option("B", b)->required();
    cmd->add_option("A", a)->required();
    cmd->add_option("C", c)->required();
    const bool always = std::string(name) == "trace";
    if (!always) cmd->add_flag("--trace", trace, "Print every local factor");
    defer(cmd, [&, always] { eval_f(always || trace); });
  }

  // verify
  auto* verify = app.add_subcommand("verify", "Seeded campaigns; JSON lines on stdout");
  verify->require_subcommand(1);
  long bound = 0, max_prime = 0;
  int count = 0;
  std::uint64_t seed = 0;
  std::string law;
  auto finish_report = [&](int status, int pass) {
    if (status != RECIP_OK) {
      exit_code = report_error(ctx.get(), status);
      return;
    }
    std::cout << recip_result(ctx.get());
    exit_code = pass ? 0 : kExitFailure;
  };
  {
    auto* cmd = verify->add_subcommand("d", "f1 = f2, symmetry and branch checks on sampled triples of D");
    cmd->add_option("--bound", bound)->required()->check(CLI::Range(2L, 1L << 40));
    cmd->add_option("--count", count)->required()->check(CLI::Range(1, 1 << 24));
    cmd->add_option("--seed", seed)->required();
    defer(cmd, [&] {
      int pass = 0;
      const int status = recip_verify_d(ctx.get(), bound, count, seed, &pass);
      finish_report(status, pass);
    });
  }
  {
    auto* cmd = verify->add_subcommand("law", "A classical quartic law against independent oracles");
    cmd->add_option("--name", law)->required();
    cmd->add_option("--max-prime", max_prime)->required()->check(CLI::Range(5L, 1L << 20));
    defer(cmd, [&] {
      int pass = 0;
      const int status = recip_verify_law(ctx.get(), law.c_str(), max_prime, &pass);
      finish_report(status, pass);
    });
  }
  {
    auto* cmd = verify->add_subcommand("example28", "Search for a prime octuple with chi = -1");
    cmd->add_option("--bound", bound)->default_val(500)->check(CLI::Range(5L, 1L << 20));
    cmd->add_option("--seed", seed)->required();
    defer(cmd, [&] {
      int pass = 0;
      const int status = recip_verify_example28(ctx.get(), bound, seed, &pass);
      finish_report(status, pass);
    });
  }
  {
    auto* cmd = verify->add_subcommand("thm210", "chi o tau = delta on constructed kernel elements");
    cmd->add_option("--bound", bound)->required()->check(CLI::Range(2L, 1L << 40));
    cmd->add_option("--count", count)->required()->check(CLI::Range(1, 1 << 24));
    cmd->add_option("--seed", seed)->required();
    defer(cmd, [&] {
      int pass = 0;
      const int status = recip_verify_thm210(ctx.get(), bound, count, seed, &pass);
      finish_report(status, pass);
    });
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }
  if (action) action();
  return exit_code;
}
