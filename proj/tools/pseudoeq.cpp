// Command-line front end: hull, check, search and verify-rel over a job
// configuration file.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "pseudoeq/commands.hpp"
#include "pseudoeq/config.hpp"
#include "pseudoeq/error.hpp"

namespace {

  struct Overrides {
    std::string                config;
    std::optional<std::size_t> max_len;
    std::optional<std::size_t> budget;
    std::optional<std::size_t> workers;
    bool                       machine = false;
    bool                       timing  = false;
  };

  CLI::App* add_command(CLI::App& app,
                        std::string const& name,
                        std::string const& description,
                        Overrides& o) {
    auto* sub = app.add_subcommand(name, description);
    sub->add_option("--config", o.config, "job configuration file")->required();
    sub->add_option("--max-len", o.max_len, "override max_len");
    sub->add_option("--budget", o.budget, "override the assignment budget")
        ->check(CLI::PositiveNumber);
    sub->add_option("--workers", o.workers, "enumeration threads")
        ->check(CLI::PositiveNumber);
    sub->add_flag("--machine", o.machine, "emit one JSON object");
    sub->add_flag("--timing", o.timing, "print elapsed time to stderr");
    return sub;
  }

  int run(std::function<pseudoeq::Report(pseudoeq::JobConfig const&)> const& cmd,
          Overrides const&                                                o) {
    using namespace pseudoeq;
    auto const start = std::chrono::steady_clock::now();
    try {
      auto cfg = load_config(o.config);
      if (o.max_len) {
        cfg.max_len = *o.max_len;
      }
      if (o.budget) {
        cfg.budget = *o.budget;
      }
      if (o.workers) {
        cfg.workers = *o.workers;
      }
      auto const report = cmd(cfg);
      std::cout << report.render(o.machine);
      if (o.timing) {
        std::chrono::duration<double> dt = std::chrono::steady_clock::now() - start;
        std::fprintf(stderr, "elapsed: %.3f s\n", dt.count());
      }
      return report.exit_code;
    } catch (ParseError const& e) {
      std::cerr << o.config << ": " << e.what() << '\n';
      return kExitConfigError;
    } catch (ConfigError const& e) {
      std::cerr << "config error: " << e.what() << '\n';
      return kExitConfigError;
    } catch (PreconditionError const& e) {
      std::cerr << "error: " << e.what() << '\n';
      return kExitConfigError;
    } catch (AlphabetMismatch const& e) {
      std::cerr << "error: " << e.what() << '\n';
      return kExitConfigError;
    } catch (RangeError const& e) {
      std::cerr << "error: " << e.what() << '\n';
      return kExitConfigError;
    } catch (GuardExceeded const& e) {
      std::cerr << "guard exceeded: " << e.what() << '\n';
      return kExitBudget;
    } catch (BudgetExceeded const& e) {
      std::cerr << "budget exceeded: " << e.what() << '\n';
      return kExitBudget;
    }
  }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Pseudo-solutions of word equations under anticongruences"};
  app.require_subcommand(1);

  Overrides o;
  auto* hull   = add_command(app, "hull", "free and pseudo-free hull of `words`", o);
  auto* check  = add_command(app, "check", "check `assign` against `equation`", o);
  auto* search = add_command(app, "search", "bounded rank certificate", o);
  auto* verify = add_command(app, "verify-rel", "check the axioms of `rel`", o);

  try {
    app.parse(argc, argv);
  } catch (CLI::ParseError const& e) {
    auto const rc = app.exit(e);
    return rc == 0 ? 0 : pseudoeq::kExitConfigError;
  }

  if (*hull) {
    return run(pseudoeq::cmd_hull, o);
  }
  if (*check) {
    return run(pseudoeq::cmd_check, o);
  }
  if (*search) {
    return run(pseudoeq::cmd_search, o);
  }
  if (*verify) {
    return run(pseudoeq::cmd_verify_rel, o);
  }
  return pseudoeq::kExitConfigError;
}
