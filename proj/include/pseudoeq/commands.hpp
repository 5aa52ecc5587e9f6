#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "pseudoeq/config.hpp"

namespace pseudoeq {

  enum ExitCode : int {
    kExitPass        = 0,
    kExitFail        = 1,
    kExitConfigError = 2,
    kExitBudget      = 3,
  };

  //! Result of one command, in a human and a machine form carrying the same
  //! content. Deterministic for a fixed configuration.
  struct Report {
    std::string            command;
    nlohmann::ordered_json data = nlohmann::ordered_json::object();
    std::vector<std::string> lines;
    int                      exit_code = kExitPass;

    //! Text lines, or with `machine` a single JSON object.
    std::string render(bool machine) const;
  };

  //! Free hull, rank, pseudo-free hull and pseudo-rank of `words`.
  Report cmd_hull(JobConfig const& cfg);
  //! Whether `assign` is a (pseudo-)solution of `equation`, with the descent
  //! to an ordinary solution when it is.
  Report cmd_check(JobConfig const& cfg);
  //! Bounded rank certificate and per-solution descent check.
  Report cmd_search(JobConfig const& cfg);
  //! Axiom check of `rel` up to max_len.
  Report cmd_verify_rel(JobConfig const& cfg);

}  // namespace pseudoeq
