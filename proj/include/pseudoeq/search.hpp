#pragma once

// Bounded exhaustive search over pseudo-solutions, and the rank
// certificates built on it. Every result here is a lower bound valid for
// the stated representative length only.

#include <cstddef>
#include <functional>
#include <map>
#include <mutex>
#include <optional>
#include <type_traits>
#include <utility>
#include <vector>

#include "pseudoeq/anticongruence.hpp"
#include "pseudoeq/equations.hpp"

namespace pseudoeq {

  struct SearchOptions {
    //! Longest class representative assigned to an unknown.
    std::size_t max_len = 3;
    //! Cap on the number of assignments examined.
    std::size_t budget = 10'000'000;
    std::size_t product_limit = kDefaultProductLimit;
    //! Worker threads; results do not depend on it.
    std::size_t workers = 1;
  };

  struct EnumerationStats {
    //! Number of assignments in the full search space (saturating).
    std::size_t total = 0;
    //! Assignments examined, a prefix of the lexicographic order.
    std::size_t examined = 0;
    std::size_t emitted  = 0;

    bool complete() const noexcept {
      return examined == total;
    }
  };

  struct FoundSolution {
    PseudoSolution phi;
    Word           common;
  };

  //! Canonical class representatives of length ≤ max_len, by length and
  //! then lexicographically.
  std::vector<EqClass> classes_up_to(RelPtr const& rel, std::size_t max_len);

  namespace detail {
    //! Calls `sink(bucket, solution)` for every pseudo-solution found, from
    //! worker threads. Solutions of one bucket arrive in order from a single
    //! thread; buckets are indexed by the class of the first unknown.
    EnumerationStats scan(
        Equation const&                                              e,
        RelPtr const&                                                rel,
        SearchOptions const&                                         opts,
        std::function<void(std::size_t, FoundSolution const&)> const& sink);
  }  // namespace detail

  //! Runs `f` on every pseudo-solution with representatives of length ≤
  //! max_len (in parallel when opts.workers > 1) and returns the results in
  //! lexicographic order of assignments. Stops quietly at the budget; check
  //! `stats->complete()`.
  template <typename F>
  auto map_pseudo_solutions(Equation const&      e,
                            RelPtr const&        rel,
                            SearchOptions const& opts,
                            F&&                  f,
                            EnumerationStats*    stats = nullptr)
      -> std::vector<std::invoke_result_t<F&, FoundSolution const&>> {
    using T = std::invoke_result_t<F&, FoundSolution const&>;
    std::map<std::size_t, std::vector<T>> buckets;
    std::mutex                            lock;
    auto st = detail::scan(
        e, rel, opts, [&](std::size_t bucket, FoundSolution const& s) {
          T value = f(s);
          std::lock_guard<std::mutex> guard(lock);
          buckets[bucket].push_back(std::move(value));
        });
    if (stats != nullptr) {
      *stats = st;
    }
    std::vector<T> out;
    for (auto& [bucket, values] : buckets) {
      for (auto& v : values) {
        out.push_back(std::move(v));
      }
    }
    return out;
  }

  //! All pseudo-solutions of e under rel with representatives of length ≤
  //! max_len, in lexicographic order of assignments. Throws BudgetExceeded
  //! if the search space is larger than the budget.
  std::vector<FoundSolution> enumerate_pseudo_solutions(
      Equation const&      e,
      RelPtr const&        rel,
      SearchOptions const& opts);

  struct CertifiedSolution {
    PseudoSolution phi;
    Word           common;
    //! Pseudo-rank of the union of the image classes.
    std::size_t pseudo_rank = 0;
    //! Rank of the descended ordinary solution α.
    std::size_t alpha_rank = 0;
    bool        theorem_holds = false;
  };

  struct RankCertificate {
    std::size_t max_len = 0;

    std::size_t             ordinary_solutions = 0;
    std::size_t             max_ordinary_rank  = 0;
    std::optional<Solution> ordinary_witness;
    EnumerationStats        ordinary_stats;

    std::vector<CertifiedSolution> pseudo_solutions;
    std::size_t                    max_pseudo_rank = 0;
    std::optional<PseudoSolution>  pseudo_witness;
    EnumerationStats               pseudo_stats;

    std::size_t theorem_checks   = 0;
    std::size_t theorem_failures = 0;

    bool complete() const noexcept {
      return ordinary_stats.complete() && pseudo_stats.complete();
    }
  };

  //! Exhaustive lower bounds on the rank (identity relation over sigma) and
  //! the pseudo-rank (under rel) of e, with every pseudo-solution pushed
  //! through `descend` and checked to give an ordinary solution whose rank
  //! equals its pseudo-rank. A budget overrun yields a partial certificate
  //! with complete() false. Throws AlphabetMismatch if rel is not over sigma.
  RankCertificate bounded_rank_certificate(Equation const&      e,
                                           AlphabetPtr const&   sigma,
                                           RelPtr const&        rel,
                                           SearchOptions const& opts);

}  // namespace pseudoeq
