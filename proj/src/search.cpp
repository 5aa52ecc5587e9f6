#include "pseudoeq/search.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <limits>
#include <thread>

#include "pseudoeq/error.hpp"

namespace pseudoeq {

  namespace {
    std::size_t saturating_mul(std::size_t x, std::size_t y) {
      if (x != 0 && y > std::numeric_limits<std::size_t>::max() / x) {
        return std::numeric_limits<std::size_t>::max();
      }
      return x * y;
    }
  }  // namespace

  std::vector<EqClass> classes_up_to(RelPtr const& rel, std::size_t max_len) {
    std::vector<EqClass> out;
    for (std::size_t n = 0; n <= max_len; ++n) {
      for (auto const& w : words_of_length(rel->alphabet(), n)) {
        if (rel->canonical(w) == w) {
          out.emplace_back(rel, w);
        }
      }
    }
    return out;
  }

  namespace detail {
    EnumerationStats scan(
        Equation const&                                                e,
        RelPtr const&                                                  rel,
        SearchOptions const&                                           opts,
        std::function<void(std::size_t, FoundSolution const&)> const& sink) {
      auto const classes = classes_up_to(rel, opts.max_len);
      auto const k       = classes.size();
      auto const theta   = e.unknowns();
      auto const n       = theta->size();

      std::vector<FiniteLanguage> members;
      for (auto const& c : classes) {
        members.push_back(c.members());
      }
      // Net number of occurrences (left minus right) of each unknown; an
      // assignment can only work if the weighted lengths balance.
      std::vector<long long> net(n, 0);
      for (auto x : e.lhs().letters()) {
        ++net[x];
      }
      for (auto x : e.rhs().letters()) {
        --net[x];
      }

      std::size_t rest = 1;
      for (std::size_t i = 1; i < n; ++i) {
        rest = saturating_mul(rest, k);
      }
      EnumerationStats stats;
      stats.total            = n == 0 ? 1 : saturating_mul(rest, k);
      stats.examined         = std::min(stats.total, opts.budget);
      std::size_t const limit   = stats.examined;
      std::size_t const buckets = n == 0 ? 1 : k;

      std::atomic<std::size_t> next_bucket{0};
      std::atomic<std::size_t> emitted{0};
      std::atomic<bool>        failed{false};
      std::exception_ptr       error;
      std::mutex               error_lock;

      auto side = [&](Word const& w, std::vector<std::size_t> const& digits) {
        auto lang = FiniteLanguage::unit(rel->alphabet());
        for (auto x : w.letters()) {
          lang = product(lang, members[digits[x]], opts.product_limit);
        }
        return lang;
      };

      auto run_bucket = [&](std::size_t b) {
        std::size_t const base = saturating_mul(b, rest);
        if (base >= limit) {
          return;
        }
        std::size_t const        end = std::min(limit, base + rest);
        std::vector<std::size_t> digits(n, 0);
        if (n > 0) {
          digits[0] = b;
        }
        for (std::size_t idx = base; idx < end && !failed; ++idx) {
          long long balance = 0;
          for (std::size_t x = 0; x < n; ++x) {
            balance += net[x] * static_cast<long long>(classes[digits[x]].length());
          }
          if (balance == 0) {
            auto common = set_intersection(side(e.lhs(), digits),
                                           side(e.rhs(), digits));
            if (!common.empty()) {
              std::map<std::string, EqClass> images;
              for (std::size_t x = 0; x < n; ++x) {
                images.emplace(theta->symbol(static_cast<Letter>(x)),
                               classes[digits[x]]);
              }
              sink(b, FoundSolution{PseudoSolution(rel, std::move(images)),
                                    common[0]});
              ++emitted;
            }
          }
          for (std::size_t i = n; i-- > 1;) {
            if (++digits[i] < k) {
              break;
            }
            digits[i] = 0;
          }
        }
      };

      auto worker = [&] {
        while (!failed) {
          auto b = next_bucket++;
          if (b >= buckets) {
            return;
          }
          try {
            run_bucket(b);
          } catch (...) {
            std::lock_guard<std::mutex> guard(error_lock);
            if (!error) {
              error = std::current_exception();
            }
            failed = true;
          }
        }
      };

      auto const workers = std::max<std::size_t>(1, std::min(opts.workers, buckets));
      if (workers == 1) {
        worker();
      } else {
        std::vector<std::jthread> pool;
        for (std::size_t i = 0; i < workers; ++i) {
          pool.emplace_back(worker);
        }
      }
      if (error) {
        std::rethrow_exception(error);
      }
      stats.emitted = emitted;
      return stats;
    }
  }  // namespace detail

  std::vector<FoundSolution> enumerate_pseudo_solutions(
      Equation const&      e,
      RelPtr const&        rel,
      SearchOptions const& opts) {
    EnumerationStats stats;
    auto             out = map_pseudo_solutions(
        e, rel, opts, [](FoundSolution const& s) { return s; }, &stats);
    if (!stats.complete()) {
      throw BudgetExceeded(stats.examined, stats.total);
    }
    return out;
  }

  RankCertificate bounded_rank_certificate(Equation const&      e,
                                           AlphabetPtr const&   sigma,
                                           RelPtr const&        rel,
                                           SearchOptions const& opts) {
    if (!same_alphabet(sigma, rel->alphabet())) {
      throw AlphabetMismatch();
    }
    RankCertificate cert;
    cert.max_len = opts.max_len;

    struct Ordinary {
      Solution    phi;
      std::size_t rank;
    };
    auto ordinary = map_pseudo_solutions(
        e,
        Anticongruence::identity(sigma),
        opts,
        [&](FoundSolution const& s) {
          std::map<std::string, Word> images;
          for (auto const& [x, c] : s.phi.images()) {
            images.emplace(x, c.rep());
          }
          Solution phi(sigma, std::move(images));
          auto     r = solution_rank(phi);
          return Ordinary{std::move(phi), r};
        },
        &cert.ordinary_stats);
    cert.ordinary_solutions = ordinary.size();
    for (auto& o : ordinary) {
      if (!cert.ordinary_witness || o.rank > cert.max_ordinary_rank) {
        cert.max_ordinary_rank = o.rank;
        cert.ordinary_witness  = std::move(o.phi);
      }
    }

    cert.pseudo_solutions = map_pseudo_solutions(
        e,
        rel,
        opts,
        [&](FoundSolution const& s) {
          auto d = descend(e, s.phi, opts.product_limit);
          return CertifiedSolution{
              s.phi, s.common, d.pseudo_rank, d.alpha_rank, d.holds()};
        },
        &cert.pseudo_stats);
    for (auto const& c : cert.pseudo_solutions) {
      ++cert.theorem_checks;
      if (!c.theorem_holds) {
        ++cert.theorem_failures;
      }
      if (!cert.pseudo_witness || c.pseudo_rank > cert.max_pseudo_rank) {
        cert.max_pseudo_rank = c.pseudo_rank;
        cert.pseudo_witness  = c.phi;
      }
    }
    return cert;
  }

}  // namespace pseudoeq
