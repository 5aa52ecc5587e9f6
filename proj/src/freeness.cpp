#include "pseudoeq/freeness.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <queue>
#include <set>

#include "pseudoeq/error.hpp"

namespace pseudoeq {

  namespace {
    FiniteLanguage without_empty(FiniteLanguage const& x) {
      if (x.empty() || !x[0].empty()) {
        return x;
      }
      std::vector<Word> rest(x.begin() + 1, x.end());
      return FiniteLanguage(x.alphabet(), std::move(rest));
    }

    bool is_proper_prefix(Word const& p, Word const& w) {
      if (p.size() >= w.size()) {
        return false;
      }
      auto pl = p.letters();
      auto wl = w.letters();
      return std::equal(pl.begin(), pl.end(), wl.begin());
    }

    constexpr std::size_t kTerminal = std::numeric_limits<std::size_t>::max();
    constexpr std::size_t kInf      = std::numeric_limits<std::size_t>::max();

    // One move of the lagging factorization: append code word `code`.
    struct Move {
      std::size_t code;
      std::size_t next;  // state id or kTerminal
      std::size_t cost;  // letters added to the leading side
      bool        flip;  // the lagging side overtakes
    };

    // Dangling-suffix graph of the Sardinas–Patterson procedure.
    struct SuffixGraph {
      std::vector<Word>              state;
      std::vector<std::vector<Move>> moves;
      std::map<Word, std::size_t>    id;

      std::size_t intern(Word const& d) {
        auto [it, fresh] = id.emplace(d, state.size());
        if (fresh) {
          state.push_back(d);
          moves.emplace_back();
        }
        return it->second;
      }

      // Breadth-first over all states interned so far, including the
      // ones discovered on the way.
      void build(FiniteLanguage const& b) {
        for (std::size_t s = 0; s < state.size(); ++s) {
          Word const  d = state[s];
          std::vector<Move> out;
          for (std::size_t j = 0; j < b.size(); ++j) {
            auto const& c = b[j];
            if (c == d) {
              out.push_back({j, kTerminal, 0, false});
            } else if (is_proper_prefix(c, d)) {
              out.push_back({j, intern(d.suffix_from(c.size())), 0, false});
            } else if (is_proper_prefix(d, c)) {
              out.push_back({j,
                             intern(c.suffix_from(d.size())),
                             c.size() - d.size(),
                             true});
            }
          }
          moves[s] = std::move(out);
        }
      }
    };
  }  // namespace

  namespace detail {
    Basis make_basis(FiniteLanguage words) {
      return Basis(std::move(words));
    }
  }  // namespace detail

  Basis Basis::checked(FiniteLanguage words) {
    if (!words.empty() && words[0].empty()) {
      throw PreconditionError("basis contains the empty word");
    }
    if (minimal_generators(words).size() != words.size()) {
      throw PreconditionError("basis is not a minimal generating set");
    }
    if (!is_code(words).is_code) {
      throw PreconditionError("basis is not a code");
    }
    return Basis(std::move(words));
  }

  CodeVerdict is_code(FiniteLanguage const& b) {
    if (!b.empty() && b[0].empty()) {
      throw PreconditionError("code test on a set containing ε");
    }
    SuffixGraph g;
    struct Start {
      std::size_t shorter, longer, state;
    };
    std::vector<Start> starts;
    for (std::size_t i = 0; i < b.size(); ++i) {
      for (std::size_t j = 0; j < b.size(); ++j) {
        if (is_proper_prefix(b[i], b[j])) {
          auto s = g.intern(b[j].suffix_from(b[i].size()));
          starts.push_back({i, j, s});
        }
      }
    }
    g.build(b);

    // Fewest letters still to be added before both sides meet.
    auto const         n = g.state.size();
    std::vector<std::size_t>              dist(n, kInf);
    std::vector<std::vector<std::size_t>> into(n);  // reverse adjacency
    using Item = std::pair<std::size_t, std::size_t>;
    std::priority_queue<Item, std::vector<Item>, std::greater<>> pq;
    for (std::size_t s = 0; s < n; ++s) {
      for (auto const& m : g.moves[s]) {
        if (m.next == kTerminal) {
          if (dist[s] != 0) {
            dist[s] = 0;
            pq.emplace(0, s);
          }
        } else {
          into[m.next].push_back(s);
        }
      }
    }
    while (!pq.empty()) {
      auto [d, t] = pq.top();
      pq.pop();
      if (d != dist[t]) {
        continue;
      }
      for (auto s : into[t]) {
        for (auto const& m : g.moves[s]) {
          if (m.next == t && d + m.cost < dist[s]) {
            dist[s] = d + m.cost;
            pq.emplace(dist[s], s);
          }
        }
      }
    }

    CodeVerdict verdict;
    bool        reachable = std::any_of(starts.begin(), starts.end(), [&](auto& st) {
      return dist[st.state] != kInf;
    });
    if (!reachable) {
      return verdict;
    }

    // Least completion along optimal moves. Optimal moves either lower the
    // distance or keep it and shorten the suffix, so (dist, |suffix|) order
    // is topological.
    std::vector<std::size_t> order;
    for (std::size_t s = 0; s < n; ++s) {
      if (dist[s] != kInf) {
        order.push_back(s);
      }
    }
    std::sort(order.begin(), order.end(), [&](auto x, auto y) {
      if (dist[x] != dist[y]) {
        return dist[x] < dist[y];
      }
      return g.state[x].size() < g.state[y].size();
    });
    std::vector<std::vector<Letter>> best(n);
    std::vector<std::size_t>         choice(n, kInf);
    for (auto s : order) {
      auto const& d = g.state[s];
      bool        have = false;
      for (std::size_t k = 0; k < g.moves[s].size(); ++k) {
        auto const& m       = g.moves[s][k];
        auto const  rest    = m.next == kTerminal ? 0 : dist[m.next];
        if (rest == kInf || m.cost + rest != dist[s]) {
          continue;
        }
        std::vector<Letter> cand;
        if (m.flip) {
          auto cl = b[m.code].letters();
          cand.assign(cl.begin() + d.size(), cl.end());
        }
        if (m.next != kTerminal) {
          cand.insert(cand.end(), best[m.next].begin(), best[m.next].end());
        }
        if (!have || cand < best[s]) {
          best[s]   = std::move(cand);
          choice[s] = k;
          have      = true;
        }
      }
    }

    std::optional<std::vector<Letter>> witness;
    Start const*                       chosen = nullptr;
    for (auto const& st : starts) {
      if (dist[st.state] == kInf) {
        continue;
      }
      std::vector<Letter> cand(b[st.longer].letters().begin(),
                               b[st.longer].letters().end());
      cand.insert(cand.end(), best[st.state].begin(), best[st.state].end());
      if (!witness || cand.size() < witness->size()
          || (cand.size() == witness->size() && cand < *witness)) {
        witness = std::move(cand);
        chosen  = &st;
      }
    }

    verdict.is_code = false;
    verdict.witness = Word(b.alphabet(), *witness);
    std::vector<Word> lagging{b[chosen->shorter]};
    std::vector<Word> leading{b[chosen->longer]};
    bool              swapped = false;
    std::size_t       s       = chosen->state;
    while (true) {
      auto const& m = g.moves[s][choice[s]];
      lagging.push_back(b[m.code]);
      if (m.flip) {
        std::swap(lagging, leading);
        swapped = !swapped;
      }
      if (m.next == kTerminal) {
        break;
      }
      s = m.next;
    }
    if (swapped) {
      std::swap(lagging, leading);
    }
    verdict.first  = std::move(lagging);
    verdict.second = std::move(leading);
    return verdict;
  }

  Word stability_word(CodeVerdict const& verdict) {
    if (verdict.is_code || verdict.first.empty() || verdict.second.empty()) {
      throw PreconditionError("stability word needs a failed code test");
    }
    auto const& x = verdict.first.front();
    auto const& y = verdict.second.front();
    // Distinct first factors of one word never have equal length.
    return x.size() < y.size() ? y.suffix_from(x.size())
                               : x.suffix_from(y.size());
  }

  FiniteLanguage minimal_generators(FiniteLanguage const& f) {
    std::vector<Word> sorted(f.begin(), f.end());
    std::stable_sort(sorted.begin(), sorted.end(), [](auto& x, auto& y) {
      return x.size() < y.size();
    });
    std::vector<Word> kept;
    FiniteLanguage    shorter(f.alphabet());
    std::size_t       shorter_len = 0;
    for (auto const& w : sorted) {
      if (w.empty()) {
        continue;
      }
      if (w.size() != shorter_len) {
        // Only strictly shorter generators can take part in a product of
        // two or more nonempty factors.
        shorter     = FiniteLanguage(f.alphabet(), kept);
        shorter_len = w.size();
      }
      if (!in_monoid(w, shorter)) {
        kept.push_back(w);
      }
    }
    return FiniteLanguage(f.alphabet(), std::move(kept));
  }

  Basis free_hull(FiniteLanguage const& x) {
    auto f = without_empty(x);
    while (true) {
      auto b       = minimal_generators(f);
      auto verdict = is_code(b);
      if (verdict.is_code) {
        return detail::make_basis(std::move(b));
      }
      auto z = stability_word(verdict);
      f      = set_union(b, FiniteLanguage(b.alphabet(), {std::move(z)}));
    }
  }

  std::size_t rank(FiniteLanguage const& x) {
    return free_hull(x).size();
  }

  Basis hull_oracle(FiniteLanguage const& x, std::size_t guard) {
    auto const xs = without_empty(x);
    if (xs.empty()) {
      return detail::make_basis(FiniteLanguage(x.alphabet()));
    }
    // Every code B ⊆ Factors(x) with x ⊆ ⟨B⟩ contains the code of the
    // factors actually used in the factorizations of x, whose monoid is
    // smaller. So it is enough to range over one cutting of each element.
    std::size_t total = 1;
    std::vector<std::size_t> masks;
    for (auto const& w : xs) {
      auto const m = std::size_t{1} << (w.size() - 1);
      if (w.size() - 1 >= 63 || total > guard / m) {
        throw GuardExceeded("hull oracle candidate space", guard);
      }
      total *= m;
      masks.push_back(m);
    }

    std::set<std::vector<Word>> seen;
    std::vector<FiniteLanguage> codes;
    std::vector<std::size_t>    pick(xs.size(), 0);
    for (std::size_t n = 0; n < total; ++n) {
      auto rest = n;
      for (std::size_t i = 0; i < xs.size(); ++i) {
        pick[i] = rest % masks[i];
        rest /= masks[i];
      }
      std::vector<Word> pieces;
      for (std::size_t i = 0; i < xs.size(); ++i) {
        auto const& w     = xs[i];
        std::size_t start = 0;
        for (std::size_t cut = 1; cut < w.size(); ++cut) {
          if (pick[i] >> (cut - 1) & 1u) {
            pieces.push_back(w.factor(start, cut - start));
            start = cut;
          }
        }
        pieces.push_back(w.suffix_from(start));
      }
      FiniteLanguage cand(x.alphabet(), std::move(pieces));
      std::vector<Word> key(cand.begin(), cand.end());
      if (!seen.insert(key).second) {
        continue;
      }
      if (is_code(cand).is_code) {
        codes.push_back(std::move(cand));
      }
    }

    // Slice of the first candidate monoid, filtered by all the others.
    auto const        len = xs.max_length();
    std::set<Word>    slice{Word(x.alphabet())};
    std::vector<Word> frontier{Word(x.alphabet())};
    while (!frontier.empty()) {
      std::vector<Word> next;
      for (auto const& u : frontier) {
        for (auto const& b : codes.front()) {
          if (u.size() + b.size() <= len) {
            auto v = concat(u, b);
            if (slice.insert(v).second) {
              next.push_back(std::move(v));
            }
          }
        }
      }
      frontier = std::move(next);
    }
    std::vector<Word> common;
    for (auto const& w : slice) {
      bool all = std::all_of(codes.begin() + 1, codes.end(), [&](auto& c) {
        return in_monoid(w, c);
      });
      if (all) {
        common.push_back(w);
      }
    }
    return detail::make_basis(
        minimal_generators(FiniteLanguage(x.alphabet(), std::move(common))));
  }

}  // namespace pseudoeq
