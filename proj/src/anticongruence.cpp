#include "pseudoeq/anticongruence.hpp"

#include <algorithm>
#include <limits>
#include <numeric>

#include "pseudoeq/error.hpp"

namespace pseudoeq {

  namespace {
    void require_same(AlphabetPtr const& x, AlphabetPtr const& y) {
      if (!same_alphabet(x, y)) {
        throw AlphabetMismatch();
      }
    }

    class UnionFind {
     public:
      std::size_t add() {
        parent_.push_back(parent_.size());
        return parent_.size() - 1;
      }

      std::size_t find(std::size_t x) {
        while (parent_[x] != x) {
          parent_[x] = parent_[parent_[x]];
          x          = parent_[x];
        }
        return x;
      }

      bool unite(std::size_t x, std::size_t y) {
        x = find(x);
        y = find(y);
        if (x == y) {
          return false;
        }
        if (y < x) {
          std::swap(x, y);
        }
        parent_[y] = x;
        return true;
      }

     private:
      std::vector<std::size_t> parent_;
    };

    using Equiv = std::function<bool(Word const&, Word const&)>;

    AxiomVerdict verify_impl(AlphabetPtr const& alphabet,
                             Equiv const&       equiv,
                             std::size_t        max_len,
                             std::size_t        guard) {
      if (max_len == 0) {
        throw RangeError("verify_axioms needs max_len >= 1");
      }
      std::size_t count = 1;
      for (std::size_t i = 0; i < max_len; ++i) {
        if (alphabet->size() != 0 && count > guard / alphabet->size()) {
          throw GuardExceeded("|alphabet|^" + std::to_string(max_len),
                              guard);
        }
        count *= alphabet->size();
      }
      if (count > guard) {
        throw GuardExceeded("|alphabet|^" + std::to_string(max_len), guard);
      }

      std::vector<std::vector<Word>> strata;
      for (std::size_t n = 0; n <= max_len; ++n) {
        strata.push_back(words_of_length(alphabet, n));
      }

      AxiomVerdict verdict;
      auto         fail = [&](Axiom a, Word u, Word v) {
        verdict.violation = AxiomViolation{a, std::move(u), std::move(v), std::nullopt, 0};
        return verdict;
      };

      for (std::size_t n = 0; n <= max_len; ++n) {
        auto const&                    s = strata[n];
        std::vector<std::vector<char>> m(s.size(),
                                         std::vector<char>(s.size(), 0));
        for (std::size_t i = 0; i < s.size(); ++i) {
          for (std::size_t j = 0; j < s.size(); ++j) {
            m[i][j] = equiv(s[i], s[j]) ? 1 : 0;
          }
        }
        for (std::size_t i = 0; i < s.size(); ++i) {
          auto const& u = s[i];
          if (!m[i][i]) {
            return fail(Axiom::reflexivity, u, u);
          }
          for (std::size_t j = 0; j < s.size(); ++j) {
            if (!m[i][j] || i == j) {
              continue;
            }
            auto const& v = s[j];
            if (!m[j][i]) {
              return fail(Axiom::symmetry, u, v);
            }
            for (std::size_t cut = 1; cut < n; ++cut) {
              if (!equiv(u.prefix(cut), v.prefix(cut))
                  || !equiv(u.suffix_from(cut), v.suffix_from(cut))) {
                fail(Axiom::split, u, v);
                verdict.violation->cut = cut;
                return verdict;
              }
            }
            for (std::size_t l = 0; l < s.size(); ++l) {
              if (m[j][l] && !m[i][l]) {
                fail(Axiom::transitivity, u, v);
                verdict.violation->w = s[l];
                return verdict;
              }
            }
          }
          for (std::size_t other = 0; other <= max_len; ++other) {
            if (other == n) {
              continue;
            }
            for (auto const& x : strata[other]) {
              if (equiv(u, x)) {
                return fail(Axiom::length, u, x);
              }
            }
          }
        }
      }
      return verdict;
    }
  }  // namespace

  RelPtr Anticongruence::identity(AlphabetPtr alphabet) {
    return RelPtr(new Anticongruence(Kind::identity, std::move(alphabet)));
  }

  RelPtr Anticongruence::permutation(AlphabetPtr alphabet,
                                     std::vector<Letter> image) {
    if (image.size() != alphabet->size()) {
      throw PreconditionError("permutation must map every letter");
    }
    std::vector<bool> hit(image.size(), false);
    for (auto x : image) {
      if (x >= image.size() || hit[x]) {
        throw PreconditionError("permutation is not a bijection");
      }
      hit[x] = true;
    }
    std::unique_ptr<Anticongruence> rel(
        new Anticongruence(Kind::permutation, std::move(alphabet)));
    rel->image_ = std::move(image);
    return RelPtr(std::move(rel));
  }

  RelPtr Anticongruence::permutation_from_cycles(
      AlphabetPtr                             alphabet,
      std::vector<std::vector<Letter>> const& cycles) {
    std::vector<Letter> image(alphabet->size());
    std::iota(image.begin(), image.end(), Letter{0});
    std::vector<bool> seen(alphabet->size(), false);
    for (auto const& cycle : cycles) {
      for (std::size_t i = 0; i < cycle.size(); ++i) {
        auto x = cycle[i];
        if (x >= alphabet->size() || seen[x]) {
          throw PreconditionError("letter repeated in cycle notation");
        }
        seen[x]  = true;
        image[x] = cycle[(i + 1) % cycle.size()];
      }
    }
    return permutation(std::move(alphabet), std::move(image));
  }

  Word Anticongruence::apply(Word const& u) const {
    std::vector<Letter> letters;
    letters.reserve(u.size());
    for (auto x : u.letters()) {
      letters.push_back(image_[x]);
    }
    return Word(u.alphabet(), std::move(letters));
  }

  bool Anticongruence::equiv(Word const& u, Word const& v) const {
    require_same(u.alphabet(), v.alphabet());
    require_same(alphabet_, u.alphabet());
    if (u.size() != v.size()) {
      return false;
    }
    if (u == v) {
      return true;
    }
    switch (kind_) {
      case Kind::identity:
        return false;
      case Kind::permutation: {
        auto cur = apply(u);
        while (cur != u) {
          if (cur == v) {
            return true;
          }
          cur = apply(cur);
        }
        return false;
      }
      case Kind::table: {
        auto iu = class_index_.find(u);
        if (iu == class_index_.end()) {
          return false;
        }
        auto iv = class_index_.find(v);
        return iv != class_index_.end() && iu->second == iv->second;
      }
    }
    return false;
  }

  FiniteLanguage Anticongruence::class_of(Word const& u) const {
    require_same(alphabet_, u.alphabet());
    switch (kind_) {
      case Kind::identity:
        break;
      case Kind::permutation: {
        std::vector<Word> orbit{u};
        auto              cur = apply(u);
        while (cur != u) {
          orbit.push_back(cur);
          cur = apply(cur);
        }
        return FiniteLanguage(alphabet_, std::move(orbit));
      }
      case Kind::table: {
        auto it = class_index_.find(u);
        if (it != class_index_.end()) {
          return FiniteLanguage(alphabet_, classes_[it->second]);
        }
        break;
      }
    }
    return FiniteLanguage(alphabet_, {u});
  }

  Word Anticongruence::canonical(Word const& u) const {
    if (kind_ == Kind::identity) {
      require_same(alphabet_, u.alphabet());
      return u;
    }
    return class_of(u)[0];
  }

  std::string Anticongruence::to_string() const {
    switch (kind_) {
      case Kind::identity:
        return "identity";
      case Kind::permutation: {
        std::string       out = "permutation: ";
        std::vector<bool> seen(image_.size(), false);
        bool              any = false;
        for (std::size_t x = 0; x < image_.size(); ++x) {
          if (seen[x] || image_[x] == x) {
            continue;
          }
          any = true;
          out += '(';
          auto y = static_cast<Letter>(x);
          do {
            if (y != x) {
              out += ' ';
            }
            out += alphabet_->symbol(y);
            seen[y] = true;
            y       = image_[y];
          } while (y != x);
          out += ')';
        }
        return any ? out : out + "()";
      }
      case Kind::table: {
        std::string out = "table:";
        bool        first = true;
        for (auto const& cls : classes_) {
          for (std::size_t i = 1; i < cls.size(); ++i) {
            out += first ? " " : ", ";
            first = false;
            out += cls[0].to_string() + "~" + cls[i].to_string();
          }
        }
        return out;
      }
    }
    return {};
  }

  RelPtr close_pairs(AlphabetPtr                               alphabet,
                     std::vector<std::pair<Word, Word>> const& pairs) {
    std::map<Word, std::size_t> id;
    std::vector<Word>           words;
    UnionFind                   uf;
    auto get = [&](Word const& w) {
      auto [it, fresh] = id.emplace(w, words.size());
      if (fresh) {
        words.push_back(w);
        uf.add();
      }
      return it->second;
    };

    for (auto const& [u, v] : pairs) {
      require_same(alphabet, u.alphabet());
      require_same(alphabet, v.alphabet());
      if (u.size() != v.size()) {
        throw PreconditionError("pair " + u.to_string() + "~" + v.to_string()
                                + " has mismatched lengths");
      }
      if (u != v) {
        uf.unite(get(u), get(v));
      }
    }

    // Split every class against its first member until nothing merges.
    // Splits only produce shorter words, so longest classes go first.
    bool changed = true;
    while (changed) {
      changed = false;
      std::map<std::size_t, std::vector<std::size_t>> groups;
      for (std::size_t i = 0; i < words.size(); ++i) {
        groups[uf.find(i)].push_back(i);
      }
      std::vector<std::vector<std::size_t>> order;
      for (auto& [root, members] : groups) {
        if (members.size() > 1) {
          order.push_back(std::move(members));
        }
      }
      std::stable_sort(order.begin(), order.end(), [&](auto& x, auto& y) {
        return words[x[0]].size() > words[y[0]].size();
      });
      for (auto const& members : order) {
        Word const first = words[members[0]];
        for (std::size_t k = 1; k < members.size(); ++k) {
          Word const other = words[members[k]];
          for (std::size_t cut = 1; cut < first.size(); ++cut) {
            changed |= uf.unite(get(first.prefix(cut)), get(other.prefix(cut)));
            changed |= uf.unite(get(first.suffix_from(cut)),
                                get(other.suffix_from(cut)));
          }
        }
      }
    }

    std::unique_ptr<Anticongruence> rel(
        new Anticongruence(Anticongruence::Kind::table, alphabet));
    std::map<std::size_t, std::vector<Word>> classes;
    for (std::size_t i = 0; i < words.size(); ++i) {
      classes[uf.find(i)].push_back(words[i]);
    }
    for (auto& [root, members] : classes) {
      if (members.size() > 1) {
        std::sort(members.begin(), members.end());
        rel->classes_.push_back(std::move(members));
      }
    }
    std::sort(rel->classes_.begin(),
              rel->classes_.end(),
              [](auto const& x, auto const& y) {
                if (x[0].size() != y[0].size()) {
                  return x[0].size() < y[0].size();
                }
                return x[0] < y[0];
              });
    for (std::size_t c = 0; c < rel->classes_.size(); ++c) {
      for (auto const& w : rel->classes_[c]) {
        rel->class_index_.emplace(w, c);
      }
    }
    return RelPtr(std::move(rel));
  }

  RawRelation reversal_relation(AlphabetPtr alphabet) {
    return RawRelation{
        alphabet,
        [](Word const& u, Word const& v) {
          return u == v || (u.size() == v.size() && reversed(u) == v);
        },
        "reversal"};
  }

  std::string to_string(Axiom a) {
    switch (a) {
      case Axiom::reflexivity:
        return "reflexivity";
      case Axiom::symmetry:
        return "symmetry";
      case Axiom::transitivity:
        return "transitivity";
      case Axiom::length:
        return "length";
      case Axiom::split:
        return "split";
    }
    return "unknown";
  }

  AxiomVerdict verify_axioms(Anticongruence const& rel,
                             std::size_t           max_len,
                             std::size_t           guard) {
    return verify_impl(
        rel.alphabet(),
        [&rel](Word const& u, Word const& v) { return rel.equiv(u, v); },
        max_len,
        guard);
  }

  AxiomVerdict verify_axioms(RawRelation const& rel,
                             std::size_t        max_len,
                             std::size_t        guard) {
    return verify_impl(rel.alphabet, rel.equiv, max_len, guard);
  }

  EqClass::EqClass(RelPtr rel, Word const& w)
      : rel_(std::move(rel)), rep_(rel_->canonical(w)) {}

  std::string EqClass::to_string() const {
    return "[" + rep_.to_string() + "]";
  }

}  // namespace pseudoeq
