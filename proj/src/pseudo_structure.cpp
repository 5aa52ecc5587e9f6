#include "pseudoeq/pseudo_structure.hpp"

#include <algorithm>
#include <stdexcept>

#include "pseudoeq/error.hpp"

namespace pseudoeq {

  std::string ClassWord::to_string() const {
    std::string out = "(";
    for (std::size_t i = 0; i < classes.size(); ++i) {
      if (i > 0) {
        out += ',';
      }
      out += classes[i].to_string();
    }
    return out + ")";
  }

  ClassWord operator*(ClassWord const& x, ClassWord const& y) {
    ClassWord out = x;
    out.classes.insert(out.classes.end(), y.classes.begin(), y.classes.end());
    return out;
  }

  PseudoFreeBasis::PseudoFreeBasis(RelPtr rel, Basis basis)
      : rel_(std::move(rel)), basis_(std::move(basis)) {
    auto const& words = basis_.words();
    for (auto const& b : words) {
      for (auto const& m : rel_->class_of(b)) {
        if (!words.contains(m)) {
          throw PreconditionError("basis is not closed: " + m.to_string()
                                  + " ~ " + b.to_string() + " is missing");
        }
      }
      classes_.emplace_back(rel_, b);
    }
    std::sort(classes_.begin(), classes_.end());
    classes_.erase(std::unique(classes_.begin(), classes_.end()),
                   classes_.end());
    std::vector<std::string> names;
    for (auto const& c : classes_) {
      names.push_back(c.to_string());
    }
    class_alphabet_ = make_alphabet(std::move(names));
    for (auto const& b : words) {
      EqClass const c(rel_, b);
      auto it = std::lower_bound(classes_.begin(), classes_.end(), c);
      basis_class_.push_back(static_cast<std::size_t>(it - classes_.begin()));
    }
  }

  std::size_t PseudoFreeBasis::class_index(Word const& b) const {
    auto i = basis_.words().index_of(b);
    if (!i) {
      throw PreconditionError(b.to_string() + " is not a basis element");
    }
    return basis_class_[*i];
  }

  FiniteLanguage sim_close(Anticongruence const& rel, FiniteLanguage const& f) {
    std::vector<Word> out;
    for (auto const& w : f) {
      auto cls = rel.class_of(w);
      out.insert(out.end(), cls.begin(), cls.end());
    }
    return FiniteLanguage(f.alphabet(), std::move(out));
  }

  PseudoFreeBasis pseudo_free_hull(RelPtr const& rel, FiniteLanguage const& w) {
    std::vector<Word> start;
    for (auto const& x : w) {
      if (!x.empty()) {
        start.push_back(x);
      }
    }
    // F only ever holds words forced into every ∼-closed free monoid that
    // contains w: class members by closure, overhangs by stability.
    FiniteLanguage f(w.alphabet(), std::move(start));
    while (true) {
      f            = sim_close(*rel, f);
      auto b       = minimal_generators(f);
      auto verdict = is_code(b);
      if (!verdict.is_code) {
        f = set_union(b, FiniteLanguage(b.alphabet(), {stability_word(verdict)}));
        continue;
      }
      // ⟨b⟩ = ⟨f⟩ is ∼-closed, and the basis of a free ∼-closed monoid is
      // closed, so this cannot fail.
      for (auto const& x : b) {
        for (auto const& m : rel->class_of(x)) {
          if (!b.contains(m)) {
            throw std::logic_error("pseudo-free hull basis not class closed");
          }
        }
      }
      return PseudoFreeBasis(rel, detail::make_basis(std::move(b)));
    }
  }

  std::size_t pseudo_rank(RelPtr const& rel, FiniteLanguage const& w) {
    return pseudo_free_hull(rel, w).classes().size();
  }

  ClassWord gamma(PseudoFreeBasis const& pfb, Word const& w) {
    auto const& words = pfb.basis().words();
    auto        seq   = first_factorization(w, words);
    if (!seq) {
      throw NotInMonoid(w.to_string() + " is not in the monoid generated by "
                        + words.to_string());
    }
    ClassWord out;
    for (auto j : *seq) {
      out.classes.push_back(pfb.classes()[pfb.class_index(words[j])]);
    }
    return out;
  }

  Word gamma_letters(PseudoFreeBasis const& pfb, Word const& w) {
    auto const& words = pfb.basis().words();
    auto        seq   = first_factorization(w, words);
    if (!seq) {
      throw NotInMonoid(w.to_string() + " is not in the monoid generated by "
                        + words.to_string());
    }
    std::vector<Letter> letters;
    for (auto j : *seq) {
      letters.push_back(static_cast<Letter>(pfb.class_index(words[j])));
    }
    return Word(pfb.class_alphabet(), std::move(letters));
  }

  bool gamma_is_morphism_check(PseudoFreeBasis const& pfb,
                               Word const&            u,
                               Word const&            v) {
    return gamma(pfb, concat(u, v)) == gamma(pfb, u) * gamma(pfb, v);
  }

  bool class_factor_stability_check(PseudoFreeBasis const& pfb, Word const& w) {
    auto const  g   = gamma(pfb, w);
    auto const& rel = *pfb.rel();
    for (auto const& other : rel.class_of(w)) {
      std::size_t pos = 0;
      for (auto const& c : g.classes) {
        if (!rel.equiv(other.factor(pos, c.length()), c.rep())) {
          return false;
        }
        pos += c.length();
      }
      if (!in_monoid(other, pfb.basis().words()) || gamma(pfb, other) != g) {
        return false;
      }
    }
    return true;
  }

}  // namespace pseudoeq
