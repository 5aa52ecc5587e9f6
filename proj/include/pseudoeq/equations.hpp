#pragma once

// Word equations without constants, their solutions and pseudo-solutions.

#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "pseudoeq/anticongruence.hpp"
#include "pseudoeq/pseudo_structure.hpp"
#include "pseudoeq/words.hpp"

namespace pseudoeq {

  //! A pair (r, s) of words over an alphabet of unknowns Θ.
  class Equation {
   public:
    //! Throws AlphabetMismatch unless both sides are over `unknowns`.
    Equation(AlphabetPtr unknowns, Word lhs, Word rhs);

    AlphabetPtr const& unknowns() const noexcept {
      return unknowns_;
    }
    Word const& lhs() const noexcept {
      return lhs_;
    }
    Word const& rhs() const noexcept {
      return rhs_;
    }

    //! "x y = y x"; an empty side prints as "1".
    std::string to_string() const;

    bool operator==(Equation const& that) const noexcept {
      return same_alphabet(unknowns_, that.unknowns_) && lhs_ == that.lhs_
             && rhs_ == that.rhs_;
    }

   private:
    AlphabetPtr unknowns_;
    Word        lhs_;
    Word        rhs_;
  };

  //! Grammar: side '=' side, side := (unknown ('^' n)?)+ | '1', unknowns
  //! are identifiers separated by whitespace. Exponents are expanded and Θ
  //! is the set of unknowns in order of first occurrence. Throws ParseError.
  Equation parse_equation(std::string_view text);

  //! A morphism Θ* → Σ*, given by the image of each unknown.
  class Solution {
   public:
    //! Throws AlphabetMismatch unless every image is over `target`.
    Solution(AlphabetPtr target, std::map<std::string, Word> images);

    AlphabetPtr const& target() const noexcept {
      return target_;
    }
    std::map<std::string, Word> const& images() const noexcept {
      return images_;
    }

    //! Throws PreconditionError if `unknown` has no image.
    Word const& image(std::string const& unknown) const;

    //! φ(side) for a word over the unknowns of some equation.
    Word apply(Word const& side) const;

    //! "x=a y=bca z=abc"
    std::string to_string() const;

    bool operator==(Solution const& that) const noexcept {
      return same_alphabet(target_, that.target_) && images_ == that.images_;
    }

   private:
    AlphabetPtr                 target_;
    std::map<std::string, Word> images_;
  };

  //! A morphism Θ* → Fin(Σ*) sending each unknown to a class of `rel`.
  class PseudoSolution {
   public:
    //! Throws PreconditionError if some class belongs to another relation.
    PseudoSolution(RelPtr rel, std::map<std::string, EqClass> images);

    RelPtr const& rel() const noexcept {
      return rel_;
    }
    std::map<std::string, EqClass> const& images() const noexcept {
      return images_;
    }

    EqClass const& image(std::string const& unknown) const;

    //! Union of all members of all image classes.
    FiniteLanguage image_words() const;

    //! "x=[abc] y=[b] z=[a]"
    std::string to_string() const;

   private:
    RelPtr                         rel_;
    std::map<std::string, EqClass> images_;
  };

  //! Throws PreconditionError if an unknown of `e` has no image.
  bool check_solution(Equation const& e, Solution const& phi);

  //! Rank of the image set (ε is dropped).
  std::size_t solution_rank(Solution const& phi);

  struct PseudoVerdict {
    bool valid = false;
    //! Least word of φ(r) ∩ φ(s), when valid.
    std::optional<Word> common;
    FiniteLanguage      lhs;
    FiniteLanguage      rhs;
  };

  //! φ(side) = φ(x₁) ⊙ φ(x₂) ⊙ ⋯ as a language. Throws GuardExceeded.
  FiniteLanguage side_language(PseudoSolution const& phi,
                               Word const&           side,
                               std::size_t product_limit = kDefaultProductLimit);

  //! Valid iff φ(r) ∩ φ(s) ≠ ∅. Throws GuardExceeded.
  PseudoVerdict check_pseudo_solution(
      Equation const&       e,
      PseudoSolution const& phi,
      std::size_t           product_limit = kDefaultProductLimit);

  //! Given one word per occurrence (left side first) with equivalent words
  //! at occurrences of the same unknown and equivalent side products,
  //! keeps the left words and re-cuts their product at the right-hand
  //! lengths. Throws PreconditionError when the input does not qualify.
  std::vector<Word> align_equivalent_sides(Equation const&       e,
                                           Anticongruence const& rel,
                                           std::span<Word const> occurrences);

  //! The ordinary solution α over the pseudo-free basis C obtained from a
  //! pseudo-solution, with the checks that make it a witness of
  //! "pseudo-rank ≤ rank" on this instance.
  struct Descent {
    PseudoFreeBasis                  hull;
    Solution                         alpha;
    std::map<std::string, ClassWord> alpha_classes;
    Word                             common;
    ClassWord                        gamma_common;
    //! α(r) = α(s)
    bool alpha_solves = false;
    //! α(r) = γ(common)
    bool alpha_matches_common = false;
    std::size_t alpha_rank  = 0;
    std::size_t pseudo_rank = 0;

    bool holds() const noexcept {
      return alpha_solves && alpha_matches_common && alpha_rank == pseudo_rank;
    }
  };

  //! Throws PreconditionError if φ is not a pseudo-solution of e.
  Descent descend(Equation const&       e,
                  PseudoSolution const& phi,
                  std::size_t           product_limit = kDefaultProductLimit);

  //! One step of the length-guessing rewriting: every `longer` becomes
  //! `shorter longer` and the common leading `shorter` is cancelled. With
  //! `rename`, `longer` is replaced by `shorter` everywhere instead. Throws
  //! PreconditionError unless one side starts with `shorter` and the other
  //! with `longer`.
  Equation elementary_transform(Equation const&    e,
                                std::string const& shorter,
                                std::string const& longer,
                                bool               rename = false);

}  // namespace pseudoeq
