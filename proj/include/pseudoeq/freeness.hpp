#pragma once

// Free submonoids of Σ*: code testing, minimal generators, the free hull
// and rank, plus an exhaustive hull oracle for validation.

#include <cstddef>
#include <optional>
#include <vector>

#include "pseudoeq/words.hpp"

namespace pseudoeq {

  //! Outcome of a code test. When the set is not a code, `witness` has the
  //! two factorizations `first` and `second`, which differ in their first
  //! factor; `first` starts with the shorter one.
  struct CodeVerdict {
    bool                is_code = true;
    std::optional<Word> witness;
    std::vector<Word>   first;
    std::vector<Word>   second;
  };

  class Basis;

  namespace detail {
    Basis make_basis(FiniteLanguage words);
  }

  //! A minimal generating set of nonempty words that is a code.
  class Basis {
   public:
    //! Throws PreconditionError unless `words` is a code of nonempty words
    //! with no element a product of the others.
    static Basis checked(FiniteLanguage words);

    FiniteLanguage const& words() const noexcept {
      return words_;
    }

    std::size_t size() const noexcept {
      return words_.size();
    }

    bool operator==(Basis const&) const = default;

   private:
    friend Basis detail::make_basis(FiniteLanguage);

    explicit Basis(FiniteLanguage words) : words_(std::move(words)) {}

    FiniteLanguage words_;
  };

  //! Sardinas–Patterson test. A non-code comes with its shortest, then
  //! lexicographically least, doubly factorizable word. Throws
  //! PreconditionError if ε ∈ b.
  CodeVerdict is_code(FiniteLanguage const& b);

  //! For a failed code test with first factors b₁ and c₁ = b₁z, the word z.
  //! Every free monoid containing the generating set also contains z.
  Word stability_word(CodeVerdict const& verdict);

  //! F∖{ε} with every element that is a product of two or more others
  //! removed. Generates the same monoid as F.
  FiniteLanguage minimal_generators(FiniteLanguage const& f);

  //! Basis of the smallest free monoid containing x (ε is ignored).
  Basis free_hull(FiniteLanguage const& x);

  //! |free_hull(x)|.
  std::size_t rank(FiniteLanguage const& x);

  //! Default cap on the number of factor choices hull_oracle enumerates.
  inline constexpr std::size_t kDefaultOracleGuard = std::size_t{1} << 20;

  //! The free hull computed by brute force: intersects every free monoid
  //! generated by a code of factors of x that contains x, on the slice of
  //! words no longer than the longest element, and reads off its minimal
  //! generators. Throws GuardExceeded when the candidate space is larger
  //! than `guard`.
  Basis hull_oracle(FiniteLanguage const& x,
                    std::size_t           guard = kDefaultOracleGuard);

}  // namespace pseudoeq
