#pragma once

// ∼-closed free monoids: pseudo-free hulls, their class bases, and the
// factorization morphism into sequences of classes.

#include <cstddef>
#include <string>
#include <vector>

#include "pseudoeq/anticongruence.hpp"
#include "pseudoeq/freeness.hpp"
#include "pseudoeq/words.hpp"

namespace pseudoeq {

  //! A word over a set of classes, i.e. the list (c₁, c₂, …, cₘ).
  struct ClassWord {
    std::vector<EqClass> classes;

    std::size_t size() const noexcept {
      return classes.size();
    }

    //! "([a],[b],[a])"; the empty list prints as "()".
    std::string to_string() const;

    bool operator==(ClassWord const&) const = default;
  };

  ClassWord operator*(ClassWord const& x, ClassWord const& y);

  //! The free basis of a ∼-closed free monoid together with the set C of
  //! classes of its elements.
  class PseudoFreeBasis {
   public:
    //! Throws PreconditionError if `basis` is not closed under `rel`.
    PseudoFreeBasis(RelPtr rel, Basis basis);

    RelPtr const& rel() const noexcept {
      return rel_;
    }

    Basis const& basis() const noexcept {
      return basis_;
    }

    //! C, ordered by canonical representative.
    std::vector<EqClass> const& classes() const noexcept {
      return classes_;
    }

    //! Index in classes() of the class of basis element `b`.
    std::size_t class_index(Word const& b) const;

    //! An alphabet with one symbol "[rep]" per class, in classes() order.
    AlphabetPtr const& class_alphabet() const noexcept {
      return class_alphabet_;
    }

   private:
    RelPtr                   rel_;
    Basis                    basis_;
    std::vector<EqClass>     classes_;
    std::vector<std::size_t> basis_class_;  // parallel to basis words
    AlphabetPtr              class_alphabet_;
  };

  //! F together with the class of each of its elements.
  FiniteLanguage sim_close(Anticongruence const& rel, FiniteLanguage const& f);

  //! The smallest ∼-closed free monoid containing w, as its pseudo-free
  //! basis. ε is ignored.
  PseudoFreeBasis pseudo_free_hull(RelPtr const& rel, FiniteLanguage const& w);

  //! |C| of the pseudo-free hull of w.
  std::size_t pseudo_rank(RelPtr const& rel, FiniteLanguage const& w);

  //! The unique class sequence whose product contains w. Throws NotInMonoid
  //! if w is not generated by the basis.
  ClassWord gamma(PseudoFreeBasis const& pfb, Word const& w);

  //! gamma(w) as a word over pfb.class_alphabet().
  Word gamma_letters(PseudoFreeBasis const& pfb, Word const& w);

  //! gamma(uv) == gamma(u) gamma(v).
  bool gamma_is_morphism_check(PseudoFreeBasis const& pfb,
                               Word const&            u,
                               Word const&            v);

  //! Every member w' of [w] lies in the product of the classes of gamma(w)
  //! and has gamma(w') == gamma(w).
  bool class_factor_stability_check(PseudoFreeBasis const& pfb, Word const& w);

}  // namespace pseudoeq
