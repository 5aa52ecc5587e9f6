#pragma once

// Length-preserving equivalences on words that split along every cut:
// if uv ~ u'v' and |u| = |u'| then u ~ u' and v ~ v'.

#include <cstddef>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "pseudoeq/words.hpp"

namespace pseudoeq {

  class Anticongruence;
  using RelPtr = std::shared_ptr<Anticongruence const>;

  //! An anticongruence of one of three concrete kinds. Instances are
  //! immutable and shared through RelPtr.
  class Anticongruence {
   public:
    enum class Kind { identity, permutation, table };

    //! Equality of words.
    static RelPtr identity(AlphabetPtr alphabet);

    //! The orbit relation u ~ v iff v = f^i(u) of a morphic permutation f,
    //! given as the image of each letter. Throws PreconditionError unless
    //! `image` is a bijection on the alphabet.
    static RelPtr permutation(AlphabetPtr alphabet, std::vector<Letter> image);

    //! A permutation given in cycle notation; letters absent from every
    //! cycle are fixed.
    static RelPtr permutation_from_cycles(
        AlphabetPtr                             alphabet,
        std::vector<std::vector<Letter>> const& cycles);

    Kind kind() const noexcept {
      return kind_;
    }

    AlphabetPtr const& alphabet() const noexcept {
      return alphabet_;
    }

    //! Throws AlphabetMismatch.
    bool equiv(Word const& u, Word const& v) const;

    //! The full class [u], which always contains u.
    FiniteLanguage class_of(Word const& u) const;

    //! Lexicographically least member of [u].
    Word canonical(Word const& u) const;

    //! Letter images of a permutation relation (empty for other kinds).
    std::vector<Letter> const& permutation_image() const noexcept {
      return image_;
    }

    //! Nontrivial classes of a table relation, sorted (empty for other
    //! kinds).
    std::vector<std::vector<Word>> const& table_classes() const noexcept {
      return classes_;
    }

    //! Text form: `identity`, `permutation: (a b)(c)` or
    //! `table: a~c, ab~cb`.
    std::string to_string() const;

   private:
    friend RelPtr close_pairs(AlphabetPtr,
                              std::vector<std::pair<Word, Word>> const&);

    Anticongruence(Kind kind, AlphabetPtr alphabet)
        : kind_(kind), alphabet_(std::move(alphabet)) {}

    Word apply(Word const& u) const;

    Kind                           kind_;
    AlphabetPtr                    alphabet_;
    std::vector<Letter>            image_;
    std::vector<std::vector<Word>> classes_;
    std::map<Word, std::size_t>    class_index_;
  };

  //! The smallest anticongruence containing the given pairs: the closure
  //! under symmetry, transitivity within each length, and splitting each
  //! equivalent pair at every cut. Throws PreconditionError on a
  //! length-mismatched pair and AlphabetMismatch.
  RelPtr close_pairs(AlphabetPtr                               alphabet,
                     std::vector<std::pair<Word, Word>> const& pairs);

  //! A bare predicate on words that does not have to be an anticongruence.
  //! It can only be fed to verify_axioms.
  struct RawRelation {
    AlphabetPtr                                   alphabet;
    std::function<bool(Word const&, Word const&)> equiv;
    std::string                                   name;
  };

  //! u ~ v iff v = u or v is the reversal of u.
  RawRelation reversal_relation(AlphabetPtr alphabet);

  //! Default cap on |Σ|^max_len in verify_axioms.
  inline constexpr std::size_t kDefaultAxiomGuard = 4096;

  enum class Axiom { reflexivity, symmetry, transitivity, length, split };

  std::string to_string(Axiom a);

  struct AxiomViolation {
    Axiom axiom;
    Word  u;
    Word  v;
    //! Third word of a transitivity violation.
    std::optional<Word> w;
    //! Cut position of a split violation.
    std::size_t cut = 0;
  };

  struct AxiomVerdict {
    std::optional<AxiomViolation> violation;

    bool pass() const noexcept {
      return !violation.has_value();
    }
  };

  //! Checks reflexivity, symmetry, transitivity, length preservation and
  //! the splitting condition on all words of length ≤ max_len. The first
  //! violation is reported in order of length, then u, then v, then cut.
  //! Throws RangeError if max_len is 0 and GuardExceeded if
  //! |Σ|^max_len > guard.
  AxiomVerdict verify_axioms(Anticongruence const& rel,
                             std::size_t           max_len,
                             std::size_t           guard = kDefaultAxiomGuard);

  AxiomVerdict verify_axioms(RawRelation const& rel,
                             std::size_t        max_len,
                             std::size_t        guard = kDefaultAxiomGuard);

  //! An equivalence class, stored as its canonical representative.
  class EqClass {
   public:
    //! The class of `w` (any member).
    EqClass(RelPtr rel, Word const& w);

    RelPtr const& rel() const noexcept {
      return rel_;
    }

    Word const& rep() const noexcept {
      return rep_;
    }

    std::size_t length() const noexcept {
      return rep_.size();
    }

    FiniteLanguage members() const {
      return rel_->class_of(rep_);
    }

    //! "[rep]"
    std::string to_string() const;

    bool operator==(EqClass const& that) const noexcept {
      return rel_ == that.rel_ && rep_ == that.rep_;
    }

    std::strong_ordering operator<=>(EqClass const& that) const noexcept {
      return rep_ <=> that.rep_;
    }

   private:
    RelPtr rel_;
    Word   rep_;
  };

}  // namespace pseudoeq
