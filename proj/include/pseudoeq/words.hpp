#pragma once

// Alphabets, words and finite languages over them.

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace pseudoeq {

  //! Dense index of a symbol inside its alphabet.
  using Letter = std::uint8_t;

  //! Default cap on the size of an elementwise language product.
  inline constexpr std::size_t kDefaultProductLimit = 1'000'000;

  //! An ordered finite set of named symbols.
  //!
  //! Declaration order defines the letter indices and therefore the
  //! lexicographic order of words everywhere in the library.
  class Alphabet {
   public:
    //! Throws ParseError on empty, duplicate or whitespace-containing names
    //! and RangeError if there are more symbols than a Letter can index.
    explicit Alphabet(std::vector<std::string> symbols);

    std::size_t size() const noexcept {
      return symbols_.size();
    }

    std::string const& symbol(Letter x) const {
      return symbols_.at(x);
    }

    std::span<std::string const> symbols() const noexcept {
      return symbols_;
    }

    std::optional<Letter> find(std::string_view name) const;

    //! True iff every symbol name is a single character, so that words can
    //! be written without separators.
    bool single_char() const noexcept {
      return single_char_;
    }

    bool operator==(Alphabet const& that) const noexcept {
      return symbols_ == that.symbols_;
    }

   private:
    std::vector<std::string>                   symbols_;
    std::map<std::string, Letter, std::less<>> index_;
    bool                                       single_char_ = true;
  };

  using AlphabetPtr = std::shared_ptr<Alphabet const>;

  AlphabetPtr make_alphabet(std::vector<std::string> symbols);

  //! Pointer-equal or symbol-for-symbol equal.
  bool same_alphabet(AlphabetPtr const& x, AlphabetPtr const& y) noexcept;

  //! A finite word over an alphabet, stored as letter indices.
  class Word {
   public:
    //! The empty word over `alphabet`.
    explicit Word(AlphabetPtr alphabet);
    //! Throws RangeError if some letter is not a valid index.
    Word(AlphabetPtr alphabet, std::vector<Letter> letters);

    //! Parses `text`. Symbols may be separated by '.' or whitespace; without
    //! separators the text is split greedily by longest matching symbol. The
    //! strings "", "ε" and "eps" denote the empty word unless "eps" is itself
    //! a symbol. Throws ParseError.
    static Word parse(AlphabetPtr alphabet, std::string_view text);

    AlphabetPtr const& alphabet() const noexcept {
      return alphabet_;
    }

    std::span<Letter const> letters() const noexcept {
      return letters_;
    }

    std::size_t size() const noexcept {
      return letters_.size();
    }

    bool empty() const noexcept {
      return letters_.empty();
    }

    Letter operator[](std::size_t i) const noexcept {
      return letters_[i];
    }

    //! The factor of length `len` starting at `pos`.
    Word factor(std::size_t pos, std::size_t len) const;
    Word prefix(std::size_t len) const {
      return factor(0, len);
    }
    Word suffix_from(std::size_t pos) const {
      return factor(pos, size() - pos);
    }

    //! Symbols concatenated for single-character alphabets, joined with
    //! '.' otherwise; the empty word prints as "ε".
    std::string to_string() const;

    bool operator==(Word const& that) const noexcept {
      return letters_ == that.letters_
             && same_alphabet(alphabet_, that.alphabet_);
    }

    //! Plain lexicographic order on letter indices. Only meaningful for
    //! words over the same alphabet.
    std::strong_ordering operator<=>(Word const& that) const noexcept {
      return letters_ <=> that.letters_;
    }

   private:
    AlphabetPtr         alphabet_;
    std::vector<Letter> letters_;
  };

  //! Throws AlphabetMismatch.
  Word concat(Word const& u, Word const& v);

  //! Returns (prefix of length i, rest). Throws RangeError if i > |w|.
  std::pair<Word, Word> split(Word const& w, std::size_t i);

  Word reversed(Word const& w);

  //! All words of length `n` in lexicographic order.
  std::vector<Word> words_of_length(AlphabetPtr const& alphabet,
                                    std::size_t        n);

  struct WordHash {
    std::size_t operator()(Word const& w) const noexcept;
  };

  //! A finite set of words kept sorted and duplicate free, so that equality
  //! of languages is equality of their canonical forms.
  class FiniteLanguage {
   public:
    using const_iterator = std::vector<Word>::const_iterator;

    //! The empty language.
    explicit FiniteLanguage(AlphabetPtr alphabet);
    //! Canonicalizes `words`. Throws AlphabetMismatch.
    FiniteLanguage(AlphabetPtr alphabet, std::vector<Word> words);

    //! {ε}, the unit of the elementwise product.
    static FiniteLanguage unit(AlphabetPtr alphabet);

    AlphabetPtr const& alphabet() const noexcept {
      return alphabet_;
    }

    std::span<Word const> words() const noexcept {
      return words_;
    }

    std::size_t size() const noexcept {
      return words_.size();
    }
    bool empty() const noexcept {
      return words_.empty();
    }
    const_iterator begin() const noexcept {
      return words_.begin();
    }
    const_iterator end() const noexcept {
      return words_.end();
    }
    Word const& operator[](std::size_t i) const noexcept {
      return words_[i];
    }

    bool contains(Word const& w) const;
    //! Index of `w` in sorted order, if present.
    std::optional<std::size_t> index_of(Word const& w) const;

    //! Length of the longest word, 0 for the empty language.
    std::size_t max_length() const noexcept;

    //! "{w1, w2, ...}"
    std::string to_string() const;

    bool operator==(FiniteLanguage const& that) const noexcept {
      return words_ == that.words_ && same_alphabet(alphabet_, that.alphabet_);
    }

   private:
    AlphabetPtr       alphabet_;
    std::vector<Word> words_;
  };

  //! K ⊙ L = {uv : u ∈ K, v ∈ L}. Throws AlphabetMismatch, and
  //! GuardExceeded if |K|·|L| > limit.
  FiniteLanguage product(FiniteLanguage const& k,
                         FiniteLanguage const& l,
                         std::size_t           limit = kDefaultProductLimit);

  FiniteLanguage set_union(FiniteLanguage const& k, FiniteLanguage const& l);
  FiniteLanguage set_intersection(FiniteLanguage const& k,
                                  FiniteLanguage const& l);

  //! A factorization of a word, as indices into the generating language.
  using FactorSequence = std::vector<std::size_t>;

  //! Every factorization of `w` over `b`, in lexicographic order of index
  //! sequences. Empty iff w ∉ ⟨b⟩; a single empty sequence iff w = ε.
  //! Throws PreconditionError if ε ∈ b.
  std::vector<FactorSequence> factorizations(Word const&           w,
                                             FiniteLanguage const& b);

  //! The lexicographically least factorization of `w` over `b`, if any.
  std::optional<FactorSequence> first_factorization(Word const&           w,
                                                    FiniteLanguage const& b);

  //! w ∈ ⟨b⟩.
  bool in_monoid(Word const& w, FiniteLanguage const& b);

  //! Turns a factor sequence back into the words it indexes.
  std::vector<Word> factor_words(FactorSequence const& seq,
                                 FiniteLanguage const& b);

}  // namespace pseudoeq
