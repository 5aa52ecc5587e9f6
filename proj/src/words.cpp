#include "pseudoeq/words.hpp"

#include <algorithm>
#include <cctype>
#include <limits>

#include "pseudoeq/error.hpp"

namespace pseudoeq {

  namespace {
    bool has_space(std::string const& s) {
      return std::any_of(s.begin(), s.end(), [](unsigned char c) {
        return std::isspace(c) != 0;
      });
    }

    bool is_separator(char c) {
      return c == '.' || std::isspace(static_cast<unsigned char>(c)) != 0;
    }

    void require_same(AlphabetPtr const& x, AlphabetPtr const& y) {
      if (!same_alphabet(x, y)) {
        throw AlphabetMismatch();
      }
    }

    bool occurs_at(Word const& w, std::size_t pos, Word const& b) {
      if (pos + b.size() > w.size()) {
        return false;
      }
      auto wl = w.letters();
      auto bl = b.letters();
      return std::equal(bl.begin(), bl.end(), wl.begin() + pos);
    }

    // reach[i] is true iff the suffix of w starting at i lies in ⟨b⟩.
    std::vector<bool> suffix_reach(Word const& w, FiniteLanguage const& b) {
      std::vector<bool> reach(w.size() + 1, false);
      reach[w.size()] = true;
      for (std::size_t i = w.size(); i-- > 0;) {
        for (auto const& x : b) {
          if (reach[i + x.size()] && occurs_at(w, i, x)) {
            reach[i] = true;
            break;
          }
        }
      }
      return reach;
    }

    void require_no_empty(FiniteLanguage const& b) {
      if (!b.empty() && b[0].empty()) {
        throw PreconditionError("generating set contains the empty word");
      }
    }
  }  // namespace

  ////////////////////////////////////////////////////////////////////////
  // Alphabet
  ////////////////////////////////////////////////////////////////////////

  Alphabet::Alphabet(std::vector<std::string> symbols)
      : symbols_(std::move(symbols)) {
    if (symbols_.size() > std::numeric_limits<Letter>::max()) {
      throw RangeError("alphabet has too many symbols");
    }
    for (std::size_t i = 0; i < symbols_.size(); ++i) {
      auto const& s = symbols_[i];
      if (s.empty() || has_space(s)) {
        throw ParseError("invalid symbol name '" + s + "'", 0, i + 1);
      }
      if (!index_.emplace(s, static_cast<Letter>(i)).second) {
        throw ParseError("duplicate symbol '" + s + "'", 0, i + 1);
      }
      single_char_ = single_char_ && s.size() == 1;
    }
  }

  std::optional<Letter> Alphabet::find(std::string_view name) const {
    auto it = index_.find(name);
    if (it == index_.end()) {
      return std::nullopt;
    }
    return it->second;
  }

  AlphabetPtr make_alphabet(std::vector<std::string> symbols) {
    return std::make_shared<Alphabet const>(std::move(symbols));
  }

  bool same_alphabet(AlphabetPtr const& x, AlphabetPtr const& y) noexcept {
    if (x == y) {
      return true;
    }
    return x != nullptr && y != nullptr && *x == *y;
  }

  ////////////////////////////////////////////////////////////////////////
  // Word
  ////////////////////////////////////////////////////////////////////////

  Word::Word(AlphabetPtr alphabet) : alphabet_(std::move(alphabet)) {}

  Word::Word(AlphabetPtr alphabet, std::vector<Letter> letters)
      : alphabet_(std::move(alphabet)), letters_(std::move(letters)) {
    for (auto x : letters_) {
      if (x >= alphabet_->size()) {
        throw RangeError("letter index " + std::to_string(x)
                         + " outside alphabet");
      }
    }
  }

  Word Word::parse(AlphabetPtr alphabet, std::string_view text) {
    auto const& sigma = *alphabet;
    if (text.empty() || text == "ε"
        || (text == "eps" && !sigma.find("eps"))) {
      return Word(std::move(alphabet));
    }
    std::vector<Letter> letters;
    std::size_t         pos = 0;
    while (pos < text.size()) {
      if (is_separator(text[pos])) {
        ++pos;
        continue;
      }
      std::size_t end = pos;
      while (end < text.size() && !is_separator(text[end])) {
        ++end;
      }
      // Longest symbol matching at pos within the current token.
      std::optional<Letter> best;
      std::size_t           best_len = 0;
      for (std::size_t len = end - pos; len > 0; --len) {
        if (auto x = sigma.find(text.substr(pos, len))) {
          best     = x;
          best_len = len;
          break;
        }
      }
      if (!best) {
        throw ParseError("unknown symbol at '"
                             + std::string(text.substr(pos, end - pos)) + "'",
                         0,
                         pos + 1);
      }
      letters.push_back(*best);
      pos += best_len;
    }
    return Word(std::move(alphabet), std::move(letters));
  }

  Word Word::factor(std::size_t pos, std::size_t len) const {
    if (pos > size() || len > size() - pos) {
      throw RangeError("factor out of range");
    }
    Word result(alphabet_);
    result.letters_.assign(letters_.begin() + pos,
                           letters_.begin() + pos + len);
    return result;
  }

  std::string Word::to_string() const {
    if (letters_.empty()) {
      return "ε";
    }
    std::string out;
    bool const  joined = !alphabet_->single_char();
    for (std::size_t i = 0; i < letters_.size(); ++i) {
      if (joined && i > 0) {
        out += '.';
      }
      out += alphabet_->symbol(letters_[i]);
    }
    return out;
  }

  Word concat(Word const& u, Word const& v) {
    require_same(u.alphabet(), v.alphabet());
    std::vector<Letter> letters;
    letters.reserve(u.size() + v.size());
    letters.insert(letters.end(), u.letters().begin(), u.letters().end());
    letters.insert(letters.end(), v.letters().begin(), v.letters().end());
    return Word(u.alphabet(), std::move(letters));
  }

  std::pair<Word, Word> split(Word const& w, std::size_t i) {
    if (i > w.size()) {
      throw RangeError("split position " + std::to_string(i)
                       + " exceeds word length " + std::to_string(w.size()));
    }
    return {w.prefix(i), w.suffix_from(i)};
  }

  Word reversed(Word const& w) {
    std::vector<Letter> letters(w.letters().rbegin(), w.letters().rend());
    return Word(w.alphabet(), std::move(letters));
  }

  std::vector<Word> words_of_length(AlphabetPtr const& alphabet,
                                    std::size_t        n) {
    std::vector<Word> out;
    auto const        k = alphabet->size();
    if (k == 0) {
      if (n == 0) {
        out.emplace_back(alphabet);
      }
      return out;
    }
    std::vector<Letter> cur(n, 0);
    while (true) {
      out.emplace_back(alphabet, cur);
      // Odometer increment, last position fastest.
      std::size_t i = n;
      while (i > 0) {
        --i;
        if (cur[i] + 1u < k) {
          ++cur[i];
          break;
        }
        cur[i] = 0;
        if (i == 0) {
          return out;
        }
      }
      if (n == 0) {
        return out;
      }
    }
  }

  std::size_t WordHash::operator()(Word const& w) const noexcept {
    std::size_t h = 1469598103934665603ULL;
    for (auto x : w.letters()) {
      h = (h ^ x) * 1099511628211ULL;
    }
    return h ^ w.size();
  }

  ////////////////////////////////////////////////////////////////////////
  // FiniteLanguage
  ////////////////////////////////////////////////////////////////////////

  FiniteLanguage::FiniteLanguage(AlphabetPtr alphabet)
      : alphabet_(std::move(alphabet)) {}

  FiniteLanguage::FiniteLanguage(AlphabetPtr alphabet, std::vector<Word> words)
      : alphabet_(std::move(alphabet)), words_(std::move(words)) {
    for (auto const& w : words_) {
      require_same(alphabet_, w.alphabet());
    }
    std::sort(words_.begin(), words_.end());
    words_.erase(std::unique(words_.begin(), words_.end()), words_.end());
  }

  FiniteLanguage FiniteLanguage::unit(AlphabetPtr alphabet) {
    Word eps(alphabet);
    return FiniteLanguage(std::move(alphabet), {std::move(eps)});
  }

  bool FiniteLanguage::contains(Word const& w) const {
    return std::binary_search(words_.begin(), words_.end(), w);
  }

  std::optional<std::size_t> FiniteLanguage::index_of(Word const& w) const {
    auto it = std::lower_bound(words_.begin(), words_.end(), w);
    if (it == words_.end() || *it != w) {
      return std::nullopt;
    }
    return static_cast<std::size_t>(it - words_.begin());
  }

  std::size_t FiniteLanguage::max_length() const noexcept {
    std::size_t n = 0;
    for (auto const& w : words_) {
      n = std::max(n, w.size());
    }
    return n;
  }

  std::string FiniteLanguage::to_string() const {
    std::string out = "{";
    for (std::size_t i = 0; i < words_.size(); ++i) {
      if (i > 0) {
        out += ", ";
      }
      out += words_[i].to_string();
    }
    return out + "}";
  }

  FiniteLanguage product(FiniteLanguage const& k,
                         FiniteLanguage const& l,
                         std::size_t           limit) {
    require_same(k.alphabet(), l.alphabet());
    if (!k.empty() && l.size() > limit / k.size()) {
      throw GuardExceeded("language product of " + std::to_string(k.size())
                              + " x " + std::to_string(l.size()) + " words",
                          limit);
    }
    std::vector<Word> out;
    out.reserve(k.size() * l.size());
    for (auto const& u : k) {
      for (auto const& v : l) {
        out.push_back(concat(u, v));
      }
    }
    return FiniteLanguage(k.alphabet(), std::move(out));
  }

  FiniteLanguage set_union(FiniteLanguage const& k, FiniteLanguage const& l) {
    require_same(k.alphabet(), l.alphabet());
    std::vector<Word> out(k.begin(), k.end());
    out.insert(out.end(), l.begin(), l.end());
    return FiniteLanguage(k.alphabet(), std::move(out));
  }

  FiniteLanguage set_intersection(FiniteLanguage const& k,
                                  FiniteLanguage const& l) {
    require_same(k.alphabet(), l.alphabet());
    std::vector<Word> out;
    std::set_intersection(
        k.begin(), k.end(), l.begin(), l.end(), std::back_inserter(out));
    return FiniteLanguage(k.alphabet(), std::move(out));
  }

  ////////////////////////////////////////////////////////////////////////
  // Factorizations
  ////////////////////////////////////////////////////////////////////////

  std::vector<FactorSequence> factorizations(Word const&           w,
                                             FiniteLanguage const& b) {
    require_no_empty(b);
    std::vector<FactorSequence> out;
    auto const                  reach = suffix_reach(w, b);
    if (!reach[0]) {
      return out;
    }
    FactorSequence cur;
    // Depth-first in index order only through positions that can finish.
    auto dfs = [&](auto&& self, std::size_t pos) -> void {
      if (pos == w.size()) {
        out.push_back(cur);
        return;
      }
      for (std::size_t j = 0; j < b.size(); ++j) {
        auto const& x = b[j];
        if (reach[pos + std::min(x.size(), w.size() - pos)]
            && occurs_at(w, pos, x)) {
          cur.push_back(j);
          self(self, pos + x.size());
          cur.pop_back();
        }
      }
    };
    dfs(dfs, 0);
    return out;
  }

  std::optional<FactorSequence> first_factorization(Word const&           w,
                                                    FiniteLanguage const& b) {
    require_no_empty(b);
    auto const reach = suffix_reach(w, b);
    if (!reach[0]) {
      return std::nullopt;
    }
    FactorSequence seq;
    std::size_t    pos = 0;
    while (pos < w.size()) {
      for (std::size_t j = 0; j < b.size(); ++j) {
        auto const& x = b[j];
        if (occurs_at(w, pos, x) && reach[pos + x.size()]) {
          seq.push_back(j);
          pos += x.size();
          break;
        }
      }
    }
    return seq;
  }

  bool in_monoid(Word const& w, FiniteLanguage const& b) {
    require_no_empty(b);
    return suffix_reach(w, b)[0];
  }

  std::vector<Word> factor_words(FactorSequence const& seq,
                                 FiniteLanguage const& b) {
    std::vector<Word> out;
    out.reserve(seq.size());
    for (auto j : seq) {
      out.push_back(b[j]);
    }
    return out;
  }

}  // namespace pseudoeq
