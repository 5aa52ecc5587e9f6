#pragma once

#include <algorithm>
#include <initializer_list>
#include <map>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "pseudoeq/anticongruence.hpp"
#include "pseudoeq/error.hpp"
#include "pseudoeq/words.hpp"

namespace testing {

  using namespace pseudoeq;

  // Alphabet whose symbols are the characters of `letters`.
  inline AlphabetPtr sigma(std::string const& letters) {
    std::vector<std::string> symbols;
    for (char c : letters) {
      symbols.emplace_back(1, c);
    }
    return make_alphabet(std::move(symbols));
  }

  inline Word w(AlphabetPtr const& a, std::string const& text) {
    return Word::parse(a, text);
  }

  inline FiniteLanguage lang(AlphabetPtr const&                  a,
                             std::initializer_list<char const*> words) {
    std::vector<Word> out;
    for (auto const* s : words) {
      out.push_back(Word::parse(a, s));
    }
    return FiniteLanguage(a, std::move(out));
  }

  inline FiniteLanguage lang(AlphabetPtr const& a, oracle::StrSet const& words) {
    std::vector<Word> out;
    for (auto const& s : words) {
      out.push_back(Word::parse(a, s));
    }
    return FiniteLanguage(a, std::move(out));
  }

  // Plain spelling, without the "ε" of to_string.
  inline std::string str(Word const& u) {
    std::string out;
    for (auto x : u.letters()) {
      out += u.alphabet()->symbol(x);
    }
    return out;
  }

  inline oracle::StrSet strs(FiniteLanguage const& l) {
    oracle::StrSet out;
    for (auto const& u : l) {
      out.insert(str(u));
    }
    return out;
  }

  // Letterwise map of a permutation relation, as characters.
  inline std::map<char, char> char_perm(Anticongruence const& rel) {
    std::map<char, char> out;
    auto const&          a = rel.alphabet();
    for (Letter x = 0; x < a->size(); ++x) {
      out[a->symbol(x)[0]] = a->symbol(rel.permutation_image()[x])[0];
    }
    return out;
  }

  // Every permutation of {0..n-1}, lexicographically.
  inline std::vector<std::vector<Letter>> all_permutations(std::size_t n) {
    std::vector<Letter> p(n);
    for (std::size_t i = 0; i < n; ++i) {
      p[i] = static_cast<Letter>(i);
    }
    std::vector<std::vector<Letter>> out;
    do {
      out.push_back(p);
    } while (std::next_permutation(p.begin(), p.end()));
    return out;
  }

}  // namespace testing
