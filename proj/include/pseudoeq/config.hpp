#pragma once

// Line-oriented job configuration shared by all CLI commands:
//
//   alphabet: a b c
//   rel: table: a~c, ab~cb, bc~ba, abc~cba
//   equation: x y z = z y x
//   assign: x=abc y=b z=a
//   words: a bca abc
//   max_len: 3
//
// plus optional `budget:`, `product_limit:` and `workers:`. Blank lines and
// text after '#' are ignored.

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "pseudoeq/anticongruence.hpp"
#include "pseudoeq/equations.hpp"
#include "pseudoeq/error.hpp"
#include "pseudoeq/words.hpp"

namespace pseudoeq {

  //! A configuration is missing something the command needs.
  class ConfigError : public Error {
   public:
    using Error::Error;
  };

  //! Either a real anticongruence or the raw reversal predicate, which only
  //! `verify-rel` accepts.
  struct RelSpec {
    RelPtr                     rel;
    std::optional<RawRelation> raw;
    std::string                text;
  };

  //! Parses `identity`, `permutation: (a b)(c)`, `table: a~c, ab~cb` or
  //! `reversal`. Columns in errors are relative to `text`.
  RelSpec parse_rel(AlphabetPtr const& alphabet, std::string_view text);

  //! Parses `x=abc y=b z=a`.
  std::vector<std::pair<std::string, Word>> parse_assignment(
      AlphabetPtr const& alphabet,
      std::string_view   text);

  //! Parses whitespace- or comma-separated words.
  FiniteLanguage parse_word_list(AlphabetPtr const& alphabet,
                                 std::string_view   text);

  struct JobConfig {
    AlphabetPtr alphabet;
    RelSpec     rel;

    std::optional<Equation>                   equation;
    std::vector<std::pair<std::string, Word>> assign;
    std::optional<FiniteLanguage>             words;

    std::size_t max_len       = 3;
    std::size_t budget        = 10'000'000;
    std::size_t product_limit = kDefaultProductLimit;
    std::size_t workers       = 1;

    //! Relation that hull/check/search may use; throws ConfigError for the
    //! reversal predicate.
    RelPtr const& anticongruence() const;
    Equation const& require_equation() const;
    FiniteLanguage const& require_words() const;
  };

  //! Throws ParseError with 1-based line and column.
  JobConfig parse_config(std::string_view text);

  //! Reads and parses a file; throws ConfigError if it cannot be read.
  JobConfig load_config(std::string const& path);

}  // namespace pseudoeq
