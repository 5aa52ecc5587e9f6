#include "pseudoeq/config.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <fstream>
#include <map>
#include <sstream>

namespace pseudoeq {

  namespace {
    bool is_space(char c) {
      return std::isspace(static_cast<unsigned char>(c)) != 0;
    }

    // Trims `s` and adds the number of dropped leading characters to `col`.
    std::string_view trim(std::string_view s, std::size_t& col) {
      while (!s.empty() && is_space(s.front())) {
        s.remove_prefix(1);
        ++col;
      }
      while (!s.empty() && is_space(s.back())) {
        s.remove_suffix(1);
      }
      return s;
    }

    // Rethrows a parse error from a sub-parser at an absolute position.
    [[noreturn]] void rethrow_at(ParseError const& e,
                                 std::size_t       line,
                                 std::size_t       col) {
      auto const c = e.column() == 0 ? col : col + e.column() - 1;
      throw ParseError(e.message(), line, c);
    }

    struct Token {
      std::string_view text;
      std::size_t      column;  // 1-based within the parsed string
    };

    std::vector<Token> split_tokens(std::string_view s,
                                    bool             comma_too = false) {
      std::vector<Token> out;
      std::size_t        i = 0;
      while (i < s.size()) {
        if (is_space(s[i]) || (comma_too && s[i] == ',')) {
          ++i;
          continue;
        }
        std::size_t j = i;
        while (j < s.size() && !is_space(s[j]) && !(comma_too && s[j] == ',')) {
          ++j;
        }
        out.push_back({s.substr(i, j - i), i + 1});
        i = j;
      }
      return out;
    }

    Word parse_word_at(AlphabetPtr const& alphabet,
                       std::string_view   text,
                       std::size_t        column) {
      try {
        return Word::parse(alphabet, text);
      } catch (ParseError const& e) {
        rethrow_at(e, 0, column);
      }
    }

    std::vector<std::vector<Letter>> parse_cycles(AlphabetPtr const& alphabet,
                                                  std::string_view   text,
                                                  std::size_t        base) {
      std::vector<std::vector<Letter>> cycles;
      std::size_t                      i = 0;
      while (i < text.size()) {
        if (is_space(text[i])) {
          ++i;
          continue;
        }
        if (text[i] != '(') {
          throw ParseError("expected '('", 0, base + i);
        }
        auto close = text.find(')', i);
        if (close == std::string_view::npos) {
          throw ParseError("unclosed cycle", 0, base + i);
        }
        std::vector<Letter> cycle;
        for (auto const& tok : split_tokens(text.substr(i + 1, close - i - 1))) {
          auto x = alphabet->find(tok.text);
          if (!x) {
            throw ParseError("unknown symbol '" + std::string(tok.text) + "'",
                             0,
                             base + i + tok.column);
          }
          cycle.push_back(*x);
        }
        if (!cycle.empty()) {
          cycles.push_back(std::move(cycle));
        }
        i = close + 1;
      }
      return cycles;
    }

    std::size_t parse_count(std::string_view text,
                            std::size_t      line,
                            std::size_t      col,
                            std::size_t      min) {
      std::size_t n = 0;
      auto [p, ec]  = std::from_chars(text.data(), text.data() + text.size(), n);
      if (ec != std::errc() || p != text.data() + text.size()) {
        throw ParseError("expected a non-negative integer", line, col);
      }
      if (n < min) {
        throw ParseError("value must be at least " + std::to_string(min),
                         line,
                         col);
      }
      return n;
    }
  }  // namespace

  RelSpec parse_rel(AlphabetPtr const& alphabet, std::string_view text) {
    std::size_t col = 1;
    auto        t   = trim(text, col);
    RelSpec     spec;
    spec.text = std::string(t);
    if (t == "identity") {
      spec.rel = Anticongruence::identity(alphabet);
      return spec;
    }
    if (t == "reversal") {
      spec.raw = reversal_relation(alphabet);
      return spec;
    }
    constexpr std::string_view kPerm  = "permutation:";
    constexpr std::string_view kTable = "table:";
    if (t.starts_with(kPerm)) {
      auto cycles = parse_cycles(alphabet, t.substr(kPerm.size()), col + kPerm.size());
      try {
        spec.rel = Anticongruence::permutation_from_cycles(alphabet, cycles);
      } catch (PreconditionError const& e) {
        throw ParseError(e.what(), 0, col);
      }
      return spec;
    }
    if (t.starts_with(kTable)) {
      std::vector<std::pair<Word, Word>> pairs;
      std::size_t bc   = col + kTable.size();
      auto        body = trim(t.substr(kTable.size()), bc);
      for (std::size_t pos = 0; !body.empty();) {
        auto        comma = std::min(body.find(',', pos), body.size());
        std::size_t c     = bc + pos;
        auto        item  = trim(body.substr(pos, comma - pos), c);
        if (item.empty()) {
          throw ParseError("empty pair", 0, c);
        }
        auto tilde = item.find('~');
        if (tilde == std::string_view::npos) {
          throw ParseError("expected u~v", 0, c);
        }
        std::size_t lc = c;
        std::size_t rc = c + tilde + 1;
        auto u = parse_word_at(alphabet, trim(item.substr(0, tilde), lc), lc);
        auto v = parse_word_at(alphabet, trim(item.substr(tilde + 1), rc), rc);
        if (u.size() != v.size()) {
          throw ParseError("pair " + u.to_string() + "~" + v.to_string()
                               + " has mismatched lengths",
                           0,
                           c);
        }
        pairs.emplace_back(std::move(u), std::move(v));
        if (comma == body.size()) {
          break;
        }
        pos = comma + 1;
      }
      spec.rel = close_pairs(alphabet, pairs);
      return spec;
    }
    throw ParseError("unknown relation '" + std::string(t) + "'", 0, col);
  }

  std::vector<std::pair<std::string, Word>> parse_assignment(
      AlphabetPtr const& alphabet,
      std::string_view   text) {
    std::vector<std::pair<std::string, Word>> out;
    for (auto const& tok : split_tokens(text)) {
      auto eq = tok.text.find('=');
      if (eq == std::string_view::npos || eq == 0) {
        throw ParseError("expected unknown=word", 0, tok.column);
      }
      std::string name(tok.text.substr(0, eq));
      for (auto const& [x, w] : out) {
        if (x == name) {
          throw ParseError("unknown " + name + " assigned twice", 0, tok.column);
        }
      }
      out.emplace_back(std::move(name),
                       parse_word_at(alphabet, tok.text.substr(eq + 1), tok.column + eq + 1));
    }
    return out;
  }

  FiniteLanguage parse_word_list(AlphabetPtr const& alphabet,
                                 std::string_view   text) {
    std::vector<Word> words;
    for (auto const& tok : split_tokens(text, true)) {
      words.push_back(parse_word_at(alphabet, tok.text, tok.column));
    }
    return FiniteLanguage(alphabet, std::move(words));
  }

  RelPtr const& JobConfig::anticongruence() const {
    if (!rel.rel) {
      throw ConfigError("relation '" + rel.text
                        + "' is not an anticongruence; only verify-rel accepts it");
    }
    return rel.rel;
  }

  Equation const& JobConfig::require_equation() const {
    if (!equation) {
      throw ConfigError("configuration has no 'equation:' line");
    }
    return *equation;
  }

  FiniteLanguage const& JobConfig::require_words() const {
    if (!words) {
      throw ConfigError("configuration has no 'words:' line");
    }
    return *words;
  }

  JobConfig parse_config(std::string_view text) {
    struct Entry {
      std::string_view value;
      std::size_t      line;
      std::size_t      column;
    };
    static std::vector<std::string> const keys = {"alphabet",
                                                  "rel",
                                                  "equation",
                                                  "assign",
                                                  "words",
                                                  "max_len",
                                                  "budget",
                                                  "product_limit",
                                                  "workers"};
    std::map<std::string, Entry> entries;
    std::size_t                  line_no = 0;
    std::size_t                  start   = 0;
    while (start <= text.size()) {
      auto end = text.find('\n', start);
      if (end == std::string_view::npos) {
        end = text.size();
      }
      ++line_no;
      auto line = text.substr(start, end - start);
      start     = end + 1;
      if (auto hash = line.find('#'); hash != std::string_view::npos) {
        line = line.substr(0, hash);
      }
      std::size_t col = 1;
      line            = trim(line, col);
      if (line.empty()) {
        if (end == text.size()) {
          break;
        }
        continue;
      }
      auto colon = line.find(':');
      if (colon == std::string_view::npos) {
        throw ParseError("expected 'key: value'", line_no, col);
      }
      std::string key(line.substr(0, colon));
      while (!key.empty() && is_space(key.back())) {
        key.pop_back();
      }
      if (std::find(keys.begin(), keys.end(), key) == keys.end()) {
        throw ParseError("unknown key '" + key + "'", line_no, col);
      }
      if (entries.count(key) != 0) {
        throw ParseError("duplicate key '" + key + "'", line_no, col);
      }
      std::size_t vcol  = col + colon + 1;
      auto        value = trim(line.substr(colon + 1), vcol);
      entries.emplace(key, Entry{value, line_no, vcol});
      if (end == text.size()) {
        break;
      }
    }

    JobConfig cfg;
    auto      alpha = entries.find("alphabet");
    if (alpha == entries.end()) {
      throw ParseError("missing 'alphabet:' line", 0, 0);
    }
    auto at = [&](Entry const& e, auto&& fn) {
      try {
        return fn(e.value);
      } catch (ParseError const& err) {
        rethrow_at(err, e.line, e.column);
      } catch (PreconditionError const& err) {
        throw ParseError(err.what(), e.line, e.column);
      } catch (AlphabetMismatch const& err) {
        throw ParseError(err.what(), e.line, e.column);
      }
    };
    cfg.alphabet = at(alpha->second, [](std::string_view v) {
      std::vector<std::string> symbols;
      for (auto const& tok : split_tokens(v)) {
        symbols.emplace_back(tok.text);
      }
      if (symbols.empty()) {
        throw ParseError("empty alphabet", 0, 1);
      }
      return make_alphabet(std::move(symbols));
    });

    if (auto it = entries.find("rel"); it != entries.end()) {
      cfg.rel = at(it->second,
                   [&](std::string_view v) { return parse_rel(cfg.alphabet, v); });
    } else {
      cfg.rel.rel  = Anticongruence::identity(cfg.alphabet);
      cfg.rel.text = "identity";
    }
    if (auto it = entries.find("equation"); it != entries.end()) {
      cfg.equation = at(it->second, [](std::string_view v) {
        return std::optional<Equation>(parse_equation(v));
      });
    }
    if (auto it = entries.find("assign"); it != entries.end()) {
      cfg.assign = at(it->second, [&](std::string_view v) {
        return parse_assignment(cfg.alphabet, v);
      });
    }
    if (auto it = entries.find("words"); it != entries.end()) {
      cfg.words = at(it->second, [&](std::string_view v) {
        return std::optional<FiniteLanguage>(parse_word_list(cfg.alphabet, v));
      });
    }
    auto count = [&](char const* key, std::size_t& field, std::size_t min) {
      if (auto it = entries.find(key); it != entries.end()) {
        field = parse_count(it->second.value, it->second.line, it->second.column, min);
      }
    };
    count("max_len", cfg.max_len, 0);
    count("budget", cfg.budget, 1);
    count("product_limit", cfg.product_limit, 1);
    count("workers", cfg.workers, 1);
    return cfg;
  }

  JobConfig load_config(std::string const& path) {
    std::ifstream in(path);
    if (!in) {
      throw ConfigError("cannot read config file '" + path + "'");
    }
    std::stringstream buf;
    buf << in.rdbuf();
    return parse_config(buf.str());
  }

}  // namespace pseudoeq
