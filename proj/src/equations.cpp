#include "pseudoeq/equations.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>

#include "pseudoeq/error.hpp"
#include "pseudoeq/freeness.hpp"

namespace pseudoeq {

  namespace {
    bool ident_start(char c) {
      return std::isalpha(static_cast<unsigned char>(c)) != 0 || c == '_';
    }
    bool ident_char(char c) {
      return std::isalnum(static_cast<unsigned char>(c)) != 0 || c == '_'
             || c == '\'';
    }

    struct Token {
      enum Kind { unknown, one, equals } kind;
      std::string name;
      std::size_t count;
      std::size_t column;
    };

    std::vector<Token> tokenize(std::string_view text) {
      std::vector<Token> out;
      std::size_t        i = 0;
      while (i < text.size()) {
        char const c = text[i];
        if (std::isspace(static_cast<unsigned char>(c)) != 0) {
          ++i;
          continue;
        }
        std::size_t const col = i + 1;
        if (c == '=') {
          out.push_back({Token::equals, "", 0, col});
          ++i;
        } else if (c == '1'
                   && (i + 1 == text.size() || !ident_char(text[i + 1]))) {
          out.push_back({Token::one, "", 0, col});
          ++i;
        } else if (ident_start(c)) {
          std::size_t j = i;
          while (j < text.size() && ident_char(text[j])) {
            ++j;
          }
          Token tok{Token::unknown, std::string(text.substr(i, j - i)), 1, col};
          i = j;
          if (i < text.size() && text[i] == '^') {
            std::size_t k = i + 1;
            while (k < text.size()
                   && std::isdigit(static_cast<unsigned char>(text[k])) != 0) {
              ++k;
            }
            if (k == i + 1) {
              throw ParseError("expected exponent after '^'", 0, i + 2);
            }
            std::size_t n = 0;
            auto [p, ec] = std::from_chars(text.data() + i + 1, text.data() + k, n);
            if (ec != std::errc() || n > 4096) {
              throw ParseError("exponent out of range", 0, i + 2);
            }
            if (n == 0) {
              throw ParseError("zero exponent", 0, i + 2);
            }
            tok.count = n;
            i         = k;
          }
          out.push_back(std::move(tok));
        } else {
          throw ParseError(std::string("unexpected character '") + c + "'",
                           0,
                           col);
        }
      }
      return out;
    }

    Word substitute_letters(Word const&                     side,
                            std::vector<Word const*> const& image,
                            AlphabetPtr const&              target) {
      std::vector<Letter> out;
      for (auto x : side.letters()) {
        auto l = image[x]->letters();
        out.insert(out.end(), l.begin(), l.end());
      }
      return Word(target, std::move(out));
    }
  }  // namespace

  ////////////////////////////////////////////////////////////////////////
  // Equation
  ////////////////////////////////////////////////////////////////////////

  Equation::Equation(AlphabetPtr unknowns, Word lhs, Word rhs)
      : unknowns_(std::move(unknowns)),
        lhs_(std::move(lhs)),
        rhs_(std::move(rhs)) {
    if (!same_alphabet(unknowns_, lhs_.alphabet())
        || !same_alphabet(unknowns_, rhs_.alphabet())) {
      throw AlphabetMismatch();
    }
  }

  std::string Equation::to_string() const {
    auto side = [this](Word const& w) {
      if (w.empty()) {
        return std::string("1");
      }
      std::string out;
      for (std::size_t i = 0; i < w.size(); ++i) {
        if (i > 0) {
          out += ' ';
        }
        out += unknowns_->symbol(w[i]);
      }
      return out;
    };
    return side(lhs_) + " = " + side(rhs_);
  }

  Equation parse_equation(std::string_view text) {
    auto const tokens = tokenize(text);
    auto       eq     = std::find_if(tokens.begin(), tokens.end(), [](auto& t) {
      return t.kind == Token::equals;
    });
    if (eq == tokens.end()) {
      throw ParseError("missing '='", 0, text.size() + 1);
    }
    if (auto again = std::find_if(
            eq + 1, tokens.end(), [](auto& t) { return t.kind == Token::equals; });
        again != tokens.end()) {
      throw ParseError("second '='", 0, again->column);
    }

    std::vector<std::string> names;
    auto                     check_side = [&](auto first, auto last, std::size_t col) {
      if (first == last) {
        throw ParseError("empty side", 0, col);
      }
      bool const one = first->kind == Token::one;
      for (auto it = first; it != last; ++it) {
        if (it->kind == Token::one && (it != first || last - first != 1)) {
          throw ParseError("'1' must stand alone on its side", 0, it->column);
        }
        if (one) {
          continue;
        }
        if (std::find(names.begin(), names.end(), it->name) == names.end()) {
          names.push_back(it->name);
        }
      }
    };
    check_side(tokens.begin(), eq, 1);
    check_side(eq + 1, tokens.end(), eq->column + 1);

    auto theta = make_alphabet(names);
    auto build = [&](auto first, auto last) {
      std::vector<Letter> letters;
      for (auto it = first; it != last; ++it) {
        if (it->kind == Token::unknown) {
          letters.insert(letters.end(), it->count, *theta->find(it->name));
        }
      }
      return Word(theta, std::move(letters));
    };
    return Equation(theta, build(tokens.begin(), eq), build(eq + 1, tokens.end()));
  }

  ////////////////////////////////////////////////////////////////////////
  // Solution / PseudoSolution
  ////////////////////////////////////////////////////////////////////////

  Solution::Solution(AlphabetPtr target, std::map<std::string, Word> images)
      : target_(std::move(target)), images_(std::move(images)) {
    for (auto const& [x, w] : images_) {
      if (!same_alphabet(target_, w.alphabet())) {
        throw AlphabetMismatch();
      }
    }
  }

  Word const& Solution::image(std::string const& unknown) const {
    auto it = images_.find(unknown);
    if (it == images_.end()) {
      throw PreconditionError("missing image for unknown " + unknown);
    }
    return it->second;
  }

  Word Solution::apply(Word const& side) const {
    auto const&              theta = *side.alphabet();
    std::vector<Word const*> image;
    for (auto const& name : theta.symbols()) {
      auto it = images_.find(name);
      image.push_back(it == images_.end() ? nullptr : &it->second);
    }
    for (auto x : side.letters()) {
      if (image[x] == nullptr) {
        throw PreconditionError("missing image for unknown "
                                + theta.symbol(x));
      }
    }
    return substitute_letters(side, image, target_);
  }

  std::string Solution::to_string() const {
    std::string out;
    for (auto const& [x, w] : images_) {
      if (!out.empty()) {
        out += ' ';
      }
      out += x + "=" + w.to_string();
    }
    return out;
  }

  PseudoSolution::PseudoSolution(RelPtr rel, std::map<std::string, EqClass> images)
      : rel_(std::move(rel)), images_(std::move(images)) {
    for (auto const& [x, c] : images_) {
      if (c.rel() != rel_) {
        throw PreconditionError("image of " + x
                                + " belongs to a different relation");
      }
    }
  }

  EqClass const& PseudoSolution::image(std::string const& unknown) const {
    auto it = images_.find(unknown);
    if (it == images_.end()) {
      throw PreconditionError("missing image for unknown " + unknown);
    }
    return it->second;
  }

  FiniteLanguage PseudoSolution::image_words() const {
    std::vector<Word> out;
    for (auto const& [x, c] : images_) {
      auto m = c.members();
      out.insert(out.end(), m.begin(), m.end());
    }
    return FiniteLanguage(rel_->alphabet(), std::move(out));
  }

  std::string PseudoSolution::to_string() const {
    std::string out;
    for (auto const& [x, c] : images_) {
      if (!out.empty()) {
        out += ' ';
      }
      out += x + "=" + c.to_string();
    }
    return out;
  }

  bool check_solution(Equation const& e, Solution const& phi) {
    for (auto const& x : e.unknowns()->symbols()) {
      phi.image(x);
    }
    return phi.apply(e.lhs()) == phi.apply(e.rhs());
  }

  std::size_t solution_rank(Solution const& phi) {
    std::vector<Word> words;
    for (auto const& [x, w] : phi.images()) {
      words.push_back(w);
    }
    return rank(FiniteLanguage(phi.target(), std::move(words)));
  }

  FiniteLanguage side_language(PseudoSolution const& phi,
                               Word const&           side,
                               std::size_t           product_limit) {
    auto const& theta = *side.alphabet();
    auto        out   = FiniteLanguage::unit(phi.rel()->alphabet());
    for (auto x : side.letters()) {
      out = product(out, phi.image(theta.symbol(x)).members(), product_limit);
    }
    return out;
  }

  PseudoVerdict check_pseudo_solution(Equation const&       e,
                                      PseudoSolution const& phi,
                                      std::size_t           product_limit) {
    for (auto const& x : e.unknowns()->symbols()) {
      phi.image(x);
    }
    PseudoVerdict v{false,
                    std::nullopt,
                    side_language(phi, e.lhs(), product_limit),
                    side_language(phi, e.rhs(), product_limit)};
    auto common = set_intersection(v.lhs, v.rhs);
    if (!common.empty()) {
      v.valid  = true;
      v.common = common[0];
    }
    return v;
  }

  ////////////////////////////////////////////////////////////////////////
  // Alignment of equivalent sides
  ////////////////////////////////////////////////////////////////////////

  std::vector<Word> align_equivalent_sides(Equation const&       e,
                                           Anticongruence const& rel,
                                           std::span<Word const> occurrences) {
    auto const left  = e.lhs().size();
    auto const right = e.rhs().size();
    if (occurrences.size() != left + right) {
      throw PreconditionError("expected one word per occurrence");
    }
    std::vector<Letter> unknown_at;
    unknown_at.insert(unknown_at.end(), e.lhs().letters().begin(), e.lhs().letters().end());
    unknown_at.insert(unknown_at.end(), e.rhs().letters().begin(), e.rhs().letters().end());

    auto same_unknowns_equivalent = [&](std::span<Word const> words) {
      for (std::size_t i = 0; i < words.size(); ++i) {
        for (std::size_t j = i + 1; j < words.size(); ++j) {
          if (unknown_at[i] == unknown_at[j] && !rel.equiv(words[i], words[j])) {
            return false;
          }
        }
      }
      return true;
    };
    if (!same_unknowns_equivalent(occurrences)) {
      throw PreconditionError(
          "occurrences of the same unknown are not equivalent");
    }

    Word lhs_word(rel.alphabet());
    Word rhs_word(rel.alphabet());
    for (std::size_t i = 0; i < left; ++i) {
      lhs_word = concat(lhs_word, occurrences[i]);
    }
    for (std::size_t i = left; i < left + right; ++i) {
      rhs_word = concat(rhs_word, occurrences[i]);
    }
    if (lhs_word.size() != rhs_word.size()) {
      throw PreconditionError("sides have different lengths");
    }
    if (!rel.equiv(lhs_word, rhs_word)) {
      throw PreconditionError("sides are not equivalent");
    }

    std::vector<Word> out(occurrences.begin(), occurrences.begin() + left);
    std::size_t       pos = 0;
    for (std::size_t i = left; i < left + right; ++i) {
      out.push_back(lhs_word.factor(pos, occurrences[i].size()));
      pos += occurrences[i].size();
    }
    if (!same_unknowns_equivalent(out)) {
      throw std::logic_error("re-cut occurrences lost equivalence");
    }
    return out;
  }

  ////////////////////////////////////////////////////////////////////////
  // Descent
  ////////////////////////////////////////////////////////////////////////

  Descent descend(Equation const&       e,
                  PseudoSolution const& phi,
                  std::size_t           product_limit) {
    auto verdict = check_pseudo_solution(e, phi, product_limit);
    if (!verdict.valid) {
      throw PreconditionError("not a pseudo-solution: " + phi.to_string());
    }
    std::vector<Word> words;
    for (auto const& x : e.unknowns()->symbols()) {
      auto m = phi.image(x).members();
      words.insert(words.end(), m.begin(), m.end());
    }
    auto hull = pseudo_free_hull(
        phi.rel(), FiniteLanguage(phi.rel()->alphabet(), std::move(words)));

    std::map<std::string, Word>      letters;
    std::map<std::string, ClassWord> classes;
    for (auto const& x : e.unknowns()->symbols()) {
      auto const& rep = phi.image(x).rep();
      letters.emplace(x, gamma_letters(hull, rep));
      classes.emplace(x, gamma(hull, rep));
    }
    Solution alpha(hull.class_alphabet(), std::move(letters));
    auto     gamma_common = gamma(hull, *verdict.common);
    auto     alpha_lhs    = alpha.apply(e.lhs());

    Descent d{std::move(hull),
              std::move(alpha),
              std::move(classes),
              *verdict.common,
              std::move(gamma_common)};
    d.alpha_solves         = alpha_lhs == d.alpha.apply(e.rhs());
    d.alpha_matches_common = alpha_lhs == gamma_letters(d.hull, d.common);
    d.alpha_rank           = solution_rank(d.alpha);
    d.pseudo_rank          = d.hull.classes().size();
    return d;
  }

  ////////////////////////////////////////////////////////////////////////
  // Elementary transformations
  ////////////////////////////////////////////////////////////////////////

  Equation elementary_transform(Equation const&    e,
                                std::string const& shorter,
                                std::string const& longer,
                                bool               rename) {
    auto const& theta = e.unknowns();
    auto        s     = theta->find(shorter);
    auto        l     = theta->find(longer);
    if (!s || !l) {
      throw PreconditionError("unknown not declared in the equation");
    }
    if (*s == *l) {
      throw PreconditionError("elementary transformation needs two unknowns");
    }
    auto const& r = e.lhs();
    auto const& t = e.rhs();
    bool const  heads = !r.empty() && !t.empty()
                       && ((r[0] == *s && t[0] == *l) || (r[0] == *l && t[0] == *s));
    if (!heads) {
      throw PreconditionError("sides do not start with " + shorter + " and "
                              + longer);
    }

    auto rewrite = [&](Word const& side) {
      std::vector<Letter> out;
      for (auto x : side.letters()) {
        if (x != *l) {
          out.push_back(x);
        } else if (rename) {
          out.push_back(*s);
        } else {
          out.push_back(*s);
          out.push_back(*l);
        }
      }
      return out;
    };
    auto lhs = rewrite(r);
    auto rhs = rewrite(t);
    if (!rename) {
      // Both sides now start with `shorter`.
      lhs.erase(lhs.begin());
      rhs.erase(rhs.begin());
    }
    return Equation(theta, Word(theta, std::move(lhs)), Word(theta, std::move(rhs)));
  }

}  // namespace pseudoeq
