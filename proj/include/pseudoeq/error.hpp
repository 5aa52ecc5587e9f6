#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace pseudoeq {

  //! Base class of every exception thrown by the library.
  class Error : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
  };

  //! Two operands were built over different alphabets.
  class AlphabetMismatch : public Error {
   public:
    AlphabetMismatch() : Error("alphabet mismatch") {}
  };

  //! A position or length argument is outside the admissible range.
  class RangeError : public Error {
   public:
    using Error::Error;
  };

  //! A size guard (product size, enumeration size) was exceeded.
  class GuardExceeded : public Error {
   public:
    GuardExceeded(std::string const& what, std::size_t limit)
        : Error(what + " exceeds guard of " + std::to_string(limit)),
          limit_(limit) {}

    std::size_t limit() const noexcept {
      return limit_;
    }

   private:
    std::size_t limit_;
  };

  //! An operation was called outside its precondition.
  class PreconditionError : public Error {
   public:
    using Error::Error;
  };

  //! A word is not an element of the monoid it was supposed to lie in.
  class NotInMonoid : public PreconditionError {
   public:
    using PreconditionError::PreconditionError;
  };

  //! Textual input could not be parsed. Line and column are 1-based; a
  //! value of 0 means "unknown".
  class ParseError : public Error {
   public:
    ParseError(std::string const& msg, std::size_t line, std::size_t column)
        : Error(format(msg, line, column)),
          message_(msg),
          line_(line),
          column_(column) {}

    //! The message without position.
    std::string const& message() const noexcept {
      return message_;
    }

    std::size_t line() const noexcept {
      return line_;
    }
    std::size_t column() const noexcept {
      return column_;
    }

   private:
    static std::string format(std::string const& msg,
                              std::size_t        line,
                              std::size_t        column) {
      if (line == 0) {
        return "column " + std::to_string(column) + ": " + msg;
      }
      return "line " + std::to_string(line) + ", column "
             + std::to_string(column) + ": " + msg;
    }

    std::string message_;
    std::size_t line_;
    std::size_t column_;
  };

  //! An enumeration ran out of its candidate budget.
  class BudgetExceeded : public Error {
   public:
    BudgetExceeded(std::size_t examined, std::size_t total)
        : Error("budget exceeded after " + std::to_string(examined) + " of "
                + std::to_string(total) + " candidates"),
          examined_(examined),
          total_(total) {}

    std::size_t examined() const noexcept {
      return examined_;
    }
    std::size_t total() const noexcept {
      return total_;
    }

   private:
    std::size_t examined_;
    std::size_t total_;
  };

}  // namespace pseudoeq
