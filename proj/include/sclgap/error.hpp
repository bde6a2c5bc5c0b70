#ifndef SCLGAP_ERROR_HPP_
#define SCLGAP_ERROR_HPP_

#include <stdexcept>
#include <string>

namespace sclgap {

  // Malformed text input (group specs, words, chains, orbifold specs).
  class ParseError : public std::runtime_error {
   public:
    ParseError(std::string const& msg, std::size_t pos)
        : std::runtime_error(msg + " (at position " + std::to_string(pos) + ")"),
          _pos(pos) {}
    explicit ParseError(std::string const& msg) : std::runtime_error(msg), _pos(0) {}

    std::size_t position() const noexcept {
      return _pos;
    }

   private:
    std::size_t _pos;
  };

  // Well-formed input that lies outside an operation's domain, e.g. an
  // orbifold with non-negative Euler characteristic.
  class DomainError : public std::invalid_argument {
   public:
    using std::invalid_argument::invalid_argument;
  };

  // A side condition that the mathematics guarantees did not hold. Always a
  // bug, never a property of valid input.
  class InternalError : public std::logic_error {
   public:
    using std::logic_error::logic_error;
  };

  inline void check_internal(bool ok, char const* what) {
    if (!ok) {
      throw InternalError(what);
    }
  }

}  // namespace sclgap

#endif  // SCLGAP_ERROR_HPP_
