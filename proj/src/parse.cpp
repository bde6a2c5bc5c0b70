#include "sclgap/parse.hpp"

#include <cctype>
#include <charconv>
#include <set>

#include "sclgap/error.hpp"

namespace sclgap {

  namespace {

    class Cursor {
     public:
      explicit Cursor(std::string_view text) : _text(text) {}

      std::size_t pos() const noexcept {
        return _pos;
      }
      void skip_ws() {
        while (_pos < _text.size() && std::isspace(static_cast<unsigned char>(_text[_pos]))) {
          ++_pos;
        }
      }
      bool at_end() {
        skip_ws();
        return _pos >= _text.size();
      }
      char peek() {
        skip_ws();
        return _pos < _text.size() ? _text[_pos] : '\0';
      }
      // Character at the cursor without skipping whitespace.
      char raw_peek() const noexcept {
        return _pos < _text.size() ? _text[_pos] : '\0';
      }
      bool accept(char c) {
        if (peek() == c) {
          ++_pos;
          return true;
        }
        return false;
      }
      bool accept(std::string_view word) {
        skip_ws();
        if (_text.substr(_pos, word.size()) == word) {
          _pos += word.size();
          return true;
        }
        return false;
      }
      void expect(char c) {
        if (!accept(c)) {
          fail(std::string("expected '") + c + "'");
        }
      }
      [[noreturn]] void fail(std::string const& msg) const {
        throw ParseError(msg, _pos);
      }

      std::string identifier() {
        skip_ws();
        std::size_t const start = _pos;
        if (_pos < _text.size()
            && (std::isalpha(static_cast<unsigned char>(_text[_pos])) || _text[_pos] == '_')) {
          ++_pos;
          while (_pos < _text.size()
                 && (std::isalnum(static_cast<unsigned char>(_text[_pos])) || _text[_pos] == '_')) {
            ++_pos;
          }
        }
        if (start == _pos) {
          fail("expected a name");
        }
        return std::string(_text.substr(start, _pos - start));
      }

      std::int64_t integer(bool allow_sign = true) {
        skip_ws();
        std::size_t const start = _pos;
        std::size_t       end   = _pos;
        if (allow_sign && end < _text.size() && (_text[end] == '-' || _text[end] == '+')) {
          ++end;
        }
        while (end < _text.size() && std::isdigit(static_cast<unsigned char>(_text[end]))) {
          ++end;
        }
        std::string_view digits = _text.substr(start, end - start);
        if (!digits.empty() && digits.front() == '+') {
          digits.remove_prefix(1);
        }
        std::int64_t v   = 0;
        auto [ptr, ec]   = std::from_chars(digits.data(), digits.data() + digits.size(), v);
        if (ec != std::errc() || ptr != digits.data() + digits.size()) {
          fail(ec == std::errc::result_out_of_range ? "integer out of range" : "expected an integer");
        }
        _pos = end;
        return v;
      }

      bool digit_next() {
        return std::isdigit(static_cast<unsigned char>(peek()));
      }

      std::string_view rest() const {
        return _text.substr(_pos);
      }

     private:
      std::string_view _text;
      std::size_t      _pos = 0;
    };

    int to_int(Cursor const& c, std::int64_t v) {
      if (v < -1'000'000'000 || v > 1'000'000'000) {
        c.fail("integer out of range");
      }
      return static_cast<int>(v);
    }

    int lookup(GroupSpec const& g, std::string const& name) {
      for (int i = 0; i < g.generator_count(); ++i) {
        if (g.names[i] == name) {
          return i;
        }
      }
      for (int i = 0; i < g.generator_count(); ++i) {
        if (!g.aliases[i].empty() && g.aliases[i] == name) {
          return i;
        }
      }
      return -1;
    }

    // Appends letters until `stop` (or the end when stop == 0).
    void word_items(Cursor& c, GroupSpec const& g, char stop, std::vector<Letter>& out) {
      for (;;) {
        char const next = c.peek();
        if (next == '\0' || next == stop) {
          if (next != stop) {
            c.fail(std::string("expected '") + stop + "'");
          }
          return;
        }
        if (c.accept('(')) {
          std::vector<Letter> inner;
          word_items(c, g, ')', inner);
          c.expect(')');
          int n = 1;
          if (c.raw_peek() == '^') {
            c.accept('^');
            n = to_int(c, c.integer());
          }
          Word const w = reduce(g, inner);
          Word const p = power(g, w, n);
          out.insert(out.end(), p.begin(), p.end());
          continue;
        }
        if (next == '1' && out.empty()) {
          c.accept('1');
          continue;  // the identity
        }
        std::size_t const at   = c.pos();
        std::string const name = c.identifier();
        int const         gen  = lookup(g, name);
        if (gen < 0) {
          throw ParseError("undeclared generator '" + name + "'", at);
        }
        int exp = 1;
        if (c.raw_peek() == '^') {
          c.accept('^');
          std::size_t const exp_at = c.pos();
          exp                      = to_int(c, c.integer());
          if (exp == 0) {
            throw ParseError("zero exponent", exp_at);
          }
          if (!g.is_free(gen) && (exp < 1 || exp >= g.order(gen))) {
            throw ParseError("torsion exponent " + std::to_string(exp) + " of '" + name
                                 + "' outside 1.." + std::to_string(g.order(gen) - 1),
                             exp_at);
          }
        }
        out.push_back({gen, exp});
      }
    }

  }  // namespace

  GroupSpec parse_group(std::string_view text) {
    Cursor                   c(text);
    int                      free_rank = 0;
    std::vector<int>         orders;
    std::vector<std::string> free_names, torsion_names;
    bool                     declared = false;

    auto names = [&](std::size_t count, std::vector<std::string>& into) {
      if (!c.accept('(')) {
        into.insert(into.end(), count, std::string());
        return;
      }
      declared = true;
      std::size_t n = 0;
      do {
        into.push_back(c.identifier());
        ++n;
      } while (c.accept(','));
      c.expect(')');
      if (n != count) {
        c.fail("expected " + std::to_string(count) + " generator names, got " + std::to_string(n));
      }
    };

    do {
      if (c.at_end()) {
        c.fail("expected a factor");
      }
      std::size_t const at = c.pos();
      if (c.accept("Z/") || c.accept('C')) {
        int const o = to_int(c, c.integer(false));
        if (o < 2) {
          throw ParseError("cyclic factor order must be at least 2", at);
        }
        orders.push_back(o);
        names(1, torsion_names);
      } else if (c.accept('F')) {
        int const m = to_int(c, c.integer(false));
        free_rank += m;
        names(static_cast<std::size_t>(m), free_names);
      } else if (c.accept('Z')) {
        ++free_rank;
        names(1, free_names);
      } else {
        c.fail("expected F<m>, Z, C<o> or Z/<o>");
      }
    } while (c.accept('*'));
    if (!c.at_end()) {
      c.fail("unexpected trailing input");
    }

    GroupSpec g(free_rank, orders);
    if (declared) {
      std::vector<std::string> all = free_names;
      all.insert(all.end(), torsion_names.begin(), torsion_names.end());
      std::set<std::string> seen;
      for (int i = 0; i < g.generator_count(); ++i) {
        if (!all[i].empty()) {
          g.names[i] = all[i];
        }
        g.aliases[i].clear();
        if (!seen.insert(g.names[i]).second) {
          throw ParseError("generator name '" + g.names[i] + "' declared twice");
        }
      }
    }
    return g;
  }

  Word parse_word(std::string_view text, GroupSpec const& g) {
    Cursor              c(text);
    std::vector<Letter> raw;
    word_items(c, g, '\0', raw);
    return reduce(g, raw);
  }

  Chain parse_chain(std::string_view text, GroupSpec const& g) {
    Cursor c(text);
    Chain  out;
    if (c.accept('0') && c.at_end()) {
      return out;
    }
    c = Cursor(text);
    bool first = true;
    do {
      Rational sign = 1;
      if (c.accept('-')) {
        sign = -1;
      } else if (!c.accept('+') && !first) {
        c.fail("expected '+' or '-'");
      }
      first         = false;
      Rational coeff = 1;
      if (c.digit_next()) {
        std::int64_t const num = c.integer(false);
        std::int64_t       den = 1;
        if (c.accept('/')) {
          std::size_t const at = c.pos();
          den                  = c.integer(false);
          if (den == 0) {
            throw ParseError("zero denominator", at);
          }
        }
        coeff = Rational(num, den);
      }
      c.expect('[');
      std::vector<Letter> raw;
      word_items(c, g, ']', raw);
      c.expect(']');
      out.add(sign * coeff, reduce(g, raw));
    } while (!c.at_end());
    return out;
  }

  OrbifoldSpec parse_orbifold(std::string_view text) {
    Cursor c(text);
    if (!c.accept("orb")) {
      c.fail("expected 'orb('");
    }
    c.expect('(');
    OrbifoldSpec          s;
    std::set<std::string> seen;
    if (!c.accept(')')) {
      do {
        std::size_t const at  = c.pos();
        std::string const key = c.identifier();
        if (!seen.insert(key).second) {
          throw ParseError("duplicate key '" + key + "'", at);
        }
        c.expect('=');
        if (key == "orientable") {
          if (c.accept("true")) {
            s.orientable = true;
          } else if (c.accept("false")) {
            s.orientable = false;
          } else {
            c.fail("expected true or false");
          }
        } else if (key == "genus") {
          s.genus = to_int(c, c.integer(false));
        } else if (key == "boundary") {
          s.boundary_components = to_int(c, c.integer(false));
        } else if (key == "cones") {
          c.expect('[');
          if (!c.accept(']')) {
            do {
              s.cone_orders.push_back(to_int(c, c.integer(false)));
            } while (c.accept(','));
            c.expect(']');
          }
        } else {
          throw ParseError("unknown key '" + key + "'", at);
        }
      } while (c.accept(','));
      c.expect(')');
    }
    if (!c.at_end()) {
      c.fail("unexpected trailing input");
    }
    validate(s);
    return s;
  }

}  // namespace sclgap
