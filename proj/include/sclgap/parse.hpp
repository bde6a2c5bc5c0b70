#ifndef SCLGAP_PARSE_HPP_
#define SCLGAP_PARSE_HPP_

#include <string_view>

#include "sclgap/chain.hpp"
#include "sclgap/group.hpp"
#include "sclgap/orbifold.hpp"

// Text grammars. Errors are ParseError with a character offset.
//
//   group    := factor ("*" factor)*
//   factor   := ("F" m | "Z" | "C" o | "Z/" o) ["(" name ("," name)* ")"]
//   word     := "" | "1" | item (" " item)*
//   item     := name ["^" int] | "(" word ")" "^" int
//   chain    := "0" | ["-"] term (("+" | "-") term)*
//   term     := [int ["/" int]] "[" word "]"
//   orbifold := "orb(" key "=" value ("," key "=" value)* ")"
//               with keys orientable, genus, boundary, cones
//
// Generators are named x1.., y1.. unless declared. Undeclared specs also
// accept x, y, z for up to three free generators and a..f for up to six
// torsion ones.
namespace sclgap {

  GroupSpec    parse_group(std::string_view text);
  Word         parse_word(std::string_view text, GroupSpec const& g);
  Chain        parse_chain(std::string_view text, GroupSpec const& g);
  OrbifoldSpec parse_orbifold(std::string_view text);

}  // namespace sclgap

#endif  // SCLGAP_PARSE_HPP_
