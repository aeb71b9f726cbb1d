#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "opgb/buchberger.hpp"

namespace opgb {

struct ParseError : std::runtime_error {
  ParseError(int line, int col, const std::string& what);
  int line;
  int col;
};

// Tree expressions: leaves are bare integers, vertices are name(child,...).
std::string format_tree(const TreeMonomial& t, const Alphabet& alphabet);
TreeMonomial parse_tree(const std::string& text, const Alphabet& alphabet);

// Linear combinations: "m(m(1,2),3) - 3/2*m(1,m(2,3))"; an omitted coefficient
// means 1; terms print leading-first. The zero polynomial prints as "0".
std::string format_element(const OperadPolynomial& f, const Alphabet& alphabet);
OperadPolynomial parse_element(const std::string& text, const Alphabet& alphabet,
                               const OrderingSpec& spec);

// The hole vertex prints as _(children...).
std::string format_hole_tree(const HoleTree& t, const Alphabet& alphabet);

// 1-based child indices separated by dots; the root prints as "root".
std::string format_path(const Path& path);

// A parsed presentation file: generator/action/relation/ordering directives
// with # comments. The ordering defaults to pathperm when not declared.
struct PresentationFile {
  Presentation presentation;
  GeneratorAction actions;
  bool ordering_declared = false;
  std::vector<std::string> warnings;  // e.g. generators of arity 1
};

PresentationFile parse_presentation(const std::string& text);
PresentationFile parse_presentation_file(const std::string& path);
std::string format_presentation(const PresentationFile& file);

}  // namespace opgb
