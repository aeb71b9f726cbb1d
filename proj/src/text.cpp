#include "opgb/text.hpp"

#include <cctype>
#include <fstream>
#include <map>
#include <optional>
#include <sstream>
#include <utility>

namespace opgb {

ParseError::ParseError(int line_, int col_, const std::string& message)
    : std::runtime_error("line " + std::to_string(line_) + ", column " + std::to_string(col_) +
                         ": " + message),
      line(line_),
      col(col_) {}

namespace {

struct Token {
  enum Kind { Ident, Integer, LParen, RParen, Comma, Plus, Minus, Star, Slash, Equals, End };
  Kind kind;
  std::string text;
  int line;
  int col;
};

std::vector<Token> tokenize(const std::string& text, int line0, int col0) {
  std::vector<Token> out;
  int line = line0, col = col0;
  size_t i = 0;
  while (i < text.size()) {
    char ch = text[i];
    if (ch == '\n') {
      ++line;
      col = 1;
      ++i;
      continue;
    }
    if (std::isspace(static_cast<unsigned char>(ch))) {
      ++col;
      ++i;
      continue;
    }
    int tok_col = col;
    auto single = [&](Token::Kind k) {
      out.push_back({k, std::string(1, ch), line, tok_col});
      ++i;
      ++col;
    };
    switch (ch) {
      case '(': single(Token::LParen); continue;
      case ')': single(Token::RParen); continue;
      case ',': single(Token::Comma); continue;
      case '+': single(Token::Plus); continue;
      case '-': single(Token::Minus); continue;
      case '*': single(Token::Star); continue;
      case '/': single(Token::Slash); continue;
      case '=': single(Token::Equals); continue;
      default: break;
    }
    if (std::isdigit(static_cast<unsigned char>(ch))) {
      size_t j = i;
      while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j]))) ++j;
      out.push_back({Token::Integer, text.substr(i, j - i), line, tok_col});
      col += static_cast<int>(j - i);
      i = j;
      continue;
    }
    if (std::isalpha(static_cast<unsigned char>(ch)) || ch == '_') {
      size_t j = i;
      while (j < text.size() &&
             (std::isalnum(static_cast<unsigned char>(text[j])) || text[j] == '_'))
        ++j;
      out.push_back({Token::Ident, text.substr(i, j - i), line, tok_col});
      col += static_cast<int>(j - i);
      i = j;
      continue;
    }
    throw ParseError(line, col, std::string("unexpected character '") + ch + "'");
  }
  out.push_back({Token::End, "", line, col});
  return out;
}

std::map<std::string, int> name_table(const Alphabet& alphabet) {
  std::map<std::string, int> names;
  for (const auto& g : alphabet) names[g.name] = g.ordinal;
  return names;
}

struct ExprParser {
  const std::vector<Token>& toks;
  const Alphabet& alphabet;
  const std::map<std::string, int>& names;
  size_t at = 0;

  const Token& peek(size_t ahead = 0) const {
    size_t k = at + ahead;
    return k < toks.size() ? toks[k] : toks.back();
  }
  Token take() { return toks[at < toks.size() - 1 ? at++ : at]; }

  [[noreturn]] static void fail(const Token& t, const std::string& message) {
    throw ParseError(t.line, t.col, message);
  }

  Token expect(Token::Kind kind, const std::string& what) {
    if (peek().kind != kind) fail(peek(), "expected " + what);
    return take();
  }

  int leaf_label(const Token& t) {
    try {
      long v = std::stol(t.text);
      if (v < 1) fail(t, "leaf labels start at 1");
      if (v > 1000000) fail(t, "leaf label out of range");
      return static_cast<int>(v);
    } catch (const std::out_of_range&) {
      fail(t, "leaf label out of range");
    }
  }

  TreeMonomial tree() {
    const Token t = peek();
    if (t.kind == Token::Integer) {
      take();
      return TreeMonomial::leaf(leaf_label(t));
    }
    if (t.kind == Token::Ident) {
      take();
      auto it = names.find(t.text);
      if (it == names.end()) fail(t, "unknown generator '" + t.text + "'");
      expect(Token::LParen, "'(' after generator name");
      std::vector<TreeMonomial> children;
      children.push_back(tree());
      while (peek().kind == Token::Comma) {
        take();
        children.push_back(tree());
      }
      expect(Token::RParen, "')'");
      int arity = alphabet[it->second].arity;
      if (static_cast<int>(children.size()) != arity)
        fail(t, "generator '" + t.text + "' takes " + std::to_string(arity) + " arguments, got " +
                    std::to_string(children.size()));
      return TreeMonomial::vertex(it->second, std::move(children));
    }
    fail(t, "expected a tree");
  }

  TreeMonomial tree_validated() {
    const Token start = peek();
    TreeMonomial m = tree();
    try {
      if (!is_shuffle_monomial(m))
        fail(start, "tree is not canonical: children must be sorted by minimal leaf");
    } catch (const std::invalid_argument& e) {
      fail(start, e.what());
    }
    return m;
  }

  Rational coefficient() {
    Token num = expect(Token::Integer, "a coefficient");
    Rational c{mpz_class(num.text)};
    if (peek().kind == Token::Slash) {
      take();
      Token den = expect(Token::Integer, "a denominator");
      mpz_class d(den.text);
      if (d == 0) fail(den, "zero denominator");
      c /= Rational{d};
    }
    return c;
  }

  // One signed summand; nullopt for the literal 0.
  std::optional<std::pair<TreeMonomial, Rational>> term() {
    const Token& t = peek();
    if (t.kind == Token::Integer &&
        (peek(1).kind == Token::Star || peek(1).kind == Token::Slash)) {
      Rational c = coefficient();
      expect(Token::Star, "'*' between coefficient and tree");
      return std::make_pair(tree_validated(), std::move(c));
    }
    if (t.kind == Token::Integer && t.text == "0") {
      take();
      return std::nullopt;
    }
    return std::make_pair(tree_validated(), Rational(1));
  }

  OperadPolynomial element(const OrderingSpec& spec) {
    const Token start = peek();
    std::vector<std::pair<TreeMonomial, Rational>> terms;
    int sign = 1;
    if (peek().kind == Token::Plus || peek().kind == Token::Minus)
      sign = take().kind == Token::Minus ? -1 : 1;
    while (true) {
      auto t = term();
      if (t) {
        if (sign < 0) t->second = -t->second;
        terms.push_back(std::move(*t));
      }
      if (peek().kind == Token::Plus || peek().kind == Token::Minus) {
        sign = take().kind == Token::Minus ? -1 : 1;
        continue;
      }
      break;
    }
    try {
      return OperadPolynomial::from_terms(spec, std::move(terms));
    } catch (const std::invalid_argument& e) {
      fail(start, e.what());
    }
  }

  GeneratorAction::Expansion expansion(int base_gen) {
    GeneratorAction::Expansion out;
    int sign = 1;
    if (peek().kind == Token::Plus || peek().kind == Token::Minus)
      sign = take().kind == Token::Minus ? -1 : 1;
    while (true) {
      Rational c(1);
      if (peek().kind == Token::Integer) {
        c = coefficient();
        expect(Token::Star, "'*' between coefficient and generator name");
      }
      Token name = expect(Token::Ident, "a generator name");
      auto it = names.find(name.text);
      if (it == names.end()) fail(name, "unknown generator '" + name.text + "'");
      if (alphabet[it->second].arity != alphabet[base_gen].arity)
        fail(name, "generator '" + name.text + "' has arity " +
                       std::to_string(alphabet[it->second].arity) +
                       " but the action is on a generator of arity " +
                       std::to_string(alphabet[base_gen].arity));
      if (sign < 0) c = -c;
      out.emplace_back(it->second, std::move(c));
      if (peek().kind == Token::Plus || peek().kind == Token::Minus) {
        sign = take().kind == Token::Minus ? -1 : 1;
        continue;
      }
      break;
    }
    return out;
  }
};

std::string join_children(const std::vector<std::string>& parts) {
  std::string out = "(";
  for (size_t i = 0; i < parts.size(); ++i) {
    if (i) out += ",";
    out += parts[i];
  }
  out += ")";
  return out;
}

}  // namespace

std::string format_tree(const TreeMonomial& t, const Alphabet& alphabet) {
  if (t.is_leaf()) return std::to_string(t.leaf_label());
  std::vector<std::string> parts;
  parts.reserve(t.children().size());
  for (const auto& c : t.children()) parts.push_back(format_tree(c, alphabet));
  return alphabet.at(t.generator()).name + join_children(parts);
}

TreeMonomial parse_tree(const std::string& text, const Alphabet& alphabet) {
  auto toks = tokenize(text, 1, 1);
  auto names = name_table(alphabet);
  ExprParser p{toks, alphabet, names};
  TreeMonomial m = p.tree_validated();
  p.expect(Token::End, "end of input");
  return m;
}

std::string format_element(const OperadPolynomial& f, const Alphabet& alphabet) {
  if (f.is_zero()) return "0";
  std::string out;
  const auto& terms = f.terms();
  for (size_t k = terms.size(); k-- > 0;) {
    const Term& term = terms[k];
    bool first = out.empty();
    bool negative = term.coefficient < 0;
    Rational a = abs(term.coefficient);
    if (first)
      out += negative ? "-" : "";
    else
      out += negative ? " - " : " + ";
    if (a != 1) out += format_rational(a) + "*";
    out += format_tree(term.monomial, alphabet);
  }
  return out;
}

OperadPolynomial parse_element(const std::string& text, const Alphabet& alphabet,
                               const OrderingSpec& spec) {
  auto toks = tokenize(text, 1, 1);
  auto names = name_table(alphabet);
  ExprParser p{toks, alphabet, names};
  OperadPolynomial f = p.element(spec);
  p.expect(Token::End, "end of input");
  return f;
}

std::string format_hole_tree(const HoleTree& t, const Alphabet& alphabet) {
  if (t.label > 0) return std::to_string(t.label);
  std::vector<std::string> parts;
  parts.reserve(t.children.size());
  for (const auto& c : t.children) parts.push_back(format_hole_tree(c, alphabet));
  std::string head = t.is_hole ? "_" : alphabet.at(t.gen).name;
  return head + join_children(parts);
}

std::string format_path(const Path& path) {
  if (path.empty()) return "root";
  std::string out;
  for (size_t i = 0; i < path.size(); ++i) {
    if (i) out += ".";
    out += std::to_string(path[i] + 1);
  }
  return out;
}

PresentationFile parse_presentation(const std::string& text) {
  PresentationFile out;
  out.presentation.spec = ordering_from_name("pathperm");

  struct Pending {
    int line;
    int col;
    std::string text;
  };
  std::vector<Pending> raw_actions, raw_relations;
  std::map<std::string, int> names;

  std::istringstream stream(text);
  std::string line;
  int line_no = 0;
  while (std::getline(stream, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (size_t hash = line.find('#'); hash != std::string::npos) line.resize(hash);
    size_t k0 = line.find_first_not_of(" \t");
    if (k0 == std::string::npos) continue;
    size_t k1 = line.find_first_of(" \t", k0);
    std::string keyword = line.substr(k0, (k1 == std::string::npos ? line.size() : k1) - k0);
    size_t r0 = (k1 == std::string::npos) ? line.size() : line.find_first_not_of(" \t", k1);
    if (r0 == std::string::npos) r0 = line.size();
    std::string rest = line.substr(r0);
    int rest_col = static_cast<int>(r0) + 1;

    if (keyword == "generator") {
      auto toks = tokenize(rest, line_no, rest_col);
      size_t at = 0;
      if (toks[at].kind != Token::Ident)
        throw ParseError(toks[at].line, toks[at].col, "expected a generator name");
      std::string name = toks[at++].text;
      if (toks[at].kind != Token::Integer)
        throw ParseError(toks[at].line, toks[at].col, "expected the generator arity");
      int arity = 0;
      try {
        arity = std::stoi(toks[at].text);
      } catch (const std::out_of_range&) {
        throw ParseError(toks[at].line, toks[at].col, "arity out of range");
      }
      if (arity < 1) throw ParseError(toks[at].line, toks[at].col, "arity must be at least 1");
      ++at;
      if (toks[at].kind != Token::End)
        throw ParseError(toks[at].line, toks[at].col, "unexpected trailing input");
      if (names.count(name))
        throw ParseError(line_no, rest_col, "generator '" + name + "' declared twice");
      int ordinal = static_cast<int>(out.presentation.generators.size());
      names[name] = ordinal;
      out.presentation.generators.push_back(Generator{name, arity, ordinal});
      if (arity == 1)
        out.warnings.push_back("generator '" + name +
                               "' has arity 1; the monomial basis of every arity is infinite, so "
                               "dimension and basis queries will fail");
    } else if (keyword == "ordering") {
      auto toks = tokenize(rest, line_no, rest_col);
      if (toks[0].kind != Token::Ident)
        throw ParseError(toks[0].line, toks[0].col, "expected an ordering name");
      if (toks[1].kind != Token::End)
        throw ParseError(toks[1].line, toks[1].col, "unexpected trailing input");
      if (out.ordering_declared)
        throw ParseError(line_no, rest_col, "ordering declared twice");
      try {
        out.presentation.spec = ordering_from_name(toks[0].text);
      } catch (const std::invalid_argument& e) {
        throw ParseError(toks[0].line, toks[0].col, e.what());
      }
      out.ordering_declared = true;
    } else if (keyword == "action") {
      raw_actions.push_back({line_no, rest_col, rest});
    } else if (keyword == "relation") {
      raw_relations.push_back({line_no, rest_col, rest});
    } else {
      throw ParseError(line_no, static_cast<int>(k0) + 1, "unknown directive '" + keyword + "'");
    }
  }

  const Alphabet& alphabet = out.presentation.generators;
  for (const auto& a : raw_actions) {
    auto toks = tokenize(a.text, a.line, a.col);
    ExprParser p{toks, alphabet, names};
    Token name = p.expect(Token::Ident, "a generator name");
    auto it = names.find(name.text);
    if (it == names.end()) ExprParser::fail(name, "unknown generator '" + name.text + "'");
    Token s = p.expect(Token::Ident, "a transposition like s1");
    int k = 0;
    if (s.text.size() >= 2 && s.text[0] == 's' &&
        s.text.find_first_not_of("0123456789", 1) == std::string::npos) {
      try {
        k = std::stoi(s.text.substr(1));
      } catch (const std::out_of_range&) {
        ExprParser::fail(s, "transposition index out of range");
      }
    } else {
      ExprParser::fail(s, "expected a transposition like s1");
    }
    int arity = alphabet[it->second].arity;
    if (k < 1 || k >= arity)
      ExprParser::fail(s, "transposition s" + std::to_string(k) +
                              " out of range for generator '" + name.text + "' of arity " +
                              std::to_string(arity));
    p.expect(Token::Equals, "'='");
    auto expansion = p.expansion(it->second);
    p.expect(Token::End, "end of input");
    if (out.actions.has(it->second, k))
      ExprParser::fail(name, "duplicate action entry for generator '" + name.text + "' and s" +
                                 std::to_string(k));
    out.actions.set(it->second, k, std::move(expansion));
  }

  for (const auto& r : raw_relations) {
    auto toks = tokenize(r.text, r.line, r.col);
    ExprParser p{toks, alphabet, names};
    OperadPolynomial f = p.element(out.presentation.spec);
    p.expect(Token::End, "end of input");
    out.presentation.relations.push_back(std::move(f));
  }

  return out;
}

PresentationFile parse_presentation_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open presentation file: " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_presentation(buffer.str());
}

namespace {

std::string format_expansion(const GeneratorAction::Expansion& expansion,
                             const Alphabet& alphabet) {
  if (expansion.empty()) return "0";
  std::string out;
  for (const auto& [gen, coeff] : expansion) {
    bool first = out.empty();
    bool negative = coeff < 0;
    Rational a = abs(coeff);
    if (first)
      out += negative ? "-" : "";
    else
      out += negative ? " - " : " + ";
    if (a != 1) out += format_rational(a) + "*";
    out += alphabet.at(gen).name;
  }
  return out;
}

}  // namespace

std::string format_presentation(const PresentationFile& file) {
  std::string out;
  const Alphabet& alphabet = file.presentation.generators;
  for (const auto& g : alphabet)
    out += "generator " + g.name + " " + std::to_string(g.arity) + "\n";
  out += "ordering " + ordering_name(file.presentation.spec) + "\n";
  for (const auto& [key, expansion] : file.actions.entries())
    out += "action " + alphabet.at(key.first).name + " s" + std::to_string(key.second) + " = " +
           format_expansion(expansion, alphabet) + "\n";
  for (const auto& f : file.presentation.relations)
    out += "relation " + format_element(f, alphabet) + "\n";
  return out;
}

}  // namespace opgb
