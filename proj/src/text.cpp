#include "dlexplain/text.hpp"

#include <algorithm>
#include <cctype>
#include <optional>

namespace dlx {

ParseError::ParseError(SourceSpan span, std::string message, std::vector<std::string> expected)
    : std::runtime_error(std::to_string(span.line) + ":" + std::to_string(span.column) + ": " + message),
      span_(span),
      message_(std::move(message)),
      expected_(std::move(expected)) {}

namespace {

enum class TokenKind { Ident, LParen, RParen, Arrow, End };

struct Token {
  TokenKind kind;
  std::string_view text;
  SourceSpan span;
};

bool is_space(char c) { return c == ' ' || c == '\t' || c == '\r' || c == '\n'; }
bool is_ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) != 0; }
bool is_ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) != 0 || c == '_'; }

std::vector<Token> lex(std::string_view text, SourceSpan start) {
  std::vector<Token> tokens;
  SourceSpan at = start;
  std::size_t i = 0;
  auto advance = [&](std::size_t n) {
    for (std::size_t k = 0; k < n; ++k, ++i) {
      if (text[i] == '\n') {
        ++at.line;
        at.column = 1;
      } else {
        ++at.column;
      }
    }
  };
  while (i < text.size()) {
    const char c = text[i];
    if (is_space(c)) {
      advance(1);
    } else if (c == '(' || c == ')') {
      tokens.push_back({c == '(' ? TokenKind::LParen : TokenKind::RParen, text.substr(i, 1), at});
      advance(1);
    } else if (c == '=' && i + 1 < text.size() && text[i + 1] == '>') {
      tokens.push_back({TokenKind::Arrow, text.substr(i, 2), at});
      advance(2);
    } else if (is_ident_start(c)) {
      std::size_t j = i + 1;
      while (j < text.size() && is_ident_char(text[j])) ++j;
      tokens.push_back({TokenKind::Ident, text.substr(i, j - i), at});
      advance(j - i);
    } else {
      throw ParseError(at, std::string("unexpected character '") + c + "'");
    }
  }
  tokens.push_back({TokenKind::End, {}, at});
  return tokens;
}

const std::vector<std::string> kUnaryStart = {"not", "Thing", "Nothing", "(", "class name", "role name"};

class ExpressionParser {
 public:
  ExpressionParser(std::vector<Token> tokens, const Signature* sig) : tokens_(std::move(tokens)), sig_(sig) {}

  ClassExpression parse_or() {
    std::vector<ClassExpression> operands{parse_and()};
    while (accept_keyword("or")) operands.push_back(parse_and());
    return chain(operands, false);
  }

  void expect(TokenKind kind, std::vector<std::string> expected) {
    if (peek().kind == kind) {
      ++pos_;
      return;
    }
    const auto& tok = peek();
    const std::string found = tok.kind == TokenKind::End ? "end of input" : "'" + std::string(tok.text) + "'";
    throw ParseError(tok.span, "unexpected " + found, std::move(expected));
  }

 private:
  const Token& peek(std::size_t ahead = 0) const { return tokens_[std::min(pos_ + ahead, tokens_.size() - 1)]; }

  bool is_keyword(const Token& tok, std::string_view word) const {
    return tok.kind == TokenKind::Ident && tok.text == word;
  }

  bool accept_keyword(std::string_view word) {
    if (!is_keyword(peek(), word)) return false;
    ++pos_;
    return true;
  }

  static ClassExpression chain(const std::vector<ClassExpression>& operands, bool conjunction) {
    ClassExpression out = operands.back();
    for (auto it = operands.rbegin() + 1; it != operands.rend(); ++it) {
      out = conjunction ? ClassExpression::conjunction(*it, out) : ClassExpression::disjunction(*it, out);
    }
    return out;
  }

  ClassExpression parse_and() {
    std::vector<ClassExpression> operands{parse_unary()};
    while (accept_keyword("and")) operands.push_back(parse_unary());
    return chain(operands, true);
  }

  ClassExpression parse_unary() {
    const Token tok = peek();
    switch (tok.kind) {
      case TokenKind::LParen: {
        ++pos_;
        auto inner = parse_or();
        expect(TokenKind::RParen, {")", "and", "or"});
        return inner;
      }
      case TokenKind::Ident:
        break;
      default: {
        const std::string found = tok.kind == TokenKind::End ? "end of input" : "'" + std::string(tok.text) + "'";
        throw ParseError(tok.span, "unexpected " + found, kUnaryStart);
      }
    }
    if (tok.text == "not") {
      ++pos_;
      return ClassExpression::negation(parse_unary());
    }
    if (tok.text == "Thing") {
      ++pos_;
      return ClassExpression::top();
    }
    if (tok.text == "Nothing") {
      ++pos_;
      return ClassExpression::bottom();
    }
    if (is_reserved_word(tok.text)) {
      throw ParseError(tok.span, "unexpected keyword '" + std::string(tok.text) + "'", kUnaryStart);
    }

    const std::string name(tok.text);
    const Token& next = peek(1);
    if (is_keyword(next, "some") || is_keyword(next, "only")) {
      if (sig_ != nullptr && !sig_->has_role(name)) {
        throw ParseError(tok.span, sig_->has_class(name) ? "'" + name + "' is a class, not a role"
                                                         : "unknown role '" + name + "'",
                         {"role name"});
      }
      const bool existential = next.text == "some";
      pos_ += 2;
      auto filler = parse_unary();
      return existential ? ClassExpression::exists(name, filler) : ClassExpression::forall(name, filler);
    }
    if (sig_ != nullptr && !sig_->has_class(name)) {
      if (sig_->has_role(name)) {
        throw ParseError(next.span, "role '" + name + "' must be followed by 'some' or 'only'", {"some", "only"});
      }
      throw ParseError(tok.span, "unknown class '" + name + "'", {"class name"});
    }
    ++pos_;
    return ClassExpression::atomic(name);
  }

  std::vector<Token> tokens_;
  std::size_t pos_ = 0;
  const Signature* sig_;
};

ClassExpression parse_single(std::string_view text, SourceSpan start, const Signature* sig) {
  ExpressionParser parser(lex(text, start), sig);
  auto expr = parser.parse_or();
  parser.expect(TokenKind::End, {"and", "or", "end of input"});
  return expr;
}

Axiom parse_axiom_at(std::string_view text, SourceSpan start, const Signature* sig) {
  ExpressionParser parser(lex(text, start), sig);
  Axiom ax;
  ax.sub = parser.parse_or();
  parser.expect(TokenKind::Arrow, {"=>", "and", "or"});
  ax.sup = parser.parse_or();
  parser.expect(TokenKind::End, {"and", "or", "end of input"});
  return ax;
}

struct Word {
  std::string_view text;
  int column;
};

// Splits a line at whitespace, dropping a trailing "#" comment.
std::vector<Word> split_words(std::string_view line) {
  std::vector<Word> words;
  std::size_t i = 0;
  while (i < line.size()) {
    if (line[i] == '#') break;
    if (is_space(line[i])) {
      ++i;
      continue;
    }
    std::size_t j = i;
    while (j < line.size() && !is_space(line[j]) && line[j] != '#') ++j;
    words.push_back({line.substr(i, j - i), static_cast<int>(i) + 1});
    i = j;
  }
  return words;
}

struct Line {
  int number;
  std::string_view text;
};

std::vector<Line> split_lines(std::string_view text) {
  std::vector<Line> lines;
  int number = 1;
  std::size_t start = 0;
  while (start <= text.size()) {
    auto end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    lines.push_back({number++, text.substr(start, end - start)});
    start = end + 1;
  }
  return lines;
}

}  // namespace

ClassExpression parse_expression(std::string_view text, const Signature& sig) {
  return parse_single(text, {}, &sig);
}

ClassExpression parse_expression(std::string_view text) { return parse_single(text, {}, nullptr); }

Axiom parse_axiom(std::string_view text, const Signature* sig) { return parse_axiom_at(text, {}, sig); }

std::string render_expression(const ClassExpression& expr) { return canonicalize(expr).text(); }

KnowledgeBase parse_kb(std::string_view text) {
  KnowledgeBase kb;
  const auto lines = split_lines(text);

  // Declarations first, so their order relative to use does not matter.
  std::map<std::string, NameKind> declared;
  for (const auto& line : lines) {
    const auto words = split_words(line.text);
    if (words.empty()) continue;
    const auto directive = words[0].text;
    std::optional<NameKind> kind;
    if (directive == "class") kind = NameKind::Class;
    if (directive == "role") kind = NameKind::Role;
    if (directive == "ind") kind = NameKind::Individual;
    if (!kind) continue;
    if (words.size() != 2) {
      const auto& at = words.size() < 2 ? words[0] : words[2];
      throw ParseError({line.number, at.column}, std::string(directive) + " expects exactly one name", {"name"});
    }
    const std::string name(words[1].text);
    const SourceSpan span{line.number, words[1].column};
    if (!is_identifier(name)) throw ParseError(span, "invalid name '" + name + "'", {"identifier"});
    if (is_reserved_word(name)) throw ParseError(span, "'" + name + "' is a reserved word", {"identifier"});
    auto [it, inserted] = declared.emplace(name, *kind);
    if (!inserted && it->second != *kind) {
      throw ParseError(span, "'" + name + "' already declared as " + std::string(to_string(it->second)));
    }
    switch (*kind) {
      case NameKind::Class:
        kb.signature.classes.insert(name);
        break;
      case NameKind::Role:
        kb.signature.roles.insert(name);
        break;
      case NameKind::Individual:
        kb.signature.individuals.insert(name);
        break;
    }
  }

  const auto& sig = kb.signature;
  auto require = [&](const Line& line, const Word& word, NameKind kind) {
    const std::string name(word.text);
    const SourceSpan span{line.number, word.column};
    auto found = sig.kind_of(name);
    if (!found) throw ParseError(span, "undeclared " + std::string(to_string(kind)) + " '" + name + "'");
    if (*found != kind) {
      throw ParseError(span, "'" + name + "' is a " + std::string(to_string(*found)) + ", expected a " +
                                 std::string(to_string(kind)));
    }
    return name;
  };
  auto arity = [](const Line& line, const std::vector<Word>& words, std::size_t n, const char* usage) {
    if (words.size() == n) return;
    const int column = words.size() > n ? words[n].column : static_cast<int>(line.text.size()) + 1;
    throw ParseError({line.number, column}, std::string("expected: ") + usage);
  };

  for (const auto& line : lines) {
    const auto words = split_words(line.text);
    if (words.empty()) continue;
    const auto directive = words[0].text;
    if (directive == "class" || directive == "role" || directive == "ind") continue;
    if (directive == "sub") {
      arity(line, words, 3, "sub <Class> <Class>");
      kb.tbox.push_back({ClassExpression::atomic(require(line, words[1], NameKind::Class)),
                         ClassExpression::atomic(require(line, words[2], NameKind::Class))});
    } else if (directive == "gci") {
      auto body = line.text.substr(static_cast<std::size_t>(words[0].column - 1) + 3);
      if (auto hash = body.find('#'); hash != std::string_view::npos) body = body.substr(0, hash);
      kb.tbox.push_back(parse_axiom_at(body, {line.number, words[0].column + 3}, &sig));
    } else if (directive == "type") {
      arity(line, words, 3, "type <Individual> <Class>");
      auto ind = require(line, words[1], NameKind::Individual);
      auto cls = require(line, words[2], NameKind::Class);
      kb.abox.insert(Assertion::of_class(std::move(cls), std::move(ind)));
    } else if (directive == "rel") {
      arity(line, words, 4, "rel <Role> <Individual> <Individual>");
      auto role = require(line, words[1], NameKind::Role);
      auto from = require(line, words[2], NameKind::Individual);
      auto to = require(line, words[3], NameKind::Individual);
      kb.abox.insert(Assertion::of_role(std::move(role), std::move(from), std::move(to)));
    } else {
      throw ParseError({line.number, words[0].column}, "unknown directive '" + std::string(directive) + "'",
                       {"class", "role", "ind", "sub", "gci", "type", "rel"});
    }
  }
  return kb;
}

std::string serialize_kb(const KnowledgeBase& kb) {
  std::vector<std::string> declarations;
  for (const auto& c : kb.signature.classes) declarations.push_back("class " + c);
  for (const auto& r : kb.signature.roles) declarations.push_back("role " + r);
  for (const auto& i : kb.signature.individuals) declarations.push_back("ind " + i);

  std::vector<std::string> axioms;
  axioms.reserve(kb.tbox.size());
  for (const auto& ax : kb.tbox) axioms.push_back(ax.str());

  std::vector<std::string> assertions;
  assertions.reserve(kb.abox.size());
  for (const auto& as : kb.abox) assertions.push_back(as.str());

  std::string out;
  for (auto* block : {&declarations, &axioms, &assertions}) {
    std::sort(block->begin(), block->end());
    for (const auto& line : *block) {
      out += line;
      out += '\n';
    }
  }
  return out;
}

LearningProblem parse_problem(std::string_view text, const Signature& sig) {
  LearningProblem problem;
  const auto lines = split_lines(text);
  int last_content_line = 1;
  for (const auto& line : lines) {
    const auto words = split_words(line.text);
    if (words.empty()) continue;
    last_content_line = line.number;
    auto sign = words[0].text;
    const SourceSpan sign_span{line.number, words[0].column};
    if (sign != "+" && sign != "-") throw ParseError(sign_span, "expected '+' or '-'", {"+", "-"});
    if (words.size() != 2) {
      const int column = words.size() > 2 ? words[2].column : static_cast<int>(line.text.size()) + 1;
      throw ParseError({line.number, column}, "expected exactly one individual after '" + std::string(sign) + "'");
    }
    const std::string name(words[1].text);
    const SourceSpan span{line.number, words[1].column};
    if (!sig.has_individual(name)) throw ParseError(span, "unknown individual '" + name + "'", {"individual"});
    auto& mine = sign == "+" ? problem.positives : problem.negatives;
    const auto& other = sign == "+" ? problem.negatives : problem.positives;
    if (other.contains(name)) {
      throw ParseError(span, "individual '" + name + "' is both a positive and a negative example");
    }
    mine.insert(name);
  }
  if (problem.positives.empty()) throw ParseError({last_content_line, 1}, "no positive examples", {"+"});
  if (problem.negatives.empty()) throw ParseError({last_content_line, 1}, "no negative examples", {"-"});
  return problem;
}

std::string serialize_problem(const LearningProblem& problem) {
  std::string out;
  for (const auto& p : problem.positives) out += "+ " + p + "\n";
  for (const auto& n : problem.negatives) out += "- " + n + "\n";
  return out;
}

}  // namespace dlx
