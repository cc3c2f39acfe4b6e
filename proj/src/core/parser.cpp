#include "parser.hpp"

#include <cctype>

namespace onsat {

namespace {

class ExprParser {
 public:
  ExprParser(std::string_view text, SymbolTable& symbols) : text_(text), symbols_(symbols) {}

  BoolFunc parse() {
    BoolFunc f = parse_or();
    skip_space();
    if (pos_ != text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
    return f;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const {
    throw Error(ErrorCode::ParseError, "column " + std::to_string(pos_ + 1) + ": " + msg);
  }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_space();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  BoolFunc parse_or() {
    std::vector<BoolFunc> parts{parse_xor()};
    while (accept('|')) parts.push_back(parse_xor());
    return parts.size() == 1 ? parts.front() : BoolFunc::disjunction(std::move(parts));
  }

  BoolFunc parse_xor() {
    std::vector<BoolFunc> parts{parse_and()};
    while (accept('^')) parts.push_back(parse_and());
    return parts.size() == 1 ? parts.front() : BoolFunc::exclusive(std::move(parts));
  }

  BoolFunc parse_and() {
    std::vector<BoolFunc> parts{parse_not()};
    while (accept('&')) parts.push_back(parse_not());
    return parts.size() == 1 ? parts.front() : BoolFunc::conjunction(std::move(parts));
  }

  BoolFunc parse_not() {
    if (accept('~')) return ~parse_not();
    BoolFunc f = parse_atom();
    while (accept('\'')) f = ~f;
    return f;
  }

  BoolFunc parse_atom() {
    skip_space();
    if (pos_ >= text_.size()) fail("unexpected end of expression");
    const char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      BoolFunc f = parse_or();
      if (!accept(')')) fail("expected ')'");
      return f;
    }
    if (c == '0' || c == '1') {
      const std::size_t start = pos_++;
      if (pos_ < text_.size() && is_ident_char(text_[pos_])) {
        pos_ = start;
        fail("identifiers may not start with a digit");
      }
      return BoolFunc::constant(c == '1');
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      const std::size_t start = pos_;
      while (pos_ < text_.size() && is_ident_char(text_[pos_])) ++pos_;
      return BoolFunc::variable(symbols_.intern(std::string(text_.substr(start, pos_ - start))));
    }
    fail("unexpected '" + std::string(1, c) + "'");
  }

  static bool is_ident_char(char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
  }

  std::string_view text_;
  SymbolTable& symbols_;
  std::size_t pos_ = 0;
};

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  for (std::size_t i = 0; i <= s.size(); ++i) {
    if (i == s.size() || s[i] == sep) {
      out.push_back(s.substr(start, i - start));
      start = i + 1;
    }
  }
  return out;
}

bool valid_identifier(std::string_view name) {
  if (name.empty() || !(std::isalpha(static_cast<unsigned char>(name.front())) || name.front() == '_')) {
    return false;
  }
  for (char c : name) {
    if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_') return false;
  }
  return true;
}

}  // namespace

BoolFunc parse_function(std::string_view text, SymbolTable& symbols) {
  return ExprParser(text, symbols).parse();
}

SystemFile parse_system_file(std::string_view text) {
  SystemFile out;
  std::size_t line_no = 0;
  for (std::string_view raw : split(text, '\n')) {
    ++line_no;
    std::string_view line = raw;
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;
    auto where = [&](const std::string& msg) {
      return Error(ErrorCode::ParseError, "line " + std::to_string(line_no) + ": " + msg);
    };
    if (line.rfind("vars:", 0) == 0) {
      std::string names(line.substr(5));
      for (char& c : names) {
        if (c == ',') c = ' ';
      }
      std::size_t i = 0;
      while (i < names.size()) {
        while (i < names.size() && names[i] == ' ') ++i;
        std::size_t j = i;
        while (j < names.size() && names[j] != ' ' && names[j] != '\t') ++j;
        if (j > i) {
          auto name = std::string_view(names).substr(i, j - i);
          if (!valid_identifier(name)) throw where("bad variable name '" + std::string(name) + "'");
          out.symbols.intern(std::string(name));
        }
        i = j + 1;
      }
      continue;
    }
    const auto eq = line.find('=');
    if (eq == std::string_view::npos) throw where("expected '<expr> = <expr>'");
    if (line.find('=', eq + 1) != std::string_view::npos) throw where("more than one '='");
    try {
      BoolFunc lhs = parse_function(line.substr(0, eq), out.symbols);
      BoolFunc rhs = parse_function(line.substr(eq + 1), out.symbols);
      out.equations.emplace_back(std::move(lhs), std::move(rhs));
    } catch (const Error& e) {
      throw where(e.what());
    }
  }
  return out;
}

OnSet parse_onset_spec(std::string_view text, SymbolTable& symbols) {
  std::string_view body = trim(text);
  if (body.rfind("chain:", 0) == 0) {
    std::vector<Literal> lits;
    for (std::string_view item : split(body.substr(6), ',')) {
      item = trim(item);
      bool positive = true;
      if (!item.empty() && item.front() == '~') {
        positive = false;
        item = trim(item.substr(1));
      }
      if (!valid_identifier(item)) {
        throw Error(ErrorCode::ParseError, "bad chain literal '" + std::string(item) + "'");
      }
      lits.push_back({symbols.intern(std::string(item)), positive});
    }
    return term_chain(lits);
  }
  std::vector<BoolFunc> members;
  for (std::string_view item : split(body, ';')) {
    if (trim(item).empty()) continue;
    members.push_back(parse_function(item, symbols));
  }
  return validate_on(std::move(members));
}

}  // namespace onsat
