#include "stc/dsl.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

namespace stc {

namespace {

enum class Tok {
  Ident, Number, LParen, RParen, LBrace, RBrace,
  Comma, Equals, Arrow, At, Colon, Newline, End,
};

struct Token {
  Tok kind;
  std::string text;
  int line = 1;
  int col = 1;
};

struct Pos {
  int line = 1;
  int col = 1;
};

// Thrown by statement/expression parsers; converted into a Diagnostic.
struct ParseError {
  Pos pos;
  std::string message;
};

bool ident_start(char c) {
  return std::isalpha(static_cast<unsigned char>(c)) || c == '_';
}
bool ident_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '-';
}
bool digit(char c) { return std::isdigit(static_cast<unsigned char>(c)); }

std::vector<Token> lex(const std::string& text,
                       std::vector<Diagnostic>& diags) {
  std::vector<Token> out;
  int line = 1, col = 1;
  std::size_t i = 0;
  auto advance = [&](std::size_t n = 1) {
    for (std::size_t k = 0; k < n; ++k) {
      if (i < text.size() && text[i] == '\n') { ++line; col = 1; }
      else ++col;
      ++i;
    }
  };
  while (i < text.size()) {
    char c = text[i];
    if (c == '\n') {
      out.push_back({Tok::Newline, "\n", line, col});
      advance();
      continue;
    }
    if (c == ' ' || c == '\t' || c == '\r') { advance(); continue; }
    if (c == '#') {
      while (i < text.size() && text[i] != '\n') advance();
      continue;
    }
    int tl = line, tc = col;
    if (ident_start(c)) {
      std::string s;
      while (i < text.size() && ident_char(text[i])) {
        s.push_back(text[i]);
        advance();
      }
      out.push_back({Tok::Ident, std::move(s), tl, tc});
      continue;
    }
    if (digit(c) || ((c == '+' || c == '-') && i + 1 < text.size() &&
                     digit(text[i + 1]))) {
      std::string s;
      if (c == '+' || c == '-') { s.push_back(c); advance(); }
      while (i < text.size() && digit(text[i])) { s.push_back(text[i]); advance(); }
      if (i + 1 < text.size() && (text[i] == '/' || text[i] == '.') &&
          digit(text[i + 1])) {
        s.push_back(text[i]);
        advance();
        while (i < text.size() && digit(text[i])) { s.push_back(text[i]); advance(); }
      }
      out.push_back({Tok::Number, std::move(s), tl, tc});
      continue;
    }
    if (c == '=' && i + 1 < text.size() && text[i + 1] == '>') {
      out.push_back({Tok::Arrow, "=>", tl, tc});
      advance(2);
      continue;
    }
    Tok kind;
    switch (c) {
      case '(': kind = Tok::LParen; break;
      case ')': kind = Tok::RParen; break;
      case '{': kind = Tok::LBrace; break;
      case '}': kind = Tok::RBrace; break;
      case ',': kind = Tok::Comma; break;
      case '=': kind = Tok::Equals; break;
      case '@': kind = Tok::At; break;
      case ':': kind = Tok::Colon; break;
      default:
        diags.push_back({tl, tc, std::string("unexpected character '") + c + "'"});
        advance();
        continue;
    }
    out.push_back({kind, std::string(1, c), tl, tc});
    advance();
  }
  out.push_back({Tok::End, "", line, col});
  return out;
}

std::string lowercase(std::string s) {
  std::transform(s.begin(), s.end(), s.begin(),
                 [](unsigned char c) { return std::tolower(c); });
  return s;
}

const char* tok_name(Tok k) {
  switch (k) {
    case Tok::Ident: return "identifier";
    case Tok::Number: return "number";
    case Tok::LParen: return "'('";
    case Tok::RParen: return "')'";
    case Tok::LBrace: return "'{'";
    case Tok::RBrace: return "'}'";
    case Tok::Comma: return "','";
    case Tok::Equals: return "'='";
    case Tok::Arrow: return "'=>'";
    case Tok::At: return "'@'";
    case Tok::Colon: return "':'";
    case Tok::Newline: return "end of line";
    case Tok::End: return "end of input";
  }
  return "?";
}

class Cursor {
 public:
  Cursor(const Token* begin, const Token* end)
      : begin_(begin), cur_(begin), end_(end) {}

  const Token& peek() const { return *cur_; }
  bool at_end() const { return cur_ == end_; }

  bool accept(Tok k) {
    if (!at_end() && cur_->kind == k) { ++cur_; return true; }
    return false;
  }
  const Token& expect(Tok k, const std::string& what) {
    if (at_end() || cur_->kind != k) {
      Pos pos{1, 1};
      if (!at_end()) {
        pos = {cur_->line, cur_->col};
      } else if (cur_ != begin_) {
        // point just past the last token on the line
        const Token& prev = *(cur_ - 1);
        pos = {prev.line, prev.col + static_cast<int>(prev.text.size())};
      }
      throw ParseError{pos, "expected " + what + ", found " +
                                (at_end() ? "end of line"
                                          : tok_name(cur_->kind))};
    }
    return *cur_++;
  }

 private:
  const Token* begin_;
  const Token* cur_;
  const Token* end_;
};

bool plain_integer(const std::string& s) {
  return s.find('/') == std::string::npos && s.find('.') == std::string::npos;
}

// A value token: bare identifier or signed integer.
std::string parse_value(Cursor& c) {
  if (!c.at_end() && c.peek().kind == Tok::Ident) {
    std::string low = lowercase(c.peek().text);
    if (low == "and" || low == "or" || low == "not")
      throw ParseError{{c.peek().line, c.peek().col},
                       "'" + c.peek().text + "' is reserved and cannot be a value"};
    return c.expect(Tok::Ident, "value").text;
  }
  const Token& t = c.expect(Tok::Number, "value (identifier or signed integer)");
  if (!plain_integer(t.text))
    throw ParseError{{t.line, t.col},
                     "value must be an identifier or a signed integer"};
  return t.text;
}

constexpr int kMaxExprDepth = 200;

class ExprParser {
 public:
  explicit ExprParser(Cursor& c) : c_(c) {}

  Proposition proposition() { return or_expr(); }

  QueryExpression query() {
    QueryExpression q;
    q.antecedent = or_expr();
    c_.expect(Tok::Arrow, "'=>'");
    q.consequent = or_expr();
    if (c_.accept(Tok::At)) selector(q);
    return q;
  }

 private:
  bool at_keyword(const char* kw) const {
    return !c_.at_end() && c_.peek().kind == Tok::Ident &&
           lowercase(c_.peek().text) == kw;
  }

  Proposition or_expr() {
    Proposition left = and_expr();
    while (at_keyword("or")) {
      c_.accept(Tok::Ident);
      left = disj(std::move(left), and_expr());
    }
    return left;
  }

  Proposition and_expr() {
    Proposition left = unary();
    while (at_keyword("and")) {
      c_.accept(Tok::Ident);
      left = conj(std::move(left), unary());
    }
    return left;
  }

  Proposition unary() {
    if (at_keyword("not")) {
      c_.accept(Tok::Ident);
      return neg(unary());
    }
    return primary();
  }

  Proposition primary() {
    if (++depth_ > kMaxExprDepth) {
      const Token& t = c_.peek();
      throw ParseError{{t.line, t.col}, "expression too deeply nested"};
    }
    Proposition result;
    if (c_.accept(Tok::LParen)) {
      result = or_expr();
      c_.expect(Tok::RParen, "')'");
    } else {
      const Token& var = c_.expect(Tok::Ident, "variable name");
      std::string low = lowercase(var.text);
      if (low == "and" || low == "or" || low == "not")
        throw ParseError{{var.line, var.col},
                         "'" + var.text + "' is reserved"};
      c_.expect(Tok::Equals, "'='");
      result = atom(var.text, parse_value(c_));
    }
    --depth_;
    return result;
  }

  void selector(QueryExpression& q) {
    const Token& t = c_.expect(Tok::Ident, "evaluator selector");
    std::string name = lowercase(t.text);
    if (name == "dstc") {
      q.evaluator = QueryExpression::Evaluator::Dstc;
    } else if (name == "clause2") {
      q.evaluator = QueryExpression::Evaluator::Clause2;
    } else if (name == "footnote") {
      q.evaluator = QueryExpression::Evaluator::Footnote;
    } else if (name == "anyframe") {
      q.evaluator = QueryExpression::Evaluator::AnyFrame;
    } else if (name == "frame") {
      q.evaluator = QueryExpression::Evaluator::Frame;
      c_.expect(Tok::LParen, "'('");
      const Token& num = c_.expect(Tok::Number, "velocity");
      auto v = parse_rational(num.text);
      if (!v)
        throw ParseError{{num.line, num.col}, "malformed velocity"};
      if (abs(*v) >= 1)
        throw ParseError{{num.line, num.col},
                         "frame velocity must satisfy |v| < 1"};
      q.frame_velocity = *v;
      c_.expect(Tok::RParen, "')'");
    } else {
      throw ParseError{{t.line, t.col}, "unknown evaluator selector '@" +
                                            t.text + "'"};
    }
  }

  Cursor& c_;
  int depth_ = 0;
};

std::string render_constraint(const Constraint& c) {
  std::ostringstream os;
  if (c.kind == Constraint::Kind::Product) {
    os << "product(";
    for (std::size_t i = 0; i < c.scope.size(); ++i)
      os << (i ? ", " : "") << c.scope[i];
    os << ") = " << (c.product_target > 0 ? "+1" : "-1");
  } else {
    os << "table(";
    for (std::size_t i = 0; i < c.scope.size(); ++i)
      os << (i ? ", " : "") << c.scope[i];
    os << ")";
  }
  return os.str();
}

// ---------------------------------------------------------------------------
// Scenario file parsing: statements are collected line by line, then the
// document is assembled and cross-checked.

struct PendingActual {
  std::vector<std::pair<std::string, std::string>> assignments;
  std::vector<Pos> positions;
  Pos pos;
};

struct DocBuilder {
  std::vector<Diagnostic> diags;

  std::vector<std::pair<NamedPoint, Pos>> points;
  std::vector<std::pair<EventVariable, Pos>> variables;
  std::vector<std::pair<Constraint, Pos>> constraints;
  std::vector<std::pair<std::string, Pos>> choices;
  std::vector<std::pair<NamedQuery, Pos>> queries;
  std::optional<PendingActual> actual;

  void error(Pos p, std::string msg) {
    diags.push_back({p.line, p.col, std::move(msg)});
  }
};

Rat parse_coord(Cursor& c) {
  const Token& t = c.expect(Tok::Number, "coordinate");
  auto v = parse_rational(t.text);
  if (!v) throw ParseError{{t.line, t.col}, "malformed coordinate"};
  return *v;
}

void parse_statement(Cursor& c, DocBuilder& b) {
  const Token& head = c.peek();
  Pos pos{head.line, head.col};
  if (head.kind != Tok::Ident)
    throw ParseError{pos, std::string("expected a statement keyword, found ") +
                              tok_name(head.kind)};
  std::string kw = lowercase(head.text);
  c.accept(Tok::Ident);

  auto expect_done = [&] {
    if (!c.at_end()) {
      const Token& t = c.peek();
      throw ParseError{{t.line, t.col},
                       std::string("unexpected ") + tok_name(t.kind) +
                           " after statement"};
    }
  };

  if (kw == "point") {
    NamedPoint np;
    np.name = c.expect(Tok::Ident, "point name").text;
    std::vector<Rat> coords;
    coords.push_back(parse_coord(c));
    coords.push_back(parse_coord(c));
    if (!c.at_end()) {
      coords.push_back(parse_coord(c));
      coords.push_back(parse_coord(c));
    }
    expect_done();
    np.location.t = coords[0];
    np.location.x.assign(coords.begin() + 1, coords.end());
    b.points.emplace_back(std::move(np), pos);
    return;
  }

  if (kw == "var") {
    EventVariable v;
    v.id = c.expect(Tok::Ident, "variable name").text;
    c.expect(Tok::At, "'@'");
    v.point = c.expect(Tok::Ident, "point name").text;
    c.expect(Tok::LBrace, "'{'");
    v.domain.push_back(parse_value(c));
    while (c.accept(Tok::Comma)) v.domain.push_back(parse_value(c));
    c.expect(Tok::RBrace, "'}'");
    expect_done();
    b.variables.emplace_back(std::move(v), pos);
    return;
  }

  if (kw == "constraint") {
    const Token& kind = c.expect(Tok::Ident, "'product' or 'table'");
    std::string kname = lowercase(kind.text);
    Constraint con;
    if (kname == "product") con.kind = Constraint::Kind::Product;
    else if (kname == "table") con.kind = Constraint::Kind::Table;
    else
      throw ParseError{{kind.line, kind.col},
                       "unknown constraint kind '" + kind.text + "'"};
    c.expect(Tok::LParen, "'('");
    con.scope.push_back(c.expect(Tok::Ident, "variable name").text);
    while (c.accept(Tok::Comma))
      con.scope.push_back(c.expect(Tok::Ident, "variable name").text);
    c.expect(Tok::RParen, "')'");
    if (con.kind == Constraint::Kind::Product) {
      c.expect(Tok::Equals, "'='");
      const Token& t = c.expect(Tok::Number, "+1 or -1");
      if (t.text == "+1" || t.text == "1") con.product_target = 1;
      else if (t.text == "-1") con.product_target = -1;
      else
        throw ParseError{{t.line, t.col}, "product target must be +1 or -1"};
    } else {
      c.expect(Tok::LBrace, "'{'");
      while (!c.accept(Tok::RBrace)) {
        c.expect(Tok::LParen, "'(' opening a tuple or '}'");
        std::vector<std::string> tuple;
        tuple.push_back(parse_value(c));
        while (c.accept(Tok::Comma)) tuple.push_back(parse_value(c));
        c.expect(Tok::RParen, "')'");
        con.allowed.push_back(std::move(tuple));
      }
    }
    expect_done();
    b.constraints.emplace_back(std::move(con), pos);
    return;
  }

  if (kw == "actual") {
    if (b.actual)
      throw ParseError{pos, "duplicate actual clause"};
    PendingActual pa;
    pa.pos = pos;
    do {
      const Token& var = c.expect(Tok::Ident, "variable name");
      c.expect(Tok::Equals, "'='");
      pa.assignments.emplace_back(var.text, parse_value(c));
      pa.positions.push_back({var.line, var.col});
    } while (!c.at_end());
    b.actual = std::move(pa);
    return;
  }

  if (kw == "choice") {
    std::string id = c.expect(Tok::Ident, "variable name").text;
    expect_done();
    b.choices.emplace_back(std::move(id), pos);
    return;
  }

  if (kw == "query") {
    NamedQuery q;
    q.name = c.expect(Tok::Ident, "query name").text;
    c.expect(Tok::Colon, "':'");
    ExprParser ep(c);
    q.query = ep.query();
    expect_done();
    b.queries.emplace_back(std::move(q), pos);
    return;
  }

  throw ParseError{pos, "unknown statement '" + head.text + "'"};
}

// Cross-reference and consistency checks; fills the document on success.
std::optional<ScenarioDocument> assemble(DocBuilder& b) {
  ScenarioDocument doc;
  Scenario& s = doc.scenario;

  std::set<std::string> point_names;
  for (auto& [np, pos] : b.points) {
    if (!point_names.insert(np.name).second) {
      b.error(pos, "duplicate point name '" + np.name + "'");
      continue;
    }
    if (!s.points.empty() &&
        np.location.spatial_dim() != s.points.front().location.spatial_dim())
      b.error(pos, "point '" + np.name +
                       "' has a different spatial dimension than earlier points");
    for (const auto& other : s.points)
      if (other.location == np.location)
        b.error(pos, "point '" + np.name + "' has the same coordinates as '" +
                         other.name + "'");
    s.points.push_back(np);
  }

  std::set<std::string> var_ids;
  for (auto& [v, pos] : b.variables) {
    if (!var_ids.insert(v.id).second) {
      b.error(pos, "duplicate variable '" + v.id + "'");
      continue;
    }
    if (!point_names.count(v.point))
      b.error(pos, "variable '" + v.id + "' references unknown point '" +
                       v.point + "'");
    std::set<std::string> vals(v.domain.begin(), v.domain.end());
    if (vals.size() != v.domain.size())
      b.error(pos, "variable '" + v.id + "' repeats a domain value");
    s.variables.push_back(v);
  }

  auto domain_of = [&](const std::string& id) -> const std::vector<std::string>* {
    int vi = s.variable_index(id);
    return vi < 0 ? nullptr : &s.variables[vi].domain;
  };

  for (auto& [con, pos] : b.constraints) {
    bool scope_ok = true;
    std::set<std::string> seen;
    for (const auto& id : con.scope) {
      if (!seen.insert(id).second) {
        b.error(pos, "constraint repeats variable '" + id + "' in its scope");
        scope_ok = false;
      }
      const auto* dom = domain_of(id);
      if (!dom) {
        b.error(pos, "constraint references unknown variable '" + id + "'");
        scope_ok = false;
        continue;
      }
      if (con.kind == Constraint::Kind::Product)
        for (const auto& val : *dom)
          if (val != "+1" && val != "-1")
            b.error(pos, "product constraint needs {+1, -1} domains, but '" +
                             id + "' admits '" + val + "'");
    }
    if (scope_ok && con.kind == Constraint::Kind::Table) {
      for (const auto& tuple : con.allowed) {
        if (tuple.size() != con.scope.size()) {
          b.error(pos, "constraint tuple arity mismatch: scope has " +
                           std::to_string(con.scope.size()) +
                           " variables, tuple has " +
                           std::to_string(tuple.size()));
          continue;
        }
        for (std::size_t k = 0; k < tuple.size(); ++k) {
          const auto* dom = domain_of(con.scope[k]);
          if (dom && std::find(dom->begin(), dom->end(), tuple[k]) == dom->end())
            b.error(pos, "tuple value '" + tuple[k] + "' not in domain of '" +
                             con.scope[k] + "'");
        }
      }
    }
    s.constraints.push_back(con);
  }

  if (s.points.empty()) b.error({1, 1}, "no points declared");
  if (s.variables.empty()) b.error({1, 1}, "no variables declared");

  if (!b.actual) {
    b.error({1, 1}, "missing actual clause");
  } else {
    s.actual.values.assign(s.variables.size(), -1);
    for (std::size_t k = 0; k < b.actual->assignments.size(); ++k) {
      const auto& [id, value] = b.actual->assignments[k];
      Pos pos = b.actual->positions[k];
      int vi = s.variable_index(id);
      if (vi < 0) {
        b.error(pos, "actual assigns unknown variable '" + id + "'");
        continue;
      }
      if (s.actual.values[vi] != -1) {
        b.error(pos, "actual assigns variable '" + id + "' twice");
        continue;
      }
      const auto& dom = s.variables[vi].domain;
      auto it = std::find(dom.begin(), dom.end(), value);
      if (it == dom.end()) {
        b.error(pos, "value '" + value + "' not in domain of '" + id + "'");
        continue;
      }
      s.actual.values[vi] = static_cast<int>(it - dom.begin());
    }
    for (std::size_t i = 0; i < s.variables.size(); ++i)
      if (i < s.actual.values.size() && s.actual.values[i] == -1)
        b.error(b.actual->pos,
                "actual does not assign variable '" + s.variables[i].id + "'");
  }

  std::set<std::string> choice_ids;
  for (auto& [id, pos] : b.choices) {
    if (!var_ids.count(id)) {
      b.error(pos, "choice references unknown variable '" + id + "'");
      continue;
    }
    if (!choice_ids.insert(id).second) {
      b.error(pos, "duplicate choice '" + id + "'");
      continue;
    }
    s.choices.push_back(id);
  }

  std::set<std::string> query_names;
  for (auto& [nq, pos] : b.queries) {
    if (!query_names.insert(nq.name).second)
      b.error(pos, "duplicate query name '" + nq.name + "'");
    doc.queries.push_back(nq);
  }

  if (!b.diags.empty()) return std::nullopt;

  // Checks that need a structurally complete document.
  for (auto& [nq, pos] : b.queries) {
    for (const Proposition* p : {&nq.query.antecedent, &nq.query.consequent}) {
      try {
        validate_proposition(s, *p);
      } catch (const std::invalid_argument& e) {
        b.error(pos, "query '" + nq.name + "': " + e.what());
      }
    }
  }
  if (!b.diags.empty()) return std::nullopt;

  if (!satisfies_constraints(s, s.actual)) {
    for (const auto& [con, pos] : b.constraints) {
      Constraint only = con;
      Scenario probe = s;
      probe.constraints = {only};
      if (!satisfies_constraints(probe, probe.actual))
        b.error(b.actual ? b.actual->pos : Pos{1, 1},
                "actual world violates constraint " + render_constraint(con));
    }
    return std::nullopt;
  }

  try {
    validate_scenario(s);
  } catch (const std::invalid_argument& e) {
    b.error({1, 1}, e.what());
    return std::nullopt;
  }
  return doc;
}

}  // namespace

std::string to_string(const Diagnostic& d) {
  std::ostringstream os;
  os << d.line << ":" << d.col << ": " << d.message;
  return os.str();
}

ParseResult parse_scenario(const std::string& text) {
  ParseResult result;
  std::vector<Token> tokens = lex(text, result.diagnostics);

  DocBuilder builder;
  std::size_t i = 0;
  bool any_statement = false;
  while (i < tokens.size() && tokens[i].kind != Tok::End) {
    if (tokens[i].kind == Tok::Newline) { ++i; continue; }
    std::size_t j = i;
    while (j < tokens.size() && tokens[j].kind != Tok::Newline &&
           tokens[j].kind != Tok::End)
      ++j;
    any_statement = true;
    Cursor cur(&tokens[i], &tokens[j]);
    try {
      parse_statement(cur, builder);
    } catch (const ParseError& e) {
      builder.diags.push_back({e.pos.line, e.pos.col, e.message});
    }
    i = j;
  }

  if (!any_statement && result.diagnostics.empty()) {
    result.diagnostics.push_back({1, 1, "no scenario"});
    return result;
  }

  if (!result.diagnostics.empty()) {
    // Lexical errors already doom the parse; still report statement errors.
    for (auto& d : builder.diags) result.diagnostics.push_back(d);
    return result;
  }

  std::optional<ScenarioDocument> doc = assemble(builder);
  result.diagnostics = std::move(builder.diags);
  if (result.diagnostics.empty()) result.document = std::move(doc);
  return result;
}

QueryParseResult parse_query(const std::string& text) {
  QueryParseResult result;
  std::vector<Token> tokens = lex(text, result.diagnostics);
  if (!result.diagnostics.empty()) return result;

  // Inline queries are one expression; newlines act as spaces.
  std::vector<Token> flat;
  for (auto& t : tokens)
    if (t.kind != Tok::Newline) flat.push_back(t);

  Cursor cur(flat.data(), flat.data() + flat.size() - 1);  // stop before End
  try {
    ExprParser ep(cur);
    QueryExpression q = ep.query();
    if (!cur.at_end()) {
      const Token& t = cur.peek();
      throw ParseError{{t.line, t.col},
                       std::string("unexpected ") + tok_name(t.kind) +
                           " after query"};
    }
    result.query = std::move(q);
  } catch (const ParseError& e) {
    result.diagnostics.push_back({e.pos.line, e.pos.col, e.message});
  }
  return result;
}

std::string serialize_query(const QueryExpression& q) {
  std::ostringstream os;
  os << "(" << to_string(q.antecedent) << ") => (" << to_string(q.consequent)
     << ")";
  switch (q.evaluator) {
    case QueryExpression::Evaluator::Dstc:
      break;
    case QueryExpression::Evaluator::Clause2:
      os << " @clause2";
      break;
    case QueryExpression::Evaluator::Footnote:
      os << " @footnote";
      break;
    case QueryExpression::Evaluator::AnyFrame:
      os << " @anyframe";
      break;
    case QueryExpression::Evaluator::Frame:
      os << " @frame(" << q.frame_velocity << ")";
      break;
  }
  return os.str();
}

std::string serialize_scenario(const ScenarioDocument& doc) {
  const Scenario& s = doc.scenario;
  std::ostringstream os;
  for (const auto& np : s.points) {
    os << "point " << np.name << " " << np.location.t;
    for (const auto& x : np.location.x) os << " " << x;
    os << "\n";
  }
  for (const auto& v : s.variables) {
    os << "var " << v.id << " @" << v.point << " { ";
    for (std::size_t i = 0; i < v.domain.size(); ++i)
      os << (i ? ", " : "") << v.domain[i];
    os << " }\n";
  }
  for (const auto& con : s.constraints) {
    os << "constraint " << render_constraint(con);
    if (con.kind == Constraint::Kind::Table) {
      os << " {";
      for (const auto& tuple : con.allowed) {
        os << " (";
        for (std::size_t k = 0; k < tuple.size(); ++k)
          os << (k ? ", " : "") << tuple[k];
        os << ")";
      }
      os << " }";
    }
    os << "\n";
  }
  os << "actual";
  for (std::size_t i = 0; i < s.variables.size(); ++i)
    os << " " << s.variables[i].id << "="
       << s.variables[i].domain[s.actual.values[i]];
  os << "\n";
  for (const auto& id : s.choices) os << "choice " << id << "\n";
  for (const auto& nq : doc.queries)
    os << "query " << nq.name << ": " << serialize_query(nq.query) << "\n";
  return os.str();
}

}  // namespace stc
