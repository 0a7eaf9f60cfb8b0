#include "resweil/dsl.hpp"

#include <cctype>
#include <fstream>
#include <set>
#include <sstream>

#include "resweil/error.hpp"

namespace resweil {

namespace {

enum class Tok { Ident, Int, String, Punct, End };

struct Token {
  Tok kind;
  std::string text;
  std::size_t line;
  std::size_t col;
};

[[noreturn]] void fail(ErrorKind kind, const std::string& source, std::size_t line, std::size_t col,
                       const std::string& msg) {
  throw Error(kind, source + ":" + std::to_string(line) + ":" + std::to_string(col) + ": " + msg);
}

std::vector<Token> tokenize_line(const std::string& text, std::size_t line, const std::string& source) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < text.size()) {
    const char c = text[i];
    const std::size_t col = i + 1;
    if (c == '#') break;
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
      continue;
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t j = i + 1;
      while (j < text.size() && (std::isalnum(static_cast<unsigned char>(text[j])) || text[j] == '_' || text[j] == '\'')) ++j;
      out.push_back({Tok::Ident, text.substr(i, j - i), line, col});
      i = j;
    } else if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t j = i + 1;
      while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j]))) ++j;
      out.push_back({Tok::Int, text.substr(i, j - i), line, col});
      i = j;
    } else if (c == '"') {
      const std::size_t j = text.find('"', i + 1);
      if (j == std::string::npos) fail(ErrorKind::SyntaxError, source, line, col, "unterminated string");
      out.push_back({Tok::String, text.substr(i + 1, j - i - 1), line, col});
      i = j + 1;
    } else if (std::string(",;:=()+-*^").find(c) != std::string::npos) {
      out.push_back({Tok::Punct, std::string(1, c), line, col});
      ++i;
    } else {
      fail(ErrorKind::SyntaxError, source, line, col, std::string("unexpected character '") + c + "'");
    }
  }
  out.push_back({Tok::End, "", line, text.size() + 1});
  return out;
}

std::uint64_t parse_uint(const Token& t, const std::string& source) {
  if (t.text.size() > 18) fail(ErrorKind::SyntaxError, source, t.line, t.col, "integer literal too large");
  return std::stoull(t.text);
}

/// Cursor over one line's tokens.
class Cursor {
 public:
  Cursor(std::vector<Token> toks, std::string source) : toks_(std::move(toks)), source_(std::move(source)) {}

  const Token& peek() const { return toks_[pos_]; }
  const Token& next() { return toks_[pos_ == toks_.size() - 1 ? pos_ : pos_++]; }
  bool at_end() const { return peek().kind == Tok::End; }
  bool is_punct(char c) const { return peek().kind == Tok::Punct && peek().text[0] == c; }
  bool is_ident(const std::string& s) const { return peek().kind == Tok::Ident && peek().text == s; }
  bool accept(char c) {
    if (!is_punct(c)) return false;
    next();
    return true;
  }
  void expect(char c) {
    if (!accept(c)) error(std::string("expected '") + c + "'");
  }
  void expect_keyword(const std::string& kw) {
    if (!is_ident(kw)) error("expected '" + kw + "'");
    next();
  }
  std::string ident() {
    if (peek().kind != Tok::Ident) error("expected identifier");
    return next().text;
  }
  std::uint64_t integer() {
    if (peek().kind != Tok::Int) error("expected integer");
    return parse_uint(next(), source_);
  }
  void expect_end() {
    if (!at_end()) error("unexpected '" + peek().text + "'");
  }
  [[noreturn]] void error(const std::string& msg) const { fail(ErrorKind::SyntaxError, source_, peek().line, peek().col, msg); }
  const std::string& source() const { return source_; }

 private:
  std::vector<Token> toks_;
  std::string source_;
  std::size_t pos_ = 0;
};

class PolyParser {
 public:
  PolyParser(Cursor& cur, RingPtr ring) : cur_(cur), ring_(std::move(ring)) {}

  MPoly expr() {
    MPoly acc(ring_);
    bool negate = false;
    if (cur_.accept('-')) {
      negate = true;
    } else {
      cur_.accept('+');
    }
    MPoly t = term();
    acc = negate ? acc - t : t;
    for (;;) {
      if (cur_.accept('+')) {
        acc = acc + term();
      } else if (cur_.accept('-')) {
        acc = acc - term();
      } else {
        return acc;
      }
    }
  }

 private:
  bool starts_factor() const {
    const Token& t = cur_.peek();
    return t.kind == Tok::Ident || t.kind == Tok::Int || (t.kind == Tok::Punct && t.text == "(");
  }

  MPoly term() {
    MPoly acc = factor();
    for (;;) {
      if (cur_.accept('*')) {
        acc = acc * factor();
      } else if (starts_factor()) {
        acc = acc * factor();
      } else {
        return acc;
      }
    }
  }

  MPoly factor() {
    MPoly base = primary();
    if (cur_.accept('^')) {
      if (cur_.peek().kind != Tok::Int) cur_.error("exponent must be a nonnegative integer");
      const Token& t = cur_.peek();
      const std::uint64_t e = cur_.integer();
      if (e > 10000) fail(ErrorKind::SyntaxError, cur_.source(), t.line, t.col, "exponent too large");
      base = base.pow(static_cast<unsigned>(e));
    }
    return base;
  }

  MPoly primary() {
    const Token& t = cur_.peek();
    if (t.kind == Tok::Int) {
      const Field& f = ring_->field();
      const std::uint64_t v = cur_.integer();
      return MPoly::constant(ring_, f.from_int(static_cast<std::int64_t>(v % f.characteristic())));
    }
    if (t.kind == Tok::Ident) {
      auto idx = ring_->index_of(t.text);
      if (!idx) fail(ErrorKind::UndeclaredVariable, cur_.source(), t.line, t.col, "undeclared variable '" + t.text + "'");
      cur_.next();
      return MPoly::variable(ring_, *idx);
    }
    if (cur_.accept('(')) {
      MPoly inner = expr();
      cur_.expect(')');
      return inner;
    }
    cur_.error(t.kind == Tok::End ? "unexpected end of line" : "unexpected '" + t.text + "'");
  }

  Cursor& cur_;
  RingPtr ring_;
};

std::vector<std::string> ident_list(Cursor& cur, char stop) {
  std::vector<std::string> out;
  if (cur.at_end() || cur.is_punct(stop)) return out;
  out.push_back(cur.ident());
  while (cur.accept(',')) out.push_back(cur.ident());
  return out;
}

std::vector<MPoly> poly_list(Cursor& cur, const RingPtr& ring) {
  std::vector<MPoly> out;
  if (cur.at_end()) return out;
  PolyParser pp(cur, ring);
  out.push_back(pp.expr());
  while (cur.accept(',')) out.push_back(pp.expr());
  return out;
}

std::vector<std::uint64_t> uint_list(Cursor& cur) {
  std::vector<std::uint64_t> out{cur.integer()};
  while (cur.accept(',')) out.push_back(cur.integer());
  return out;
}

void check_distinct(const Cursor& cur, const std::vector<std::string>& vars, std::set<std::string> taken) {
  for (const auto& v : vars) {
    if (!taken.insert(v).second) cur.error("variable '" + v + "' declared twice");
  }
}

std::string join(const std::vector<std::string>& xs, const std::string& sep) {
  std::string out;
  for (std::size_t i = 0; i < xs.size(); ++i) out += (i ? sep : "") + xs[i];
  return out;
}

}  // namespace

MPoly parse_poly(const std::string& text, const RingPtr& ring) {
  Cursor cur(tokenize_line(text, 1, "<poly>"), "<poly>");
  PolyParser pp(cur, ring);
  MPoly f = pp.expr();
  cur.expect_end();
  return f;
}

AlgebraPresentation Case::algebra(const std::string& name) const {
  for (const auto& d : algebras) {
    if (d.name != name) continue;
    if (d.product_of) {
      return product_algebra(algebra(d.product_of->first), algebra(d.product_of->second), d.idempotent_var).algebra;
    }
    return AlgebraPresentation(make_ring(field(), d.vars), d.relations);
  }
  throw Error(ErrorKind::UndeclaredVariable, "no algebra named " + name);
}

SchemePresentation Case::scheme() const {
  return SchemePresentation::from_named(base(), scheme_vars, scheme_relations);
}

Case parse_case(const std::string& text, const std::string& source) {
  Case c;
  bool have_case = false, have_scheme = false;
  std::set<std::string> keys_seen;
  std::istringstream in(text);
  std::string line_text;
  std::size_t line = 0;
  RingPtr scheme_ring;

  while (std::getline(in, line_text)) {
    ++line;
    Cursor cur(tokenize_line(line_text, line, source), source);
    if (cur.at_end()) continue;
    const Token head = cur.peek();
    const std::string kw = cur.ident();

    if (kw == "case") {
      if (have_case) fail(ErrorKind::SyntaxError, source, head.line, head.col, "duplicate case statement");
      if (cur.peek().kind != Tok::String) cur.error("expected quoted case name");
      c.name = cur.next().text;
      have_case = true;
    } else if (kw == "field") {
      if (c.p != 0) fail(ErrorKind::SyntaxError, source, head.line, head.col, "duplicate field statement");
      cur.expect_keyword("p");
      cur.expect('=');
      const Token num = cur.peek();
      const std::uint64_t p = cur.integer();
      if (!is_prime(p) || p == 2 || p >= kMaxCharacteristic) {
        fail(ErrorKind::NonPrime, source, num.line, num.col,
             std::to_string(p) + " is not an odd prime below 2^31");
      }
      c.p = p;
    } else if (kw == "algebra") {
      if (c.p == 0) fail(ErrorKind::SyntaxError, source, head.line, head.col, "field must be declared before algebras");
      if (have_scheme) fail(ErrorKind::SyntaxError, source, head.line, head.col, "algebra declared after the scheme");
      AlgebraDecl d;
      d.name = cur.ident();
      for (const auto& other : c.algebras) {
        if (other.name == d.name) fail(ErrorKind::SyntaxError, source, head.line, head.col, "algebra " + d.name + " declared twice");
      }
      if (cur.accept('=')) {
        auto find = [&](const std::string& n) {
          for (const auto& a : c.algebras)
            if (a.name == n) return;
          cur.error("unknown algebra '" + n + "'");
        };
        std::string a1 = cur.ident();
        find(a1);
        cur.expect('*');
        std::string a2 = cur.ident();
        find(a2);
        d.idempotent_var = "e";
        if (cur.is_ident("idem")) {
          cur.next();
          d.idempotent_var = cur.ident();
        }
        cur.expect_end();
        d.product_of = std::make_pair(a1, a2);
        c.algebras.push_back(d);
        c.algebras.back().vars = c.algebra(d.name).ring()->variables();
        continue;
      }
      cur.expect(':');
      cur.expect_keyword("vars");
      d.vars = ident_list(cur, ';');
      check_distinct(cur, d.vars, {});
      cur.expect(';');
      cur.expect_keyword("rels");
      d.relations = poly_list(cur, make_ring(c.field(), d.vars));
      c.algebras.push_back(std::move(d));
    } else if (kw == "scheme") {
      if (c.algebras.empty()) fail(ErrorKind::SyntaxError, source, head.line, head.col, "scheme needs a base algebra");
      if (have_scheme) fail(ErrorKind::SyntaxError, source, head.line, head.col, "duplicate scheme statement");
      c.scheme_name = cur.ident();
      cur.expect(':');
      cur.expect_keyword("vars");
      c.scheme_vars = ident_list(cur, ';');
      const auto& bv = c.algebras.back().vars;
      check_distinct(cur, c.scheme_vars, std::set<std::string>(bv.begin(), bv.end()));
      cur.expect(';');
      cur.expect_keyword("rels");
      std::vector<std::string> all = bv;
      all.insert(all.end(), c.scheme_vars.begin(), c.scheme_vars.end());
      scheme_ring = make_ring(c.field(), all);
      c.scheme_relations = poly_list(cur, scheme_ring);
      have_scheme = true;
    } else if (kw == "expect") {
      const Token kt = cur.peek();
      const std::string key = cur.ident();
      if (!keys_seen.insert(key).second) fail(ErrorKind::SyntaxError, source, kt.line, kt.col, "duplicate expectation " + key);
      cur.expect('=');
      if (key == "S") {
        c.expect.s = cur.integer();
      } else if (key == "pi0_res") {
        c.expect.pi0_res = cur.integer();
      } else if (key == "dim_A") {
        c.expect.dim_a = cur.integer();
      } else if (key == "smooth") {
        const std::string v = cur.ident();
        if (v != "true" && v != "false") cur.error("expected true or false");
        c.expect.smooth = v == "true";
      } else if (key == "fibers") {
        c.expect.fibers = uint_list(cur);
      } else if (key == "cycle_type") {
        auto ct = uint_list(cur);
        std::sort(ct.begin(), ct.end());
        c.expect.cycle_type = ct;
      } else {
        fail(ErrorKind::SyntaxError, source, kt.line, kt.col, "unknown expectation '" + key + "'");
      }
    } else if (kw == "checks") {
      do {
        const Token it = cur.peek();
        const std::string item = cur.ident();
        if (item == "theorem") {
          c.checks.theorem = true;
        } else if (item == "product") {
          c.checks.product = true;
        } else if (item == "lemma") {
          cur.expect('-');
          cur.expect_keyword("local");
          c.checks.lemma_local = true;
        } else if (item == "adjunction") {
          cur.expect('(');
          for (auto m : uint_list(cur)) {
            if (m == 0 || m > kMaxExtensionDegree) cur.error("adjunction degree out of range");
            c.checks.adjunction.push_back(static_cast<unsigned>(m));
          }
          cur.expect(')');
        } else if (item == "cover") {
          if (!have_scheme) fail(ErrorKind::SyntaxError, source, it.line, it.col, "cover needs the scheme declared first");
          cur.expect('(');
          auto hs = poly_list(cur, scheme_ring);
          c.checks.cover.insert(c.checks.cover.end(), hs.begin(), hs.end());
          cur.expect(')');
        } else {
          fail(ErrorKind::SyntaxError, source, it.line, it.col, "unknown check '" + item + "'");
        }
      } while (cur.accept(','));
    } else {
      fail(ErrorKind::SyntaxError, source, head.line, head.col, "unknown statement '" + kw + "'");
    }
    cur.expect_end();
  }
  if (!have_case) fail(ErrorKind::SyntaxError, source, line + 1, 1, "missing case statement");
  if (c.p == 0) fail(ErrorKind::SyntaxError, source, line + 1, 1, "missing field statement");
  if (!have_scheme) fail(ErrorKind::SyntaxError, source, line + 1, 1, "missing scheme statement");
  return c;
}

Case parse_case_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::Io, "cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_case(ss.str(), path);
}

namespace {

std::string poly_join(const std::vector<MPoly>& ps) {
  std::vector<std::string> s;
  for (const auto& p : ps) s.push_back(p.to_string());
  return join(s, ", ");
}

std::string uint_join(const std::vector<std::uint64_t>& xs) {
  std::vector<std::string> s;
  for (auto x : xs) s.push_back(std::to_string(x));
  return join(s, ", ");
}

}  // namespace

std::string render(const Case& c) {
  std::ostringstream os;
  os << "case \"" << c.name << "\"\n";
  os << "field p = " << c.p << "\n";
  for (const auto& d : c.algebras) {
    if (d.product_of) {
      os << "algebra " << d.name << " = " << d.product_of->first << " * " << d.product_of->second << " idem "
         << d.idempotent_var << "\n";
    } else {
      os << "algebra " << d.name << " : vars " << join(d.vars, ", ") << " ; rels " << poly_join(d.relations) << "\n";
    }
  }
  os << "scheme " << c.scheme_name << " : vars " << join(c.scheme_vars, ", ") << " ; rels "
     << poly_join(c.scheme_relations) << "\n";
  const auto& e = c.expect;
  if (e.s) os << "expect S = " << *e.s << "\n";
  if (e.pi0_res) os << "expect pi0_res = " << *e.pi0_res << "\n";
  if (e.dim_a) os << "expect dim_A = " << *e.dim_a << "\n";
  if (e.smooth) os << "expect smooth = " << (*e.smooth ? "true" : "false") << "\n";
  if (e.fibers) os << "expect fibers = " << uint_join(*e.fibers) << "\n";
  if (e.cycle_type) os << "expect cycle_type = " << uint_join(*e.cycle_type) << "\n";
  std::vector<std::string> items;
  if (c.checks.theorem) items.push_back("theorem");
  if (c.checks.lemma_local) items.push_back("lemma-local");
  if (!c.checks.adjunction.empty()) {
    std::vector<std::uint64_t> ms(c.checks.adjunction.begin(), c.checks.adjunction.end());
    items.push_back("adjunction(" + uint_join(ms) + ")");
  }
  if (!c.checks.cover.empty()) items.push_back("cover(" + poly_join(c.checks.cover) + ")");
  if (c.checks.product) items.push_back("product");
  if (!items.empty()) os << "checks " << join(items, ", ") << "\n";
  return os.str();
}

}  // namespace resweil
