#include "segre/parser.hpp"

#include <algorithm>
#include <cctype>
#include <set>
#include <sstream>

namespace segre {

namespace {

enum class Tok { Ident, Number, Plus, Minus, Star, Caret, Comma, Equals, LParen, RParen, End };

struct Token {
  Tok kind;
  std::string text;
  int line;
  int column;
};

bool is_keyword(const Token& t) {
  return t.kind == Tok::Ident && (t.text == "field" || t.text == "ring" || t.text == "ideal");
}

std::vector<Token> tokenize(const std::string& text) {
  std::vector<Token> out;
  int line = 1, col = 1;
  std::size_t i = 0;
  auto advance = [&](std::size_t k) {
    for (std::size_t j = 0; j < k; ++j, ++i) {
      if (text[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
  };
  while (i < text.size()) {
    const char c = text[i];
    if (c == '#') {
      while (i < text.size() && text[i] != '\n') advance(1);
      continue;
    }
    if (std::isspace(static_cast<unsigned char>(c))) {
      advance(1);
      continue;
    }
    const int l = line, cl = col;
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t j = i;
      while (j < text.size() && (std::isalnum(static_cast<unsigned char>(text[j])) || text[j] == '_')) ++j;
      out.push_back({Tok::Ident, text.substr(i, j - i), l, cl});
      advance(j - i);
      continue;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t j = i;
      while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j]))) ++j;
      out.push_back({Tok::Number, text.substr(i, j - i), l, cl});
      advance(j - i);
      continue;
    }
    Tok k;
    switch (c) {
      case '+': k = Tok::Plus; break;
      case '-': k = Tok::Minus; break;
      case '*': k = Tok::Star; break;
      case '^': k = Tok::Caret; break;
      case ',': k = Tok::Comma; break;
      case '=': k = Tok::Equals; break;
      case '(': k = Tok::LParen; break;
      case ')': k = Tok::RParen; break;
      default: throw ParseError(std::string("unexpected character '") + c + "'", l, cl);
    }
    out.push_back({k, std::string(1, c), l, cl});
    advance(1);
  }
  out.push_back({Tok::End, "", line, col});
  return out;
}

IntPolynomial add(const IntPolynomial& a, const IntPolynomial& b, bool subtract) {
  IntPolynomial r = a;
  for (const auto& [e, c] : b.terms) {
    Integer& slot = r.terms[e];
    slot += subtract ? Integer(-c) : c;
    if (slot == 0) r.terms.erase(e);
  }
  return r;
}

IntPolynomial mul(const IntPolynomial& a, const IntPolynomial& b) {
  IntPolynomial r;
  for (const auto& [ea, ca] : a.terms) {
    for (const auto& [eb, cb] : b.terms) {
      std::vector<int> e(ea.size());
      for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
      Integer& slot = r.terms[e];
      slot += ca * cb;
      if (slot == 0) r.terms.erase(e);
    }
  }
  return r;
}

IntPolynomial constant(std::size_t nvars, const Integer& c) {
  IntPolynomial r;
  if (c != 0) r.terms[std::vector<int>(nvars, 0)] = c;
  return r;
}

class Parser {
 public:
  Parser(std::vector<Token> toks, std::vector<std::string> vars) : toks_(std::move(toks)), vars_(std::move(vars)) {}

  const Token& peek() const { return toks_[pos_]; }
  const Token& take() { return toks_[pos_++]; }
  bool at(Tok k) const { return peek().kind == k; }

  [[noreturn]] void fail(const std::string& msg, const Token& t) const { throw ParseError(msg, t.line, t.column); }

  const Token& expect(Tok k, const std::string& what) {
    if (!at(k)) fail("expected " + what + (peek().kind == Tok::End ? " before end of input" : ", found '" + peek().text + "'"), peek());
    return take();
  }

  void set_vars(std::vector<std::string> v) { vars_ = std::move(v); }

  IntPolynomial expr() {
    IntPolynomial acc;
    bool first = true;
    while (true) {
      bool negate = false;
      if (at(Tok::Plus) || at(Tok::Minus)) {
        negate = take().kind == Tok::Minus;
      } else if (!first) {
        break;
      }
      IntPolynomial t = term();
      acc = add(acc, t, negate);
      first = false;
      if (!at(Tok::Plus) && !at(Tok::Minus)) break;
    }
    return acc;
  }

  std::size_t pos() const { return pos_; }

 private:
  IntPolynomial term() {
    IntPolynomial acc = factor();
    while (at(Tok::Star)) {
      take();
      acc = mul(acc, factor());
    }
    return acc;
  }

  IntPolynomial factor() {
    IntPolynomial base = primary();
    if (at(Tok::Caret)) {
      take();
      const Token& e = expect(Tok::Number, "an exponent");
      if (e.text.size() > 5 || std::stoi(e.text) > 1000) fail("exponent too large", e);
      const int k = std::stoi(e.text);
      IntPolynomial r = constant(vars_.size(), 1);
      for (int i = 0; i < k; ++i) r = mul(r, base);
      return r;
    }
    return base;
  }

  IntPolynomial primary() {
    const Token& t = peek();
    switch (t.kind) {
      case Tok::Number:
        take();
        return constant(vars_.size(), Integer(t.text));
      case Tok::Ident: {
        if (is_keyword(t)) fail("expected a polynomial, found keyword '" + t.text + "'", t);
        auto it = std::find(vars_.begin(), vars_.end(), t.text);
        if (it == vars_.end()) fail("unknown variable '" + t.text + "'", t);
        take();
        IntPolynomial r;
        std::vector<int> e(vars_.size(), 0);
        e[static_cast<std::size_t>(it - vars_.begin())] = 1;
        r.terms[e] = 1;
        return r;
      }
      case Tok::LParen: {
        take();
        IntPolynomial r = expr();
        expect(Tok::RParen, "')'");
        return r;
      }
      case Tok::Minus: {
        take();
        return add(IntPolynomial{}, primary(), true);
      }
      default:
        fail(t.kind == Tok::End ? "expected a polynomial before end of input" : "expected a polynomial, found '" + t.text + "'", t);
    }
  }

  std::vector<Token> toks_;
  std::size_t pos_ = 0;
  std::vector<std::string> vars_;
};

/// Parses a homogeneous polynomial, reporting errors at its first token.
IntPolynomial homogeneous_expr(Parser& p) {
  const Token start = p.peek();
  IntPolynomial f = p.expr();
  if (f.homogeneous_degree() == -2) throw ParseError("polynomial is not homogeneous", start.line, start.column);
  return f;
}

}  // namespace

int IntPolynomial::homogeneous_degree() const {
  int deg = -1;
  for (const auto& [e, c] : terms) {
    int d = 0;
    for (int v : e) d += v;
    if (deg == -1) deg = d;
    else if (deg != d) return -2;
  }
  return deg;
}

Polynomial IntPolynomial::reduce(const RingPtr& ring) const {
  const PrimeField& f = ring->field;
  const Integer p = f.modulus();
  std::vector<Term> out;
  for (const auto& [e, c] : terms) {
    if (static_cast<int>(e.size()) != ring->nvars) throw RingMismatch();
    Integer r = c % p;
    if (r < 0) r += p;
    out.push_back({Monomial::from_exponents(e), Fp{static_cast<std::uint32_t>(r)}});
  }
  return Polynomial::from_terms(ring, std::move(out));
}

std::string IntPolynomial::to_string(const std::vector<std::string>& names) const {
  if (terms.empty()) return "0";
  // highest degree first, lexicographically larger exponents first within a degree
  std::vector<std::pair<std::vector<int>, Integer>> sorted(terms.begin(), terms.end());
  auto deg = [](const std::vector<int>& e) {
    int d = 0;
    for (int v : e) d += v;
    return d;
  };
  std::stable_sort(sorted.begin(), sorted.end(), [&](const auto& a, const auto& b) {
    if (deg(a.first) != deg(b.first)) return deg(a.first) > deg(b.first);
    return a.first > b.first;
  });
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : sorted) {
    const bool neg = c < 0;
    const Integer mag = neg ? Integer(-c) : c;
    if (first) {
      if (neg) os << "-";
    } else {
      os << (neg ? " - " : " + ");
    }
    first = false;
    std::vector<std::string> factors;
    if (mag != 1 || deg(e) == 0) factors.push_back(mag.str());
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      factors.push_back(e[i] == 1 ? names[i] : names[i] + "^" + std::to_string(e[i]));
    }
    for (std::size_t i = 0; i < factors.size(); ++i) os << (i ? "*" : "") << factors[i];
  }
  return os.str();
}

const NamedIdeal* InputDocument::find(const std::string& name) const {
  for (const NamedIdeal& i : ideals) {
    if (i.name == name) return &i;
  }
  return nullptr;
}

RingPtr InputDocument::ring(const PrimeField& field) const {
  return make_ring(static_cast<int>(variables.size()), field, MonomialOrder::degrevlex(), variables);
}

ProjectiveScheme InputDocument::scheme(const std::string& name, const RingPtr& ring) const {
  const NamedIdeal* ideal = find(name);
  if (ideal == nullptr) throw std::invalid_argument("no ideal named '" + name + "'");
  std::vector<Polynomial> gens;
  for (const IntPolynomial& g : ideal->gens) gens.push_back(g.reduce(ring));
  return ProjectiveScheme(ring, std::move(gens));
}

std::string InputDocument::to_string() const {
  std::ostringstream os;
  if (prime) os << "field " << *prime << "\n";
  os << "ring ";
  for (std::size_t i = 0; i < variables.size(); ++i) os << (i ? ", " : "") << variables[i];
  os << "\n";
  for (const NamedIdeal& ideal : ideals) {
    os << "ideal " << ideal.name << " = ";
    for (std::size_t i = 0; i < ideal.gens.size(); ++i) os << (i ? ", " : "") << ideal.gens[i].to_string(variables);
    os << "\n";
  }
  return os.str();
}

InputDocument parse_input(const std::string& text) {
  InputDocument doc;
  Parser p(tokenize(text), {});
  bool have_ring = false;
  std::set<std::string> ideal_names;
  while (!p.at(Tok::End)) {
    const Token kw = p.take();
    if (!is_keyword(kw)) p.fail("expected 'field', 'ring' or 'ideal', found '" + kw.text + "'", kw);
    if (kw.text == "field") {
      if (doc.prime) p.fail("field declared twice", kw);
      const Token& num = p.expect(Tok::Number, "a prime");
      const Integer v(num.text);
      if (v >= (Integer(1) << 32) || !is_prime(static_cast<std::uint64_t>(v)) || v <= (Integer(1) << 20)) {
        p.fail("field characteristic must be a prime between 2^20 and 2^32", num);
      }
      doc.prime = static_cast<std::uint64_t>(v);
    } else if (kw.text == "ring") {
      if (have_ring) p.fail("ring declared twice", kw);
      have_ring = true;
      while (true) {
        const Token& v = p.expect(Tok::Ident, "a variable name");
        if (is_keyword(v)) p.fail("keyword '" + v.text + "' cannot be a variable", v);
        if (std::find(doc.variables.begin(), doc.variables.end(), v.text) != doc.variables.end()) {
          p.fail("duplicate variable '" + v.text + "'", v);
        }
        doc.variables.push_back(v.text);
        if (!p.at(Tok::Comma)) break;
        p.take();
      }
      if (doc.variables.size() > static_cast<std::size_t>(kMaxVars)) {
        p.fail("at most " + std::to_string(kMaxVars) + " variables are supported", kw);
      }
      p.set_vars(doc.variables);
    } else {
      if (!have_ring) p.fail("ideal declared before the ring", kw);
      const Token& name = p.expect(Tok::Ident, "an ideal name");
      if (is_keyword(name)) p.fail("keyword '" + name.text + "' cannot name an ideal", name);
      if (!ideal_names.insert(name.text).second) p.fail("duplicate ideal '" + name.text + "'", name);
      p.expect(Tok::Equals, "'='");
      NamedIdeal ideal{name.text, {}};
      ideal.gens.push_back(homogeneous_expr(p));
      while (p.at(Tok::Comma)) {
        p.take();
        ideal.gens.push_back(homogeneous_expr(p));
      }
      doc.ideals.push_back(std::move(ideal));
    }
    if (!p.at(Tok::End) && !is_keyword(p.peek())) p.fail("unexpected '" + p.peek().text + "'", p.peek());
  }
  if (!have_ring) throw ParseError("missing ring declaration", 1, 1);
  return doc;
}

Polynomial parse_polynomial(const RingPtr& ring, const std::string& text) {
  std::vector<std::string> names;
  for (int i = 0; i < ring->nvars; ++i) names.push_back(ring->var_name(i));
  Parser p(tokenize(text), names);
  IntPolynomial f = p.expr();
  if (!p.at(Tok::End)) p.fail("unexpected '" + p.peek().text + "'", p.peek());
  return f.reduce(ring);
}

ProjectiveScheme parse_scheme(const RingPtr& ring, const std::string& text) {
  std::vector<std::string> names;
  for (int i = 0; i < ring->nvars; ++i) names.push_back(ring->var_name(i));
  Parser p(tokenize(text), names);
  std::vector<Polynomial> gens{homogeneous_expr(p).reduce(ring)};
  while (p.at(Tok::Comma)) {
    p.take();
    gens.push_back(homogeneous_expr(p).reduce(ring));
  }
  if (!p.at(Tok::End)) p.fail("unexpected '" + p.peek().text + "'", p.peek());
  return ProjectiveScheme(ring, std::move(gens));
}

}  // namespace segre
