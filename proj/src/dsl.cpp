#include "surfgeo/dsl.hpp"

#include <cctype>
#include <optional>

#include "surfgeo/constructors.hpp"
#include "surfgeo/errors.hpp"

namespace surfgeo::dsl {

namespace {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

enum class Tok { ident, integer, lparen, rparen, comma, hash, star, end };

struct Token {
  Tok kind;
  std::string text;
  std::size_t column;  // 1-based
};

std::string describe(const Token& t) {
  switch (t.kind) {
    case Tok::end:
      return "end of input";
    case Tok::ident:
      return "'" + t.text + "'";
    case Tok::integer:
      return "integer " + t.text;
    default:
      return "'" + t.text + "'";
  }
}

std::vector<Token> tokenize(const std::string& src) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < src.size()) {
    unsigned char c = static_cast<unsigned char>(src[i]);
    std::size_t col = i + 1;
    if (std::isspace(c)) {
      ++i;
    } else if (std::isalpha(c) || c == '_') {
      std::size_t j = i;
      while (j < src.size() && (std::isalnum(static_cast<unsigned char>(src[j])) || src[j] == '_')) ++j;
      out.push_back({Tok::ident, src.substr(i, j - i), col});
      i = j;
    } else if (std::isdigit(c)) {
      std::size_t j = i;
      while (j < src.size() && std::isdigit(static_cast<unsigned char>(src[j]))) ++j;
      out.push_back({Tok::integer, src.substr(i, j - i), col});
      i = j;
    } else {
      Tok kind;
      switch (c) {
        case '(':
          kind = Tok::lparen;
          break;
        case ')':
          kind = Tok::rparen;
          break;
        case ',':
          kind = Tok::comma;
          break;
        case '#':
          kind = Tok::hash;
          break;
        case '*':
          kind = Tok::star;
          break;
        default:
          throw ParseError(col, std::string("unexpected character '") + src[i] + "'");
      }
      out.push_back({kind, std::string(1, src[i]), col});
      ++i;
    }
  }
  out.push_back({Tok::end, "", src.size() + 1});
  return out;
}

class Parser {
 public:
  explicit Parser(std::vector<Token> tokens) : toks_(std::move(tokens)) {}

  ExprPtr parse_all() {
    ExprPtr e = expr();
    if (peek().kind != Tok::end) throw ParseError(peek().column, "unexpected " + describe(peek()));
    return e;
  }

 private:
  const Token& peek() const { return toks_[pos_]; }
  const Token& next() { return toks_[pos_++]; }

  const Token& expect(Tok kind, const std::string& what) {
    if (peek().kind != kind) throw ParseError(peek().column, "expected " + what + ", found " + describe(peek()));
    return next();
  }

  static long to_long(const Token& t) {
    if (t.text.size() > 7 || std::stol(t.text) > kMaxLiteral)
      throw ParseError(t.column, "integer " + t.text + " exceeds " + std::to_string(kMaxLiteral));
    return std::stol(t.text);
  }

  ExprPtr expr() {
    ExprPtr acc = term();
    while (peek().kind == Tok::hash) {
      next();
      acc = conn_sum(acc, term());
    }
    return acc;
  }

  ExprPtr term() {
    const Token& t = peek();
    if (t.kind == Tok::integer) {
      const Token& count = next();
      long n = to_long(count);
      expect(Tok::star, "'*' after multiplicity");
      const Token& name = expect(Tok::ident, "a standard piece after '*'");
      auto p = piece_from_name(name.text);
      if (!p) throw ParseError(name.column, "multiplicity applies to standard pieces only, not '" + name.text + "'");
      if (n < 1 || n > kMaxMultiplicity)
        throw ParseError(count.column, "multiplicity must be between 1 and " + std::to_string(kMaxMultiplicity));
      ExprPtr acc = piece(*p);
      for (long i = 1; i < n; ++i) acc = conn_sum(acc, piece(*p));
      return acc;
    }
    if (t.kind != Tok::ident) throw ParseError(t.column, "expected a construction, found " + describe(t));
    const Token& name = next();
    if (auto p = piece_from_name(name.text)) return piece(*p);
    if (name.text == "horikawa_plane10") return horikawa_plane10();
    if (name.text == "blowup") return blowup_call(name);
    if (name.text == "hypersurface") {
      auto args = int_args(name, 1, 1);
      return hypersurface(args[0]);
    }
    if (name.text == "ci") return complete_intersection(int_args(name, 1, -1));
    if (name.text == "horikawa_p1xp1") {
      auto args = int_args(name, 2, 2);
      return horikawa_p1xp1(args[0], args[1]);
    }
    if (name.text == "kodaira") {
      auto args = int_args(name, 2, 2);
      return kodaira(args[0], args[1]);
    }
    throw ParseError(name.column, "unknown construction '" + name.text + "'");
  }

  static std::string arity_text(long min, long max) {
    if (max < 0) return "at least " + std::to_string(min) + " argument" + (min == 1 ? "" : "s");
    return std::to_string(min) + " argument" + (min == 1 ? "" : "s");
  }

  // "(" int ("," int)* ")" with between min and max entries (max < 0: unbounded).
  std::vector<long> int_args(const Token& name, long min, long max) {
    expect(Tok::lparen, "'(' after " + name.text);
    std::vector<long> args;
    if (peek().kind == Tok::rparen) {
      throw ParseError(peek().column, name.text + " expects " + arity_text(min, max) + ", got 0");
    }
    while (true) {
      const Token& arg = peek();
      if (max >= 0 && static_cast<long>(args.size()) == max) {
        throw ParseError(arg.column, name.text + " expects " + arity_text(min, max) + ", got more");
      }
      args.push_back(to_long(expect(Tok::integer, "an integer argument to " + name.text)));
      if (peek().kind == Tok::comma) {
        next();
        continue;
      }
      if (peek().kind == Tok::rparen) break;
      throw ParseError(peek().column, "expected ',' or ')' in " + name.text + ", found " + describe(peek()));
    }
    if (static_cast<long>(args.size()) < min)
      throw ParseError(peek().column, name.text + " expects " + arity_text(min, max) + ", got " +
                                          std::to_string(args.size()));
    next();  // ')'
    return args;
  }

  ExprPtr blowup_call(const Token& name) {
    expect(Tok::lparen, "'(' after blowup");
    if (peek().kind == Tok::rparen)
      throw ParseError(peek().column, "blowup expects 2 arguments (expression, count), got 0");
    ExprPtr inner = expr();
    if (peek().kind == Tok::rparen)
      throw ParseError(peek().column, "blowup expects 2 arguments (expression, count), got 1");
    expect(Tok::comma, "',' after the blowup expression");
    long k = to_long(expect(Tok::integer, "blow-up count"));
    if (peek().kind == Tok::comma)
      throw ParseError(peek().column, "blowup expects 2 arguments (expression, count), got more");
    expect(Tok::rparen, "')' closing " + name.text);
    return blowup(std::move(inner), k);
  }

  std::vector<Token> toks_;
  std::size_t pos_ = 0;
};

std::string join(const std::vector<long>& v) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(v[i]);
  }
  return out;
}

}  // namespace

bool operator==(const Expr& a, const Expr& b) {
  if (a.node.index() != b.node.index()) return false;
  return std::visit(
      overloaded{
          [&](const BlowUp& x) {
            const auto& y = std::get<BlowUp>(b.node);
            return x.k == y.k && *x.inner == *y.inner;
          },
          [&](const ConnSum& x) {
            const auto& y = std::get<ConnSum>(b.node);
            return *x.left == *y.left && *x.right == *y.right;
          },
          [&](const auto& x) { return x == std::get<std::decay_t<decltype(x)>>(b.node); },
      },
      a.node);
}

ExprPtr make(Expr e) { return std::make_shared<const Expr>(std::move(e)); }
ExprPtr piece(StandardPiece p) { return make(Expr{Piece{p}}); }
ExprPtr hypersurface(long d) { return make(Expr{Hypersurface{d}}); }
ExprPtr complete_intersection(std::vector<long> degrees) { return make(Expr{CompleteIntersection{std::move(degrees)}}); }
ExprPtr horikawa_p1xp1(long a, long b) { return make(Expr{HorikawaP1xP1{a, b}}); }
ExprPtr horikawa_plane10() { return make(Expr{HorikawaPlane10{}}); }
ExprPtr kodaira(long p, long n) { return make(Expr{Kodaira{p, n}}); }
ExprPtr blowup(ExprPtr inner, long k) { return make(Expr{BlowUp{std::move(inner), k}}); }

ExprPtr conn_sum(ExprPtr left, ExprPtr right) {
  if (const auto* r = std::get_if<ConnSum>(&right->node)) return conn_sum(conn_sum(std::move(left), r->left), r->right);
  return make(Expr{ConnSum{std::move(left), std::move(right)}});
}

ExprPtr parse(const std::string& source) { return Parser(tokenize(source)).parse_all(); }

std::string print(const Expr& e) {
  return std::visit(overloaded{
                        [](const Piece& x) { return piece_name(x.piece); },
                        [](const Hypersurface& x) { return "hypersurface(" + std::to_string(x.degree) + ")"; },
                        [](const CompleteIntersection& x) { return "ci(" + join(x.degrees) + ")"; },
                        [](const HorikawaP1xP1& x) {
                          return "horikawa_p1xp1(" + std::to_string(x.a) + "," + std::to_string(x.b) + ")";
                        },
                        [](const HorikawaPlane10&) { return std::string("horikawa_plane10"); },
                        [](const Kodaira& x) {
                          return "kodaira(" + std::to_string(x.base_genus) + "," + std::to_string(x.cover_degree) +
                                 ")";
                        },
                        [](const BlowUp& x) { return "blowup(" + print(*x.inner) + "," + std::to_string(x.k) + ")"; },
                        [](const ConnSum& x) { return print(*x.left) + " # " + print(*x.right); },
                    },
                    e.node);
}

FourManifold evaluate(const Expr& e) {
  return std::visit(
      overloaded{
          [](const Piece& x) { return standard_piece(x.piece); },
          [](const Hypersurface& x) { return FourManifold::from_surface(hypersurface_p3(x.degree)); },
          [](const CompleteIntersection& x) {
            return FourManifold::from_surface(
                surfgeo::complete_intersection(x.degrees, static_cast<long>(x.degrees.size()) + 2));
          },
          [](const HorikawaP1xP1& x) { return FourManifold::from_surface(surfgeo::horikawa_p1xp1(x.a, x.b)); },
          [](const HorikawaPlane10&) { return FourManifold::from_surface(surfgeo::horikawa_plane10()); },
          [](const Kodaira& x) {
            KodairaFibration k = kodaira_fibration(KodairaData{x.base_genus, x.cover_degree});
            return FourManifold{k.top, std::nullopt, k.c1_squared};
          },
          [](const BlowUp& x) { return blow_up(evaluate(*x.inner), x.k); },
          [](const ConnSum& x) { return connected_sum(evaluate(*x.left), evaluate(*x.right)); },
      },
      e.node);
}

}  // namespace surfgeo::dsl
