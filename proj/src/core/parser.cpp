#include "core/parser.hpp"

#include <cctype>
#include <sstream>

namespace jbv {

namespace {

struct Token {
  enum class T { Ident, Int, Plus, Minus, Star, Caret, LParen, RParen, Slash, At, Comma, Eq, End };
  T t = T::End;
  std::string text;
  int line = 1, col = 1;
};

class Lexer {
public:
  Lexer(const std::string& s, int line0) : s_(s), line_(line0) { advance(); }
  const Token& peek() const { return tok_; }
  Token take() {
    Token t = tok_;
    advance();
    return t;
  }

private:
  void advance() {
    while (pos_ < s_.size() && (s_[pos_] == ' ' || s_[pos_] == '\t')) ++pos_;
    tok_ = Token{};
    tok_.line = line_;
    tok_.col = static_cast<int>(pos_) + 1;
    if (pos_ >= s_.size()) {
      tok_.t = Token::T::End;
      return;
    }
    char c = s_[pos_];
    if (std::isdigit(static_cast<unsigned char>(c))) {
      size_t start = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      tok_.t = Token::T::Int;
      tok_.text = s_.substr(start, pos_ - start);
      return;
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      size_t start = pos_;
      while (pos_ < s_.size() &&
             (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_'))
        ++pos_;
      tok_.t = Token::T::Ident;
      tok_.text = s_.substr(start, pos_ - start);
      return;
    }
    ++pos_;
    switch (c) {
      case '+': tok_.t = Token::T::Plus; return;
      case '-': tok_.t = Token::T::Minus; return;
      case '*': tok_.t = Token::T::Star; return;
      case '^': tok_.t = Token::T::Caret; return;
      case '(': tok_.t = Token::T::LParen; return;
      case ')': tok_.t = Token::T::RParen; return;
      case '/': tok_.t = Token::T::Slash; return;
      case '@': tok_.t = Token::T::At; return;
      case ',': tok_.t = Token::T::Comma; return;
      case '=': tok_.t = Token::T::Eq; return;
      default: throw ParseError(std::string("unexpected character '") + c + "'", line_, tok_.col);
    }
  }

  const std::string& s_;
  size_t pos_ = 0;
  int line_;
  Token tok_;
};

class ExprParser {
public:
  ExprParser(const std::string& text, const Chart& chart, int line)
      : lex_(text, line), chart_(chart), line_(line) {}

  Value parse() {
    Value v = sum();
    if (lex_.peek().t != Token::T::End)
      throw ParseError("trailing input", lex_.peek().line, lex_.peek().col);
    return v;
  }

private:
  [[noreturn]] void fail(const std::string& msg) {
    throw ParseError(msg, lex_.peek().line, lex_.peek().col);
  }

  static bool same_shape(const Value& a, const Value& b) {
    if (a.type != b.type) return false;
    if (a.type == Value::Type::Scalar) return true;
    return a.tensor.degree() == b.tensor.degree();
  }

  Value neg(Value v) {
    if (v.type == Value::Type::Scalar)
      v.scalar = -v.scalar;
    else
      v.tensor = -v.tensor;
    return v;
  }

  Value add(Value a, Value b, bool minus) {
    // adding zero scalars to tensors: promote the literal 0
    if (a.type == Value::Type::Scalar && b.type != Value::Type::Scalar && a.scalar.is_zero()) {
      a = Value{b.type, ExpPoly::zero(chart_), Tensor::zero(chart_, b.tensor.kind(), b.tensor.degree())};
    }
    if (b.type == Value::Type::Scalar && a.type != Value::Type::Scalar && b.scalar.is_zero()) {
      b = Value{a.type, ExpPoly::zero(chart_), Tensor::zero(chart_, a.tensor.kind(), a.tensor.degree())};
    }
    if (!same_shape(a, b)) fail("mismatched operands of + / -");
    if (minus) b = neg(b);
    if (a.type == Value::Type::Scalar)
      a.scalar = a.scalar + b.scalar;
    else
      a.tensor = a.tensor + b.tensor;
    return a;
  }

  Value sum() {
    bool lead_minus = false;
    if (lex_.peek().t == Token::T::Minus) {
      lex_.take();
      lead_minus = true;
    } else if (lex_.peek().t == Token::T::Plus) {
      lex_.take();
    }
    Value v = product();
    if (lead_minus) v = neg(v);
    while (lex_.peek().t == Token::T::Plus || lex_.peek().t == Token::T::Minus) {
      bool minus = lex_.take().t == Token::T::Minus;
      v = add(std::move(v), product(), minus);
    }
    return v;
  }

  Value product() {
    Value v = power();
    while (lex_.peek().t == Token::T::Star) {
      lex_.take();
      Value w = power();
      if (v.type == Value::Type::Scalar && w.type == Value::Type::Scalar) {
        v.scalar = v.scalar * w.scalar;
      } else if (v.type == Value::Type::Scalar) {
        w.tensor = w.tensor.scaled(v.scalar);
        v = std::move(w);
      } else if (w.type == Value::Type::Scalar) {
        v.tensor = v.tensor.scaled(w.scalar);
      } else {
        fail("cannot '*' two graded values, use '^' for the wedge");
      }
    }
    return v;
  }

  Value power() {
    Value v = atom();
    while (lex_.peek().t == Token::T::Caret) {
      Token op = lex_.take();
      if (v.type == Value::Type::Scalar) {
        if (lex_.peek().t != Token::T::Int) fail("integer exponent expected");
        int e = std::stoi(lex_.take().text);
        ExpPoly r = ExpPoly::constant(chart_, 1);
        for (int i = 0; i < e; ++i) r = r * v.scalar;
        v.scalar = std::move(r);
      } else {
        Value w = atom();
        if (w.type == Value::Type::Scalar)
          throw ParseError("wedge expects a graded value on both sides", op.line, op.col);
        if (w.tensor.kind() != v.tensor.kind())
          throw ParseError("cannot wedge a form with a multivector", op.line, op.col);
        v.tensor = wedge(v.tensor, w.tensor);
      }
    }
    return v;
  }

  Value scalar_value(ExpPoly p) {
    Value v;
    v.type = Value::Type::Scalar;
    v.scalar = std::move(p);
    return v;
  }

  Value tensor_value(Tensor t) {
    Value v;
    v.type = (t.kind() == Kind::Form) ? Value::Type::Form : Value::Type::Mv;
    v.tensor = std::move(t);
    return v;
  }

  Value atom() {
    const Token& p = lex_.peek();
    switch (p.t) {
      case Token::T::Int: {
        Token t = lex_.take();
        Integer num(t.text);
        if (lex_.peek().t == Token::T::Slash) {
          lex_.take();
          if (lex_.peek().t != Token::T::Int) fail("denominator expected");
          Integer den(lex_.take().text);
          if (den == 0) throw ParseError("zero denominator", t.line, t.col);
          return scalar_value(ExpPoly::constant(chart_, Rational(num, den)));
        }
        return scalar_value(ExpPoly::constant(chart_, Rational(num)));
      }
      case Token::T::Minus: {
        lex_.take();
        return neg(atom());
      }
      case Token::T::LParen: {
        lex_.take();
        Value v = sum();
        if (lex_.peek().t != Token::T::RParen) fail("')' expected");
        lex_.take();
        return v;
      }
      case Token::T::At: {
        Token at = lex_.take();
        if (lex_.peek().t != Token::T::Ident)
          throw ParseError("coordinate name expected after '@'", at.line, at.col);
        Token id = lex_.take();
        int i = chart_.index_of(id.text);
        if (i < 0) throw ParseError("unknown coordinate '" + id.text + "'", id.line, id.col);
        return tensor_value(Tensor::basis(chart_, Kind::Multivector, {static_cast<uint8_t>(i)}));
      }
      case Token::T::Ident: {
        Token id = lex_.take();
        if (id.text == "exp") {
          if (lex_.peek().t != Token::T::LParen) fail("'(' expected after exp");
          lex_.take();
          Value arg = sum();
          if (lex_.peek().t != Token::T::RParen) fail("')' expected");
          lex_.take();
          if (arg.type != Value::Type::Scalar)
            throw ParseError("exp expects a scalar argument", id.line, id.col);
          return scalar_value(exponential_of(arg.scalar, id));
        }
        int i = chart_.index_of(id.text);
        if (i >= 0) return scalar_value(ExpPoly::coordinate(chart_, i));
        if (id.text.size() > 1 && id.text[0] == 'd') {
          int j = chart_.index_of(id.text.substr(1));
          if (j >= 0)
            return tensor_value(Tensor::basis(chart_, Kind::Form, {static_cast<uint8_t>(j)}));
        }
        throw ParseError("unknown identifier '" + id.text + "'", id.line, id.col);
      }
      default:
        fail("value expected");
    }
  }

  ExpPoly exponential_of(const ExpPoly& arg, const Token& at) {
    // only exponentials of rational linear forms stay inside the ring
    std::vector<Rational> freqs(static_cast<size_t>(chart_.dim()), Rational(0));
    for (const auto& [key, coeff] : arg.terms()) {
      for (const auto& f : key.freqs)
        if (f != 0) throw ParseError("nested exp is outside the ring", at.line, at.col);
      int deg = 0, which = -1;
      for (size_t i = 0; i < key.exps.size(); ++i) {
        deg += static_cast<int>(key.exps[i]);
        if (key.exps[i] == 1) which = static_cast<int>(i);
      }
      if (deg != 1)
        throw ParseError("exp expects a linear form with zero constant term", at.line, at.col);
      freqs[static_cast<size_t>(which)] += coeff;
    }
    return ExpPoly::exponential(chart_, freqs);
  }

  Lexer lex_;
  const Chart& chart_;
  int line_;
};

std::vector<std::string> split_lines(const std::string& text) {
  std::vector<std::string> lines;
  std::string cur;
  for (char c : text) {
    if (c == '\n') {
      lines.push_back(cur);
      cur.clear();
    } else {
      cur.push_back(c);
    }
  }
  lines.push_back(cur);
  return lines;
}

std::string strip_comment(const std::string& line) {
  auto pos = line.find('#');
  return pos == std::string::npos ? line : line.substr(0, pos);
}

bool blank(const std::string& s) {
  for (char c : s)
    if (!std::isspace(static_cast<unsigned char>(c))) return false;
  return true;
}

} // namespace

Value parse_expression(const std::string& text, const Chart& chart) {
  return ExprParser(text, chart, 1).parse();
}

StructureBundle parse_structure(const std::string& text) {
  StructureBundle b;
  b.kind = "jacobi";
  b.name = "file";
  std::map<std::string, Value> decls;
  std::map<std::string, std::string> decl_kinds;
  std::vector<std::string> decl_order;

  auto lines = split_lines(text);
  for (size_t li = 0; li < lines.size(); ++li) {
    std::string line = strip_comment(lines[li]);
    if (blank(line)) continue;
    const int ln = static_cast<int>(li) + 1;
    std::istringstream is(line);
    std::string head;
    is >> head;

    if (head == "chart") {
      int dim = -1;
      std::vector<std::string> coords;
      std::string field;
      while (is >> field) {
        if (field.rfind("dim=", 0) == 0) {
          dim = std::stoi(field.substr(4));
        } else if (field.rfind("coords=", 0) == 0) {
          std::string list = field.substr(7);
          std::string cur;
          for (char ch : list) {
            if (ch == ',') {
              coords.push_back(cur);
              cur.clear();
            } else {
              cur.push_back(ch);
            }
          }
          coords.push_back(cur);
        } else {
          throw ParseError("unknown chart field '" + field + "'", ln, 1);
        }
      }
      if (dim < 1 || coords.empty()) throw ParseError("chart needs dim= and coords=", ln, 1);
      if (dim != static_cast<int>(coords.size()))
        throw ParseError("chart dim does not match the coordinate list", ln, 1);
      b.chart = Chart::make(coords);
      continue;
    }
    if (head == "kind") {
      std::string k;
      is >> k;
      if (k != "jacobi" && k != "omega-poisson" && k != "enriched")
        throw ParseError("unknown structure kind '" + k + "'", ln, 1);
      b.kind = k;
      continue;
    }
    if (head == "bivector" || head == "vector" || head == "2form" || head == "volume" ||
        head == "function") {
      if (!b.chart.valid()) throw ParseError("chart must be declared first", ln, 1);
      std::string name, eq;
      is >> name >> eq;
      if (eq != "=") throw ParseError("'=' expected after the name", ln, 1);
      std::string rest;
      std::getline(is, rest);
      Value v = ExprParser(rest, b.chart, ln).parse();

      auto want_tensor = [&](Kind kind, int degree, const char* what) {
        if (v.type == Value::Type::Scalar) {
          if (!v.scalar.is_zero())
            throw ParseError(std::string(what) + " '" + name + "' got a scalar", ln, 1);
          v = Value{kind == Kind::Form ? Value::Type::Form : Value::Type::Mv, ExpPoly::zero(b.chart),
                    Tensor::zero(b.chart, kind, degree)};
        }
        if (v.tensor.kind() != kind || v.tensor.degree() != degree)
          throw ParseError(std::string(what) + " '" + name + "' has the wrong kind or degree",
                           ln, 1);
      };
      if (head == "bivector") want_tensor(Kind::Multivector, 2, "bivector");
      if (head == "vector") want_tensor(Kind::Multivector, 1, "vector");
      if (head == "2form") want_tensor(Kind::Form, 2, "2form");
      if (head == "volume") want_tensor(Kind::Form, b.chart.dim(), "volume");
      if (head == "function" && v.type != Value::Type::Scalar)
        throw ParseError("function '" + name + "' must be a scalar", ln, 1);
      decls[name] = v;
      decl_kinds[name] = head;
      decl_order.push_back(name);
      continue;
    }
    throw ParseError("unknown declaration '" + head + "'", ln, 1);
  }

  if (!b.chart.valid()) throw ParseError("missing chart declaration", 1, 1);

  auto take_tensor = [&](const std::string& name, Kind kind, int degree,
                         bool required) -> std::optional<Tensor> {
    auto it = decls.find(name);
    if (it == decls.end()) {
      if (required)
        throw ParseError("structure of kind '" + b.kind + "' needs '" + name + "'", 1, 1);
      return std::nullopt;
    }
    const Value& v = it->second;
    if (v.type == Value::Type::Scalar || v.tensor.kind() != kind || v.tensor.degree() != degree)
      throw ParseError("'" + name + "' has the wrong kind or degree", 1, 1);
    return v.tensor;
  };

  if (b.kind == "jacobi") {
    Tensor lam = *take_tensor("Lambda", Kind::Multivector, 2, true);
    Tensor e = *take_tensor("E", Kind::Multivector, 1, true);
    b.jacobi = JacobiStructure(lam, e);
  } else {
    Tensor q = *take_tensor("Q", Kind::Multivector, 2, true);
    Tensor e = *take_tensor("E", Kind::Multivector, 1, true);
    std::optional<Tensor> om = take_tensor("Omega", Kind::Form, 2, b.kind == "omega-poisson");
    Tensor omega = om ? *om : Tensor::zero(b.chart, Kind::Form, 2);
    if (b.kind == "enriched" && !omega.is_zero())
      throw ParseError("an enriched structure must have Omega = 0", 1, 1);
    b.omega = OmegaPoissonStructure(q, e, omega);
  }
  if (auto phi = take_tensor("Phi", Kind::Form, b.chart.dim(), false)) b.vol = VolumeForm(*phi);

  for (const auto& name : decl_order) {
    const std::string& dk = decl_kinds[name];
    if (dk == "function") {
      b.functions.emplace(name, decls[name].scalar);
    } else if (name != "Lambda" && name != "E" && name != "Q" && name != "Omega" &&
               name != "Phi") {
      b.named.emplace(name, decls[name].tensor);
    }
  }
  return b;
}

std::string print_structure(const StructureBundle& b) {
  std::ostringstream os;
  os << "chart dim=" << b.chart.dim() << " coords=";
  for (int i = 0; i < b.chart.dim(); ++i) os << (i ? "," : "") << b.chart.name(i);
  os << "\n";
  os << "kind " << b.kind << "\n";
  if (b.jacobi) {
    os << "bivector Lambda = " << b.jacobi->Lambda().to_string() << "\n";
    os << "vector E = " << b.jacobi->E().to_string() << "\n";
  }
  if (b.omega) {
    os << "bivector Q = " << b.omega->Q().to_string() << "\n";
    os << "vector E = " << b.omega->E().to_string() << "\n";
    if (b.kind == "omega-poisson") os << "2form Omega = " << b.omega->Omega().to_string() << "\n";
  }
  if (b.vol) os << "volume Phi = " << b.vol->phi().to_string() << "\n";
  for (const auto& [name, t] : b.named) {
    const char* decl = t.kind() == Kind::Form ? (t.degree() == 2 ? "2form" : "volume") : "bivector";
    if (t.kind() == Kind::Multivector && t.degree() == 1) decl = "vector";
    os << decl << " " << name << " = " << t.to_string() << "\n";
  }
  for (const auto& [name, f] : b.functions) os << "function " << name << " = " << f.to_string() << "\n";
  return os.str();
}

} // namespace jbv
