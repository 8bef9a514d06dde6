#include <cctype>

#include "hv/errors.hpp"
#include "hv/expr.hpp"

namespace hv {

namespace {

struct Lexer {
  std::string_view text;
  size_t pos = 0;

  void skip_space() {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  }
  bool done() {
    skip_space();
    return pos >= text.size();
  }
  char peek() {
    skip_space();
    return pos < text.size() ? text[pos] : '\0';
  }
  bool eat(char c) {
    if (peek() == c) {
      ++pos;
      return true;
    }
    return false;
  }
  bool eat_arrow() {
    skip_space();
    if (pos + 1 < text.size() && text[pos] == '-' && text[pos + 1] == '>') {
      pos += 2;
      return true;
    }
    return false;
  }
  std::string number() {
    skip_space();
    size_t start = pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
    if (pos == start) throw input_error("expected a number in expression: " + std::string(text));
    return std::string(text.substr(start, pos - start));
  }
  std::string ident() {
    skip_space();
    size_t start = pos;
    while (pos < text.size() &&
           (std::isalnum(static_cast<unsigned char>(text[pos])) || text[pos] == '_'))
      ++pos;
    if (pos == start) throw input_error("expected a variable name in expression: " + std::string(text));
    return std::string(text.substr(start, pos - start));
  }
};

int var_index(const std::string& name, const std::vector<std::string>& vars) {
  for (size_t i = 0; i < vars.size(); ++i)
    if (vars[i] == name) return static_cast<int>(i);
  throw input_error("unknown variable '" + name + "' in expression");
}

Rational parse_coeff(Lexer& lx) {
  std::string num = lx.number();
  std::string text = num;
  if (lx.peek() == '/') {
    lx.eat('/');
    text += "/" + lx.number();
  }
  return parse_rational(text);
}

// expr := ['+'|'-'] term (('+'|'-') term)*
// term := coeff ['*' ident] | ident
Poly<Rational> parse_expr(Lexer& lx, const std::vector<std::string>& vars,
                          bool stop_at_comma) {
  const int nv = static_cast<int>(vars.size());
  Poly<Rational> out(nv);
  bool first = true;
  while (true) {
    if (lx.done()) break;
    char c = lx.peek();
    if (stop_at_comma && c == ',') break;

    Rational sign = 1;
    if (c == '+' || c == '-') {
      // "->" must not be consumed as a minus sign.
      if (c == '-' && lx.pos + 1 < lx.text.size() && lx.text[lx.pos + 1] == '>') break;
      lx.eat(c);
      if (c == '-') sign = -1;
    } else if (!first) {
      throw input_error("expected '+' or '-' in expression: " + std::string(lx.text));
    }
    first = false;

    char h = lx.peek();
    if (std::isdigit(static_cast<unsigned char>(h))) {
      Rational coeff = sign * parse_coeff(lx);
      if (lx.eat('*')) {
        int v = var_index(lx.ident(), vars);
        out = out + poly_term(nv, mono_var(v, nv), coeff);
      } else {
        out = out + poly_const(nv, coeff);
      }
    } else if (std::isalpha(static_cast<unsigned char>(h)) || h == '_') {
      int v = var_index(lx.ident(), vars);
      out = out + poly_term(nv, mono_var(v, nv), sign);
    } else {
      throw input_error("unexpected character in expression: " + std::string(lx.text));
    }
  }
  return out;
}

}  // namespace

Poly<Rational> parse_linear_expression(const std::string& text,
                                       const std::vector<std::string>& vars) {
  Lexer lx{text};
  Poly<Rational> p = parse_expr(lx, vars, false);
  if (!lx.done()) throw input_error("trailing input in expression: " + text);
  if (p.degree() > 1) throw internal_error("linear expression parser produced degree > 1");
  return p;
}

std::vector<Poly<Rational>> parse_variable_map(const std::string& text,
                                               const std::vector<std::string>& from_vars,
                                               const std::vector<std::string>& to_vars) {
  const int nt = static_cast<int>(to_vars.size());
  std::vector<Poly<Rational>> images(from_vars.size(), Poly<Rational>(nt));
  std::vector<bool> seen(from_vars.size(), false);

  Lexer lx{text};
  while (!lx.done()) {
    int v = var_index(lx.ident(), from_vars);
    if (seen[v]) throw input_error("variable '" + from_vars[v] + "' mapped twice");
    if (!lx.eat_arrow()) throw input_error("expected '->' in variable map: " + text);
    images[v] = parse_expr(lx, to_vars, /*stop_at_comma=*/true);
    seen[v] = true;
    if (!lx.eat(',')) break;
  }
  if (!lx.done()) throw input_error("trailing input in variable map: " + text);

  for (size_t v = 0; v < from_vars.size(); ++v) {
    if (seen[v]) continue;
    // Default: same-named variable on the target side.
    bool found = false;
    for (int w = 0; w < nt; ++w)
      if (to_vars[w] == from_vars[v]) {
        images[v] = poly_var<Rational>(w, nt);
        found = true;
        break;
      }
    if (!found)
      throw input_error("variable '" + from_vars[v] +
                        "' is not mapped and has no namesake in the target ring");
  }
  return images;
}

}  // namespace hv
