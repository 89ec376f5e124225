#include "netideal/polytext.hpp"

#include <algorithm>
#include <cctype>
#include <set>
#include <sstream>
#include <stdexcept>

namespace netideal {

namespace {

bool ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool ident_cont(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '.';
}

struct Lexer {
  const std::string& s;
  std::size_t i = 0;

  void skip_ws() {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
  }
  bool eof() {
    skip_ws();
    return i >= s.size();
  }
  char peek() {
    skip_ws();
    return i < s.size() ? s[i] : '\0';
  }
  bool accept(char c) {
    if (peek() == c) {
      ++i;
      return true;
    }
    return false;
  }
  std::string ident() {
    skip_ws();
    std::size_t b = i;
    if (i >= s.size() || !ident_start(s[i]))
      throw std::invalid_argument("polynomial parse: expected identifier at offset " +
                                  std::to_string(i) + " in '" + s + "'");
    ++i;
    while (i < s.size() && ident_cont(s[i])) ++i;
    while (i < s.size() && s[i] == '\'') ++i;  // trailing primes belong to the name
    return s.substr(b, i - b);
  }
  std::string number() {
    skip_ws();
    std::size_t b = i;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
    if (i < s.size() && s[i] == '/') {
      ++i;
      while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
    }
    if (b == i) throw std::invalid_argument("polynomial parse: expected number in '" + s + "'");
    return s.substr(b, i - b);
  }
};

}  // namespace

PolyQ parse_poly(const RingPtr& ring, const std::string& text) {
  static const MonomialOrder kOrd = MonomialOrder::grevlex();
  Lexer lx{text};
  PolyQ result(ring);
  bool first = true;
  while (!lx.eof()) {
    int sign = 1;
    if (lx.accept('+')) {
      if (first) throw std::invalid_argument("polynomial parse: leading '+' in '" + text + "'");
    } else if (lx.accept('-')) {
      sign = -1;
    } else if (!first) {
      throw std::invalid_argument("polynomial parse: expected '+' or '-' in '" + text + "'");
    }
    first = false;

    Rat coef = sign < 0 ? Rat(-1) : Rat(1);
    Mono mono = Mono::unit(ring->nvars());
    bool expect_factor = true;
    while (expect_factor) {
      char c = lx.peek();
      if (std::isdigit(static_cast<unsigned char>(c))) {
        auto num = Rat::parse(lx.number());
        if (!num) throw std::invalid_argument("polynomial parse: bad coefficient in '" + text + "'");
        coef = coef * *num;
      } else if (ident_start(c)) {
        std::string name = lx.ident();
        int idx = ring->var_index(name);
        if (idx < 0)
          throw std::invalid_argument("polynomial parse: unknown variable '" + name + "'");
        int exp = 1;
        if (lx.accept('^')) {
          auto n = Rat::parse(lx.number());
          if (!n || n->raw().get_den() != 1 || n->raw().get_num() < 0)
            throw std::invalid_argument("polynomial parse: bad exponent in '" + text + "'");
          exp = static_cast<int>(n->raw().get_num().get_si());
        }
        mono.e[idx] += exp;
      } else {
        throw std::invalid_argument("polynomial parse: expected factor in '" + text + "'");
      }
      expect_factor = lx.accept('*');
    }
    result = result.add(PolyQ::term(ring, mono, coef), kOrd);
  }
  if (first) throw std::invalid_argument("polynomial parse: empty input");
  return result;
}

std::vector<std::string> collect_variables(const std::string& text) {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < text.size();) {
    char c = text[i];
    if (ident_start(c)) {
      std::size_t b = i++;
      while (i < text.size() && ident_cont(text[i])) ++i;
      while (i < text.size() && text[i] == '\'') ++i;
      out.push_back(text.substr(b, i - b));
    } else {
      ++i;
    }
  }
  return out;
}

ParsedIdeal parse_ideal_text(const std::string& text) {
  std::vector<std::string> lines;
  {
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) lines.push_back(line);
  }

  std::vector<std::string> vars;
  bool have_header = false;
  std::set<std::string> seen;
  for (const auto& line : lines) {
    std::size_t p = line.find_first_not_of(" \t");
    if (p == std::string::npos) continue;
    if (line[p] == '#') {
      std::string body = line.substr(p + 1);
      std::size_t q = body.find_first_not_of(" \t");
      if (q != std::string::npos && body.compare(q, 5, "vars:") == 0 && !have_header) {
        have_header = true;
        for (const auto& v : collect_variables(body.substr(q + 5)))
          if (seen.insert(v).second) vars.push_back(v);
      }
      continue;
    }
    if (!have_header)
      for (const auto& v : collect_variables(line))
        if (seen.insert(v).second) vars.push_back(v);
  }
  if (!have_header) std::sort(vars.begin(), vars.end());

  ParsedIdeal out;
  out.ring = std::make_shared<Ring>(vars);
  for (const auto& line : lines) {
    std::size_t p = line.find_first_not_of(" \t");
    if (p == std::string::npos || line[p] == '#') continue;
    out.gens.push_back(parse_poly(out.ring, line));
  }
  return out;
}

namespace {

template <class F>
std::string print_impl(const Poly<F>& p, const MonomialOrder& ord) {
  if (p.is_zero()) return "0";
  Poly<F> q = p;
  q.normalize(ord);
  std::string out;
  bool first = true;
  for (const auto& t : q.terms()) {
    F c = t.c;
    std::string cs = c.str();
    bool neg = !cs.empty() && cs[0] == '-';
    if (neg) cs = cs.substr(1);
    if (first) {
      if (neg) out += "-";
      first = false;
    } else {
      out += neg ? " - " : " + ";
    }
    std::string vars;
    for (std::size_t i = 0; i < t.m.e.size(); ++i) {
      if (t.m.e[i] == 0) continue;
      if (!vars.empty()) vars += "*";
      vars += p.ring()->var_name(i);
      if (t.m.e[i] > 1) vars += "^" + std::to_string(t.m.e[i]);
    }
    if (vars.empty()) {
      out += cs;
    } else if (cs == "1") {
      out += vars;
    } else {
      out += cs + "*" + vars;
    }
  }
  return out;
}

}  // namespace

std::string poly_to_string(const PolyQ& p, const MonomialOrder& ord) { return print_impl(p, ord); }
std::string poly_to_string(const PolyFp& p, const MonomialOrder& ord) { return print_impl(p, ord); }

}  // namespace netideal
