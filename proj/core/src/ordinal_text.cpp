#include "wqo/ordinal_text.hpp"

#include <cctype>
#include <limits>

namespace wqo {

namespace {

bool exponent_is_atomic(const Ordinal& e) {
  if (e.is_finite()) return true;
  // a bare chain w^...^w with single term and coefficient 1 still needs
  // parentheses once it has nested structure; keep it simple: only plain
  // "w" (= w^1) is atomic among the infinite exponents.
  return e == Ordinal::omega();
}

void term_to_text(const Ordinal::Term& t, std::string& out) {
  if (t.exp.is_zero()) {
    out += t.coeff.str();
    return;
  }
  out += 'w';
  if (!(t.exp.is_finite() && t.exp.finite_value() == 1)) {
    out += '^';
    if (exponent_is_atomic(t.exp)) {
      out += to_text(t.exp);
    } else {
      out += '(';
      out += to_text(t.exp);
      out += ')';
    }
  }
  if (t.coeff != 1) {
    out += '*';
    out += t.coeff.str();
  }
}

class OrdinalParser {
 public:
  explicit OrdinalParser(std::string_view text) : text_(text) {}

  Ordinal parse() {
    Ordinal r = parse_sum();
    skip_ws();
    if (pos_ != text_.size()) throw ParseError("trailing input after ordinal", pos_);
    return r;
  }

 private:
  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool try_consume(char c) {
    skip_ws();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  char peek() {
    skip_ws();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }

  BigNat parse_nat() {
    skip_ws();
    std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (pos_ == start) throw ParseError("expected a natural number", pos_);
    return BigNat(std::string(text_.substr(start, pos_ - start)));
  }

  Ordinal parse_sum() {
    Ordinal acc = parse_term();
    while (true) {
      skip_ws();
      // '+' only; "++" belongs to the expression grammar one level up
      if (pos_ + 1 < text_.size() && text_[pos_] == '+' && text_[pos_ + 1] == '+') break;
      if (!try_consume('+')) break;
      acc = add(acc, parse_term());
    }
    return acc;
  }

  Ordinal parse_term() {
    const char c = peek();
    if (std::isdigit(static_cast<unsigned char>(c))) return Ordinal(parse_nat());
    if (c == 'w') {
      ++pos_;
      Ordinal exp(BigNat(1));
      if (try_consume('^')) exp = parse_atom();
      BigNat coeff = 1;
      if (try_consume('*')) coeff = parse_nat();
      if (coeff == 0) return Ordinal();
      if (exp.is_zero()) return Ordinal(coeff);
      return Ordinal::omega_power(exp, coeff);
    }
    throw ParseError("expected an ordinal term", pos_);
  }

  Ordinal parse_atom() {
    const char c = peek();
    if (std::isdigit(static_cast<unsigned char>(c))) return Ordinal(parse_nat());
    if (c == 'w') {
      ++pos_;
      if (try_consume('^')) return omega_pow(parse_atom());
      return Ordinal::omega();
    }
    if (try_consume('(')) {
      Ordinal r = parse_sum();
      if (!try_consume(')')) throw ParseError("expected ')'", pos_);
      return r;
    }
    throw ParseError("expected an exponent", pos_);
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

std::string to_text(const Ordinal& a) {
  if (a.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& t : a.terms()) {
    if (!first) out += " + ";
    first = false;
    term_to_text(t, out);
  }
  return out;
}

Ordinal parse_ordinal(std::string_view text) { return OrdinalParser(text).parse(); }

nlohmann::json ordinal_to_json(const Ordinal& a) {
  nlohmann::json j = nlohmann::json::array();
  for (const auto& t : a.terms()) {
    nlohmann::json coeff;
    if (t.coeff <= std::numeric_limits<std::uint64_t>::max()) {
      coeff = t.coeff.convert_to<std::uint64_t>();
    } else {
      coeff = t.coeff.str();
    }
    j.push_back({ordinal_to_json(t.exp), std::move(coeff)});
  }
  return j;
}

Ordinal ordinal_from_json(const nlohmann::json& j) {
  if (!j.is_array()) throw std::invalid_argument("ordinal JSON: expected an array");
  Ordinal::Terms terms;
  for (const auto& e : j) {
    if (!e.is_array() || e.size() != 2)
      throw std::invalid_argument("ordinal JSON: expected [exp, coeff] pairs");
    BigNat coeff = e[1].is_string() ? BigNat(e[1].get<std::string>())
                                    : BigNat(e[1].get<std::uint64_t>());
    terms.push_back(Ordinal::Term{ordinal_from_json(e[0]), std::move(coeff)});
  }
  return Ordinal::from_terms(std::move(terms));
}

}  // namespace wqo
