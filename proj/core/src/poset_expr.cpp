#include "wqo/poset_expr.hpp"

#include <cctype>

#include "wqo/ordinal_text.hpp"

namespace wqo {

PosetExpr PosetExpr::ord(Ordinal a) {
  PosetExpr e;
  e.kind_ = Kind::ordinal;
  e.ord_ = std::move(a);
  return e;
}

PosetExpr PosetExpr::antichain(std::uint64_t n) {
  PosetExpr e;
  e.kind_ = Kind::antichain;
  e.n_ = n;
  return e;
}

PosetExpr PosetExpr::rado() {
  PosetExpr e;
  e.kind_ = Kind::rado;
  return e;
}

PosetExpr PosetExpr::lex_sum(std::vector<PosetExpr> parts) {
  PosetExpr e;
  e.kind_ = Kind::lex_sum;
  e.children_ = std::move(parts);
  return e;
}

PosetExpr PosetExpr::disjoint_sum(std::vector<PosetExpr> parts) {
  PosetExpr e;
  e.kind_ = Kind::disjoint_sum;
  e.children_ = std::move(parts);
  return e;
}

PosetExpr PosetExpr::direct_prod(PosetExpr p, PosetExpr q) {
  PosetExpr e;
  e.kind_ = Kind::direct_prod;
  e.children_.push_back(std::move(p));
  e.children_.push_back(std::move(q));
  return e;
}

PosetExpr PosetExpr::cart_prod(std::vector<PosetExpr> factors) {
  if (factors.size() < 2)
    throw std::invalid_argument("cart_prod: needs at least two factors");
  PosetExpr e;
  e.kind_ = Kind::cart_prod;
  e.children_ = std::move(factors);
  return e;
}

PosetExpr PosetExpr::multiset(PosetExpr p) {
  PosetExpr e;
  e.kind_ = Kind::multiset;
  e.children_.push_back(std::move(p));
  return e;
}

PosetExpr PosetExpr::seq(PosetExpr p) {
  PosetExpr e;
  e.kind_ = Kind::seq;
  e.children_.push_back(std::move(p));
  return e;
}

PosetExpr PosetExpr::tree(PosetExpr p) {
  PosetExpr e;
  e.kind_ = Kind::tree;
  e.children_.push_back(std::move(p));
  return e;
}

bool PosetExpr::operator==(const PosetExpr& rhs) const {
  return kind_ == rhs.kind_ && ord_ == rhs.ord_ && n_ == rhs.n_ && children_ == rhs.children_;
}

std::optional<Ordinal> as_ordinal(const PosetExpr& e) {
  if (e.kind() == PosetExpr::Kind::ordinal) return e.ordinal_value();
  if (e.kind() == PosetExpr::Kind::antichain && e.antichain_size() <= 1)
    return Ordinal(BigNat(e.antichain_size()));
  return std::nullopt;
}

// -- text form ----------------------------------------------------------------

namespace {

// precedence levels, loosest first
enum Level { kCart = 0, kLex = 1, kDisj = 2, kDot = 3, kPrimary = 4 };

Level level_of(const PosetExpr& e) {
  switch (e.kind()) {
    case PosetExpr::Kind::cart_prod: return kCart;
    case PosetExpr::Kind::lex_sum: return kLex;
    case PosetExpr::Kind::disjoint_sum: return kDisj;
    case PosetExpr::Kind::direct_prod: return kDot;
    default: return kPrimary;
  }
}

void print(const PosetExpr& e, int min_level, std::string& out) {
  const Level lvl = level_of(e);
  const bool parens = lvl < min_level;
  if (parens) out += '(';
  switch (e.kind()) {
    case PosetExpr::Kind::ordinal:
      out += to_text(e.ordinal_value());
      break;
    case PosetExpr::Kind::antichain:
      out += 'A';
      out += std::to_string(e.antichain_size());
      break;
    case PosetExpr::Kind::rado:
      out += "Rado";
      break;
    case PosetExpr::Kind::lex_sum:
    case PosetExpr::Kind::disjoint_sum:
    case PosetExpr::Kind::cart_prod:
    case PosetExpr::Kind::direct_prod: {
      const char* sep = e.kind() == PosetExpr::Kind::lex_sum       ? " ++ "
                        : e.kind() == PosetExpr::Kind::disjoint_sum ? " U "
                        : e.kind() == PosetExpr::Kind::cart_prod    ? " x "
                                                                    : " . ";
      if (e.children().empty()) {
        // empty sums have no literal; print the empty antichain instead
        out += "A0";
        break;
      }
      bool first = true;
      for (const auto& c : e.children()) {
        if (!first) out += sep;
        first = false;
        print(c, lvl + 1, out);
      }
      break;
    }
    case PosetExpr::Kind::multiset:
      out += "M(";
      print(e.children()[0], kCart, out);
      out += ')';
      break;
    case PosetExpr::Kind::seq:
      out += "Seq(";
      print(e.children()[0], kCart, out);
      out += ')';
      break;
    case PosetExpr::Kind::tree:
      out += "Tree(";
      print(e.children()[0], kCart, out);
      out += ')';
      break;
  }
  if (parens) out += ')';
}

class ExprParser {
 public:
  explicit ExprParser(std::string_view text) : text_(text) {}

  PosetExpr parse() {
    PosetExpr e = parse_cart();
    skip_ws();
    if (pos_ != text_.size()) throw ParseError("trailing input after expression", pos_);
    return e;
  }

 private:
  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool at_word(std::string_view w) {
    skip_ws();
    if (text_.substr(pos_, w.size()) != w) return false;
    const std::size_t end = pos_ + w.size();
    // keep alphanumeric runs whole: "x" must not match the front of "x2"
    if (end < text_.size() && std::isalnum(static_cast<unsigned char>(text_[end])) &&
        std::isalnum(static_cast<unsigned char>(w.back())))
      return false;
    return true;
  }

  bool try_word(std::string_view w) {
    if (!at_word(w)) return false;
    pos_ += w.size();
    return true;
  }

  PosetExpr parse_cart() {
    std::vector<PosetExpr> parts{parse_lex()};
    while (try_word("x")) parts.push_back(parse_lex());
    if (parts.size() == 1) return std::move(parts[0]);
    return PosetExpr::cart_prod(std::move(parts));
  }

  PosetExpr parse_lex() {
    std::vector<PosetExpr> parts{parse_disj()};
    while (try_word("++")) parts.push_back(parse_disj());
    if (parts.size() == 1) return std::move(parts[0]);
    return PosetExpr::lex_sum(std::move(parts));
  }

  PosetExpr parse_disj() {
    std::vector<PosetExpr> parts{parse_dot()};
    while (try_word("U")) parts.push_back(parse_dot());
    if (parts.size() == 1) return std::move(parts[0]);
    return PosetExpr::disjoint_sum(std::move(parts));
  }

  PosetExpr parse_dot() {
    PosetExpr e = parse_primary();
    while (try_word(".")) e = PosetExpr::direct_prod(std::move(e), parse_primary());
    return e;
  }

  PosetExpr parse_wrapped(const char* name) {
    PosetExpr inner = parse_cart();
    if (!try_word(")"))
      throw ParseError(std::string("expected ')' closing ") + name + "(...)", pos_);
    return inner;
  }

  PosetExpr parse_primary() {
    skip_ws();
    if (pos_ >= text_.size()) throw ParseError("expected an expression", pos_);
    if (try_word("Rado")) return PosetExpr::rado();
    if (try_word("M(")) return PosetExpr::multiset(parse_wrapped("M"));
    if (try_word("Seq(")) return PosetExpr::seq(parse_wrapped("Seq"));
    if (try_word("Tree(")) return PosetExpr::tree(parse_wrapped("Tree"));
    if (try_word("(")) {
      PosetExpr e = parse_cart();
      if (!try_word(")")) throw ParseError("expected ')'", pos_);
      return e;
    }
    const char c = text_[pos_];
    if (c == 'A') {
      ++pos_;
      std::size_t start = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      if (pos_ == start) throw ParseError("expected antichain size after 'A'", pos_);
      return PosetExpr::antichain(std::stoull(std::string(text_.substr(start, pos_ - start))));
    }
    if (c == 'w' || std::isdigit(static_cast<unsigned char>(c))) {
      // hand the longest ordinal-shaped slice to the ordinal parser
      std::size_t end = pos_;
      int depth = 0;
      while (end < text_.size()) {
        const char d = text_[end];
        if (d == '(') ++depth;
        if (d == ')') {
          if (depth == 0) break;
          --depth;
        }
        if (depth == 0) {
          if (d == '+' && end + 1 < text_.size() && text_[end + 1] == '+') break;
          if (!(d == 'w' || d == '+' || d == '*' || d == '^' || d == '(' || d == ')' ||
                std::isdigit(static_cast<unsigned char>(d)) ||
                std::isspace(static_cast<unsigned char>(d))))
            break;
        }
        ++end;
      }
      // do not swallow trailing whitespace or a trailing lone '+'
      std::size_t stop = end;
      while (stop > pos_) {
        const char d = text_[stop - 1];
        if (std::isspace(static_cast<unsigned char>(d)) || d == '+')
          --stop;
        else
          break;
      }
      try {
        PosetExpr e = PosetExpr::ord(parse_ordinal(text_.substr(pos_, stop - pos_)));
        pos_ = stop;
        return e;
      } catch (const ParseError& err) {
        throw ParseError(err.what(), pos_ + err.pos);
      }
    }
    throw ParseError("expected an expression", pos_);
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

PosetExpr parse_expr(std::string_view text) { return ExprParser(text).parse(); }

std::string to_text(const PosetExpr& e) {
  std::string out;
  print(e, kCart, out);
  return out;
}

}  // namespace wqo
