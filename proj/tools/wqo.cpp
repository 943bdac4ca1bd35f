// wqo: compute ordinal invariants of well-partial-orders built from
// compositional expressions, cross-check them against a brute-force oracle
// on finite truncations, construct width witnesses, and solve rank games.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "wqo/finite_poset.hpp"
#include "wqo/games.hpp"
#include "wqo/invariants.hpp"
#include "wqo/ordinal_text.hpp"
#include "wqo/poset_expr.hpp"
#include "wqo/realize.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerifyFailed = 1;
constexpr int kExitBadInput = 2;

struct CommonOpts {
  std::uint64_t omega_cut = 4;
  std::uint64_t bag_cut = 3;
  std::uint64_t max_elements = 5000;
  std::uint64_t seed = 0;
  bool json = false;
};

wqo::RealizeBounds bounds_of(const CommonOpts& o) {
  return wqo::RealizeBounds{o.omega_cut, o.bag_cut, o.max_elements};
}

int run_inv(const std::string& text, const CommonOpts& opts) {
  const wqo::PosetExpr e = wqo::parse_expr(text);
  const wqo::InvariantTriple t = wqo::invariants(e);
  if (opts.json) {
    std::cout << wqo::triple_to_json(t).dump() << "\n";
  } else {
    std::cout << wqo::to_text(t) << "\n";
  }
  return kExitOk;
}

struct OracleRanks {
  std::uint64_t o = 0, h = 0, w = 0;
  int n = 0;
};

OracleRanks oracle_ranks(const wqo::FinitePoset& p) {
  OracleRanks r;
  r.n = p.size();
  r.o = static_cast<std::uint64_t>(p.size());  // cardinality, cross-checked in the suites
  r.h = wqo::height_rank(p);
  r.w = p.size() <= 18 ? wqo::width_rank(p) : wqo::max_antichain_size(p);
  return r;
}

// compare one component; exact finite symbolic values must match exactly
// when nothing was truncated and must dominate the truncation otherwise
bool check_component(const char* name, const wqo::InvariantValue& symbolic, std::uint64_t oracle,
                     bool truncated, std::ostream& out) {
  using wqo::BigNat;
  const BigNat got(oracle);
  if (symbolic.is_exact() && symbolic.exact_value().is_finite()) {
    const BigNat want = symbolic.exact_value().finite_value();
    if (!truncated && got != want) {
      out << "  " << name << ": oracle " << got << " != symbolic " << want << "  VIOLATION\n";
      return false;
    }
    if (truncated && got > want) {
      out << "  " << name << ": truncation rank " << got << " exceeds exact symbolic " << want
          << "  VIOLATION\n";
      return false;
    }
    out << "  " << name << ": oracle " << got << (truncated ? " <= " : " == ") << "symbolic "
        << want << "\n";
    return true;
  }
  if (symbolic.is_exact()) {
    out << "  " << name << ": symbolic " << wqo::to_text(symbolic) << " is infinite; truncation"
        << " reached " << got << " (informational)\n";
    return true;
  }
  if (symbolic.is_range()) {
    out << "  " << name << ": symbolic " << wqo::to_text(symbolic) << "; truncation reached "
        << got << " (sanity note)\n";
    return true;
  }
  out << "  " << name << ": symbolic " << wqo::to_text(symbolic) << " (opaque; not checkable)\n";
  return true;
}

int run_verify(const std::string& text, const CommonOpts& opts) {
  const wqo::PosetExpr e = wqo::parse_expr(text);
  const wqo::InvariantTriple t = wqo::invariants(e);
  const wqo::Realization r = wqo::realize(e, bounds_of(opts));
  const OracleRanks ranks = oracle_ranks(r.poset);

  std::ostringstream report;
  report << "expression: " << wqo::to_text(e) << "\n";
  report << "symbolic:   " << wqo::to_text(t) << "\n";
  report << "realized " << ranks.n << " elements" << (r.truncated ? " (truncated)" : " (exact)")
         << "; oracle (o, h, w) = (" << ranks.o << ", " << ranks.h << ", " << ranks.w << ")\n";
  bool ok = true;
  ok &= check_component("o", t.o, ranks.o, r.truncated, report);
  ok &= check_component("h", t.h, ranks.h, r.truncated, report);
  ok &= check_component("w", t.w, ranks.w, r.truncated, report);

  if (opts.json) {
    nlohmann::json j = {{"expression", wqo::to_text(e)},
                        {"symbolic", wqo::triple_to_json(t)},
                        {"elements", ranks.n},
                        {"truncated", r.truncated},
                        {"oracle", {{"o", ranks.o}, {"h", ranks.h}, {"w", ranks.w}}},
                        {"agreement", ok}};
    std::cout << j.dump() << "\n";
  } else {
    std::cout << report.str() << (ok ? "OK\n" : "FAILED\n");
  }
  return ok ? kExitOk : kExitVerifyFailed;
}

int run_construct_width(const std::string& text, const CommonOpts& opts) {
  const wqo::Ordinal a = wqo::parse_ordinal(text);
  const wqo::PosetExpr witness = wqo::construct_poset_with_width(a);
  const wqo::InvariantTriple t = wqo::invariants(witness);
  if (opts.json) {
    nlohmann::json j = {{"width", wqo::ordinal_to_json(a)},
                        {"witness", wqo::to_text(witness)},
                        {"invariants", wqo::triple_to_json(t)}};
    std::cout << j.dump() << "\n";
  } else {
    std::cout << "witness: " << wqo::to_text(witness) << "\n";
    std::cout << "invariants: " << wqo::to_text(t) << "\n";
    std::cout << "width verified: " << wqo::to_text(t.w) << "\n";
  }
  return kExitOk;
}

int run_game(const std::string& file, std::uint64_t alpha, const std::string& kind_name,
             bool covers, const CommonOpts& opts) {
  std::ifstream in(file);
  if (!in) throw std::invalid_argument("game: cannot open '" + file + "'");
  nlohmann::json j;
  in >> j;
  const wqo::FinitePoset p = wqo::poset_from_json(
      j, covers ? wqo::RelationEncoding::covers : wqo::RelationEncoding::full);
  wqo::GameKind kind;
  if (kind_name == "height") {
    kind = wqo::GameKind::height;
  } else if (kind_name == "motype" || kind_name == "o") {
    kind = wqo::GameKind::motype;
  } else if (kind_name == "width") {
    kind = wqo::GameKind::width;
  } else {
    throw std::invalid_argument("game: kind must be height, motype or width");
  }
  const wqo::Player win = wqo::winner(p, alpha, kind);
  if (opts.json) {
    nlohmann::json out = {{"n", p.size()},
                          {"alpha", alpha},
                          {"kind", kind_name},
                          {"winner", win == wqo::Player::two ? 2 : 1}};
    std::cout << out.dump() << "\n";
  } else {
    std::cout << "Player " << (win == wqo::Player::two ? 2 : 1) << " wins G*_{P," << alpha
              << "} (" << kind_name << ") on " << p.size() << " elements\n";
  }
  return kExitOk;
}

int run_table(const CommonOpts& opts) {
  using wqo::PosetExpr;
  const auto w = wqo::Ordinal::omega();
  const std::vector<std::pair<std::string, PosetExpr>> rows = {
      {"5", PosetExpr::ord(wqo::Ordinal(std::uint64_t(5)))},
      {"w", PosetExpr::ord(w)},
      {"w^2 + 3", PosetExpr::ord(wqo::parse_ordinal("w^2 + 3"))},
      {"A4", PosetExpr::antichain(4)},
      {"Rado", PosetExpr::rado()},
      {"2 ++ A3", PosetExpr::lex_sum({PosetExpr::ord(wqo::Ordinal(std::uint64_t(2))),
                                      PosetExpr::antichain(3)})},
      {"A2 U w", PosetExpr::disjoint_sum({PosetExpr::antichain(2), PosetExpr::ord(w)})},
      {"A2 . w", PosetExpr::direct_prod(PosetExpr::antichain(2), PosetExpr::ord(w))},
      {"w x w", PosetExpr::cart_prod({PosetExpr::ord(w), PosetExpr::ord(w)})},
      {"w x w x w", PosetExpr::cart_prod({PosetExpr::ord(w), PosetExpr::ord(w), PosetExpr::ord(w)})},
      {"M(A3)", PosetExpr::multiset(PosetExpr::antichain(3))},
      {"M(w)", PosetExpr::multiset(PosetExpr::ord(w))},
      {"Seq(2)", PosetExpr::seq(PosetExpr::ord(wqo::Ordinal(std::uint64_t(2))))},
      {"Seq(w)", PosetExpr::seq(PosetExpr::ord(w))},
      {"Tree(1)", PosetExpr::tree(PosetExpr::ord(wqo::Ordinal(std::uint64_t(1))))},
      {"Tree(w)", PosetExpr::tree(PosetExpr::ord(w))},
  };
  if (opts.json) {
    nlohmann::json out = nlohmann::json::array();
    for (const auto& [name, e] : rows)
      out.push_back({{"poset", name}, {"invariants", wqo::triple_to_json(wqo::invariants(e))}});
    std::cout << out.dump() << "\n";
    return kExitOk;
  }
  std::cout << "P                 o(P)                h(P)        w(P)\n";
  std::cout << "-----------------------------------------------------------------\n";
  for (const auto& [name, e] : rows) {
    const wqo::InvariantTriple t = wqo::invariants(e);
    std::ostringstream line;
    line << name;
    for (std::size_t i = name.size(); i < 18; ++i) line << ' ';
    line << wqo::to_text(t.o);
    for (std::size_t i = wqo::to_text(t.o).size(); i < 20; ++i) line << ' ';
    line << wqo::to_text(t.h);
    for (std::size_t i = wqo::to_text(t.h).size(); i < 12; ++i) line << ' ';
    line << wqo::to_text(t.w);
    std::cout << line.str() << "\n";
  }
  return kExitOk;
}

int run_dot(const std::string& text, const CommonOpts& opts, const std::string& out_file) {
  const wqo::PosetExpr e = wqo::parse_expr(text);
  const wqo::Realization r = wqo::realize(e, bounds_of(opts));
  const std::string dot = wqo::poset_to_dot(r.poset);
  if (out_file.empty()) {
    std::cout << dot;
  } else {
    std::ofstream out(out_file);
    out << dot;
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"ordinal invariants (maximal order type, height, width) of composed WPOs"};
  app.require_subcommand(1);
  app.fallthrough();

  CommonOpts opts;
  app.add_option("--omega-cut", opts.omega_cut, "chain length substituted for w")
      ->capture_default_str();
  app.add_option("--bag-cut", opts.bag_cut, "maximum multiset/sequence size")
      ->capture_default_str();
  app.add_option("--max-elements", opts.max_elements, "realization element cap")
      ->capture_default_str();
  app.add_option("--seed", opts.seed, "random seed for verification campaigns")
      ->capture_default_str();
  app.add_flag("--json", opts.json, "machine-readable output");

  std::string expr_text, ord_text, poset_file, kind_name = "width", dot_out;
  std::uint64_t alpha = 0;
  bool covers = false;

  auto* inv = app.add_subcommand("inv", "print the invariant triple of an expression");
  inv->add_option("expr", expr_text, "poset expression")->required();

  auto* verify = app.add_subcommand(
      "verify", "realize a truncation and compare oracle ranks with the symbolic result");
  verify->add_option("expr", expr_text, "poset expression")->required();

  auto* cw = app.add_subcommand("construct-width",
                                "build an expression whose width is the given ordinal");
  cw->add_option("ordinal", ord_text, "target width, e.g. 'w^2+2'")->required();

  auto* game = app.add_subcommand("game", "solve the rank game G*_{P,alpha} on a poset file");
  game->add_option("poset", poset_file, "poset JSON file {\"n\":k, \"leq\":[[i,j],...]}")
      ->required();
  game->add_option("alpha", alpha, "budget ordinal (natural)")->required();
  game->add_option("--kind", kind_name, "height | motype | width")->capture_default_str();
  game->add_flag("--covers", covers, "interpret the pairs as covers, not the full relation");

  auto* table = app.add_subcommand("table", "summary table of sample posets");

  auto* dot = app.add_subcommand("dot", "emit the Hasse diagram of a realized expression");
  dot->add_option("expr", expr_text, "poset expression")->required();
  dot->add_option("-o,--output", dot_out, "output file (stdout when absent)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitBadInput;
  }

  try {
    if (inv->parsed()) return run_inv(expr_text, opts);
    if (verify->parsed()) return run_verify(expr_text, opts);
    if (cw->parsed()) return run_construct_width(ord_text, opts);
    if (game->parsed()) return run_game(poset_file, alpha, kind_name, covers, opts);
    if (table->parsed()) return run_table(opts);
    if (dot->parsed()) return run_dot(expr_text, opts, dot_out);
  } catch (const wqo::ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kExitBadInput;
  } catch (const std::length_error& e) {
    std::cerr << "realization error: " << e.what() << "\n";
    return kExitBadInput;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitBadInput;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kExitBadInput;
  }
  return kExitBadInput;
}
