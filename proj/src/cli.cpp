#include "qsh/cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <numeric>
#include <sstream>

#include "qsh/braid_symmetries.hpp"
#include "qsh/braiding.hpp"
#include "qsh/checks.hpp"
#include "qsh/expr.hpp"

namespace qsh::cli {

using nlohmann::json;

namespace {

constexpr int kTensorBound = 5;

// Minimal positive integers d with d_i a_ij = d_j a_ji, found along the
// Dynkin graph.  Falls back to all ones when the matrix is not symmetrizable;
// validation then reports the problem.
std::vector<int> derive_symmetrizer(const std::vector<std::vector<int>>& a) {
  const std::size_t n = a.size();
  for (const auto& row : a)
    if (row.size() != n) return std::vector<int>(n, 1);
  std::vector<long> num(n, 0), den(n, 1);
  for (std::size_t root = 0; root < n; ++root) {
    if (num[root]) continue;
    num[root] = 1;
    std::vector<std::size_t> stack{root};
    while (!stack.empty()) {
      const std::size_t i = stack.back();
      stack.pop_back();
      for (std::size_t j = 0; j < n; ++j) {
        if (i == j || a[i][j] == 0 || num[j]) continue;
        if (a[j][i] == 0 || (a[i][j] > 0) != (a[j][i] > 0)) return std::vector<int>(n, 1);
        // d_j = d_i a_ij / a_ji
        num[j] = num[i] * std::abs(a[i][j]);
        den[j] = den[i] * std::abs(a[j][i]);
        const long g = std::gcd(num[j], den[j]);
        num[j] /= g;
        den[j] /= g;
        stack.push_back(j);
      }
    }
  }
  long l = 1;
  for (long x : den) l = std::lcm(l, x);
  std::vector<long> d(n);
  long g = 0;
  for (std::size_t i = 0; i < n; ++i) {
    d[i] = num[i] * (l / den[i]);
    g = std::gcd(g, d[i]);
  }
  std::vector<int> out(n);
  for (std::size_t i = 0; i < n; ++i) out[i] = static_cast<int>(d[i] / g);
  return out;
}

std::string word_text(const Word& w) { return "w[" + w.to_string() + "]"; }

json word_json(const Word& w) {
  json j = json::array();
  for (std::size_t i = 0; i < w.size(); ++i) j.push_back(w[i] + 1);
  return j;
}

std::string key_text(const Word& w) { return word_text(w); }
std::string key_text(const WordPair& p) { return word_text(p.first) + " (x) " + word_text(p.second); }
std::string key_text(const FoldKey& k) {
  std::string s;
  for (std::size_t f = 0; f < k.size(); ++f) s += (f ? " (x) " : "") + word_text(k[f]);
  return s;
}
json key_json(const Word& w) { return word_json(w); }
json key_json(const WordPair& p) { return json::array({word_json(p.first), word_json(p.second)}); }
json key_json(const FoldKey& k) {
  json j = json::array();
  for (const Word& w : k) j.push_back(word_json(w));
  return j;
}

struct Context {
  std::ostream& out;
  bool as_json = false;
  SymbolTable symbols;

  template <class Key, class Tag>
  void element(const Combination<Key, Tag>& x, json extra = json::object()) {
    if (as_json) {
      json terms = json::array();
      for (const auto& [k, c] : x) terms.push_back({{"key", key_json(k)}, {"coef", to_json(c, symbols)}});
      extra["slots"] = slot_header(symbols);
      extra["terms"] = terms;
      out << extra.dump() << "\n";
      return;
    }
    for (auto it = extra.begin(); it != extra.end(); ++it)
      out << it.key() << ": " << (it->is_string() ? it->get<std::string>() : it->dump()) << "\n";
    if (x.is_zero()) out << "0\n";
    for (const auto& [k, c] : x) out << key_text(k) << "  " << to_string(c, symbols) << "\n";
  }

  void scalar(const Scalar& s) {
    if (as_json)
      out << json{{"slots", slot_header(symbols)}, {"value", to_json(s, symbols)}}.dump() << "\n";
    else
      out << to_string(s, symbols) << "\n";
  }

  int report(const CheckReport& r) {
    if (as_json) {
      json items = json::array();
      for (const auto& i : r.items) items.push_back({{"name", i.name}, {"pass", i.pass}, {"detail", i.detail}});
      out << json{{"pass", r.pass()}, {"items", items}}.dump() << "\n";
    } else {
      for (const auto& i : r.items)
        out << (i.pass ? "pass  " : "FAIL  ") << i.name << (i.detail.empty() ? "" : "  [" + i.detail + "]") << "\n";
      out << (r.pass() ? "pass" : "FAIL") << "\n";
    }
    return r.pass() ? ok : failure;
  }
};

std::vector<Word> parse_folds(const std::string& text, int folds) {
  std::vector<Word> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, '|')) out.push_back(Word::parse(item));
  if (text.empty()) out.clear();
  if (out.empty()) out.assign(folds, Word{});
  if (static_cast<int>(out.size()) != folds)
    throw std::invalid_argument("--words has " + std::to_string(out.size()) + " folds, expected " +
                                std::to_string(folds));
  return out;
}

void check_single_bound(const Coloring& c, int bound) {
  if (c.total() > bound)
    throw SizeBoundError("weight " + c.to_string() + " has m_c = " + std::to_string(c.total()) + " > bound " +
                             std::to_string(bound) + "; it would produce " + std::to_string(word_count(c)) + " words",
                         word_count(c));
}

void check_tensor_bound(int truncation, int bound, int rank, int folds) {
  if (truncation <= bound) return;
  // tuples of words of total length t over n folds, summed over t
  std::uint64_t estimate = 0;
  for (int t = 0; t <= truncation; ++t) {
    std::uint64_t placements = 1, letters = 1;
    for (int k = 1; k < folds; ++k) placements = placements * (t + k) / k;
    for (int k = 0; k < t; ++k) letters *= rank;
    estimate += placements * letters;
  }
  throw SizeBoundError("tensor truncation " + std::to_string(truncation) + " > bound " + std::to_string(bound) +
                           "; it would involve about " + std::to_string(estimate) + " word tuples",
                       estimate);
}

Triangular parse_shape(const std::string& s) {
  if (s == "lower") return Triangular::lower;
  if (s == "upper") return Triangular::upper;
  throw std::invalid_argument("--shape must be lower or upper");
}

}  // namespace

CartanDatum datum_from_json(const json& j) {
  if (j.contains("name")) return CartanDatum::named(j.at("name").get<std::string>());
  if (!j.contains("cartan")) throw DatumError("datum needs \"name\" or \"cartan\"", {"missing cartan matrix"});
  const auto a = j.at("cartan").get<std::vector<std::vector<int>>>();
  const auto d = j.contains("d") ? j.at("d").get<std::vector<int>>() : derive_symmetrizer(a);
  return CartanDatum(a, d, j.value("label", std::string()));
}

CartanDatum load_datum(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot read datum file " + path);
  json j;
  try {
    j = json::parse(in);
  } catch (const json::exception& e) {
    throw std::invalid_argument("datum file " + path + ": " + e.what());
  }
  return datum_from_json(j);
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"q-shuffle algebras, Verma modules and braidings"};
  app.require_subcommand(1);
  app.fallthrough();

  std::string name, datum_file, weight_text, format = "text", expr_text, x_text, y_text, words_text, side = "free",
                                               shape_text = "lower", corpus = QSH_DEFAULT_CORPUS;
  int punctures = 1, truncate = -1, max_weight = -1, index = 1, k = -1, cut = 1, criterion = 0, label_x = 1,
      label_y = 2;
  unsigned seed = 0;
  bool normalized = false;

  auto datum_group = app.add_option_group("datum");
  datum_group->add_option("--name", name, "named Cartan type, e.g. A2, B2, G2, A1xA1");
  datum_group->add_option("--datum", datum_file, "JSON datum file");
  datum_group->require_option(0, 1);
  app.add_option("--weight", weight_text, "coloring as comma separated counts");
  app.add_option("--punctures", punctures, "number of tensor folds")->check(CLI::Range(1, 8));
  app.add_option("--truncate", truncate, "total weight truncation")->check(CLI::NonNegativeNumber);
  app.add_option("--format", format)->check(CLI::IsMember({"text", "json"}));
  app.add_flag("--normalized", normalized, "multiply by D_c so coordinates are Laurent polynomials");
  app.add_option("--seed", seed, "accepted for compatibility; every check here is exhaustive");
  app.add_option("--max-weight", max_weight, "raise the size bound (default 8, tensors 5)");
  app.add_option("--expr", expr_text, "expression");
  app.add_option("--x", x_text, "left expression, or left puncture label for rmatrix");
  app.add_option("--y", y_text, "right expression, or right puncture label for rmatrix");
  app.add_option("--i", index, "root index, 1-based");
  app.add_option("--k", k, "exponent");
  app.add_option("--words", words_text, "fold words, e.g. 1,2|2");
  app.add_option("--cut", cut, "split position");
  app.add_option("--side", side)->check(CLI::IsMember({"scalar", "free", "shuffle", "verma"}));
  app.add_option("--shape", shape_text)->check(CLI::IsMember({"lower", "upper"}));
  app.add_option("--corpus", corpus, "expression corpus for check --criterion 11");

  const std::vector<std::pair<std::string, std::string>> commands = {
      {"dims", "number of words of a weight"},
      {"gram", "Gram matrix of the form on a weight space"},
      {"rank", "rank of the form on a weight space"},
      {"pair", "the form on two free algebra elements"},
      {"coproduct", "the twisted coproduct r"},
      {"iota", "image in the shuffle algebra"},
      {"shuffle", "shuffle product of iota(x) and iota(y)"},
      {"serre-check", "quantum Serre vanishing"},
      {"braid-t", "braid group symmetry T_i"},
      {"vanishing", "the elements V_k and their threshold"},
      {"verma-act", "apply an operator to a Verma tensor product"},
      {"split-check", "coproduct compatibility of fold splitting"},
      {"adjoint-check", "adjointness of E^[k] and F^(k)"},
      {"rmatrix", "solve for the braiding of two Verma modules"},
      {"ybe", "braid relation on three strands"},
      {"parse-eval", "parse, print and evaluate an expression"},
      {"check", "run one acceptance criterion"},
  };
  for (const auto& [cmd, help] : commands) app.add_subcommand(cmd, help);
  app.get_subcommand("check")->add_option("--criterion", criterion)->required()->check(CLI::Range(1, 11));

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? ok : usage;
  }

  const std::string command = app.get_subcommands().front()->get_name();
  Context ctx{out, format == "json", {}};
  const bool tensor = command == "verma-act" || command == "split-check" || command == "rmatrix" ||
                      command == "ybe" || command == "adjoint-check";
  const int single_bound = max_weight > 0 ? max_weight : 8;
  const int tensor_bound = max_weight > 0 ? max_weight : kTensorBound;

  try {
    if (command == "check") return ctx.report(run_criterion(criterion, corpus));

    if (command == "parse-eval" && side == "scalar") {
      const ExprPtr e = parse(expr_text);
      ctx.symbols = {0, 0};
      out << print(*e) << "\n";
      ctx.scalar(eval_scalar(*e, {0, 0}));
      return ok;
    }

    if (name.empty() && datum_file.empty()) {
      err << "a datum is required: --name NAME or --datum FILE\n";
      return usage;
    }
    const CartanDatum datum = name.empty() ? load_datum(datum_file) : CartanDatum::named(name);
    const int rank = datum.rank();
    auto engine = std::make_shared<PairingEngine>(datum, tensor ? std::max(single_bound, tensor_bound + 4)
                                                                : single_bound);
    ctx.symbols = {rank, punctures};
    auto index0 = [&] {
      datum.check_index(index - 1);
      return index - 1;
    };
    auto weight = [&] {
      if (weight_text.empty()) throw std::invalid_argument("--weight is required");
      const Coloring c = Coloring::parse(weight_text, rank);
      check_single_bound(c, single_bound);
      return c;
    };
    auto free_expr = [&](const std::string& text, const char* flag) {
      if (text.empty()) throw std::invalid_argument(std::string(flag) + " is required");
      return eval_free(*parse(text), datum, ctx.symbols);
    };

    if (command == "dims") {
      const Coloring c = weight();
      if (ctx.as_json)
        out << json{{"weight", c.counts()}, {"words", word_count(c)}}.dump() << "\n";
      else
        out << word_count(c) << "\n";
      return ok;
    }
    if (command == "rank") {
      const Coloring c = weight();
      const std::size_t r = engine->radical_rank(c);
      if (ctx.as_json)
        out << json{{"weight", c.counts()}, {"rank", r}, {"words", word_count(c)}}.dump() << "\n";
      else
        out << r << "\n";
      return ok;
    }
    if (command == "gram") {
      const Coloring c = weight();
      const auto words = enumerate_words(c, single_bound);
      json rows = json::array();
      std::vector<std::vector<std::string>> text;
      if (normalized) {
        const PolyMatrix g = engine->gram_normalized(c);
        for (std::size_t r = 0; r < g.rows(); ++r) {
          json row = json::array();
          std::vector<std::string> t;
          for (std::size_t s = 0; s < g.cols(); ++s) {
            row.push_back(to_json(g(r, s), ctx.symbols));
            t.push_back(to_string(g(r, s), ctx.symbols));
          }
          rows.push_back(row);
          text.push_back(t);
        }
      } else {
        const ScalarMatrix g = engine->gram(c);
        for (std::size_t r = 0; r < g.rows(); ++r) {
          json row = json::array();
          std::vector<std::string> t;
          for (std::size_t s = 0; s < g.cols(); ++s) {
            row.push_back(to_json(g(r, s), ctx.symbols));
            t.push_back(to_string(g(r, s), ctx.symbols));
          }
          rows.push_back(row);
          text.push_back(t);
        }
      }
      if (ctx.as_json) {
        json ws = json::array();
        for (const Word& w : words) ws.push_back(word_json(w));
        json j{{"slots", slot_header(ctx.symbols)}, {"words", ws}, {"matrix", rows}};
        if (normalized) j["normalizer"] = to_json(engine->normalizer(c), ctx.symbols);
        out << j.dump() << "\n";
      } else {
        if (normalized) out << "normalizer: " << to_string(engine->normalizer(c), ctx.symbols) << "\n";
        for (std::size_t r = 0; r < words.size(); ++r) {
          out << word_text(words[r]) << ":";
          for (const auto& s : text[r]) out << "  " << s;
          out << "\n";
        }
      }
      return ok;
    }
    if (command == "pair") {
      ctx.scalar(engine->pair(free_expr(x_text, "--x"), free_expr(y_text, "--y")));
      return ok;
    }
    if (command == "coproduct") {
      ctx.element(coproduct_r(datum, free_expr(expr_text, "--expr")));
      return ok;
    }
    if (command == "iota") {
      ctx.element(iota(*engine, free_expr(expr_text, "--expr"), normalized));
      return ok;
    }
    if (command == "shuffle") {
      const BMElement a = iota(*engine, free_expr(x_text, "--x"), normalized);
      const BMElement b = iota(*engine, free_expr(y_text, "--y"), normalized);
      ctx.element(shuffle_mul(datum, a, b));
      return ok;
    }
    if (command == "serre-check") return ctx.report(serre_check(*engine));
    if (command == "braid-t") {
      ctx.element(t_i_apply(*engine, index0(), free_expr(expr_text, "--expr"), normalized));
      return ok;
    }
    if (command == "vanishing") {
      const int i = index0();
      const GradedVector x = free_expr(expr_text, "--expr");
      if (x.is_zero()) throw std::invalid_argument("--expr evaluates to zero");
      const Coloring c = Coloring::content(x.begin()->first, rank);
      for (const auto& [w, coef] : x)
        if (Coloring::content(w, rank) != c) throw std::invalid_argument("--expr must be homogeneous");
      const int threshold = truncation_threshold(datum, i, c);
      if (k >= 0) {
        check_single_bound(c + Coloring::root(rank, i, k), single_bound);
        ctx.element(vanishing_element(*engine, i, x, k, normalized), json{{"threshold", threshold}});
        return ok;
      }
      check_single_bound(c + Coloring::root(rank, i, threshold + 1), single_bound);
      CheckReport r;
      r.add("V_k = 0 at k = " + std::to_string(threshold + 1),
            vanishing_element(*engine, i, x, threshold + 1, true).is_zero());
      return ctx.report(r);
    }
    if (command == "verma-act") {
      const int bound = punctures == 1 ? single_bound : tensor_bound;
      const VermaModule module = VermaModule::with_punctures(engine, punctures);
      const auto folds = parse_folds(words_text, punctures);
      int total = 0;
      for (const Word& w : folds) total += static_cast<int>(w.size());
      if (total > bound) check_tensor_bound(total, bound, rank, punctures);
      const ExprPtr op = parse(expr_text.empty() ? "1" : expr_text);
      ctx.element(eval_operator(*op, module, module.from_words(folds)));
      return ok;
    }
    if (command == "split-check") {
      const int folds = punctures == 1 ? 2 : punctures;
      const int t = truncate < 0 ? 4 : truncate;
      check_tensor_bound(t, tensor_bound, rank, folds);
      if (cut < 1 || cut >= folds) throw std::invalid_argument("--cut must lie strictly between 0 and the fold count");
      FoldBasis basis(engine);
      return ctx.report(split_check(VermaModule::with_punctures(engine, folds), basis, cut, t, 2));
    }
    if (command == "adjoint-check") {
      const int t = truncate < 0 ? 4 : truncate;
      check_tensor_bound(t, tensor_bound, rank, 1);
      return ctx.report(adjoint_check(VermaModule::with_punctures(engine, 1), t));
    }
    if (command == "rmatrix") {
      const int t = truncate < 0 ? 2 : truncate;
      check_tensor_bound(t, tensor_bound, rank, 2);
      if (!x_text.empty()) label_x = std::stoi(x_text);
      if (!y_text.empty()) label_y = std::stoi(y_text);
      ctx.symbols = {rank, std::max(label_x, label_y)};
      auto basis = std::make_shared<FoldBasis>(engine);
      Braiding b(basis, engine, label_x, label_y, t, parse_shape(shape_text));
      CheckReport r;
      for (const BlockReport& br : b.reports())
        r.add("block " + br.weight.to_string(), br.status == "unique",
              br.status + ", " + std::to_string(br.unknowns) + " unknowns, " + std::to_string(br.equations) +
                  " equations, rank " + std::to_string(br.rank));
      if (b.solved()) {
        std::string why;
        r.add("intertwines F, E, K", b.check_equivariance(&why), why);
      }
      if (ctx.as_json) {
        json columns = json::array();
        if (b.solved())
          for (const auto& [src, col] : b.matrix()) {
            json terms = json::array();
            for (const auto& [dst, c] : col) terms.push_back({{"key", key_json(dst)}, {"coef", to_json(c, ctx.symbols)}});
            columns.push_back({{"source", key_json(src)}, {"image", terms}});
          }
        json items = json::array();
        for (const auto& i : r.items) items.push_back({{"name", i.name}, {"pass", i.pass}, {"detail", i.detail}});
        out << json{{"pass", r.pass()}, {"slots", slot_header(ctx.symbols)}, {"items", items}, {"columns", columns}}
                   .dump()
            << "\n";
        return r.pass() ? ok : failure;
      }
      if (b.solved())
        for (const auto& [src, col] : b.matrix()) {
          out << key_text(src) << " ->\n";
          for (const auto& [dst, c] : col) out << "    " << key_text(dst) << "  " << to_string(c, ctx.symbols) << "\n";
        }
      return ctx.report(r);
    }
    if (command == "ybe") {
      const int t = truncate < 0 ? 2 : truncate;
      check_tensor_bound(t, tensor_bound, rank, 3);
      return ctx.report(braiding_check(datum, t, parse_shape(shape_text)));
    }
    if (command == "parse-eval") {
      const ExprPtr e = parse(expr_text);
      out << print(*e) << "\n";
      if (side == "free") ctx.element(eval_free(*e, datum, ctx.symbols));
      else if (side == "shuffle") ctx.element(eval_shuffle(*e, *engine, ctx.symbols, normalized));
      else {
        const VermaModule module = VermaModule::with_punctures(engine, punctures);
        ctx.element(eval_operator(*e, module, module.from_words(parse_folds(words_text, punctures))));
      }
      return ok;
    }
    err << "unhandled command " << command << "\n";
    return usage;
  } catch (const SizeBoundError& e) {
    err << "refusing: " << e.what() << " (raise with --max-weight)\n";
    return too_large;
  } catch (const DatumError& e) {
    err << "invalid datum\n";
    if (e.violations().empty()) err << "  " << e.what() << "\n";
    for (const auto& v : e.violations()) err << "  " << v << "\n";
    return usage;
  } catch (const ParseError& e) {
    err << "parse error at " << e.what() << "\n";
    return usage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return usage;
  }
}

}  // namespace qsh::cli
