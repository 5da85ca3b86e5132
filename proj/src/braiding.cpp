#include "qsh/braiding.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

namespace qsh {

FoldBasis::Block& FoldBasis::block(const Coloring& c) {
  auto it = blocks_.find(c);
  if (it != blocks_.end()) return it->second;
  const auto words = enumerate_words(c, engine_->max_weight());
  Block b;
  RowEchelon echelon(words.size());
  for (const Word& w : words) {
    std::vector<LaurentPoly> row(words.size());
    for (std::size_t j = 0; j < words.size(); ++j) row[j] = engine_->pair_normalized(w, words[j]);
    if (echelon.insert(std::move(row))) {
      b.index.emplace(w, b.words.size());
      b.words.push_back(w);
    }
  }
  ScalarMatrix a(b.words.size(), b.words.size());
  for (std::size_t i = 0; i < b.words.size(); ++i)
    for (std::size_t j = 0; j < b.words.size(); ++j) a(i, j) = Scalar(engine_->pair_normalized(b.words[i], b.words[j]));
  b.inverse = inverse(a);
  return blocks_.emplace(c, std::move(b)).first->second;
}

const std::vector<Word>& FoldBasis::basis(const Coloring& c) { return block(c).words; }

TensorElement FoldBasis::to_basis(const TensorElement& m) {
  const int rank = engine_->datum().rank();
  TensorElement out;
  for (const auto& [key, coef] : m) {
    // only coordinates at basis words are needed: m restricted to U-tuples is (A (x) .. (x) A) lambda
    std::vector<std::pair<FoldKey, Scalar>> partial{{FoldKey{}, coef}};
    bool on_basis = true;
    for (const Word& u : key) {
      Block& b = block(Coloring::content(u, rank));
      auto it = b.index.find(u);
      if (it == b.index.end()) {
        on_basis = false;
        break;
      }
      std::vector<std::pair<FoldKey, Scalar>> next;
      for (const auto& [k, c] : partial)
        for (std::size_t r = 0; r < b.words.size(); ++r) {
          const Scalar& x = b.inverse(r, it->second);
          if (x.is_zero()) continue;
          FoldKey nk = k;
          nk.push_back(b.words[r]);
          next.emplace_back(std::move(nk), c * x);
        }
      partial = std::move(next);
    }
    if (!on_basis) continue;
    for (const auto& [k, c] : partial) out.add(k, c);
  }
  return out;
}

TensorElement FoldBasis::from_basis(const VermaModule& module, const TensorElement& lambda) {
  TensorElement out;
  for (const auto& [key, c] : lambda) out += c * module.from_words(key);
  return out;
}

std::vector<FoldKey> FoldBasis::tuples(int folds, const Coloring& total) {
  std::vector<FoldKey> out;
  const int rank = engine_->datum().rank();
  FoldKey cur;
  std::function<void(int, const Coloring&)> rec = [&](int f, const Coloring& left) {
    if (f == folds - 1) {
      for (const Word& w : basis(left)) {
        cur.push_back(w);
        out.push_back(cur);
        cur.pop_back();
      }
      return;
    }
    for (const Coloring& c : colorings_up_to(rank, left.total(), true)) {
      if (!(c <= left)) continue;
      for (const Word& w : basis(c)) {
        cur.push_back(w);
        rec(f + 1, left - c);
        cur.pop_back();
      }
    }
  };
  if (folds > 0) rec(0, total);
  return out;
}

Braiding::Braiding(std::shared_ptr<FoldBasis> basis, std::shared_ptr<PairingEngine> engine, int x, int y,
                   int truncation, Triangular shape)
    : basis_(std::move(basis)),
      engine_(engine),
      source_(engine, {x, y}),
      target_(engine, {y, x}),
      truncation_(truncation),
      shape_(shape) {
  const CartanDatum& datum = engine_->datum();
  const int rank = datum.rank();
  solved_ = true;
  for (const Coloring& t : colorings_up_to(rank, truncation, true)) {
    const auto tuples = basis_->tuples(2, t);
    std::map<std::pair<FoldKey, FoldKey>, std::size_t> unknown;
    std::vector<std::pair<FoldKey, FoldKey>> unknown_keys;
    for (const FoldKey& tk : tuples)
      for (const FoldKey& sk : tuples)
        if (allowed(tk, sk)) {
          unknown.emplace(std::make_pair(tk, sk), unknown_keys.size());
          unknown_keys.emplace_back(tk, sk);
        }

    std::vector<std::map<std::size_t, Scalar>> rows;
    std::vector<Scalar> rhs;
    auto add_equation = [&](std::map<std::size_t, Scalar> row, Scalar b) {
      if (row.empty() && b.is_zero()) return;
      rows.push_back(std::move(row));
      rhs.push_back(std::move(b));
    };

    if (t.total() == 0) {
      std::map<std::size_t, Scalar> row;
      const FoldKey vac(2);
      if (auto it = unknown.find({vac, vac}); it != unknown.end()) row[it->second] = Scalar(1L);
      add_equation(std::move(row), Scalar(1L));
    }
    for (int a = 0; a < rank; ++a) {
      if (t[a] == 0) continue;
      const Coloring lower = t - Coloring::root(rank, a);
      const auto lower_tuples = basis_->tuples(2, lower);
      // B F z = F' B z for z one weight lower
      for (const FoldKey& z : lower_tuples) {
        const TensorElement fz = basis_->to_basis(source_.act_F(a, 1, source_.from_words(z)));
        const TensorElement rhs_vec =
            basis_->to_basis(target_.act_F(a, 1, basis_->from_basis(target_, apply(TensorElement(z)))));
        for (const FoldKey& tk : tuples) {
          std::map<std::size_t, Scalar> row;
          for (const auto& [sk, c] : fz)
            if (auto it = unknown.find({tk, sk}); it != unknown.end()) row[it->second] += c;
          add_equation(std::move(row), rhs_vec.coefficient(tk));
        }
      }
      // E' B s = B E s
      std::map<FoldKey, TensorElement> e_target;
      for (const FoldKey& tk : tuples) e_target[tk] = basis_->to_basis(target_.act_E(a, target_.from_words(tk)));
      for (const FoldKey& sk : tuples) {
        const TensorElement bes = apply(basis_->to_basis(source_.act_E(a, source_.from_words(sk))));
        for (const FoldKey& low : lower_tuples) {
          std::map<std::size_t, Scalar> row;
          for (const FoldKey& tk : tuples) {
            const Scalar c = e_target[tk].coefficient(low);
            if (c.is_zero()) continue;
            if (auto it = unknown.find({tk, sk}); it != unknown.end()) row[it->second] += c;
          }
          add_equation(std::move(row), bes.coefficient(low));
        }
      }
    }

    ScalarMatrix a(rows.size(), unknown_keys.size());
    for (std::size_t r = 0; r < rows.size(); ++r)
      for (const auto& [j, c] : rows[r]) a(r, j) = c;
    const SolveResult res = solve(a, rhs);
    BlockReport report;
    report.weight = t;
    report.unknowns = unknown_keys.size();
    report.equations = rows.size();
    report.rank = res.rank;
    switch (res.status) {
      case SolveResult::Status::unique: report.status = "unique"; break;
      case SolveResult::Status::underdetermined: report.status = "underdetermined"; break;
      case SolveResult::Status::inconsistent: report.status = "inconsistent"; break;
    }
    reports_.push_back(report);
    if (res.status != SolveResult::Status::unique) {
      solved_ = false;
      return;
    }
    for (const FoldKey& sk : tuples) op_[sk];
    for (std::size_t j = 0; j < unknown_keys.size(); ++j)
      op_[unknown_keys[j].second].add(unknown_keys[j].first, res.x[j]);
  }
}

bool Braiding::allowed(const FoldKey& target, const FoldKey& source) const {
  const int rank = engine_->datum().rank();
  const Coloring c_source = Coloring::content(source[0], rank);
  const Coloring c_target = Coloring::content(target[1], rank);
  if (c_source == c_target) return target[0] == source[1] && target[1] == source[0];
  return shape_ == Triangular::lower ? c_target <= c_source : c_source <= c_target;
}

TensorElement Braiding::apply(const TensorElement& lambda) const {
  TensorElement out;
  for (const auto& [key, c] : lambda) {
    auto it = op_.find(key);
    if (it == op_.end()) throw std::out_of_range("braiding applied outside its solved range");
    out += c * it->second;
  }
  return out;
}

ScalarMatrix Braiding::block_matrix(const Coloring& t, std::vector<FoldKey>* rows, std::vector<FoldKey>* cols) {
  const auto tuples = basis_->tuples(2, t);
  ScalarMatrix m(tuples.size(), tuples.size());
  for (std::size_t j = 0; j < tuples.size(); ++j) {
    const TensorElement& col = op_.at(tuples[j]);
    for (std::size_t i = 0; i < tuples.size(); ++i) m(i, j) = col.coefficient(tuples[i]);
  }
  if (rows) *rows = tuples;
  if (cols) *cols = tuples;
  return m;
}

const BasisOperator& Braiding::inverse_matrix() {
  if (have_inverse_) return inverse_;
  if (!solved_) throw std::logic_error("braiding was not solved");
  for (const Coloring& t : colorings_up_to(engine_->datum().rank(), truncation_, true)) {
    std::vector<FoldKey> keys;
    const ScalarMatrix inv = inverse(block_matrix(t, &keys, nullptr));
    for (std::size_t j = 0; j < keys.size(); ++j) {
      TensorElement col;
      for (std::size_t i = 0; i < keys.size(); ++i) col.add(keys[i], inv(i, j));
      inverse_[keys[j]] = std::move(col);
    }
  }
  have_inverse_ = true;
  return inverse_;
}

std::map<Coloring, Scalar> Braiding::block_determinants() {
  std::map<Coloring, Scalar> out;
  for (const Coloring& t : colorings_up_to(engine_->datum().rank(), truncation_, true))
    out[t] = determinant(block_matrix(t));
  return out;
}

bool Braiding::check_equivariance(std::string* failure) {
  if (!solved_) return false;
  const int rank = engine_->datum().rank();
  auto fail = [&](const std::string& what, const FoldKey& key) {
    if (failure) {
      std::ostringstream os;
      os << what << " at (" << key[0].to_string() << " | " << key[1].to_string() << ")";
      *failure = os.str();
    }
    return false;
  };
  for (const Coloring& t : colorings_up_to(rank, truncation_, true))
    for (const FoldKey& sk : basis_->tuples(2, t)) {
      const TensorElement s_vec = source_.from_words(sk);
      const TensorElement b_vec = basis_->from_basis(target_, apply(TensorElement(sk)));
      for (int a = 0; a < rank; ++a) {
        if (t.total() < truncation_) {
          const TensorElement lhs = apply(basis_->to_basis(source_.act_F(a, 1, s_vec)));
          const TensorElement rhs = basis_->to_basis(target_.act_F(a, 1, b_vec));
          if (!(lhs == rhs)) return fail("F" + std::to_string(a + 1), sk);
        }
        const TensorElement lhs_e = apply(basis_->to_basis(source_.act_E(a, s_vec)));
        const TensorElement rhs_e = basis_->to_basis(target_.act_E(a, b_vec));
        if (!(lhs_e == rhs_e)) return fail("E" + std::to_string(a + 1), sk);
        for (int power : {1, -1}) {
          const TensorElement lhs_k = apply(basis_->to_basis(source_.act_K(a, power, s_vec)));
          const TensorElement rhs_k = basis_->to_basis(target_.act_K(a, power, b_vec));
          if (!(lhs_k == rhs_k)) return fail("K" + std::to_string(a + 1), sk);
        }
      }
    }
  return true;
}

std::vector<BraidLetter> parse_braid_word(const std::string& text) {
  std::vector<BraidLetter> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    std::size_t used = 0;
    int value = 0;
    try {
      value = std::stoi(item, &used);
    } catch (const std::exception&) {
      throw std::invalid_argument("bad braid generator '" + item + "'");
    }
    if (used != item.size() || value == 0) throw std::invalid_argument("bad braid generator '" + item + "'");
    out.push_back({std::abs(value), value < 0});
  }
  return out;
}

BraidRepresentation::BraidRepresentation(std::shared_ptr<PairingEngine> engine, std::vector<int> labels,
                                         int truncation, Triangular shape)
    : engine_(std::move(engine)),
      basis_(std::make_shared<FoldBasis>(engine_)),
      labels_(std::move(labels)),
      truncation_(truncation),
      shape_(shape) {
  if (labels_.size() < 2) throw std::invalid_argument("a braid needs at least two strands");
}

Braiding& BraidRepresentation::braiding(int x, int y) {
  auto& slot = braidings_[{x, y}];
  if (!slot) slot = std::make_unique<Braiding>(basis_, engine_, x, y, truncation_, shape_);
  if (!slot->solved()) {
    const BlockReport& r = slot->reports().back();
    throw std::runtime_error("intertwiner system " + r.status + " at weight " + r.weight.to_string());
  }
  return *slot;
}

std::vector<FoldKey> BraidRepresentation::basis_tuples() {
  std::vector<FoldKey> out;
  for (const Coloring& t : colorings_up_to(engine_->datum().rank(), truncation_, true))
    for (FoldKey& k : basis_->tuples(static_cast<int>(labels_.size()), t)) out.push_back(std::move(k));
  return out;
}

BasisOperator BraidRepresentation::matrix(const std::vector<BraidLetter>& word) {
  const int n = static_cast<int>(labels_.size());
  std::vector<int> perm(n);
  for (int f = 0; f < n; ++f) perm[f] = f;
  for (const BraidLetter& l : word) {
    if (l.index < 1 || l.index >= n) throw std::out_of_range("braid generator index out of range");
    std::swap(perm[l.index - 1], perm[l.index]);
  }
  const bool equal = std::all_of(labels_.begin(), labels_.end(), [&](int p) { return p == labels_[0]; });
  bool pure = true;
  for (int f = 0; f < n; ++f) pure = pure && perm[f] == f;
  if (!equal && !pure) throw std::invalid_argument("non-pure braids need equal parameters on every strand");

  BasisOperator out;
  for (const FoldKey& start : basis_tuples()) {
    TensorElement vec(start);
    std::vector<int> labels = labels_;
    for (auto it = word.rbegin(); it != word.rend(); ++it) {
      const int i = it->index - 1;
      const int x = labels[i], y = labels[i + 1];
      const BasisOperator& op = it->inverse ? braiding(y, x).inverse_matrix() : braiding(x, y).matrix();
      TensorElement next;
      for (const auto& [key, c] : vec) {
        const TensorElement& image = op.at(FoldKey{key[i], key[i + 1]});
        for (const auto& [pk, d] : image) {
          FoldKey k = key;
          k[i] = pk[0];
          k[i + 1] = pk[1];
          next.add(k, c * d);
        }
      }
      vec = std::move(next);
      std::swap(labels[i], labels[i + 1]);
    }
    out[start] = std::move(vec);
  }
  return out;
}

std::map<Coloring, bool> BraidRepresentation::compare(const std::vector<BraidLetter>& a,
                                                      const std::vector<BraidLetter>& b) {
  const BasisOperator ma = matrix(a), mb = matrix(b);
  const int rank = engine_->datum().rank();
  std::map<Coloring, bool> out;
  for (const auto& [key, col] : ma) {
    Coloring t = Coloring::zero(rank);
    for (const Word& w : key) t = t + Coloring::content(w, rank);
    auto [it, inserted] = out.emplace(t, true);
    if (!(col == mb.at(key))) it->second = false;
  }
  return out;
}

YbeReport ybe_check(const CartanDatum& datum, int truncation, Triangular shape) {
  auto engine = std::make_shared<PairingEngine>(datum);
  YbeReport report;
  {
    Braiding b(std::make_shared<FoldBasis>(engine), engine, 1, 1, truncation, shape);
    report.solve_reports = b.reports();
    if (!b.solved()) {
      report.pass = false;
      return report;
    }
  }
  BraidRepresentation rep(engine, {1, 1, 1}, truncation, shape);
  report.blocks = rep.compare(parse_braid_word("1,2,1"), parse_braid_word("2,1,2"));
  for (const auto& [t, ok] : report.blocks) report.pass = report.pass && ok;
  return report;
}

}  // namespace qsh
