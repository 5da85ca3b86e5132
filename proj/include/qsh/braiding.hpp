#pragma once

// Braiding operators between Verma modules, solved weight block by weight
// block from the intertwining equations, and the braid group matrices they
// generate on truncated tensor powers.
//
// Everything here works in basis coordinates.  For each weight c of a
// single fold a set U_c of words is chosen greedily (lexicographic order)
// so that iota^(u), u in U_c, is a basis of the weight space; a tensor
// basis vector is a tuple of such words.
//
// Intertwiners M (x) M' -> M' (x) M are far from unique, so the solve
// restricts to triangular operators: a source vector with M-weight c maps
// into target vectors whose M-weight c' satisfies c' <= c (Triangular::lower)
// or c' >= c (Triangular::upper), and the c' = c part is the plain flip
// times a scalar.  With the vacuum normalization B(v0 (x) v0) = v0 (x) v0 the
// solution is then checked to be unique.

#include <map>
#include <memory>
#include <string>
#include <vector>

#include "qsh/linalg.hpp"
#include "qsh/verma.hpp"

namespace qsh {

class FoldBasis {
 public:
  explicit FoldBasis(std::shared_ptr<PairingEngine> engine) : engine_(std::move(engine)) {}

  const std::vector<Word>& basis(const Coloring& c);
  std::size_t dim(const Coloring& c) { return basis(c).size(); }

  // Basis-tuple coordinates of a tensor of normalized coordinate vectors
  // (every fold must lie in the image of iota^).
  TensorElement to_basis(const TensorElement& m);
  // The inverse: sum of lambda_b iota^(b_1) (x) ... (x) iota^(b_n).
  TensorElement from_basis(const VermaModule& module, const TensorElement& lambda);

  // All basis tuples of an n-fold tensor with total content t.
  std::vector<FoldKey> tuples(int folds, const Coloring& total);

 private:
  struct Block {
    std::vector<Word> words;
    std::map<Word, std::size_t> index;
    ScalarMatrix inverse;  // inverse of P(b, b') on U_c
  };
  Block& block(const Coloring& c);

  std::shared_ptr<PairingEngine> engine_;
  std::map<Coloring, Block> blocks_;
};

enum class Triangular { lower, upper };

// An operator given on basis tuples, column by column.
using BasisOperator = std::map<FoldKey, TensorElement>;

struct BlockReport {
  Coloring weight;
  std::size_t unknowns = 0;
  std::size_t equations = 0;
  std::size_t rank = 0;
  std::string status;  // "unique", "underdetermined", "inconsistent"
};

class Braiding {
 public:
  // B : M_x (x) M_y -> M_y (x) M_x on total weights <= truncation, where
  // M_p uses the symbols of puncture p.
  Braiding(std::shared_ptr<FoldBasis> basis, std::shared_ptr<PairingEngine> engine, int x, int y, int truncation,
           Triangular shape = Triangular::lower);

  bool solved() const { return solved_; }
  const std::vector<BlockReport>& reports() const { return reports_; }
  const BasisOperator& matrix() const { return op_; }
  const BasisOperator& inverse_matrix();

  // Verifies B u = u' B for u in {F_a, E_a, K_a^+-1} on every basis vector
  // whose image stays within the truncation.
  bool check_equivariance(std::string* failure = nullptr);
  // Exact determinant of each block.
  std::map<Coloring, Scalar> block_determinants();

  ScalarMatrix block_matrix(const Coloring& t, std::vector<FoldKey>* rows = nullptr, std::vector<FoldKey>* cols = nullptr);

 private:
  TensorElement apply(const TensorElement& lambda) const;  // lambda in source basis
  bool allowed(const FoldKey& target, const FoldKey& source) const;

  std::shared_ptr<FoldBasis> basis_;
  std::shared_ptr<PairingEngine> engine_;
  VermaModule source_, target_;
  int truncation_;
  Triangular shape_;
  bool solved_ = false;
  std::vector<BlockReport> reports_;
  BasisOperator op_, inverse_;
  bool have_inverse_ = false;
};

struct BraidLetter {
  int index;  // 1-based generator sigma_index
  bool inverse;
};

// "1,2,-1" -> sigma_1 sigma_2 sigma_1^-1 (applied right to left, as operators).
std::vector<BraidLetter> parse_braid_word(const std::string& text);

class BraidRepresentation {
 public:
  // labels[f] is the puncture symbol set of strand f; equal labels share
  // symbols.  Non-pure braids need all labels equal.
  BraidRepresentation(std::shared_ptr<PairingEngine> engine, std::vector<int> labels, int truncation,
                      Triangular shape = Triangular::lower);

  // The operator of a braid word on (M^{(x)n})_{<= truncation}, column by column
  // over the basis tuples.
  BasisOperator matrix(const std::vector<BraidLetter>& word);
  std::vector<FoldKey> basis_tuples();
  // Per total-weight comparison of two braid words.
  std::map<Coloring, bool> compare(const std::vector<BraidLetter>& a, const std::vector<BraidLetter>& b);
  Braiding& braiding(int x, int y);

 private:
  std::shared_ptr<PairingEngine> engine_;
  std::shared_ptr<FoldBasis> basis_;
  std::vector<int> labels_;
  int truncation_;
  Triangular shape_;
  std::map<std::pair<int, int>, std::unique_ptr<Braiding>> braidings_;
};

struct YbeReport {
  bool pass = true;
  std::vector<BlockReport> solve_reports;
  std::map<Coloring, bool> blocks;
};

YbeReport ybe_check(const CartanDatum& datum, int truncation, Triangular shape = Triangular::lower);

}  // namespace qsh
