#pragma once

// Cartan data, colorings (weights in N[simple roots]) and words.
//
// Convention: a_ij = 2(a_i, a_j)/(a_i, a_i), so the symmetrized form is
// (a_i, a_j) = d_i a_ij with (a_i, a_i) = 2 d_i.  Named presets follow
// Bourbaki numbering; in particular G2 has a_1 short:
//   G2: a = [[2,-3],[-1,2]], d = [1,3]
//   B2: a = [[2,-1],[-2,2]], d = [2,1]   (a_2 short)
//   C2: a = [[2,-2],[-1,2]], d = [1,2]   (a_1 short)
//
// Root indices are 0-based internally and 1-based at every text boundary.

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace qsh {

class SizeBoundError : public std::runtime_error {
 public:
  SizeBoundError(const std::string& what, std::uint64_t count)
      : std::runtime_error(what), count_(count) {}
  std::uint64_t count() const { return count_; }

 private:
  std::uint64_t count_;
};

class DatumError : public std::invalid_argument {
 public:
  DatumError(const std::string& what, std::vector<std::string> violations)
      : std::invalid_argument(what), violations_(std::move(violations)) {}
  const std::vector<std::string>& violations() const { return violations_; }

 private:
  std::vector<std::string> violations_;
};

using Letter = std::uint8_t;

// A word in the simple roots (pearl-necklace label).  Ordered
// lexicographically, shorter prefix first.
class Word {
 public:
  Word() = default;
  explicit Word(std::string letters) : letters_(std::move(letters)) {}
  Word(std::initializer_list<int> letters);  // 0-based letters

  std::size_t size() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }
  int operator[](std::size_t i) const { return static_cast<Letter>(letters_[i]); }
  const std::string& bytes() const { return letters_; }

  void push_back(int letter) { letters_.push_back(static_cast<char>(letter)); }
  Word operator+(const Word& o) const { return Word(letters_ + o.letters_); }
  Word erase(std::size_t pos) const;
  Word sub(std::size_t pos, std::size_t len = std::string::npos) const {
    return Word(letters_.substr(pos, len));
  }

  // "1,2,1" with 1-based letters; the empty word is "".
  std::string to_string() const;
  static Word parse(const std::string& text);  // inverse of to_string

  friend bool operator==(const Word&, const Word&) = default;
  friend auto operator<=>(const Word& a, const Word& b) {
    return std::lexicographical_compare_three_way(
        a.letters_.begin(), a.letters_.end(), b.letters_.begin(), b.letters_.end(),
        [](char x, char y) { return static_cast<Letter>(x) <=> static_cast<Letter>(y); });
  }

 private:
  std::string letters_;
};

Word repeat_letter(int letter, int count);

// Multiplicity of each simple root.
class Coloring {
 public:
  Coloring() = default;
  explicit Coloring(std::vector<int> counts);
  static Coloring zero(int rank) { return Coloring(std::vector<int>(rank, 0)); }
  static Coloring root(int rank, int i, int mult = 1);
  static Coloring content(const Word& w, int rank);
  // "2,1"
  static Coloring parse(const std::string& text, int rank);

  int rank() const { return static_cast<int>(counts_.size()); }
  int operator[](int i) const { return counts_[i]; }
  const std::vector<int>& counts() const { return counts_; }
  int total() const;  // m_c
  bool is_nonnegative() const;
  bool operator<=(const Coloring& o) const;  // componentwise

  Coloring operator+(const Coloring& o) const;
  Coloring operator-(const Coloring& o) const;
  std::string to_string() const;

  friend bool operator==(const Coloring&, const Coloring&) = default;
  friend auto operator<=>(const Coloring&, const Coloring&) = default;

 private:
  std::vector<int> counts_;
};

class CartanDatum {
 public:
  // Throws DatumError listing every violated condition.
  CartanDatum(std::vector<std::vector<int>> a, std::vector<int> d, std::string name = "");

  static CartanDatum named(const std::string& name);  // "A2", "B3", "G2", "E6", "A1xA1", ...

  int rank() const { return static_cast<int>(a_.size()); }
  const std::string& name() const { return name_; }
  int a(int i, int j) const { return a_.at(i).at(j); }
  int d(int i) const { return d_.at(i); }
  const std::vector<std::vector<int>>& matrix() const { return a_; }
  const std::vector<int>& symmetrizer() const { return d_; }

  // (a_i, a_j) = d_i a_ij.
  int inner(int i, int j) const;
  int inner(const Coloring& c1, const Coloring& c2) const;
  int inner(int i, const Coloring& c) const;
  bool positive_definite() const;

  // 1 - a_ij, the Serre degree.
  int serre_degree(int i, int j) const { return 1 - a(i, j); }

  void check_index(int i) const;

 private:
  std::vector<std::vector<int>> a_;
  std::vector<int> d_;
  std::vector<std::vector<int>> b_;  // d_i a_ij
  std::string name_;
};

// Structured validation result: the list of violated conditions, empty when valid.
std::vector<std::string> datum_violations(const std::vector<std::vector<int>>& a, const std::vector<int>& d);

// Number of words of the given content (multinomial coefficient).
std::uint64_t word_count(const Coloring& c);

// All words of content c in lexicographic order.  Throws SizeBoundError when
// m_c exceeds max_weight.
std::vector<Word> enumerate_words(const Coloring& c, int max_weight = 8);

// Every coloring with 1 <= m_c <= max_total, ordered by total then lexicographically.
std::vector<Coloring> colorings_up_to(int rank, int max_total, bool include_zero = false);

}  // namespace qsh
