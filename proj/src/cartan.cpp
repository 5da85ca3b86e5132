#include "qsh/cartan.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <sstream>

#include <gmpxx.h>

namespace qsh {

Word::Word(std::initializer_list<int> letters) {
  for (int l : letters) push_back(l);
}

Word Word::erase(std::size_t pos) const {
  std::string s = letters_;
  s.erase(pos, 1);
  return Word(std::move(s));
}

std::string Word::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < size(); ++i) {
    if (i) out += ",";
    out += std::to_string((*this)[i] + 1);
  }
  return out;
}

Word Word::parse(const std::string& text) {
  Word w;
  if (text.empty()) return w;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::size_t used = 0;
    int x = 0;
    try {
      x = std::stoi(item, &used);
    } catch (const std::exception&) {
      throw std::invalid_argument("bad word letter '" + item + "'");
    }
    if (used != item.size() || x < 1 || x > 255)
      throw std::invalid_argument("bad word letter '" + item + "'");
    w.push_back(x - 1);
  }
  return w;
}

Word repeat_letter(int letter, int count) {
  return Word(std::string(static_cast<std::size_t>(count), static_cast<char>(letter)));
}

Coloring::Coloring(std::vector<int> counts) : counts_(std::move(counts)) {}

Coloring Coloring::root(int rank, int i, int mult) {
  std::vector<int> c(rank, 0);
  c.at(i) = mult;
  return Coloring(std::move(c));
}

Coloring Coloring::content(const Word& w, int rank) {
  std::vector<int> c(rank, 0);
  for (std::size_t k = 0; k < w.size(); ++k) {
    if (w[k] >= rank) throw std::out_of_range("word letter " + std::to_string(w[k] + 1) + " exceeds rank");
    ++c[w[k]];
  }
  return Coloring(std::move(c));
}

Coloring Coloring::parse(const std::string& text, int rank) {
  std::vector<int> c;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::size_t used = 0;
    int x = -1;
    try {
      x = std::stoi(item, &used);
    } catch (const std::exception&) {
      throw std::invalid_argument("bad weight entry '" + item + "'");
    }
    if (used != item.size() || x < 0) throw std::invalid_argument("bad weight entry '" + item + "'");
    c.push_back(x);
  }
  if (static_cast<int>(c.size()) != rank)
    throw std::invalid_argument("weight '" + text + "' has " + std::to_string(c.size()) +
                                " entries, datum has rank " + std::to_string(rank));
  return Coloring(std::move(c));
}

int Coloring::total() const { return std::accumulate(counts_.begin(), counts_.end(), 0); }

bool Coloring::is_nonnegative() const {
  return std::all_of(counts_.begin(), counts_.end(), [](int x) { return x >= 0; });
}

bool Coloring::operator<=(const Coloring& o) const {
  for (std::size_t i = 0; i < counts_.size(); ++i)
    if (counts_[i] > o.counts_[i]) return false;
  return true;
}

Coloring Coloring::operator+(const Coloring& o) const {
  std::vector<int> c = counts_;
  for (std::size_t i = 0; i < c.size(); ++i) c[i] += o.counts_.at(i);
  return Coloring(std::move(c));
}

Coloring Coloring::operator-(const Coloring& o) const {
  std::vector<int> c = counts_;
  for (std::size_t i = 0; i < c.size(); ++i) c[i] -= o.counts_.at(i);
  return Coloring(std::move(c));
}

std::string Coloring::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < counts_.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(counts_[i]);
  }
  return out;
}

std::vector<std::string> datum_violations(const std::vector<std::vector<int>>& a, const std::vector<int>& d) {
  std::vector<std::string> out;
  const std::size_t n = a.size();
  if (n == 0) out.push_back("empty Cartan matrix");
  for (std::size_t i = 0; i < n; ++i)
    if (a[i].size() != n) {
      out.push_back("Cartan matrix is not square (row " + std::to_string(i + 1) + ")");
      return out;
    }
  if (d.size() != n) {
    out.push_back("symmetrizer has " + std::to_string(d.size()) + " entries, expected " + std::to_string(n));
    return out;
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (d[i] <= 0) out.push_back("symmetrizer entry d" + std::to_string(i + 1) + " is not positive");
    if (a[i][i] != 2) out.push_back("diagonal entry a" + std::to_string(i + 1) + std::to_string(i + 1) + " != 2");
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j) continue;
      if (a[i][j] > 0)
        out.push_back("positive off-diagonal entry a(" + std::to_string(i + 1) + "," + std::to_string(j + 1) + ")");
      if (j > i && d[i] * a[i][j] != d[j] * a[j][i])
        out.push_back("not symmetrizable at (" + std::to_string(i + 1) + "," + std::to_string(j + 1) +
                      "): d_i a_ij != d_j a_ji");
      if (j > i && (a[i][j] == 0) != (a[j][i] == 0))
        out.push_back("a(" + std::to_string(i + 1) + "," + std::to_string(j + 1) + ") = 0 but transpose is not");
    }
  }
  return out;
}

CartanDatum::CartanDatum(std::vector<std::vector<int>> a, std::vector<int> d, std::string name)
    : a_(std::move(a)), d_(std::move(d)), name_(std::move(name)) {
  auto v = datum_violations(a_, d_);
  if (!v.empty()) {
    std::string msg = "invalid Cartan datum:";
    for (const auto& s : v) msg += " " + s + ";";
    throw DatumError(msg, v);
  }
  if (a_.size() > 255) throw DatumError("rank too large", {"rank exceeds 255"});
  const int n = rank();
  b_.assign(n, std::vector<int>(n, 0));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) b_[i][j] = d_[i] * a_[i][j];
}

void CartanDatum::check_index(int i) const {
  if (i < 0 || i >= rank())
    throw std::out_of_range("root index " + std::to_string(i + 1) + " out of range 1.." + std::to_string(rank()));
}

int CartanDatum::inner(int i, int j) const {
  check_index(i);
  check_index(j);
  return b_[i][j];
}

int CartanDatum::inner(const Coloring& c1, const Coloring& c2) const {
  int s = 0;
  for (int i = 0; i < rank(); ++i)
    for (int j = 0; j < rank(); ++j) s += c1[i] * c2[j] * b_[i][j];
  return s;
}

int CartanDatum::inner(int i, const Coloring& c) const {
  check_index(i);
  int s = 0;
  for (int j = 0; j < rank(); ++j) s += b_[i][j] * c[j];
  return s;
}

bool CartanDatum::positive_definite() const {
  // Sylvester: all leading principal minors of (d_i a_ij) positive (Bareiss).
  const int n = rank();
  std::vector<std::vector<mpz_class>> m(n, std::vector<mpz_class>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) m[i][j] = b_[i][j];
  mpz_class prev = 1;
  for (int k = 0; k < n; ++k) {
    if (m[k][k] <= 0) return false;
    for (int i = k + 1; i < n; ++i)
      for (int j = k + 1; j < n; ++j) m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
    prev = m[k][k];
  }
  return true;
}

namespace {

// Symmetric form (a_i,a_j) for the named types, Bourbaki numbering.
std::vector<std::vector<int>> form_for(char type, int n) {
  std::vector<std::vector<int>> b(n, std::vector<int>(n, 0));
  auto link = [&](int i, int j, int val) { b[i][j] = b[j][i] = val; };
  switch (type) {
    case 'A':
      for (int i = 0; i < n; ++i) b[i][i] = 2;
      for (int i = 0; i + 1 < n; ++i) link(i, i + 1, -1);
      break;
    case 'B':  // a_1..a_{n-1} long, a_n short
      for (int i = 0; i < n; ++i) b[i][i] = i + 1 < n ? 4 : 2;
      for (int i = 0; i + 1 < n; ++i) link(i, i + 1, -2);
      break;
    case 'C':  // a_1..a_{n-1} short, a_n long
      for (int i = 0; i < n; ++i) b[i][i] = i + 1 < n ? 2 : 4;
      for (int i = 0; i + 2 < n; ++i) link(i, i + 1, -1);
      link(n - 2, n - 1, -2);
      break;
    case 'D':
      for (int i = 0; i < n; ++i) b[i][i] = 2;
      for (int i = 0; i + 2 < n - 1; ++i) link(i, i + 1, -1);
      link(n - 3, n - 2, -1);
      link(n - 3, n - 1, -1);
      break;
    case 'E':
      for (int i = 0; i < n; ++i) b[i][i] = 2;
      link(0, 2, -1);
      link(1, 3, -1);
      for (int i = 2; i + 1 < n; ++i) link(i, i + 1, -1);
      break;
    case 'F':
      b[0][0] = b[1][1] = 4;
      b[2][2] = b[3][3] = 2;
      link(0, 1, -2);
      link(1, 2, -2);
      link(2, 3, -1);
      break;
    case 'G':
      b[0][0] = 2;
      b[1][1] = 6;
      link(0, 1, -3);
      break;
    default:
      throw std::invalid_argument(std::string("unknown Cartan type ") + type);
  }
  return b;
}

CartanDatum simple_named(const std::string& name) {
  if (name.size() < 2) throw std::invalid_argument("unknown Cartan type '" + name + "'");
  const char type = static_cast<char>(std::toupper(static_cast<unsigned char>(name[0])));
  int n = 0;
  try {
    std::size_t used = 0;
    n = std::stoi(name.substr(1), &used);
    if (used != name.size() - 1) throw std::invalid_argument("");
  } catch (const std::exception&) {
    throw std::invalid_argument("unknown Cartan type '" + name + "'");
  }
  bool ok = false;
  switch (type) {
    case 'A': ok = n >= 1; break;
    case 'B': ok = n >= 2; break;
    case 'C': ok = n >= 2; break;
    case 'D': ok = n >= 4; break;
    case 'E': ok = n >= 6 && n <= 8; break;
    case 'F': ok = n == 4; break;
    case 'G': ok = n == 2; break;
    default: ok = false;
  }
  if (!ok) throw std::invalid_argument("unknown Cartan type '" + name + "'");
  auto b = form_for(type, n);
  std::vector<std::vector<int>> a(n, std::vector<int>(n));
  std::vector<int> d(n);
  for (int i = 0; i < n; ++i) {
    d[i] = b[i][i] / 2;
    for (int j = 0; j < n; ++j) a[i][j] = b[i][j] / d[i];
  }
  return CartanDatum(std::move(a), std::move(d), name);
}

}  // namespace

CartanDatum CartanDatum::named(const std::string& name) {
  // Products of simple types are written "A1xA1".
  std::vector<CartanDatum> parts;
  std::size_t start = 0;
  while (start <= name.size()) {
    std::size_t x = name.find_first_of("xX", start);
    std::string piece = name.substr(start, x == std::string::npos ? std::string::npos : x - start);
    parts.push_back(simple_named(piece));
    if (x == std::string::npos) break;
    start = x + 1;
  }
  if (parts.size() == 1) return parts.front();
  int n = 0;
  for (const auto& p : parts) n += p.rank();
  std::vector<std::vector<int>> a(n, std::vector<int>(n, 0));
  std::vector<int> d;
  int off = 0;
  for (const auto& p : parts) {
    for (int i = 0; i < p.rank(); ++i) {
      d.push_back(p.d(i));
      for (int j = 0; j < p.rank(); ++j) a[off + i][off + j] = p.a(i, j);
    }
    off += p.rank();
  }
  return CartanDatum(std::move(a), std::move(d), name);
}

std::uint64_t word_count(const Coloring& c) {
  // multinomial(m; c_1..c_l) built as a product of binomials
  mpz_class r = 1;
  int acc = 0;
  for (int x : c.counts()) {
    mpz_class b;
    mpz_bin_uiui(b.get_mpz_t(), static_cast<unsigned long>(acc + x), static_cast<unsigned long>(x));
    r *= b;
    acc += x;
  }
  if (!r.fits_ulong_p()) return UINT64_MAX;
  return r.get_ui();
}

std::vector<Word> enumerate_words(const Coloring& c, int max_weight) {
  if (!c.is_nonnegative()) throw std::invalid_argument("coloring has negative entries");
  if (c.total() > max_weight)
    throw SizeBoundError("weight " + c.to_string() + " has m_c = " + std::to_string(c.total()) +
                             " > bound " + std::to_string(max_weight) + "; it would produce " +
                             std::to_string(word_count(c)) + " words",
                         word_count(c));
  std::vector<Word> out;
  out.reserve(word_count(c));
  std::vector<int> left = c.counts();
  Word cur;
  const int m = c.total();
  std::function<void()> rec = [&]() {
    if (static_cast<int>(cur.size()) == m) {
      out.push_back(cur);
      return;
    }
    for (int i = 0; i < c.rank(); ++i) {
      if (left[i] == 0) continue;
      --left[i];
      cur.push_back(i);
      rec();
      cur = cur.sub(0, cur.size() - 1);
      ++left[i];
    }
  };
  rec();
  return out;
}

std::vector<Coloring> colorings_up_to(int rank, int max_total, bool include_zero) {
  std::vector<Coloring> out;
  std::vector<int> cur(rank, 0);
  std::function<void(int, int)> rec = [&](int i, int budget) {
    if (i == rank) {
      Coloring c(cur);
      if (include_zero || c.total() > 0) out.push_back(c);
      return;
    }
    for (int k = 0; k <= budget; ++k) {
      cur[i] = k;
      rec(i + 1, budget - k);
    }
    cur[i] = 0;
  };
  rec(0, max_total);
  std::stable_sort(out.begin(), out.end(), [](const Coloring& a, const Coloring& b) {
    if (a.total() != b.total()) return a.total() < b.total();
    return a < b;
  });
  return out;
}

}  // namespace qsh
