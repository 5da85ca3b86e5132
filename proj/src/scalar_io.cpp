#include "qsh/scalar_io.hpp"

#include <stdexcept>

namespace qsh {

std::size_t SymbolTable::slot(int p, int i) const {
  if (p < 1 || p > punctures || i < 1 || i > rank)
    throw std::out_of_range("symbol s(" + std::to_string(p) + "," + std::to_string(i) + ") not declared");
  std::size_t s = 1 + static_cast<std::size_t>((p - 1) * rank + (i - 1));
  if (s >= kSlots) throw std::out_of_range("too many puncture symbols for the exponent width");
  return s;
}

std::string SymbolTable::name(std::size_t s) const {
  if (s == 0) return "v";
  if (rank > 0 && s <= static_cast<std::size_t>(rank * punctures)) {
    const int k = static_cast<int>(s) - 1;
    return "s(" + std::to_string(k / rank + 1) + "," + std::to_string(k % rank + 1) + ")";
  }
  return "x" + std::to_string(s);
}

std::vector<std::string> SymbolTable::slot_names() const {
  std::vector<std::string> out;
  for (std::size_t s = 0; s < used_slots(); ++s) out.push_back(name(s));
  return out;
}

namespace {

bool even_v(const LaurentPoly& p) {
  for (const auto& [m, c] : p.terms())
    if (m.e[0] % 2 != 0) return false;
  return true;
}

std::string power(const std::string& base, int32_t e) {
  if (e == 1) return base;
  return base + "^" + std::to_string(e);
}

std::string monomial_string(const Monomial& m, const SymbolTable& symbols, bool use_q) {
  std::string out;
  auto append = [&](const std::string& f) {
    if (!out.empty()) out += "*";
    out += f;
  };
  if (m.e[0] != 0) append(use_q ? power("q", m.e[0] / 2) : power("v", m.e[0]));
  for (std::size_t s = 1; s < kSlots; ++s)
    if (m.e[s] != 0) append(power(symbols.name(s), m.e[s]));
  return out;
}

}  // namespace

std::string to_string(const LaurentPoly& p, const SymbolTable& symbols, bool q_notation) {
  if (p.is_zero()) return "0";
  const bool use_q = q_notation && even_v(p);
  std::string out;
  bool first = true;
  for (const auto& [m, c] : p.terms()) {
    Integer a = abs(c);
    if (first) {
      if (c < 0) out += "-";
    } else {
      out += c < 0 ? " - " : " + ";
    }
    first = false;
    std::string mono = monomial_string(m, symbols, use_q);
    if (mono.empty()) {
      out += a.get_str();
    } else {
      if (a != 1) out += a.get_str() + "*";
      out += mono;
    }
  }
  return out;
}

std::string to_string(const ScalarFraction& f, const SymbolTable& symbols, bool q_notation) {
  if (f.is_polynomial()) return to_string(f.num(), symbols, q_notation);
  // Use q only if both parts allow it, so the two halves read consistently.
  const bool use_q = q_notation && even_v(f.num()) && even_v(f.den());
  return "(" + to_string(f.num(), symbols, use_q) + ")/(" + to_string(f.den(), symbols, use_q) + ")";
}

namespace {

nlohmann::json integer_json(const Integer& c) {
  if (c.fits_slong_p()) return c.get_si();
  return c.get_str();
}

Integer integer_from_json(const nlohmann::json& j) {
  if (j.is_string()) return Integer(j.get<std::string>());
  return Integer(j.get<long>());
}

}  // namespace

nlohmann::json to_json(const LaurentPoly& p, const SymbolTable& symbols) {
  nlohmann::json arr = nlohmann::json::array();
  std::size_t width = symbols.used_slots();
  for (const auto& [m, c] : p.terms()) {
    for (std::size_t s = width; s < kSlots; ++s)
      if (m.e[s] != 0) width = s + 1;
  }
  for (const auto& [m, c] : p.terms()) {
    nlohmann::json row = nlohmann::json::array();
    row.push_back(integer_json(c));
    for (std::size_t s = 0; s < width; ++s) row.push_back(m.e[s]);
    arr.push_back(std::move(row));
  }
  return arr;
}

nlohmann::json to_json(const ScalarFraction& f, const SymbolTable& symbols) {
  return {{"num", to_json(f.num(), symbols)}, {"den", to_json(f.den(), symbols)}};
}

ScalarFraction scalar_from_json(const nlohmann::json& j) {
  auto poly = [](const nlohmann::json& arr) {
    std::vector<LaurentPoly::Term> terms;
    for (const auto& row : arr) {
      if (!row.is_array() || row.empty()) throw std::invalid_argument("malformed scalar term");
      if (row.size() - 1 > kSlots) throw std::invalid_argument("scalar term has too many slots");
      Monomial m;
      for (std::size_t s = 1; s < row.size(); ++s) m.e[s - 1] = row[s].get<int32_t>();
      terms.emplace_back(m, integer_from_json(row[0]));
    }
    return LaurentPoly::from_terms(std::move(terms));
  };
  return ScalarFraction(poly(j.at("num")), poly(j.at("den")));
}

nlohmann::json slot_header(const SymbolTable& symbols) { return symbols.slot_names(); }

}  // namespace qsh
