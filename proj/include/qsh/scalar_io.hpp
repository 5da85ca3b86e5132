#pragma once

// Naming of exponent slots, text printing and the JSON scalar schema
//   {"num": [[coef, e_v, e_s(1,1), ...], ...], "den": [...]}.
// Slot order: v first, then s(p,i) for p = 1..punctures, i = 1..rank with i
// varying fastest.

#include <string>
#include <vector>

#include <json.hpp>

#include "qsh/fraction.hpp"

namespace qsh {

struct SymbolTable {
  int rank = 0;
  int punctures = 0;

  std::size_t used_slots() const { return 1 + static_cast<std::size_t>(rank * punctures); }
  // p and i are 1-based.
  std::size_t slot(int p, int i) const;
  std::string name(std::size_t slot) const;
  std::vector<std::string> slot_names() const;
};

// Text form.  Polynomials reparse in the expression language; fractions print
// as (num)/(den), which it does not accept.  Uses q = v^2 whenever every v
// exponent is even (and q_notation is set).
std::string to_string(const LaurentPoly& p, const SymbolTable& symbols = {}, bool q_notation = true);
std::string to_string(const ScalarFraction& f, const SymbolTable& symbols = {}, bool q_notation = true);

nlohmann::json to_json(const LaurentPoly& p, const SymbolTable& symbols);
nlohmann::json to_json(const ScalarFraction& f, const SymbolTable& symbols);
ScalarFraction scalar_from_json(const nlohmann::json& j);

// Slot-order header emitted alongside serialized scalars.
nlohmann::json slot_header(const SymbolTable& symbols);

}  // namespace qsh
