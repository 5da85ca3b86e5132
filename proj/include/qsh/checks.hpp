#pragma once

// Verification suites shared by the command line tool and the acceptance
// binary.  Each returns itemized pass/fail results; nothing here throws on a
// failed identity.

#include <string>
#include <vector>

#include "qsh/braiding.hpp"
#include "qsh/braid_symmetries.hpp"
#include "qsh/verma.hpp"

namespace qsh {

struct CheckItem {
  std::string name;
  bool pass = false;
  std::string detail;
};

struct CheckReport {
  std::vector<CheckItem> items;
  bool pass() const;
  void add(std::string name, bool ok, std::string detail = "");
  void merge(const CheckReport& other, const std::string& prefix = "");
  std::size_t failures() const;
};

// pair(w[a], w[b]) = delta_ab / (1 - q_a^-1).
CheckReport pairing_base_check(PairingEngine& engine);
// iota(serre(i,j)) = 0 for every ordered pair; the alternating sums of
// lower degree do not vanish.
CheckReport serre_check(PairingEngine& engine);
// radical rank against words minus the Serre-ideal span, all 1 <= m_c <= max_total.
CheckReport dimension_check(PairingEngine& engine, int max_total);
// iota(w[a])^k = [k]! iota(DP(a,k)).
CheckReport divided_power_check(PairingEngine& engine, int kmax);

// [E_a, F_a^{(k+1)}] = F_a^{(k)} (v_a^-k K_a - v_a^k K_a^-1) on the one-fold
// module, all source weights with m_c <= max_weight.
CheckReport fundamental_relation_check(const VermaModule& module, FoldBasis& basis, int max_weight, int kmax);
// Every defining relation of U_q(g) on source weights m_c <= max_weight.
CheckReport relations_check(const VermaModule& module, FoldBasis& basis, int max_weight);
// The closed E formula against commuting E through words.
CheckReport e_decomposition_check(const VermaModule& module, int max_weight);
// <E^{[k]} x, y> = <x, F^{(k)} y> on word basis vectors, m_c <= max_weight;
// plus the divided power and Serre relations of the E^{[k]}.
CheckReport adjoint_check(const VermaModule& module, int max_weight);
// split(u m) = Delta(u) split(m) for u in F^{(k)} (k <= kmax), E, K^+-1.
CheckReport split_check(const VermaModule& module, FoldBasis& basis, int cut, int max_weight, int kmax);

CheckReport braiding_check(const CartanDatum& datum, int truncation, Triangular shape = Triangular::lower);

// r coassociative and multiplicative, the two pairing recursions agree,
// iota is multiplicative, T_i multiplicative and respecting Serre
// relations, truncation thresholds.
CheckReport structural_check(const CartanDatum& datum, int max_length);
CheckReport truncation_check(PairingEngine& engine, int max_total);

// Parser round trip on every non-empty, non-comment line of a corpus file.
CheckReport parser_check(const std::string& corpus_path);

// Runs acceptance criterion n (1..11).
CheckReport run_criterion(int n, const std::string& corpus_path);

}  // namespace qsh
