#pragma once

#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "ajlab/ore.hpp"
#include "ajlab/potential.hpp"
#include "ajlab/qhg.hpp"

namespace ajlab {

/// poly = 0, tagged "gluing-<i>" or "longitude".
struct Equation {
  LaurentMPoly poly;
  std::string tag;
};

struct EquationSystem {
  std::vector<Equation> equations;
  /// Region variables, in gluing order.
  VarList unknowns;
  /// l = R / S when the longitude equation is S^2 l^2 - R^2.
  std::optional<RationalFunction> longitude_root;

  const Equation& longitude() const;
};

/// Gluing S_i - R_i from the q = 1 region ratios and the longitude from the color ratio, with
/// Qt_i renamed to the region variables, Q -> alpha^2 (longitude S^2 l^2 - R^2) or
/// Qm -> alpha (longitude S l^2 - R). Throws PoleError.
EquationSystem build_epsilon_system(const ProperQHTerm& F);

/// exp(w dPhi/dw) = 1 for each region variable and exp(alpha dPhi/dalpha) = l^2.
EquationSystem build_saddle_system(const Potential& P);

struct Identity {
  std::string identity;
  bool pass = false;
  std::string lhs, rhs, unit;
};

nlohmann::json to_json(const Identity& i);
nlohmann::json to_json(const std::vector<Identity>& report);

/// Equation-by-equation comparison up to associates; DomainError when the unknowns differ.
std::vector<Identity> compare_systems(const EquationSystem& a, const EquationSystem& b);

/// The five identities exp(v dPhi_c/dv) = eps(shift ratio of R_c) for v = w_j1..w_j4, alpha.
std::vector<Identity> prop_comp_check(const CrossingData& c, MinusForm form = MinusForm::corrected);

struct DiscardedFactor {
  LaurentMPoly factor;
  std::string reason;
};

struct APolyCandidate {
  LaurentMPoly poly;
  std::vector<DiscardedFactor> discarded;
  /// Eliminant of the squared longitude equals the product of both branches (up to units).
  std::optional<bool> branch_product_ok;
};

nlohmann::json to_json(const APolyCandidate& c);

/// Ascending region variables.
VarList default_order(const EquationSystem& s);

/// Iterated resultants in `order`, then cleanup in l. Throws DegeneracyError when a resultant
/// vanishes identically.
APolyCandidate eliminate(const EquationSystem& s, const VarList& order);

/// eps(P0) under Q -> alpha^2, E -> l (or Qm -> alpha, Em -> l^2) against A; the unit is
/// eps(P0) / A when that lies in Q(alpha).
Identity aj_compare(const OreOperator& P0, const LaurentMPoly& A);

/// A / (l - 1); DomainError when l - 1 does not divide A.
LaurentMPoly divide_abelian(const LaurentMPoly& A);

}  // namespace ajlab
