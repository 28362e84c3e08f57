#pragma once

#include <optional>
#include <set>
#include <string>
#include <vector>

#include "solvcoh/model.hpp"

namespace solvcoh {

/// Nilmanifold family of complex dimension 4n-2 (n >= 2), unit metric, no
/// characters. Throws std::invalid_argument for n < 2.
ModelData bigalke_rollenske(int n);

/// Flat model: n coframe elements, all differentials zero.
ModelData torus(int n);

/// Solvmanifold family with coframe phi0, phi1..phin and
/// d phi^i = -1/2 lambda_i (phi0 + phibar0) ^ phi^i. The lattice parameter
/// enters as t, so a weight c gives a well-defined function iff t*c is an
/// integer.
struct NakamuraParams {
  std::vector<Rational> lambdas;
  Rational t{1};
};

struct NakamuraFlags {
  /// Every weight c_IJ with t*c_IJ integral is zero.
  bool only_trivial_integral_weights = false;
  /// Some disjoint I, J have t*c_IJ a nonzero integer.
  bool disjoint_nonzero_integral_weight = false;
  /// Witness (I, J) for the previous flag, as 1-based lambda indices.
  std::optional<std::pair<std::vector<int>, std::vector<int>>> witness;
  bool torus = false;
};

struct NakamuraModel {
  ModelData data;
  NakamuraFlags flags;
};

/// Throws std::invalid_argument unless sum(lambdas) = 0, some lambda is
/// nonzero and t > 0. One basis character "f" of weight 1/t; the default
/// character set is every f^k with k/t an admissible weight.
NakamuraModel nakamura(const NakamuraParams& params);

/// All c_IJ = sum_{i in I} lambda_i + sum_{j in J} lambda_j with t*c_IJ
/// integral (I, J ranging over subsets of {1..n}).
std::set<Rational> admissible_characters(const NakamuraParams& params);

/// c_IJ for explicit index sets.
Rational nakamura_weight(const NakamuraParams& params, const std::vector<int>& I, const std::vector<int>& J);

/// Coframe phi1..phi2n, psi1..psi2m with eta = phi1 + phibar2 + phi3 + ...,
/// d psi^{2j+1} = -lambda eta ^ psi^{2j+1}, d psi^{2j+2} = lambda conj(eta) ^ psi^{2j+2}.
/// Characters beta1 (odd psi) and beta2 (even psi); the default character
/// set has exponents in {-1,0,1}^2.
struct SemidirectParams {
  int n = 1;
  int m = 1;
  Rational lambda{1};
  std::vector<long> ks;
};

ModelData semidirect_family(const SemidirectParams& params);

/// sigma = phi1 + ... + phi2n in the semidirect coframe.
Element semidirect_sigma(const ManifoldModel& m, int n);

}  // namespace solvcoh
