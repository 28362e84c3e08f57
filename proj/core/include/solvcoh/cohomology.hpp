#pragma once

#include <optional>
#include <string>
#include <vector>

#include "solvcoh/model.hpp"

namespace solvcoh {

enum class Theory { dolbeault, bott_chern, aeppli, de_rham };
std::string to_string(Theory t);
/// Accepts "dolbeault", "bott_chern"/"bc", "aeppli", "de_rham"/"derham".
std::optional<Theory> parse_theory(std::string_view s);

struct CohomologyBlock {
  Character chi;
  int cocycle_dim = 0;
  int coboundary_rank = 0;
  std::vector<Element> representatives;
  int dimension() const { return static_cast<int>(representatives.size()); }
};

struct CohomologyBasis {
  Theory theory;
  /// For de Rham only the total degree p+q is meaningful.
  int p = 0;
  int q = 0;
  std::vector<Character> characters;
  std::vector<CohomologyBlock> blocks;

  int dimension() const;
  std::vector<Element> representatives() const;
};

/// Quotient basis per character block. For de Rham the block is the total
/// degree p+q. Representatives are reduced kernel vectors (one per free
/// column, ascending), kept when independent of the coboundaries.
CohomologyBasis cohomology(const ManifoldModel& m, Theory theory, const std::vector<Character>& s,
                           int p, int q);

/// Kernel of d on all monomials of total degree k with character chi, as
/// Elements; d-images of degree k-1 likewise.
CohomologyBasis de_rham_cohomology(const ManifoldModel& m, const std::vector<Character>& s, int k);

// ---------------------------------------------------------------------------
// Membership in span{op_i(domain_i)} + span{fixed}.

struct SpanSpec {
  struct OpTerm {
    OpKind kind;
    Bidegree domain;
  };
  std::vector<OpTerm> ops;
  std::vector<Element> fixed;
  /// Characters at which operator images are taken, in addition to those
  /// of the target and of the fixed elements.
  std::vector<Character> characters;
};

struct OpPreimage {
  OpKind kind;
  Element preimage;
};

/// target = sum_j fixed_coefficients[j] * fixed[j] + sum_i op_i(preimage_i).
struct MembershipWitness {
  Element target;
  std::vector<Scalar> fixed_coefficients;
  std::vector<OpPreimage> preimages;
};

struct MembershipResult {
  bool member = false;
  MembershipWitness witness;
  /// For non-members: y with y(g) = 0 on every spanning vector g and
  /// y(target) = target_value != 0. Evaluation is bilinear in coefficients.
  Element functional;
  Scalar target_value;
};

/// Throws std::invalid_argument when fixed elements or operator images have
/// a different bidegree than the target.
MembershipResult solve_membership(const ManifoldModel& m, const Element& target, const SpanSpec& space);

/// sum over common (character, monomial) keys of y_K * x_K.
Scalar evaluate_functional(const Element& y, const Element& x);

bool verify_witness(const ManifoldModel& m, const SpanSpec& space, const MembershipWitness& w);
/// Elimination-free check: y vanishes on every fixed element and on
/// op(f_chi e) for every domain monomial e and chi in the characters of y,
/// and y(target) != 0.
bool verify_functional(const ManifoldModel& m, const Element& target, const SpanSpec& space,
                       const Element& y);

// ---------------------------------------------------------------------------

struct DdbarRow {
  int p = 0;
  int q = 0;
  int bott_chern = 0;
  int dolbeault = 0;
  int aeppli = 0;
  int rank_bc_to_dolbeault = 0;
  int rank_dolbeault_to_aeppli = 0;
  bool isomorphic() const {
    return bott_chern == dolbeault && dolbeault == aeppli && rank_bc_to_dolbeault == bott_chern &&
           rank_dolbeault_to_aeppli == dolbeault;
  }
};

struct DdbarReport {
  std::vector<Character> characters;
  std::vector<DdbarRow> rows;
  bool holds = true;
};

/// Model-level check: all natural maps H_BC -> H_dbar -> H_A are isomorphisms.
DdbarReport ddbar_lemma_check(const ManifoldModel& m, const std::vector<Character>& s);

/// Aligned plain-text table: theory, bidegree, character, dimension.
std::string format_cohomology_table(const ManifoldModel& m, const std::vector<CohomologyBasis>& bases);

}  // namespace solvcoh
