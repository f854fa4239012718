#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "atoric/base.hpp"
#include "atoric/labels.hpp"
#include "atoric/report.hpp"

namespace atoric {

/// A representative of a complete almost-toric ingredient: marked base
/// diagram, one focus-focus label and one twisting index per node.
struct CompleteIngredient {
  BaseDiagram base;
  std::vector<FocusLabel> labels;
  std::vector<long> k;

  std::size_t node_count() const { return base.nodes.size(); }
  friend bool operator==(const CompleteIngredient&, const CompleteIngredient&) = default;
};

/// sigma_i in {+1, -1}; delta_k_i is the correction term added to -k_i when
/// sigma_i = -1. It depends on reference systems that are not constructed
/// here, so callers supply it (0 by default).
struct SignVector {
  std::vector<int> sigma;
  std::vector<long> delta_k;

  static SignVector with_zero_deltas(std::vector<int> sigma);
};

/// Diagram validation, label axioms, and multiplicity compatibility.
ValidationReport validate_ingredient(const CompleteIngredient& ingredient);

/// A marked isomorphism G with G.I = I', found by find_iso within `bound`;
/// labels and twisting indices must agree slot by slot.
std::optional<AffineIso> ingredients_equivalent(const CompleteIngredient& a, const CompleteIngredient& b, int bound);

/// The image of an ingredient under a diagram isomorphism (labels and k unchanged).
CompleteIngredient apply_iso(const AffineIso& g, const CompleteIngredient& ingredient);

/// 0-based permutation of node slots.
using Permutation = std::vector<std::size_t>;

/// Throws std::invalid_argument if rho is not a permutation of {0..f-1}.
void require_permutation(const Permutation& rho, std::size_t f);

/// (rho . I)_i = I_{rho(i)} for nodes, cuts, labels and twisting indices.
CompleteIngredient act_perm(const Permutation& rho, const CompleteIngredient& ingredient);

/// Product with (rho1 * rho2) . I = rho1 . (rho2 . I), i.e. i -> rho2(rho1(i)).
Permutation perm_product(const Permutation& rho1, const Permutation& rho2);

/// For sigma_i = -1: flip cut i (redrawing the diagram, see flip_cut), flip
/// label i, and set k_i to -k_i + delta_k_i. Components are applied in node
/// order. The action is partial; the formulas are applied regardless and
/// sign_action_admissible() reports whether the result is a valid diagram.
CompleteIngredient act_sign(const SignVector& sv, const CompleteIngredient& ingredient);

bool sign_action_admissible(const SignVector& sv, const CompleteIngredient& ingredient);

}  // namespace atoric
