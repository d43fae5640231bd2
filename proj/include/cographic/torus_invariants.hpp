#pragma once

#include <vector>

#include "cographic/chain.hpp"
#include "cographic/graph.hpp"

namespace cographic {

/// Monomial Π U_{e→}^{a_e} U_{e←}^{b_e} of A(Γ) = k[U_r] / (U_{e→}U_{e←}).
/// Nonzero monomials have a_e·b_e = 0 for every edge.
struct OrientedMonomial {
    std::vector<unsigned> forward;
    std::vector<unsigned> backward;

    unsigned degree() const;
    bool is_zero_in_quotient() const;
    /// Σ a_e·e→ + b_e·e←
    Chain1 weight() const;
    /// Exponent of λ_v in the action λ·U_{e→} = λ_{s(e)} λ_{t(e)}^{-1} U_{e→}.
    std::vector<long long> torus_character(const Graph& g) const;

    friend bool operator==(const OrientedMonomial&, const OrientedMonomial&) = default;
};

/// Invariant nonzero monomials of degree ≤ D, by enumeration over all
/// monomials and the torus character.
std::vector<OrientedMonomial> invariant_monomial_basis(const Graph& g, unsigned max_degree);

struct TruncatedIsoCheck {
    bool invariance_matches_boundary = true;  ///< character zero ⇔ ∂(weight) = 0, all nonzero monomials
    bool weight_bijective = true;             ///< invariants ↔ cycles with Σ|c(e)| ≤ D
    bool products_agree = true;               ///< product in A(Γ) vs multiply_monomials
    std::size_t invariant_monomials = 0;
    std::size_t product_pairs = 0;

    bool ok() const { return invariance_matches_boundary && weight_bijective && products_agree; }
};

/// Degree-truncated check of A(Γ)^T ≅ R(Γ).
TruncatedIsoCheck check_iso_truncated(const Graph& g, unsigned max_degree);

}  // namespace cographic
