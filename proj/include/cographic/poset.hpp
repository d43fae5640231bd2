#pragma once

#include <cstddef>
#include <optional>
#include <vector>

namespace cographic {

/// A finite poset given by its full order relation.
struct FinitePoset {
    std::vector<std::vector<bool>> leq;

    std::size_t size() const { return leq.size(); }
    bool is_partial_order() const;
};

/// An order isomorphism a → b (`map[i]` is the image of i), or nullopt.
/// Backtracking over color-refined candidates; throws CapacityError when
/// either poset has more than `max_elements` elements.
std::optional<std::vector<std::size_t>> find_poset_isomorphism(const FinitePoset& a, const FinitePoset& b,
                                                               std::size_t max_elements = 5000);

bool poset_isomorphic(const FinitePoset& a, const FinitePoset& b, std::size_t max_elements = 5000);

}  // namespace cographic
