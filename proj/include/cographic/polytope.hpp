#pragma once

#include <vector>

#include "cographic/lattice.hpp"

namespace cographic::polytope {

using lattice::IntMatrix;
using lattice::IntVector;

/// Dimension of the affine hull of a nonempty point set.
std::size_t affine_dimension(const IntMatrix& points);

/// A pulling triangulation of conv(points) inside its affine hull. Each
/// simplex lists dim+1 indices into `points`. The first point is the apex of
/// the outermost pulling step, so a point listed first appears in every simplex.
std::vector<std::vector<std::size_t>> triangulate(const IntMatrix& points);

/// |det(v1 − v0, …, vd − v0)|: volume of a full-dimensional lattice simplex
/// normalized so that the standard simplex has volume 1.
long long normalized_simplex_volume(const IntMatrix& points, const std::vector<std::size_t>& simplex);

/// Normalized volume of a full-dimensional polytope conv(points) ⊂ ℝ^d.
long long normalized_volume(const IntMatrix& points);

}  // namespace cographic::polytope
