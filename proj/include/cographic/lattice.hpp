#pragma once

#include <optional>
#include <vector>

#include <boost/rational.hpp>

namespace cographic::lattice {

using IntVector = std::vector<long long>;
/// Row-major dense integer matrix.
using IntMatrix = std::vector<IntVector>;
using Rational = boost::rational<long long>;

/// Exact determinant of a square matrix (fraction-free Bareiss elimination).
long long determinant(const IntMatrix& a);

/// Rank over ℚ.
std::size_t rank(const IntMatrix& a);

/// Nonzero elementary divisors d1 | d2 | … of the Smith normal form.
std::vector<long long> elementary_divisors(IntMatrix a);

IntMatrix transpose(const IntMatrix& a);

long long gcd_of(const IntVector& v);

/// Some solution of A·x = b over ℚ, or nullopt when the system is inconsistent.
std::optional<std::vector<Rational>> solve_rational(const IntMatrix& a, const IntVector& b);

}  // namespace cographic::lattice
