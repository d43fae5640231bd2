#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <vector>

#include "cographic/graph.hpp"

namespace cographic {

/// Integer 1-chain Σ c(e)·e→ over the reference orientation; e← = −e→.
class Chain1 {
public:
    Chain1() = default;
    explicit Chain1(std::size_t num_edges) : coeff_(num_edges, 0) {}
    explicit Chain1(std::vector<long long> coefficients) : coeff_(std::move(coefficients)) {}

    /// The chain of a single oriented edge (±1 on its edge).
    static Chain1 unit(std::size_t num_edges, OrientedEdge r);

    std::size_t size() const { return coeff_.size(); }
    long long operator[](EdgeIndex e) const { return coeff_[e]; }
    long long& operator[](EdgeIndex e) { return coeff_[e]; }
    const std::vector<long long>& coefficients() const { return coeff_; }

    bool is_zero() const;
    /// Σ |c(e)|
    long long l1_norm() const;
    EdgeSet support() const;

    Chain1& operator+=(const Chain1& other);
    Chain1& operator-=(const Chain1& other);
    Chain1& operator*=(long long k);
    friend Chain1 operator+(Chain1 a, const Chain1& b) { return a += b; }
    friend Chain1 operator-(Chain1 a, const Chain1& b) { return a -= b; }
    friend Chain1 operator*(long long k, Chain1 a) { return a *= k; }
    Chain1 operator-() const { return Chain1(coeff_) *= -1; }

    friend bool operator==(const Chain1&, const Chain1&) = default;
    friend auto operator<=>(const Chain1&, const Chain1&) = default;

private:
    std::vector<long long> coeff_;
};

/// Integer 0-chain indexed by vertex.
struct Chain0 {
    std::vector<long long> coefficients;

    bool is_zero() const;
    friend bool operator==(const Chain0&, const Chain0&) = default;
};

/// A section φ: E → oriented edges on a subset of the edges. Edges outside
/// the domain carry no direction.
class Orientation {
public:
    Orientation() = default;
    explicit Orientation(std::size_t num_edges) : sign_(num_edges, 0) {}
    /// All edges forward.
    static Orientation reference(std::size_t num_edges);
    /// +1/−1 per edge, 0 for "not in domain".
    static Orientation from_signs(std::vector<std::int8_t> signs);

    std::size_t size() const { return sign_.size(); }
    bool defined(EdgeIndex e) const { return sign_[e] != 0; }
    std::optional<Dir> at(EdgeIndex e) const;
    int sign(EdgeIndex e) const { return sign_[e]; }
    void set(EdgeIndex e, Dir d) { sign_[e] = static_cast<std::int8_t>(d); }
    void unset(EdgeIndex e) { sign_[e] = 0; }

    EdgeSet domain() const;
    EdgeMask domain_mask() const;
    bool is_total() const;
    Orientation reversed() const;
    /// Restriction to the edges of `keep` (which must lie in the domain).
    Orientation restricted(const EdgeMask& keep) const;
    /// True when `this` is defined on a subset of other's domain and agrees there.
    bool is_restriction_of(const Orientation& other) const;
    /// Σ φ(e) over the domain.
    Chain1 as_chain() const;
    const std::vector<std::int8_t>& signs() const { return sign_; }

    friend bool operator==(const Orientation&, const Orientation&) = default;
    friend auto operator<=>(const Orientation&, const Orientation&) = default;

private:
    std::vector<std::int8_t> sign_;
};

}  // namespace cographic
