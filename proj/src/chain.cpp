#include "cographic/chain.hpp"

#include <algorithm>
#include <cstdlib>
#include <stdexcept>

namespace cographic {

Chain1 Chain1::unit(std::size_t num_edges, OrientedEdge r) {
    Chain1 c(num_edges);
    c[r.edge] = sign_of(r.dir);
    return c;
}

bool Chain1::is_zero() const {
    return std::all_of(coeff_.begin(), coeff_.end(), [](long long x) { return x == 0; });
}

long long Chain1::l1_norm() const {
    long long total = 0;
    for (long long x : coeff_) total += std::llabs(x);
    return total;
}

EdgeSet Chain1::support() const {
    std::vector<EdgeIndex> s;
    for (EdgeIndex e = 0; e < coeff_.size(); ++e)
        if (coeff_[e] != 0) s.push_back(e);
    return EdgeSet(std::move(s));
}

Chain1& Chain1::operator+=(const Chain1& other) {
    if (other.size() != size()) throw std::invalid_argument("chain size mismatch");
    for (std::size_t i = 0; i < coeff_.size(); ++i) coeff_[i] += other.coeff_[i];
    return *this;
}

Chain1& Chain1::operator-=(const Chain1& other) {
    if (other.size() != size()) throw std::invalid_argument("chain size mismatch");
    for (std::size_t i = 0; i < coeff_.size(); ++i) coeff_[i] -= other.coeff_[i];
    return *this;
}

Chain1& Chain1::operator*=(long long k) {
    for (auto& x : coeff_) x *= k;
    return *this;
}

bool Chain0::is_zero() const {
    return std::all_of(coefficients.begin(), coefficients.end(), [](long long x) { return x == 0; });
}

Orientation Orientation::reference(std::size_t num_edges) {
    Orientation o;
    o.sign_.assign(num_edges, 1);
    return o;
}

Orientation Orientation::from_signs(std::vector<std::int8_t> signs) {
    for (auto s : signs)
        if (s < -1 || s > 1) throw std::invalid_argument("orientation sign out of range");
    Orientation o;
    o.sign_ = std::move(signs);
    return o;
}

std::optional<Dir> Orientation::at(EdgeIndex e) const {
    if (sign_[e] == 0) return std::nullopt;
    return sign_[e] > 0 ? Dir::forward : Dir::backward;
}

EdgeSet Orientation::domain() const { return EdgeSet::from_mask(domain_mask()); }

EdgeMask Orientation::domain_mask() const {
    EdgeMask m(sign_.size());
    for (EdgeIndex e = 0; e < sign_.size(); ++e) m[e] = sign_[e] != 0;
    return m;
}

bool Orientation::is_total() const {
    return std::all_of(sign_.begin(), sign_.end(), [](std::int8_t s) { return s != 0; });
}

Orientation Orientation::reversed() const {
    Orientation o = *this;
    for (auto& s : o.sign_) s = static_cast<std::int8_t>(-s);
    return o;
}

Orientation Orientation::restricted(const EdgeMask& keep) const {
    Orientation o = *this;
    for (EdgeIndex e = 0; e < sign_.size(); ++e) {
        if (!keep[e]) {
            o.sign_[e] = 0;
        } else if (sign_[e] == 0) {
            throw std::invalid_argument("restriction outside the orientation's domain");
        }
    }
    return o;
}

bool Orientation::is_restriction_of(const Orientation& other) const {
    if (other.size() != size()) return false;
    for (EdgeIndex e = 0; e < sign_.size(); ++e)
        if (sign_[e] != 0 && sign_[e] != other.sign_[e]) return false;
    return true;
}

Chain1 Orientation::as_chain() const {
    Chain1 c(sign_.size());
    for (EdgeIndex e = 0; e < sign_.size(); ++e) c[e] = sign_[e];
    return c;
}

}  // namespace cographic
