#include "cographic/semigroup.hpp"

#include <algorithm>
#include <cstdlib>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>
#include <cstdint>
#include <optional>
#include <string_view>

#include "cographic/errors.hpp"
#include "cographic/fan.hpp"
#include "cographic/polytope.hpp"

namespace cographic {

using lattice::IntMatrix;
using lattice::IntVector;

AffineSemigroup hilbert_basis(const Graph& g, const CircuitSet& all_circuits, const TotCycPair& p) {
    AffineSemigroup s{p, compatible_circuits(all_circuits, p), {}, {}, {}, {}};
    s.lattice_basis = fundamental_cycle_basis(g, p.remaining_mask());
    for (const auto& gamma : s.circuits) {
        s.hilbert_basis.push_back(circuit_class(gamma));
        s.coordinates.push_back(s.lattice_basis.coordinates(s.hilbert_basis.back()));
    }
    for (auto& f : facets(g, p)) s.facet_normals.push_back(std::move(f.normal));
    return s;
}

AffineSemigroup hilbert_basis(const Graph& g, const TotCycPair& p) {
    return hilbert_basis(g, compatible_circuits(g, p), p);
}

bool spans_lattice(const AffineSemigroup& s) {
    const std::size_t d = s.lattice_rank();
    if (d == 0) return true;
    const auto divisors = lattice::elementary_divisors(s.coordinates);
    return divisors.size() == d &&
           std::all_of(divisors.begin(), divisors.end(), [](long long x) { return x == 1; });
}

UnimodularityResult is_unimodular(const AffineSemigroup& s) {
    const std::size_t d = s.lattice_rank(), n = s.coordinates.size();
    UnimodularityResult result{true, std::nullopt};
    if (d == 0 || n < d) return result;
    std::optional<std::pair<std::vector<std::size_t>, long long>> first;
    std::vector<bool> pick(n, false);
    std::fill(pick.begin(), pick.begin() + static_cast<std::ptrdiff_t>(d), true);
    do {
        std::vector<std::size_t> cols;
        IntMatrix m(d, IntVector(d));
        for (std::size_t i = 0; i < n; ++i)
            if (pick[i]) cols.push_back(i);
        for (std::size_t r = 0; r < d; ++r)
            for (std::size_t c = 0; c < d; ++c) m[r][c] = s.coordinates[cols[c]][r];
        const long long minor = lattice::determinant(m);
        if (minor == 0) continue;
        if (!first) {
            first = {cols, minor};
        } else if (std::llabs(minor) != std::llabs(first->second)) {
            result.unimodular = false;
            result.witness = MinorWitness{first->first, first->second, cols, minor};
            return result;
        }
    } while (std::prev_permutation(pick.begin(), pick.end()));
    return result;
}

unsigned Binomial::degree_u() const { return std::accumulate(u.begin(), u.end(), 0u); }
unsigned Binomial::degree_v() const { return std::accumulate(v.begin(), v.end(), 0u); }

BinomialIdeal toric_ideal_up_to_degree(const AffineSemigroup& s, unsigned max_degree) {
    if (max_degree < 1) throw std::invalid_argument("degree bound must be at least 1");
    const std::size_t n = s.hilbert_basis.size();
    BinomialIdeal ideal;
    ideal.degree_bound = max_degree;
    if (n == 0) return ideal;

    // Exponent vectors of degree 1..D grouped by their image p(u) = Σ u_i h_i.
    std::map<Chain1, std::vector<std::vector<unsigned>>> fibers;
    std::vector<unsigned> u(n, 0);
    std::function<void(std::size_t, unsigned)> walk = [&](std::size_t i, unsigned left) {
        if (i == n) {
            if (left == max_degree) return;
            Chain1 image(s.hilbert_basis.front().size());
            for (std::size_t k = 0; k < n; ++k)
                if (u[k]) image += static_cast<long long>(u[k]) * s.hilbert_basis[k];
            fibers[image].push_back(u);
            return;
        }
        for (unsigned x = 0; x <= left; ++x) {
            u[i] = x;
            walk(i + 1, left - x);
        }
        u[i] = 0;
    };
    walk(0, max_degree);

    for (const auto& [image, members] : fibers) {
        for (std::size_t a = 0; a < members.size(); ++a)
            for (std::size_t b = a + 1; b < members.size(); ++b) {
                const auto& x = members[a];
                const auto& y = members[b];
                bool disjoint = true;
                long long g = 0;
                for (std::size_t k = 0; k < n; ++k) {
                    if (x[k] && y[k]) disjoint = false;
                    g = std::gcd(g, static_cast<long long>(x[k]));
                    g = std::gcd(g, static_cast<long long>(y[k]));
                }
                if (!disjoint || g != 1) continue;
                ideal.generators.push_back(x > y ? Binomial{x, y} : Binomial{y, x});
            }
    }
    std::sort(ideal.generators.begin(), ideal.generators.end(), [](const Binomial& a, const Binomial& b) {
        return std::tie(a.u, a.v) > std::tie(b.u, b.v);
    });
    return ideal;
}

bool is_homogeneous(const BinomialIdeal& ideal) {
    return std::all_of(ideal.generators.begin(), ideal.generators.end(),
                       [](const Binomial& b) { return b.degree_u() == b.degree_v(); });
}

GorensteinResult q_gorenstein(const AffineSemigroup& s) {
    const std::size_t d = s.lattice_rank();
    if (d == 0) return {true, true, std::vector<lattice::Rational>{}};
    const IntVector ones(s.facet_normals.size(), 1);
    auto m = lattice::solve_rational(s.facet_normals, ones);
    if (!m) return {false, false, std::nullopt};
    const bool integral = std::all_of(m->begin(), m->end(), [](const auto& x) { return x.denominator() == 1; });
    return {true, integral, std::move(m)};
}

long long subdiagram_volume(const AffineSemigroup& s) {
    const std::size_t d = s.lattice_rank();
    if (d == 0) return 1;
    const IntMatrix& h = s.coordinates;
    const std::size_t n = h.size();
    if (n < d || lattice::rank(h) != d)
        throw std::invalid_argument("subdiagram_volume needs a cone spanning its lattice");

    // Bounded facets of conv(H) + σ: hyperplanes through d affinely
    // independent generators with every generator on the far side of a
    // positive level.
    std::set<std::vector<std::size_t>> bounded;
    std::vector<bool> pick(n, false);
    std::fill(pick.begin(), pick.begin() + static_cast<std::ptrdiff_t>(d), true);
    do {
        std::vector<std::size_t> idx;
        for (std::size_t i = 0; i < n; ++i)
            if (pick[i]) idx.push_back(i);
        // Normal a with a·x = b through the chosen points: solve via the
        // (d+1)-point determinant expansion against the origin offsets.
        IntMatrix sub;
        for (auto i : idx) sub.push_back(h[i]);
        if (polytope::affine_dimension(sub) != d - 1) continue;
        IntVector a(d);
        for (std::size_t j = 0; j < d; ++j) {
            IntMatrix minor;
            for (std::size_t r = 1; r < d; ++r) {
                IntVector row;
                for (std::size_t c = 0; c < d; ++c)
                    if (c != j) row.push_back(sub[r][c] - sub[0][c]);
                minor.push_back(std::move(row));
            }
            const long long det = lattice::determinant(minor);
            a[j] = (j % 2 == 0) ? det : -det;
        }
        long long b = 0;
        for (std::size_t c = 0; c < d; ++c) b += a[c] * sub[0][c];
        if (b == 0) continue;
        if (b < 0) {
            for (auto& x : a) x = -x;
            b = -b;
        }
        std::vector<std::size_t> on;
        bool valid = true;
        for (std::size_t i = 0; i < n && valid; ++i) {
            long long v = 0;
            for (std::size_t c = 0; c < d; ++c) v += a[c] * h[i][c];
            if (v < b) valid = false;
            if (v == b) on.push_back(i);
        }
        if (valid) bounded.insert(std::move(on));
    } while (std::prev_permutation(pick.begin(), pick.end()));

    long long volume = 0;
    for (const auto& facet : bounded) {
        IntMatrix pyramid{IntVector(d, 0)};
        for (auto i : facet) pyramid.push_back(h[i]);
        volume += polytope::normalized_volume(pyramid);
    }
    return volume;
}

unsigned default_hs_horizon(const AffineSemigroup& s) { return static_cast<unsigned>(s.lattice_rank()) + 6; }

namespace {

// Lattice points as rows of signed bytes in one pool, with an open-addressing
// index over them.
class PointTable {
public:
    explicit PointTable(std::size_t width) : width_(width), slots_(1024, 0) {}

    std::size_t size() const { return count_; }
    const std::int8_t* at(std::size_t i) const { return pool_.data() + i * width_; }

    std::optional<std::size_t> find(const std::int8_t* p) const {
        for (std::size_t h = hash(p) & (slots_.size() - 1);; h = (h + 1) & (slots_.size() - 1)) {
            const std::uint32_t s = slots_[h];
            if (s == 0) return std::nullopt;
            if (std::equal(p, p + width_, at(s - 1))) return s - 1;
        }
    }

    bool insert(const std::int8_t* p) {
        if (2 * (count_ + 1) > slots_.size()) grow();
        std::size_t h = hash(p) & (slots_.size() - 1);
        for (;; h = (h + 1) & (slots_.size() - 1)) {
            const std::uint32_t s = slots_[h];
            if (s == 0) break;
            if (std::equal(p, p + width_, at(s - 1))) return false;
        }
        pool_.insert(pool_.end(), p, p + width_);
        slots_[h] = static_cast<std::uint32_t>(++count_);
        return true;
    }

private:
    std::size_t hash(const std::int8_t* p) const {
        return std::hash<std::string_view>{}(std::string_view(reinterpret_cast<const char*>(p), width_));
    }
    void grow() {
        std::vector<std::uint32_t> old = std::move(slots_);
        slots_.assign(old.size() * 2, 0);
        for (std::uint32_t s : old) {
            if (s == 0) continue;
            std::size_t h = hash(at(s - 1)) & (slots_.size() - 1);
            while (slots_[h] != 0) h = (h + 1) & (slots_.size() - 1);
            slots_[h] = s;
        }
    }

    std::size_t width_;
    std::size_t count_ = 0;
    std::vector<std::int8_t> pool_;
    std::vector<std::uint32_t> slots_;
};

}  // namespace

HilbertSamuelResult multiplicity_hs_oracle(const AffineSemigroup& s, unsigned horizon) {
    const std::size_t d = s.lattice_rank();
    if (horizon < d + 2) throw CapacityError("hs_horizon", d + 2, horizon);
    // Points are sums of at most N − 1 generators with ±1 entries, so each
    // edge coordinate fits in a signed byte.
    if (horizon > 127) throw CapacityError("hs_horizon", 127, horizon);
    const Orientation& phi = s.label.orientation();
    const std::size_t m = phi.size();

    std::vector<std::vector<std::int8_t>> gens;
    for (const auto& h : s.hilbert_basis) {
        std::vector<std::int8_t> k(m);
        for (EdgeIndex e = 0; e < m; ++e) k[e] = static_cast<std::int8_t>(h[e]);
        gens.push_back(std::move(k));
    }

    // Every point with some factorization of length ≤ N − 1, found layer by
    // layer; each point is expanded once, from the first layer reaching it.
    PointTable table(std::max<std::size_t>(m, 1));
    std::vector<std::int8_t> buf(std::max<std::size_t>(m, 1), 0);
    table.insert(buf.data());
    std::size_t layer_begin = 0, layer_end = 1;
    for (unsigned j = 1; j + 1 <= horizon; ++j) {
        for (std::size_t i = layer_begin; i < layer_end; ++i)
            for (const auto& h : gens) {
                const std::int8_t* c = table.at(i);
                for (EdgeIndex e = 0; e < m; ++e) buf[e] = static_cast<std::int8_t>(c[e] + h[e]);
                table.insert(buf.data());
            }
        layer_begin = layer_end;
        layer_end = table.size();
    }

    // Longest factorization, capped at N: a point outside the table has no
    // factorization of length ≤ N − 1, so its length is at least N. Removing a
    // generator lowers Σ|c(e)|, so processing by that norm is a valid order.
    const std::size_t n = table.size();
    std::vector<int> norm(n, 0);
    for (std::size_t i = 0; i < n; ++i)
        for (EdgeIndex e = 0; e < m; ++e) norm[i] += std::abs(static_cast<int>(table.at(i)[e]));
    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return norm[a] < norm[b]; });
    std::vector<unsigned> longest(n, 0);
    for (std::size_t i : order) {
        const std::int8_t* c = table.at(i);
        unsigned best = 0;
        for (const auto& h : gens) {
            bool inside = true;
            for (EdgeIndex e = 0; e < m && inside; ++e) {
                buf[e] = static_cast<std::int8_t>(c[e] - h[e]);
                if (buf[e] != 0 && (!phi.defined(e) || (buf[e] > 0) != (phi.sign(e) > 0))) inside = false;
            }
            if (!inside) continue;
            const auto rest = table.find(buf.data());
            best = std::max(best, rest ? std::min(horizon, longest[*rest] + 1) : horizon);
        }
        longest[i] = best;
    }

    std::vector<long long> count_by_order(horizon, 0);
    for (unsigned k : longest)
        if (k < horizon) ++count_by_order[k];
    HilbertSamuelResult result{0, {}};
    long long running = 0;
    for (unsigned n = 1; n <= horizon; ++n) {
        running += count_by_order[n - 1];
        result.values.push_back(running);
    }

    std::vector<long long> diff = result.values;
    for (std::size_t k = 0; k < d; ++k) {
        for (std::size_t i = 0; i + 1 < diff.size(); ++i) diff[i] = diff[i + 1] - diff[i];
        diff.pop_back();
    }
    const std::size_t need = std::min<std::size_t>(3, diff.size());
    for (std::size_t i = diff.size() - need; i < diff.size(); ++i)
        if (diff[i] != diff.back()) throw CapacityError("hs_horizon (differences not yet constant)", horizon, horizon);
    result.multiplicity = diff.back();
    return result;
}

}  // namespace cographic
