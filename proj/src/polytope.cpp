#include "cographic/polytope.hpp"

#include <algorithm>
#include <cstdlib>
#include <set>
#include <stdexcept>

namespace cographic::polytope {

namespace {

IntMatrix differences(const IntMatrix& points, const std::vector<std::size_t>& idx) {
    IntMatrix d;
    for (std::size_t i = 1; i < idx.size(); ++i) {
        IntVector row(points[idx[0]].size());
        for (std::size_t j = 0; j < row.size(); ++j) row[j] = points[idx[i]][j] - points[idx[0]][j];
        d.push_back(std::move(row));
    }
    return d;
}

// Coordinates (a subset of axes) on which projection is injective on the affine hull.
std::vector<std::size_t> chart_axes(const IntMatrix& points) {
    std::vector<std::size_t> all(points.size());
    for (std::size_t i = 0; i < all.size(); ++i) all[i] = i;
    const IntMatrix dirs = differences(points, all);
    const std::size_t k = lattice::rank(dirs);
    std::vector<std::size_t> axes;
    const std::size_t dim = points.front().size();
    for (std::size_t j = 0; j < dim && axes.size() < k; ++j) {
        auto trial = axes;
        trial.push_back(j);
        IntMatrix sub;
        for (const auto& row : dirs) {
            IntVector r;
            for (auto a : trial) r.push_back(row[a]);
            sub.push_back(std::move(r));
        }
        if (lattice::rank(sub) == trial.size()) axes = std::move(trial);
    }
    return axes;
}

IntMatrix project(const IntMatrix& points, const std::vector<std::size_t>& axes) {
    IntMatrix out;
    for (const auto& p : points) {
        IntVector q;
        for (auto a : axes) q.push_back(p[a]);
        out.push_back(std::move(q));
    }
    return out;
}

// Normal of the hyperplane through k affinely independent points of ℤ^k
// (generalized cross product of the difference vectors).
IntVector hyperplane_normal(const IntMatrix& pts, const std::vector<std::size_t>& idx) {
    const IntMatrix d = differences(pts, idx);
    const std::size_t k = pts.front().size();
    IntVector normal(k);
    for (std::size_t j = 0; j < k; ++j) {
        IntMatrix minor;
        for (const auto& row : d) {
            IntVector r;
            for (std::size_t c = 0; c < k; ++c)
                if (c != j) r.push_back(row[c]);
            minor.push_back(std::move(r));
        }
        const long long m = lattice::determinant(minor);
        normal[j] = (j % 2 == 0) ? m : -m;
    }
    return normal;
}

long long dot(const IntVector& a, const IntVector& b) {
    long long s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

// Point sets (as sorted index lists) of the facets of a full-dimensional conv(pts) ⊂ ℝ^k.
std::vector<std::vector<std::size_t>> facet_point_sets(const IntMatrix& pts) {
    const std::size_t n = pts.size(), k = pts.front().size();
    std::set<std::vector<std::size_t>> found;
    std::vector<bool> pick(n, false);
    std::fill(pick.begin(), pick.begin() + static_cast<std::ptrdiff_t>(k), true);
    do {
        std::vector<std::size_t> idx;
        for (std::size_t i = 0; i < n; ++i)
            if (pick[i]) idx.push_back(i);
        const IntVector a = hyperplane_normal(pts, idx);
        if (std::all_of(a.begin(), a.end(), [](long long x) { return x == 0; })) continue;
        const long long b = dot(a, pts[idx[0]]);
        bool below = false, above = false;
        std::vector<std::size_t> on;
        for (std::size_t i = 0; i < n; ++i) {
            const long long v = dot(a, pts[i]);
            if (v < b) below = true;
            if (v > b) above = true;
            if (v == b) on.push_back(i);
        }
        if (below && above) continue;
        found.insert(std::move(on));
    } while (std::prev_permutation(pick.begin(), pick.end()));
    return {found.begin(), found.end()};
}

std::vector<std::vector<std::size_t>> triangulate_indexed(const IntMatrix& points,
                                                          const std::vector<std::size_t>& subset) {
    IntMatrix local;
    for (auto i : subset) local.push_back(points[i]);
    const auto axes = chart_axes(local);
    const std::size_t k = axes.size();
    if (k == 0) return {{subset.front()}};
    const IntMatrix chart = project(local, axes);

    std::vector<std::vector<std::size_t>> simplices;
    for (const auto& facet : facet_point_sets(chart)) {
        if (facet.front() == 0) continue;  // apex (local index 0) lies on this facet
        std::vector<std::size_t> face;
        for (auto i : facet) face.push_back(subset[i]);
        for (auto s : triangulate_indexed(points, face)) {
            s.insert(s.begin(), subset.front());
            simplices.push_back(std::move(s));
        }
    }
    return simplices;
}

}  // namespace

std::size_t affine_dimension(const IntMatrix& points) {
    if (points.empty()) throw std::invalid_argument("affine_dimension of an empty set");
    std::vector<std::size_t> all(points.size());
    for (std::size_t i = 0; i < all.size(); ++i) all[i] = i;
    return lattice::rank(differences(points, all));
}

std::vector<std::vector<std::size_t>> triangulate(const IntMatrix& points) {
    if (points.empty()) return {};
    std::vector<std::size_t> all(points.size());
    for (std::size_t i = 0; i < all.size(); ++i) all[i] = i;
    return triangulate_indexed(points, all);
}

long long normalized_simplex_volume(const IntMatrix& points, const std::vector<std::size_t>& simplex) {
    const IntMatrix d = differences(points, simplex);
    if (!d.empty() && d.size() != d.front().size())
        throw std::invalid_argument("simplex is not full-dimensional");
    return std::llabs(lattice::determinant(d));
}

long long normalized_volume(const IntMatrix& points) {
    if (points.empty()) return 0;
    if (affine_dimension(points) != points.front().size())
        throw std::invalid_argument("normalized_volume needs a full-dimensional point set");
    long long total = 0;
    for (const auto& s : triangulate(points)) total += normalized_simplex_volume(points, s);
    return total;
}

}  // namespace cographic::polytope
