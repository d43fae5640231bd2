#include "cographic/poset.hpp"

#include <algorithm>
#include <functional>
#include <map>

#include "cographic/errors.hpp"

namespace cographic {

bool FinitePoset::is_partial_order() const {
    const std::size_t n = size();
    for (std::size_t i = 0; i < n; ++i) {
        if (leq[i].size() != n || !leq[i][i]) return false;
        for (std::size_t j = 0; j < n; ++j) {
            if (i != j && leq[i][j] && leq[j][i]) return false;
            if (!leq[i][j]) continue;
            for (std::size_t k = 0; k < n; ++k)
                if (leq[j][k] && !leq[i][k]) return false;
        }
    }
    return true;
}

namespace {

// Joint color refinement: each element's color is refined by the multisets
// of colors strictly below and strictly above it, until stable.
std::pair<std::vector<std::size_t>, std::vector<std::size_t>> refine_colors(const FinitePoset& a,
                                                                            const FinitePoset& b) {
    const std::size_t n = a.size();
    std::vector<std::size_t> ca(n, 0), cb(n, 0);
    std::size_t classes = 1;
    for (;;) {
        using Signature = std::tuple<std::size_t, std::vector<std::size_t>, std::vector<std::size_t>>;
        auto signature = [n](const FinitePoset& p, const std::vector<std::size_t>& c, std::size_t i) {
            std::vector<std::size_t> below, above;
            for (std::size_t j = 0; j < n; ++j) {
                if (j == i) continue;
                if (p.leq[j][i]) below.push_back(c[j]);
                if (p.leq[i][j]) above.push_back(c[j]);
            }
            std::sort(below.begin(), below.end());
            std::sort(above.begin(), above.end());
            return Signature{c[i], std::move(below), std::move(above)};
        };
        std::vector<Signature> sa(n), sb(n);
        std::map<Signature, std::size_t> ids;
        for (std::size_t i = 0; i < n; ++i) ids.emplace(sa[i] = signature(a, ca, i), 0);
        for (std::size_t i = 0; i < n; ++i) ids.emplace(sb[i] = signature(b, cb, i), 0);
        std::size_t next = 0;
        for (auto& [sig, id] : ids) id = next++;
        for (std::size_t i = 0; i < n; ++i) {
            ca[i] = ids[sa[i]];
            cb[i] = ids[sb[i]];
        }
        if (ids.size() == classes) break;
        classes = ids.size();
    }
    return {ca, cb};
}

}  // namespace

std::optional<std::vector<std::size_t>> find_poset_isomorphism(const FinitePoset& a, const FinitePoset& b,
                                                               std::size_t max_elements) {
    if (a.size() > max_elements) throw CapacityError("poset_isomorphism_elements", max_elements, a.size());
    if (b.size() > max_elements) throw CapacityError("poset_isomorphism_elements", max_elements, b.size());
    if (a.size() != b.size()) return std::nullopt;
    const std::size_t n = a.size();
    if (n == 0) return std::vector<std::size_t>{};

    const auto [ca, cb] = refine_colors(a, b);
    std::map<std::size_t, std::size_t> hist_a, hist_b;
    for (auto c : ca) ++hist_a[c];
    for (auto c : cb) ++hist_b[c];
    if (hist_a != hist_b) return std::nullopt;

    // Visit order on a: rarest color first, then the element comparable to
    // the most already-placed elements.
    std::vector<std::size_t> order;
    std::vector<bool> placed(n, false);
    std::vector<std::size_t> links(n, 0);
    for (std::size_t step = 0; step < n; ++step) {
        std::size_t best = n;
        for (std::size_t i = 0; i < n; ++i) {
            if (placed[i]) continue;
            if (best == n || links[i] > links[best] ||
                (links[i] == links[best] && hist_a[ca[i]] < hist_a[ca[best]]))
                best = i;
        }
        placed[best] = true;
        order.push_back(best);
        for (std::size_t i = 0; i < n; ++i)
            if (!placed[i] && (a.leq[i][best] || a.leq[best][i])) ++links[i];
    }

    std::vector<std::size_t> image(n, n);
    std::vector<bool> used(n, false);
    std::function<bool(std::size_t)> place = [&](std::size_t depth) {
        if (depth == n) return true;
        const std::size_t x = order[depth];
        for (std::size_t y = 0; y < n; ++y) {
            if (used[y] || cb[y] != ca[x]) continue;
            bool ok = true;
            for (std::size_t k = 0; k < depth && ok; ++k) {
                const std::size_t u = order[k], v = image[u];
                ok = a.leq[u][x] == b.leq[v][y] && a.leq[x][u] == b.leq[y][v];
            }
            if (!ok) continue;
            image[x] = y;
            used[y] = true;
            if (place(depth + 1)) return true;
            used[y] = false;
        }
        image[x] = n;
        return false;
    };
    if (!place(0)) return std::nullopt;
    return image;
}

bool poset_isomorphic(const FinitePoset& a, const FinitePoset& b, std::size_t max_elements) {
    return find_poset_isomorphism(a, b, max_elements).has_value();
}

}  // namespace cographic
