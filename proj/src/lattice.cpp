#include "cographic/lattice.hpp"

#include <cstdlib>
#include <limits>
#include <numeric>
#include <stdexcept>
#include <utility>

namespace cographic::lattice {

namespace {

long long narrow(__int128 x) {
    if (x > std::numeric_limits<long long>::max() || x < std::numeric_limits<long long>::min())
        throw std::overflow_error("integer overflow in exact linear algebra");
    return static_cast<long long>(x);
}

}  // namespace

long long determinant(const IntMatrix& a) {
    const std::size_t n = a.size();
    if (n == 0) return 1;
    IntMatrix m = a;
    for (const auto& row : m)
        if (row.size() != n) throw std::invalid_argument("determinant of a non-square matrix");
    long long sign = 1, prev = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (m[k][k] == 0) {
            std::size_t p = k + 1;
            while (p < n && m[p][k] == 0) ++p;
            if (p == n) return 0;
            std::swap(m[k], m[p]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i)
            for (std::size_t j = k + 1; j < n; ++j)
                m[i][j] = narrow((static_cast<__int128>(m[i][j]) * m[k][k] -
                                  static_cast<__int128>(m[i][k]) * m[k][j]) / prev);
        prev = m[k][k];
    }
    return sign * m[n - 1][n - 1];
}

std::size_t rank(const IntMatrix& a) {
    if (a.empty()) return 0;
    std::vector<std::vector<Rational>> m;
    for (const auto& row : a) m.emplace_back(row.begin(), row.end());
    const std::size_t rows = m.size(), cols = m.front().size();
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t p = r;
        while (p < rows && m[p][c].numerator() == 0) ++p;
        if (p == rows) continue;
        std::swap(m[r], m[p]);
        for (std::size_t i = r + 1; i < rows; ++i) {
            if (m[i][c].numerator() == 0) continue;
            const Rational f = m[i][c] / m[r][c];
            for (std::size_t j = c; j < cols; ++j) m[i][j] -= f * m[r][j];
        }
        ++r;
    }
    return r;
}

std::vector<long long> elementary_divisors(IntMatrix a) {
    std::vector<long long> divisors;
    if (a.empty() || a.front().empty()) return divisors;
    const std::size_t rows = a.size(), cols = a.front().size();
    for (std::size_t t = 0; t < std::min(rows, cols); ++t) {
        // Move the smallest nonzero entry of the trailing block to (t, t).
        auto place_pivot = [&]() {
            long long best = 0;
            std::size_t bi = t, bj = t;
            for (std::size_t i = t; i < rows; ++i)
                for (std::size_t j = t; j < cols; ++j)
                    if (a[i][j] != 0 && (best == 0 || std::llabs(a[i][j]) < best)) {
                        best = std::llabs(a[i][j]);
                        bi = i;
                        bj = j;
                    }
            if (best == 0) return false;
            std::swap(a[t], a[bi]);
            for (auto& row : a) std::swap(row[t], row[bj]);
            return true;
        };
        if (!place_pivot()) break;
        for (;;) {
            bool clean = true;
            for (std::size_t i = t + 1; i < rows; ++i) {
                const long long q = a[i][t] / a[t][t];
                for (std::size_t j = t; j < cols; ++j) a[i][j] -= q * a[t][j];
                if (a[i][t] != 0) clean = false;
            }
            for (std::size_t j = t + 1; j < cols; ++j) {
                const long long q = a[t][j] / a[t][t];
                for (std::size_t i = t; i < rows; ++i) a[i][j] -= q * a[i][t];
                if (a[t][j] != 0) clean = false;
            }
            if (clean) {
                // Divisibility: fold any entry not divisible by the pivot into row t.
                bool divisible = true;
                for (std::size_t i = t + 1; i < rows && divisible; ++i)
                    for (std::size_t j = t + 1; j < cols; ++j)
                        if (a[i][j] % a[t][t] != 0) {
                            for (std::size_t k = t; k < cols; ++k) a[t][k] += a[i][k];
                            divisible = false;
                            break;
                        }
                if (divisible) break;
            }
            place_pivot();
        }
        divisors.push_back(std::llabs(a[t][t]));
    }
    return divisors;
}

IntMatrix transpose(const IntMatrix& a) {
    if (a.empty()) return {};
    IntMatrix t(a.front().size(), IntVector(a.size()));
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < a[i].size(); ++j) t[j][i] = a[i][j];
    return t;
}

long long gcd_of(const IntVector& v) {
    long long g = 0;
    for (long long x : v) g = std::gcd(g, x);
    return g;
}

std::optional<std::vector<Rational>> solve_rational(const IntMatrix& a, const IntVector& b) {
    const std::size_t rows = a.size();
    if (b.size() != rows) throw std::invalid_argument("solve_rational: size mismatch");
    const std::size_t cols = rows ? a.front().size() : 0;
    std::vector<std::vector<Rational>> m(rows);
    for (std::size_t i = 0; i < rows; ++i) {
        m[i].assign(a[i].begin(), a[i].end());
        m[i].push_back(b[i]);
    }
    std::vector<std::size_t> pivot_col;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t p = r;
        while (p < rows && m[p][c].numerator() == 0) ++p;
        if (p == rows) continue;
        std::swap(m[r], m[p]);
        const Rational inv = Rational(1) / m[r][c];
        for (auto& x : m[r]) x *= inv;
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == r || m[i][c].numerator() == 0) continue;
            const Rational f = m[i][c];
            for (std::size_t j = 0; j <= cols; ++j) m[i][j] -= f * m[r][j];
        }
        pivot_col.push_back(c);
        ++r;
    }
    for (std::size_t i = r; i < rows; ++i)
        if (m[i][cols].numerator() != 0) return std::nullopt;
    std::vector<Rational> x(cols, Rational(0));
    for (std::size_t i = 0; i < r; ++i) x[pivot_col[i]] = m[i][cols];
    return x;
}

}  // namespace cographic::lattice
