#include "phecke/linalg.hpp"

#include <stdexcept>

namespace phecke {

int rational_rank(std::vector<std::vector<mpq_class>> m) {
    if (m.empty()) return 0;
    const std::size_t rows = m.size(), cols = m[0].size();
    std::size_t rank = 0;
    for (std::size_t col = 0; col < cols && rank < rows; ++col) {
        std::size_t pivot = rank;
        while (pivot < rows && m[pivot][col] == 0) ++pivot;
        if (pivot == rows) continue;
        std::swap(m[pivot], m[rank]);
        for (std::size_t r = rank + 1; r < rows; ++r) {
            if (m[r][col] == 0) continue;
            mpq_class f = m[r][col] / m[rank][col];
            for (std::size_t c = col; c < cols; ++c) m[r][c] -= f * m[rank][c];
        }
        ++rank;
    }
    return static_cast<int>(rank);
}

int rank_at(const std::vector<std::vector<PolyQ>>& m, const mpq_class& q_value) {
    std::vector<std::vector<mpq_class>> num;
    num.reserve(m.size());
    for (const auto& row : m) {
        std::vector<mpq_class> r;
        r.reserve(row.size());
        for (const auto& p : row) r.push_back(p.eval(q_value));
        num.push_back(std::move(r));
    }
    return rational_rank(std::move(num));
}

std::vector<mpq_class> solve_rational(std::vector<std::vector<mpq_class>> a,
                                      std::vector<mpq_class> rhs) {
    const std::size_t n = a.size();
    if (n == 0 || a[0].size() != n || rhs.size() != n)
        throw std::invalid_argument("solve_rational expects a square system");
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t pivot = col;
        while (pivot < n && a[pivot][col] == 0) ++pivot;
        if (pivot == n) throw std::invalid_argument("singular matrix");
        std::swap(a[pivot], a[col]);
        std::swap(rhs[pivot], rhs[col]);
        for (std::size_t r = 0; r < n; ++r) {
            if (r == col || a[r][col] == 0) continue;
            mpq_class f = a[r][col] / a[col][col];
            for (std::size_t c = col; c < n; ++c) a[r][c] -= f * a[col][c];
            rhs[r] -= f * rhs[col];
        }
    }
    std::vector<mpq_class> x(n);
    for (std::size_t i = 0; i < n; ++i) x[i] = rhs[i] / a[i][i];
    return x;
}

}  // namespace phecke
