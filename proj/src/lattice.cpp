#include "sgkt/lattice.hpp"

#include "sgkt/errors.hpp"

namespace sgkt {

namespace {

void col_axpy(HermiteResult& r, size_t dst, size_t src, const Int& k) {
    if (k == 0) return;
    r.h[dst][0] += k * r.h[src][0];
    r.h[dst][1] += k * r.h[src][1];
    for (size_t i = 0; i < r.u.size(); ++i) r.u[dst][i] += k * r.u[src][i];
}

void col_swap(HermiteResult& r, size_t i, size_t j) {
    if (i == j) return;
    std::swap(r.h[i], r.h[j]);
    std::swap(r.u[i], r.u[j]);
}

void col_neg(HermiteResult& r, size_t i) {
    r.h[i][0] = -r.h[i][0];
    r.h[i][1] = -r.h[i][1];
    for (auto& v : r.u[i]) v = -v;
}

// Gather the gcd of row `row` over columns [pivot, n) into column `pivot`,
// zeroing the rest of the row. Returns false when the row is zero there.
bool reduce_row(HermiteResult& r, size_t row, size_t pivot) {
    size_t n = r.h.size();
    for (size_t j = pivot + 1; j < n; ++j) {
        while (r.h[j][row] != 0) {
            if (r.h[pivot][row] == 0) {
                col_swap(r, pivot, j);
                continue;
            }
            Int q = fdiv(r.h[j][row], r.h[pivot][row]);
            col_axpy(r, j, pivot, -q);
            if (r.h[j][row] != 0) col_swap(r, pivot, j);
        }
    }
    if (r.h[pivot][row] < 0) col_neg(r, pivot);
    return r.h[pivot][row] != 0;
}

}  // namespace

HermiteResult hermite_columns(std::vector<Vec2> cols) {
    size_t n = cols.size();
    HermiteResult r;
    r.h = std::move(cols);
    r.u.assign(n, std::vector<Int>(n, 0));
    for (size_t i = 0; i < n; ++i) r.u[i][i] = 1;
    size_t rank = 0;
    for (size_t row = 0; row < 2 && rank < n; ++row) {
        if (reduce_row(r, row, rank)) {
            r.pivot_rows.push_back(row);
            ++rank;
        }
    }
    return r;
}

std::optional<std::vector<Int>> solve_columns(const std::vector<Vec2>& cols, const Vec2& target) {
    HermiteResult r = hermite_columns(cols);
    size_t n = cols.size();
    Vec2 res = target;
    std::vector<Int> w(r.pivot_rows.size(), 0);
    for (size_t k = 0; k < r.pivot_rows.size(); ++k) {
        size_t row = r.pivot_rows[k];
        const Int& piv = r.h[k][row];
        if (res[row] % piv != 0) return std::nullopt;
        w[k] = res[row] / piv;
        res[0] -= w[k] * r.h[k][0];
        res[1] -= w[k] * r.h[k][1];
    }
    if (res[0] != 0 || res[1] != 0) return std::nullopt;
    std::vector<Int> sol(n, 0);
    for (size_t k = 0; k < w.size(); ++k)
        for (size_t i = 0; i < n; ++i) sol[i] += r.u[k][i] * w[k];
    return sol;
}

Hnf2 hnf_basis(const std::vector<Vec2>& cols) {
    // Reduce the w-row first so the pivot column is (b, c); the second pivot
    // is then (a, 0) and reduction of b mod a gives the canonical form.
    std::vector<Vec2> sw;
    sw.reserve(cols.size());
    for (const auto& v : cols) sw.push_back({v[1], v[0]});
    HermiteResult r = hermite_columns(sw);
    if (r.pivot_rows.size() != 2 || r.pivot_rows[0] != 0)
        throw domain_error("hnf_basis: lattice does not have full rank 2");
    Int c = r.h[0][0];
    Int bx = r.h[0][1];
    Int a = r.h[1][1];
    Hnf2 out;
    out.a = a;
    out.c = c;
    out.b = fmod(bx, a);
    return out;
}

Int hnf_basis_rank1(const std::vector<Vec2>& cols) {
    Int g = 0;
    for (const auto& v : cols) {
        if (v[1] != 0) throw domain_error("hnf_basis_rank1: nonzero w-coordinate over Z");
        g = gcd_int(g, v[0]);
    }
    if (g == 0) throw domain_error("hnf_basis_rank1: zero lattice");
    return g;
}

}  // namespace sgkt
