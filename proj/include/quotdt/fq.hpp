#pragma once

#include <array>
#include <cstdint>
#include <stdexcept>
#include <vector>

namespace quotdt::fq {

inline constexpr int kMaxDim = 4;

inline bool is_prime(unsigned q) {
    if (q < 2) return false;
    for (unsigned d = 2; d * d <= q; ++d)
        if (q % d == 0) return false;
    return true;
}

inline unsigned pow_mod(unsigned a, unsigned e, unsigned q) {
    unsigned long long r = 1, b = a % q;
    while (e) {
        if (e & 1) r = r * b % q;
        b = b * b % q;
        e >>= 1;
    }
    return static_cast<unsigned>(r);
}

inline unsigned inv_mod(unsigned a, unsigned q) {
    return pow_mod(a % q, q - 2, q);
}

using Vector = std::array<uint8_t, kMaxDim>;

/// Dense n x n matrix over F_q, n <= kMaxDim, q prime and < 256.
struct Matrix {
    int n = 0;
    unsigned q = 2;
    std::array<uint8_t, kMaxDim * kMaxDim> a{};

    uint8_t& at(int i, int j) { return a[static_cast<size_t>(i) * n + j]; }
    uint8_t at(int i, int j) const { return a[static_cast<size_t>(i) * n + j]; }

    bool operator==(const Matrix& rhs) const = default;
};

inline uint64_t pow_u64(uint64_t base, unsigned exp) {
    uint64_t r = 1;
    while (exp--) r *= base;
    return r;
}

inline uint64_t matrix_count(int n, unsigned q) {
    return pow_u64(q, static_cast<unsigned>(n * n));
}

/// Decode a matrix from its base-q digit index (entries in row-major order).
inline Matrix matrix_from_index(uint64_t index, int n, unsigned q) {
    Matrix m;
    m.n = n;
    m.q = q;
    for (int i = 0; i < n * n; ++i) {
        m.a[i] = static_cast<uint8_t>(index % q);
        index /= q;
    }
    return m;
}

inline Matrix mat_mul(const Matrix& x, const Matrix& y) {
    Matrix out;
    out.n = x.n;
    out.q = x.q;
    for (int i = 0; i < x.n; ++i)
        for (int j = 0; j < x.n; ++j) {
            unsigned acc = 0;
            for (int k = 0; k < x.n; ++k) acc += static_cast<unsigned>(x.at(i, k)) * y.at(k, j);
            out.at(i, j) = static_cast<uint8_t>(acc % x.q);
        }
    return out;
}

inline bool commute(const Matrix& x, const Matrix& y) {
    for (int i = 0; i < x.n; ++i)
        for (int j = 0; j < x.n; ++j) {
            unsigned xy = 0, yx = 0;
            for (int k = 0; k < x.n; ++k) {
                xy += static_cast<unsigned>(x.at(i, k)) * y.at(k, j);
                yx += static_cast<unsigned>(y.at(i, k)) * x.at(k, j);
            }
            if (xy % x.q != yx % x.q) return false;
        }
    return true;
}

inline Vector mat_apply(const Matrix& m, const Vector& v) {
    Vector out{};
    for (int i = 0; i < m.n; ++i) {
        unsigned acc = 0;
        for (int j = 0; j < m.n; ++j) acc += static_cast<unsigned>(m.at(i, j)) * v[j];
        out[i] = static_cast<uint8_t>(acc % m.q);
    }
    return out;
}

/// Incremental row-echelon span of vectors in F_q^n.
struct Span {
    int n = 0;
    unsigned q = 2;
    int rank = 0;
    std::array<Vector, kMaxDim> rows{};     // echelon rows, leading entry 1
    std::array<int, kMaxDim> pivot_col{};

    Span(int n_, unsigned q_) : n(n_), q(q_) {}

    /// Reduce v against the current rows; add it if independent.
    /// Returns true when the rank grew.
    bool add(Vector v) {
        for (int r = 0; r < rank; ++r) {
            unsigned c = v[pivot_col[r]];
            if (c == 0) continue;
            for (int j = 0; j < n; ++j)
                v[j] = static_cast<uint8_t>((v[j] + (q - c) * rows[r][j]) % q);
        }
        int lead = -1;
        for (int j = 0; j < n; ++j)
            if (v[j] != 0) { lead = j; break; }
        if (lead < 0) return false;
        unsigned inv = inv_mod(v[lead], q);
        for (int j = 0; j < n; ++j) v[j] = static_cast<uint8_t>(v[j] * inv % q);
        rows[rank] = v;
        pivot_col[rank] = lead;
        ++rank;
        return true;
    }
};

/// Basis of the kernel of the linear map given by `rows` (each a length-ncols
/// coefficient vector) acting on F_q^ncols.
inline std::vector<std::vector<uint8_t>> kernel_basis(std::vector<std::vector<uint8_t>> rows,
                                                      int ncols, unsigned q) {
    int rank = 0;
    std::vector<int> pivot_of_col(ncols, -1);
    for (int col = 0; col < ncols; ++col) {
        int pivot = -1;
        for (int i = rank; i < static_cast<int>(rows.size()); ++i)
            if (rows[i][col] != 0) { pivot = i; break; }
        if (pivot < 0) continue;
        std::swap(rows[rank], rows[pivot]);
        unsigned inv = inv_mod(rows[rank][col], q);
        for (int j = 0; j < ncols; ++j)
            rows[rank][j] = static_cast<uint8_t>(rows[rank][j] * inv % q);
        for (int i = 0; i < static_cast<int>(rows.size()); ++i) {
            if (i == rank || rows[i][col] == 0) continue;
            unsigned c = rows[i][col];
            for (int j = 0; j < ncols; ++j)
                rows[i][j] = static_cast<uint8_t>((rows[i][j] + (q - c) * rows[rank][j]) % q);
        }
        pivot_of_col[col] = rank;
        ++rank;
    }
    std::vector<std::vector<uint8_t>> basis;
    for (int f = 0; f < ncols; ++f) {
        if (pivot_of_col[f] >= 0) continue;
        std::vector<uint8_t> v(ncols, 0);
        v[f] = 1;
        for (int col = 0; col < ncols; ++col) {
            int p = pivot_of_col[col];
            if (p >= 0 && rows[p][f] != 0)
                v[col] = static_cast<uint8_t>((q - rows[p][f]) % q);
        }
        basis.push_back(std::move(v));
    }
    return basis;
}

/// Basis of the commutant {X : AX = XA} inside M_n(F_q).
inline std::vector<Matrix> commutant_basis(const Matrix& A) {
    int n = A.n;
    int dim = n * n;
    std::vector<std::vector<uint8_t>> rows;
    rows.reserve(dim);
    // coefficient of X_{pr} in (AX - XA)_{ij}: A_{ip}[r=j] - A_{rj}[p=i]
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            std::vector<uint8_t> row(dim, 0);
            for (int p = 0; p < n; ++p)
                for (int r = 0; r < n; ++r) {
                    int c = 0;
                    if (r == j) c += A.at(i, p);
                    if (p == i) c -= A.at(r, j);
                    row[p * n + r] = static_cast<uint8_t>(((c % static_cast<int>(A.q)) +
                                                           static_cast<int>(A.q)) % A.q);
                }
            rows.push_back(std::move(row));
        }
    std::vector<Matrix> basis;
    for (auto& v : kernel_basis(std::move(rows), dim, A.q)) {
        Matrix m;
        m.n = n;
        m.q = A.q;
        for (int i = 0; i < dim; ++i) m.a[i] = v[i];
        basis.push_back(m);
    }
    return basis;
}

/// Basis (as coordinate vectors over `space`) of {X in span(space) : BX = XB}.
inline std::vector<std::vector<uint8_t>> commutant_coords_within(const Matrix& B,
                                                                 const std::vector<Matrix>& space) {
    int n = B.n;
    int d = static_cast<int>(space.size());
    std::vector<std::vector<uint8_t>> rows(static_cast<size_t>(n * n),
                                           std::vector<uint8_t>(d, 0));
    for (int l = 0; l < d; ++l) {
        Matrix bx = mat_mul(B, space[l]);
        Matrix xb = mat_mul(space[l], B);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                rows[static_cast<size_t>(i) * n + j][l] =
                    static_cast<uint8_t>((bx.at(i, j) + B.q - xb.at(i, j)) % B.q);
    }
    return kernel_basis(std::move(rows), d, B.q);
}

/// The F_q-combination sum_l coords[l] * basis[l].
inline Matrix combine(const std::vector<Matrix>& basis, const std::vector<uint8_t>& coords,
                      int n, unsigned q) {
    Matrix m;
    m.n = n;
    m.q = q;
    for (size_t l = 0; l < basis.size(); ++l) {
        if (coords[l] == 0) continue;
        for (int i = 0; i < n * n; ++i)
            m.a[i] = static_cast<uint8_t>((m.a[i] + coords[l] * basis[l].a[i]) % q);
    }
    return m;
}

} // namespace quotdt::fq
