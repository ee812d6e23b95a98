#include "quotdt/oracle.hpp"

#include <cmath>
#include <stdexcept>

#include <nlohmann/json.hpp>

#include "quotdt/parallel.hpp"

namespace quotdt {

using fq::Matrix;
using fq::Vector;

Bigint gl_order(int n, unsigned q) {
    if (n < 0) throw std::invalid_argument("gl_order: n must be >= 0");
    if (!fq::is_prime(q)) throw std::invalid_argument("gl_order: q must be prime");
    Bigint qn = 1;
    for (int i = 0; i < n; ++i) qn *= q;
    Bigint out = 1, qi = 1;
    for (int i = 0; i < n; ++i) {
        out *= qn - qi;
        qi *= q;
    }
    return out;
}

bool is_spanning(const FramedTuple& t) {
    int n = t.n();
    fq::Span span(n, t.q());
    for (const auto& v : t.frames) span.add(v);
    for (int i = 0; i < span.rank && span.rank < n; ++i) {
        Vector v = span.rows[i];
        span.add(fq::mat_apply(t.A, v));
        span.add(fq::mat_apply(t.B, v));
        span.add(fq::mat_apply(t.C, v));
    }
    return span.rank == n;
}

namespace {

void decode_frames(uint64_t index, int n, unsigned q, unsigned r, std::vector<Vector>& frames) {
    frames.assign(r, Vector{});
    for (unsigned i = 0; i < r; ++i)
        for (int j = 0; j < n; ++j) {
            frames[i][j] = static_cast<uint8_t>(index % q);
            index /= q;
        }
}

bool line_invariant(const Matrix& m, const Vector& v) {
    Vector w = fq::mat_apply(m, v);
    // w parallel to v (2-dimensional cross product)
    unsigned lhs = static_cast<unsigned>(w[0]) * v[1] % m.q;
    unsigned rhs = static_cast<unsigned>(w[1]) * v[0] % m.q;
    return lhs == rhs;
}

// Representatives of P^1(F_q): (1, x) for x in F_q, then (0, 1).
std::vector<Vector> projective_line_reps(unsigned q) {
    std::vector<Vector> reps;
    for (unsigned x = 0; x < q; ++x) reps.push_back(Vector{1, static_cast<uint8_t>(x), 0, 0});
    reps.push_back(Vector{0, 1, 0, 0});
    return reps;
}

// Guard: the raw tuple count q^{3n^2+rn} must fit in the 64-bit accumulator.
void check_accumulator(unsigned r, int n, unsigned q) {
    double bits = (3.0 * n * n + static_cast<double>(r) * n) * std::log2(static_cast<double>(q));
    if (bits > 62.0)
        throw std::invalid_argument("enumeration too large for exact 64-bit accumulation");
}

void check_args(unsigned r, int n, unsigned q) {
    if (r < 1) throw std::invalid_argument("rank must be >= 1");
    if (n < 0 || n > fq::kMaxDim) throw std::invalid_argument("points n out of supported range");
    if (!fq::is_prime(q) || q > 251) throw std::invalid_argument("q must be a prime < 256");
}

struct RoleTriple {
    const Matrix* m[3];
};

void check_perm(const std::array<int, 3>& perm) {
    bool seen[3] = {false, false, false};
    for (int p : perm) {
        if (p < 0 || p > 2 || seen[p]) throw std::invalid_argument("loop_perm must permute {0,1,2}");
        seen[p] = true;
    }
}

// perm is validated before any parallel region starts
RoleTriple assign_roles(const Matrix& x, const Matrix& y, const Matrix& z,
                        const std::array<int, 3>& perm) {
    const Matrix* enumerated[3] = {&x, &y, &z};
    RoleTriple out;
    for (int i = 0; i < 3; ++i) out.m[i] = enumerated[perm[i]];
    return out;
}

} // namespace

uint64_t spanning_frame_count_enum(const Matrix& A, const Matrix& B, const Matrix& C, unsigned r) {
    int n = A.n;
    unsigned q = A.q;
    uint64_t frame_tuples = fq::pow_u64(q, r * static_cast<unsigned>(n));
    uint64_t count = 0;
    FramedTuple t{A, B, C, {}};
    for (uint64_t fi = 0; fi < frame_tuples; ++fi) {
        decode_frames(fi, n, q, r, t.frames);
        if (is_spanning(t)) ++count;
    }
    return count;
}

uint64_t spanning_frame_count(const Matrix& A, const Matrix& B, const Matrix& C, unsigned r) {
    int n = A.n;
    unsigned q = A.q;
    if (n == 0) return 1;
    if (n == 1) return fq::pow_u64(q, r) - 1;
    if (n == 2) {
        // non-spanning tuples lie in a common invariant line (or are zero)
        uint64_t m = 0;
        for (const auto& rep : projective_line_reps(q))
            if (line_invariant(A, rep) && line_invariant(B, rep) && line_invariant(C, rep)) ++m;
        uint64_t qr = fq::pow_u64(q, r);
        return qr * qr - m * (qr - 1) - 1;
    }
    return spanning_frame_count_enum(A, B, C, r);
}

uint64_t raw_quot_count(unsigned r, int n, unsigned q, const OracleOptions& opts) {
    check_args(r, n, q);
    check_accumulator(r, n, q);
    check_perm(opts.loop_perm);
    if (n == 0) return 1;
    const int64_t m_count = static_cast<int64_t>(fq::matrix_count(n, q));
    const int threads = resolve_threads(opts.threads);
    uint64_t total = 0;
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic) reduction(+ : total) num_threads(threads)
#else
    (void)threads;
#endif
    for (int64_t xi = 0; xi < m_count; ++xi) {
        Matrix x = fq::matrix_from_index(static_cast<uint64_t>(xi), n, q);
        std::vector<Matrix> comm_x = fq::commutant_basis(x);
        const uint64_t y_count = fq::pow_u64(q, static_cast<unsigned>(comm_x.size()));
        std::vector<uint8_t> y_coords(comm_x.size());
        for (uint64_t yi = 0; yi < y_count; ++yi) {
            uint64_t rem = yi;
            for (size_t l = 0; l < comm_x.size(); ++l) {
                y_coords[l] = static_cast<uint8_t>(rem % q);
                rem /= q;
            }
            Matrix y = fq::combine(comm_x, y_coords, n, q);
            // joint commutant of x and y, as a sub-basis of comm(x)
            std::vector<Matrix> z_basis;
            for (const auto& coords : fq::commutant_coords_within(y, comm_x))
                z_basis.push_back(fq::combine(comm_x, coords, n, q));
            const uint64_t z_count = fq::pow_u64(q, static_cast<unsigned>(z_basis.size()));
            std::vector<uint8_t> z_coords(z_basis.size());
            for (uint64_t zi = 0; zi < z_count; ++zi) {
                rem = zi;
                for (size_t l = 0; l < z_basis.size(); ++l) {
                    z_coords[l] = static_cast<uint8_t>(rem % q);
                    rem /= q;
                }
                Matrix z = fq::combine(z_basis, z_coords, n, q);
                RoleTriple roles = assign_roles(x, y, z, opts.loop_perm);
                total += spanning_frame_count(*roles.m[0], *roles.m[1], *roles.m[2], r);
            }
        }
    }
    return total;
}

uint64_t raw_ncquot_count(unsigned r, int n, unsigned q, const OracleOptions& opts) {
    check_args(r, n, q);
    check_accumulator(r, n, q);
    check_perm(opts.loop_perm);
    if (n == 0) return 1;
    const int64_t m_count = static_cast<int64_t>(fq::matrix_count(n, q));
    const int threads = resolve_threads(opts.threads);
    uint64_t total = 0;
    if (n == 1) {
        // every triple qualifies; a frame tuple spans iff it is nonzero
        return fq::pow_u64(q, 3) * (fq::pow_u64(q, r) - 1);
    }
    if (n == 2) {
        const uint64_t qr = fq::pow_u64(q, r);
        const uint64_t all_frames = qr * qr;
        const auto reps = projective_line_reps(q);
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic) reduction(+ : total) num_threads(threads)
#else
        (void)threads;
#endif
        for (int64_t ai = 0; ai < m_count; ++ai) {
            Matrix a = fq::matrix_from_index(static_cast<uint64_t>(ai), n, q);
            std::vector<Vector> lines_a;
            for (const auto& rep : reps)
                if (line_invariant(a, rep)) lines_a.push_back(rep);
            for (int64_t bi = 0; bi < m_count; ++bi) {
                Matrix b = fq::matrix_from_index(static_cast<uint64_t>(bi), n, q);
                std::vector<Vector> lines_ab;
                for (const auto& rep : lines_a)
                    if (line_invariant(b, rep)) lines_ab.push_back(rep);
                if (lines_ab.empty()) {
                    // every C leaves no common line: each triple contributes
                    // all_frames - 1 spanning tuples
                    total += static_cast<uint64_t>(m_count) * (all_frames - 1);
                    continue;
                }
                for (int64_t ci = 0; ci < m_count; ++ci) {
                    Matrix c = fq::matrix_from_index(static_cast<uint64_t>(ci), n, q);
                    uint64_t m = 0;
                    for (const auto& rep : lines_ab)
                        if (line_invariant(c, rep)) ++m;
                    total += all_frames - m * (qr - 1) - 1;
                }
            }
        }
        return total;
    }
    // generic (n >= 3): direct frame enumeration per triple
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic) reduction(+ : total) num_threads(threads)
#else
    (void)threads;
#endif
    for (int64_t ai = 0; ai < m_count; ++ai) {
        Matrix a = fq::matrix_from_index(static_cast<uint64_t>(ai), n, q);
        for (int64_t bi = 0; bi < m_count; ++bi) {
            Matrix b = fq::matrix_from_index(static_cast<uint64_t>(bi), n, q);
            for (int64_t ci = 0; ci < m_count; ++ci) {
                Matrix c = fq::matrix_from_index(static_cast<uint64_t>(ci), n, q);
                RoleTriple roles = assign_roles(a, b, c, opts.loop_perm);
                total += spanning_frame_count_enum(*roles.m[0], *roles.m[1], *roles.m[2], r);
            }
        }
    }
    return total;
}

uint64_t raw_quot_count_reference(unsigned r, int n, unsigned q) {
    check_args(r, n, q);
    check_accumulator(r, n, q);
    if (n == 0) return 1;
    const uint64_t m_count = fq::matrix_count(n, q);
    const uint64_t frame_tuples = fq::pow_u64(q, r * static_cast<unsigned>(n));
    uint64_t total = 0;
    FramedTuple t;
    for (uint64_t ai = 0; ai < m_count; ++ai) {
        t.A = fq::matrix_from_index(ai, n, q);
        for (uint64_t bi = 0; bi < m_count; ++bi) {
            t.B = fq::matrix_from_index(bi, n, q);
            if (!fq::commute(t.A, t.B)) continue;
            for (uint64_t ci = 0; ci < m_count; ++ci) {
                t.C = fq::matrix_from_index(ci, n, q);
                if (!fq::commute(t.B, t.C) || !fq::commute(t.C, t.A)) continue;
                for (uint64_t fi = 0; fi < frame_tuples; ++fi) {
                    decode_frames(fi, n, q, r, t.frames);
                    if (is_spanning(t)) ++total;
                }
            }
        }
    }
    return total;
}

uint64_t raw_ncquot_count_reference(unsigned r, int n, unsigned q) {
    check_args(r, n, q);
    check_accumulator(r, n, q);
    if (n == 0) return 1;
    const uint64_t m_count = fq::matrix_count(n, q);
    const uint64_t frame_tuples = fq::pow_u64(q, r * static_cast<unsigned>(n));
    uint64_t total = 0;
    FramedTuple t;
    for (uint64_t ai = 0; ai < m_count; ++ai) {
        t.A = fq::matrix_from_index(ai, n, q);
        for (uint64_t bi = 0; bi < m_count; ++bi) {
            t.B = fq::matrix_from_index(bi, n, q);
            for (uint64_t ci = 0; ci < m_count; ++ci) {
                t.C = fq::matrix_from_index(ci, n, q);
                for (uint64_t fi = 0; fi < frame_tuples; ++fi) {
                    decode_frames(fi, n, q, r, t.frames);
                    if (is_spanning(t)) ++total;
                }
            }
        }
    }
    return total;
}

namespace {

Bigint divide_by_gl(uint64_t raw, int n, unsigned q) {
    Bigint total(raw);
    Bigint g = gl_order(n, q);
    if (total % g != 0) throw std::runtime_error("free-action violation");
    return total / g;
}

} // namespace

Bigint count_quot_points(unsigned r, int n, unsigned q, const OracleOptions& opts) {
    if (n == 0) return 1;
    return divide_by_gl(raw_quot_count(r, n, q, opts), n, q);
}

Bigint count_ncquot_points(unsigned r, int n, unsigned q, const OracleOptions& opts) {
    if (n == 0) return 1;
    return divide_by_gl(raw_ncquot_count(r, n, q, opts), n, q);
}

Bigint count_quot_points_reference(unsigned r, int n, unsigned q) {
    if (n == 0) return 1;
    return divide_by_gl(raw_quot_count_reference(r, n, q), n, q);
}

Bigint count_ncquot_points_reference(unsigned r, int n, unsigned q) {
    if (n == 0) return 1;
    return divide_by_gl(raw_ncquot_count_reference(r, n, q), n, q);
}

nlohmann::json CountRecord::to_json() const {
    nlohmann::json j{{"r", r}, {"n", n}, {"q", q}};
    if (count_quot) j["count_quot"] = count_quot->str();
    if (count_ncquot) j["count_ncquot"] = count_ncquot->str();
    return j;
}

} // namespace quotdt
