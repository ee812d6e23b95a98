#pragma once

#include <array>
#include <optional>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "quotdt/bigint.hpp"
#include "quotdt/fq.hpp"

namespace quotdt {

/// A framed representation of the 3-loop quiver over F_q: three n x n loop
/// matrices plus r framing vectors.
struct FramedTuple {
    fq::Matrix A, B, C;
    std::vector<fq::Vector> frames;

    int n() const { return A.n; }
    unsigned q() const { return A.q; }
};

/// |GL_n(F_q)| = prod_{i=0}^{n-1} (q^n - q^i).
Bigint gl_order(int n, unsigned q);

/// Stability: the frames generate F_q^n under iterated application of the
/// three loop matrices.
bool is_spanning(const FramedTuple& t);

/// Number of spanning r-tuples of frames for a fixed (A, B, C): direct
/// enumeration of all q^{rn} tuples (the reference route).
uint64_t spanning_frame_count_enum(const fq::Matrix& A, const fq::Matrix& B, const fq::Matrix& C,
                                   unsigned r);

/// Same count via the invariant-subspace complement for n <= 2 (non-spanning
/// tuples lie in a common invariant line); falls back to enumeration for
/// n >= 3.
uint64_t spanning_frame_count(const fq::Matrix& A, const fq::Matrix& B, const fq::Matrix& C,
                              unsigned r);

struct OracleOptions {
    int threads = 0;                   // <= 0: QUOTDT_THREADS, then OpenMP default
    std::array<int, 3> loop_perm = {0, 1, 2}; // role assignment of the enumerated triple
};

/// |Quot_{A^3}(O^r, n)(F_q)| via the critical-locus model: GL_n-orbits of
/// spanning pairwise-commuting framed tuples. OpenMP-parallel over the outer
/// matrix loop; throws std::runtime_error("free-action violation") if the raw
/// count is not divisible by |GL_n(F_q)|.
Bigint count_quot_points(unsigned r, int n, unsigned q, const OracleOptions& opts = {});

/// |Quot^n_r(F_q)|: GL_n-orbits of spanning framed tuples without the
/// commutativity constraint.
Bigint count_ncquot_points(unsigned r, int n, unsigned q, const OracleOptions& opts = {});

/// Serial reference implementations: enumerate every tuple directly with no
/// algebraic shortcuts. Feasible only for tiny (n, q); kept as ground truth
/// for the parallel kernels.
Bigint count_quot_points_reference(unsigned r, int n, unsigned q);
Bigint count_ncquot_points_reference(unsigned r, int n, unsigned q);

/// Raw spanning-tuple counts (before dividing by |GL_n|), exposed for the
/// divisibility diagnostics and the benchmark target.
uint64_t raw_quot_count(unsigned r, int n, unsigned q, const OracleOptions& opts = {});
uint64_t raw_ncquot_count(unsigned r, int n, unsigned q, const OracleOptions& opts = {});
uint64_t raw_quot_count_reference(unsigned r, int n, unsigned q);
uint64_t raw_ncquot_count_reference(unsigned r, int n, unsigned q);

/// Result record for one oracle invocation.
struct CountRecord {
    unsigned r = 0;
    int n = 0;
    unsigned q = 0;
    std::optional<Bigint> count_quot;
    std::optional<Bigint> count_ncquot;

    nlohmann::json to_json() const;
};

} // namespace quotdt
