#pragma once

#include "reftype/subsys.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace reftype {

/// Kernel of exp on the torus. Row i of R expresses the i-th generator in the
/// basis 2*pi*i times the simple coroots.
struct ExpKernel {
    std::string name;
    RationalMatrix R;
};

/// "sc" / "simply-connected" gives the identity; "so-odd" gives the kernel of
/// SO(2n+1) (families B, and C at rank 2, A at rank 1 via the low-rank
/// isomorphisms). Throws std::invalid_argument for unknown names.
ExpKernel kernel_preset(const std::string& name, const RootSystem& rs);

/// Reads one generator per line, entries like "1/2" separated by whitespace.
ExpKernel load_kernel_file(const std::string& path, const RootSystem& rs);

/// Validates a user matrix: square of size rank, nonsingular, containing the
/// coroot lattice and stable under the Weyl group.
ExpKernel make_kernel(const std::string& name, RationalMatrix R, const RootSystem& rs);

struct PQRatio {
    std::int64_t p = 1;
    std::int64_t q = 1;
    Rational q_over_p() const { return Rational(q, p); }
    bool operator==(const PQRatio&) const = default;
};

/// Basis of the integer solutions k of sum_i eqs[e][i] * k_i = 0.
std::vector<std::vector<std::int64_t>> integer_kernel(const std::vector<std::vector<std::int64_t>>& eqs,
                                                      std::size_t unknowns);

PQRatio pq_ratio(const WeylGroup& wg, const ExpKernel& kernel, std::size_t root);
/// (p, q) for every root index.
std::vector<PQRatio> pq_map(const WeylGroup& wg, const ExpKernel& kernel);

/// x = exp(A + iB). A is given in the basis 2*pi*i times the simple coroots,
/// B in the basis of simple coroots.
struct TorusPoint {
    std::vector<Rational> A;
    std::vector<Rational> B;
};

/// Parses "A=1/4,0" or "A=1/4,0;B=0,1".
TorusPoint parse_torus_point(const std::string& text, int rank);

RootSubsystem gamma_x(const RootSystem& rs, const std::vector<PQRatio>& pq, const TorusPoint& x);

/// Action of the Weyl group element w on torus points.
TorusPoint act_on_point(const WeylGroup& wg, std::size_t w, const TorusPoint& x);

}  // namespace reftype
