#include "reftype/lattice.hpp"

#include <fstream>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace reftype {

namespace {

std::vector<Rational> times_inverse(const std::vector<Rational>& row, const RationalMatrix& inv) {
    // row vector times matrix
    std::vector<Rational> out(inv.cols(), Rational(0));
    for (std::size_t k = 0; k < row.size(); ++k)
        if (row[k] != 0)
            for (std::size_t c = 0; c < inv.cols(); ++c) out[c] += row[k] * inv(k, c);
    return out;
}

bool all_integral(const std::vector<Rational>& v) {
    for (const auto& x : v)
        if (!is_integral(x)) return false;
    return true;
}

}  // namespace

ExpKernel make_kernel(const std::string& name, RationalMatrix R, const RootSystem& rs) {
    const auto n = static_cast<std::size_t>(rs.rank());
    if (R.rows() != n || R.cols() != n)
        throw std::invalid_argument("kernel matrix must be " + std::to_string(n) + "x" + std::to_string(n));
    RationalMatrix inv = R.inverse();  // throws when singular
    if (!inv.is_integral())
        throw std::invalid_argument("kernel lattice does not contain the coroot lattice");
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t g = 0; g < n; ++g) {
            std::vector<Rational> h(n);
            for (std::size_t j = 0; j < n; ++j) h[j] = R(g, j);
            // s_i(a_j^vee) = a_j^vee - <a_i, a_j^vee> a_i^vee
            Rational shift(0);
            for (std::size_t j = 0; j < n; ++j)
                shift += h[j] * rs.coroot_pairing(rs.simple_root(static_cast<int>(i)), rs.simple_root(static_cast<int>(j)));
            h[i] -= shift;
            if (!all_integral(times_inverse(h, inv)))
                throw std::invalid_argument("kernel lattice is not stable under the Weyl group");
        }
    }
    return ExpKernel{name, std::move(R)};
}

ExpKernel kernel_preset(const std::string& name, const RootSystem& rs) {
    const LieType& t = rs.lie_type();
    const auto n = static_cast<std::size_t>(t.rank);
    if (name == "sc" || name == "simply-connected") return make_kernel("sc", RationalMatrix::identity(n), rs);
    if (name == "so-odd") {
        // Adjoin half of the coroot of the short simple root at the end of the B-chain.
        std::size_t short_node = 0;
        if (t.family == Family::B) short_node = n - 1;
        else if (t.family == Family::C && n == 2) short_node = 0;
        else if (t.family == Family::A && n == 1) short_node = 0;
        else
            throw std::invalid_argument("so-odd kernel is defined for family B (and C2, A1), not " + t.name());
        RationalMatrix R = RationalMatrix::identity(n);
        R(short_node, short_node) = Rational(1, 2);
        return make_kernel("so-odd", std::move(R), rs);
    }
    throw std::invalid_argument("unknown kernel preset '" + name + "'");
}

ExpKernel load_kernel_file(const std::string& path, const RootSystem& rs) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open kernel file '" + path + "'");
    std::vector<std::vector<Rational>> rows;
    std::string line;
    while (std::getline(in, line)) {
        if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        std::istringstream ls(line);
        std::vector<Rational> row;
        std::string tok;
        while (ls >> tok) row.push_back(parse_rational(tok));
        if (!row.empty()) rows.push_back(std::move(row));
    }
    if (rows.empty()) throw std::invalid_argument("kernel file '" + path + "' is empty");
    RationalMatrix R(rows.size(), rows[0].size());
    for (std::size_t r = 0; r < rows.size(); ++r) {
        if (rows[r].size() != rows[0].size())
            throw std::invalid_argument("kernel file '" + path + "' has rows of different lengths");
        for (std::size_t c = 0; c < rows[r].size(); ++c) R(r, c) = rows[r][c];
    }
    return make_kernel(path, std::move(R), rs);
}

std::vector<std::vector<std::int64_t>> integer_kernel(const std::vector<std::vector<std::int64_t>>& eqs,
                                                      std::size_t unknowns) {
    // Column reduction A U = lower echelon with U unimodular. The columns of U
    // whose image column is zero span the integer kernel.
    std::vector<std::vector<std::int64_t>> a = eqs;  // a[row][col]
    std::vector<std::vector<std::int64_t>> u(unknowns, std::vector<std::int64_t>(unknowns, 0));
    for (std::size_t i = 0; i < unknowns; ++i) u[i][i] = 1;

    auto col_op = [&](std::size_t c1, std::size_t c2, std::int64_t x, std::int64_t y, std::int64_t z,
                      std::int64_t w) {
        // (col c1, col c2) <- (x c1 + y c2, z c1 + w c2), determinant +-1
        for (auto& row : a) {
            std::int64_t p = row[c1], q = row[c2];
            row[c1] = x * p + y * q;
            row[c2] = z * p + w * q;
        }
        for (auto& row : u) {
            std::int64_t p = row[c1], q = row[c2];
            row[c1] = x * p + y * q;
            row[c2] = z * p + w * q;
        }
    };

    std::size_t pivot_col = 0;
    for (std::size_t r = 0; r < a.size() && pivot_col < unknowns; ++r) {
        for (std::size_t c = pivot_col + 1; c < unknowns; ++c) {
            std::int64_t p = a[r][pivot_col], q = a[r][c];
            if (q == 0) continue;
            // extended gcd: s p + t q = g
            std::int64_t old_r = p, cur_r = q, old_s = 1, cur_s = 0, old_t = 0, cur_t = 1;
            while (cur_r != 0) {
                std::int64_t quo = old_r / cur_r;
                std::int64_t tmp = old_r - quo * cur_r;
                old_r = cur_r;
                cur_r = tmp;
                tmp = old_s - quo * cur_s;
                old_s = cur_s;
                cur_s = tmp;
                tmp = old_t - quo * cur_t;
                old_t = cur_t;
                cur_t = tmp;
            }
            std::int64_t g = old_r;
            // new pivot column = s*p_col + t*q_col, other = (-q/g) p_col + (p/g) q_col
            col_op(pivot_col, c, old_s, old_t, -q / g, p / g);
        }
        if (a[r][pivot_col] != 0) ++pivot_col;
    }
    std::vector<std::vector<std::int64_t>> basis;
    for (std::size_t c = pivot_col; c < unknowns; ++c) {
        std::vector<std::int64_t> v(unknowns);
        for (std::size_t i = 0; i < unknowns; ++i) v[i] = u[i][c];
        basis.push_back(std::move(v));
    }
    return basis;
}

PQRatio pq_ratio(const WeylGroup& wg, const ExpKernel& kernel, std::size_t root) {
    const RootSystem& rs = wg.root_system();
    if (root >= rs.num_roots()) throw std::invalid_argument("pq_ratio: root index out of range");
    const int n = rs.rank();
    // Conjugate the root onto a simple root; the kernel lattice is W-stable, so
    // its coordinates over the conjugated base are unchanged.
    int j = -1;
    for (std::size_t w = 0; w < wg.order() && j < 0; ++w) {
        std::size_t img = wg.apply_root(w, root);
        for (int i = 0; i < n; ++i)
            if (rs.simple_index(i) == img) {
                j = i;
                break;
            }
    }
    const RationalMatrix& R = kernel.R;
    std::int64_t den = 1;
    for (std::size_t r = 0; r < R.rows(); ++r)
        for (std::size_t c = 0; c < R.cols(); ++c) den = std::lcm(den, R(r, c).denominator());
    std::vector<std::vector<std::int64_t>> eqs;
    for (int beta = 0; beta < n; ++beta) {
        if (beta == j) continue;
        std::vector<std::int64_t> row;
        for (int i = 0; i < n; ++i) {
            Rational v = R(static_cast<std::size_t>(i), static_cast<std::size_t>(beta)) * den;
            row.push_back(v.numerator());
        }
        eqs.push_back(std::move(row));
    }
    std::vector<Rational> projected;
    for (const auto& k : integer_kernel(eqs, static_cast<std::size_t>(n))) {
        Rational v(0);
        for (int i = 0; i < n; ++i) v += R(static_cast<std::size_t>(i), static_cast<std::size_t>(j)) * k[static_cast<std::size_t>(i)];
        projected.push_back(v);
    }
    Rational g = rational_gcd(projected);
    if (g == 0) throw std::logic_error("pq_ratio: degenerate kernel lattice");
    return PQRatio{g.numerator(), g.denominator()};
}

std::vector<PQRatio> pq_map(const WeylGroup& wg, const ExpKernel& kernel) {
    std::vector<PQRatio> out;
    for (std::size_t i = 0; i < wg.root_system().num_roots(); ++i) out.push_back(pq_ratio(wg, kernel, i));
    return out;
}

TorusPoint parse_torus_point(const std::string& text, int rank) {
    TorusPoint x;
    x.A.assign(static_cast<std::size_t>(rank), Rational(0));
    x.B.assign(static_cast<std::size_t>(rank), Rational(0));
    std::stringstream ss(text);
    std::string part;
    while (std::getline(ss, part, ';')) {
        auto eq = part.find('=');
        if (eq == std::string::npos) throw std::invalid_argument("malformed torus point '" + text + "'");
        std::string key = part.substr(0, eq);
        key.erase(0, key.find_first_not_of(' '));
        key.erase(key.find_last_not_of(' ') + 1);
        auto values = parse_rational_list(part.substr(eq + 1));
        if (values.size() != static_cast<std::size_t>(rank))
            throw std::invalid_argument("torus point component '" + key + "' needs " + std::to_string(rank) + " entries");
        if (key == "A") x.A = values;
        else if (key == "B") x.B = values;
        else throw std::invalid_argument("unknown torus point component '" + key + "'");
    }
    return x;
}

RootSubsystem gamma_x(const RootSystem& rs, const std::vector<PQRatio>& pq, const TorusPoint& x) {
    const int n = rs.rank();
    if (x.A.size() != static_cast<std::size_t>(n) || x.B.size() != static_cast<std::size_t>(n))
        throw std::invalid_argument("torus point has wrong dimension");
    if (pq.size() != rs.num_roots()) throw std::invalid_argument("pq map does not match the root system");
    RootSubsystem out;
    for (std::size_t r = 0; r < rs.num_roots(); ++r) {
        Rational a(0), b(0);
        for (int j = 0; j < n; ++j) {
            Rational c = rs.coroot_pairing(rs.root(r), rs.simple_root(j));
            a += x.A[static_cast<std::size_t>(j)] * c;
            b += x.B[static_cast<std::size_t>(j)] * c;
        }
        if (b == 0 && is_integral(pq[r].q_over_p() * a)) out.root_indices.push_back(r);
    }
    out.closed = is_closed(rs, out.root_indices);
    return out;
}

TorusPoint act_on_point(const WeylGroup& wg, std::size_t w, const TorusPoint& x) {
    const RootSystem& rs = wg.root_system();
    const int n = rs.rank();
    auto transform = [&](const std::vector<Rational>& coords) {
        WeightVec v(rs.ambient_dim());
        for (int j = 0; j < n; ++j)
            if (coords[static_cast<std::size_t>(j)] != 0)
                v += coords[static_cast<std::size_t>(j)] * rs.dual_root(rs.simple_root(j));
        WeightVec img = wg.apply(w, v);
        std::vector<Rational> out;
        for (int i = 0; i < n; ++i) out.push_back(rs.pairing(img, rs.fundamental_weights()[static_cast<std::size_t>(i)]));
        return out;
    };
    return TorusPoint{transform(x.A), transform(x.B)};
}

}  // namespace reftype
