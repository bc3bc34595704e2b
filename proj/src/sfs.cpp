#include "ratmeyer/sfs.hpp"

#include <random>
#include <sstream>
#include <thread>

#include "ratmeyer/quadrature.hpp"

namespace ratmeyer {

namespace {
constexpr double kTwoPi = 6.28318530717958647692;
}

Cx eval_fj(int j, const CxProfile& phi, double xi) {
    if (j == 0) {
        if (xi > 0.25) return phi(xi - 0.25);
        if (xi < -0.25) return phi(xi + 0.25);
        return phi(0.0);
    }
    auto cj = [j](Cx z) { return (j & 1) ? std::conj(z) : z; };
    double sgn = (j & 1) ? -1.0 : 1.0;
    double c = 0.5 * j + 0.25;
    return cj(phi(xi - c)) + sgn * cj(phi(xi + c));
}

Cx eval_fj(int j, const BumpProfile& phi, double xi) {
    // real profile: conjugation is a no-op, the sign factor is not
    if (j == 0) {
        if (xi > 0.25) return phi(xi - 0.25);
        if (xi < -0.25) return phi(xi + 0.25);
        return phi(0.0);
    }
    double sgn = (j & 1) ? -1.0 : 1.0;
    double c = 0.5 * j + 0.25;
    return phi(xi - c) + sgn * phi(xi + c);
}

std::vector<std::pair<Rational, Rational>> fj_support(int j, const Rational& delta) {
    Rational half(1, 2);
    if (j == 0) {
        return {{-half - delta, half + delta}};
    }
    Rational a = Rational(j) * half - delta;
    Rational b = Rational(j + 1) * half + delta;
    return {{-b, -a}, {a, b}};
}

Cx eval_tensor(const std::vector<int>& jj, const BumpProfile& phi, const std::vector<double>& xi) {
    Cx prod = 1.0;
    for (size_t i = 0; i < jj.size(); ++i) {
        prod *= eval_fj(jj[i], phi, xi[i]);
        if (prod == Cx(0)) return prod;
    }
    return prod;
}

BoxUnion tensor_support(const std::vector<int>& jj, const Rational& delta) {
    std::vector<std::vector<std::pair<Rational, Rational>>> axes;
    axes.reserve(jj.size());
    for (int j : jj) axes.push_back(fj_support(j, delta));
    return BoxUnion::product(axes);
}

DualGramianReport dual_gramian_residual(const BumpProfile& phi, int j_max, double xi_lo, double xi_hi,
                                        long grid_points, int k_max, int threads) {
    // f_j vanishes on the window unless j/2 - delta <= max|xi|, so the sum
    // truncates from the first factor alone.
    double reach = std::max(std::abs(xi_lo), std::abs(xi_hi)) + phi.delta_d();
    int required = int(std::ceil(2 * reach)) + 1;
    if (j_max < required) {
        std::ostringstream os;
        os << "dual_gramian_residual: j_max=" << j_max << " too small; need at least " << required
           << " to cover |xi| <= " << reach;
        throw std::invalid_argument(os.str());
    }

    auto scan = [&](long i_begin, long i_end, DualGramianReport& rep) {
        std::vector<Cx> at_xi(static_cast<size_t>(j_max) + 1);
        for (long i = i_begin; i < i_end; ++i) {
            double xi = xi_lo + (xi_hi - xi_lo) * double(i) / double(grid_points - 1);
            for (int j = 0; j <= j_max; ++j) at_xi[size_t(j)] = eval_fj(j, phi, xi);
            for (int k = -k_max; k <= k_max; ++k) {
                Cx sum = 0;
                for (int j = 0; j <= j_max; ++j) {
                    if (at_xi[size_t(j)] == Cx(0)) continue;
                    sum += at_xi[size_t(j)] * std::conj(eval_fj(j, phi, xi + k));
                }
                double res = std::abs(sum - (k == 0 ? Cx(1) : Cx(0)));
                if (res > rep.max_residual) {
                    rep.max_residual = res;
                    rep.worst_xi = xi;
                    rep.worst_k = k;
                }
            }
        }
    };

    DualGramianReport rep;
    rep.j_max = j_max;
    rep.k_max = k_max;
    rep.grid_points = grid_points;
    threads = std::max(1, threads);
    if (threads == 1) {
        scan(0, grid_points, rep);
    } else {
        const size_t nparts = size_t(threads);
        std::vector<DualGramianReport> parts(nparts);
        std::vector<std::thread> pool;
        long chunk = (grid_points + threads - 1) / threads;
        for (int t = 0; t < threads; ++t)
            pool.emplace_back(scan, t * chunk, std::min(grid_points, (t + 1) * chunk),
                              std::ref(parts[size_t(t)]));
        for (auto& th : pool) th.join();
        for (const auto& part : parts)
            if (part.max_residual > rep.max_residual) {
                rep.max_residual = part.max_residual;
                rep.worst_xi = part.worst_xi;
                rep.worst_k = part.worst_k;
            }
    }
    return rep;
}

namespace {

std::vector<std::pair<double, double>> interval_intersection(
    const std::vector<std::pair<Rational, Rational>>& a, const std::vector<std::pair<Rational, Rational>>& b) {
    std::vector<std::pair<double, double>> out;
    for (const auto& [a0, a1] : a)
        for (const auto& [b0, b1] : b) {
            Rational lo = a0 > b0 ? a0 : b0;
            Rational hi = a1 < b1 ? a1 : b1;
            if (lo < hi) out.emplace_back(lo.to_double(), hi.to_double());
        }
    return out;
}

} // namespace

Cx sfs_inner_product(const BumpProfile& phi, const std::vector<int>& j0, const std::vector<long>& k0,
                     const std::vector<int>& j1, const std::vector<long>& k1, double nodes_per_unit) {
    const size_t n = j0.size();
    std::vector<Quad1D> axes(n);
    std::vector<double> dk(n);
    for (size_t i = 0; i < n; ++i) {
        auto overlap = interval_intersection(fj_support(j0[i], phi.delta()), fj_support(j1[i], phi.delta()));
        if (overlap.empty()) return 0.0;  // disjoint supports, no quadrature
        dk[i] = double(k0[i] - k1[i]);
        double per_unit = std::max(nodes_per_unit, 8.0 * std::abs(dk[i]) + 32.0);
        axes[i] = composite_gl(overlap, per_unit, 32);
    }
    return integrate_tensor(axes, [&](const std::vector<double>& xi) {
        Cx val = eval_tensor(j0, phi, xi) * std::conj(eval_tensor(j1, phi, xi));
        double phase = 0;
        for (size_t i = 0; i < n; ++i) phase += dk[i] * xi[i];
        return val * std::polar(1.0, -kTwoPi * phase);
    });
}

SfsOrthoReport orthonormality_check_sfs(const BumpProfile& phi, int j_cap, long k_cap, int n, int trials,
                                        std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> jd(0, j_cap);
    std::uniform_int_distribution<long> kd(-k_cap, k_cap);
    SfsOrthoReport rep;
    const size_t nn = size_t(n);
    for (int t = 0; t < trials; ++t) {
        std::vector<int> j0(nn), j1(nn);
        std::vector<long> k0(nn), k1(nn);
        for (size_t i = 0; i < nn; ++i) {
            j0[i] = jd(rng);
            k0[i] = kd(rng);
        }
        if (t % 4 == 0) {  // exercise the diagonal as well
            j1 = j0;
            k1 = k0;
        } else {
            for (size_t i = 0; i < nn; ++i) {
                j1[i] = jd(rng);
                k1[i] = kd(rng);
            }
        }
        Cx ip = sfs_inner_product(phi, j0, k0, j1, k1);
        double expected = (j0 == j1 && k0 == k1) ? 1.0 : 0.0;
        double dev = std::abs(ip - Cx(expected));
        if (dev > rep.max_deviation) rep.max_deviation = dev;
        ++rep.pairs_tested;
    }
    return rep;
}

} // namespace ratmeyer
