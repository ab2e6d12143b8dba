// qes: band-edge spectra of quasi-exactly solvable elliptic potentials.
// SPDX-License-Identifier: MIT
//
// Independent numerical validation. Nothing here reuses the algebraic
// machinery: band edges come from a finite-difference Hill discretization,
// eigenfunction claims are checked by applying the differential operator
// on a grid, and the closed-form limits of the potentials are compared
// against their elliptic originals at extreme moduli. Agreement between
// this module and the recursion pipeline is the core correctness argument
// of the library.

#ifndef QES_ORACLE_HPP
#define QES_ORACLE_HPP

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <functional>
#include <limits>
#include <utility>
#include <vector>

#include "qes/elliptic.hpp"
#include "qes/errors.hpp"
#include "qes/linalg.hpp"
#include "qes/potentials.hpp"

namespace qes {

// Uniformly sampled real function. values[i] sits at a + i*h and the last
// point is b, so values.size() == round((b - a) / h) + 1.
struct GridFunction {
    double a = 0.0;
    double b = 0.0;
    double h = 0.0;
    std::vector<double> values;
};

template <typename F>
GridFunction sample_function(F&& f, double a, double b, std::size_t count) {
    if (count < 2) throw Error("sample_function: need at least two points");
    if (!(b > a)) throw Error("sample_function: empty domain");
    GridFunction g;
    g.a = a;
    g.b = b;
    g.h = (b - a) / static_cast<double>(count - 1);
    g.values.resize(count);
    for (std::size_t i = 0; i < count; ++i)
        g.values[i] = f(a + g.h * static_cast<double>(i));
    return g;
}

// Largest pointwise violation of the wave equation, relative to the size
// of the state: max |-D2 psi + (V - E) psi| / max |psi| with the 3-point
// central second difference. The grid must keep clear of potential poles.
inline double residual_norm(const PotentialSpec& spec, double energy, const GridFunction& psi) {
    const std::size_t n = psi.values.size();
    if (n < 66) throw GridTooCoarse("residual_norm: need at least 64 interior points");
    double worst = 0.0;
    double peak = 0.0;
    for (double v : psi.values) peak = std::max(peak, std::abs(v));
    if (!(peak > 0.0)) throw Error("residual_norm: state is identically zero");
    const double h2 = psi.h * psi.h;
    for (std::size_t i = 1; i + 1 < n; ++i) {
        const double x = psi.a + psi.h * static_cast<double>(i);
        const double lap = (psi.values[i - 1] - 2.0 * psi.values[i] + psi.values[i + 1]) / h2;
        const double r = -lap + (eval_potential(spec, x) - energy) * psi.values[i];
        worst = std::max(worst, std::abs(r));
    }
    return worst / peak;
}

// Smallest Wronskian magnitude of two states on a shared grid, in units of
// the product of their peak magnitudes. Independent solutions at one energy
// keep this bounded away from zero; proportional pairs send it to rounding.
inline double wronskian_min(const GridFunction& f, const GridFunction& g) {
    if (f.values.size() != g.values.size() || f.a != g.a || f.h != g.h)
        throw Error("wronskian_min: states live on different grids");
    const std::size_t n = f.values.size();
    if (n < 3) throw Error("wronskian_min: need at least three points");
    double pf = 0.0, pg = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        pf = std::max(pf, std::abs(f.values[i]));
        pg = std::max(pg, std::abs(g.values[i]));
    }
    const double scale = pf * pg;
    if (!(scale > 0.0)) return 0.0;
    double least = std::numeric_limits<double>::infinity();
    for (std::size_t i = 1; i + 1 < n; ++i) {
        const double df = (f.values[i + 1] - f.values[i - 1]) / (2.0 * f.h);
        const double dg = (g.values[i + 1] - g.values[i - 1]) / (2.0 * g.h);
        least = std::min(least, std::abs(f.values[i] * dg - g.values[i] * df));
    }
    return least / scale;
}

enum class BoundaryCondition { Periodic, Antiperiodic, Dirichlet };

// One self-adjoint eigenproblem for -psi'' + V psi. Periodic and
// antiperiodic conditions discretize one period with a signed wrap row;
// Dirichlet pins the state to zero at both ends of [a, b].
struct HillProblem {
    std::function<double(double)> potential;
    double period = 0.0;
    BoundaryCondition bc = BoundaryCondition::Periodic;
    double a = 0.0;
    double b = 0.0;
    int grid_n = 2048;
};

inline HillProblem hill_periodic(std::function<double(double)> v, double period, int n = 2048) {
    HillProblem p;
    p.potential = std::move(v);
    p.period = period;
    p.bc = BoundaryCondition::Periodic;
    p.grid_n = n;
    return p;
}

inline HillProblem hill_antiperiodic(std::function<double(double)> v, double period,
                                     int n = 2048) {
    HillProblem p = hill_periodic(std::move(v), period, n);
    p.bc = BoundaryCondition::Antiperiodic;
    return p;
}

inline HillProblem hill_dirichlet(std::function<double(double)> v, double a, double b,
                                  int n = 2048) {
    HillProblem p;
    p.potential = std::move(v);
    p.bc = BoundaryCondition::Dirichlet;
    p.a = a;
    p.b = b;
    p.grid_n = n;
    return p;
}

namespace detail {

inline std::vector<double> hill_eigenvalues(const HillProblem& p, int count, int n) {
    if (n < 64) throw GridTooCoarse("hill_eigenvalues: grid must have at least 64 points");
    CyclicTridiagonal T;
    if (p.bc == BoundaryCondition::Dirichlet) {
        if (!(p.b > p.a)) throw Error("hill_eigenvalues: empty Dirichlet window");
        const double h = (p.b - p.a) / n;
        const int m = n - 1;
        if (count > m) throw Error("hill_eigenvalues: more levels requested than grid rows");
        T.diag.resize(static_cast<std::size_t>(m));
        T.off.assign(static_cast<std::size_t>(m - 1), -1.0 / (h * h));
        for (int i = 0; i < m; ++i)
            T.diag[static_cast<std::size_t>(i)] =
                2.0 / (h * h) + p.potential(p.a + h * (i + 1));
        T.corner = 0.0;
    } else {
        if (!(p.period > 0.0)) throw Error("hill_eigenvalues: period must be positive");
        if (count > n) throw Error("hill_eigenvalues: more levels requested than grid rows");
        const double h = p.period / n;
        T.diag.resize(static_cast<std::size_t>(n));
        T.off.assign(static_cast<std::size_t>(n - 1), -1.0 / (h * h));
        for (int i = 0; i < n; ++i)
            T.diag[static_cast<std::size_t>(i)] = 2.0 / (h * h) + p.potential(h * i);
        T.corner = (p.bc == BoundaryCondition::Periodic ? -1.0 : 1.0) / (h * h);
    }
    return lowest_eigenvalues(T, count);
}

} // namespace detail

// Lowest eigenvalues of the discretized problem, Richardson-extrapolated
// across the stated grid and its refinement by two. The raw shift between
// the two grids bounds the remaining discretization error; a level whose
// shift exceeds the tolerance is not trusted and raises instead.
inline std::vector<double> band_edges_numeric(const HillProblem& problem, int count,
                                              double tol = 1e-2) {
    if (count < 1) throw Error("band_edges_numeric: need a positive level count");
    const std::vector<double> coarse = detail::hill_eigenvalues(problem, count, problem.grid_n);
    const std::vector<double> fine = detail::hill_eigenvalues(problem, count, 2 * problem.grid_n);
    std::vector<double> out(static_cast<std::size_t>(count));
    for (int k = 0; k < count; ++k) {
        const double shift = std::abs(fine[static_cast<std::size_t>(k)] -
                                      coarse[static_cast<std::size_t>(k)]);
        if (shift > tol * (1.0 + std::abs(fine[static_cast<std::size_t>(k)])))
            throw ConvergenceFailure("band_edges_numeric: level has not converged in the grid");
        out[static_cast<std::size_t>(k)] =
            (4.0 * fine[static_cast<std::size_t>(k)] - coarse[static_cast<std::size_t>(k)]) / 3.0;
    }
    std::sort(out.begin(), out.end());
    return out;
}

// A numeric band edge together with the boundary condition that produced
// it, so algebraic levels can be matched class by class.
struct NumericLevel {
    double value = 0.0;
    BoundaryCondition bc = BoundaryCondition::Periodic;
};

// Band edges of a potential family under its natural boundary conditions.
// Periodic families merge the periodic and antiperiodic spectra over the
// translation period of their eigenfunctions: one full period when both
// labels are integers, the doubled period otherwise, because half-odd
// lines carry states that only close after two potential periods. The
// singular families get Dirichlet problems on their natural windows with
// a small guard band at the poles; the guard error is removed by linear
// extrapolation in the guard width.
inline std::vector<NumericLevel> band_edges_for_spec(const PotentialSpec& spec, int count,
                                                     int grid_n = 2048, double tol = 1e-2) {
    const double K = spec.modulus.K();
    const auto sampler = [spec](double x) { return eval_potential(spec, x); };
    if (spec.family == Family::AssociatedLame) {
        const bool doubled = !is_integer(spec.m) || !is_integer(spec.l);
        const double period = (doubled ? 4.0 : 2.0) * K;
        HillProblem per = hill_periodic(sampler, period, grid_n);
        HillProblem anti = hill_antiperiodic(sampler, period, grid_n);
        const auto ep = band_edges_numeric(per, count, tol);
        const auto ea = band_edges_numeric(anti, count, tol);
        std::vector<NumericLevel> merged;
        merged.reserve(ep.size() + ea.size());
        for (double v : ep) merged.push_back({v, BoundaryCondition::Periodic});
        for (double v : ea) merged.push_back({v, BoundaryCondition::Antiperiodic});
        std::sort(merged.begin(), merged.end(),
                  [](const NumericLevel& x, const NumericLevel& y) { return x.value < y.value; });
        merged.resize(static_cast<std::size_t>(count));
        return merged;
    }
    const double lo = spec.family == Family::Tan ? -K : 0.0;
    const double hi = spec.family == Family::Tan ? K : 2.0 * K;
    const double guard = 1e-4 * K;
    const auto solve_guarded = [&](double g) {
        return band_edges_numeric(hill_dirichlet(sampler, lo + g, hi - g, grid_n), count, tol);
    };
    const auto narrow = solve_guarded(guard);
    const auto wide = solve_guarded(2.0 * guard);
    std::vector<NumericLevel> out(static_cast<std::size_t>(count));
    for (int k = 0; k < count; ++k)
        out[static_cast<std::size_t>(k)] = {2.0 * narrow[static_cast<std::size_t>(k)] -
                                                wide[static_cast<std::size_t>(k)],
                                            BoundaryCondition::Dirichlet};
    return out;
}

enum class LimitDirection { KToZero, KToOne };

// Compares a potential near a degenerate modulus against its closed-form
// limit. The associated Lame family flattens to a free particle as k -> 0
// and deepens into a shifted Poschl-Teller well as k -> 1; the singular
// families keep one trigonometric or hyperbolic wall. Returns the largest
// deviation on the sampled window.
inline double limit_compare(const PotentialSpec& spec, LimitDirection which) {
    // Probe modulus 1e-8 away from the degenerate endpoint.
    PotentialSpec probe = spec;
    probe.modulus = Modulus(which == LimitDirection::KToZero ? Rational(1, 100000000)
                                                             : Rational(99999999, 100000000));
    double lo = 0.0, hi = 0.0;
    std::function<double(double)> form;
    if (spec.family == Family::AssociatedLame) {
        const double mm = to_double(spec.m * (spec.m + 1));
        const double ll = to_double(spec.l * (spec.l + 1));
        lo = -3.0;
        hi = 3.0;
        if (which == LimitDirection::KToZero) {
            form = [](double) { return 0.0; };
        } else {
            form = [mm, ll](double x) {
                const double sech = 1.0 / std::cosh(x);
                return -mm * sech * sech + mm + ll;
            };
        }
    } else if (spec.family == Family::Tan && which == LimitDirection::KToZero) {
        const double c = static_cast<double>(spec.n + 1) * (spec.n + 4);
        lo = -1.2;
        hi = 1.2;
        form = [c](double x) {
            const double t = std::tan(x);
            return 2.0 * t * t - c;
        };
    } else if (spec.family == Family::Cot && which == LimitDirection::KToOne) {
        lo = 0.5;
        hi = 3.0;
        form = [](double x) {
            const double cs = 1.0 / std::sinh(x);
            return 2.0 * cs * cs + 2.0;
        };
    } else {
        throw Error("limit_compare: no closed-form limit for this family and direction");
    }
    double worst = 0.0;
    const int npts = 121;
    for (int i = 0; i < npts; ++i) {
        const double x = lo + (hi - lo) * i / (npts - 1);
        worst = std::max(worst, std::abs(eval_potential(probe, x) - form(x)));
    }
    return worst;
}

} // namespace qes

#endif // QES_ORACLE_HPP
