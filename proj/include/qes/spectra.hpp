// qes: band-edge spectra of quasi-exactly solvable elliptic potentials.
// SPDX-License-Identifier: MIT
//
// Algebraic band-edge energies. For one case the energies are the roots
// of the monic critical polynomial; they are located by a sign-change
// scan with bisection and a guarded Newton polish, certified as exact
// rationals when a small-denominator candidate is an exact root, and
// cross-checked against the eigenvalues of the assembled Hamiltonian
// matrix, which reach the same numbers through entirely different
// arithmetic. A potential specification merges the spectra of every
// algebraic line through its parameter point.

#ifndef QES_SPECTRA_HPP
#define QES_SPECTRA_HPP

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "qes/cases.hpp"
#include "qes/errors.hpp"
#include "qes/liealg.hpp"
#include "qes/linalg.hpp"
#include "qes/potentials.hpp"
#include "qes/recurrence.hpp"

namespace qes {

struct RunConfig {
    double root_tol = 1e-12;     // Newton convergence, relative
    double residual_tol = 1e-8;  // allowed matrix / polynomial disagreement
    double oracle_tol = 1e-3;    // allowed discretized-operator disagreement
    int grid_n = 2048;           // base grid for the discretized oracle
};

struct CaseSpectrum {
    int case_id = 0;
    int n = 0;
    CriticalPolynomialBundle bundle;
    std::vector<double> roots;                  // ascending, n+1 entries
    std::vector<std::optional<Rational>> exact; // certified rational roots
    double matrix_mismatch = 0.0;               // against the Hamiltonian eigenvalues
};

namespace detail {

// Exact polynomial evaluation, ascending coefficients.
inline Rational horner_exact(const std::vector<Rational>& poly, const Rational& x) {
    Rational acc(0);
    for (std::size_t t = poly.size(); t-- > 0;) acc = acc * x + poly[t];
    return acc;
}

// Nearest small-denominator rational via continued fractions, then exact
// verification against the polynomial. Certification never guesses: a
// candidate is accepted only when it is a root exactly.
inline std::optional<Rational> certify_rational_root(const std::vector<Rational>& monic, double r,
                                                     double tol) {
    const double scale = std::max(1.0, std::abs(r));
    // convergents p/q of the continued fraction of r, denominators capped
    std::int64_t pm = 1, qm = 0; // previous convergent
    std::int64_t p = static_cast<std::int64_t>(std::floor(r));
    std::int64_t q = 1;
    double x = r - std::floor(r);
    for (int it = 0; it < 64; ++it) {
        const Rational cand(p, q);
        if (std::abs(to_double(cand) - r) <= tol * scale && horner_exact(monic, cand) == 0) return cand;
        if (x < 1e-15) break;
        x = 1.0 / x;
        const double af = std::floor(x);
        if (af > 9e17) break;
        const std::int64_t a = static_cast<std::int64_t>(af);
        x -= af;
        const std::int64_t pn = a * p + pm;
        const std::int64_t qn = a * q + qm;
        if (qn > 1000000 || qn <= 0) break;
        pm = p;
        qm = q;
        p = pn;
        q = qn;
    }
    return std::nullopt;
}

// Newton polish with bracket guard; falls back to bisection steps when
// the Newton update leaves the bracket.
inline double polish_root(const CriticalEvaluator& eval, double lo, double hi, double root_tol) {
    auto side = [&](double e) { return eval(e).first; };
    double flo = side(lo);
    double x = 0.5 * (lo + hi);
    for (int it = 0; it < 200; ++it) {
        const auto [q, dq] = eval(x);
        double step = 0.0;
        bool ok = false;
        if (dq != 0.0) {
            step = -q / dq;
            const double xn = x + step;
            ok = xn > lo && xn < hi;
        }
        if (!ok) {
            // bisection fallback keeps the bracket shrinking
            if ((q > 0) == (flo > 0)) {
                lo = x;
                flo = q;
            } else {
                hi = x;
            }
            x = 0.5 * (lo + hi);
            if (hi - lo <= root_tol * std::max(1.0, std::abs(x))) return x;
            continue;
        }
        if ((q > 0) == (flo > 0)) {
            lo = x;
            flo = q;
        } else {
            hi = x;
        }
        x += step;
        if (std::abs(step) <= root_tol * std::max(1.0, std::abs(x))) return x;
    }
    return x;
}

inline std::vector<double> scan_roots(const CriticalEvaluator& eval, double lo, double hi, int want,
                                      double root_tol) {
    std::vector<double> roots;
    const int grid = 64 * want + 65;
    double prev = eval(lo).first;
    double xprev = lo;
    for (int i = 1; i <= grid; ++i) {
        const double x = lo + (hi - lo) * i / grid;
        const double q = eval(x).first;
        if (q == 0.0) {
            roots.push_back(x);
        } else if ((q > 0) != (prev > 0)) {
            roots.push_back(polish_root(eval, xprev, x, root_tol));
        }
        prev = q;
        xprev = x;
    }
    // a root sitting exactly on a grid point would be picked up twice,
    // once directly and once through the adjacent sign change
    std::sort(roots.begin(), roots.end());
    roots.erase(std::unique(roots.begin(), roots.end(),
                            [](double a, double b) {
                                return std::abs(a - b) <= 1e-10 * std::max(1.0, std::abs(a));
                            }),
                roots.end());
    return roots;
}

// Exact Sturm machinery over the rationals. The scan above is the fast
// path; when neighboring roots sit closer than its resolution the chain
// below isolates every root rigorously, with no floating point involved
// until the final polish.

inline int poly_degree(const std::vector<Rational>& p) {
    for (std::size_t t = p.size(); t-- > 0;)
        if (p[t] != 0) return static_cast<int>(t);
    return -1;
}

inline std::vector<Rational> poly_rem(std::vector<Rational> a, const std::vector<Rational>& b) {
    const int db = poly_degree(b);
    for (int da = poly_degree(a); da >= db; da = poly_degree(a)) {
        const Rational f = a[da] / b[db];
        for (int t = 0; t <= db; ++t) a[da - db + t] -= f * b[t];
        a[da] = 0; // clear explicitly, the subtraction above may leave dust
        a.resize(da);
        if (a.empty()) break;
    }
    return a;
}

// Sturm chain, each entry scaled to unit leading coefficient magnitude
// to tame coefficient growth. A zero remainder before reaching degree
// zero means the polynomial has a repeated root; the chain is returned
// as computed and the caller inspects the tail degree.
inline std::vector<std::vector<Rational>> sturm_chain(const std::vector<Rational>& p) {
    std::vector<std::vector<Rational>> chain;
    chain.push_back(p);
    std::vector<Rational> dp(p.size() - 1);
    for (std::size_t t = 1; t < p.size(); ++t) dp[t - 1] = p[t] * Rational(static_cast<long long>(t));
    chain.push_back(std::move(dp));
    while (poly_degree(chain.back()) > 0) {
        auto r = poly_rem(chain[chain.size() - 2], chain.back());
        const int dr = poly_degree(r);
        if (dr < 0) break;
        r.resize(dr + 1);
        Rational lead = r.back() < 0 ? -r.back() : r.back();
        for (auto& cc : r) cc = -cc / lead;
        chain.push_back(std::move(r));
    }
    return chain;
}

inline int sturm_sign_changes(const std::vector<std::vector<Rational>>& chain, const Rational& x) {
    int changes = 0, prev = 0;
    for (const auto& p : chain) {
        const Rational v = horner_exact(p, x);
        const int s = v == 0 ? 0 : (v > 0 ? 1 : -1);
        if (s != 0) {
            if (prev != 0 && s != prev) ++changes;
            prev = s;
        }
    }
    return changes;
}

// All real roots of the monic polynomial through exact isolation. Throws
// when the polynomial has a repeated root, which no parameter point of a
// valid case produces.
inline std::vector<double> isolated_roots(const std::vector<Rational>& monic,
                                          const CriticalEvaluator& eval, double root_tol) {
    const auto chain = sturm_chain(monic);
    if (poly_degree(chain.back()) > 0)
        throw RootCountMismatch("isolated_roots: critical polynomial has a repeated root");

    // Cauchy bound on the root magnitudes of a monic polynomial
    Rational bound(1);
    for (std::size_t t = 0; t + 1 < monic.size(); ++t) {
        const Rational a = monic[t] < 0 ? -monic[t] : monic[t];
        if (a > bound) bound = a;
    }
    bound += 1;

    struct Interval {
        Rational a, b;
        int count;
    };
    std::vector<Interval> work, isolated;
    const int total = sturm_sign_changes(chain, -bound) - sturm_sign_changes(chain, bound);
    if (total > 0) work.push_back({-bound, bound, total});

    // midpoint offsets cycle so that a rational root cannot pin the split
    const Rational offsets[] = {Rational(1, 2), Rational(12, 25), Rational(137, 279)};
    for (int guard = 0; !work.empty(); ++guard) {
        if (guard > 4096) throw Error("isolated_roots: root isolation failed to terminate");
        Interval iv = work.back();
        work.pop_back();
        if (iv.count == 1) {
            isolated.push_back(iv);
            continue;
        }
        Rational mid;
        bool split_ok = false;
        for (const auto& off : offsets) {
            mid = iv.a + (iv.b - iv.a) * off;
            if (horner_exact(monic, mid) != 0) {
                split_ok = true;
                break;
            }
        }
        if (!split_ok) throw Error("isolated_roots: midpoint selection failed");
        const int sa = sturm_sign_changes(chain, iv.a);
        const int sm = sturm_sign_changes(chain, mid);
        const int left = sa - sm;
        if (left > 0) work.push_back({iv.a, mid, left});
        if (iv.count - left > 0) work.push_back({mid, iv.b, iv.count - left});
    }

    std::vector<double> roots;
    roots.reserve(isolated.size());
    for (const auto& iv : isolated)
        roots.push_back(polish_root(eval, to_double(iv.a), to_double(iv.b), root_tol));
    std::sort(roots.begin(), roots.end());
    return roots;
}

} // namespace detail

// Roots of the critical polynomial of one case, certified and checked.
inline CaseSpectrum solve_case(const AlgebraizationCase& c, const RunConfig& cfg = {}) {
    CaseSpectrum out;
    out.case_id = c.case_id;
    out.n = c.n;
    out.bundle = recursion_coefficients(c);
    const CriticalEvaluator eval(out.bundle);

    double lam_lo = to_double(out.bundle.lambda[0]);
    double lam_hi = lam_lo;
    double rho_max = 0.0;
    for (const auto& v : out.bundle.lambda) {
        lam_lo = std::min(lam_lo, to_double(v));
        lam_hi = std::max(lam_hi, to_double(v));
    }
    for (const auto& v : out.bundle.rho) rho_max = std::max(rho_max, std::abs(to_double(v)));
    const double margin = 2.0 * std::sqrt(rho_max) + 1.0;

    const int want = c.n + 1;
    out.roots = detail::scan_roots(eval, lam_lo - margin, lam_hi + margin, want, cfg.root_tol);
    if (static_cast<int>(out.roots.size()) != want) {
        // neighboring roots closer than the scan resolution leave no
        // sign change; isolate every root exactly instead
        out.roots = detail::isolated_roots(out.bundle.monic, eval, cfg.root_tol);
    }
    if (static_cast<int>(out.roots.size()) != want)
        throw RootCountMismatch("solve_case: found " + std::to_string(out.roots.size()) +
                                " real critical roots, expected " + std::to_string(want));
    std::sort(out.roots.begin(), out.roots.end());

    out.exact.resize(out.roots.size());
    for (std::size_t i = 0; i < out.roots.size(); ++i)
        out.exact[i] = detail::certify_rational_root(out.bundle.monic, out.roots[i], 1e-9);

    // independent path: eigenvalues of the assembled matrix
    const auto gh = assemble_hamiltonian(c);
    auto evs = eigenvalues(gh.to_double());
    std::vector<double> ev_re;
    ev_re.reserve(evs.size());
    for (const auto& z : evs) {
        if (std::abs(z.imag()) > cfg.residual_tol * std::max(1.0, std::abs(z.real())))
            throw Error("solve_case: Hamiltonian eigenvalue has a nonreal part beyond tolerance");
        ev_re.push_back(z.real());
    }
    std::sort(ev_re.begin(), ev_re.end());
    for (std::size_t i = 0; i < out.roots.size(); ++i) {
        const double mis = std::abs(ev_re[i] - out.roots[i]) / std::max(1.0, std::abs(out.roots[i]));
        out.matrix_mismatch = std::max(out.matrix_mismatch, mis);
    }
    if (out.matrix_mismatch > cfg.residual_tol)
        throw Error("solve_case: critical roots and matrix eigenvalues disagree beyond tolerance");
    return out;
}

// One merged energy level.
struct BandEdgeSolution {
    double value = 0.0;
    std::optional<Rational> exact;
    int degeneracy = 1;
    std::vector<int> source_cases;
};

struct BandEdgeSpectrum {
    std::optional<ALClassification> classification; // two-parameter family only
    std::vector<CaseSpectrum> cases;
    std::vector<BandEdgeSolution> energies; // ascending
    double max_matrix_mismatch = 0.0;
    std::vector<std::string> warnings;
};

// Full algebraic spectrum of a potential specification. For the two
// parameter family every line through the canonical labels contributes;
// paired cases share one critical polynomial and produce doubly
// degenerate levels. Throws CriticalPoint when no line applies.
inline BandEdgeSpectrum solve_spec(const PotentialSpec& spec, const RunConfig& cfg = {}) {
    BandEdgeSpectrum out;
    const Modulus& mod = spec.modulus;

    struct Source {
        AlgebraizationCase c;
        int degeneracy;
        std::vector<int> ids;
    };
    std::vector<Source> sources;

    if (spec.family == Family::AssociatedLame) {
        const auto cls = classify(spec.m, spec.l);
        if (cls.critical())
            throw CriticalPoint("solve_spec: no algebraic line passes through the given labels");
        for (const auto& line : cls.lines) {
            // paired cases carry identical transformed data; solve the
            // first and record both as sources of a degenerate doublet
            const auto c = associated_lame_case(line.case_ids.front(), cls.labels.m, cls.labels.l, mod);
            sources.push_back({c, static_cast<int>(line.case_ids.size()), line.case_ids});
        }
        out.classification = cls;
    } else if (spec.family == Family::Tan) {
        sources.push_back({tan_family_case(spec.n, mod), 1, {7}});
    } else {
        sources.push_back({cot_family_case(spec.n, mod), 1, {8}});
    }

    for (const auto& src : sources) {
        auto cs = solve_case(src.c, cfg);
        out.max_matrix_mismatch = std::max(out.max_matrix_mismatch, cs.matrix_mismatch);
        for (std::size_t i = 0; i < cs.roots.size(); ++i) {
            // with both labels half odd, the shorter degenerate line
            // repeats energies of the longer one: its chain is the tail
            // of the other chain past a vanishing coupling, so the
            // energies coincide exactly and name the same states
            bool absorbed = false;
            if (src.ids.front() == 5 && !out.energies.empty() &&
                out.energies.front().source_cases.front() == 3) {
                for (auto& prev : out.energies) {
                    if (std::abs(prev.value - cs.roots[i]) <=
                        1e-8 * std::max(1.0, std::abs(prev.value))) {
                        prev.source_cases.insert(prev.source_cases.end(), src.ids.begin(),
                                                 src.ids.end());
                        absorbed = true;
                        break;
                    }
                }
                if (!absorbed)
                    out.warnings.push_back(
                        "energy " + std::to_string(cs.roots[i]) +
                        " of the shorter degenerate line is not part of the longer one");
            }
            if (absorbed) continue;
            BandEdgeSolution sol;
            sol.value = cs.roots[i];
            sol.exact = cs.exact[i];
            sol.degeneracy = src.degeneracy;
            sol.source_cases = src.ids;
            out.energies.push_back(std::move(sol));
        }
        out.cases.push_back(std::move(cs));
    }

    std::sort(out.energies.begin(), out.energies.end(),
              [](const BandEdgeSolution& a, const BandEdgeSolution& b) { return a.value < b.value; });

    // energies from different lines are reported individually even when
    // they nearly coincide; a warning points at the cluster
    for (std::size_t i = 1; i < out.energies.size(); ++i) {
        const double gap = out.energies[i].value - out.energies[i - 1].value;
        if (gap <= 1e-8 * std::max(1.0, std::abs(out.energies[i].value)))
            out.warnings.push_back("levels " + std::to_string(i - 1) + " and " + std::to_string(i) +
                                   " nearly coincide and are reported separately");
    }
    return out;
}

} // namespace qes

#endif // QES_SPECTRA_HPP
