// qes: band-edge spectra of quasi-exactly solvable elliptic potentials.
// SPDX-License-Identifier: MIT
//
// Exception taxonomy. Every failure the library raises deliberately derives
// from qes::Error so callers can separate validation failures from bugs.

#ifndef QES_ERRORS_HPP
#define QES_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace qes {

struct Error : std::runtime_error {
    explicit Error(const std::string& what_arg) : std::runtime_error(what_arg) {}
};

// Parameters violate a case's admissibility column (e.g. an oblique-line
// construction requested at half-odd-integer m).
struct RestrictionViolated : Error {
    using Error::Error;
};

// A leading recursion coefficient vanishes, so the three-term chain cannot
// determine the next polynomial.
struct ZeroDenominator : Error {
    using Error::Error;
};

// The gauged Hamiltonian matrix retained a nonzero imaginary part after the
// basis rotation that should have made it real.
struct NonRealAssembly : Error {
    using Error::Error;
};

// Root isolation found a number of real roots different from the degree of
// the critical polynomial.
struct RootCountMismatch : Error {
    using Error::Error;
};

// The requested (m, l) lies in the effective region but on no algebraic
// line; the spectrum is not algebraically accessible.
struct CriticalPoint : Error {
    using Error::Error;
};

// Potential evaluation was requested at (or too close to) a pole.
struct SingularPoint : Error {
    using Error::Error;
};

// The removable singularity of the series assembly failed to cancel
// numerically, which indicates a branch or coefficient bug.
struct NumericalPole : Error {
    using Error::Error;
};

// The real and imaginary parts of a split complex eigenfunction are not
// linearly independent; the degeneracy label must be demoted.
struct DependentPair : Error {
    using Error::Error;
};

// A grid function has too few interior points for the requested stencil.
struct GridTooCoarse : Error {
    using Error::Error;
};

// Grid refinement did not settle a numeric level within tolerance.
struct ConvergenceFailure : Error {
    using Error::Error;
};

} // namespace qes

#endif // QES_ERRORS_HPP
