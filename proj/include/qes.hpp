// qes: band-edge spectra of quasi-exactly solvable elliptic potentials.
// SPDX-License-Identifier: MIT
//
// Umbrella header pulling in the whole library.

#ifndef QES_HPP
#define QES_HPP

#include "qes/errors.hpp"
#include "qes/rational.hpp"
#include "qes/quadext.hpp"
#include "qes/elliptic.hpp"
#include "qes/linalg.hpp"
#include "qes/cases.hpp"
#include "qes/liealg.hpp"
#include "qes/recurrence.hpp"
#include "qes/potentials.hpp"
#include "qes/spectra.hpp"
#include "qes/eigenfunctions.hpp"
#include "qes/oracle.hpp"
#include "qes/jsonio.hpp"

#endif // QES_HPP
