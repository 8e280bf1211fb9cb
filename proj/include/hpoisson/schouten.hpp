#pragma once

#include "hpoisson/resolvent.hpp"

namespace hpoisson {

/// Multiderivations are polynomials over a table carrying every resolvent
/// variable together with its shifted dual generator.
using Multiderivation = Polynomial;

/// Clones the X variables of `tab` and pairs each with a dual; the result is
/// the coordinate ring of shifted multiderivations.
TablePtr makeDualExtension(const ConstTablePtr &tab);

/// The paired-derivative Schouten bracket, truncated to the fd window.
Multiderivation schoutenBracket(const Multiderivation &X, const Multiderivation &Y,
                                const FdWindow &window = {});

/// pi_0 restricted to resolvent levels <= levelCap, as an element of the
/// dual-extended table `ext`.
Multiderivation pi0Of(const Resolvent &R, const ConstTablePtr &ext, int levelCap);

/// pi_1 = (1/2) sum Lambda_ij xi^i xi^j.
Multiderivation pi1Of(const PoissonStructure &P, const ConstTablePtr &ext);

/// The fd = p homogeneous component.
Multiderivation filtrationComponent(const Multiderivation &X, int p);

/// [[pi_1, X]] restricted to level-0 variables; agrees with
/// poissonCodifferential with sign +1 at arities 0..3 (pinned by tests).
Multiderivation lichnerowicz(const PoissonStructure &P, const Multiderivation &X);

struct EulerResult {
	std::optional<int> degree;      ///< set when homogeneous
	std::vector<int> degreesSeen;   ///< distinct x-degrees, ascending
};

/// Eigenvalue of the Euler derivation counting X-variable occurrences.
EulerResult eulerXDegree(const Multiderivation &X);

/// The differential extended to multiderivations (duals are killed).
Multiderivation differentialOnDuals(const Resolvent &R, const ConstTablePtr &ext,
                                    const Multiderivation &X);

} // namespace hpoisson
