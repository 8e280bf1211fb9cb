#pragma once

#include "hpoisson/schouten.hpp"

namespace hpoisson {

/// The Maurer-Cartan sequence pi_0, pi_1, ..., pi_M together with per-step
/// residue certificates.
struct PiSequence {
	ConstTablePtr ext;           ///< dual-extended table
	const Resolvent *resolvent = nullptr;
	Multiderivation pi0;         ///< full pi_0 up to the built level
	std::vector<Multiderivation> pis; ///< index m >= 1; pis[0] unused
	int maxLevel = 0;
	int maxInternalDegree = 0;
	int bracketDegree = 0;

	struct StepCertificate {
		int m;                    ///< residue extracted at fd m+2
		Multiderivation before;   ///< fd-(m+2) part of [[Pi_m, Pi_m]]
		Multiderivation after;    ///< before + 2 d(pi_{m+1}); must vanish
	};
	std::vector<StepCertificate> certificates;
	/// fd-(M+2) component of [[Pi_M, Pi_M]]: the first uncorrected residue.
	Multiderivation finalResidue;

	const Multiderivation &pi(int m) const { return pis.at(m); }
	/// pi_0 truncated to resolvent levels <= cap plus pi_1..pi_min(m,M).
	Multiderivation partialSum(int m) const;
};

/// pi_2 = -sum Z_{i mu}^{nu} y_nu xi^i eta^mu.
Multiderivation pi2Of(const ZTensor &Z, const Resolvent &R, const ConstTablePtr &ext);

/// Solves the fd-(m+2) residue of [[Pi_m, Pi_m]] for pi_{m+1}; returns the
/// canonical solution. Throws if a sector fails the cocycle test or a
/// preimage is unsolvable (reported with the offending sector).
Multiderivation nextPi(const PiSequence &seq, int m,
                       PiSequence::StepCertificate *certOut = nullptr);

/// Full recursion: pi_0 from the resolvent, pi_1 from Lambda, pi_2 from Z,
/// then nextPi up to maxLevel. Certifies every corrected residue.
PiSequence computePi(const PoissonStructure &P, const Resolvent &R, const ZTensor &Z);

/// Derived bracket {a_1,...,a_m}_m. Arguments must be cohomologically
/// homogeneous polynomials over the extended table without duals.
Polynomial higherBracket(const PiSequence &seq, const std::vector<Polynomial> &args);

/// Bracket and anchor tables of the induced L-infinity algebroid on the
/// cotangent complex; coefficients are classes in A (reduced mod I, higher
/// variables killed).
struct BracketTable {
	enum class Flavor { ResolventBracket, AlgebroidBracket, Anchor };
	Flavor flavor;
	int arity = 0;
	/// AlgebroidBracket: key = generator tuple (ascending var indices),
	/// value = list of (generator, coefficient in A).
	std::map<std::vector<int>, std::vector<std::pair<int, Polynomial>>> brackets;
	/// Anchor: key = generator tuple of arity-1 entries plus the coordinate
	/// acted on appended last; value singleton holds (coordinate, rho value).
	std::map<std::vector<int>, Polynomial> anchorValues;
};

BracketTable algebroidBrackets(const PiSequence &seq, int arity);
BracketTable anchorTable(const PiSequence &seq, int arity);

/// Two-term dg Lie algebroid of a complete intersection (fast path):
/// [e_i, e_j] = sum dLambda_ij/dx_k e_k, [e_i, eps_mu] = sum Z eps_nu,
/// anchor e_i -> {x_i, .}, eps_mu -> 0; coefficients mod I. Requires the
/// Koszul homology to vanish at level 2 up to the truncation degree.
struct ConormalAlgebroid {
	BracketTable brackets; ///< arity 2
	BracketTable anchor;   ///< arity 2
};

ConormalAlgebroid conormalAlgebroid(const PoissonStructure &P, const Resolvent &R,
                                    const ZTensor &Z);

/// Count of pi_m terms lying in a^2 (coefficient with >= 2 adjoined-variable
/// occurrences), as reported alongside the sequence.
std::map<int, std::pair<int, int>> aSquareStatistics(const PiSequence &seq);

} // namespace hpoisson
