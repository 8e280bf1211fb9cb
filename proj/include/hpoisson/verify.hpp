#pragma once

#include "hpoisson/perturbation.hpp"

#include <functional>
#include <random>
#include <string>

namespace hpoisson {

struct SignedPermutation {
	std::vector<int> perm; ///< images sigma(1..m), 0-based entries
	int paritySign = 1;    ///< (-1)^sigma
};

/// All (q, r)-unshuffles of {1..q+r}: ascending on the first q and on the
/// last r slots, in lexicographic order of the first block.
std::vector<SignedPermutation> unshuffles(int q, int r);

/// Koszul sign of reordering (x_1,...,x_m) into (x_{perm[0]},...): the
/// product of (-1)^{|x_i||x_j|} over inverted pairs.
int koszulSign(const std::vector<int> &perm, const std::vector<int> &degrees);

/// m-linear bracket oracle used by the identity checkers: evaluated on
/// explicit polynomial tuples, one arity at a time.
using BracketOracle = std::function<Polynomial(const std::vector<Polynomial> &)>;

struct IdentityFailure {
	std::vector<std::string> tuple;
	Polynomial value;
};

/// Evaluates the classical L-infinity identity of total arity m on each
/// tuple: sum over p+q = m+1 and (q, p-1)-unshuffles of
/// (-1)^sigma eps(sigma) (-1)^{q(p-1)} [[...]_q, ...]_p. Arguments must be
/// cohomologically homogeneous.
std::vector<IdentityFailure> linftyIdentityCheck(
    const BracketOracle &bracket, int m,
    const std::vector<std::vector<Polynomial>> &tuples,
    const std::function<Polynomial(const Polynomial &)> &normalize = {});

/// Tuples of resolvent generators suitable for identity checks under the
/// truncation: every tuple of X variables with sum(level_i + 1) <= fdCap and
/// total internal degree <= degCap.
std::vector<std::vector<Polynomial>> generatorTuples(const PiSequence &seq, int arity,
                                                     int fdCap, int degCap);

/// Checks the left-module laws of the homotopy anchor on explicit tuples:
/// the Leibniz law in the algebra slot, A-linearity in the first slot, and
/// the bracket/anchor compatibility law, all modulo I.
struct ModuleCheckReport {
	std::vector<std::string> failures;
	int checked = 0;
	bool pass() const { return failures.empty(); }
};

ModuleCheckReport moduleIdentityCheck(const PiSequence &seq, int arity,
                                      const std::vector<std::vector<int>> &tuples,
                                      std::mt19937_64 &rng);

/// Certificate for an externally supplied pi sequence.
struct PiCertificate {
	bool pass = false;
	std::string inputHash;
	int maxLevel = 0;
	int maxInternalDegree = 0;
	struct Entry {
		std::string check;
		bool pass;
		std::string witness; ///< failing sector when !pass
	};
	std::vector<Entry> entries;
	void add(const std::string &check, bool ok, const std::string &witness = "") {
		entries.push_back({check, ok, witness});
	}
};

/// Recomputes every windowed residue with the supplied pi's. Checks
/// d^2 = 0, pi_1 against the problem's bracket, fd homogeneity, and the
/// vanishing of fd-(m+2) of [[Pi_m, Pi_m]] + 2 d pi_{m+1} for every step.
/// With checkPairwise, also records whether [[pi_i, pi_j]] = 0 for all pairs.
PiCertificate verifyPiSequence(const PoissonStructure &P, const Resolvent &R,
                               const std::vector<Multiderivation> &pis, int maxLevel,
                               bool checkPairwise = false);

/// Complete-intersection triviality: Casimir generators + level-2 vacuity
/// imply pi_m = 0 for m >= 2 and the algebroid reduces to [dx_i, dx_j] =
/// d Lambda_ij. Throws if the preconditions fail.
struct CiTrivialityReport {
	bool casimir = false;
	bool completeIntersection = false;
	bool higherPisVanish = false;
	bool algebroidReduces = false;
	bool pass() const {
		return casimir && completeIntersection && higherPisVanish && algebroidReduces;
	}
};

CiTrivialityReport ciTrivialityCheck(const PoissonStructure &P, const Resolvent &R,
                                     const PiSequence &seq);

/// Euler x-degree of every pi_m, m >= 1: PASS iff all homogeneous of degree
/// p + 2.
struct KoszulHomogeneityReport {
	bool pass = true;
	std::map<int, std::vector<int>> degreesSeen; ///< m -> distinct x-degrees
};

KoszulHomogeneityReport koszulHomogeneityCheck(const PiSequence &seq);

/// Stable content hash (FNV-1a 64) for certificates and cache keys.
std::string contentHash(const std::string &payload);

} // namespace hpoisson
