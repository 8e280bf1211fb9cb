#pragma once

#include "hpoisson/poisson.hpp"

#include <map>
#include <string>
#include <vector>

namespace hpoisson {

struct TruncationParams {
	int maxLevel = 1;
	int maxInternalDegree = 8;
};

/// Semifree resolvent of S/I built level by level. Owns a grown copy of the
/// level-0 table; all guarantees hold up to (maxLevel, maxInternalDegree).
class Resolvent {
public:
	struct Adjoined {
		int varIndex;
		int level;
		int internalDegree;
		Polynomial differential; ///< F_j, lives in levels <= level-1
		bool minimal;            ///< level 1: F in m; level >= 2: F in n^2
	};

	const ConstTablePtr &table() const { return tab_; }
	const std::vector<Adjoined> &adjoined() const { return adjoined_; }
	const Adjoined *adjoinedFor(int varIndex) const;
	int builtLevel() const { return builtLevel_; }
	const TruncationParams &truncation() const { return trunc_; }
	const IdealPresentation &ideal() const { return ideal_; }

	/// |I_m| per internal degree for one level.
	std::map<int, int> bettiAtLevel(int level) const;
	int bettiCount(int level) const;

	/// The differential as the left-derivation sum F_j d/dX_j.
	Polynomial differentialApply(const Polynomial &p) const;

	struct DSquaredFailure {
		int varIndex;
		Polynomial value;
	};
	/// d^2 on every adjoined generator (equivalent to d^2 = 0 everywhere).
	std::vector<DSquaredFailure> checkDSquared() const;

	/// Record of choices made while extending (for reproducibility reports).
	const std::vector<std::string> &provenance() const { return provenance_; }

	friend Resolvent koszulComplex(const ConstTablePtr &level0, const IdealPresentation &I,
	                               const TruncationParams &trunc);
	friend void extendLevel(Resolvent &R, int level, int maxDegree);
	friend Resolvent buildResolvent(const ConstTablePtr &level0, const IdealPresentation &I,
	                                const TruncationParams &trunc);
	friend Resolvent resolventFromData(
	    const ConstTablePtr &level0, const IdealPresentation &I, const TruncationParams &trunc,
	    const std::vector<std::tuple<std::string, int, std::string>> &vars);

	/// Canonical name for the j-th adjoined variable of a level (1-based j).
	static std::string variableName(int level, int j);

private:
	TablePtr tabMut_;
	ConstTablePtr tab_;
	IdealPresentation ideal_;
	std::vector<Adjoined> adjoined_;
	int builtLevel_ = 0;
	TruncationParams trunc_;
	std::vector<std::string> provenance_;
	size_t sliceGuard_ = 20000;
};

/// Level-1 resolvent: odd generators y_mu with dy_mu = f_mu.
Resolvent koszulComplex(const ConstTablePtr &level0, const IdealPresentation &I,
                        const TruncationParams &trunc);

/// Adjoins level-m generators killing H^{-m+1} in internal degrees 1..maxDegree,
/// ascending. Requires levels < m to be built.
void extendLevel(Resolvent &R, int level, int maxDegree);

/// koszulComplex followed by extendLevel up to trunc.maxLevel.
Resolvent buildResolvent(const ConstTablePtr &level0, const IdealPresentation &I,
                         const TruncationParams &trunc);

/// Reconstructs a resolvent from explicit (name, level, differential) data,
/// e.g. a cache file or an externally supplied model. Internal degrees are
/// inferred from the differentials; d^2 = 0 is certified.
Resolvent resolventFromData(const ConstTablePtr &level0, const IdealPresentation &I,
                            const TruncationParams &trunc,
                            const std::vector<std::tuple<std::string, int, std::string>> &vars);

/// dim_k of (S/I) in internal degree d.
int hilbertSlice(const IdealSlices &slices, int d);

/// Cotangent complex scaffold: one free generator dX_j per resolvent
/// variable; differential coefficients live in A (reduced mod I, higher
/// variables killed).
struct CotangentComplex {
	struct Generator {
		int varIndex;
		int cohomologicalDegree; ///< -level
	};
	std::vector<Generator> generators;
	/// differential[j] = list of (i, coefficient in A): d(dX_j) = sum c_i dX_i.
	std::map<int, std::vector<std::pair<int, Polynomial>>> differential;
};

/// Uses the resolvent's own ideal for the mod-I reduction of coefficients.
CotangentComplex cotangentComplex(const Resolvent &R);

} // namespace hpoisson
