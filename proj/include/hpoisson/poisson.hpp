#pragma once

#include "hpoisson/linalg.hpp"
#include "hpoisson/parser.hpp"

#include <map>
#include <optional>
#include <variant>
#include <vector>

namespace hpoisson {

/// Graded Poisson structure on the level-0 polynomial algebra, given by the
/// coordinate brackets Lambda_ij = {x_i, x_j} for i < j.
class PoissonStructure {
public:
	PoissonStructure(ConstTablePtr tab, int bracketDegree)
	    : tab_(std::move(tab)), degree_(bracketDegree), coords_(tab_->coordinates()) {}

	const ConstTablePtr &table() const { return tab_; }
	int bracketDegree() const { return degree_; }
	const std::vector<int> &coordinates() const { return coords_; }

	/// Sets {x_i, x_j}; i and j are table indices, any order.
	void setEntry(int i, int j, const Polynomial &value);
	/// Lambda_ij for any pair, with the antisymmetry sign folded in.
	Polynomial entry(int i, int j) const;

	/// Biderivation extension {a, b}; a, b must live in level-0 variables.
	Polynomial bracket(const Polynomial &a, const Polynomial &b) const;

	/// Homogeneity of every entry: deg Lambda_ij = deg x_i + deg x_j + p.
	void validateDegrees() const;

private:
	ConstTablePtr tab_;
	int degree_;
	std::vector<int> coords_;
	std::map<std::pair<int, int>, Polynomial> entries_; // keyed i < j
};

struct JacobiFailure {
	int i, j, k;
	Polynomial jacobiator;
};

/// All triples i < j < k with nonzero Jacobiator; empty means valid.
std::vector<JacobiFailure> jacobiCheck(const PoissonStructure &P);

/// Ordered homogeneous generators of the ideal.
struct IdealPresentation {
	std::vector<Polynomial> gens;
	std::vector<int> degrees;

	static IdealPresentation fromPolys(std::vector<Polynomial> gens);
	int count() const { return static_cast<int>(gens.size()); }
};

/// Per-internal-degree echelon spans of an ideal's slices; provides exact
/// membership tests and canonical normal forms modulo the ideal.
class IdealSlices {
public:
	IdealSlices(ConstTablePtr tab, const IdealPresentation &I)
	    : tab_(std::move(tab)), ideal_(&I) {}

	const ConstTablePtr &table() const { return tab_; }

	/// Canonical representative of p + I (level-0 polynomials only).
	Polynomial reduce(const Polynomial &p) const;
	bool contains(const Polynomial &p) const { return reduce(p).isZero(); }
	/// dim_k (S/I)_d.
	int quotientDim(int d) const;

private:
	struct Slice {
		SliceBasis basis;
		EchelonSpan span;
		int idealRank = 0;
	};
	const Slice &slice(int d) const;

	ConstTablePtr tab_;
	const IdealPresentation *ideal_;
	mutable std::map<int, Slice> cache_;
};

/// Z tensor: {x_i, f_mu} = sum_nu Z[i][mu][nu] f_nu. Entries absent means 0.
struct ZTensor {
	std::map<std::tuple<int, int, int>, Polynomial> entries; // (coordIdx, mu, nu)

	Polynomial at(const ConstTablePtr &tab, int i, int mu, int nu) const {
		auto it = entries.find({i, mu, nu});
		return it == entries.end() ? Polynomial(tab) : it->second;
	}
	void set(int i, int mu, int nu, const Polynomial &p) {
		if (p.isZero())
			entries.erase({i, mu, nu});
		else
			entries[{i, mu, nu}] = p;
	}
	bool isZero() const { return entries.empty(); }
};

struct NotPoissonIdeal {
	int coordIndex; // table index of x_i
	int mu;         // 0-based generator index
};

/// Canonical Z via slice preimage solving; degree of Z[i][mu][nu] is forced
/// to deg x_i + deg f_mu + p - deg f_nu.
std::variant<ZTensor, NotPoissonIdeal> solveZ(const PoissonStructure &P,
                                              const IdealPresentation &I);

/// Checks a user-supplied Z: exactness of sum_nu Z f_nu = {x_i, f_mu} and the
/// forced homogeneity; throws with a witness on failure.
void validateZ(const PoissonStructure &P, const IdealPresentation &I, const ZTensor &Z);

/// A[mu][nu][lambda] = sum_i (df_mu/dx_i Z[i][nu][lambda] + df_nu/dx_i Z[i][mu][lambda]).
struct ATensor {
	std::map<std::tuple<int, int, int>, Polynomial> entries; // (mu, nu, lambda), all pairs
	bool isZero() const { return entries.empty(); }
	Polynomial at(const ConstTablePtr &tab, int mu, int nu, int lambda) const {
		auto it = entries.find({mu, nu, lambda});
		return it == entries.end() ? Polynomial(tab) : it->second;
	}
};

ATensor aTensor(const PoissonStructure &P, const IdealPresentation &I, const ZTensor &Z);

/// Antisymmetric matrix-valued tensor M_ij (k x k matrices, stored i < j).
struct MatrixTensor {
	int k = 0;
	std::map<std::pair<int, int>, std::vector<std::vector<Polynomial>>> blocks;

	bool isZero() const;
	/// Entry (mu, nu) of M_ij with antisymmetry in (i, j).
	Polynomial at(const ConstTablePtr &tab, int i, int j, int mu, int nu) const;
};

/// M_ij = {x_i, Z_j} - {x_j, Z_i} - sum_k dLambda_ij/dx_k Z_k - [Z_i, Z_j],
/// the Maurer-Cartan residue of Z.
MatrixTensor mcResidue(const PoissonStructure &P, const IdealPresentation &I, const ZTensor &Z);

/// Each entry reduced to its canonical normal form modulo I.
MatrixTensor mcResidueModIdeal(const MatrixTensor &residue, const IdealSlices &slices);

/// Curvature of the one-parameter connection: t * (coboundary part) +
/// t^2 * (commutator part); at t = -1 this is minus the MC residue.
MatrixTensor connectionCurvature(const PoissonStructure &P, const IdealPresentation &I,
                                 const ZTensor &Z, const Rat &t);

bool casimirCheck(const PoissonStructure &P, const Polynomial &f);
bool poissonIdealCheck(const PoissonStructure &P, const IdealPresentation &I);

/// Multivector: polynomial in the level-0 variables and their paired odd
/// duals. Construct the table with makeMultivectorTable.
TablePtr makeMultivectorTable(const VariableTable &level0);

/// Direct alternating-sum codifferential of Poisson cohomology, implemented
/// for multivector arities 0..3 (higher arities go through the Schouten
/// route). Agrees with [[pi_1, X]] with sign +1 at every arity; that table is
/// pinned by tests.
Polynomial poissonCodifferential(const PoissonStructure &P, const Polynomial &X);

struct TransitionReport {
	bool pass = false;
	std::vector<std::string> failures;
};

/// Checks Z = -M dN = (dM) N modulo I for generator change g = N f, f = M g
/// with Casimir g's. Throws if N, M are not mutually inverse mod I or the
/// g's are inhomogeneous.
TransitionReport transitionZCheck(const PoissonStructure &P, const IdealPresentation &I,
                                  const ZTensor &Z,
                                  const std::vector<std::vector<Polynomial>> &N,
                                  const std::vector<std::vector<Polynomial>> &M);

} // namespace hpoisson
