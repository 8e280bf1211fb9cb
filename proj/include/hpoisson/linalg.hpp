#pragma once

#include "hpoisson/polynomial.hpp"

#include <functional>
#include <map>
#include <optional>
#include <vector>

namespace hpoisson {

using Vec = std::map<int, Rat>; // sparse column/solution vector

/// Sparse exact matrix, row-major. No stored zeros.
class SparseMatrix {
public:
	SparseMatrix() = default;
	SparseMatrix(int rows, int cols) : rows_(rows), cols_(cols), data_(rows) {}

	int rows() const { return rows_; }
	int cols() const { return cols_; }
	void set(int r, int c, const Rat &v);
	Rat get(int r, int c) const;
	const Vec &row(int r) const { return data_[r]; }
	size_t nonzeros() const;

	/// M * x for a sparse column vector.
	Vec apply(const Vec &x) const;

private:
	int rows_ = 0, cols_ = 0;
	std::vector<Vec> data_;
};

/// Reduced row echelon form with strictly increasing unit pivots.
struct EchelonForm {
	SparseMatrix matrix;
	std::vector<int> pivotCols; ///< pivot column of row i
	int rank() const { return static_cast<int>(pivotCols.size()); }
};

/// Deterministic RREF. Pivot rule: columns scanned ascending; within a
/// column the remaining row of smallest original index is chosen. Forward
/// elimination is integer-preserving (rows rescaled to primitive integer
/// vectors, cross-multiplication updates); pivots are normalized to 1 and
/// back-substituted rationally at the end.
EchelonForm rref(const SparseMatrix &m);

/// Exact basis of the null space, one vector per free column (ascending).
std::vector<Vec> kernelBasis(const SparseMatrix &m);

/// Canonical solution of M x = b (free coordinates 0), or nullopt.
std::optional<Vec> solvePreimage(const SparseMatrix &m, const Vec &b);

/// Incremental echelon span for membership tests and canonical reduction.
class EchelonSpan {
public:
	/// Reduces v against the span; returns the remainder (empty if v is in
	/// the span).
	Vec reduce(const Vec &v) const;
	/// Reduce and, if the remainder is nonzero, normalize its leading entry
	/// to 1 and insert it. Returns the inserted vector or nullopt.
	std::optional<Vec> insert(const Vec &v);
	bool contains(const Vec &v) const { return reduce(v).empty(); }
	int dimension() const { return static_cast<int>(rows_.size()); }

private:
	std::map<int, Vec> rows_; // leading index -> vector with leading 1
};

/// Representatives extending the boundary span to the full cycle span.
/// Boundaries are the columns of `boundaries`; cycles are reduced in the
/// given order; each nonzero remainder (leading coefficient normalized to 1)
/// is emitted.
std::vector<Vec> homologyComplement(const SparseMatrix &boundaries,
                                    const std::vector<Vec> &cycles);

/// Finite monomial basis of one bidegree slice.
struct SliceBasis {
	int cohomologicalDegree = 0;
	int internalDegree = 0;
	std::vector<Monomial> monomials; ///< canonical order
	std::map<Monomial, int, MonomialCmp> index;

	int dim() const { return static_cast<int>(monomials.size()); }
	int indexOf(const Monomial &m) const {
		auto it = index.find(m);
		return it == index.end() ? -1 : it->second;
	}
};

/// All monomials of the bidegree in X variables of level <= levelCap.
/// Throws if a usable variable has internal degree < 1 or the slice exceeds
/// `guard` monomials.
SliceBasis enumerateBasis(const VariableTable &tab, int cohomologicalDegree,
                          int internalDegree, int levelCap, size_t guard = 20000);

/// Column j = coordinates of f(domain[j]) in the codomain basis. Throws if
/// an image term falls outside the codomain slice.
SparseMatrix matrixOfMap(const std::function<Polynomial(const Polynomial &)> &f,
                         const SliceBasis &domain, const SliceBasis &codomain,
                         const ConstTablePtr &tab);

/// Coordinates of p in the slice basis; throws on terms outside the slice.
Vec coordinates(const Polynomial &p, const SliceBasis &basis);

Polynomial fromCoordinates(const Vec &v, const SliceBasis &basis, const ConstTablePtr &tab);

} // namespace hpoisson
