#include "hpoisson/linalg.hpp"

#include <algorithm>

namespace hpoisson {

void SparseMatrix::set(int r, int c, const Rat &v) {
	if (r < 0 || r >= rows_ || c < 0 || c >= cols_)
		throw std::out_of_range("SparseMatrix::set");
	if (v.isZero())
		data_[r].erase(c);
	else
		data_[r][c] = v;
}

Rat SparseMatrix::get(int r, int c) const {
	auto it = data_[r].find(c);
	return it == data_[r].end() ? Rat() : it->second;
}

size_t SparseMatrix::nonzeros() const {
	size_t n = 0;
	for (auto &row : data_)
		n += row.size();
	return n;
}

Vec SparseMatrix::apply(const Vec &x) const {
	Vec out;
	for (int r = 0; r < rows_; ++r) {
		Rat acc;
		for (auto &[c, v] : data_[r]) {
			auto it = x.find(c);
			if (it != x.end())
				acc += v * it->second;
		}
		if (!acc.isZero())
			out[r] = acc;
	}
	return out;
}

namespace {

// Rescale to a primitive integer vector (content 1), keeping the sign.
void primitivize(Vec &row) {
	if (row.empty())
		return;
	mpz_class l(1);
	for (auto &[c, v] : row)
		l = lcm(l, v.den());
	mpz_class g(0);
	for (auto &[c, v] : row)
		g = gcd(g, mpz_class(v.num() * (l / v.den())));
	if (g == 0)
		return;
	Rat scale(l, g);
	for (auto &[c, v] : row)
		v *= scale;
}

void axpyRow(Vec &target, const Rat &a, const Vec &src) {
	for (auto &[c, v] : src) {
		Rat nv = target.count(c) ? target[c] + a * v : a * v;
		if (nv.isZero())
			target.erase(c);
		else
			target[c] = nv;
	}
}

} // namespace

EchelonForm rref(const SparseMatrix &m) {
	int nrows = m.rows(), ncols = m.cols();
	std::vector<Vec> rows(nrows);
	std::vector<int> origin(nrows);
	for (int r = 0; r < nrows; ++r) {
		rows[r] = m.row(r);
		origin[r] = r;
		primitivize(rows[r]);
	}
	std::vector<int> pivotCols;
	std::vector<int> pivotRows;
	int next = 0;
	for (int c = 0; c < ncols && next < nrows; ++c) {
		// smallest original row index among remaining rows with entry in c
		int best = -1;
		for (int r = next; r < nrows; ++r)
			if (rows[r].count(c) && (best < 0 || origin[r] < origin[best]))
				best = r;
		if (best < 0)
			continue;
		std::swap(rows[next], rows[best]);
		std::swap(origin[next], origin[best]);
		Rat piv = rows[next][c];
		for (int r = next + 1; r < nrows; ++r) {
			auto it = rows[r].find(c);
			if (it == rows[r].end())
				continue;
			Rat factor = it->second;
			// integer-preserving update: row_r <- piv*row_r - factor*row_next
			for (auto &[cc, vv] : rows[r])
				vv *= piv;
			axpyRow(rows[r], -factor, rows[next]);
			primitivize(rows[r]);
		}
		pivotCols.push_back(c);
		pivotRows.push_back(next);
		++next;
	}
	// Normalize pivots to 1 and clear above.
	for (int k = static_cast<int>(pivotCols.size()) - 1; k >= 0; --k) {
		int pr = pivotRows[k], pc = pivotCols[k];
		Rat piv = rows[pr][pc];
		for (auto &[c, v] : rows[pr])
			v /= piv;
		for (int r = 0; r < pr; ++r) {
			auto it = rows[r].find(pc);
			if (it == rows[r].end())
				continue;
			Rat factor = it->second;
			axpyRow(rows[r], -factor, rows[pr]);
		}
	}
	EchelonForm out;
	out.matrix = SparseMatrix(nrows, ncols);
	for (int r = 0; r < nrows; ++r)
		for (auto &[c, v] : rows[r])
			out.matrix.set(r, c, v);
	out.pivotCols = pivotCols;
	return out;
}

std::vector<Vec> kernelBasis(const SparseMatrix &m) {
	EchelonForm e = rref(m);
	std::vector<bool> isPivot(m.cols(), false);
	for (int c : e.pivotCols)
		isPivot[c] = true;
	std::vector<Vec> out;
	for (int f = 0; f < m.cols(); ++f) {
		if (isPivot[f])
			continue;
		Vec v;
		v[f] = Rat(1);
		for (int k = 0; k < e.rank(); ++k) {
			Rat entry = e.matrix.get(k, f);
			if (!entry.isZero())
				v[e.pivotCols[k]] = -entry;
		}
		out.push_back(std::move(v));
	}
	return out;
}

std::optional<Vec> solvePreimage(const SparseMatrix &m, const Vec &b) {
	for (auto &[r, v] : b)
		if (r < 0 || r >= m.rows())
			throw std::out_of_range("solvePreimage: rhs dimension mismatch");
	// Augment b as an extra column that is never pivoted on.
	SparseMatrix aug(m.rows(), m.cols() + 1);
	for (int r = 0; r < m.rows(); ++r)
		for (auto &[c, v] : m.row(r))
			aug.set(r, c, v);
	for (auto &[r, v] : b)
		aug.set(r, m.cols(), v);
	EchelonForm e = rref(aug);
	Vec x;
	for (int k = 0; k < e.rank(); ++k) {
		if (e.pivotCols[k] == m.cols())
			return std::nullopt; // pivot in the augmented column: inconsistent
		Rat rhs = e.matrix.get(k, m.cols());
		if (!rhs.isZero())
			x[e.pivotCols[k]] = rhs;
	}
	return x;
}

Vec EchelonSpan::reduce(const Vec &v) const {
	// Each span row has leading entry 1 at its smallest index, so an
	// elimination only touches strictly larger positions; scanning forward
	// therefore terminates.
	Vec r = v;
	auto it = r.begin();
	while (it != r.end()) {
		auto row = rows_.find(it->first);
		if (row == rows_.end()) {
			++it;
			continue;
		}
		int pos = it->first;
		Rat c = it->second;
		axpyRow(r, -c, row->second);
		it = r.upper_bound(pos);
	}
	return r;
}

std::optional<Vec> EchelonSpan::insert(const Vec &v) {
	Vec r = reduce(v);
	if (r.empty())
		return std::nullopt;
	Rat lead = r.begin()->second;
	for (auto &[c, x] : r)
		x /= lead;
	rows_[r.begin()->first] = r;
	return r;
}

std::vector<Vec> homologyComplement(const SparseMatrix &boundaries,
                                    const std::vector<Vec> &cycles) {
	EchelonSpan span;
	for (int c = 0; c < boundaries.cols(); ++c) {
		Vec col;
		for (int r = 0; r < boundaries.rows(); ++r) {
			Rat v = boundaries.get(r, c);
			if (!v.isZero())
				col[r] = v;
		}
		span.insert(col);
	}
	std::vector<Vec> out;
	for (const Vec &z : cycles) {
		auto rep = span.insert(z);
		if (rep)
			out.push_back(*rep);
	}
	return out;
}

namespace {

void enumerateRec(const VariableTable &tab, const std::vector<int> &vars, size_t i,
                  int cohoLeft, int degLeft, Monomial &current,
                  std::vector<Monomial> &out, size_t guard) {
	if (degLeft == 0 && cohoLeft == 0) {
		Monomial m = current;
		recomputeDegrees(m, tab);
		out.push_back(std::move(m));
		if (out.size() > guard)
			throw std::runtime_error("slice dimension exceeds resource guard");
		return;
	}
	if (degLeft <= 0 || i >= vars.size())
		return;
	const int v = vars[i];
	const VariableDescriptor &d = tab.at(v);
	int maxExp = degLeft / d.internalDegree;
	if (d.odd())
		maxExp = std::min(maxExp, 1);
	for (int e = 0; e <= maxExp; ++e) {
		if (e > 0)
			current.factors.push_back({v, e});
		enumerateRec(tab, vars, i + 1, cohoLeft - e * d.cohomologicalDegree,
		             degLeft - e * d.internalDegree, current, out, guard);
		if (e > 0)
			current.factors.pop_back();
	}
}

} // namespace

SliceBasis enumerateBasis(const VariableTable &tab, int cohomologicalDegree,
                          int internalDegree, int levelCap, size_t guard) {
	std::vector<int> vars;
	for (int i = 0; i < tab.size(); ++i) {
		const VariableDescriptor &d = tab.at(i);
		if (d.kind != VarKind::X || d.level > levelCap)
			continue;
		if (d.internalDegree < 1)
			throw std::invalid_argument("enumerateBasis: variable '" + d.name +
			                            "' has internal degree < 1");
		vars.push_back(i);
	}
	SliceBasis out;
	out.cohomologicalDegree = cohomologicalDegree;
	out.internalDegree = internalDegree;
	if (internalDegree >= 0 && !(internalDegree == 0 && cohomologicalDegree != 0)) {
		Monomial current;
		enumerateRec(tab, vars, 0, cohomologicalDegree, internalDegree, current,
		             out.monomials, guard);
	}
	std::sort(out.monomials.begin(), out.monomials.end(),
	          [](const Monomial &a, const Monomial &b) { return MonomialCmp{}(a, b); });
	for (int i = 0; i < out.dim(); ++i)
		out.index.emplace(out.monomials[i], i);
	return out;
}

Vec coordinates(const Polynomial &p, const SliceBasis &basis) {
	Vec out;
	for (auto &[m, c] : p.terms()) {
		int i = basis.indexOf(m);
		if (i < 0)
			throw std::runtime_error("coordinates: term outside slice (degree bookkeeping bug)");
		out[i] = c;
	}
	return out;
}

Polynomial fromCoordinates(const Vec &v, const SliceBasis &basis, const ConstTablePtr &tab) {
	Polynomial p(tab);
	for (auto &[i, c] : v)
		p.addTerm(basis.monomials.at(i), c);
	return p;
}

SparseMatrix matrixOfMap(const std::function<Polynomial(const Polynomial &)> &f,
                         const SliceBasis &domain, const SliceBasis &codomain,
                         const ConstTablePtr &tab) {
	SparseMatrix m(codomain.dim(), domain.dim());
	for (int j = 0; j < domain.dim(); ++j) {
		Polynomial img = f(Polynomial::term(tab, Rat(1), domain.monomials[j].factors));
		for (auto &[mono, c] : img.terms()) {
			int i = codomain.indexOf(mono);
			if (i < 0)
				throw std::runtime_error(
				    "matrixOfMap: image leaves codomain slice (degree bookkeeping bug)");
			m.set(i, j, c);
		}
	}
	return m;
}

} // namespace hpoisson
