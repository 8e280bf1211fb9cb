#include "hpoisson/schouten.hpp"

namespace hpoisson {

TablePtr makeDualExtension(const ConstTablePtr &tab) {
	auto ext = std::make_shared<VariableTable>();
	for (int i = 0; i < tab->size(); ++i) {
		const VariableDescriptor &d = tab->at(i);
		if (d.kind != VarKind::X)
			throw std::invalid_argument("makeDualExtension: input table already has duals");
		if (d.level == 0)
			ext->addCoordinate(d.name, d.internalDegree);
		else
			ext->addAdjoined(d.name, d.level, d.internalDegree);
	}
	for (int i = 0; i < tab->size(); ++i)
		ext->addXi(i);
	return ext;
}

Multiderivation schoutenBracket(const Multiderivation &X, const Multiderivation &Y,
                                const FdWindow &window) {
	const ConstTablePtr &tab = X.table() ? X.table() : Y.table();
	if (X.table() && Y.table() && X.table() != Y.table())
		throw std::invalid_argument("schoutenBracket: table mismatch");
	Multiderivation out(tab);
	if (X.isZero() || Y.isZero())
		return out;
	for (int v = 0; v < tab->size(); ++v) {
		const VariableDescriptor &d = tab->at(v);
		if (d.kind != VarKind::X || d.paired < 0)
			continue;
		int xi = d.paired;
		Multiderivation p1 = X.derivative(xi, DerivativeSide::Right);
		if (!p1.isZero()) {
			Multiderivation q1 = Y.derivative(v, DerivativeSide::Left);
			if (!q1.isZero())
				out += p1.mulWindowed(q1, window);
		}
		Multiderivation p2 = X.derivative(v, DerivativeSide::Right);
		if (!p2.isZero()) {
			Multiderivation q2 = Y.derivative(xi, DerivativeSide::Left);
			if (!q2.isZero())
				out -= p2.mulWindowed(q2, window);
		}
	}
	return out;
}

Multiderivation pi0Of(const Resolvent &R, const ConstTablePtr &ext, int levelCap) {
	Multiderivation out(ext);
	for (auto &a : R.adjoined()) {
		if (a.level > levelCap)
			continue;
		Polynomial F = a.differential.withTable(ext);
		out += F * Polynomial::variable(ext, ext->at(a.varIndex).paired);
	}
	return out;
}

Multiderivation pi1Of(const PoissonStructure &P, const ConstTablePtr &ext) {
	Multiderivation out(ext);
	const auto &xs = P.coordinates();
	for (size_t a = 0; a < xs.size(); ++a)
		for (size_t b = a + 1; b < xs.size(); ++b) {
			Polynomial lam = P.entry(xs[a], xs[b]);
			if (lam.isZero())
				continue;
			out += lam.withTable(ext) *
			       Polynomial::variable(ext, ext->at(xs[a]).paired) *
			       Polynomial::variable(ext, ext->at(xs[b]).paired);
		}
	return out;
}

Multiderivation filtrationComponent(const Multiderivation &X, int p) {
	return X.fdComponent(p);
}

Multiderivation lichnerowicz(const PoissonStructure &P, const Multiderivation &X) {
	Multiderivation p1 = pi1Of(P, X.table());
	return schoutenBracket(p1, X);
}

EulerResult eulerXDegree(const Multiderivation &X) {
	EulerResult r;
	r.degreesSeen = X.eulerXDegrees();
	r.degree = X.eulerXDegree();
	return r;
}

Multiderivation differentialOnDuals(const Resolvent &R, const ConstTablePtr &ext,
                                    const Multiderivation &X) {
	Multiderivation out(ext);
	for (auto &a : R.adjoined()) {
		Multiderivation d = X.derivative(a.varIndex, DerivativeSide::Left);
		if (!d.isZero())
			out += a.differential.withTable(ext) * d;
	}
	return out;
}

} // namespace hpoisson
