#include "hpoisson/perturbation.hpp"

#include <algorithm>
#include <functional>

namespace hpoisson {

namespace {

/// Splits a multiderivation into (dual word -> coefficient) sectors. The
/// table orders all X variables before the duals, so every canonical
/// monomial factors as coefficient * word without extra signs.
std::map<Monomial, Polynomial, MonomialCmp> splitSectors(const Multiderivation &X) {
	const ConstTablePtr &tab = X.table();
	std::map<Monomial, Polynomial, MonomialCmp> out;
	for (auto &[m, c] : X.terms()) {
		Monomial word, coef;
		for (auto &[v, e] : m.factors) {
			if (tab->at(v).kind == VarKind::Xi)
				word.factors.push_back({v, e});
			else
				coef.factors.push_back({v, e});
		}
		recomputeDegrees(word, *tab);
		recomputeDegrees(coef, *tab);
		auto [it, fresh] = out.try_emplace(word, tab);
		it->second.addTerm(coef, c);
	}
	return out;
}

std::string describeWord(const Monomial &w, const VariableTable &tab) {
	return w.isConstant() ? std::string("1") : serializeMonomial(w, tab);
}

} // namespace

Multiderivation PiSequence::partialSum(int m) const {
	Multiderivation acc = pi0.filter([&](const Monomial &mono) {
		for (auto &[v, e] : mono.factors)
			if (ext->at(v).kind == VarKind::Xi && ext->at(v).level > m)
				return false;
		return true;
	});
	for (int i = 1; i <= m && i < static_cast<int>(pis.size()); ++i)
		acc += pis[i];
	return acc;
}

Multiderivation pi2Of(const ZTensor &Z, const Resolvent &R, const ConstTablePtr &ext) {
	Multiderivation out(ext);
	for (auto &[key, z] : Z.entries) {
		auto [i, mu, nu] = key;
		const auto &aMu = R.adjoined().at(mu);
		const auto &aNu = R.adjoined().at(nu);
		if (aMu.level != 1 || aNu.level != 1)
			throw std::invalid_argument("pi2Of: Z indices must refer to level-1 generators");
		out -= z.withTable(ext) * Polynomial::variable(ext, aNu.varIndex) *
		       Polynomial::variable(ext, ext->at(i).paired) *
		       Polynomial::variable(ext, ext->at(aMu.varIndex).paired);
	}
	return out;
}

Multiderivation nextPi(const PiSequence &seq, int m, PiSequence::StepCertificate *certOut) {
	const ConstTablePtr &ext = seq.ext;
	const Resolvent &R = *seq.resolvent;
	Multiderivation Pi = seq.partialSum(m);
	Multiderivation A = schoutenBracket(Pi, Pi, {m + 2, m + 2});
	if (certOut) {
		certOut->m = m;
		certOut->before = A;
	}
	Multiderivation next(ext);
	if (A.isZero()) {
		if (certOut)
			certOut->after = A;
		return next;
	}

	Multiderivation dA = differentialOnDuals(R, ext, A);
	if (!dA.isZero())
		throw std::logic_error("nextPi: residue fails the cocycle test at fd " +
		                       std::to_string(m + 2) + " (sign bug upstream)");

	auto sectors = splitSectors(A);
	for (auto &[word, coef] : sectors) {
		auto coho = coef.cohomologicalDegree();
		auto ideg = coef.internalDegree();
		if (!coho || !ideg)
			throw std::logic_error("nextPi: inhomogeneous residue sector " +
			                       describeWord(word, *ext));
		if (*coho - 1 > 0)
			throw std::logic_error("nextPi: sector " + describeWord(word, *ext) +
			                       " would need a positive-degree solution");
		int arity = word.totalExponent();
		if (word.internalDegree + *ideg != (arity - 1) * seq.bracketDegree)
			throw std::logic_error("nextPi: sector " + describeWord(word, *ext) +
			                       " violates the arity degree law");
		SliceBasis domain = enumerateBasis(*ext, *coho - 1, *ideg, m);
		SliceBasis codomain = enumerateBasis(*ext, *coho, *ideg, m);
		auto diff = [&](const Polynomial &p) { return differentialOnDuals(R, ext, p); };
		SparseMatrix M = matrixOfMap(diff, domain, codomain, ext);
		Vec rhs = coordinates(coef * Rat(-1, 2), codomain);
		auto sol = solvePreimage(M, rhs);
		if (!sol)
			throw std::runtime_error(
			    "nextPi: no preimage in sector " + describeWord(word, *ext) +
			    " (cohomological degree " + std::to_string(*coho - 1) +
			    ", internal degree " + std::to_string(*ideg) +
			    "); exactness is not guaranteed beyond the truncation degree");
		Polynomial c = fromCoordinates(*sol, domain, ext);
		next += c * Polynomial::term(ext, Rat(1), word.factors);
	}
	if (certOut)
		certOut->after = A + Rat(2) * differentialOnDuals(R, ext, next);
	return next;
}

PiSequence computePi(const PoissonStructure &P, const Resolvent &R, const ZTensor &Z) {
	PiSequence seq;
	seq.resolvent = &R;
	seq.ext = makeDualExtension(R.table());
	seq.maxLevel = R.builtLevel();
	seq.maxInternalDegree = R.truncation().maxInternalDegree;
	seq.bracketDegree = P.bracketDegree();
	seq.pi0 = pi0Of(R, seq.ext, seq.maxLevel);
	seq.pis.assign(std::max(2, seq.maxLevel) + 1, Multiderivation(seq.ext));
	seq.pis[1] = pi1Of(P, seq.ext);
	seq.pis[2] = pi2Of(Z, R, seq.ext);

	{
		PiSequence::StepCertificate cert;
		cert.m = 1;
		Multiderivation Pi1 = seq.partialSum(1);
		cert.before = schoutenBracket(Pi1, Pi1, {3, 3});
		cert.after = cert.before + Rat(2) * differentialOnDuals(R, seq.ext, seq.pis[2]);
		if (!cert.after.isZero())
			throw std::logic_error("computePi: pi_2 does not cancel the fd-3 residue "
			                       "(Z inconsistent with the bracket)");
		seq.certificates.push_back(std::move(cert));
	}
	for (int m = 2; m < seq.maxLevel; ++m) {
		PiSequence::StepCertificate cert;
		Multiderivation next = nextPi(seq, m, &cert);
		if (!cert.after.isZero())
			throw std::logic_error("computePi: residue not cancelled at step " +
			                       std::to_string(m));
		seq.pis[m + 1] = next;
		seq.certificates.push_back(std::move(cert));
	}
	Multiderivation full = seq.partialSum(seq.maxLevel);
	seq.finalResidue =
	    schoutenBracket(full, full, {seq.maxLevel + 2, seq.maxLevel + 2});
	return seq;
}

Polynomial higherBracket(const PiSequence &seq, const std::vector<Polynomial> &args) {
	const ConstTablePtr &ext = seq.ext;
	int m = static_cast<int>(args.size());
	if (m < 1)
		throw std::invalid_argument("higherBracket: at least one argument");
	if (m > std::max(2, seq.maxLevel + 1))
		throw std::invalid_argument("higherBracket: arity exceeds the computed fd range");
	std::vector<int> degrees;
	for (auto &a : args) {
		auto d = a.cohomologicalDegree();
		if (!d && !a.isZero())
			throw std::invalid_argument("higherBracket: arguments must be homogeneous");
		degrees.push_back(d.value_or(0));
		for (auto &[mono, c] : a.terms())
			for (auto &[v, e] : mono.factors)
				if (ext->at(v).kind == VarKind::Xi)
					throw std::invalid_argument(
					    "higherBracket: arguments must not contain duals");
	}
	// Only the arity-m sector of pi contributes: each bracket strips one
	// dual and the augmentation kills whatever is left.
	Multiderivation total = seq.pi0;
	for (size_t i = 1; i < seq.pis.size(); ++i)
		total += seq.pis[i];
	Multiderivation acc = total.filter([&](const Monomial &mono) {
		int arity = 0;
		for (auto &[v, e] : mono.factors)
			if (ext->at(v).kind == VarKind::Xi)
				arity += e;
		return arity == m;
	});
	for (auto &a : args)
		acc = schoutenBracket(acc, a);
	int signExp = m + 1;
	for (int i = 0; i < m; ++i)
		signExp += (m - i - 1) * degrees[i];
	return (signExp % 2 == 0) ? acc : -acc;
}

namespace {

Polynomial projectToA(const Polynomial &p, const IdealSlices &slices) {
	Polynomial killed = p.killVariables(
	    [](const VariableDescriptor &d) { return d.kind == VarKind::Xi || d.level > 0; });
	return slices.reduce(killed);
}

} // namespace

BracketTable algebroidBrackets(const PiSequence &seq, int arity) {
	const ConstTablePtr &ext = seq.ext;
	const Resolvent &R = *seq.resolvent;
	IdealSlices slices(R.table(), R.ideal());
	BracketTable out;
	out.flavor = BracketTable::Flavor::AlgebroidBracket;
	out.arity = arity;

	std::vector<int> tuple;
	std::function<void(int)> rec = [&](int start) {
		if (static_cast<int>(tuple.size()) == arity) {
			std::vector<Polynomial> args;
			for (int g : tuple)
				args.push_back(Polynomial::variable(ext, g));
			Polynomial h = higherBracket(seq, args);
			if (h.isZero())
				return;
			std::vector<std::pair<int, Polynomial>> row;
			for (int i = 0; i < R.table()->size(); ++i) {
				Polynomial c = h.derivative(i, DerivativeSide::Left);
				// d then tensoring with A: only level-0 coefficient parts
				// survive
				Polynomial reduced = projectToA(c, slices);
				if (!reduced.isZero())
					row.push_back({i, reduced});
			}
			if (!row.empty())
				out.brackets[tuple] = std::move(row);
			return;
		}
		for (int s = start; s < R.table()->size(); ++s) {
			// dX_g is repeatable in the antisymmetric bracket only when its
			// degree -level(g) is odd
			bool repeatable = (ext->at(s).level % 2) != 0;
			tuple.push_back(s);
			rec(repeatable ? s : s + 1);
			tuple.pop_back();
		}
	};
	rec(0);
	return out;
}

BracketTable anchorTable(const PiSequence &seq, int arity) {
	const ConstTablePtr &ext = seq.ext;
	const Resolvent &R = *seq.resolvent;
	IdealSlices slices(R.table(), R.ideal());
	BracketTable out;
	out.flavor = BracketTable::Flavor::Anchor;
	out.arity = arity;
	if (arity < 2)
		return out; // rho_1 = 0 by definition

	std::vector<int> coords = R.table()->coordinates();
	std::vector<int> tuple;
	std::function<void(int)> rec = [&](int start) {
		if (static_cast<int>(tuple.size()) == arity - 1) {
			for (int xi : coords) {
				std::vector<Polynomial> args;
				for (int g : tuple)
					args.push_back(Polynomial::variable(ext, g));
				args.push_back(Polynomial::variable(ext, xi));
				Polynomial rho = projectToA(higherBracket(seq, args), slices);
				if (rho.isZero())
					continue;
				std::vector<int> key = tuple;
				key.push_back(xi);
				out.anchorValues[key] = rho;
			}
			return;
		}
		for (int s = start; s < R.table()->size(); ++s) {
			bool repeatable = (ext->at(s).level % 2) != 0;
			tuple.push_back(s);
			rec(repeatable ? s : s + 1);
			tuple.pop_back();
		}
	};
	rec(0);
	return out;
}

ConormalAlgebroid conormalAlgebroid(const PoissonStructure &P, const Resolvent &R,
                                    const ZTensor &Z) {
	if (R.builtLevel() < 2)
		throw std::invalid_argument(
		    "conormalAlgebroid: level 2 must be built to certify the complete intersection");
	if (R.bettiCount(2) != 0)
		throw std::invalid_argument("conormalAlgebroid: not a complete intersection "
		                            "(level-2 homology present)");
	const ConstTablePtr &tab = R.table();
	IdealSlices slices(tab, R.ideal());
	ConormalAlgebroid out;
	out.brackets.flavor = BracketTable::Flavor::AlgebroidBracket;
	out.brackets.arity = 2;
	out.anchor.flavor = BracketTable::Flavor::Anchor;
	out.anchor.arity = 2;

	std::vector<int> coords = tab->coordinates();
	for (size_t a = 0; a < coords.size(); ++a)
		for (size_t b = a + 1; b < coords.size(); ++b) {
			Polynomial lam = P.entry(coords[a], coords[b]).withTable(tab);
			std::vector<std::pair<int, Polynomial>> row;
			for (int k : coords) {
				Polynomial c = slices.reduce(lam.derivative(k, DerivativeSide::Left));
				if (!c.isZero())
					row.push_back({k, c});
			}
			if (!row.empty())
				out.brackets.brackets[{coords[a], coords[b]}] = std::move(row);
		}
	int k = R.ideal().count();
	for (int i : coords)
		for (int mu = 0; mu < k; ++mu) {
			std::vector<std::pair<int, Polynomial>> row;
			for (int nu = 0; nu < k; ++nu) {
				Polynomial z = Z.at(P.table(), i, mu, nu);
				if (z.isZero())
					continue;
				Polynomial c = slices.reduce(z.withTable(tab));
				if (!c.isZero())
					row.push_back({R.adjoined().at(nu).varIndex, c});
			}
			if (!row.empty())
				out.brackets.brackets[{i, R.adjoined().at(mu).varIndex}] = std::move(row);
		}
	for (int i : coords)
		for (int j : coords) {
			if (i == j)
				continue;
			Polynomial v = slices.reduce(P.entry(i, j).withTable(tab));
			if (!v.isZero())
				out.anchor.anchorValues[{i, j}] = v;
		}
	return out;
}

std::map<int, std::pair<int, int>> aSquareStatistics(const PiSequence &seq) {
	std::map<int, std::pair<int, int>> out;
	for (size_t m = 1; m < seq.pis.size(); ++m) {
		int inA2 = 0, total = 0;
		for (auto &[mono, c] : seq.pis[m].terms()) {
			int adjoinedOcc = 0;
			for (auto &[v, e] : mono.factors) {
				const VariableDescriptor &d = seq.ext->at(v);
				if (d.kind == VarKind::X && d.level > 0)
					adjoinedOcc += e;
			}
			++total;
			if (adjoinedOcc >= 2)
				++inA2;
		}
		if (total > 0)
			out[static_cast<int>(m)] = {inA2, total};
	}
	return out;
}

} // namespace hpoisson
