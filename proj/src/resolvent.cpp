#include "hpoisson/resolvent.hpp"

#include <algorithm>

namespace hpoisson {

std::string Resolvent::variableName(int level, int j) {
	switch (level) {
	case 1:
		return "y" + std::to_string(j);
	case 2:
		return "z" + std::to_string(j);
	case 3:
		return "w" + std::to_string(j);
	default:
		return "v" + std::to_string(level) + "_" + std::to_string(j);
	}
}

const Resolvent::Adjoined *Resolvent::adjoinedFor(int varIndex) const {
	for (auto &a : adjoined_)
		if (a.varIndex == varIndex)
			return &a;
	return nullptr;
}

std::map<int, int> Resolvent::bettiAtLevel(int level) const {
	std::map<int, int> out;
	for (auto &a : adjoined_)
		if (a.level == level)
			++out[a.internalDegree];
	return out;
}

int Resolvent::bettiCount(int level) const {
	int n = 0;
	for (auto &a : adjoined_)
		if (a.level == level)
			++n;
	return n;
}

Polynomial Resolvent::differentialApply(const Polynomial &p) const {
	Polynomial out(tab_);
	for (auto &a : adjoined_) {
		Polynomial d = p.derivative(a.varIndex, DerivativeSide::Left);
		if (!d.isZero())
			out += a.differential * d;
	}
	return out;
}

std::vector<Resolvent::DSquaredFailure> Resolvent::checkDSquared() const {
	std::vector<DSquaredFailure> out;
	for (auto &a : adjoined_) {
		Polynomial dd = differentialApply(a.differential);
		if (!dd.isZero())
			out.push_back({a.varIndex, dd});
	}
	return out;
}

namespace {

bool isMinimalImage(const Polynomial &F, int level) {
	if (level == 1) {
		// in m = (x_1..x_n): no constant term; guaranteed by homogeneity
		return F.constantTerm() == Rat();
	}
	for (auto &[m, c] : F.terms())
		if (m.totalExponent() < 2)
			return false;
	return true;
}

TablePtr cloneLevel0(const ConstTablePtr &src) {
	auto tab = std::make_shared<VariableTable>();
	for (int i = 0; i < src->size(); ++i) {
		const VariableDescriptor &d = src->at(i);
		if (d.kind != VarKind::X || d.level != 0)
			throw std::invalid_argument("resolvent input table must be level-0 coordinates only");
		tab->addCoordinate(d.name, d.internalDegree);
	}
	return tab;
}

} // namespace

Resolvent koszulComplex(const ConstTablePtr &level0, const IdealPresentation &I,
                        const TruncationParams &trunc) {
	Resolvent R;
	R.tabMut_ = cloneLevel0(level0);
	R.tab_ = R.tabMut_;
	R.trunc_ = trunc;
	std::vector<Polynomial> gens;
	for (auto &g : I.gens)
		gens.push_back(g.withTable(R.tab_));
	R.ideal_ = IdealPresentation::fromPolys(gens);
	for (int mu = 0; mu < R.ideal_.count(); ++mu) {
		int idx = R.tabMut_->addAdjoined(Resolvent::variableName(1, mu + 1), 1,
		                                 R.ideal_.degrees[mu]);
		R.adjoined_.push_back({idx, 1, R.ideal_.degrees[mu], R.ideal_.gens[mu],
		                       isMinimalImage(R.ideal_.gens[mu], 1)});
	}
	R.builtLevel_ = 1;
	return R;
}

void extendLevel(Resolvent &R, int level, int maxDegree) {
	if (level != R.builtLevel_ + 1)
		throw std::invalid_argument("extendLevel: levels must be built in order");
	const ConstTablePtr &tab = R.tab_;
	auto diff = [&](const Polynomial &p) { return R.differentialApply(p); };
	int adjoinedAtLevel = 0;
	for (int d = 1; d <= maxDegree; ++d) {
		SliceBasis cycSlice = enumerateBasis(*tab, -level + 1, d, level - 1, R.sliceGuard_);
		if (cycSlice.dim() == 0)
			continue;
		SliceBasis target = enumerateBasis(*tab, -level + 2, d, level - 1, R.sliceGuard_);
		// boundary sources include level-`level` generators adjoined at
		// lower internal degrees in this very loop
		SliceBasis bndSlice = enumerateBasis(*tab, -level, d, level, R.sliceGuard_);
		SparseMatrix dOut = matrixOfMap(diff, cycSlice, target, tab);
		SparseMatrix dIn = matrixOfMap(diff, bndSlice, cycSlice, tab);
		std::vector<Vec> cycles = kernelBasis(dOut);
		std::vector<Vec> reps = homologyComplement(dIn, cycles);
		for (const Vec &rep : reps) {
			Polynomial F = fromCoordinates(rep, cycSlice, tab);
			++adjoinedAtLevel;
			int idx = R.tabMut_->addAdjoined(
			    Resolvent::variableName(level, adjoinedAtLevel), level, d);
			R.adjoined_.push_back({idx, level, d, F, isMinimalImage(F, level)});
			R.provenance_.push_back("level " + std::to_string(level) + " degree " +
			                        std::to_string(d) + ": adjoined " +
			                        tab->at(idx).name + " with differential " + serialize(F));
		}
	}
	R.builtLevel_ = level;
}

Resolvent buildResolvent(const ConstTablePtr &level0, const IdealPresentation &I,
                         const TruncationParams &trunc) {
	Resolvent R = koszulComplex(level0, I, trunc);
	for (int m = 2; m <= trunc.maxLevel; ++m)
		extendLevel(R, m, trunc.maxInternalDegree);
	return R;
}

Resolvent resolventFromData(const ConstTablePtr &level0, const IdealPresentation &I,
                            const TruncationParams &trunc,
                            const std::vector<std::tuple<std::string, int, std::string>> &vars) {
	Resolvent R;
	R.tabMut_ = cloneLevel0(level0);
	R.tab_ = R.tabMut_;
	R.trunc_ = trunc;
	std::vector<Polynomial> gens;
	for (auto &g : I.gens)
		gens.push_back(g.withTable(R.tab_));
	R.ideal_ = IdealPresentation::fromPolys(gens);

	// First pass: declare variables level by level so differentials can
	// reference earlier levels; degrees are inferred afterwards, so insert
	// with a provisional degree and patch. VariableTable is append-only, so
	// we instead declare with the parsed differential's degree, which
	// requires sorting inputs by level (the table demands ascending levels).
	std::vector<std::tuple<std::string, int, std::string>> sorted = vars;
	std::stable_sort(sorted.begin(), sorted.end(),
	                 [](const auto &a, const auto &b) { return std::get<1>(a) < std::get<1>(b); });
	for (auto &[name, level, diffText] : sorted) {
		Polynomial F = parse(diffText, R.tab_);
		auto deg = F.internalDegree();
		if (!deg)
			throw std::invalid_argument("resolventFromData: differential of '" + name +
			                            "' is internally inhomogeneous");
		auto coho = F.cohomologicalDegree();
		if (!coho || *coho != -level + 1)
			throw std::invalid_argument("resolventFromData: differential of '" + name +
			                            "' has wrong cohomological degree");
		int idx = R.tabMut_->addAdjoined(name, level, *deg);
		R.adjoined_.push_back({idx, level, *deg, F, isMinimalImage(F, level)});
		R.builtLevel_ = std::max(R.builtLevel_, level);
	}
	auto bad = R.checkDSquared();
	if (!bad.empty())
		throw std::invalid_argument("resolventFromData: d^2 != 0 on " +
		                            R.tab_->at(bad.front().varIndex).name);
	return R;
}

int hilbertSlice(const IdealSlices &slices, int d) { return slices.quotientDim(d); }

CotangentComplex cotangentComplex(const Resolvent &R) {
	const ConstTablePtr &tab = R.table();
	IdealSlices slices(tab, R.ideal());
	CotangentComplex L;
	auto killHigher = [&](const Polynomial &p) {
		return p.killVariables([](const VariableDescriptor &d) { return d.level > 0; });
	};
	for (int i = 0; i < tab->size(); ++i)
		L.generators.push_back({i, tab->at(i).cohomologicalDegree});
	for (auto &a : R.adjoined()) {
		std::vector<std::pair<int, Polynomial>> row;
		for (int i = 0; i < tab->size(); ++i) {
			Polynomial c = killHigher(a.differential.derivative(i, DerivativeSide::Left));
			if (c.isZero())
				continue;
			Polynomial reduced = slices.reduce(c);
			if (!reduced.isZero())
				row.push_back({i, reduced});
		}
		if (!row.empty())
			L.differential[a.varIndex] = std::move(row);
	}
	return L;
}

} // namespace hpoisson
