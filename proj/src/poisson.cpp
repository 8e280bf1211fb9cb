#include "hpoisson/poisson.hpp"

#include <algorithm>
#include <functional>

namespace hpoisson {

namespace {

void requireLevel0(const Polynomial &p, const char *what) {
	for (auto &[m, c] : p.terms())
		for (auto &[v, e] : m.factors)
			if (p.table()->at(v).level != 0 || p.table()->at(v).kind != VarKind::X)
				throw std::invalid_argument(std::string(what) +
				                            ": higher-level or dual variables present");
}

} // namespace

void PoissonStructure::setEntry(int i, int j, const Polynomial &value) {
	if (i == j)
		throw std::invalid_argument("PoissonStructure: {x,x} entries are identically zero");
	requireLevel0(value, "PoissonStructure entry");
	Polynomial v = value;
	if (i > j) {
		std::swap(i, j);
		v = -v;
	}
	if (v.isZero())
		entries_.erase({i, j});
	else
		entries_[{i, j}] = v;
}

Polynomial PoissonStructure::entry(int i, int j) const {
	bool flip = i > j;
	if (flip)
		std::swap(i, j);
	auto it = entries_.find({i, j});
	if (it == entries_.end())
		return Polynomial(tab_);
	return flip ? -it->second : it->second;
}

Polynomial PoissonStructure::bracket(const Polynomial &a, const Polynomial &b) const {
	requireLevel0(a, "bracket");
	requireLevel0(b, "bracket");
	Polynomial out(tab_);
	for (auto &[ij, lam] : entries_) {
		auto [i, j] = ij;
		Polynomial da_i = a.derivative(i, DerivativeSide::Left);
		Polynomial da_j = a.derivative(j, DerivativeSide::Left);
		Polynomial db_i = b.derivative(i, DerivativeSide::Left);
		Polynomial db_j = b.derivative(j, DerivativeSide::Left);
		out += lam * (da_i * db_j - da_j * db_i);
	}
	return out;
}

void PoissonStructure::validateDegrees() const {
	for (auto &[ij, lam] : entries_) {
		auto [i, j] = ij;
		int want = tab_->at(i).internalDegree + tab_->at(j).internalDegree + degree_;
		if (!lam.internallyHomogeneous(want))
			throw std::invalid_argument("bracket entry {" + tab_->at(i).name + "," +
			                            tab_->at(j).name + "} is not homogeneous of degree " +
			                            std::to_string(want));
	}
}

std::vector<JacobiFailure> jacobiCheck(const PoissonStructure &P) {
	std::vector<JacobiFailure> out;
	const auto &xs = P.coordinates();
	auto X = [&](size_t i) { return Polynomial::variable(P.table(), xs[i]); };
	for (size_t i = 0; i < xs.size(); ++i)
		for (size_t j = i + 1; j < xs.size(); ++j)
			for (size_t k = j + 1; k < xs.size(); ++k) {
				Polynomial jac = P.bracket(X(i), P.entry(xs[j], xs[k])) +
				                 P.bracket(X(j), P.entry(xs[k], xs[i])) +
				                 P.bracket(X(k), P.entry(xs[i], xs[j]));
				if (!jac.isZero())
					out.push_back({xs[i], xs[j], xs[k], jac});
			}
	return out;
}

IdealPresentation IdealPresentation::fromPolys(std::vector<Polynomial> gens) {
	IdealPresentation out;
	for (auto &g : gens) {
		if (g.isZero())
			throw std::invalid_argument("ideal generator is zero");
		auto d = g.internalDegree();
		if (!d)
			throw std::invalid_argument("ideal generator is not homogeneous: " + serialize(g));
		if (g.constantTerm() != Rat())
			throw std::invalid_argument("ideal generator has a constant term");
		out.degrees.push_back(*d);
		out.gens.push_back(std::move(g));
	}
	return out;
}

const IdealSlices::Slice &IdealSlices::slice(int d) const {
	auto it = cache_.find(d);
	if (it != cache_.end())
		return it->second;
	Slice s;
	s.basis = enumerateBasis(*tab_, 0, d, 0);
	for (int mu = 0; mu < ideal_->count(); ++mu) {
		int rest = d - ideal_->degrees[mu];
		if (rest < 0)
			continue;
		SliceBasis mult = enumerateBasis(*tab_, 0, rest, 0);
		for (const Monomial &m : mult.monomials) {
			Polynomial prod = Polynomial::term(tab_, Rat(1), m.factors) * ideal_->gens[mu];
			if (s.span.insert(coordinates(prod, s.basis)))
				++s.idealRank;
		}
	}
	return cache_.emplace(d, std::move(s)).first->second;
}

Polynomial IdealSlices::reduce(const Polynomial &p) const {
	requireLevel0(p, "IdealSlices::reduce");
	std::map<int, Polynomial> byDeg;
	for (auto &[m, c] : p.terms()) {
		auto [it, fresh] = byDeg.try_emplace(m.internalDegree, tab_);
		it->second.addTerm(m, c);
	}
	Polynomial out(tab_);
	for (auto &[d, comp] : byDeg) {
		const Slice &s = slice(d);
		Vec v = coordinates(comp, s.basis);
		Vec r = s.span.reduce(v);
		out += fromCoordinates(r, s.basis, tab_);
	}
	return out;
}

int IdealSlices::quotientDim(int d) const {
	const Slice &s = slice(d);
	return s.basis.dim() - s.idealRank;
}

std::variant<ZTensor, NotPoissonIdeal> solveZ(const PoissonStructure &P,
                                              const IdealPresentation &I) {
	const ConstTablePtr &tab = P.table();
	ZTensor Z;
	for (int xi : P.coordinates()) {
		for (int mu = 0; mu < I.count(); ++mu) {
			Polynomial rhs = P.bracket(Polynomial::variable(tab, xi), I.gens[mu]);
			if (rhs.isZero())
				continue;
			int dt = tab->at(xi).internalDegree + I.degrees[mu] + P.bracketDegree();
			if (!rhs.internallyHomogeneous(dt))
				throw std::logic_error("solveZ: bracket degree bookkeeping failure");
			SliceBasis target = enumerateBasis(*tab, 0, dt, 0);
			struct Col {
				int nu;
				Monomial m;
			};
			std::vector<Col> cols;
			for (int nu = 0; nu < I.count(); ++nu) {
				int dz = dt - I.degrees[nu];
				if (dz < 0)
					continue;
				SliceBasis zb = enumerateBasis(*tab, 0, dz, 0);
				for (const Monomial &m : zb.monomials)
					cols.push_back({nu, m});
			}
			SparseMatrix M(target.dim(), static_cast<int>(cols.size()));
			for (size_t c = 0; c < cols.size(); ++c) {
				Polynomial prod =
				    Polynomial::term(tab, Rat(1), cols[c].m.factors) * I.gens[cols[c].nu];
				for (auto &[m, v] : prod.terms())
					M.set(target.indexOf(m), static_cast<int>(c), v);
			}
			auto sol = solvePreimage(M, coordinates(rhs, target));
			if (!sol)
				return NotPoissonIdeal{xi, mu};
			std::map<int, Polynomial> perNu;
			for (auto &[c, v] : *sol) {
				auto [it, fresh] = perNu.try_emplace(cols[c].nu, tab);
				it->second.addTerm(cols[c].m, v);
			}
			for (auto &[nu, poly] : perNu)
				Z.set(xi, mu, nu, poly);
		}
	}
	return Z;
}

void validateZ(const PoissonStructure &P, const IdealPresentation &I, const ZTensor &Z) {
	const ConstTablePtr &tab = P.table();
	for (auto &[key, poly] : Z.entries) {
		auto [i, mu, nu] = key;
		int want = tab->at(i).internalDegree + I.degrees[mu] + P.bracketDegree() - I.degrees[nu];
		if (!poly.internallyHomogeneous(want))
			throw std::invalid_argument("Z entry (" + tab->at(i).name + "," +
			                            std::to_string(mu + 1) + "," + std::to_string(nu + 1) +
			                            ") has wrong degree");
	}
	for (int xi : P.coordinates())
		for (int mu = 0; mu < I.count(); ++mu) {
			Polynomial lhs = P.bracket(Polynomial::variable(tab, xi), I.gens[mu]);
			Polynomial rhs(tab);
			for (int nu = 0; nu < I.count(); ++nu)
				rhs += Z.at(tab, xi, mu, nu) * I.gens[nu];
			if (!(lhs == rhs))
				throw std::invalid_argument("Z does not reproduce {" + tab->at(xi).name +
				                            ", f_" + std::to_string(mu + 1) + "}");
		}
}

ATensor aTensor(const PoissonStructure &P, const IdealPresentation &I, const ZTensor &Z) {
	const ConstTablePtr &tab = P.table();
	ATensor A;
	int k = I.count();
	for (int mu = 0; mu < k; ++mu)
		for (int nu = 0; nu < k; ++nu)
			for (int lam = 0; lam < k; ++lam) {
				Polynomial acc(tab);
				for (int xi : P.coordinates()) {
					acc += I.gens[mu].derivative(xi, DerivativeSide::Left) *
					       Z.at(tab, xi, nu, lam);
					acc += I.gens[nu].derivative(xi, DerivativeSide::Left) *
					       Z.at(tab, xi, mu, lam);
				}
				if (!acc.isZero())
					A.entries[{mu, nu, lam}] = acc;
			}
	return A;
}

bool MatrixTensor::isZero() const {
	for (auto &[ij, block] : blocks)
		for (auto &row : block)
			for (auto &p : row)
				if (!p.isZero())
					return false;
	return true;
}

Polynomial MatrixTensor::at(const ConstTablePtr &tab, int i, int j, int mu, int nu) const {
	bool flip = i > j;
	if (flip)
		std::swap(i, j);
	auto it = blocks.find({i, j});
	if (it == blocks.end())
		return Polynomial(tab);
	Polynomial v = it->second[mu][nu];
	return flip ? -v : v;
}

namespace {

MatrixTensor buildMatrixTensor(const PoissonStructure &P, const IdealPresentation &I,
                               const ZTensor &Z, const Rat &coboundaryWeight,
                               const Rat &commutatorWeight) {
	const ConstTablePtr &tab = P.table();
	int k = I.count();
	MatrixTensor M;
	M.k = k;
	const auto &xs = P.coordinates();
	for (size_t a = 0; a < xs.size(); ++a)
		for (size_t b = a + 1; b < xs.size(); ++b) {
			int i = xs[a], j = xs[b];
			std::vector<std::vector<Polynomial>> block(
			    k, std::vector<Polynomial>(k, Polynomial(tab)));
			Polynomial lambda = P.entry(i, j);
			bool nonzero = false;
			for (int mu = 0; mu < k; ++mu)
				for (int nu = 0; nu < k; ++nu) {
					Polynomial cob =
					    P.bracket(Polynomial::variable(tab, i), Z.at(tab, j, mu, nu)) -
					    P.bracket(Polynomial::variable(tab, j), Z.at(tab, i, mu, nu));
					for (int l : xs)
						cob -= lambda.derivative(l, DerivativeSide::Left) * Z.at(tab, l, mu, nu);
					Polynomial comm(tab);
					for (int lam = 0; lam < k; ++lam) {
						comm += Z.at(tab, i, mu, lam) * Z.at(tab, j, lam, nu);
						comm -= Z.at(tab, j, mu, lam) * Z.at(tab, i, lam, nu);
					}
					Polynomial entry = coboundaryWeight * cob + commutatorWeight * comm;
					if (!entry.isZero())
						nonzero = true;
					block[mu][nu] = std::move(entry);
				}
			if (nonzero)
				M.blocks[{i, j}] = std::move(block);
		}
	return M;
}

} // namespace

MatrixTensor mcResidue(const PoissonStructure &P, const IdealPresentation &I, const ZTensor &Z) {
	return buildMatrixTensor(P, I, Z, Rat(1), Rat(-1));
}

MatrixTensor mcResidueModIdeal(const MatrixTensor &residue, const IdealSlices &slices) {
	MatrixTensor out;
	out.k = residue.k;
	for (auto &[ij, block] : residue.blocks) {
		auto reduced = block;
		bool nonzero = false;
		for (auto &row : reduced)
			for (auto &p : row) {
				p = slices.reduce(p);
				if (!p.isZero())
					nonzero = true;
			}
		if (nonzero)
			out.blocks[ij] = std::move(reduced);
	}
	return out;
}

MatrixTensor connectionCurvature(const PoissonStructure &P, const IdealPresentation &I,
                                 const ZTensor &Z, const Rat &t) {
	return buildMatrixTensor(P, I, Z, t, t * t);
}

bool casimirCheck(const PoissonStructure &P, const Polynomial &f) {
	for (int xi : P.coordinates())
		if (!P.bracket(Polynomial::variable(P.table(), xi), f).isZero())
			return false;
	return true;
}

bool poissonIdealCheck(const PoissonStructure &P, const IdealPresentation &I) {
	return std::holds_alternative<ZTensor>(solveZ(P, I));
}

TablePtr makeMultivectorTable(const VariableTable &level0) {
	auto tab = std::make_shared<VariableTable>();
	for (int i = 0; i < level0.size(); ++i) {
		const VariableDescriptor &d = level0.at(i);
		if (d.kind != VarKind::X || d.level != 0)
			throw std::invalid_argument("makeMultivectorTable: table must be level-0 only");
		tab->addCoordinate(d.name, d.internalDegree);
	}
	for (int i = 0; i < level0.size(); ++i)
		tab->addXi(i);
	return tab;
}

namespace {

/// Arity component of a multivector: sorted coordinate-index tuple -> coeff.
struct ArityComponent {
	std::map<std::vector<int>, Polynomial> coeff;
};

Polynomial evalComponent(const ArityComponent &X, std::vector<int> idx, const ConstTablePtr &tab) {
	int sign = 1;
	for (size_t i = 0; i < idx.size(); ++i)
		for (size_t j = i + 1; j < idx.size(); ++j) {
			if (idx[i] == idx[j])
				return Polynomial(tab);
			if (idx[i] > idx[j])
				sign = -sign;
		}
	std::sort(idx.begin(), idx.end());
	auto it = X.coeff.find(idx);
	if (it == X.coeff.end())
		return Polynomial(tab);
	return sign > 0 ? it->second : -it->second;
}

} // namespace

Polynomial poissonCodifferential(const PoissonStructure &P, const Polynomial &X) {
	const ConstTablePtr tab = X.table();
	std::map<int, ArityComponent> comps;
	for (auto &[m, c] : X.terms()) {
		std::vector<int> duals;
		std::vector<std::pair<int32_t, int32_t>> rest;
		for (auto &[v, e] : m.factors) {
			if (tab->at(v).kind == VarKind::Xi)
				duals.push_back(tab->at(v).paired);
			else
				rest.push_back({v, e});
		}
		if (duals.size() > 3)
			throw std::invalid_argument(
			    "poissonCodifferential: arity > 3 (use the Schouten route)");
		Monomial coefMono;
		coefMono.factors = rest;
		recomputeDegrees(coefMono, *tab);
		auto [it, fresh] = comps.try_emplace(static_cast<int>(duals.size()));
		auto [jt, fresh2] = it->second.coeff.try_emplace(duals, tab);
		jt->second.addTerm(coefMono, c);
	}

	const auto xs = tab->coordinates();
	auto coordBracket = [&](int coord, const Polynomial &f) {
		// {x_coord, f} with Lambda entries lifted into the extended table
		Polynomial out(tab);
		for (int j : xs) {
			Polynomial lam = P.entry(coord, j).withTable(tab);
			if (lam.isZero())
				continue;
			out += lam * f.derivative(j, DerivativeSide::Left);
		}
		return out;
	};

	Polynomial result(tab);
	for (auto &[m, comp] : comps) {
		std::vector<int> tuple(m + 1);
		std::function<void(int, size_t)> rec = [&](int pos, size_t start) {
			if (pos == m + 1) {
				Polynomial val(tab);
				for (int a = 0; a <= m; ++a) {
					std::vector<int> rest;
					for (int t = 0; t <= m; ++t)
						if (t != a)
							rest.push_back(tuple[t]);
					Polynomial term = coordBracket(tuple[a], evalComponent(comp, rest, tab));
					if (a % 2 != 0)
						val -= term;
					else
						val += term;
				}
				for (int a = 0; a <= m; ++a)
					for (int b = a + 1; b <= m; ++b) {
						Polynomial lam = P.entry(tuple[a], tuple[b]).withTable(tab);
						std::vector<int> rest;
						for (int t = 0; t <= m; ++t)
							if (t != a && t != b)
								rest.push_back(tuple[t]);
						Polynomial term(tab);
						for (int t : xs) {
							Polynomial g = lam.derivative(t, DerivativeSide::Left);
							if (g.isZero())
								continue;
							std::vector<int> args = {t};
							args.insert(args.end(), rest.begin(), rest.end());
							term += g * evalComponent(comp, args, tab);
						}
						if ((a + b) % 2 != 0)
							val -= term;
						else
							val += term;
					}
				if (!val.isZero()) {
					Polynomial word(tab, Rat(1));
					for (int t = 0; t <= m; ++t)
						word *= Polynomial::variable(tab, tab->at(tuple[t]).paired);
					result += val * word;
				}
				return;
			}
			for (size_t s = start; s < xs.size(); ++s) {
				tuple[pos] = xs[s];
				rec(pos + 1, s + 1);
			}
		};
		rec(0, 0);
	}
	return result;
}

TransitionReport transitionZCheck(const PoissonStructure &P, const IdealPresentation &I,
                                  const ZTensor &Z,
                                  const std::vector<std::vector<Polynomial>> &N,
                                  const std::vector<std::vector<Polynomial>> &M) {
	const ConstTablePtr &tab = P.table();
	IdealSlices slices(tab, I);
	int k = I.count();
	int l = static_cast<int>(N.size());
	if (l == 0 || static_cast<int>(M.size()) != k)
		throw std::invalid_argument("transitionZCheck: matrix shape mismatch");

	for (int a = 0; a < l; ++a) {
		Polynomial ga(tab);
		for (int mu = 0; mu < k; ++mu)
			ga += N[a][mu] * I.gens[mu];
		if (!ga.internalDegree())
			throw std::invalid_argument("transitionZCheck: generator g_" +
			                            std::to_string(a + 1) + " is inhomogeneous");
		for (int xi : P.coordinates())
			if (!slices.contains(P.bracket(Polynomial::variable(tab, xi), ga)))
				throw std::invalid_argument("transitionZCheck: g_" + std::to_string(a + 1) +
				                            " is not Casimir mod I");
	}
	for (int mu = 0; mu < k; ++mu)
		for (int nu = 0; nu < k; ++nu) {
			Polynomial acc(tab);
			for (int a = 0; a < l; ++a)
				acc += M[mu][a] * N[a][nu];
			if (mu == nu)
				acc -= Polynomial(tab, Rat(1));
			if (!slices.contains(acc))
				throw std::invalid_argument("transitionZCheck: M, N not mutually inverse mod I");
		}

	TransitionReport rep;
	for (int xi : P.coordinates())
		for (int mu = 0; mu < k; ++mu)
			for (int nu = 0; nu < k; ++nu) {
				Polynomial lhs = Z.at(tab, xi, mu, nu);
				Polynomial rhs1(tab), rhs2(tab);
				for (int a = 0; a < l; ++a) {
					rhs1 -= M[mu][a] * P.bracket(Polynomial::variable(tab, xi), N[a][nu]);
					rhs2 += N[a][nu] * P.bracket(Polynomial::variable(tab, xi), M[mu][a]);
				}
				if (!slices.contains(lhs - rhs1))
					rep.failures.push_back("Z vs -M dN at (" + tab->at(xi).name + "," +
					                       std::to_string(mu + 1) + "," +
					                       std::to_string(nu + 1) + ")");
				if (!slices.contains(lhs - rhs2))
					rep.failures.push_back("Z vs (dM) N at (" + tab->at(xi).name + "," +
					                       std::to_string(mu + 1) + "," +
					                       std::to_string(nu + 1) + ")");
			}
	rep.pass = rep.failures.empty();
	return rep;
}

} // namespace hpoisson
