#include "hpoisson/verify.hpp"

#include <algorithm>
#include <cstdio>
#include <sstream>

namespace hpoisson {

std::vector<SignedPermutation> unshuffles(int q, int r) {
	if (q < 0 || r < 0)
		throw std::invalid_argument("unshuffles: negative arguments");
	int m = q + r;
	std::vector<SignedPermutation> out;
	std::vector<int> first;
	std::function<void(int)> rec = [&](int start) {
		if (static_cast<int>(first.size()) == q) {
			SignedPermutation sp;
			sp.perm = first;
			std::vector<bool> used(m, false);
			for (int v : first)
				used[v] = true;
			for (int v = 0; v < m; ++v)
				if (!used[v])
					sp.perm.push_back(v);
			int inv = 0;
			for (size_t i = 0; i < sp.perm.size(); ++i)
				for (size_t j = i + 1; j < sp.perm.size(); ++j)
					if (sp.perm[i] > sp.perm[j])
						++inv;
			sp.paritySign = (inv % 2 == 0) ? 1 : -1;
			out.push_back(std::move(sp));
			return;
		}
		for (int v = start; v < m; ++v) {
			first.push_back(v);
			rec(v + 1);
			first.pop_back();
		}
	};
	rec(0);
	return out;
}

int koszulSign(const std::vector<int> &perm, const std::vector<int> &degrees) {
	if (perm.size() != degrees.size())
		throw std::invalid_argument("koszulSign: length mismatch");
	int sign = 1;
	for (size_t i = 0; i < perm.size(); ++i)
		for (size_t j = i + 1; j < perm.size(); ++j)
			if (perm[i] > perm[j] && (degrees[perm[i]] % 2 != 0) &&
			    (degrees[perm[j]] % 2 != 0))
				sign = -sign;
	return sign;
}

std::vector<IdentityFailure> linftyIdentityCheck(
    const BracketOracle &bracket, int m,
    const std::vector<std::vector<Polynomial>> &tuples,
    const std::function<Polynomial(const Polynomial &)> &normalize) {
	std::vector<IdentityFailure> out;
	for (const auto &tuple : tuples) {
		if (static_cast<int>(tuple.size()) != m)
			throw std::invalid_argument("linftyIdentityCheck: tuple arity mismatch");
		std::vector<int> degrees;
		for (auto &x : tuple) {
			auto d = x.cohomologicalDegree();
			if (!d && !x.isZero())
				throw std::invalid_argument("linftyIdentityCheck: inhomogeneous argument");
			degrees.push_back(d.value_or(0));
		}
		Polynomial acc(tuple.front().table());
		for (int q = 1; q <= m; ++q) {
			int p = m + 1 - q;
			for (const SignedPermutation &sp : unshuffles(q, p - 1)) {
				std::vector<Polynomial> inner;
				for (int i = 0; i < q; ++i)
					inner.push_back(tuple[sp.perm[i]]);
				std::vector<Polynomial> outer;
				outer.push_back(bracket(inner));
				for (int i = q; i < m; ++i)
					outer.push_back(tuple[sp.perm[i]]);
				Polynomial term = bracket(outer);
				if (term.isZero())
					continue;
				int sign = sp.paritySign * koszulSign(sp.perm, degrees);
				if ((q * (p - 1)) % 2 != 0)
					sign = -sign;
				if (sign > 0)
					acc += term;
				else
					acc -= term;
			}
		}
		if (normalize)
			acc = normalize(acc);
		if (!acc.isZero()) {
			IdentityFailure f;
			for (auto &x : tuple)
				f.tuple.push_back(serialize(x));
			f.value = acc;
			out.push_back(std::move(f));
		}
	}
	return out;
}

std::vector<std::vector<Polynomial>> generatorTuples(const PiSequence &seq, int arity,
                                                     int fdCap, int degCap) {
	const ConstTablePtr &ext = seq.ext;
	std::vector<int> gens;
	for (int i = 0; i < ext->size(); ++i)
		if (ext->at(i).kind == VarKind::X)
			gens.push_back(i);
	std::vector<std::vector<Polynomial>> out;
	std::vector<int> tuple;
	std::function<void(size_t, int, int)> rec = [&](size_t start, int fd, int deg) {
		if (static_cast<int>(tuple.size()) == arity) {
			std::vector<Polynomial> t;
			for (int g : tuple)
				t.push_back(Polynomial::variable(ext, g));
			out.push_back(std::move(t));
			return;
		}
		for (size_t s = start; s < gens.size(); ++s) {
			const VariableDescriptor &d = ext->at(gens[s]);
			int nfd = fd + d.level + 1;
			int ndeg = deg + d.internalDegree;
			if (nfd > fdCap || ndeg > degCap)
				continue;
			bool repeatable = (d.level % 2) != 0;
			tuple.push_back(gens[s]);
			rec(repeatable ? s : s + 1, nfd, ndeg);
			tuple.pop_back();
		}
	};
	rec(0, 0, 0);
	return out;
}

ModuleCheckReport moduleIdentityCheck(const PiSequence &seq, int arity,
                                      const std::vector<std::vector<int>> &tuples,
                                      std::mt19937_64 &rng) {
	ModuleCheckReport rep;
	const ConstTablePtr &ext = seq.ext;
	const Resolvent &R = *seq.resolvent;
	IdealSlices slices(R.table(), R.ideal());
	auto toA = [&](const Polynomial &p) {
		return slices.reduce(p.killVariables(
		    [](const VariableDescriptor &d) { return d.kind == VarKind::Xi || d.level > 0; }));
	};
	auto randomA = [&](int maxTerms) {
		std::uniform_int_distribution<int> coeff(-3, 3);
		std::uniform_int_distribution<int> expD(0, 2);
		Polynomial p(ext);
		for (int t = 0; t < maxTerms; ++t) {
			std::vector<std::pair<int32_t, int32_t>> word;
			for (int v = 0; v < ext->size(); ++v) {
				if (ext->at(v).kind != VarKind::X || ext->at(v).level != 0)
					continue;
				int e = expD(rng);
				if (e > 0)
					word.push_back({v, e});
			}
			int c = coeff(rng);
			if (c != 0)
				p += Polynomial::term(ext, Rat(c), word);
		}
		return p;
	};

	if (!anchorTable(seq, 1).anchorValues.empty())
		rep.failures.push_back("rho_1 is nonzero");
	++rep.checked;

	for (const auto &tuple : tuples) {
		if (static_cast<int>(tuple.size()) != arity - 1)
			throw std::invalid_argument("moduleIdentityCheck: tuples must have arity-1 entries");
		std::vector<Polynomial> gens;
		for (int g : tuple)
			gens.push_back(Polynomial::variable(ext, g));

		Polynomial a = randomA(2), b = randomA(2);
		// anchor Leibniz in the algebra slot
		{
			auto args = gens;
			args.push_back(a * b);
			Polynomial lhs = toA(higherBracket(seq, args));
			args.back() = a;
			Polynomial ra = toA(higherBracket(seq, args));
			args.back() = b;
			Polynomial rb = toA(higherBracket(seq, args));
			Polynomial rhs = slices.reduce(ra * toA(b) + toA(a) * rb);
			if (!(slices.reduce(lhs - rhs).isZero()))
				rep.failures.push_back("anchor Leibniz law fails at arity " +
				                       std::to_string(arity));
			++rep.checked;
		}
		// A-linearity expansion of the first L slot against the correction
		// term p(X_1) rho(a, ...); for adjoined X_1 the correction dies
		{
			auto args = gens;
			args.push_back(Polynomial::variable(ext, 0));
			Polynomial plain = toA(higherBracket(seq, args));
			auto scaled = args;
			scaled.front() = a * scaled.front();
			Polynomial lhs = toA(higherBracket(seq, scaled));
			std::vector<Polynomial> corr = args;
			corr.front() = a;
			Polynomial corrVal = toA(higherBracket(seq, corr)) * toA(gens.front());
			Polynomial rhs = slices.reduce(toA(a) * plain + corrVal);
			if (!(slices.reduce(lhs - rhs).isZero()))
				rep.failures.push_back("A-linearity expansion law fails at arity " +
				                       std::to_string(arity));
			++rep.checked;
		}
		// homotopy module identity with the last argument from A
		{
			std::vector<Polynomial> full = gens;
			full.push_back(a);
			auto oracle = [&](const std::vector<Polynomial> &args2) {
				return higherBracket(seq, args2);
			};
			auto failures = linftyIdentityCheck(
			    oracle, arity, {full}, [&](const Polynomial &v) { return toA(v); });
			if (!failures.empty())
				rep.failures.push_back("homotopy anchor identity fails at arity " +
				                       std::to_string(arity));
			++rep.checked;
		}
	}
	return rep;
}

PiCertificate verifyPiSequence(const PoissonStructure &P, const Resolvent &R,
                               const std::vector<Multiderivation> &pis, int maxLevel,
                               bool checkPairwise) {
	PiCertificate cert;
	cert.maxLevel = maxLevel;
	cert.maxInternalDegree = R.truncation().maxInternalDegree;
	if (static_cast<int>(pis.size()) <= maxLevel)
		throw std::invalid_argument("verifyPiSequence: pis must hold entries 1..maxLevel");
	ConstTablePtr ext = pis.at(1).table();
	std::ostringstream hashInput;

	PiSequence seq;
	seq.resolvent = &R;
	seq.ext = ext;
	seq.maxLevel = maxLevel;
	seq.bracketDegree = P.bracketDegree();
	seq.pi0 = pi0Of(R, ext, R.builtLevel());
	seq.pis.assign(maxLevel + 1, Multiderivation(ext));
	for (int m = 1; m <= maxLevel; ++m)
		seq.pis[m] = pis.at(m);
	for (int m = 0; m <= maxLevel; ++m)
		hashInput << (m == 0 ? serialize(seq.pi0) : serialize(seq.pis[m])) << "\n";
	cert.inputHash = contentHash(hashInput.str());

	{
		auto bad = R.checkDSquared();
		cert.add("d_squared", bad.empty(),
		         bad.empty() ? "" : R.table()->at(bad.front().varIndex).name);
	}
	{
		Multiderivation expected = pi1Of(P, ext);
		bool ok = expected == seq.pis[1];
		cert.add("pi1_matches_bracket", ok, ok ? "" : serialize(seq.pis[1] - expected));
	}
	for (int m = 1; m <= maxLevel; ++m) {
		const Multiderivation &p = seq.pis[m];
		if (p.isZero())
			continue;
		bool fdOk = (p.fdComponent(m + 1) == p);
		auto coho = p.cohomologicalDegree();
		bool degOk = coho && *coho == 2;
		cert.add("pi" + std::to_string(m) + "_filtration", fdOk && degOk);
	}
	for (int m = 1; m < maxLevel; ++m) {
		Multiderivation Pi = seq.partialSum(m);
		Multiderivation before = schoutenBracket(Pi, Pi, {m + 2, m + 2});
		Multiderivation after =
		    before + Rat(2) * differentialOnDuals(R, ext, seq.pis[m + 1]);
		bool ok = after.isZero();
		std::string witness;
		if (!ok) {
			const Monomial &mono = after.terms().begin()->first;
			Monomial word;
			for (auto &[v, e] : mono.factors)
				if (ext->at(v).kind == VarKind::Xi)
					word.factors.push_back({v, e});
			recomputeDegrees(word, *ext);
			witness = "fd-" + std::to_string(m + 2) + " sector " +
			          serializeMonomial(word, *ext);
		}
		cert.add("residue_step_" + std::to_string(m), ok, witness);
	}
	if (checkPairwise) {
		bool allZero = true;
		std::string witness;
		for (int i = 1; i <= maxLevel && allZero; ++i)
			for (int j = i; j <= maxLevel && allZero; ++j)
				if (!schoutenBracket(seq.pis[i], seq.pis[j]).isZero()) {
					allZero = false;
					witness = "[[pi_" + std::to_string(i) + ", pi_" +
					          std::to_string(j) + "]] != 0";
				}
		cert.add("pairwise_brackets_vanish", allZero, witness);
	}
	cert.pass = std::all_of(cert.entries.begin(), cert.entries.end(),
	                        [](const PiCertificate::Entry &e) { return e.pass; });
	return cert;
}

CiTrivialityReport ciTrivialityCheck(const PoissonStructure &P, const Resolvent &R,
                                     const PiSequence &seq) {
	CiTrivialityReport rep;
	rep.casimir = true;
	for (auto &g : R.ideal().gens) {
		Polynomial lift = g.withTable(P.table());
		if (!casimirCheck(P, lift)) {
			rep.casimir = false;
			break;
		}
	}
	if (R.builtLevel() < 2)
		throw std::invalid_argument("ciTrivialityCheck: build the resolvent through level 2");
	rep.completeIntersection = (R.bettiCount(2) == 0);
	if (!rep.casimir || !rep.completeIntersection)
		throw std::invalid_argument("ciTrivialityCheck: preconditions fail (Casimir: " +
		                            std::string(rep.casimir ? "yes" : "no") +
		                            ", complete intersection: " +
		                            std::string(rep.completeIntersection ? "yes" : "no") + ")");
	rep.higherPisVanish = true;
	for (size_t m = 2; m < seq.pis.size(); ++m)
		if (!seq.pis[m].isZero())
			rep.higherPisVanish = false;

	rep.algebroidReduces = true;
	IdealSlices slices(R.table(), R.ideal());
	BracketTable t2 = algebroidBrackets(seq, 2);
	auto coords = R.table()->coordinates();
	std::map<std::vector<int>, std::vector<std::pair<int, Polynomial>>> expected;
	for (size_t a = 0; a < coords.size(); ++a)
		for (size_t b = a + 1; b < coords.size(); ++b) {
			Polynomial lam = P.entry(coords[a], coords[b]).withTable(R.table());
			std::vector<std::pair<int, Polynomial>> row;
			for (int k : coords) {
				Polynomial c = slices.reduce(lam.derivative(k, DerivativeSide::Left));
				if (!c.isZero())
					row.push_back({k, c});
			}
			if (!row.empty())
				expected[{coords[a], coords[b]}] = std::move(row);
		}
	if (t2.brackets.size() != expected.size())
		rep.algebroidReduces = false;
	else
		for (auto &[key, row] : expected) {
			auto it = t2.brackets.find(key);
			if (it == t2.brackets.end() || it->second.size() != row.size()) {
				rep.algebroidReduces = false;
				break;
			}
			for (size_t i = 0; i < row.size(); ++i)
				if (it->second[i].first != row[i].first ||
				    !(serialize(it->second[i].second) == serialize(row[i].second))) {
					rep.algebroidReduces = false;
					break;
				}
		}
	if (seq.maxLevel >= 2) {
		BracketTable t3 = algebroidBrackets(seq, 3);
		if (!t3.brackets.empty())
			rep.algebroidReduces = false;
	}
	return rep;
}

KoszulHomogeneityReport koszulHomogeneityCheck(const PiSequence &seq) {
	KoszulHomogeneityReport rep;
	int want = seq.bracketDegree + 2;
	for (size_t m = 1; m < seq.pis.size(); ++m) {
		if (seq.pis[m].isZero())
			continue;
		EulerResult e = eulerXDegree(seq.pis[m]);
		rep.degreesSeen[static_cast<int>(m)] = e.degreesSeen;
		if (!e.degree || *e.degree != want)
			rep.pass = false;
	}
	return rep;
}

std::string contentHash(const std::string &payload) {
	uint64_t h = 1469598103934665603ull;
	for (unsigned char c : payload) {
		h ^= c;
		h *= 1099511628211ull;
	}
	char buf[17];
	snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
	return buf;
}

} // namespace hpoisson
