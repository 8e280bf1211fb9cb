#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "hpoisson/schouten.hpp"
#include "testutil.hpp"

using namespace hpoisson;
using hptest::makeTable;
using hptest::randomHomogeneous;
using hptest::randomPoly;

namespace {

struct Fixture {
	ConstTablePtr base;
	PoissonStructure P;
	IdealPresentation I;
	Resolvent R;
	ConstTablePtr ext;

	Fixture()
	    : base(makeTable({{"x1", 1}, {"x2", 1}})),
	      P(base, 0),
	      I(),
	      R() {}
};

Fixture twoMonomialFixture(int levels = 4) {
	Fixture f;
	auto tab = makeTable({{"x1", 1}, {"x2", 1}});
	f.base = tab;
	f.P = PoissonStructure(tab, 0);
	f.P.setEntry(0, 1, parse("x1*x2", tab));
	f.I = IdealPresentation::fromPolys({parse("x1^2", tab), parse("x1*x2", tab)});
	f.R = buildResolvent(tab, f.I, {levels, 10});
	f.ext = makeDualExtension(f.R.table());
	return f;
}

} // namespace

// The fixture needs Resolvent default-constructible only inside the helper;
// give it a trivial one.
namespace hpoisson {
} // namespace hpoisson

TEST_CASE("coordinate pairing") {
	Fixture f = twoMonomialFixture(2);
	const ConstTablePtr &ext = f.ext;
	Polynomial xi1 = Polynomial::variable(ext, ext->require("xi_x1"));
	Polynomial x1 = Polynomial::variable(ext, ext->require("x1"));
	Polynomial x2 = Polynomial::variable(ext, ext->require("x2"));
	CHECK(schoutenBracket(xi1, x1) == Polynomial(ext, Rat(1)));
	CHECK(schoutenBracket(xi1, x2).isZero());
}

TEST_CASE("pi0 reproduces the differential") {
	Fixture f = twoMonomialFixture(4);
	Multiderivation pi0 = pi0Of(f.R, f.ext, 4);
	std::mt19937_64 rng(53);
	for (int it = 0; it < 80; ++it) {
		// random polynomial in the resolvent variables only
		Polynomial p = randomPoly(f.ext, rng, 4, 2).killVariables(
		    [](const VariableDescriptor &d) { return d.kind == VarKind::Xi; });
		Polynomial viaBracket = schoutenBracket(pi0, p);
		Polynomial viaDiff = f.R.differentialApply(p.withTable(f.R.table())).withTable(f.ext);
		CHECK(viaBracket == viaDiff);
	}
	SUBCASE("pi0 squares to zero") {
		CHECK(schoutenBracket(pi0, pi0).isZero());
	}
	SUBCASE("fd of each pi0 term is level + 1") {
		for (auto &[m, c] : pi0.terms()) {
			int fd = filtrationDegree(m, *f.ext);
			int level = 0;
			for (auto &[v, e] : m.factors)
				if (f.ext->at(v).kind == VarKind::Xi)
					level = f.ext->at(v).level;
			CHECK(fd == level + 1);
		}
	}
}

TEST_CASE("schouten axioms on random multiderivations") {
	Fixture f = twoMonomialFixture(3);
	const ConstTablePtr &ext = f.ext;
	std::mt19937_64 rng(59);
	int done = 0;
	for (int it = 0; it < 400 && done < 120; ++it) {
		Polynomial X = randomHomogeneous(ext, rng);
		Polynomial Y = randomHomogeneous(ext, rng);
		Polynomial Z = randomHomogeneous(ext, rng);
		if (X.isZero() || Y.isZero() || Z.isZero())
			continue;
		++done;
		int dx = *X.cohomologicalDegree(), dy = *Y.cohomologicalDegree(),
		    dz = *Z.cohomologicalDegree();

		// axiom 2: graded antisymmetry
		Polynomial rhs = schoutenBracket(Y, X);
		if (((dx - 1) * (dy - 1)) % 2 == 0)
			rhs = -rhs;
		CHECK(schoutenBracket(X, Y) == rhs);

		// axiom 3: graded Leibniz
		Polynomial lhs = schoutenBracket(X, Y * Z);
		Polynomial r1 = schoutenBracket(X, Y) * Z;
		Polynomial r2 = Y * schoutenBracket(X, Z);
		if ((dy * (dx - 1)) % 2 != 0)
			r2 = -r2;
		CHECK(lhs == r1 + r2);

		// axiom 4: graded Jacobi
		Polynomial j1 = schoutenBracket(X, schoutenBracket(Y, Z));
		Polynomial j2 = schoutenBracket(schoutenBracket(X, Y), Z);
		Polynomial j3 = schoutenBracket(Y, schoutenBracket(X, Z));
		if (((dx - 1) * (dy - 1)) % 2 != 0)
			j3 = -j3;
		CHECK(j1 == j2 + j3);
	}
	CHECK(done >= 100);
}

TEST_CASE("bracket degree bookkeeping") {
	Fixture f = twoMonomialFixture(3);
	std::mt19937_64 rng(61);
	for (int it = 0; it < 100; ++it) {
		Polynomial X = randomHomogeneous(f.ext, rng);
		Polynomial Y = randomHomogeneous(f.ext, rng);
		if (X.isZero() || Y.isZero())
			continue;
		Polynomial B = schoutenBracket(X, Y);
		if (B.isZero())
			continue;
		CHECK(*B.cohomologicalDegree() ==
		      *X.cohomologicalDegree() + *Y.cohomologicalDegree() - 1);
		auto di = X.internalDegree();
		auto dj = Y.internalDegree();
		if (di && dj)
			CHECK(B.internallyHomogeneous(*di + *dj));
	}
}

TEST_CASE("filtration bounds of the bracket") {
	Fixture f = twoMonomialFixture(3);
	std::mt19937_64 rng(67);
	Multiderivation pi0 = pi0Of(f.R, f.ext, 3);
	int checked = 0;
	for (int it = 0; it < 300 && checked < 120; ++it) {
		Polynomial X = randomPoly(f.ext, rng, 3, 2);
		Polynomial Y = randomPoly(f.ext, rng, 3, 2);
		if (X.isZero() || Y.isZero())
			continue;
		++checked;
		int p = X.minFd(), q = Y.minFd();
		int r = 3; // max level present in the table
		Polynomial B = schoutenBracket(X, Y);
		if (!B.isZero())
			CHECK(B.minFd() >= p + q - 1 - r);

		// [[pi0, X]] = dX + higher filtration
		Polynomial D = schoutenBracket(pi0, X);
		Polynomial dX = differentialOnDuals(f.R, f.ext, X);
		Polynomial tail = D - dX;
		if (!tail.isZero())
			CHECK(tail.minFd() >= p + 1);
	}
	CHECK(checked >= 100);
}

TEST_CASE("pi1 and the displayed level-1 residue") {
	Fixture f = twoMonomialFixture(2);
	const ConstTablePtr &ext = f.ext;
	Multiderivation pi1 = pi1Of(f.P, ext);
	CHECK(serialize(pi1) == "x1*x2*xi_x1*xi_x2");

	SUBCASE("[[pi1, pi1]] = 0 iff Jacobi") {
		CHECK(schoutenBracket(pi1, pi1).isZero());
		auto bad = makeTable({{"x1", 1}, {"x2", 1}, {"x3", 1}});
		PoissonStructure Q(bad, 0);
		Q.setEntry(0, 1, parse("x1^2", bad));
		Q.setEntry(0, 2, parse("x2^2", bad));
		auto qext = makeDualExtension(bad);
		Multiderivation q1 = pi1Of(Q, qext);
		CHECK(!schoutenBracket(q1, q1).isZero());
	}

	SUBCASE("[[pi0^{<=1}, pi1]] = sum Z_{i mu}^{nu} f_nu xi^i eta^mu") {
		Multiderivation pi0 = pi0Of(f.R, ext, 1);
		Multiderivation b = schoutenBracket(pi0, pi1);
		// Z entries of the fixture: Z_{2,1}^2 = -2x1 (via -2*x1*f2),
		// Z_{1,2}^2 = x1, Z_{2,2}^2 = -x2 in the non-diagonal convention;
		// Sum Z f: {x_i, f_mu} itself.
		Polynomial expected(ext);
		auto xiOf = [&](const char *n) {
			return Polynomial::variable(ext, ext->at(ext->require(n)).paired);
		};
		for (int i = 0; i < 2; ++i)
			for (int mu = 0; mu < 2; ++mu) {
				Polynomial v = f.P.bracket(Polynomial::variable(f.base, i),
				                           f.I.gens[mu]).withTable(ext);
				expected += v * Polynomial::variable(ext, ext->at(i).paired) *
				            xiOf(mu == 0 ? "y1" : "y2");
			}
		CHECK(b == expected);
	}
}

TEST_CASE("lichnerowicz matches the direct codifferential with sign +1") {
	auto base = makeTable({{"x1", 1}, {"x2", 1}, {"x3", 1}});
	PoissonStructure P(base, -1);
	P.setEntry(0, 1, parse("x3", base));
	P.setEntry(1, 2, parse("x1", base));
	P.setEntry(2, 0, parse("x2", base));
	auto mv = makeMultivectorTable(*base);
	ConstTablePtr mvc = mv;

	std::mt19937_64 rng(71);
	for (int it = 0; it < 150; ++it) {
		Polynomial X = randomPoly(mvc, rng, 4, 2).filter([&](const Monomial &m) {
			int arity = 0;
			for (auto &[v, e] : m.factors)
				if (mv->at(v).kind == VarKind::Xi)
					++arity;
			return arity <= 3;
		});
		Polynomial viaSchouten = lichnerowicz(P, X);
		Polynomial direct = poissonCodifferential(P, X);
		CHECK(viaSchouten == direct);
	}

	SUBCASE("arity 0 gives the Hamiltonian vector field") {
		Polynomial fBase = parse("x1*x2", mvc);
		Polynomial h = lichnerowicz(P, fBase);
		// h = sum {x_i, f} xi^i
		Polynomial expected(mvc);
		for (int i = 0; i < 3; ++i)
			expected += P.bracket(Polynomial::variable(base, i), parse("x1*x2", base))
			                .withTable(mvc) *
			            Polynomial::variable(mvc, mv->at(i).paired);
		CHECK(h == expected);
	}
	SUBCASE("delta squared via iterated bracket") {
		std::mt19937_64 rng2(73);
		for (int it = 0; it < 60; ++it) {
			Polynomial X = randomPoly(mvc, rng2, 3, 2);
			CHECK(lichnerowicz(P, lichnerowicz(P, X)).isZero());
		}
	}
}

TEST_CASE("euler x-degree") {
	Fixture f = twoMonomialFixture(2);
	Multiderivation pi1 = pi1Of(f.P, f.ext);
	CHECK(eulerXDegree(pi1).degree == 2);

	Polynomial c = parse("xi_x1*xi_x2", f.ext);
	CHECK(eulerXDegree(c).degree == 0);

	Polynomial mixed = parse("x1*xi_x1 + x1*x2*xi_x2", f.ext);
	EulerResult r = eulerXDegree(mixed);
	CHECK(!r.degree);
	CHECK(r.degreesSeen == std::vector<int>{1, 2});
}

TEST_CASE("window truncation matches full bracket") {
	Fixture f = twoMonomialFixture(3);
	std::mt19937_64 rng(79);
	for (int it = 0; it < 60; ++it) {
		Polynomial X = randomPoly(f.ext, rng, 4, 2);
		Polynomial Y = randomPoly(f.ext, rng, 4, 2);
		Polynomial full = schoutenBracket(X, Y);
		for (int p = 0; p <= 4; ++p)
			CHECK(schoutenBracket(X, Y, {p, p}) == full.fdComponent(p));
	}
}
