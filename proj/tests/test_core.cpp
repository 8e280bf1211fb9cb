#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "testutil.hpp"

using namespace hpoisson;
using hptest::makeTable;
using hptest::randomHomogeneous;
using hptest::randomPoly;

namespace {

TablePtr gradedTable() {
	// two even coordinates, two odd level-1 variables, one even level-2
	auto tab = std::make_shared<VariableTable>();
	tab->addCoordinate("x1", 1);
	tab->addCoordinate("x2", 1);
	tab->addAdjoined("y1", 1, 2);
	tab->addAdjoined("y2", 1, 2);
	tab->addAdjoined("z1", 2, 3);
	return tab;
}

} // namespace

TEST_CASE("rationals stay canonical") {
	CHECK(Rat(2, 6) == Rat(1, 3));
	CHECK(Rat(2, -6) == Rat(-1, 3));
	CHECK(Rat(0, 5).str() == "0");
	CHECK((Rat(1, 2) + Rat(1, 3)).str() == "5/6");
	CHECK(Rat::parse("-7/14").str() == "-1/2");
	CHECK_THROWS(Rat(1, 0));
}

TEST_CASE("normalize_monomial Koszul signs") {
	auto tab = gradedTable();
	int y1 = tab->require("y1"), y2 = tab->require("y2");
	int x1 = tab->require("x1"), x2 = tab->require("x2");

	SUBCASE("one odd transposition") {
		auto [m, sign] = normalizeWord({{y2, 1}, {y1, 1}}, *tab);
		CHECK(sign == -1);
		CHECK(m.factors == std::vector<std::pair<int32_t, int32_t>>{{y1, 1}, {y2, 1}});
	}
	SUBCASE("odd square vanishes") {
		auto [m, sign] = normalizeWord({{y1, 1}, {y1, 1}}, *tab);
		CHECK(sign == 0);
	}
	SUBCASE("even variables commute") {
		auto [m, sign] = normalizeWord({{x2, 1}, {x1, 1}}, *tab);
		CHECK(sign == 1);
		CHECK(m.factors == std::vector<std::pair<int32_t, int32_t>>{{x1, 1}, {x2, 1}});
	}
	SUBCASE("idempotent on canonical input") {
		auto [m, sign] = normalizeWord({{x1, 2}, {y1, 1}, {y2, 1}}, *tab);
		CHECK(sign == 1);
		auto [m2, sign2] = normalizeWord(m.factors, *tab);
		CHECK(sign2 == 1);
		CHECK(m2 == m);
	}
}

TEST_CASE("supercommutative product") {
	auto tab = gradedTable();
	auto y1 = Polynomial::variable(tab, tab->require("y1"));
	auto y2 = Polynomial::variable(tab, tab->require("y2"));
	auto x1 = Polynomial::variable(tab, tab->require("x1"));
	auto x2 = Polynomial::variable(tab, tab->require("x2"));

	CHECK(y1 * y2 == -(y2 * y1));
	CHECK((x1 + x2) * (x1 - x2) == x1 * x1 - x2 * x2);
	CHECK((y1 * (x1 * y1)).isZero());

	// sign law on random homogeneous pairs
	std::mt19937_64 rng(7);
	for (int it = 0; it < 200; ++it) {
		Polynomial p = randomHomogeneous(tab, rng);
		Polynomial q = randomHomogeneous(tab, rng);
		if (p.isZero() || q.isZero())
			continue;
		int dp = *p.cohomologicalDegree(), dq = *q.cohomologicalDegree();
		Polynomial rhs = q * p;
		if ((dp * dq) % 2 != 0)
			rhs = -rhs;
		CHECK(p * q == rhs);
	}
}

TEST_CASE("graded derivatives") {
	auto tab = gradedTable();
	int y1 = tab->require("y1"), y2 = tab->require("y2"), x1 = tab->require("x1");
	auto Y1 = Polynomial::variable(tab, y1);
	auto Y2 = Polynomial::variable(tab, y2);

	SUBCASE("left derivative with one odd prefix") {
		// d/dy2 (y1 y2) from the left: y1 is an odd prefix -> sign -1
		CHECK((Y1 * Y2).derivative(y2, DerivativeSide::Left) == -Y1);
	}
	SUBCASE("even power rule") {
		auto p = parse("x1^3", tab);
		CHECK(serialize(p.derivative(x1, DerivativeSide::Left)) == "3*x1^2");
	}
	SUBCASE("right derivative with empty suffix") {
		CHECK((Y1 * Y2).derivative(y2, DerivativeSide::Right) == Y1);
	}
	SUBCASE("sides agree on even polynomials") {
		std::mt19937_64 rng(11);
		auto even = makeTable({{"a", 1}, {"b", 2}, {"c", 1}});
		for (int it = 0; it < 100; ++it) {
			Polynomial p = randomPoly(even, rng, 5, 3);
			for (int v = 0; v < even->size(); ++v)
				CHECK(p.derivative(v, DerivativeSide::Left) ==
				      p.derivative(v, DerivativeSide::Right));
		}
	}
	SUBCASE("graded Leibniz for the left derivative") {
		std::mt19937_64 rng(13);
		for (int it = 0; it < 150; ++it) {
			Polynomial p = randomHomogeneous(tab, rng);
			Polynomial q = randomPoly(tab, rng);
			if (p.isZero())
				continue;
			int dp = *p.cohomologicalDegree();
			for (int v : {y1, y2, x1}) {
				int dv = tab->at(v).cohomologicalDegree;
				Polynomial lhs = (p * q).derivative(v, DerivativeSide::Left);
				Polynomial rhs = p.derivative(v, DerivativeSide::Left) * q;
				Polynomial second = p * q.derivative(v, DerivativeSide::Left);
				if ((dv * dp) % 2 != 0)
					rhs -= second;
				else
					rhs += second;
				CHECK(lhs == rhs);
			}
		}
	}
}

TEST_CASE("parser handles the core grammar") {
	auto tab = makeTable({{"x1", 1}, {"x2", 2}, {"x3", 2}});
	SUBCASE("Kleinian-style relation") {
		auto p = parse("x2*x3 - x1^4", tab);
		CHECK(p.termCount() == 2);
		CHECK(p.internallyHomogeneous(4));
	}
	SUBCASE("zero literal") { CHECK(parse("0", tab).isZero()); }
	SUBCASE("rational coefficient") {
		auto p = parse("1/2*x1^2", tab);
		CHECK(serialize(p) == "1/2*x1^2");
	}
	SUBCASE("parenthesized expressions") {
		CHECK(parse("(x1 + x2)*(x1 - x2)", tab) == parse("x1^2 - x2^2", tab));
	}
	SUBCASE("syntax error carries position") {
		CHECK_THROWS_AS(parse("x1 + ", tab), ParseError);
		CHECK_THROWS_AS(parse("x9", tab), ParseError);
		CHECK_THROWS_AS(parse("x1 x2", tab), ParseError);
	}
	SUBCASE("odd powers normalize to zero with a warning") {
		auto odd = std::make_shared<VariableTable>();
		odd->addCoordinate("x1", 1);
		odd->addAdjoined("y1", 1, 2);
		auto r = parsePolynomial("y1^2 + x1", odd);
		CHECK(r.value == parse("x1", odd));
		CHECK(r.warnings.size() == 1);
	}
}

TEST_CASE("serialization is canonical and round-trips") {
	auto tab = gradedTable();
	CHECK(serialize(Polynomial(tab)) == "0");
	CHECK(serialize(parse("x2*x1", tab)) == "x1*x2");

	std::mt19937_64 rng(17);
	for (int it = 0; it < 100; ++it) {
		Polynomial p = randomPoly(tab, rng, 6, 3);
		CHECK(parse(serialize(p), tab) == p);
	}
}

TEST_CASE("serialization is injective on distinct polynomials") {
	auto tab = gradedTable();
	std::mt19937_64 rng(19);
	for (int it = 0; it < 60; ++it) {
		Polynomial p = randomPoly(tab, rng), q = randomPoly(tab, rng);
		if (p == q)
			CHECK(serialize(p) == serialize(q));
		else
			CHECK(serialize(p) != serialize(q));
	}
}
