#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "hpoisson/resolvent.hpp"
#include "testutil.hpp"

using namespace hpoisson;
using hptest::makeTable;

TEST_CASE("koszul complex level 1") {
	SUBCASE("two monomials") {
		auto tab = makeTable({{"x1", 1}, {"x2", 1}, {"x3", 1}, {"x4", 1}});
		IdealPresentation I =
		    IdealPresentation::fromPolys({parse("x1*x2", tab), parse("x3*x4", tab)});
		Resolvent R = koszulComplex(tab, I, {1, 8});
		REQUIRE(R.adjoined().size() == 2);
		CHECK(R.table()->at(R.adjoined()[0].varIndex).name == "y1");
		CHECK(R.table()->at(R.adjoined()[0].varIndex).odd());
		CHECK(serialize(R.adjoined()[0].differential) == "x1*x2");
		CHECK(R.checkDSquared().empty());
	}
	SUBCASE("single generator gives length-1 complex") {
		auto tab = makeTable({{"x1", 2}, {"x2", 3}, {"x3", 3}});
		IdealPresentation I = IdealPresentation::fromPolys({parse("x2*x3 - x1^3", tab)});
		Resolvent R = koszulComplex(tab, I, {1, 8});
		CHECK(R.adjoined().size() == 1);
		CHECK(R.checkDSquared().empty());
	}
}

TEST_CASE("differential is a graded derivation") {
	auto tab = makeTable({{"x1", 1}, {"x2", 1}});
	IdealPresentation I =
	    IdealPresentation::fromPolys({parse("x1^2", tab), parse("x1*x2", tab)});
	Resolvent R = koszulComplex(tab, I, {1, 8});
	const ConstTablePtr &rt = R.table();
	Polynomial y1 = Polynomial::variable(rt, rt->require("y1"));
	Polynomial y2 = Polynomial::variable(rt, rt->require("y2"));
	// d(y1 y2) = f1 y2 - y1 f2
	CHECK(R.differentialApply(y1 * y2) ==
	      parse("x1^2", rt) * y2 - y1 * parse("x1*x2", rt));
	CHECK(R.differentialApply(parse("x1", rt)).isZero());
}

TEST_CASE("extend_level on the two-monomial example") {
	auto tab = makeTable({{"x1", 1}, {"x2", 1}});
	IdealPresentation I =
	    IdealPresentation::fromPolys({parse("x1^2", tab), parse("x1*x2", tab)});
	Resolvent R = buildResolvent(tab, I, {7, 10});
	const ConstTablePtr &rt = R.table();

	SUBCASE("level 2 adjoins exactly one variable killing x1*y2 - x2*y1") {
		CHECK(R.bettiCount(2) == 1);
		const Resolvent::Adjoined *z = R.adjoinedFor(rt->require("z1"));
		REQUIRE(z);
		Polynomial expected = parse("x1*y2 - x2*y1", rt);
		CHECK((z->differential == expected || z->differential == -expected));
	}
	SUBCASE("level pattern matches the published minimal model") {
		CHECK(R.bettiCount(1) == 2);
		CHECK(R.bettiCount(2) == 1);
		CHECK(R.bettiCount(3) == 1);
		CHECK(R.bettiCount(4) == 2);
		CHECK(R.bettiCount(5) == 3);
		CHECK(R.bettiCount(6) == 4);
		CHECK(R.bettiCount(7) == 5);
	}
	SUBCASE("d squared vanishes and images are minimal") {
		CHECK(R.checkDSquared().empty());
		for (auto &a : R.adjoined())
			CHECK(a.minimal);
	}
	SUBCASE("homology is killed: no new classes remain below the cap") {
		// re-run the slice homology at level 2 degrees <= 8 and check that
		// cycles are boundaries now
		auto diff = [&](const Polynomial &p) { return R.differentialApply(p); };
		for (int d = 1; d <= 8; ++d) {
			SliceBasis cyc = enumerateBasis(*rt, -1, d, 7);
			if (cyc.dim() == 0)
				continue;
			SliceBasis tgt = enumerateBasis(*rt, 0, d, 7);
			SliceBasis bnd = enumerateBasis(*rt, -2, d, 7);
			auto cycles = kernelBasis(matrixOfMap(diff, cyc, tgt, rt));
			auto reps = homologyComplement(matrixOfMap(diff, bnd, cyc, rt), cycles);
			CHECK(reps.empty());
		}
	}
}

TEST_CASE("complete intersection adjoins nothing at level 2") {
	auto tab = makeTable({{"x1", 1}, {"x2", 1}, {"x3", 1}, {"x4", 1}});
	IdealPresentation I =
	    IdealPresentation::fromPolys({parse("x1*x2", tab), parse("x3*x4", tab)});
	Resolvent R = buildResolvent(tab, I, {4, 10});
	CHECK(R.bettiCount(2) == 0);
	CHECK(R.bettiCount(3) == 0);
	CHECK(R.bettiCount(4) == 0);
}

TEST_CASE("harmonic so3 Betti numbers") {
	auto tab = makeTable({{"x1", 1}, {"x2", 1}, {"x3", 1}});
	IdealPresentation I = IdealPresentation::fromPolys(
	    {parse("x1*x2", tab), parse("x1*x3", tab), parse("x2*x3", tab),
	     parse("x1^2 - x2^2", tab), parse("x1^2 - x3^2", tab)});
	Resolvent R = buildResolvent(tab, I, {3, 8});
	CHECK(R.bettiCount(1) == 5);
	CHECK(R.bettiCount(2) == 5);
	CHECK(R.bettiCount(3) == 10);
	CHECK(R.checkDSquared().empty());
	for (auto &a : R.adjoined())
		CHECK(a.minimal);
}

TEST_CASE("hilbert slices through the resolvent ideal") {
	auto tab = makeTable({{"x1", 1}, {"x2", 1}, {"x3", 1}});
	IdealPresentation I = IdealPresentation::fromPolys(
	    {parse("x1*x2", tab), parse("x1*x3", tab), parse("x2*x3", tab),
	     parse("x1^2 - x2^2", tab), parse("x1^2 - x3^2", tab)});
	IdealSlices slices(tab, I);
	CHECK(hilbertSlice(slices, 0) == 1);
	CHECK(hilbertSlice(slices, 1) == 3);
	CHECK(hilbertSlice(slices, 2) == 1);
	CHECK(hilbertSlice(slices, 3) == 0);
}

TEST_CASE("resolvent determinism") {
	auto tab = makeTable({{"x1", 1}, {"x2", 1}});
	IdealPresentation I =
	    IdealPresentation::fromPolys({parse("x1^2", tab), parse("x1*x2", tab)});
	Resolvent a = buildResolvent(tab, I, {5, 8});
	Resolvent b = buildResolvent(tab, I, {5, 8});
	REQUIRE(a.adjoined().size() == b.adjoined().size());
	for (size_t i = 0; i < a.adjoined().size(); ++i) {
		CHECK(a.table()->at(a.adjoined()[i].varIndex).name ==
		      b.table()->at(b.adjoined()[i].varIndex).name);
		CHECK(serialize(a.adjoined()[i].differential) ==
		      serialize(b.adjoined()[i].differential));
	}
}

TEST_CASE("resolvent from explicit data round-trips") {
	auto tab = makeTable({{"x1", 1}, {"x2", 1}});
	IdealPresentation I =
	    IdealPresentation::fromPolys({parse("x1^2", tab), parse("x1*x2", tab)});
	Resolvent R = buildResolvent(tab, I, {3, 8});
	std::vector<std::tuple<std::string, int, std::string>> data;
	for (auto &a : R.adjoined())
		data.push_back({R.table()->at(a.varIndex).name, a.level, serialize(a.differential)});
	Resolvent S = resolventFromData(tab, I, {3, 8}, data);
	REQUIRE(S.adjoined().size() == R.adjoined().size());
	for (size_t i = 0; i < R.adjoined().size(); ++i)
		CHECK(serialize(S.adjoined()[i].differential) == serialize(R.adjoined()[i].differential));

	SUBCASE("a broken differential is rejected") {
		data[2] = {std::get<0>(data[2]), std::get<1>(data[2]), "x1*y2"};
		CHECK_THROWS(resolventFromData(tab, I, {3, 8}, data));
	}
}

TEST_CASE("cotangent complex") {
	SUBCASE("conormal Jacobian for a complete intersection") {
		auto tab = makeTable({{"x1", 1}, {"x2", 1}});
		IdealPresentation I = IdealPresentation::fromPolys({parse("x1*x2", tab)});
		Resolvent R = buildResolvent(tab, I, {2, 8});
		CotangentComplex L = cotangentComplex(R);
		int y1 = R.table()->require("y1");
		REQUIRE(L.differential.count(y1));
		auto &row = L.differential.at(y1);
		REQUIRE(row.size() == 2);
		// d(dy1) = x2 dx1 + x1 dx2 mod I
		CHECK(row[0].first == R.table()->require("x1"));
		CHECK(serialize(row[0].second) == "x2");
		CHECK(serialize(row[1].second) == "x1");
	}
	SUBCASE("level-2 row keeps only coordinate coefficients") {
		auto tab = makeTable({{"x1", 1}, {"x2", 1}});
		IdealPresentation I =
		    IdealPresentation::fromPolys({parse("x1^2", tab), parse("x1*x2", tab)});
		Resolvent R = buildResolvent(tab, I, {2, 8});
		CotangentComplex L = cotangentComplex(R);
		const ConstTablePtr &rt = R.table();
		int z1 = rt->require("z1");
		REQUIRE(L.differential.count(z1));
		// dz1 = +-(x1 dy2 - x2 dy1): the odd-coefficient terms y dx die in A
		auto &row = L.differential.at(z1);
		REQUIRE(row.size() == 2);
		CHECK(rt->at(row[0].first).level == 1);
		CHECK(rt->at(row[1].first).level == 1);
	}
	SUBCASE("cotangent differential squares to zero mod I") {
		auto tab = makeTable({{"x1", 1}, {"x2", 1}, {"x3", 1}});
		IdealPresentation I = IdealPresentation::fromPolys(
		    {parse("x1*x2", tab), parse("x1*x3", tab), parse("x2*x3", tab),
		     parse("x1^2 - x2^2", tab), parse("x1^2 - x3^2", tab)});
		Resolvent R = buildResolvent(tab, I, {3, 6});
		CotangentComplex L = cotangentComplex(R);
		IdealSlices slices(R.table(), R.ideal());
		// compose: d(d(dX_j)) coefficient of dX_i must reduce to 0
		for (auto &[j, row] : L.differential) {
			std::map<int, Polynomial> acc;
			for (auto &[mid, c1] : row) {
				auto it = L.differential.find(mid);
				if (it == L.differential.end())
					continue;
				for (auto &[i, c2] : it->second) {
					auto [a, fresh] = acc.try_emplace(i, R.table());
					a->second += c1 * c2;
				}
			}
			for (auto &[i, c] : acc)
				CHECK(slices.reduce(c).isZero());
		}
	}
}
