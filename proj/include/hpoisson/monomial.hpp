#pragma once

#include "hpoisson/variables.hpp"

#include <cstdint>
#include <utility>
#include <vector>

namespace hpoisson {

/// Canonical monomial: factors sorted by variable index, all exponents > 0,
/// odd-variable exponents exactly 1. Degrees are cached at construction.
struct Monomial {
	std::vector<std::pair<int32_t, int32_t>> factors; // (variable index, exponent)
	int internalDegree = 0;
	int cohomologicalDegree = 0;

	bool isConstant() const { return factors.empty(); }
	int totalExponent() const {
		int t = 0;
		for (auto &[v, e] : factors)
			t += e;
		return t;
	}
	int exponentOf(int var) const {
		for (auto &[v, e] : factors)
			if (v == var)
				return e;
		return 0;
	}

	bool operator==(const Monomial &o) const { return factors == o.factors; }
};

/// Serialization order: internal degree ascending, then exponent vectors
/// lexicographic (ascending) under the table order.
struct MonomialCmp {
	bool operator()(const Monomial &a, const Monomial &b) const {
		if (a.internalDegree != b.internalDegree)
			return a.internalDegree < b.internalDegree;
		size_t i = 0, j = 0;
		while (i < a.factors.size() && j < b.factors.size()) {
			auto [av, ae] = a.factors[i];
			auto [bv, be] = b.factors[j];
			if (av < bv)
				return false; // a has positive exponent where b has zero
			if (bv < av)
				return true;
			if (ae != be)
				return ae < be;
			++i;
			++j;
		}
		if (i < a.factors.size())
			return false;
		if (j < b.factors.size())
			return true;
		return false;
	}
};

/// Rebuilds the cached degrees from the table.
void recomputeDegrees(Monomial &m, const VariableTable &tab);

/// Sorts a word of (variable, exponent) letters into canonical form.
/// Returns the Koszul sign picked up by the adjacent transpositions, or 0 if
/// an odd variable repeats (in which case the monomial is meaningless).
std::pair<Monomial, int> normalizeWord(
    const std::vector<std::pair<int32_t, int32_t>> &word, const VariableTable &tab);

/// Product of two canonical monomials with Koszul sign; sign 0 if an odd
/// variable is shared.
std::pair<Monomial, int> mulMonomials(const Monomial &a, const Monomial &b,
                                      const VariableTable &tab);

/// Filtration degree (sum of exponent-weighted Xi filtration degrees).
int filtrationDegree(const Monomial &m, const VariableTable &tab);

/// Number of occurrences of X-kind variables (the Euler x-degree of a
/// monomial).
int xDegree(const Monomial &m, const VariableTable &tab);

} // namespace hpoisson
