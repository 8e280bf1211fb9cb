#include "hpoisson/monomial.hpp"

#include <algorithm>

namespace hpoisson {

void recomputeDegrees(Monomial &m, const VariableTable &tab) {
	m.internalDegree = 0;
	m.cohomologicalDegree = 0;
	for (auto &[v, e] : m.factors) {
		m.internalDegree += e * tab.at(v).internalDegree;
		m.cohomologicalDegree += e * tab.at(v).cohomologicalDegree;
	}
}

std::pair<Monomial, int> normalizeWord(
    const std::vector<std::pair<int32_t, int32_t>> &word, const VariableTable &tab) {
	// Expand into single letters, tracking parity, then count odd-odd
	// inversions of the stable sort.
	struct Letter {
		int32_t var;
		bool odd;
	};
	std::vector<Letter> letters;
	for (auto &[v, e] : word) {
		if (e < 0)
			throw std::invalid_argument("negative exponent in monomial word");
		const VariableDescriptor &d = tab.at(v);
		if (d.odd() && e > 1)
			return {Monomial{}, 0};
		for (int k = 0; k < e; ++k)
			letters.push_back({v, d.odd()});
	}
	// Count inversions among odd letters (equal odd vars -> zero square).
	long sign = 1;
	for (size_t i = 0; i < letters.size(); ++i)
		for (size_t j = i + 1; j < letters.size(); ++j) {
			if (letters[i].odd && letters[j].odd) {
				if (letters[i].var == letters[j].var)
					return {Monomial{}, 0};
				if (letters[i].var > letters[j].var)
					sign = -sign;
			}
		}
	std::sort(letters.begin(), letters.end(),
	          [](const Letter &a, const Letter &b) { return a.var < b.var; });
	Monomial m;
	for (auto &l : letters) {
		if (!m.factors.empty() && m.factors.back().first == l.var)
			m.factors.back().second += 1;
		else
			m.factors.push_back({l.var, 1});
	}
	recomputeDegrees(m, tab);
	return {m, static_cast<int>(sign)};
}

std::pair<Monomial, int> mulMonomials(const Monomial &a, const Monomial &b,
                                      const VariableTable &tab) {
	// Odd letters of b each move left past the odd letters of a with larger
	// index; evens commute freely.
	long sign = 1;
	for (auto &[bv, be] : b.factors) {
		if (!tab.at(bv).odd())
			continue;
		for (auto &[av, ae] : a.factors) {
			if (!tab.at(av).odd())
				continue;
			if (av == bv)
				return {Monomial{}, 0};
			if (av > bv)
				sign = -sign;
		}
	}
	Monomial m;
	m.factors.reserve(a.factors.size() + b.factors.size());
	size_t i = 0, j = 0;
	while (i < a.factors.size() || j < b.factors.size()) {
		if (j == b.factors.size() || (i < a.factors.size() && a.factors[i].first < b.factors[j].first))
			m.factors.push_back(a.factors[i++]);
		else if (i == a.factors.size() || b.factors[j].first < a.factors[i].first)
			m.factors.push_back(b.factors[j++]);
		else {
			m.factors.push_back({a.factors[i].first, a.factors[i].second + b.factors[j].second});
			++i;
			++j;
		}
	}
	m.internalDegree = a.internalDegree + b.internalDegree;
	m.cohomologicalDegree = a.cohomologicalDegree + b.cohomologicalDegree;
	return {m, static_cast<int>(sign)};
}

int filtrationDegree(const Monomial &m, const VariableTable &tab) {
	int fd = 0;
	for (auto &[v, e] : m.factors)
		fd += e * tab.at(v).filtrationDegree();
	return fd;
}

int xDegree(const Monomial &m, const VariableTable &tab) {
	int d = 0;
	for (auto &[v, e] : m.factors)
		if (tab.at(v).kind == VarKind::X)
			d += e;
	return d;
}

} // namespace hpoisson
