#include "hpoisson/polynomial.hpp"

#include <algorithm>
#include <set>

namespace hpoisson {

Polynomial Polynomial::variable(ConstTablePtr tab, int var, int exp) {
	return term(std::move(tab), Rat(1), {{var, exp}});
}

Polynomial Polynomial::term(ConstTablePtr tab, const Rat &c,
                            const std::vector<std::pair<int32_t, int32_t>> &word) {
	Polynomial p(tab);
	if (c.isZero())
		return p;
	auto [m, sign] = normalizeWord(word, *tab);
	if (sign == 0)
		return p;
	p.terms_.emplace(m, sign > 0 ? c : -c);
	return p;
}

void Polynomial::addTerm(const Monomial &m, const Rat &c) {
	if (c.isZero())
		return;
	auto [it, inserted] = terms_.emplace(m, c);
	if (!inserted) {
		it->second += c;
		if (it->second.isZero())
			terms_.erase(it);
	}
}

Polynomial Polynomial::operator-() const {
	Polynomial out(tab_);
	for (auto &[m, c] : terms_)
		out.terms_.emplace(m, -c);
	return out;
}

void Polynomial::requireSameTable(const Polynomial &o) const {
	if (tab_ && o.tab_ && tab_ != o.tab_)
		throw std::invalid_argument("polynomial table mismatch");
}

Polynomial &Polynomial::operator+=(const Polynomial &o) {
	requireSameTable(o);
	if (!tab_)
		tab_ = o.tab_;
	for (auto &[m, c] : o.terms_)
		addTerm(m, c);
	return *this;
}

Polynomial &Polynomial::operator-=(const Polynomial &o) {
	requireSameTable(o);
	if (!tab_)
		tab_ = o.tab_;
	for (auto &[m, c] : o.terms_)
		addTerm(m, -c);
	return *this;
}

Polynomial &Polynomial::operator*=(const Rat &c) {
	if (c.isZero()) {
		terms_.clear();
		return *this;
	}
	for (auto &[m, v] : terms_)
		v *= c;
	return *this;
}

Polynomial operator*(const Polynomial &a, const Polynomial &b) {
	a.requireSameTable(b);
	Polynomial out(a.tab_ ? a.tab_ : b.tab_);
	const VariableTable &tab = *out.tab_;
	for (auto &[ma, ca] : a.terms_)
		for (auto &[mb, cb] : b.terms_) {
			auto [m, sign] = mulMonomials(ma, mb, tab);
			if (sign == 0)
				continue;
			Rat c = ca * cb;
			out.addTerm(m, sign > 0 ? c : -c);
		}
	return out;
}

Polynomial Polynomial::mulWindowed(const Polynomial &o, const FdWindow &w) const {
	requireSameTable(o);
	Polynomial out(tab_ ? tab_ : o.tab_);
	const VariableTable &tab = *out.tab_;
	std::vector<int> bFds;
	bFds.reserve(o.terms_.size());
	for (auto &[mb, cb] : o.terms_)
		bFds.push_back(filtrationDegree(mb, tab));
	for (auto &[ma, ca] : terms_) {
		int fda = filtrationDegree(ma, tab);
		size_t bi = 0;
		for (auto &[mb, cb] : o.terms_) {
			int fd = fda + bFds[bi++];
			if (!w.contains(fd))
				continue;
			auto [m, sign] = mulMonomials(ma, mb, tab);
			if (sign == 0)
				continue;
			Rat c = ca * cb;
			out.addTerm(m, sign > 0 ? c : -c);
		}
	}
	return out;
}

bool Polynomial::operator==(const Polynomial &o) const {
	if (terms_.size() != o.terms_.size())
		return false;
	auto it = terms_.begin();
	auto jt = o.terms_.begin();
	for (; it != terms_.end(); ++it, ++jt)
		if (!(it->first == jt->first) || it->second != jt->second)
			return false;
	return true;
}

Polynomial Polynomial::derivative(int var, DerivativeSide side) const {
	if (!tab_ || var < 0 || var >= tab_->size())
		throw std::invalid_argument("derivative: unknown variable");
	const VariableTable &tab = *tab_;
	const bool varOdd = tab.at(var).odd();
	Polynomial out(tab_);
	for (auto &[m, c] : terms_) {
		int e = m.exponentOf(var);
		if (e == 0)
			continue;
		Monomial r;
		r.factors.reserve(m.factors.size());
		int sign = 1;
		for (auto &[v, ex] : m.factors) {
			if (v == var) {
				if (ex > 1)
					r.factors.push_back({v, ex - 1});
				continue;
			}
			if (varOdd && tab.at(v).odd()) {
				bool before = v < var;
				if ((side == DerivativeSide::Left && before) ||
				    (side == DerivativeSide::Right && !before))
					sign = -sign;
			}
			r.factors.push_back({v, ex});
		}
		recomputeDegrees(r, tab);
		Rat coeff = c * Rat(static_cast<long>(varOdd ? 1 : e) * sign);
		out.addTerm(r, coeff);
	}
	return out;
}

Polynomial Polynomial::filter(const std::function<bool(const Monomial &)> &pred) const {
	Polynomial out(tab_);
	for (auto &[m, c] : terms_)
		if (pred(m))
			out.terms_.emplace(m, c);
	return out;
}

Polynomial Polynomial::killVariables(
    const std::function<bool(const VariableDescriptor &)> &kill) const {
	return filter([&](const Monomial &m) {
		for (auto &[v, e] : m.factors)
			if (kill(tab_->at(v)))
				return false;
		return true;
	});
}

std::optional<int> Polynomial::internalDegree() const {
	std::optional<int> d;
	for (auto &[m, c] : terms_) {
		if (d && *d != m.internalDegree)
			return std::nullopt;
		d = m.internalDegree;
	}
	return d;
}

std::optional<int> Polynomial::cohomologicalDegree() const {
	std::optional<int> d;
	for (auto &[m, c] : terms_) {
		if (d && *d != m.cohomologicalDegree)
			return std::nullopt;
		d = m.cohomologicalDegree;
	}
	return d;
}

bool Polynomial::internallyHomogeneous(int d) const {
	for (auto &[m, c] : terms_)
		if (m.internalDegree != d)
			return false;
	return true;
}

Polynomial Polynomial::fdComponent(int p) const {
	return filter([&](const Monomial &m) { return filtrationDegree(m, *tab_) == p; });
}

Polynomial Polynomial::fdWindow(const FdWindow &w) const {
	return filter([&](const Monomial &m) { return w.contains(filtrationDegree(m, *tab_)); });
}

int Polynomial::maxFd() const {
	int fd = 0;
	for (auto &[m, c] : terms_)
		fd = std::max(fd, filtrationDegree(m, *tab_));
	return fd;
}

int Polynomial::minFd() const {
	int fd = 1 << 28;
	for (auto &[m, c] : terms_)
		fd = std::min(fd, filtrationDegree(m, *tab_));
	return terms_.empty() ? 0 : fd;
}

std::optional<int> Polynomial::eulerXDegree() const {
	std::optional<int> d;
	for (auto &[m, c] : terms_) {
		int k = xDegree(m, *tab_);
		if (d && *d != k)
			return std::nullopt;
		d = k;
	}
	return d;
}

std::vector<int> Polynomial::eulerXDegrees() const {
	std::set<int> s;
	for (auto &[m, c] : terms_)
		s.insert(xDegree(m, *tab_));
	return {s.begin(), s.end()};
}

Polynomial Polynomial::withTable(const ConstTablePtr &newTab) const {
	Polynomial out(newTab);
	for (auto &[m, c] : terms_) {
		for (auto &[v, e] : m.factors) {
			if (v >= newTab->size())
				throw std::invalid_argument("withTable: variable out of range");
			const VariableDescriptor &a = tab_->at(v);
			const VariableDescriptor &b = newTab->at(v);
			if (a.name != b.name || a.internalDegree != b.internalDegree ||
			    a.cohomologicalDegree != b.cohomologicalDegree)
				throw std::invalid_argument("withTable: incompatible tables");
		}
		out.terms_.emplace(m, c);
	}
	return out;
}

} // namespace hpoisson
