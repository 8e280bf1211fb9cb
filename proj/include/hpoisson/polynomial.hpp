#pragma once

#include "hpoisson/monomial.hpp"
#include "hpoisson/rational.hpp"

#include <functional>
#include <map>
#include <optional>

namespace hpoisson {

enum class DerivativeSide { Left, Right };

/// Optional filtration-degree window for products and brackets: terms whose
/// fd falls outside [lo, hi] are discarded.
struct FdWindow {
	int lo = 0;
	int hi = 1 << 28;
	bool contains(int fd) const { return fd >= lo && fd <= hi; }
};

/// Sparse element of the graded supercommutative polynomial algebra over a
/// shared VariableTable. No zero coefficients are stored; monomial keys are
/// canonical, so iteration order is the serialization order.
class Polynomial {
public:
	using TermMap = std::map<Monomial, Rat, MonomialCmp>;

	Polynomial() = default;
	explicit Polynomial(ConstTablePtr tab) : tab_(std::move(tab)) {}
	Polynomial(ConstTablePtr tab, const Rat &c) : tab_(std::move(tab)) {
		if (!c.isZero())
			terms_.emplace(Monomial{}, c);
	}

	static Polynomial variable(ConstTablePtr tab, int var, int exp = 1);
	static Polynomial term(ConstTablePtr tab, const Rat &c,
	                       const std::vector<std::pair<int32_t, int32_t>> &word);

	const ConstTablePtr &table() const { return tab_; }
	const TermMap &terms() const { return terms_; }
	bool isZero() const { return terms_.empty(); }
	size_t termCount() const { return terms_.size(); }

	void addTerm(const Monomial &m, const Rat &c);

	Polynomial operator-() const;
	Polynomial &operator+=(const Polynomial &o);
	Polynomial &operator-=(const Polynomial &o);
	friend Polynomial operator+(Polynomial a, const Polynomial &b) { return a += b; }
	friend Polynomial operator-(Polynomial a, const Polynomial &b) { return a -= b; }
	friend Polynomial operator*(const Polynomial &a, const Polynomial &b);
	Polynomial &operator*=(const Polynomial &o) { return *this = *this * o; }
	Polynomial &operator*=(const Rat &c);
	friend Polynomial operator*(Polynomial a, const Rat &c) { return a *= c; }
	friend Polynomial operator*(const Rat &c, Polynomial a) { return a *= c; }
	bool operator==(const Polynomial &o) const;

	/// Product keeping only result terms with fd inside the window.
	Polynomial mulWindowed(const Polynomial &o, const FdWindow &w) const;

	Polynomial derivative(int var, DerivativeSide side) const;

	/// Keeps only terms where `keep(monomial)` holds.
	Polynomial filter(const std::function<bool(const Monomial &)> &pred) const;
	/// Sets every variable with `kill(descriptor)` to zero, i.e. drops any
	/// term containing one.
	Polynomial killVariables(const std::function<bool(const VariableDescriptor &)> &kill) const;

	Rat coefficient(const Monomial &m) const {
		auto it = terms_.find(m);
		return it == terms_.end() ? Rat() : it->second;
	}
	Rat constantTerm() const { return coefficient(Monomial{}); }

	/// Uniform internal degree if homogeneous.
	std::optional<int> internalDegree() const;
	/// Uniform cohomological degree if homogeneous.
	std::optional<int> cohomologicalDegree() const;
	bool internallyHomogeneous(int d) const;

	/// The fd = p homogeneous component.
	Polynomial fdComponent(int p) const;
	/// The [lo, hi] fd window.
	Polynomial fdWindow(const FdWindow &w) const;
	int maxFd() const;
	int minFd() const;

	/// Eigenvalue of the Euler derivation counting X-variable occurrences,
	/// or nullopt if inhomogeneous.
	std::optional<int> eulerXDegree() const;
	std::vector<int> eulerXDegrees() const; ///< sorted distinct values

	/// Same underlying monomials viewed in a grown table (the prefix of the
	/// new table must describe the variables used here identically).
	Polynomial withTable(const ConstTablePtr &newTab) const;

private:
	void requireSameTable(const Polynomial &o) const;

	ConstTablePtr tab_;
	TermMap terms_;
};

} // namespace hpoisson
