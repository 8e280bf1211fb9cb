#pragma once

#include <gmpxx.h>
#include <stdexcept>
#include <string>

namespace hpoisson {

/// Exact rational scalar. Always in lowest terms with positive denominator;
/// zero is 0/1. Backed by GMP.
class Rat {
public:
	Rat() : v_(0) {}
	Rat(long n) : v_(n) {}
	Rat(long n, long d) : v_(n, d) {
		if (d == 0)
			throw std::invalid_argument("Rat: zero denominator");
		v_.canonicalize();
	}
	explicit Rat(const mpq_class &v) : v_(v) { v_.canonicalize(); }
	explicit Rat(const mpz_class &n) : v_(n) {}
	Rat(const mpz_class &n, const mpz_class &d) : v_(n, d) {
		if (d == 0)
			throw std::invalid_argument("Rat: zero denominator");
		v_.canonicalize();
	}

	/// Parses "p" or "p/q" with optional leading '-'.
	static Rat parse(const std::string &s) {
		auto slash = s.find('/');
		if (slash == std::string::npos)
			return Rat(mpz_class(s), mpz_class(1));
		return Rat(mpz_class(s.substr(0, slash)), mpz_class(s.substr(slash + 1)));
	}

	bool isZero() const { return sgn(v_) == 0; }
	bool isOne() const { return v_ == 1; }
	int sign() const { return sgn(v_); }
	mpz_class num() const { return v_.get_num(); }
	mpz_class den() const { return v_.get_den(); }

	Rat operator-() const { return Rat(mpq_class(-v_)); }
	Rat &operator+=(const Rat &o) { v_ += o.v_; return *this; }
	Rat &operator-=(const Rat &o) { v_ -= o.v_; return *this; }
	Rat &operator*=(const Rat &o) { v_ *= o.v_; return *this; }
	Rat &operator/=(const Rat &o) {
		if (o.isZero())
			throw std::invalid_argument("Rat: division by zero");
		v_ /= o.v_;
		return *this;
	}
	friend Rat operator+(Rat a, const Rat &b) { return a += b; }
	friend Rat operator-(Rat a, const Rat &b) { return a -= b; }
	friend Rat operator*(Rat a, const Rat &b) { return a *= b; }
	friend Rat operator/(Rat a, const Rat &b) { return a /= b; }
	friend bool operator==(const Rat &a, const Rat &b) { return a.v_ == b.v_; }
	friend bool operator!=(const Rat &a, const Rat &b) { return a.v_ != b.v_; }
	friend bool operator<(const Rat &a, const Rat &b) { return a.v_ < b.v_; }

	Rat abs() const { return Rat(mpq_class(::abs(v_))); }

	/// "p" or "p/q", reduced.
	std::string str() const {
		if (v_.get_den() == 1)
			return v_.get_num().get_str();
		return v_.get_num().get_str() + "/" + v_.get_den().get_str();
	}

private:
	mpq_class v_;
};

} // namespace hpoisson
