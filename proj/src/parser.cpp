#include "hpoisson/parser.hpp"

#include <cctype>

namespace hpoisson {

namespace {

class Lexer {
public:
	explicit Lexer(const std::string &s) : s_(s) {}

	void skipWs() {
		while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_])))
			++pos_;
	}
	bool eof() {
		skipWs();
		return pos_ >= s_.size();
	}
	char peek() {
		skipWs();
		return pos_ < s_.size() ? s_[pos_] : '\0';
	}
	char get() {
		skipWs();
		return s_[pos_++];
	}
	size_t pos() {
		skipWs();
		return pos_;
	}
	bool accept(char c) {
		if (peek() == c) {
			++pos_;
			return true;
		}
		return false;
	}

	std::string identifier() {
		skipWs();
		size_t start = pos_;
		while (pos_ < s_.size() &&
		       (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_'))
			++pos_;
		return s_.substr(start, pos_ - start);
	}

	std::string digits() {
		skipWs();
		size_t start = pos_;
		while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_])))
			++pos_;
		if (pos_ == start)
			throw ParseError("expected number", start);
		return s_.substr(start, pos_ - start);
	}

private:
	const std::string &s_;
	size_t pos_ = 0;
};

class Parser {
public:
	Parser(const std::string &s, ConstTablePtr tab)
	    : lex_(s), tab_(std::move(tab)) {}

	ParseResult run() {
		ParseResult r;
		r.value = expr();
		if (!lex_.eof())
			throw ParseError("unexpected trailing input", lex_.pos());
		r.warnings = std::move(warnings_);
		return r;
	}

private:
	Polynomial expr() {
		bool neg = lex_.accept('-');
		Polynomial acc = term();
		if (neg)
			acc = -acc;
		while (true) {
			if (lex_.accept('+'))
				acc += term();
			else if (lex_.accept('-'))
				acc -= term();
			else
				break;
		}
		return acc;
	}

	Polynomial term() {
		Polynomial acc = factor();
		while (lex_.accept('*'))
			acc = acc * factor();
		return acc;
	}

	Polynomial factor() {
		char c = lex_.peek();
		if (c == '(') {
			lex_.get();
			Polynomial p = expr();
			if (!lex_.accept(')'))
				throw ParseError("expected ')'", lex_.pos());
			return p;
		}
		if (std::isdigit(static_cast<unsigned char>(c))) {
			std::string num = lex_.digits();
			if (lex_.accept('/')) {
				std::string den = lex_.digits();
				return Polynomial(tab_, Rat(mpz_class(num), mpz_class(den)));
			}
			return Polynomial(tab_, Rat(mpz_class(num), mpz_class(1)));
		}
		if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
			size_t at = lex_.pos();
			std::string name = lex_.identifier();
			int var = tab_->find(name);
			if (var < 0)
				throw ParseError("unknown identifier '" + name + "'", at);
			long exp = 1;
			if (lex_.accept('^'))
				exp = std::stol(lex_.digits());
			if (tab_->at(var).odd() && exp > 1) {
				warnings_.push_back("odd variable '" + name + "' raised to power " +
				                    std::to_string(exp) + "; term is zero");
				return Polynomial(tab_);
			}
			return Polynomial::variable(tab_, var, static_cast<int>(exp));
		}
		throw ParseError("unexpected character", lex_.pos());
	}

	Lexer lex_;
	ConstTablePtr tab_;
	std::vector<std::string> warnings_;
};

} // namespace

ParseResult parsePolynomial(const std::string &text, ConstTablePtr tab) {
	return Parser(text, std::move(tab)).run();
}

Polynomial parse(const std::string &text, ConstTablePtr tab) {
	return parsePolynomial(text, std::move(tab)).value;
}

std::string serializeMonomial(const Monomial &m, const VariableTable &tab) {
	if (m.isConstant())
		return "1";
	std::string out;
	for (auto &[v, e] : m.factors) {
		if (!out.empty())
			out += "*";
		out += tab.at(v).name;
		if (e != 1)
			out += "^" + std::to_string(e);
	}
	return out;
}

std::string serialize(const Polynomial &p) {
	if (p.isZero())
		return "0";
	const VariableTable &tab = *p.table();
	std::string out;
	bool first = true;
	for (auto &[m, c] : p.terms()) {
		Rat a = c.abs();
		std::string body;
		if (m.isConstant())
			body = a.str();
		else if (a.isOne())
			body = serializeMonomial(m, tab);
		else
			body = a.str() + "*" + serializeMonomial(m, tab);
		if (first) {
			out += (c.sign() < 0 ? "-" : "") + body;
			first = false;
		} else {
			out += (c.sign() < 0 ? " - " : " + ") + body;
		}
	}
	return out;
}

} // namespace hpoisson
