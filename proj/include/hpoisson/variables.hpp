#pragma once

#include <map>
#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

namespace hpoisson {

/// Coordinate-style variables (level-0 originals and adjoined resolvent
/// variables) versus their dual derivation generators.
enum class VarKind : unsigned char { X, Xi };

struct VariableDescriptor {
	std::string name;
	VarKind kind = VarKind::X;
	int level = 0;           ///< resolvent level m; for Xi the partner's level
	int internalDegree = 0;  ///< >= 1 for X variables; negated partner degree for Xi
	int cohomologicalDegree = 0; ///< -level for X; level+1 for Xi
	int paired = -1;         ///< index of the partner variable, -1 if none

	bool odd() const { return (cohomologicalDegree % 2) != 0; }
	int filtrationDegree() const { return kind == VarKind::Xi ? level + 1 : 0; }
};

/// Ordered set of variables with a fixed total order: X variables first
/// (level ascending, then declaration order), then Xi variables in partner
/// order. Append-only; indices are stable, so polynomials built on a prefix
/// of the table stay valid as it grows.
class VariableTable {
public:
	int addCoordinate(const std::string &name, int internalDegree) {
		if (internalDegree < 1)
			throw std::invalid_argument("variable '" + name + "': internal degree must be >= 1");
		return add(name, VarKind::X, 0, internalDegree, 0);
	}

	int addAdjoined(const std::string &name, int level, int internalDegree) {
		if (level < 1)
			throw std::invalid_argument("adjoined variable level must be >= 1");
		if (internalDegree < 1)
			throw std::invalid_argument("adjoined variable internal degree must be >= 1");
		return add(name, VarKind::X, level, internalDegree, -level);
	}

	/// Adjoins the dual generator for X variable `partner`; name is derived.
	int addXi(int partner) {
		const VariableDescriptor &p = at(partner);
		if (p.kind != VarKind::X)
			throw std::invalid_argument("addXi: partner must be an X variable");
		int idx = add("xi_" + p.name, VarKind::Xi, p.level, -p.internalDegree, p.level + 1);
		vars_[idx].paired = partner;
		vars_[partner].paired = idx;
		return idx;
	}

	int size() const { return static_cast<int>(vars_.size()); }
	const VariableDescriptor &at(int i) const { return vars_.at(i); }
	const VariableDescriptor &operator[](int i) const { return vars_[i]; }

	int find(const std::string &name) const {
		auto it = byName_.find(name);
		return it == byName_.end() ? -1 : it->second;
	}
	int require(const std::string &name) const {
		int i = find(name);
		if (i < 0)
			throw std::invalid_argument("unknown variable '" + name + "'");
		return i;
	}

	int xiCount() const { return xiCount_; }
	bool hasXi() const { return xiCount_ > 0; }

	/// Indices of level-0 X variables (in table order).
	std::vector<int> coordinates() const {
		std::vector<int> out;
		for (int i = 0; i < size(); ++i)
			if (vars_[i].kind == VarKind::X && vars_[i].level == 0)
				out.push_back(i);
		return out;
	}

private:
	int add(const std::string &name, VarKind kind, int level, int ideg, int cdeg) {
		if (byName_.count(name))
			throw std::invalid_argument("duplicate variable name '" + name + "'");
		if (kind == VarKind::X) {
			if (xiCount_ > 0)
				throw std::logic_error("cannot add X variables after Xi variables");
			if (!vars_.empty() && vars_.back().level > level)
				throw std::logic_error("X variables must be added level-ascending");
		} else {
			++xiCount_;
		}
		VariableDescriptor d;
		d.name = name;
		d.kind = kind;
		d.level = level;
		d.internalDegree = ideg;
		d.cohomologicalDegree = cdeg;
		vars_.push_back(std::move(d));
		byName_.emplace(vars_.back().name, size() - 1);
		return size() - 1;
	}

	std::vector<VariableDescriptor> vars_;
	std::map<std::string, int> byName_;
	int xiCount_ = 0;
};

using TablePtr = std::shared_ptr<VariableTable>;
using ConstTablePtr = std::shared_ptr<const VariableTable>;

} // namespace hpoisson
