#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <unordered_set>
#include <vector>

#include "drdp/rational.hpp"

namespace drdp {

enum class Integrality { kBinary, kContinuous };
enum class Sense { kGreaterEqual, kLessEqual, kEqual };

using VarId = int;

struct Variable {
  VarId id = 0;
  std::string name;
  Rational lower{0};
  Rational upper{1};
  Integrality integrality = Integrality::kBinary;

  friend bool operator==(const Variable&, const Variable&) = default;
};

struct Term {
  VarId var = 0;
  Rational coef{1};

  friend bool operator==(const Term&, const Term&) = default;
};

struct LinearConstraint {
  std::string name;
  std::vector<Term> terms;
  Sense sense = Sense::kGreaterEqual;
  Rational rhs{0};

  friend bool operator==(const LinearConstraint&,
                         const LinearConstraint&) = default;
};

// Minimization model over boxed variables. Objective terms are kept sorted by
// variable id; constraint terms keep their insertion order.
class IlpModel {
 public:
  std::string formulation_tag;
  std::string graph_digest;

  VarId add_variable(std::string name, Integrality kind, Rational lower = 0,
                     Rational upper = 1) {
    if (name_index_.count(name)) {
      throw std::invalid_argument("duplicate variable name '" + name + "'");
    }
    if (upper < lower) {
      throw std::invalid_argument("variable '" + name + "' has lower > upper");
    }
    if (kind == Integrality::kBinary && (lower != 0 || upper != 1)) {
      throw std::invalid_argument("binary variable '" + name +
                                  "' must have bounds [0, 1]");
    }
    VarId id = static_cast<VarId>(variables_.size());
    name_index_.emplace(name, id);
    variables_.push_back(Variable{id, std::move(name), lower, upper, kind});
    return id;
  }

  void set_objective(VarId var, Rational coef) {
    check_var(var);
    auto it = objective_.begin();
    while (it != objective_.end() && it->var < var) ++it;
    if (it != objective_.end() && it->var == var) {
      if (coef.is_zero()) {
        objective_.erase(it);
      } else {
        it->coef = coef;
      }
    } else if (!coef.is_zero()) {
      objective_.insert(it, Term{var, coef});
    }
  }

  std::size_t add_constraint(LinearConstraint row) {
    std::unordered_set<VarId> seen;
    for (const Term& t : row.terms) {
      check_var(t.var);
      if (t.coef.is_zero()) {
        throw std::invalid_argument("zero coefficient in row '" + row.name + "'");
      }
      if (!seen.insert(t.var).second) {
        throw std::invalid_argument("variable repeated in row '" + row.name +
                                    "'");
      }
    }
    constraints_.push_back(std::move(row));
    return constraints_.size() - 1;
  }

  const std::vector<Variable>& variables() const { return variables_; }
  const std::vector<LinearConstraint>& constraints() const {
    return constraints_;
  }
  const std::vector<Term>& objective() const { return objective_; }

  int num_variables() const { return static_cast<int>(variables_.size()); }
  int num_constraints() const { return static_cast<int>(constraints_.size()); }
  int count(Integrality kind) const {
    int c = 0;
    for (const auto& v : variables_) c += v.integrality == kind;
    return c;
  }

  const Variable& variable(VarId id) const { return variables_.at(id); }
  std::optional<VarId> find(const std::string& name) const {
    auto it = name_index_.find(name);
    if (it == name_index_.end()) return std::nullopt;
    return it->second;
  }

  // Changes bounds of an existing variable (used by the LP importer).
  void set_bounds(VarId id, Rational lower, Rational upper) {
    check_var(id);
    if (upper < lower) throw std::invalid_argument("lower > upper");
    variables_[id].lower = lower;
    variables_[id].upper = upper;
  }
  void set_integrality(VarId id, Integrality kind) {
    check_var(id);
    variables_[id].integrality = kind;
  }

  friend bool operator==(const IlpModel& a, const IlpModel& b) {
    return a.formulation_tag == b.formulation_tag &&
           a.graph_digest == b.graph_digest && a.variables_ == b.variables_ &&
           a.constraints_ == b.constraints_ && a.objective_ == b.objective_;
  }

 private:
  void check_var(VarId id) const {
    if (id < 0 || id >= static_cast<VarId>(variables_.size())) {
      throw std::out_of_range("unknown variable id " + std::to_string(id));
    }
  }

  std::vector<Variable> variables_;
  std::vector<LinearConstraint> constraints_;
  std::vector<Term> objective_;
  std::map<std::string, VarId> name_index_;
};

// Dense assignment indexed by variable id.
using Assignment = std::vector<double>;

inline double row_activity(const LinearConstraint& row, const Assignment& x) {
  double s = 0.0;
  for (const Term& t : row.terms) s += t.coef.to_double() * x.at(t.var);
  return s;
}

inline double objective_value(const IlpModel& model, const Assignment& x) {
  double s = 0.0;
  for (const Term& t : model.objective()) s += t.coef.to_double() * x.at(t.var);
  return s;
}

inline bool row_satisfied(const LinearConstraint& row, const Assignment& x,
                          double tol) {
  double a = row_activity(row, x);
  double b = row.rhs.to_double();
  switch (row.sense) {
    case Sense::kGreaterEqual: return a >= b - tol;
    case Sense::kLessEqual: return a <= b + tol;
    case Sense::kEqual: return a >= b - tol && a <= b + tol;
  }
  return false;
}

// Index of the first violated row or bound, or nullopt when x is feasible.
// Bound violations are reported as num_constraints() + variable id.
inline std::optional<std::size_t> first_violation(const IlpModel& model,
                                                  const Assignment& x,
                                                  double tol) {
  if (x.size() != model.variables().size()) {
    throw std::invalid_argument("assignment size does not match model");
  }
  for (std::size_t i = 0; i < model.constraints().size(); ++i) {
    if (!row_satisfied(model.constraints()[i], x, tol)) return i;
  }
  for (const Variable& v : model.variables()) {
    if (x[v.id] < v.lower.to_double() - tol ||
        x[v.id] > v.upper.to_double() + tol) {
      return model.constraints().size() + static_cast<std::size_t>(v.id);
    }
  }
  return std::nullopt;
}

}  // namespace drdp
