#pragma once

#include <cctype>
#include <optional>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "drdp/model.hpp"

namespace drdp {

// Minimal LP-file dialect:
//
//   \ formulation: <tag>          (optional metadata comments)
//   \ graph: <digest>
//   Minimize
//    obj: <terms>
//   Subject To
//    <name>: <terms> <sense> <rhs>
//   Bounds
//    <lo> <= <var> <= <up>
//   Binary
//    <var>
//   End
//
// Terms are "[+|-] <coef> <var>", the coefficient omitted when it is 1.
// "Generals" is accepted on import for variables boxed in [0, 1].

class LpParseError : public std::runtime_error {
 public:
  LpParseError(int line, const std::string& what)
      : std::runtime_error("LP line " + std::to_string(line) + ": " + what),
        line_(line) {}
  int line() const { return line_; }

 private:
  int line_;
};

inline bool is_valid_lp_name(std::string_view name) {
  if (name.empty()) return false;
  auto head = static_cast<unsigned char>(name[0]);
  if (!(std::isalpha(head) || name[0] == '_')) return false;
  for (char c : name) {
    auto u = static_cast<unsigned char>(c);
    if (!(std::isalnum(u) || c == '_')) return false;
  }
  return true;
}

namespace detail {

inline void append_term(std::string& out, const Rational& coef,
                        const std::string& name, bool first) {
  bool negative = coef < 0;
  Rational mag = negative ? -coef : coef;
  if (first) {
    if (negative) out += "- ";
  } else {
    out += negative ? " - " : " + ";
  }
  if (mag != 1) {
    out += mag.to_decimal();
    out += ' ';
  }
  out += name;
}

inline const char* sense_text(Sense s) {
  switch (s) {
    case Sense::kGreaterEqual: return ">=";
    case Sense::kLessEqual: return "<=";
    case Sense::kEqual: return "=";
  }
  return "?";
}

}  // namespace detail

inline std::string export_lp(const IlpModel& model) {
  for (const Variable& v : model.variables()) {
    if (!is_valid_lp_name(v.name)) {
      throw std::invalid_argument("variable name '" + v.name +
                                  "' is not a valid LP identifier");
    }
  }
  if (model.num_variables() == 0) {
    throw std::invalid_argument("cannot export a model without variables");
  }
  std::string out;
  if (!model.formulation_tag.empty()) {
    out += "\\ formulation: " + model.formulation_tag + "\n";
  }
  if (!model.graph_digest.empty()) {
    out += "\\ graph: " + model.graph_digest + "\n";
  }

  // Every variable is listed in the objective (zero coefficients included) so
  // that the reader recovers ids in declaration order.
  out += "Minimize\n obj: ";
  std::vector<Rational> cost(model.variables().size(), Rational(0));
  for (const Term& t : model.objective()) cost[t.var] = t.coef;
  for (const Variable& v : model.variables()) {
    detail::append_term(out, cost[v.id], v.name, v.id == 0);
  }
  out += "\n";

  out += "Subject To\n";
  for (const LinearConstraint& row : model.constraints()) {
    if (!is_valid_lp_name(row.name)) {
      throw std::invalid_argument("row name '" + row.name +
                                  "' is not a valid LP identifier");
    }
    out += " " + row.name + ": ";
    if (row.terms.empty()) {
      detail::append_term(out, Rational(0), model.variables()[0].name, true);
    }
    for (std::size_t k = 0; k < row.terms.size(); ++k) {
      const Term& t = row.terms[k];
      detail::append_term(out, t.coef, model.variable(t.var).name, k == 0);
    }
    out += " ";
    out += detail::sense_text(row.sense);
    out += " ";
    out += row.rhs.to_decimal();
    out += "\n";
  }

  std::string bounds, binaries;
  for (const Variable& v : model.variables()) {
    if (v.integrality == Integrality::kBinary) {
      binaries += " " + v.name + "\n";
    } else {
      bounds += " " + v.lower.to_decimal() + " <= " + v.name +
                " <= " + v.upper.to_decimal() + "\n";
    }
  }
  if (!bounds.empty()) out += "Bounds\n" + bounds;
  if (!binaries.empty()) out += "Binary\n" + binaries;
  out += "End\n";
  return out;
}

namespace detail {

enum class LpSection { kNone, kObjective, kConstraints, kBounds, kBinary,
                       kGenerals, kEnd };

inline std::vector<std::string> split_ws(const std::string& line) {
  std::istringstream in(line);
  std::vector<std::string> out;
  std::string tok;
  while (in >> tok) out.push_back(tok);
  return out;
}

inline bool looks_numeric(const std::string& tok) {
  if (tok.empty()) return false;
  std::size_t i = (tok[0] == '+' || tok[0] == '-') ? 1 : 0;
  if (i >= tok.size()) return false;
  return std::isdigit(static_cast<unsigned char>(tok[i])) || tok[i] == '.';
}

inline std::optional<Sense> parse_sense(const std::string& tok) {
  if (tok == ">=" || tok == "=>") return Sense::kGreaterEqual;
  if (tok == "<=" || tok == "=<") return Sense::kLessEqual;
  if (tok == "=") return Sense::kEqual;
  return std::nullopt;
}

struct VarInfo {
  int first_line = 0;
  bool upper_set = false;
  bool binary = false;
  bool general = false;
  bool bounds_declared = false;
};

class LpReader {
 public:
  IlpModel read(const std::string& text) {
    std::istringstream in(text);
    std::string raw;
    int line_no = 0;
    LpSection section = LpSection::kNone;
    bool seen_objective = false, seen_constraints = false;
    while (std::getline(in, raw)) {
      ++line_no;
      if (!raw.empty() && raw.back() == '\r') raw.pop_back();
      auto first = raw.find_first_not_of(" \t");
      if (first == std::string::npos) continue;
      std::string line = raw.substr(first);
      if (line[0] == '\\') {
        read_comment(line);
        continue;
      }
      if (section == LpSection::kEnd) {
        throw LpParseError(line_no, "content after End");
      }
      if (auto next = section_keyword(line)) {
        if (*next <= section && !(section == LpSection::kBinary &&
                                  *next == LpSection::kGenerals)) {
          throw LpParseError(line_no, "section '" + line + "' out of order");
        }
        if (*next != LpSection::kObjective && !seen_objective) {
          throw LpParseError(line_no, "missing Minimize section");
        }
        if (*next == LpSection::kObjective) seen_objective = true;
        if (*next == LpSection::kConstraints) seen_constraints = true;
        flush_pending(section);
        section = *next;
        continue;
      }
      switch (section) {
        case LpSection::kNone:
          throw LpParseError(line_no, "expected Minimize");
        case LpSection::kObjective:
        case LpSection::kConstraints:
          accumulate(section, line, line_no);
          break;
        case LpSection::kBounds:
          read_bound(line, line_no);
          break;
        case LpSection::kBinary:
        case LpSection::kGenerals:
          for (const auto& name : split_ws(line)) {
            VarId id = known(name, line_no);
            if (section == LpSection::kBinary) {
              info_[id].binary = true;
            } else {
              info_[id].general = true;
            }
          }
          break;
        case LpSection::kEnd:
          break;
      }
    }
    if (section != LpSection::kEnd) {
      if (!pending_.empty()) {
        throw LpParseError(pending_line_, "incomplete constraint");
      }
      throw LpParseError(line_no, "missing End");
    }
    if (!seen_constraints) {
      throw LpParseError(line_no, "missing Subject To section");
    }
    finalize(line_no);
    return std::move(model_);
  }

 private:
  static std::optional<LpSection> section_keyword(const std::string& line) {
    std::string s = line;
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.pop_back();
    if (s == "Minimize") return LpSection::kObjective;
    if (s == "Subject To") return LpSection::kConstraints;
    if (s == "Bounds") return LpSection::kBounds;
    if (s == "Binary") return LpSection::kBinary;
    if (s == "Generals") return LpSection::kGenerals;
    if (s == "End") return LpSection::kEnd;
    return std::nullopt;
  }

  void read_comment(const std::string& line) {
    auto body = line.substr(1);
    auto take = [&](const std::string& key, std::string& dst) {
      auto pos = body.find(key);
      if (pos == std::string::npos) return false;
      auto value = body.substr(pos + key.size());
      auto s = value.find_first_not_of(' ');
      dst = s == std::string::npos ? "" : value.substr(s);
      while (!dst.empty() && dst.back() == ' ') dst.pop_back();
      return true;
    };
    if (!take("formulation:", model_.formulation_tag)) {
      take("graph:", model_.graph_digest);
    }
  }

  // Objective and constraint text may continue over several lines; a row is
  // complete once its sense and right-hand side have been read.
  void accumulate(LpSection section, const std::string& line, int line_no) {
    if (pending_.empty()) pending_line_ = line_no;
    for (auto& tok : split_ws(line)) pending_.push_back(std::move(tok));
    if (section == LpSection::kConstraints) {
      if (pending_.size() >= 2 && parse_sense(pending_[pending_.size() - 2])) {
        finish_constraint(line_no);
      }
    }
  }

  void flush_pending(LpSection leaving) {
    if (leaving == LpSection::kObjective) {
      if (!pending_.empty()) finish_objective(pending_line_);
      objective_done_ = true;
    } else if (!pending_.empty()) {
      throw LpParseError(pending_line_, "incomplete constraint");
    }
  }

  std::string take_label(int line_no) {
    if (pending_.empty()) throw LpParseError(line_no, "empty row");
    std::string head = pending_.front();
    auto colon = head.find(':');
    if (colon == std::string::npos) {
      throw LpParseError(pending_line_, "row without 'name:' label");
    }
    std::string label = head.substr(0, colon);
    std::string rest = head.substr(colon + 1);
    pending_.erase(pending_.begin());
    if (!rest.empty()) pending_.insert(pending_.begin(), rest);
    if (!is_valid_lp_name(label)) {
      throw LpParseError(pending_line_, "invalid row name '" + label + "'");
    }
    return label;
  }

  std::vector<Term> parse_terms(std::size_t begin, std::size_t end, int line) {
    std::vector<Term> terms;
    std::size_t i = begin;
    while (i < end) {
      Rational coef(1);
      if (pending_[i] == "+" || pending_[i] == "-") {
        if (pending_[i] == "-") coef = -coef;
        ++i;
      } else if (!terms.empty()) {
        throw LpParseError(line, "expected '+' or '-' before '" +
                                     pending_[i] + "'");
      }
      if (i < end && looks_numeric(pending_[i])) {
        try {
          coef = coef * Rational::parse(pending_[i]);
        } catch (const std::invalid_argument& e) {
          throw LpParseError(line, e.what());
        }
        ++i;
      }
      if (i >= end) throw LpParseError(line, "dangling coefficient");
      const std::string& name = pending_[i++];
      if (!is_valid_lp_name(name)) {
        throw LpParseError(line, "invalid variable name '" + name + "'");
      }
      terms.push_back(Term{intern(name, line), coef});
    }
    return terms;
  }

  void finish_objective(int line_no) {
    std::string label = take_label(line_no);
    (void)label;
    std::vector<Term> terms = parse_terms(0, pending_.size(), pending_line_);
    for (const Term& t : terms) {
      if (!t.coef.is_zero()) model_.set_objective(t.var, t.coef);
    }
    pending_.clear();
    objective_done_ = true;
  }

  void finish_constraint(int line_no) {
    (void)line_no;
    LinearConstraint row;
    row.name = take_label(pending_line_);
    if (pending_.size() < 2) throw LpParseError(pending_line_, "empty row");
    std::size_t sense_at = pending_.size() - 2;
    row.sense = *parse_sense(pending_[sense_at]);
    try {
      row.rhs = Rational::parse(pending_.back());
    } catch (const std::invalid_argument& e) {
      throw LpParseError(pending_line_, e.what());
    }
    for (const Term& t : parse_terms(0, sense_at, pending_line_)) {
      if (!t.coef.is_zero()) row.terms.push_back(t);
    }
    if (row_names_.count(row.name)) {
      throw LpParseError(pending_line_, "duplicate row name '" + row.name + "'");
    }
    row_names_.insert(row.name);
    try {
      model_.add_constraint(std::move(row));
    } catch (const std::invalid_argument& e) {
      throw LpParseError(pending_line_, e.what());
    }
    pending_.clear();
  }

  VarId intern(const std::string& name, int line) {
    if (auto id = model_.find(name)) return *id;
    VarId id = model_.add_variable(name, Integrality::kContinuous, 0, 0);
    info_.push_back(VarInfo{line});
    return id;
  }

  VarId known(const std::string& name, int line) {
    auto id = model_.find(name);
    if (!id) throw LpParseError(line, "unknown variable '" + name + "'");
    return *id;
  }

  void read_bound(const std::string& line, int line_no) {
    auto tok = split_ws(line);
    auto num = [&](const std::string& s) {
      try {
        return Rational::parse(s);
      } catch (const std::invalid_argument& e) {
        throw LpParseError(line_no, e.what());
      }
    };
    VarId id;
    Rational lo(0), up(0);
    bool set_lo = false, set_up = false;
    if (tok.size() == 5 && tok[1] == "<=" && tok[3] == "<=") {
      id = known(tok[2], line_no);
      lo = num(tok[0]);
      up = num(tok[4]);
      set_lo = set_up = true;
    } else if (tok.size() == 3 && parse_sense(tok[1])) {
      id = known(tok[0], line_no);
      Rational v = num(tok[2]);
      switch (*parse_sense(tok[1])) {
        case Sense::kGreaterEqual: lo = v; set_lo = true; break;
        case Sense::kLessEqual: up = v; set_up = true; break;
        case Sense::kEqual: lo = up = v; set_lo = set_up = true; break;
      }
    } else {
      throw LpParseError(line_no, "unsupported bound line '" + line + "'");
    }
    const Variable& v = model_.variable(id);
    Rational new_lo = set_lo ? lo : v.lower;
    Rational new_up = set_up ? up : (info_[id].upper_set ? v.upper : new_lo);
    if (new_up < new_lo) throw LpParseError(line_no, "lower bound above upper");
    model_.set_bounds(id, new_lo, new_up);
    info_[id].bounds_declared = true;
    if (set_up) info_[id].upper_set = true;
  }

  void finalize(int line_no) {
    (void)line_no;
    for (const Variable& v : model_.variables()) {
      VarInfo& inf = info_[v.id];
      bool integral = inf.binary || inf.general;
      if (integral) {
        if (inf.bounds_declared && (v.lower != 0 || v.upper != 1)) {
          throw LpParseError(inf.first_line,
                             "integer variable '" + v.name +
                                 "' has bounds other than [0, 1]");
        }
        if (inf.general && !inf.bounds_declared) {
          throw LpParseError(inf.first_line,
                             "general integer '" + v.name +
                                 "' is not boxed in [0, 1]");
        }
        model_.set_bounds(v.id, 0, 1);
        model_.set_integrality(v.id, Integrality::kBinary);
      } else if (!inf.upper_set) {
        throw LpParseError(inf.first_line,
                           "variable '" + v.name +
                               "' is only declared by usage and has no finite "
                               "upper bound");
      }
    }
  }

  IlpModel model_;
  std::set<std::string> row_names_;
  std::vector<VarInfo> info_;
  std::vector<std::string> pending_;
  int pending_line_ = 0;
  bool objective_done_ = false;
};

}  // namespace detail

inline IlpModel import_lp(const std::string& text) {
  return detail::LpReader().read(text);
}

}  // namespace drdp
