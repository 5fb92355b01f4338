#pragma once

#include <cmath>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "drdp/graph.hpp"
#include "drdp/labeling.hpp"
#include "drdp/model.hpp"
#include "drdp/rational.hpp"

namespace drdp {

// The six double Roman domination models:
//   kDrdp1    x,y,z binary (f = 1, 2, 3)            3n rows
//   kDrdp2    p,q,r binary (f >= 1, >= 2, == 3)     4n rows
//   kDrdp1P   y,z binary, value 1 excluded          2n rows
//   kDrdp2P   q,r binary, value 1 excluded          2n rows
//   kDrdp1PP  kDrdp1P without the y + z <= 1 rows    n rows
//   kDrdp2PP  kDrdp2P with r continuous in [0, 1]   2n rows
enum class FormulationKind { kDrdp1, kDrdp2, kDrdp1P, kDrdp2P, kDrdp1PP, kDrdp2PP };

inline constexpr FormulationKind kAllFormulations[] = {
    FormulationKind::kDrdp1,  FormulationKind::kDrdp2,
    FormulationKind::kDrdp1P, FormulationKind::kDrdp2P,
    FormulationKind::kDrdp1PP, FormulationKind::kDrdp2PP};

// A formulation plus the optional valid-inequality rows. Only the two primed
// integer models accept `strengthen`.
struct FormulationSpec {
  FormulationKind kind = FormulationKind::kDrdp1P;
  bool strengthen = false;

  FormulationSpec() = default;
  FormulationSpec(FormulationKind k, bool s = false)  // NOLINT
      : kind(k), strengthen(s) {
    if (s && k != FormulationKind::kDrdp1P && k != FormulationKind::kDrdp2P) {
      throw std::invalid_argument(
          "strengthening is only defined for drdp1p and drdp2p");
    }
  }
  friend bool operator==(const FormulationSpec&, const FormulationSpec&) = default;
};

inline std::string to_string(FormulationKind k) {
  switch (k) {
    case FormulationKind::kDrdp1: return "drdp1";
    case FormulationKind::kDrdp2: return "drdp2";
    case FormulationKind::kDrdp1P: return "drdp1p";
    case FormulationKind::kDrdp2P: return "drdp2p";
    case FormulationKind::kDrdp1PP: return "drdp1pp";
    case FormulationKind::kDrdp2PP: return "drdp2pp";
  }
  return "?";
}

inline std::string to_string(const FormulationSpec& s) {
  return to_string(s.kind) + (s.strengthen ? "+" : "");
}

inline FormulationKind parse_formulation_kind(std::string_view text) {
  for (FormulationKind k : kAllFormulations) {
    if (to_string(k) == text) return k;
  }
  throw std::invalid_argument("unknown formulation '" + std::string(text) + "'");
}

inline bool is_primed(FormulationKind k) {
  return k != FormulationKind::kDrdp1 && k != FormulationKind::kDrdp2;
}

inline bool is_y_z_family(FormulationKind k) {
  return k == FormulationKind::kDrdp1P || k == FormulationKind::kDrdp1PP;
}

// Constants of the valid inequalities. L2 and U2 need a connected graph
// (U2 also n >= 3).
struct BoundSet {
  std::int64_t gamma_lower = 0;  // ceil(n / (1 + Delta)) <= gamma(G)
  std::int64_t L1 = 0;
  std::optional<std::int64_t> L2;
  std::int64_t L3 = 0;
  std::int64_t U1 = 0;
  std::optional<std::int64_t> U2;
};

namespace detail {
inline std::int64_t ceil_div(std::int64_t a, std::int64_t b) {
  return Rational(a, b).ceil();
}

// floor(3n (1 + ln(2(1 + delta) / 3)) / (1 + delta)); only meaningful when the
// graph has no isolated vertices.
inline std::int64_t log_upper_bound(int n, int delta) {
  double value = 3.0 * n * (1.0 + std::log(2.0 * (1.0 + delta) / 3.0)) /
                 (1.0 + delta);
  return static_cast<std::int64_t>(std::floor(value));
}
}  // namespace detail

// Returns nullopt for edgeless graphs, where the degree-based terms divide by
// zero or do not apply.
inline std::optional<BoundSet> compute_bounds(const GraphParams& p) {
  if (p.n < 1 || p.max_degree < 1) return std::nullopt;
  const std::int64_t n = p.n;
  const std::int64_t Delta = p.max_degree;
  const std::int64_t delta = p.min_degree;
  const bool cyclic = p.girth.has_value();
  // Acyclic graphs count as satisfying every "girth >= a" hypothesis.
  auto girth_at_least = [&](int a) { return !cyclic || *p.girth >= a; };

  BoundSet b;
  b.gamma_lower = detail::ceil_div(n, 1 + Delta);

  b.L1 = 2 * b.gamma_lower;
  if (cyclic) b.L1 = std::max(b.L1, detail::ceil_div(2 * *p.girth, 3));

  if (p.connected) {
    std::int64_t l2 = b.L1;
    l2 = std::max(l2, detail::ceil_div(*p.diameter + 2, 2));
    if (girth_at_least(5)) l2 = std::max(l2, 2 * delta);
    if (girth_at_least(6) && delta >= 2) l2 = std::max(l2, 4 * (delta - 1));
    if (girth_at_least(7) && delta >= 2) l2 = std::max(l2, 2 * Delta);
    b.L2 = l2;
  }

  b.L3 = detail::ceil_div(3 * n, Delta + 1);
  if (p.connected) b.L3 = std::max<std::int64_t>(b.L3, *p.diameter + 1);
  {
    Rational third = Rational(2 * n, Delta) +
                     Rational(Delta - 2, Delta) * Rational(n, 1 + Delta);
    b.L3 = std::max(b.L3, third.ceil());
  }

  auto upper = [&](std::int64_t degree_term) {
    std::int64_t u = 2 * n - 2 * Delta + 1;
    if (p.connected) u = std::min<std::int64_t>(u, 2 * n - *p.diameter);
    u = std::min(u, degree_term);
    if (delta >= 1) u = std::min(u, detail::log_upper_bound(p.n, p.min_degree));
    return u;
  };
  b.U1 = upper(delta >= 3 ? n : 3 * n);
  if (p.connected && n >= 3) b.U2 = upper(delta >= 3 ? n : (5 * n) / 4);
  return b;
}

// Variable layout: the first family occupies ids [0, n), the second [n, 2n),
// the third (DRDP-1 / DRDP-2 only) [2n, 3n).
struct FormulationLayout {
  int n = 0;
  FormulationKind kind{};
  VarId first(Vertex v) const { return v; }
  VarId second(Vertex v) const { return n + v; }
  VarId third(Vertex v) const { return 2 * n + v; }
};

inline IlpModel build_formulation(const Graph& g, const FormulationSpec& spec,
                                  const std::optional<BoundSet>& bounds) {
  if (spec.strengthen && !bounds) {
    throw std::invalid_argument("strengthened formulation requires bounds");
  }
  const int n = g.n();
  const FormulationLayout lay{n, spec.kind};
  const Rational half(1, 2);
  IlpModel model;
  model.formulation_tag = to_string(spec);
  model.graph_digest = graph_digest(g);

  auto family = [&](const char* prefix, Integrality kind) {
    for (Vertex v = 0; v < n; ++v) {
      model.add_variable(std::string(prefix) + "_" + std::to_string(v), kind);
    }
  };
  auto row = [](std::string name, Sense sense, Rational rhs) {
    LinearConstraint c;
    c.name = std::move(name);
    c.sense = sense;
    c.rhs = rhs;
    return c;
  };
  auto vname = [](const char* base, Vertex v) {
    return std::string(base) + "_" + std::to_string(v);
  };
  const Integrality bin = Integrality::kBinary;

  switch (spec.kind) {
    case FormulationKind::kDrdp1: {
      family("x", bin);
      family("y", bin);
      family("z", bin);
      for (Vertex v = 0; v < n; ++v) {
        model.set_objective(lay.first(v), 1);
        model.set_objective(lay.second(v), 2);
        model.set_objective(lay.third(v), 3);
      }
      for (Vertex v = 0; v < n; ++v) {
        auto c = row(vname("cover", v), Sense::kGreaterEqual, 1);
        c.terms = {{lay.first(v), 1}, {lay.second(v), 1}, {lay.third(v), 1}};
        for (Vertex u : g.neighbors(v)) c.terms.push_back({lay.second(u), half});
        for (Vertex u : g.neighbors(v)) c.terms.push_back({lay.third(u), 1});
        model.add_constraint(std::move(c));
      }
      for (Vertex v = 0; v < n; ++v) {
        auto c = row(vname("support", v), Sense::kGreaterEqual, 0);
        for (Vertex u : g.neighbors(v)) c.terms.push_back({lay.second(u), 1});
        for (Vertex u : g.neighbors(v)) c.terms.push_back({lay.third(u), 1});
        c.terms.push_back({lay.first(v), -1});
        model.add_constraint(std::move(c));
      }
      for (Vertex v = 0; v < n; ++v) {
        auto c = row(vname("one", v), Sense::kLessEqual, 1);
        c.terms = {{lay.first(v), 1}, {lay.second(v), 1}, {lay.third(v), 1}};
        model.add_constraint(std::move(c));
      }
      break;
    }
    case FormulationKind::kDrdp2: {
      family("p", bin);
      family("q", bin);
      family("r", bin);
      for (VarId id = 0; id < 3 * n; ++id) model.set_objective(id, 1);
      for (Vertex v = 0; v < n; ++v) {
        auto c = row(vname("cover", v), Sense::kGreaterEqual, 1);
        c.terms = {{lay.first(v), 1}};
        for (Vertex u : g.neighbors(v)) c.terms.push_back({lay.second(u), half});
        for (Vertex u : g.neighbors(v)) c.terms.push_back({lay.third(u), half});
        model.add_constraint(std::move(c));
      }
      for (Vertex v = 0; v < n; ++v) {
        auto c = row(vname("support", v), Sense::kGreaterEqual, 0);
        c.terms = {{lay.second(v), 1}};
        for (Vertex u : g.neighbors(v)) c.terms.push_back({lay.second(u), 1});
        c.terms.push_back({lay.first(v), -1});
        model.add_constraint(std::move(c));
      }
      for (Vertex v = 0; v < n; ++v) {
        auto c = row(vname("r_le_q", v), Sense::kLessEqual, 0);
        c.terms = {{lay.third(v), 1}, {lay.second(v), -1}};
        model.add_constraint(std::move(c));
      }
      for (Vertex v = 0; v < n; ++v) {
        auto c = row(vname("q_le_p", v), Sense::kLessEqual, 0);
        c.terms = {{lay.second(v), 1}, {lay.first(v), -1}};
        model.add_constraint(std::move(c));
      }
      break;
    }
    case FormulationKind::kDrdp1P:
    case FormulationKind::kDrdp1PP: {
      family("y", bin);
      family("z", bin);
      for (Vertex v = 0; v < n; ++v) {
        model.set_objective(lay.first(v), 2);
        model.set_objective(lay.second(v), 3);
      }
      for (Vertex v = 0; v < n; ++v) {
        auto c = row(vname("cover", v), Sense::kGreaterEqual, 1);
        c.terms = {{lay.first(v), 1}, {lay.second(v), 1}};
        for (Vertex u : g.neighbors(v)) c.terms.push_back({lay.first(u), half});
        for (Vertex u : g.neighbors(v)) c.terms.push_back({lay.second(u), 1});
        model.add_constraint(std::move(c));
      }
      if (spec.kind == FormulationKind::kDrdp1P) {
        for (Vertex v = 0; v < n; ++v) {
          auto c = row(vname("one", v), Sense::kLessEqual, 1);
          c.terms = {{lay.first(v), 1}, {lay.second(v), 1}};
          model.add_constraint(std::move(c));
        }
      }
      break;
    }
    case FormulationKind::kDrdp2P:
    case FormulationKind::kDrdp2PP: {
      family("q", bin);
      family("r", spec.kind == FormulationKind::kDrdp2P
                      ? bin
                      : Integrality::kContinuous);
      for (Vertex v = 0; v < n; ++v) {
        model.set_objective(lay.first(v), 2);
        model.set_objective(lay.second(v), 1);
      }
      for (Vertex v = 0; v < n; ++v) {
        auto c = row(vname("cover", v), Sense::kGreaterEqual, 1);
        c.terms = {{lay.first(v), 1}};
        for (Vertex u : g.neighbors(v)) c.terms.push_back({lay.first(u), half});
        for (Vertex u : g.neighbors(v)) c.terms.push_back({lay.second(u), half});
        model.add_constraint(std::move(c));
      }
      for (Vertex v = 0; v < n; ++v) {
        auto c = row(vname("r_le_q", v), Sense::kLessEqual, 0);
        c.terms = {{lay.second(v), 1}, {lay.first(v), -1}};
        model.add_constraint(std::move(c));
      }
      break;
    }
  }

  if (spec.strengthen) {
    const BoundSet& b = *bounds;
    // Aggregate rows over all vertices: `a` weights the first family, `c` the
    // second.
    auto aggregate = [&](const char* name, Rational a, Rational c, Sense sense,
                         std::int64_t rhs) {
      auto r = row(name, sense, rhs);
      for (Vertex v = 0; v < n; ++v) r.terms.push_back({lay.first(v), a});
      if (!c.is_zero()) {
        for (Vertex v = 0; v < n; ++v) r.terms.push_back({lay.second(v), c});
      }
      model.add_constraint(std::move(r));
    };
    const Sense ge = Sense::kGreaterEqual, le = Sense::kLessEqual;
    if (spec.kind == FormulationKind::kDrdp1P) {
      aggregate("vi_L1", 2, 2, ge, b.L1);
      if (b.L2) aggregate("vi_L2", 2, 2, ge, *b.L2);
      aggregate("vi_L3", 2, 3, ge, b.L3);
      aggregate("vi_U1", 2, 3, le, b.U1);
      if (b.U2) aggregate("vi_U2", 2, 3, le, *b.U2);
    } else {
      GraphParams params = compute_params(g);
      aggregate("vi_L1", 2, 0, ge, b.L1);
      if (b.L2) aggregate("vi_L2", 2, 1, ge, *b.L2);
      // The L3 row bounds the whole objective 2q + r. Bounding 2q alone cuts
      // off every optimum of a star (2q = 2 < L3 = 3 on K_{1,3}).
      if (params.connected && params.n >= 3) aggregate("vi_L3", 2, 1, ge, b.L3);
      aggregate("vi_U1", 2, 1, le, b.U1);
      if (b.U2) aggregate("vi_U2", 2, 1, le, *b.U2);
    }
  }
  return model;
}

// Thrown when an assignment cannot be turned into a labeling.
class CertificateError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline constexpr double kCertificateTol = 1e-7;

// Maps a labeling onto the variables of `kind`. Primed kinds need f(v) != 1.
inline Assignment encode_labeling(const Graph& g, FormulationKind kind,
                                  const Labeling& f) {
  const int n = g.n();
  const FormulationLayout lay{n, kind};
  if (f.size() != n) throw std::invalid_argument("labeling size mismatch");
  Assignment x(static_cast<std::size_t>(is_primed(kind) ? 2 * n : 3 * n), 0.0);
  for (Vertex v = 0; v < n; ++v) {
    int value = f[v];
    if (is_primed(kind) && value == 1) {
      throw std::invalid_argument("value 1 is not representable in " +
                                  to_string(kind));
    }
    switch (kind) {
      case FormulationKind::kDrdp1:
        if (value == 1) x[lay.first(v)] = 1;
        if (value == 2) x[lay.second(v)] = 1;
        if (value == 3) x[lay.third(v)] = 1;
        break;
      case FormulationKind::kDrdp2:
        x[lay.first(v)] = value >= 1;
        x[lay.second(v)] = value >= 2;
        x[lay.third(v)] = value == 3;
        break;
      case FormulationKind::kDrdp1P:
      case FormulationKind::kDrdp1PP:
        if (value == 2) x[lay.first(v)] = 1;
        if (value == 3) x[lay.second(v)] = 1;
        break;
      case FormulationKind::kDrdp2P:
      case FormulationKind::kDrdp2PP:
        x[lay.first(v)] = value >= 2;
        x[lay.second(v)] = value == 3;
        break;
    }
  }
  return x;
}

// Turns a feasible assignment of the model built for (g, kind) into a double
// Roman dominating function. For the y/z models a vertex with y = z = 1 keeps
// only z; for the q/r models r is rounded to 1 exactly when r >= 1, which
// keeps every cover row satisfied because r <= q.
inline Labeling extract_labeling(const Graph& g, FormulationKind kind,
                                 const Assignment& assignment) {
  const IlpModel model = build_formulation(g, FormulationSpec(kind), std::nullopt);
  if (auto bad = first_violation(model, assignment, kCertificateTol)) {
    std::string what =
        *bad < model.constraints().size()
            ? "row '" + model.constraints()[*bad].name + "'"
            : "bounds of '" +
                  model.variables()[*bad - model.constraints().size()].name + "'";
    throw CertificateError("assignment violates " + what);
  }
  for (const Variable& v : model.variables()) {
    if (v.integrality != Integrality::kBinary) continue;
    double value = assignment[v.id];
    if (std::abs(value - std::round(value)) > 1e-6) {
      throw CertificateError("binary variable '" + v.name + "' is fractional");
    }
  }
  const int n = g.n();
  const FormulationLayout lay{n, kind};
  auto bit = [&](VarId id) { return assignment[id] > 0.5; };
  Labeling f(std::vector<int>(static_cast<std::size_t>(n), 0));
  for (Vertex v = 0; v < n; ++v) {
    switch (kind) {
      case FormulationKind::kDrdp1:
        f.values[v] = bit(lay.first(v)) + 2 * bit(lay.second(v)) +
                      3 * bit(lay.third(v));
        break;
      case FormulationKind::kDrdp2:
        f.values[v] = bit(lay.first(v)) + bit(lay.second(v)) + bit(lay.third(v));
        break;
      case FormulationKind::kDrdp1P:
      case FormulationKind::kDrdp1PP:
        f.values[v] = bit(lay.second(v)) ? 3 : (bit(lay.first(v)) ? 2 : 0);
        break;
      case FormulationKind::kDrdp2P:
      case FormulationKind::kDrdp2PP: {
        bool r_set = assignment[lay.second(v)] >= 1.0 - 1e-6;
        f.values[v] = 2 * bit(lay.first(v)) + (r_set ? 1 : 0);
        break;
      }
    }
  }
  if (auto check = is_drdf(g, f); !check) {
    throw CertificateError("extracted labeling fails at vertex " +
                           std::to_string(*check.violation));
  }
  return f;
}

}  // namespace drdp
