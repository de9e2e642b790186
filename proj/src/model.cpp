#include "clipopt/model.hpp"

#include <cmath>
#include <numeric>
#include <sstream>
#include <string>

namespace clipopt {

const char* ToString(ErrorCode code) {
  switch (code) {
    case ErrorCode::kInvalidInput: return "invalid input";
    case ErrorCode::kParse: return "parse error";
    case ErrorCode::kUnsupported: return "unsupported";
    case ErrorCode::kNumerical: return "numerical error";
    case ErrorCode::kLimitExceeded: return "limit exceeded";
    case ErrorCode::kInfeasible: return "infeasible";
    case ErrorCode::kIo: return "i/o error";
  }
  return "unknown";
}

const char* ToString(ParseErrorKind kind) {
  switch (kind) {
    case ParseErrorKind::kMalformed: return "malformed document";
    case ParseErrorKind::kMissingField: return "missing field";
    case ParseErrorKind::kWrongType: return "wrong type";
    case ParseErrorKind::kUnknownAtom: return "unknown atom";
    case ParseErrorKind::kDimensionMismatch: return "dimension mismatch";
    case ParseErrorKind::kBoundOrder: return "lower bound exceeds upper bound";
    case ParseErrorKind::kInvalidValue: return "invalid value";
  }
  return "unknown";
}

const char* ToString(Termination t) {
  switch (t) {
    case Termination::kToleranceMet: return "tolerance_met";
    case Termination::kMaxIters: return "max_iters";
    case Termination::kNodeLimit: return "node_limit";
    case Termination::kProvenOptimal: return "proven_optimal";
  }
  return "unknown";
}

namespace {

// log(1 + exp(s)) without overflow.
double Softplus(double s) {
  if (s > 0.0) return s + std::log1p(std::exp(-s));
  return std::log1p(std::exp(s));
}

double Sigmoid(double s) {
  if (s >= 0.0) return 1.0 / (1.0 + std::exp(-s));
  const double e = std::exp(s);
  return e / (1.0 + e);
}

}  // namespace

double LossAtom::Value(double u) const {
  switch (kind) {
    case LossKind::kSquare:
      return u * u;
    case LossKind::kHuber: {
      const double a = std::abs(u);
      return a <= delta ? u * u : delta * (2.0 * a - delta);
    }
    case LossKind::kLogistic:
      return Softplus(-label * u);
    case LossKind::kHingeSquare:
      return u > 0.0 ? u * u : 0.0;
  }
  return 0.0;
}

double LossAtom::Derivative(double u) const {
  switch (kind) {
    case LossKind::kSquare:
      return 2.0 * u;
    case LossKind::kHuber:
      if (std::abs(u) <= delta) return 2.0 * u;
      return u > 0.0 ? 2.0 * delta : -2.0 * delta;
    case LossKind::kLogistic:
      return -label * Sigmoid(-label * u);
    case LossKind::kHingeSquare:
      return u > 0.0 ? 2.0 * u : 0.0;
  }
  return 0.0;
}

double LossAtom::SecondDerivative(double u) const {
  switch (kind) {
    case LossKind::kSquare:
      return 2.0;
    case LossKind::kHuber:
      return std::abs(u) < delta ? 2.0 : 0.0;
    case LossKind::kLogistic: {
      const double s = Sigmoid(-label * u);
      return s * (1.0 - s);
    }
    case LossKind::kHingeSquare:
      return u > 0.0 ? 2.0 : 0.0;
  }
  return 0.0;
}

double LossAtom::CurvatureBound() const {
  return kind == LossKind::kLogistic ? 0.25 : 2.0;
}

double LossAtom::Recession(double u) const {
  switch (kind) {
    case LossKind::kSquare:
      return u == 0.0 ? 0.0 : kInf;
    case LossKind::kHuber:
      return 2.0 * delta * std::abs(u);
    case LossKind::kLogistic:
      return std::max(-label * u, 0.0);
    case LossKind::kHingeSquare:
      return u <= 0.0 ? 0.0 : kInf;
  }
  return kInf;
}

bool LossAtom::operator==(const LossAtom& other) const {
  if (kind != other.kind) return false;
  switch (kind) {
    case LossKind::kHuber: return delta == other.delta;
    case LossKind::kLogistic: return label == other.label;
    default: return true;
  }
}

double BaseObjective::SmoothValue(const Vector& x) const {
  double v = ridge * x.squaredNorm();
  for (const QuadTerm& q : quad_terms) {
    const double u = q.expr.Eval(x);
    v += q.c * u * u;
  }
  for (const HingeTerm& h : hinge_terms) {
    const double u = h.expr.Eval(x);
    if (u > 0.0) v += h.c * u * u;
  }
  return v;
}

bool BaseObjective::InBox(const Vector& x, double tol) const {
  for (Eigen::Index j = 0; j < x.size(); ++j) {
    if (x[j] < lower[j] - tol || x[j] > upper[j] + tol) return false;
  }
  return true;
}

bool BaseObjective::BoxIsCompact() const {
  return lower.allFinite() && upper.allFinite();
}

bool BaseObjective::operator==(const BaseObjective& other) const {
  return quad_terms == other.quad_terms && hinge_terms == other.hinge_terms &&
         ridge == other.ridge && lower == other.lower && upper == other.upper;
}

double SparseAtom::AccumulateGradient(const Vector& x, double scale, Vector& grad) const {
  const double s = Argument(x);
  const double d = scale * weight * loss.Derivative(s);
  if (d != 0.0) {
    for (std::size_t k = 0; k < idx.size(); ++k) grad[idx[k]] += d * coef[k];
  }
  return scale * weight * loss.Value(s);
}

namespace {

[[noreturn]] void Invalid(const std::string& msg) { throw Error(ErrorCode::kInvalidInput, msg); }

void CheckExpr(const AffineExpr& e, int n, const std::string& where) {
  if (e.a.size() != n) {
    std::ostringstream os;
    os << where << ": coefficient vector has length " << e.a.size() << ", expected " << n;
    Invalid(os.str());
  }
  if (!e.a.allFinite() || !std::isfinite(e.b)) Invalid(where + ": non-finite coefficient");
}

SparseAtom MakeAtom(const LossAtom& loss, double weight, const AffineExpr& e) {
  SparseAtom atom;
  atom.loss = loss;
  atom.weight = weight;
  atom.b = e.b;
  for (Eigen::Index j = 0; j < e.a.size(); ++j) {
    if (e.a[j] != 0.0) {
      atom.idx.push_back(static_cast<int>(j));
      atom.coef.push_back(e.a[j]);
    }
  }
  return atom;
}

}  // namespace

Problem::Problem(int n, BaseObjective base, std::vector<ClippedTerm> terms)
    : n_(n), base_(std::move(base)), terms_(std::move(terms)) {
  if (base_.lower.size() == 0) base_.lower = Vector::Constant(n_ > 0 ? n_ : 0, -kInf);
  if (base_.upper.size() == 0) base_.upper = Vector::Constant(n_ > 0 ? n_ : 0, kInf);
  Validate();
  Compile();
}

void Problem::Validate() const {
  if (n_ < 1) Invalid("dimension n must be at least 1");
  if (terms_.empty()) Invalid("problem needs at least one clipped term");
  if (!std::isfinite(base_.ridge) || base_.ridge < 0.0) Invalid("ridge must be finite and >= 0");
  if (base_.lower.size() != n_ || base_.upper.size() != n_) Invalid("box bounds must have length n");
  for (int j = 0; j < n_; ++j) {
    const double l = base_.lower[j], u = base_.upper[j];
    if (std::isnan(l) || std::isnan(u)) Invalid("box bound is NaN");
    if (l == kInf || u == -kInf) Invalid("box bound has the wrong infinite sign");
    if (l > u) Invalid("box lower bound exceeds upper bound at coordinate " + std::to_string(j));
  }
  for (std::size_t k = 0; k < base_.quad_terms.size(); ++k) {
    const auto& q = base_.quad_terms[k];
    const std::string where = "quad_terms[" + std::to_string(k) + "]";
    if (!std::isfinite(q.c) || q.c <= 0.0) Invalid(where + ": c must be positive");
    CheckExpr(q.expr, n_, where);
  }
  for (std::size_t k = 0; k < base_.hinge_terms.size(); ++k) {
    const auto& h = base_.hinge_terms[k];
    const std::string where = "hinge_terms[" + std::to_string(k) + "]";
    if (!std::isfinite(h.c) || h.c <= 0.0) Invalid(where + ": c must be positive");
    CheckExpr(h.expr, n_, where);
  }
  for (std::size_t i = 0; i < terms_.size(); ++i) {
    const auto& t = terms_[i];
    const std::string where = "terms[" + std::to_string(i) + "]";
    CheckExpr(t.expr, n_, where);
    if (!std::isfinite(t.weight) || t.weight <= 0.0) Invalid(where + ": weight must be positive");
    if (std::isnan(t.alpha) || t.alpha == -kInf) Invalid(where + ": alpha must be real or +inf");
    switch (t.loss.kind) {
      case LossKind::kSquare:
        break;
      case LossKind::kHuber:
        if (!std::isfinite(t.loss.delta) || t.loss.delta <= 0.0)
          Invalid(where + ": huber delta must be positive");
        break;
      case LossKind::kLogistic:
        if (t.loss.label != 1.0 && t.loss.label != -1.0)
          Invalid(where + ": logistic label must be +1 or -1");
        break;
      case LossKind::kHingeSquare:
        Invalid(where + ": hinge atoms are only allowed in the base objective");
    }
  }
}

void Problem::Compile() {
  base_atoms_.clear();
  term_atoms_.clear();
  for (const QuadTerm& q : base_.quad_terms) base_atoms_.push_back(MakeAtom(LossAtom::Square(), q.c, q.expr));
  for (const HingeTerm& h : base_.hinge_terms)
    base_atoms_.push_back(MakeAtom(LossAtom::HingeSquare(), h.c, h.expr));
  if (base_.ridge > 0.0) {
    for (int j = 0; j < n_; ++j) {
      SparseAtom a;
      a.loss = LossAtom::Square();
      a.weight = base_.ridge;
      a.idx = {j};
      a.coef = {1.0};
      base_atoms_.push_back(std::move(a));
    }
  }
  for (const ClippedTerm& t : terms_) term_atoms_.push_back(MakeAtom(t.loss, t.weight, t.expr));
}

Problem Problem::WithExtraRidge(double extra) const {
  BaseObjective b = base_;
  b.ridge += extra;
  return Problem(n_, std::move(b), terms_);
}

Problem Problem::Permuted(std::span<const int> order) const {
  if (static_cast<int>(order.size()) != num_terms()) Invalid("permutation has the wrong length");
  std::vector<ClippedTerm> t;
  t.reserve(order.size());
  for (int k : order) {
    if (k < 0 || k >= num_terms()) Invalid("permutation index out of range");
    t.push_back(terms_[static_cast<std::size_t>(k)]);
  }
  return Problem(n_, base_, std::move(t));
}

void CheckDimension(const Problem& p, const Vector& x, const char* what) {
  if (x.size() != p.dim()) {
    std::ostringstream os;
    os << what << " has length " << x.size() << ", expected " << p.dim();
    Invalid(os.str());
  }
}

TermValue EvalTerm(const ClippedTerm& term, const Vector& x) {
  if (x.size() != term.expr.a.size()) Invalid("point dimension does not match term");
  TermValue v;
  v.raw = term.Raw(x);
  v.clipped = std::min(v.raw, term.alpha);
  return v;
}

double EvalObjective(const Problem& p, const Vector& x) {
  CheckDimension(p, x, "x");
  if (!p.base().InBox(x)) return kInf;
  double v = p.base().SmoothValue(x);
  for (const ClippedTerm& t : p.terms()) v += std::min(t.Raw(x), t.alpha);
  return v;
}

Vector UnitVector(int n, int j, double value) {
  Vector e = Vector::Zero(n);
  e[j] = value;
  return e;
}

}  // namespace clipopt
