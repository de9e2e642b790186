#include "clipopt/perspective.hpp"

#include <algorithm>
#include <array>
#include <chrono>
#include <cmath>
#include <string>

#include <Eigen/Cholesky>
#include <Eigen/Core>

namespace clipopt {

namespace {

using Clock = std::chrono::steady_clock;
using Matrix = Eigen::MatrixXd;

void CheckT(double t) {
  if (!(t >= 0.0)) throw Error(ErrorCode::kInvalidInput, "perspective needs t >= 0");
}

bool WithinSlack(double v, double bound, bool lower) {
  const double slack = kBoxTolerance * std::max(1.0, std::abs(bound));
  return lower ? v >= bound - slack : v <= bound + slack;
}

}  // namespace

double PerspectiveEval(const LossAtom& loss, double weight, const AffineExpr& expr, const Vector& v,
                       double t) {
  CheckT(t);
  if (v.size() != expr.a.size()) throw Error(ErrorCode::kInvalidInput, "perspective point has the wrong length");
  const double av = expr.a.dot(v);
  if (t == 0.0) return weight * loss.Recession(av);
  return weight * t * loss.Value((av + expr.b * t) / t);
}

double PerspectiveEval(const ClippedTerm& term, const Vector& v, double t) {
  return PerspectiveEval(term.loss, term.weight, term.expr, v, t);
}

double BoxPerspective(const Vector& lower, const Vector& upper, const Vector& v, double t) {
  CheckT(t);
  if (v.size() != lower.size() || v.size() != upper.size()) {
    throw Error(ErrorCode::kInvalidInput, "box perspective point has the wrong length");
  }
  for (Eigen::Index j = 0; j < v.size(); ++j) {
    if (std::isfinite(lower[j]) && !WithinSlack(v[j], t * lower[j], true)) return kInf;
    if (std::isfinite(upper[j]) && !WithinSlack(v[j], t * upper[j], false)) return kInf;
  }
  return 0.0;
}

double PerspectiveEval(const BaseObjective& base, const Vector& v, double t) {
  if (BoxPerspective(base.lower, base.upper, v, t) == kInf) return kInf;
  if (t == 1.0) return base.SmoothValue(v);
  double val = 0.0;
  for (const QuadTerm& q : base.quad_terms) val += PerspectiveEval(LossAtom::Square(), q.c, q.expr, v, t);
  for (const HingeTerm& h : base.hinge_terms) {
    val += PerspectiveEval(LossAtom::HingeSquare(), h.c, h.expr, v, t);
  }
  if (base.ridge > 0.0) {
    const double sq = v.squaredNorm();
    if (t == 0.0) {
      val += sq == 0.0 ? 0.0 : kInf;
    } else {
      val += base.ridge * sq / t;
    }
  }
  return val;
}

double RelaxationObjective(const Problem& p, const PerspectiveVars& v) {
  const int m = p.num_terms();
  CheckDimension(p, v.x, "x");
  if (static_cast<int>(v.z.size()) != m || v.t.size() != m) {
    throw Error(ErrorCode::kInvalidInput, "relaxation variables need one z_i and t_i per term");
  }
  double total = 0.0;
  for (int i = 0; i < m; ++i) {
    const double t = v.t[i];
    if (!(t >= 0.0 && t <= 1.0)) throw Error(ErrorCode::kInvalidInput, "t must lie in [0, 1]");
    const Vector& z = v.z[static_cast<std::size_t>(i)];
    CheckDimension(p, z, "z_i");
    const ClippedTerm& term = p.term(i);
    total += PerspectiveEval(term, z, t);
    if (t < 1.0) total += (1.0 - t) * term.alpha;
    total += (PerspectiveEval(p.base(), z, t) + PerspectiveEval(p.base(), v.x - z, 1.0 - t)) / m;
  }
  return total;
}

namespace {

// Atom restricted to the free coordinates; pinned coordinates are folded into b.
struct ReducedAtom {
  LossAtom loss;
  double w = 1.0;
  std::vector<int> idx;
  std::vector<double> coef;
  double b = 0.0;

  double Dot(const Vector& v) const {
    double s = 0.0;
    for (std::size_t k = 0; k < idx.size(); ++k) s += coef[k] * v[idx[k]];
    return s;
  }
};

// Perspective of an atom at (v, tau) given av = a^T v.
struct PerspPoint {
  double val;
  double d1;    // w l'(sigma): gradient in v is d1 * a
  double dtau;  // gradient in tau
  double h;     // Hessian is h * q q^T with q = (a, bs)
  double bs;    // b - sigma
};

PerspPoint Persp(const ReducedAtom& a, double av, double tau) {
  const double sigma = av / tau + a.b;
  const double l = a.loss.Value(sigma);
  const double d = a.loss.Derivative(sigma);
  PerspPoint e;
  e.val = a.w * tau * l;
  e.d1 = a.w * d;
  e.bs = a.b - sigma;
  e.dtau = a.w * (l + d * e.bs);
  e.h = a.w * a.loss.SecondDerivative(sigma) / tau;
  return e;
}

struct Derivs {
  Vector gx;
  Matrix hxx;
  std::vector<Vector> gy;
  std::vector<Matrix> hyy;
  std::vector<Matrix> hxy;
};

struct BarrierState {
  Vector x;               // free coordinates
  std::vector<Vector> y;  // per free block: (z on free coordinates, t)
};

struct BarrierResult {
  BarrierState state;
  double objective = kInf;  // F, prox included
  double gap = 0.0;         // #constraints / tau at the last centering
  double tau = 1.0;
  int newton_steps = 0;
  bool converged = true;
};

// Log-barrier Newton solver for the relaxed formulation restricted to a subset
// of terms, each either free (its own (z_i, t_i) block) or fixed to t_i in {0, 1}.
class Barrier {
 public:
  Barrier(const Problem& p, std::span<const int> terms, std::span<const std::int8_t> fix, double f0_scale)
      : p_(p), f0_scale_(f0_scale) {
    const int n = p.dim();
    pinned_ = Vector::Zero(n);
    std::vector<int> local(static_cast<std::size_t>(n), -1);
    for (int j = 0; j < n; ++j) {
      if (p.base().lower[j] == p.base().upper[j]) {
        pinned_[j] = p.base().lower[j];
      } else {
        local[static_cast<std::size_t>(j)] = static_cast<int>(free_.size());
        free_.push_back(j);
      }
    }
    nf_ = static_cast<int>(free_.size());
    lo_.resize(nf_);
    hi_.resize(nf_);
    for (int k = 0; k < nf_; ++k) {
      lo_[k] = p.base().lower[free_[static_cast<std::size_t>(k)]];
      hi_[k] = p.base().upper[free_[static_cast<std::size_t>(k)]];
    }
    auto reduce = [&](const SparseAtom& s) {
      ReducedAtom r;
      r.loss = s.loss;
      r.w = s.weight;
      r.b = s.b;
      for (std::size_t k = 0; k < s.idx.size(); ++k) {
        const int l = local[static_cast<std::size_t>(s.idx[k])];
        if (l < 0) {
          r.b += s.coef[k] * pinned_[s.idx[k]];
        } else {
          r.idx.push_back(l);
          r.coef.push_back(s.coef[k]);
        }
      }
      return r;
    };
    for (const SparseAtom& s : p.base_atoms()) base_.push_back(reduce(s));
    for (std::size_t k = 0; k < terms.size(); ++k) {
      const int i = terms[k];
      const ReducedAtom r = reduce(p.term_atoms()[static_cast<std::size_t>(i)]);
      if (fix[k] == 1) {
        fixed_one_.push_back(r);
        ++fixed_count_;
      } else if (fix[k] == 0) {
        fixed_alpha_ += p.term(i).alpha;
        ++fixed_count_;
      } else {
        block_term_.push_back(i);
        block_atom_.push_back(r);
        block_alpha_.push_back(p.term(i).alpha);
      }
    }
    int finite_sides = 0;
    for (int k = 0; k < nf_; ++k) {
      finite_sides += std::isfinite(lo_[k]) ? 1 : 0;
      finite_sides += std::isfinite(hi_[k]) ? 1 : 0;
    }
    const int nb = num_blocks();
    num_constraints_ = nb > 0 ? nb * (2 + 2 * finite_sides) : finite_sides;
    center_ = Vector::Zero(nf_);
  }

  int num_blocks() const { return static_cast<int>(block_term_.size()); }
  int free_dim() const { return nf_; }

  void SetProx(double rho, const Vector& center_full) {
    rho_ = rho;
    prox_const_ = 0.0;
    for (int j = 0; j < p_.dim(); ++j) {
      if (p_.base().lower[j] == p_.base().upper[j]) {
        const double d = pinned_[j] - center_full[j];
        prox_const_ += 0.5 * rho * d * d;
      }
    }
    for (int k = 0; k < nf_; ++k) center_[k] = center_full[free_[static_cast<std::size_t>(k)]];
  }

  BarrierState Initial(const Vector& x_full) const {
    BarrierState s;
    s.x.resize(nf_);
    for (int k = 0; k < nf_; ++k) {
      double v = x_full[free_[static_cast<std::size_t>(k)]];
      const double l = lo_[k], u = hi_[k];
      if (std::isfinite(l) && std::isfinite(u)) {
        const double margin = 0.1 * (u - l);
        v = std::clamp(v, l + margin, u - margin);
      } else if (std::isfinite(l)) {
        v = std::max(v, l + 1.0);
      } else if (std::isfinite(u)) {
        v = std::min(v, u - 1.0);
      }
      s.x[k] = v;
    }
    s.y.resize(static_cast<std::size_t>(num_blocks()));
    for (auto& y : s.y) {
      y.resize(nf_ + 1);
      y.head(nf_) = 0.5 * s.x;
      y[nf_] = 0.5;
    }
    return s;
  }

  // F at s, prox included; +inf outside the barrier domain.
  double Objective(const BarrierState& s) const {
    if (!Interior(s)) return kInf;
    return SmoothValue(s);
  }

  double ProxValue(const BarrierState& s) const {
    if (rho_ == 0.0) return 0.0;
    return 0.5 * rho_ * (s.x - center_).squaredNorm() + prox_const_;
  }

  BarrierResult Run(BarrierState s, double tau0, double gap_tol, double growth, int max_newton) const {
    BarrierResult res;
    const int kc = num_constraints_;
    double tau = tau0;
    if (kc == 0) {
      tau = 1.0;
    } else if (!(tau > 0.0)) {
      tau = kc / std::max(1.0, std::abs(Objective(s)));
    }
    Derivs d;
    BarrierState trial;
    std::vector<Vector> dy;
    Vector dx;
    for (;;) {
      bool centered = false;
      for (int inner = 0; inner < 100 && res.newton_steps < max_newton; ++inner) {
        ComputeDerivs(s, tau, d);
        const double lam2 = NewtonDirection(d, dx, dy);
        ++res.newton_steps;
        if (!(lam2 >= 0.0) || !std::isfinite(lam2)) break;
        const double psi0 = Psi(s, tau);
        if (lam2 <= std::max(2e-10, 1e-13 * std::abs(psi0))) {
          centered = true;
          break;
        }
        double step = std::min(1.0, 0.99 * MaxStep(s, dx, dy));
        bool accepted = false;
        while (step > 1e-16) {
          trial.x = s.x + step * dx;
          trial.y.resize(s.y.size());
          for (std::size_t b = 0; b < s.y.size(); ++b) trial.y[b] = s.y[b] + step * dy[b];
          const double psi = Psi(trial, tau);
          if (psi <= psi0 - 0.01 * step * lam2) {
            accepted = true;
            break;
          }
          step *= 0.5;
        }
        if (!accepted) {
          centered = lam2 <= 1e-8 * std::max(1.0, std::abs(psi0));
          break;
        }
        std::swap(s, trial);
      }
      res.converged = centered;
      const double f = Objective(s);
      res.objective = f;
      res.tau = tau;
      res.gap = kc > 0 ? kc / tau : 0.0;
      if (res.newton_steps >= max_newton) {
        res.converged = false;
        break;
      }
      if (kc == 0 || res.gap <= gap_tol * std::max(1.0, std::abs(f))) break;
      tau *= growth;
    }
    res.state = std::move(s);
    return res;
  }

  // Full-length relaxation variables for the terms handled by this solver, in
  // the order they were given.
  void Expand(const BarrierState& s, std::span<const int> terms, std::span<const std::int8_t> fix,
              PerspectiveVars& out) const {
    const Vector x = Full(s.x, 1.0);
    out.x = x;
    std::size_t b = 0;
    for (std::size_t k = 0; k < terms.size(); ++k) {
      const std::size_t i = static_cast<std::size_t>(terms[k]);
      if (fix[k] == 1) {
        out.z[i] = x;
        out.t[terms[k]] = 1.0;
      } else if (fix[k] == 0) {
        out.z[i] = Vector::Zero(p_.dim());
        out.t[terms[k]] = 0.0;
      } else {
        const double t = s.y[b][nf_];
        out.z[i] = Full(s.y[b].head(nf_), t);
        out.t[terms[k]] = t;
        ++b;
      }
    }
  }

  Vector Full(const Vector& free_part, double t) const {
    Vector v = t * pinned_;
    for (int k = 0; k < nf_; ++k) v[free_[static_cast<std::size_t>(k)]] = free_part[k];
    return v;
  }

 private:
  // Each barrier constraint is linear: g = qx * x_k + qz * z_k + qt * t + c >= 0.
  template <typename Fn>
  void ForEachWedge(const BarrierState& s, Fn&& fn) const {
    for (int b = 0; b < num_blocks(); ++b) {
      const Vector& y = s.y[static_cast<std::size_t>(b)];
      const double t = y[nf_];
      fn(b, -1, t, 0.0, 0.0, 1.0);
      fn(b, -1, 1.0 - t, 0.0, 0.0, -1.0);
      for (int k = 0; k < nf_; ++k) {
        const double z = y[k], x = s.x[k];
        if (std::isfinite(lo_[k])) {
          const double l = lo_[k];
          fn(b, k, z - t * l, 0.0, 1.0, -l);
          fn(b, k, x - z - (1.0 - t) * l, 1.0, -1.0, l);
        }
        if (std::isfinite(hi_[k])) {
          const double u = hi_[k];
          fn(b, k, t * u - z, 0.0, -1.0, u);
          fn(b, k, (1.0 - t) * u - x + z, -1.0, 1.0, -u);
        }
      }
    }
    if (num_blocks() == 0) {
      for (int k = 0; k < nf_; ++k) {
        if (std::isfinite(lo_[k])) fn(-1, k, s.x[k] - lo_[k], 1.0, 0.0, 0.0);
        if (std::isfinite(hi_[k])) fn(-1, k, hi_[k] - s.x[k], -1.0, 0.0, 0.0);
      }
    }
  }

  bool Interior(const BarrierState& s) const {
    bool ok = true;
    ForEachWedge(s, [&](int, int, double g, double, double, double) {
      if (!(g > 0.0)) ok = false;
    });
    return ok;
  }

  double BarrierValue(const BarrierState& s) const {
    double phi = 0.0;
    ForEachWedge(s, [&](int, int, double g, double, double, double) {
      phi += g > 0.0 ? -std::log(g) : kInf;
    });
    return phi;
  }

  double SmoothValue(const BarrierState& s) const {
    double f = fixed_alpha_ + ProxValue(s);
    for (const ReducedAtom& a : fixed_one_) f += Persp(a, a.Dot(s.x), 1.0).val;
    if (fixed_count_ > 0) {
      double base = 0.0;
      for (const ReducedAtom& a : base_) base += Persp(a, a.Dot(s.x), 1.0).val;
      f += f0_scale_ * fixed_count_ * base;
    }
    Vector w(nf_);
    for (int b = 0; b < num_blocks(); ++b) {
      const Vector& y = s.y[static_cast<std::size_t>(b)];
      const double t = y[nf_];
      const ReducedAtom& ta = block_atom_[static_cast<std::size_t>(b)];
      f += Persp(ta, ta.Dot(y), t).val + block_alpha_[static_cast<std::size_t>(b)] * (1.0 - t);
      w = s.x - y.head(nf_);
      double base = 0.0;
      for (const ReducedAtom& a : base_) {
        base += Persp(a, a.Dot(y), t).val + Persp(a, a.Dot(w), 1.0 - t).val;
      }
      f += f0_scale_ * base;
    }
    return f;
  }

  double Psi(const BarrierState& s, double tau) const {
    const double phi = BarrierValue(s);
    if (!std::isfinite(phi)) return kInf;
    const double f = SmoothValue(s);
    return std::isfinite(f) ? tau * f + phi : kInf;
  }

  void AddX(const ReducedAtom& a, const Vector& x, double sc, Derivs& d) const {
    const PerspPoint e = Persp(a, a.Dot(x), 1.0);
    const double g = sc * e.d1, h = sc * e.h;
    for (std::size_t k = 0; k < a.idx.size(); ++k) {
      d.gx[a.idx[k]] += g * a.coef[k];
      if (h != 0.0) {
        for (std::size_t l = 0; l < a.idx.size(); ++l) d.hxx(a.idx[k], a.idx[l]) += h * a.coef[k] * a.coef[l];
      }
    }
  }

  // Perspective at (z, t) of block b.
  void AddZ(const ReducedAtom& a, const Vector& y, double sc, Vector& gy, Matrix& hyy) const {
    const double t = y[nf_];
    const PerspPoint e = Persp(a, a.Dot(y), t);
    const double h = sc * e.h;
    gy[nf_] += sc * e.dtau;
    for (std::size_t k = 0; k < a.idx.size(); ++k) {
      const int ik = a.idx[k];
      gy[ik] += sc * e.d1 * a.coef[k];
      if (h != 0.0) {
        for (std::size_t l = 0; l < a.idx.size(); ++l) hyy(ik, a.idx[l]) += h * a.coef[k] * a.coef[l];
        hyy(ik, nf_) += h * a.coef[k] * e.bs;
        hyy(nf_, ik) += h * a.coef[k] * e.bs;
      }
    }
    hyy(nf_, nf_) += h * e.bs * e.bs;
  }

  // Perspective at (x - z, 1 - t) of block b.
  void AddXZ(const ReducedAtom& a, const Vector& w, double one_minus_t, double sc, Derivs& d, Vector& gy,
             Matrix& hyy, Matrix& hxy) const {
    const PerspPoint e = Persp(a, a.Dot(w), one_minus_t);
    const double h = sc * e.h;
    gy[nf_] -= sc * e.dtau;
    for (std::size_t k = 0; k < a.idx.size(); ++k) {
      const int ik = a.idx[k];
      const double gk = sc * e.d1 * a.coef[k];
      d.gx[ik] += gk;
      gy[ik] -= gk;
      if (h != 0.0) {
        for (std::size_t l = 0; l < a.idx.size(); ++l) {
          const double v = h * a.coef[k] * a.coef[l];
          d.hxx(ik, a.idx[l]) += v;
          hyy(ik, a.idx[l]) += v;
          hxy(ik, a.idx[l]) -= v;
        }
        const double vt = h * a.coef[k] * e.bs;
        hyy(ik, nf_) += vt;
        hyy(nf_, ik) += vt;
        hxy(ik, nf_) -= vt;
      }
    }
    hyy(nf_, nf_) += h * e.bs * e.bs;
  }

  void ComputeDerivs(const BarrierState& s, double tau, Derivs& d) const {
    const int nb = num_blocks();
    d.gx.setZero(nf_);
    d.hxx.setZero(nf_, nf_);
    d.gy.resize(static_cast<std::size_t>(nb));
    d.hyy.resize(static_cast<std::size_t>(nb));
    d.hxy.resize(static_cast<std::size_t>(nb));
    for (const ReducedAtom& a : fixed_one_) AddX(a, s.x, tau, d);
    if (fixed_count_ > 0) {
      for (const ReducedAtom& a : base_) AddX(a, s.x, tau * f0_scale_ * fixed_count_, d);
    }
    if (rho_ > 0.0) {
      d.gx += (tau * rho_) * (s.x - center_);
      d.hxx.diagonal().array() += tau * rho_;
    }
    Vector w(nf_);
    for (int b = 0; b < nb; ++b) {
      const auto ub = static_cast<std::size_t>(b);
      const Vector& y = s.y[ub];
      Vector& gy = d.gy[ub];
      Matrix& hyy = d.hyy[ub];
      Matrix& hxy = d.hxy[ub];
      gy.setZero(nf_ + 1);
      hyy.setZero(nf_ + 1, nf_ + 1);
      hxy.setZero(nf_, nf_ + 1);
      AddZ(block_atom_[ub], y, tau, gy, hyy);
      w = s.x - y.head(nf_);
      const double sc = tau * f0_scale_;
      for (const ReducedAtom& a : base_) {
        AddZ(a, y, sc, gy, hyy);
        AddXZ(a, w, 1.0 - y[nf_], sc, d, gy, hyy, hxy);
      }
      gy[nf_] -= tau * block_alpha_[ub];
    }
    ForEachWedge(s, [&](int b, int k, double g, double qx, double qz, double qt) {
      const double inv = 1.0 / g, inv2 = inv * inv;
      if (b < 0) {
        d.gx[k] -= qx * inv;
        d.hxx(k, k) += qx * qx * inv2;
        return;
      }
      const auto ub = static_cast<std::size_t>(b);
      Vector& gy = d.gy[ub];
      Matrix& hyy = d.hyy[ub];
      gy[nf_] -= qt * inv;
      hyy(nf_, nf_) += qt * qt * inv2;
      if (k < 0) return;
      gy[k] -= qz * inv;
      hyy(k, k) += qz * qz * inv2;
      hyy(k, nf_) += qz * qt * inv2;
      hyy(nf_, k) += qz * qt * inv2;
      if (qx != 0.0) {
        d.gx[k] -= qx * inv;
        d.hxx(k, k) += qx * qx * inv2;
        d.hxy[ub](k, k) += qx * qz * inv2;
        d.hxy[ub](k, nf_) += qx * qt * inv2;
      }
    });
  }

  template <typename M>
  static Eigen::LLT<Matrix> Factor(const M& h) {
    Eigen::LLT<Matrix> llt(h);
    double reg = 1e-14 * std::max(1.0, h.diagonal().cwiseAbs().maxCoeff());
    while (llt.info() != Eigen::Success && reg < 1e12) {
      Matrix hr = h;
      hr.diagonal().array() += reg;
      llt.compute(hr);
      reg *= 100.0;
    }
    return llt;
  }

  // Returns the squared Newton decrement -grad^T step.
  double NewtonDirection(const Derivs& d, Vector& dx, std::vector<Vector>& dy) const {
    const int nb = num_blocks();
    Matrix schur = d.hxx;
    Vector rhs = -d.gx;
    std::vector<Eigen::LLT<Matrix>> facts;
    std::vector<Vector> wv(static_cast<std::size_t>(nb));
    std::vector<Matrix> wm(static_cast<std::size_t>(nb));
    facts.reserve(static_cast<std::size_t>(nb));
    for (int b = 0; b < nb; ++b) {
      const auto ub = static_cast<std::size_t>(b);
      facts.push_back(Factor(d.hyy[ub]));
      wv[ub] = facts.back().solve(d.gy[ub]);
      if (nf_ > 0) {
        wm[ub] = facts.back().solve(d.hxy[ub].transpose());
        schur.noalias() -= d.hxy[ub] * wm[ub];
        rhs.noalias() += d.hxy[ub] * wv[ub];
      }
    }
    dx = nf_ > 0 ? Vector(Factor(schur).solve(rhs)) : Vector(0);
    double lam2 = -d.gx.dot(dx);
    dy.resize(static_cast<std::size_t>(nb));
    for (int b = 0; b < nb; ++b) {
      const auto ub = static_cast<std::size_t>(b);
      dy[ub] = -wv[ub];
      if (nf_ > 0) dy[ub].noalias() -= wm[ub] * dx;
      lam2 -= d.gy[ub].dot(dy[ub]);
    }
    return lam2;
  }

  double MaxStep(const BarrierState& s, const Vector& dx, const std::vector<Vector>& dy) const {
    double amax = kInf;
    ForEachWedge(s, [&](int b, int k, double g, double qx, double qz, double qt) {
      double dg = 0.0;
      if (k >= 0) dg += qx * dx[k];
      if (b >= 0) {
        const Vector& v = dy[static_cast<std::size_t>(b)];
        dg += qt * v[nf_];
        if (k >= 0) dg += qz * v[k];
      }
      if (dg < 0.0) amax = std::min(amax, -g / dg);
    });
    return amax;
  }

  const Problem& p_;
  double f0_scale_;
  int nf_ = 0;
  std::vector<int> free_;
  Vector pinned_;
  Vector lo_, hi_;
  std::vector<ReducedAtom> base_;
  std::vector<ReducedAtom> fixed_one_;
  int fixed_count_ = 0;
  double fixed_alpha_ = 0.0;
  std::vector<int> block_term_;
  std::vector<ReducedAtom> block_atom_;
  std::vector<double> block_alpha_;
  int num_constraints_ = 0;
  double rho_ = 0.0;
  Vector center_;
  double prox_const_ = 0.0;
};

Problem Superlinear(const Problem& p, double auto_ridge, double& added) {
  added = 0.0;
  if (p.base().IsSuperlinear() || auto_ridge <= 0.0) return p;
  added = auto_ridge;
  return p.WithExtraRidge(auto_ridge);
}

double Seconds(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

}  // namespace

BoundCertificate SolveRelaxation(const Problem& p, std::span<const std::int8_t> fixed,
                                 const RelaxationConfig& cfg) {
  const auto start = Clock::now();
  const int m = p.num_terms();
  if (!fixed.empty() && static_cast<int>(fixed.size()) != m) {
    throw Error(ErrorCode::kInvalidInput, "fixed assignment must be empty or have one entry per term");
  }
  if (!(cfg.gap_tol > 0.0) || !(cfg.barrier_growth > 1.0) || cfg.max_newton < 1 || cfg.auto_ridge < 0.0) {
    throw Error(ErrorCode::kInvalidInput, "invalid relaxation configuration");
  }
  std::vector<int> terms(static_cast<std::size_t>(m));
  TAssignment fix(static_cast<std::size_t>(m), kFree);
  BoundCertificate cert;
  for (int i = 0; i < m; ++i) {
    terms[static_cast<std::size_t>(i)] = i;
    std::int8_t f = fixed.empty() ? kFree : fixed[static_cast<std::size_t>(i)];
    if (f != kFree && f != 0 && f != 1) throw Error(ErrorCode::kInvalidInput, "fixed entries must be -1, 0 or 1");
    if (!p.term(i).Clippable()) {
      if (f == 0) cert.feasible = false;
      f = 1;
    }
    fix[static_cast<std::size_t>(i)] = f;
  }
  if (!cert.feasible) {
    cert.lower_bound = kInf;
    cert.objective = kInf;
    cert.wall_time = Seconds(start);
    return cert;
  }

  const Problem q = Superlinear(p, cfg.auto_ridge, cert.auto_ridge);
  Barrier solver(q, terms, fix, 1.0 / m);
  Vector x0 = cfg.x0 ? *cfg.x0 : Vector::Zero(p.dim());
  CheckDimension(p, x0, "x0");
  const BarrierResult res =
      solver.Run(solver.Initial(x0), 0.0, cfg.gap_tol, cfg.barrier_growth, cfg.max_newton);
  if (!std::isfinite(res.objective)) throw Error(ErrorCode::kNumerical, "relaxation solve produced a non-finite value");

  cert.solution.z.resize(static_cast<std::size_t>(m));
  cert.solution.t = Vector::Zero(m);
  solver.Expand(res.state, terms, fix, cert.solution);
  cert.objective = res.objective;
  cert.lower_bound = res.objective - res.gap;
  cert.converged = res.converged;
  cert.iterations = res.newton_steps;
  cert.wall_time = Seconds(start);
  return cert;
}

BoundCertificate SolveRelaxationAdmm(const Problem& p, const AdmmConfig& cfg) {
  const auto start = Clock::now();
  if (!(cfg.rho > 0.0) || cfg.max_iters < 1 || !(cfg.primal_tol > 0.0) || !(cfg.dual_tol > 0.0) ||
      cfg.auto_ridge < 0.0 || !(cfg.gap_tol > 0.0)) {
    throw Error(ErrorCode::kInvalidInput, "invalid ADMM configuration");
  }
  const int m = p.num_terms();
  const int n = p.dim();
  BoundCertificate cert;
  const Problem q = Superlinear(p, cfg.auto_ridge, cert.auto_ridge);

  std::vector<std::array<int, 1>> block_terms(static_cast<std::size_t>(m));
  std::vector<std::array<std::int8_t, 1>> block_fix(static_cast<std::size_t>(m));
  std::vector<Barrier> blocks;
  blocks.reserve(static_cast<std::size_t>(m));
  for (int i = 0; i < m; ++i) {
    const auto ui = static_cast<std::size_t>(i);
    block_terms[ui] = {i};
    block_fix[ui] = {q.term(i).Clippable() ? kFree : std::int8_t{1}};
    blocks.emplace_back(q, block_terms[ui], block_fix[ui], 1.0 / m);
  }

  Vector x = Vector::Zero(n);
  for (int j = 0; j < n; ++j) {
    if (q.base().lower[j] == q.base().upper[j]) x[j] = q.base().lower[j];
  }
  std::vector<Vector> u(static_cast<std::size_t>(m), Vector::Zero(n));
  std::vector<Vector> y(static_cast<std::size_t>(m));
  std::vector<BarrierResult> last(static_cast<std::size_t>(m));
  std::vector<bool> started(static_cast<std::size_t>(m), false);

  cert.converged = false;
  for (int it = 1; it <= cfg.max_iters; ++it) {
    cert.iterations = it;
    for (int i = 0; i < m; ++i) {
      const auto ui = static_cast<std::size_t>(i);
      Barrier& blk = blocks[ui];
      blk.SetProx(cfg.rho, x - u[ui]);
      if (!started[ui]) {
        last[ui] = blk.Run(blk.Initial(x - u[ui]), 0.0, cfg.gap_tol, 10.0, 1000);
        started[ui] = true;
      } else {
        last[ui] = blk.Run(std::move(last[ui].state), last[ui].tau * 1e-3, cfg.gap_tol, 10.0, 1000);
      }
      y[ui] = blk.Full(last[ui].state.x, 1.0);
    }
    Vector x_next = Vector::Zero(n);
    for (int i = 0; i < m; ++i) x_next += y[static_cast<std::size_t>(i)] + u[static_cast<std::size_t>(i)];
    x_next /= m;
    double primal = 0.0;
    for (int i = 0; i < m; ++i) {
      const auto ui = static_cast<std::size_t>(i);
      u[ui] += y[ui] - x_next;
      primal = std::max(primal, (y[ui] - x_next).norm());
    }
    const double dual = cfg.rho * (x_next - x).norm();
    x = std::move(x_next);
    cert.primal_residual = primal;
    cert.dual_residual = dual;
    if (primal <= cfg.primal_tol && dual <= cfg.dual_tol) {
      cert.converged = true;
      break;
    }
  }

  cert.solution.x = x;
  cert.solution.z.assign(static_cast<std::size_t>(m), Vector::Zero(n));
  cert.solution.t = Vector::Zero(m);
  double bound = 0.0;
  for (int i = 0; i < m; ++i) {
    const auto ui = static_cast<std::size_t>(i);
    const Barrier& blk = blocks[ui];
    bound += last[ui].objective - blk.ProxValue(last[ui].state);
    PerspectiveVars part;
    part.z.resize(static_cast<std::size_t>(m));
    part.t = Vector::Zero(m);
    blk.Expand(last[ui].state, block_terms[ui], block_fix[ui], part);
    cert.solution.z[ui] = part.z[ui];
    cert.solution.t[i] = part.t[i];
  }
  if (!std::isfinite(bound)) throw Error(ErrorCode::kNumerical, "ADMM produced a non-finite bound");
  cert.lower_bound = bound;
  cert.objective = bound;
  cert.wall_time = Seconds(start);
  return cert;
}

}  // namespace clipopt
