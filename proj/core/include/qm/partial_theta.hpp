#pragma once

#include <stdexcept>

#include "qm/domain.hpp"
#include "qm/precision.hpp"

namespace qm {

struct EvalRequest {
  FamilySpec spec;
  QPoint point;
  double t = 1.0;
  double tail_bound = 1e-14;
};

class TruncationError : public std::runtime_error {
 public:
  TruncationError(const std::string& what, double achieved) : std::runtime_error(what), achieved_(achieved) {}
  double achieved() const { return achieved_; }

 private:
  double achieved_;
};

inline constexpr double kMaxPointsPerShift = 1e7;

// q = exp(2 pi i h/k - t)
template <class R>
cplx<R> eval_F1(const EvalRequest& req);
template <class R>
cplx<R> eval_F2(const EvalRequest& req);
template <class R>
cplx<R> eval_F3(const EvalRequest& req);
template <class R>
cplx<R> eval_F(const EvalRequest& req);

// q = exp(2 pi i tau), Im tau > 0
cplx<double> eval_F_tau(const FamilySpec& spec, cplx<double> tau, double tail_bound = 1e-14);

// cutoff T with sum_{Q(n) > T} exp(-t Q(n)) <= tail over a shifted planar lattice
double lattice_cutoff(double t, double lambda, double tail);
// same for a one-dimensional progression with exponent a j^2
double line_cutoff(double t, double a, double tail);

}  // namespace qm
