#include "npulse/bloch.hpp"

#include <cmath>
#include <string>

namespace npulse {

namespace {

// Decay/detuning brackets of the coherence equations, precomputed per run.
struct BlochCoeffs {
  double g, gp, gs;
  cplx Oc, Oc_c;
  cplx c12, c13, c14, c23, c24, c34;

  explicit BlochCoeffs(const PhysParams& p)
      : g(p.gamma),
        gp(p.gamma_p()),
        gs(p.gamma_s()),
        Oc(p.Omega_c),
        Oc_c(std::conj(p.Omega_c)) {
    const double DP = p.Delta_P, DC = p.Delta_C, DPp = p.Delta_Pp;
    c12 = -(cplx{g, 0.0} - I * (DC - DPp));
    c13 = -(cplx{g / 2.0, 0.0} - I * DP);
    c14 = -(cplx{g / 2.0, 0.0} - I * DC);
    c23 = -(cplx{g / 2.0, 0.0} + I * (DC - DP - DPp));
    c24 = -(cplx{g / 2.0, 0.0} - I * DPp);
    c34 = -(cplx{p.Gamma_g, 0.0} + I * (DP - DC));
  }
};

inline double im_prod(const cplx& a, const cplx& b) {
  // Im(conj(a) * b)
  return a.real() * b.imag() - a.imag() * b.real();
}

inline DensityMatrix rhs(const DensityMatrix& r, const cplx& Op, const BlochCoeffs& k) {
  const cplx Op_c = std::conj(Op);
  const double r11 = r.pop[0], r22 = r.pop[1], r33 = r.pop[2], r44 = r.pop[3];
  const cplx &v12 = r.coh[0], &v13 = r.coh[1], &v14 = r.coh[2], &v23 = r.coh[3],
             &v24 = r.coh[4], &v34 = r.coh[5];

  DensityMatrix d;
  d.pop[0] = -k.g * r11 - 2.0 * im_prod(Op, v13) + 2.0 * im_prod(k.Oc, v14);
  d.pop[1] = -k.g * r22 + 2.0 * im_prod(Op, v24);
  d.pop[2] = k.gp * r11 + k.gs * r22 + 2.0 * im_prod(Op, v13);
  d.pop[3] = -(d.pop[0] + d.pop[1] + d.pop[2]);

  d.coh[0] = k.c12 * v12 + I * (k.Oc * std::conj(v24) - Op * std::conj(v23) - Op_c * v14);
  d.coh[1] = k.c13 * v13 + I * (k.Oc * std::conj(v34) - Op * (r33 - r11));
  d.coh[2] = k.c14 * v14 - I * Op * (v34 + v12) + I * k.Oc * (r44 - r11);
  d.coh[3] = k.c23 * v23 + I * Op * (std::conj(v34) + std::conj(v12));
  d.coh[4] = k.c24 * v24 + I * Op * (r44 - r22) - I * k.Oc * std::conj(v12);
  d.coh[5] = k.c34 * v34 - I * (Op_c * v14 + Op * std::conj(v23) + k.Oc * std::conj(v13));
  return d;
}

inline void axpy(DensityMatrix& y, double a, const DensityMatrix& x) {
  for (int i = 0; i < 4; ++i) y.pop[static_cast<size_t>(i)] += a * x.pop[static_cast<size_t>(i)];
  for (int i = 0; i < 6; ++i) y.coh[static_cast<size_t>(i)] += a * x.coh[static_cast<size_t>(i)];
}

inline void rk4_step(DensityMatrix& r, double h, const cplx& w0, const cplx& wm, const cplx& w1,
                     const BlochCoeffs& k) {
  const DensityMatrix k1 = rhs(r, w0, k);
  DensityMatrix t = r;
  axpy(t, 0.5 * h, k1);
  const DensityMatrix k2 = rhs(t, wm, k);
  t = r;
  axpy(t, 0.5 * h, k2);
  const DensityMatrix k3 = rhs(t, wm, k);
  t = r;
  axpy(t, h, k3);
  const DensityMatrix k4 = rhs(t, w1, k);
  axpy(r, h / 6.0, k1);
  axpy(r, h / 3.0, k2);
  axpy(r, h / 3.0, k3);
  axpy(r, h / 6.0, k4);
}

void check_state(const DensityMatrix& r, int step, double& max_drift) {
  const double drift = std::abs(r.trace() - 1.0);
  if (drift > max_drift) max_drift = drift;
  if (drift > 1e-6)
    fail("invariant", "density-matrix trace drift " + std::to_string(drift) + " at tau step " +
                          std::to_string(step) + " (d_tau too coarse)");
  for (double pv : r.pop) {
    if (!(pv >= -1e-6 && pv <= 1.0 + 1e-6))
      fail("invariant",
           "population " + std::to_string(pv) + " out of bounds at tau step " + std::to_string(step));
  }
  if (!r.finite()) fail("invariant", "non-finite density matrix at tau step " + std::to_string(step));
}

void integrate_impl(const DensityMatrix& rho0, const std::vector<cplx>& w, double h,
                    const PhysParams& p, std::vector<DensityMatrix>* states,
                    std::vector<cplx>& source, double& max_drift) {
  const BlochCoeffs k(p);
  const size_t n = w.size();
  source.resize(n);
  if (states) {
    states->clear();
    states->reserve(n);
  }

  DensityMatrix r = rho0;
  max_drift = 0.0;
  auto record = [&](size_t j) {
    source[j] = r.coh[DensityMatrix::u24] - r.coh[DensityMatrix::u13];
    if (states) states->push_back(r);
  };
  record(0);
  for (size_t j = 0; j + 1 < n; ++j) {
    const cplx w0 = w[j];
    const cplx w1 = w[j + 1];
    const cplx wm = 0.5 * (w0 + w1);
    rk4_step(r, h, w0, wm, w1, k);
    check_state(r, static_cast<int>(j) + 1, max_drift);
    record(j + 1);
  }
}

}  // namespace

DensityMatrix bloch_rhs(const DensityMatrix& rho, cplx omega_p, const PhysParams& p) {
  return rhs(rho, omega_p, BlochCoeffs(p));
}

BlochTrajectory integrate_bloch(const DensityMatrix& rho0, const Envelope& envelope,
                                const PhysParams& p) {
  BlochTrajectory out;
  integrate_impl(rho0, envelope.values, envelope.grid.d_tau, p, &out.states, out.source,
                 out.max_trace_drift);
  return out;
}

void bloch_source(const DensityMatrix& rho0, const std::vector<cplx>& envelope, double d_tau,
                  const PhysParams& p, std::vector<cplx>& source, double* max_trace_drift) {
  double drift = 0.0;
  integrate_impl(rho0, envelope, d_tau, p, nullptr, source, drift);
  if (max_trace_drift) *max_trace_drift = drift;
}

}  // namespace npulse
