#include <gsl/gsl_errno.h>
#include <gsl/gsl_sf_coulomb.h>
#include <gsl/gsl_sf_gamma.h>

#include <cmath>
#include <mutex>
#include <string>

#include "scatent/error.hpp"
#include "scatent/solver.hpp"

namespace scatent {

namespace {

void disable_gsl_abort() {
  static std::once_flag flag;
  std::call_once(flag, [] { gsl_set_error_handler_off(); });
}

}  // namespace

CoulombFunctions coulomb_functions(double sommerfeld, int l_max, double rho) {
  disable_gsl_abort();
  if (rho <= 0) throw Error("coulomb_functions: rho must be positive");
  if (l_max < 0) throw Error("coulomb_functions: negative l_max");

  CoulombFunctions cf;
  cf.sommerfeld = sommerfeld;
  cf.rho = rho;
  cf.F.resize(l_max + 1);
  cf.Fp.resize(l_max + 1);
  cf.G.resize(l_max + 1);
  cf.Gp.resize(l_max + 1);

  for (int l = 0; l <= l_max; ++l) {
    gsl_sf_result F, Fp, G, Gp;
    double exp_F = 0, exp_G = 0;
    const int status = gsl_sf_coulomb_wave_FG_e(sommerfeld, rho, l, 0, &F, &Fp,
                                                &G, &Gp, &exp_F, &exp_G);
    if (status != GSL_SUCCESS || exp_F != 0.0 || exp_G != 0.0)
      throw Error("coulomb_functions failed (eta=" + std::to_string(sommerfeld) +
                  ", rho=" + std::to_string(rho) + ", l=" + std::to_string(l) +
                  "): " + gsl_strerror(status));
    cf.F[l] = F.val;
    cf.Fp[l] = Fp.val;
    cf.G[l] = G.val;
    cf.Gp[l] = Gp.val;
  }
  return cf;
}

std::vector<double> coulomb_phases(double sommerfeld, int l_max) {
  disable_gsl_abort();
  std::vector<double> sigma(l_max + 1, 0.0);
  if (sommerfeld == 0.0) return sigma;
  gsl_sf_result lnr, arg;
  const int status = gsl_sf_lngamma_complex_e(1.0, sommerfeld, &lnr, &arg);
  if (status != GSL_SUCCESS)
    throw Error("coulomb_phases: lngamma failed for eta=" +
                std::to_string(sommerfeld));
  sigma[0] = arg.val;
  for (int l = 1; l <= l_max; ++l)
    sigma[l] = sigma[l - 1] + std::atan2(sommerfeld, l);
  return sigma;
}

}  // namespace scatent
