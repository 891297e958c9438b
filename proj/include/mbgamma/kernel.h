#pragma once

#include <complex>

#include "mbgamma/weights.h"

namespace mbgamma {

using cplx = std::complex<double>;

/// f_omega(t) = prod_j 1/(1 - e^{-w_j t}).
///
/// Factors with |w_j t| < 1e-2 are summed from the Laurent expansion of x/(1 - e^{-x}) to avoid
/// cancellation in 1 - e^{-x}. DomainError at t = 0; PoleError when some w_j t lies within 1e-8
/// of a nonzero multiple of 2 pi i.
cplx f_omega_eval(cplx t, const Weights& omega);

}  // namespace mbgamma
