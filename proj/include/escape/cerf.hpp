#pragma once

// Complementary error function of complex argument and its scaled variant
// erfcx(z) = exp(z^2) erfc(z). The scaled form is the primary primitive: it
// stays finite where erfc(z) and exp(z^2) separately overflow, which is what
// the propagator needs at large |Im z|.

#include "escape/types.hpp"

namespace escape {

// erfc(z). Relative accuracy ~1e-13 for |z| <= 30 wherever the value is
// representable in double precision. Throws std::domain_error on NaN/Inf.
ComplexAmplitude erfc_complex(ComplexAmplitude z);

// exp(z^2) erfc(z), evaluated without intermediate overflow; |Im z| may be
// as large as 1e4 and beyond. Throws std::domain_error on NaN/Inf.
ComplexAmplitude erfcx_scaled(ComplexAmplitude z);

}  // namespace escape
