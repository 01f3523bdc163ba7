#ifndef ARCOPUC_AIRY_HPP
#define ARCOPUC_AIRY_HPP

#include <complex>

namespace arcopuc {

struct AiryValues {
    std::complex<double> Ai, Bi, Aip, Bip;
};

/// Ai, Bi and derivatives together. Maclaurin series at double-word
/// precision for |z| <= 8 (the cancellation there exceeds what native
/// arithmetic survives), asymptotic expansions with sector rotation beyond.
/// Envelope |z| <= 30; throws envelope_exceeded outside.
AiryValues airy(std::complex<double> z);

/// Stateless handle bundling the special functions the asymptotic formulas
/// need.
struct SpecialFnTable {
    AiryValues airy(std::complex<double> z) const { return arcopuc::airy(z); }
    double log_gamma(double x) const;
};

} // namespace arcopuc

#endif
