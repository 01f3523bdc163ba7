#ifndef ARCOPUC_ERRORS_HPP
#define ARCOPUC_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace arcopuc {

enum class errc {
    n_odd_required,
    non_integer_m,
    dimension_order,
    period_too_small,
    degree_too_large,
    lost_orthogonality,
    form_mismatch,
    no_band,
    quadrature_failure,
    out_of_domain,
    domain_error,
    divide_by_zero,
    on_cut,
    outside_regime,
    outside_disc,
    envelope_exceeded,
    no_root,
    bracket_failure,
    sample_count_mismatch,
    no_envelope,
};

const char* errc_name(errc c);

/// Library error carrying a machine-readable code alongside the message.
class Error : public std::runtime_error {
public:
    Error(errc code, const std::string& what)
        : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}
    errc code() const noexcept { return code_; }

private:
    errc code_;
};

[[noreturn]] inline void raise(errc code, const std::string& what) { throw Error(code, what); }

} // namespace arcopuc

#endif
