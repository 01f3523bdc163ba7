#include "arcopuc/params.hpp"

#include <cctype>

namespace arcopuc {

Rational parse_rational(const std::string& text) {
    std::size_t slash = text.find('/');
    try {
        std::size_t used = 0;
        const std::int64_t num = std::stoll(text.substr(0, slash), &used);
        if (slash == std::string::npos) {
            if (used != text.size()) throw std::invalid_argument(text);
            return Rational(num);
        }
        if (used != slash) throw std::invalid_argument(text);
        const std::string dstr = text.substr(slash + 1);
        const std::int64_t den = std::stoll(dstr, &used);
        if (used != dstr.size()) throw std::invalid_argument(text);
        return Rational(num, den);
    } catch (const Error&) {
        throw;
    } catch (const std::exception&) {
        raise(errc::domain_error, "malformed rational '" + text + "'");
    }
}

ExtensionParams make_params(const Rational& b, int M, int N) {
    if (b.num <= b.den) raise(errc::period_too_small, "b must exceed 1, got " + b.str());
    if (M < 1) raise(errc::dimension_order, "M must be positive");
    if (N % 2 == 0) raise(errc::n_odd_required, "N must be odd, got " + std::to_string(N));
    if (M > N) raise(errc::dimension_order, "M <= N required");
    // m = N b must be an exact integer: q | N p
    const std::int64_t np = static_cast<std::int64_t>(N) * b.num;
    if (np % b.den != 0) raise(errc::non_integer_m, "N b not an integer for b = " + b.str());

    ExtensionParams p;
    p.b = b;
    p.M = M;
    p.N = N;
    p.m = static_cast<int>(np / b.den);
    p.alpha = ddc::pi.to_double() * static_cast<double>(b.den) / static_cast<double>(b.num);
    p.xi = static_cast<double>(p.m) / static_cast<double>(M);
    p.xi_tilde = static_cast<double>(N) / static_cast<double>(M);
    p.M0 = t_window_min(M);
    return p;
}

DD lattice_angle_dd(const ExtensionParams& params, int j) {
    // theta_j = (2 pi / m)(j - (N+1)/2); N odd makes the offset an integer
    const long long k = 2LL * j - (params.N + 1);
    return dd_muli(ddc::pi, k) / DD{static_cast<double>(params.m)};
}

ArcLattice lattice_nodes(const ExtensionParams& params) {
    ArcLattice lat;
    lat.nodes_x.reserve(params.N);
    lat.nodes_z.reserve(params.N);
    lat.angles.reserve(params.N);
    const double invN = 1.0 / static_cast<double>(params.N);
    for (int j = 1; j <= params.N; ++j) {
        lat.nodes_x.push_back(j * invN - 0.5 - 0.5 * invN);
        const DD theta = lattice_angle_dd(params, j);
        lat.angles.push_back(theta.to_double());
        lat.nodes_z.push_back(dd_cis(theta).to_complex());
    }
    return lat;
}

const char* errc_name(errc c) {
    switch (c) {
        case errc::n_odd_required: return "NOddRequired";
        case errc::non_integer_m: return "NonIntegerM";
        case errc::dimension_order: return "DimensionOrder";
        case errc::period_too_small: return "PeriodTooSmall";
        case errc::degree_too_large: return "DegreeTooLarge";
        case errc::lost_orthogonality: return "LostOrthogonality";
        case errc::form_mismatch: return "FormMismatch";
        case errc::no_band: return "NoBand";
        case errc::quadrature_failure: return "QuadratureFailure";
        case errc::out_of_domain: return "OutOfDomain";
        case errc::domain_error: return "DomainError";
        case errc::divide_by_zero: return "DivideByZero";
        case errc::on_cut: return "OnCut";
        case errc::outside_regime: return "OutsideRegime";
        case errc::outside_disc: return "OutsideDisc";
        case errc::envelope_exceeded: return "EnvelopeExceeded";
        case errc::no_root: return "NoRoot";
        case errc::bracket_failure: return "BracketFailure";
        case errc::sample_count_mismatch: return "SampleCountMismatch";
        case errc::no_envelope: return "NoEnvelope";
    }
    return "UnknownError";
}

} // namespace arcopuc
