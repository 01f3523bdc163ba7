#include "arcopuc/opuc.hpp"

#include <algorithm>
#include <cmath>

#include "arcopuc/errors.hpp"

namespace arcopuc {

MomentTable::MomentTable(const ExtensionParams& params, int k_max) : m_(params.m) {
    c_.resize(k_max + 1);
    const int m = params.m;
    const int N = params.N;
    const DD mm{static_cast<double>(m)};
    for (int k = 0; k <= k_max; ++k) {
        if (k % m == 0) {
            c_[k] = DD{static_cast<double>(N)} / mm;
            continue;
        }
        // c_k = sin(pi k N / m) / (m sin(pi k / m)); arguments reduced mod 2m
        // exactly in integer arithmetic before multiplying by pi.
        const long long num_red = (static_cast<long long>(k) * N) % (2LL * m);
        const long long den_red = k % (2 * m);
        const DD num = dd_sin(dd_muli(ddc::pi, num_red) / mm);
        const DD den = dd_sin(dd_muli(ddc::pi, den_red) / mm);
        c_[k] = num / (mm * den);
    }
}

DD MomentTable::operator()(long long k) const {
    k = std::llabs(k) % m_;  // even symmetry + m-periodicity
    const long long idx = std::min(k, static_cast<long long>(m_) - k);
    if (idx >= static_cast<long long>(c_.size()))
        raise(errc::out_of_domain, "moment index beyond table");
    return c_[static_cast<std::size_t>(idx)];
}

MomentTable moments(const ExtensionParams& params, int k_max) { return MomentTable(params, k_max); }

namespace {

DD convolve_h(const std::vector<DD>& p, const MomentTable& c) {
    // <p, p>_m = sum_{i,k} p_i p_k c_{i-k}
    DD s{0.0};
    const int n = static_cast<int>(p.size());
    for (int i = 0; i < n; ++i)
        for (int k = 0; k < n; ++k) s += p[i] * p[k] * c(i - k);
    return s;
}

void check_degree(const OpucSystem& sys, int j) {
    if (j < 0 || j > sys.degree_max) raise(errc::degree_too_large, "degree beyond system");
}

} // namespace

OpucSystem szego_system(const ExtensionParams& params, int M_max) {
    if (M_max >= params.N)
        raise(errc::degree_too_large, "orthogonal polynomials exist only for degree < N");
    const MomentTable c(params, std::min(2 * M_max + 2, params.m));

    OpucSystem sys;
    sys.params = params;
    sys.degree_max = M_max;
    sys.coeffs.reserve(M_max + 1);
    sys.coeffs.push_back({DD{1.0}});
    sys.rho.assign(1, DD{0.0});
    sys.h.push_back(c(0));
    for (int j = 0; j < M_max; ++j) {
        const std::vector<DD>& p = sys.coeffs[j];
        DD num{0.0}, den{0.0};
        for (int i = 0; i <= j; ++i) {
            num += p[i] * c(i + 1);   // <z p_j, 1>
            den += p[i] * c(j - i);   // <p_j^*, 1>
        }
        const DD rho = num / den;
        if (!(std::abs(rho.to_double()) < 1.0))
            raise(errc::lost_orthogonality,
                  "|rho_" + std::to_string(j + 1) + "| >= 1; precision exhausted");
        std::vector<DD> next(j + 2);
        next[0] = -(rho * p[j]);
        for (int i = 1; i <= j + 1; ++i) {
            next[i] = p[i - 1];
            if (j - i >= 0) next[i] -= rho * p[j - i];
        }
        sys.coeffs.push_back(std::move(next));
        sys.rho.push_back(rho);
        const DD hj = convolve_h(sys.coeffs.back(), c);
        if (!(hj.to_double() > 0.0))
            raise(errc::lost_orthogonality, "norm h_" + std::to_string(j + 1) + " not positive");
        sys.h.push_back(hj);
    }
    return sys;
}

OpucSystem gram_schmidt_oracle(const ExtensionParams& params, int M_max) {
    if (M_max > 20) raise(errc::degree_too_large, "Gram-Schmidt oracle limited to degree 20");
    if (M_max >= params.N) raise(errc::degree_too_large, "degree must stay below N");

    const int N = params.N;
    std::vector<DDComplex> nodes(N);
    for (int j = 1; j <= N; ++j) nodes[j - 1] = dd_cis(lattice_angle_dd(params, j));
    const DD inv_m = DD{1.0} / DD{static_cast<double>(params.m)};

    // vals[k][node] caches p_k at the lattice
    std::vector<std::vector<DDComplex>> vals;
    OpucSystem sys;
    sys.params = params;
    sys.degree_max = M_max;
    sys.coeffs.push_back({DD{1.0}});
    sys.rho.assign(1, DD{0.0});
    vals.push_back(std::vector<DDComplex>(N, DDComplex{DD{1.0}}));
    auto norm_of = [&](const std::vector<DDComplex>& v) {
        DD s{0.0};
        for (const auto& x : v) s += norm2(x);
        return s * inv_m;
    };
    sys.h.push_back(norm_of(vals[0]));

    std::vector<DDComplex> zpow(N, DDComplex{DD{1.0}});
    for (int j = 1; j <= M_max; ++j) {
        for (int t = 0; t < N; ++t) zpow[t] = zpow[t] * nodes[t];
        std::vector<DD> coeff(j + 1, DD{0.0});
        coeff[j] = DD{1.0};
        std::vector<DDComplex> val = zpow;
        // classical Gram-Schmidt with one reorthogonalization sweep; a single
        // pass loses orthogonality like the squared condition number
        for (int pass = 0; pass < 2; ++pass) {
            for (int k = 0; k < j; ++k) {
                // <residual, p_k>_m; real because coefficients and the
                // lattice are conjugation-symmetric
                DDComplex ip{DD{0.0}, DD{0.0}};
                for (int t = 0; t < N; ++t) ip = ip + val[t] * conj(vals[k][t]);
                const DD proj = (ip.re * inv_m) / sys.h[k];
                for (int i = 0; i <= k; ++i) coeff[i] -= proj * sys.coeffs[k][i];
                for (int t = 0; t < N; ++t) val[t] = val[t] - proj * vals[k][t];
            }
        }
        sys.coeffs.push_back(std::move(coeff));
        vals.push_back(std::move(val));
        const DD hj = norm_of(vals.back());
        if (!(hj.to_double() > 0.0))
            raise(errc::lost_orthogonality, "Gram-Schmidt norm not positive at degree " + std::to_string(j));
        sys.h.push_back(hj);
        sys.rho.push_back(-sys.coeffs[j][0]);
    }
    return sys;
}

DDComplex eval_monic_dd(const OpucSystem& sys, int j, const DDComplex& z) {
    check_degree(sys, j);
    const std::vector<DD>& p = sys.coeffs[j];
    DDComplex acc{p[j]};
    for (int i = j - 1; i >= 0; --i) acc = acc * z + DDComplex{p[i]};
    return acc;
}

EvalResult eval_monic(const OpucSystem& sys, int j, std::complex<double> z) {
    const DDComplex v = eval_monic_dd(sys, j, DDComplex{DD{z.real()}, DD{z.imag()}});
    const double a2 = norm2(v).to_double();
    return {v.to_complex(), 0.5 * std::log(a2)};
}

std::vector<DD> reverse_poly(const OpucSystem& sys, int j) {
    check_degree(sys, j);
    std::vector<DD> r(sys.coeffs[j].rbegin(), sys.coeffs[j].rend());
    return r;
}

DDComplex normalized_phi_dd(const OpucSystem& sys, int j, const DDComplex& z) {
    check_degree(sys, j);
    const DD scale = dd_sqrt(DD{sys.params.b.value()} * sys.h[j]);
    const DDComplex v = eval_monic_dd(sys, j, z);
    return {v.re / scale, v.im / scale};
}

std::complex<double> normalized_phi(const OpucSystem& sys, int j, std::complex<double> z) {
    return normalized_phi_dd(sys, j, DDComplex{DD{z.real()}, DD{z.imag()}}).to_complex();
}

namespace {

DDComplex eval_coeffs(const std::vector<DD>& p, const DDComplex& z) {
    DDComplex acc{p.back()};
    for (int i = static_cast<int>(p.size()) - 2; i >= 0; --i) acc = acc * z + DDComplex{p[i]};
    return acc;
}

/// z^k for a unimodular lattice node given by its DD angle; k may be negative.
DDComplex node_power(const DD& theta, long long k) { return dd_cis(dd_muli(theta, k)); }

} // namespace

KernelValue cd_kernel(const OpucSystem& sys, int n, int M, std::complex<double> w) {
    check_degree(sys, M);
    const ExtensionParams& pr = sys.params;
    const DDComplex wd{DD{w.real()}, DD{w.imag()}};
    const DD inv_m = DD{1.0} / DD{static_cast<double>(pr.m)};

    // double-sum form: sum_{j<M} p_j(w)/h_j * (1/m) sum_z conj(p_j(z)) z^n
    DDComplex direct{DD{0.0}, DD{0.0}};
    {
        std::vector<DDComplex> inner(M, DDComplex{DD{0.0}, DD{0.0}});
        for (int t = 1; t <= pr.N; ++t) {
            const DD theta = lattice_angle_dd(pr, t);
            const DDComplex z = dd_cis(theta);
            const DDComplex zn = node_power(theta, n);
            for (int j = 0; j < M; ++j)
                inner[j] = inner[j] + conj(eval_coeffs(sys.coeffs[j], z)) * zn;
        }
        for (int j = 0; j < M; ++j)
            direct = direct + DDComplex{inv_m / sys.h[j]} * inner[j] * eval_coeffs(sys.coeffs[j], wd);
    }

    // Christoffel-Darboux form; unusable when w collides with a node
    bool at_node = false;
    for (int t = 1; t <= pr.N && !at_node; ++t) {
        const DD theta = lattice_angle_dd(pr, t);
        if (std::abs(dd_cis(theta).to_complex() - w) < 1e-8) at_node = true;
    }
    KernelValue out;
    out.n = n;
    out.M = M;
    out.w = w;
    if (at_node) {
        out.value = direct.to_complex();
        return out;
    }
    const std::vector<DD> pM = sys.coeffs[M];
    const std::vector<DD> pMs = reverse_poly(sys, M);
    const DDComplex pMw = eval_coeffs(pM, wd);
    const DDComplex pMsw = eval_coeffs(pMs, wd);
    DDComplex cd{DD{0.0}, DD{0.0}};
    for (int t = 1; t <= pr.N; ++t) {
        const DD theta = lattice_angle_dd(pr, t);
        const DDComplex z = dd_cis(theta);
        const DDComplex znm = node_power(theta, n - M);
        const DDComplex num = eval_coeffs(pM, z) * pMsw - eval_coeffs(pMs, z) * pMw;
        const DDComplex den = DDComplex{DD{1.0}} - conj(z) * wd;
        cd = cd + znm * (num / den);
    }
    cd = DDComplex{inv_m / sys.h[M]} * cd;

    const std::complex<double> v1 = direct.to_complex();
    const std::complex<double> v2 = cd.to_complex();
    // the alarm scale includes the unit monomial so a genuinely vanishing
    // kernel compared at roundoff dust does not trip it
    const double scale = std::max({std::abs(v1), std::abs(v2), 1.0});
    if (std::abs(v1 - v2) > 1e-12 * scale)
        raise(errc::form_mismatch, "kernel double-sum and CD forms disagree");
    out.value = v2;
    return out;
}

std::complex<double> error_term_B(const OpucSystem& sys, int k, double x) {
    if (std::abs(x) > 0.5 + 1e-14) raise(errc::out_of_domain, "x outside [-1/2, 1/2]");
    const ExtensionParams& pr = sys.params;
    const int M = pr.M;
    check_degree(sys, M - 1);
    const int n = k - pr.M0;
    const DD theta = ddc::two_pi * DD{x} / DD{pr.b.value()};
    const DDComplex w = dd_cis(theta);
    const DDComplex wn = dd_cis(dd_muli(theta, n));

    // projection form (1/N) sum_l phi_l(w) sum_j z_j^n conj(phi_l(z_j))
    DDComplex proj{DD{0.0}, DD{0.0}};
    {
        const DD inv_N = DD{1.0} / DD{static_cast<double>(pr.N)};
        std::vector<DDComplex> inner(M, DDComplex{DD{0.0}, DD{0.0}});
        for (int t = 1; t <= pr.N; ++t) {
            const DD th = lattice_angle_dd(pr, t);
            const DDComplex z = dd_cis(th);
            const DDComplex zn = node_power(th, n);
            for (int l = 0; l < M; ++l) inner[l] = inner[l] + zn * conj(normalized_phi_dd(sys, l, z));
        }
        for (int l = 0; l < M; ++l)
            proj = proj + DDComplex{inv_N} * inner[l] * normalized_phi_dd(sys, l, w);
    }
    const std::complex<double> direct = (wn - proj).to_complex();

    const KernelValue kv = cd_kernel(sys, n, M, w.to_complex());
    const std::complex<double> via_kernel = wn.to_complex() - kv.value;
    // B is a difference against w^n (unit modulus): that sets the roundoff
    // floor of both paths, so it joins the comparison scale
    const double scale = std::max({std::abs(direct), std::abs(via_kernel), 1.0, std::abs(kv.value)});
    if (std::abs(direct - via_kernel) > 1e-12 * scale)
        raise(errc::form_mismatch, "B^k projection and kernel forms disagree");
    return via_kernel;
}

std::complex<double> error_term_B_tail(const OpucSystem& sys, int k, double x) {
    const ExtensionParams& pr = sys.params;
    const int n = k - pr.M0;
    if (n < 0 || n > sys.degree_max)
        raise(errc::degree_too_large, "tail expansion needs degrees up to k - M0");
    const DD theta = ddc::two_pi * DD{x} / DD{pr.b.value()};
    const DDComplex w = dd_cis(theta);
    const std::vector<DD> row = expansion_row(sys, n);
    DDComplex acc{DD{0.0}, DD{0.0}};
    for (int j = pr.M; j <= n; ++j) acc = acc + DDComplex{row[j]} * eval_monic_dd(sys, j, w);
    return acc.to_complex();
}

RQuantities r_quantities(const OpucSystem& sys, int M, int k) {
    check_degree(sys, M);
    const ExtensionParams& pr = sys.params;
    const std::vector<DD> pM = sys.coeffs[M];
    const std::vector<DD> pMs = reverse_poly(sys, M);
    DDComplex r{DD{0.0}, DD{0.0}}, rs{DD{0.0}, DD{0.0}};
    for (int t = 1; t <= pr.N; ++t) {
        const DD theta = lattice_angle_dd(pr, t);
        const DDComplex z = dd_cis(theta);
        const DDComplex zk = node_power(theta, k);
        r = r + zk * eval_coeffs(pM, z);
        rs = rs + zk * eval_coeffs(pMs, z);
    }
    const DD inv_m = DD{1.0} / DD{static_cast<double>(pr.m)};
    return {r.re * inv_m, rs.re * inv_m};
}

std::vector<DD> expansion_row(const OpucSystem& sys, int n) {
    check_degree(sys, n);
    std::vector<DD> x(n + 1, DD{0.0});
    x[n] = DD{1.0};
    for (int i = n - 1; i >= 0; --i) {
        DD s{0.0};
        for (int j = i + 1; j <= n; ++j) s += x[j] * sys.coeffs[j][i];
        x[i] = -s;
    }
    return x;
}

DD expansion_coeff(const OpucSystem& sys, int n, int j) {
    if (j < 0 || j > n) raise(errc::out_of_domain, "need 0 <= j <= n");
    return expansion_row(sys, n)[j];
}

} // namespace arcopuc
