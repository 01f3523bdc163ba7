#include "arcopuc/jsonio.hpp"

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "arcopuc/errors.hpp"

namespace arcopuc {

namespace {

std::string hexf(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%a", v);
    return buf;
}

double unhexf(const std::string& s) { return std::strtod(s.c_str(), nullptr); }

nlohmann::json dd_json(const DD& v) { return {hexf(v.hi), hexf(v.lo)}; }

DD dd_from(const nlohmann::json& j) { return {unhexf(j.at(0)), unhexf(j.at(1))}; }

} // namespace

std::string opuc_to_json(const OpucSystem& sys) {
    nlohmann::json j;
    j["schema"] = 1;
    j["b"] = sys.params.b.str();
    j["M"] = sys.params.M;
    j["N"] = sys.params.N;
    j["degree_max"] = sys.degree_max;
    for (int d = 1; d <= sys.degree_max; ++d) j["rho"].push_back(dd_json(sys.rho[d]));
    for (int d = 0; d <= sys.degree_max; ++d) j["h"].push_back(dd_json(sys.h[d]));
    for (int d = 0; d <= sys.degree_max; ++d) {
        nlohmann::json row;
        for (const DD& c : sys.coeffs[d]) row.push_back(dd_json(c));
        j["coeffs"].push_back(row);
    }
    return j.dump(1);
}

OpucSystem opuc_from_json(const std::string& text) {
    const nlohmann::json j = nlohmann::json::parse(text);
    if (j.at("schema").get<int>() != 1) raise(errc::domain_error, "unknown schema version");
    OpucSystem sys;
    sys.params = make_params(parse_rational(j.at("b").get<std::string>()), j.at("M").get<int>(),
                             j.at("N").get<int>());
    sys.degree_max = j.at("degree_max").get<int>();
    sys.rho.push_back(DD{0.0});
    for (const auto& r : j.at("rho")) sys.rho.push_back(dd_from(r));
    for (const auto& hh : j.at("h")) sys.h.push_back(dd_from(hh));
    for (const auto& row : j.at("coeffs")) {
        std::vector<DD> c;
        for (const auto& v : row) c.push_back(dd_from(v));
        sys.coeffs.push_back(std::move(c));
    }
    return sys;
}

std::string approx_to_json(const ExtensionApprox& approx) {
    nlohmann::json j;
    j["schema"] = 1;
    j["b"] = approx.params.b.str();
    j["M"] = approx.params.M;
    j["N"] = approx.params.N;
    j["M0"] = approx.params.M0;
    for (const auto& c : approx.coeffs_ortho) j["coeffs_ortho"].push_back({c.real(), c.imag()});
    for (int i = 0; i < static_cast<int>(approx.coeffs_fourier.size()); ++i) {
        const auto& c = approx.coeffs_fourier[i];
        j["coeffs_fourier"].push_back(
            {{"k", approx.params.M0 + i}, {"re", c.real()}, {"im", c.imag()}});
    }
    return j.dump(1);
}

std::vector<std::complex<double>> samples_from_csv(const std::string& path, int expected_n) {
    std::ifstream in(path);
    if (!in) raise(errc::domain_error, "cannot open '" + path + "'");
    std::vector<std::complex<double>> samples;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty() || line[0] == '#') continue;
        std::istringstream ss(line);
        std::string cell;
        double vals[3];
        for (int i = 0; i < 3; ++i) {
            if (!std::getline(ss, cell, ','))
                raise(errc::domain_error,
                      path + ":" + std::to_string(lineno) + ": expected 'j,Re,Im'");
            try {
                std::size_t used = 0;
                vals[i] = std::stod(cell, &used);
                while (used < cell.size() && std::isspace(static_cast<unsigned char>(cell[used]))) ++used;
                if (used != cell.size()) throw std::invalid_argument(cell);
            } catch (const std::exception&) {
                raise(errc::domain_error,
                      path + ":" + std::to_string(lineno) + ": bad number '" + cell + "'");
            }
        }
        const int j = static_cast<int>(vals[0]);
        if (j != static_cast<int>(samples.size()) + 1)
            raise(errc::domain_error,
                  path + ":" + std::to_string(lineno) + ": indices must run 1..N in order");
        samples.emplace_back(vals[1], vals[2]);
    }
    if (static_cast<int>(samples.size()) != expected_n)
        raise(errc::sample_count_mismatch, path + ": row count " + std::to_string(samples.size()) +
                                               " != N = " + std::to_string(expected_n));
    return samples;
}

void write_file_atomic(const std::string& path, const std::string& content) {
    namespace fs = std::filesystem;
    const fs::path target(path);
    fs::path tmp = target;
    tmp += ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) raise(errc::domain_error, "cannot write '" + tmp.string() + "'");
        out << content;
    }
    fs::rename(tmp, target);
}

} // namespace arcopuc
