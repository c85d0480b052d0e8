#include "cvpk/serialize.hpp"

#include <cmath>
#include <cstdio>

#include "cvpk/version.hpp"

namespace cvpk {

double round_sig(double x, int digits) {
    if (x == 0.0 || !std::isfinite(x)) return x;
    const double mag = std::pow(10.0, digits - 1 - int(std::floor(std::log10(std::fabs(x)))));
    return std::round(x * mag) / mag;
}

std::string format_fixed(double x, int decimals) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*f", decimals, x);
    return buf;
}

std::uint64_t fnv1a64(std::string_view payload) {
    std::uint64_t h = 0xcbf29ce484222325ull;
    for (unsigned char ch : payload) {
        h ^= ch;
        h *= 0x100000001b3ull;
    }
    return h;
}

std::string digest_hex(std::string_view payload) {
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(fnv1a64(payload)));
    return buf;
}

json manifest_json(const RunManifest& m) {
    return json{{"command", m.command},
                {"params", m.params},
                {"version", m.version.empty() ? kVersion : m.version},
                {"digest", m.digest}};
}

std::string kernel_text(const Kernel& k) {
    std::string out;
    for (int r = 0; r < k.n; ++r) {
        out += k.matrix.row_string(std::size_t(r));
        out += '\n';
    }
    return out;
}

json kernel_json(const Kernel& k) {
    json rows = json::array();
    for (int r = 0; r < k.n; ++r) rows.push_back(k.matrix.row_string(std::size_t(r)));
    return json{{"n", k.n}, {"family", family_name(k.family)}, {"rows", rows}};
}

json subspace_json(const Subspace3& s) {
    json members = json::array();
    for (const std::string& v : s.member_strings()) members.push_back(v);
    return members;
}

json weight_enum_json(const WeightEnum& p) {
    json coeffs = json::array();
    for (const std::string& c : p.coeff_strings()) coeffs.push_back(c);
    return coeffs;
}

json gpb_json(const Gpb& g) {
    json phases = json::array();
    for (const GpbRow& row : g.rows) {
        json boxes = json::array();
        for (const WeightEnum& p : row) boxes.push_back(weight_enum_json(p));
        phases.push_back(std::move(boxes));
    }
    return json{{"n", g.n}, {"phases", phases}};
}

json pb_json(const Pb& p) {
    json phases = json::array();
    for (const WeightEnum& poly : p.polys) phases.push_back(weight_enum_json(poly));
    return json{{"n", p.n},
                {"family", family_name(p.family)},
                {"source", p.source},
                {"phases", phases}};
}

std::string pb_csv(const Pb& p) {
    std::string out = "phase,weight,count\n";
    for (int phase = 0; phase < p.n; ++phase) {
        const WeightEnum& poly = p.polys[std::size_t(phase)];
        for (int w = 0; w <= poly.degree(); ++w) {
            if (poly.coeff(w) == 0) continue;
            out += std::to_string(phase);
            out += ',';
            out += std::to_string(w);
            out += ',';
            out += poly.coeff(w).get_str();
            out += '\n';
        }
    }
    return out;
}

json scaling_json(const Pb& pb, const ScalingConfig& cfg, const ScalingResult& res) {
    return json{{"n", pb.n},
                {"family", family_name(pb.family)},
                {"mu", round_sig(res.mu)},
                {"lambda", round_sig(res.lambda)},
                {"iters", res.iters_used},
                {"converged", res.converged},
                {"grid", cfg.grid_size},
                {"tol", cfg.tol}};
}

std::string profile_text(const PartialDistanceProfile& profile) {
    std::string out = "d =";
    for (int d : profile.d) {
        out += ' ';
        out += std::to_string(d);
    }
    out += "; E = ";
    out += format_fixed(profile.E, 5);
    return out;
}

std::string profile_csv(const PartialDistanceProfile& profile) {
    std::string out = "phase,d\n";
    for (std::size_t i = 0; i < profile.d.size(); ++i)
        out += std::to_string(i) + ',' + std::to_string(profile.d[i]) + '\n';
    out += "E," + format_fixed(profile.E, 5) + '\n';
    return out;
}

}  // namespace cvpk
