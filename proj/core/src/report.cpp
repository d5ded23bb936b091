#include "resolvent/report.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>

namespace resolvent {

std::string format_double(double v) {
    if (!std::isfinite(v)) return "null";
    if (v == 0.0) return "0.0";  // collapse -0.0
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    std::string s(buf);
    // Keep an explicit decimal point so the CSV/JSON value reads as a float.
    if (s.find('.') == std::string::npos && s.find('e') == std::string::npos &&
        s.find("inf") == std::string::npos && s.find("nan") == std::string::npos)
        s += ".0";
    return s;
}

namespace {

// Bare integer when the denominator is 1, quoted "p/q" otherwise.
std::string json_rational(const Rational& r) {
    if (r.get_den() == 1) return r.get_num().get_str();
    return "\"" + r.get_str() + "\"";
}

std::string json_poly(const RatPoly& p) {
    std::string out = "[";
    for (size_t i = 0; i < p.coeffs().size(); ++i) {
        if (i) out += ",";
        out += json_rational(p.coeffs()[i]);
    }
    return out + "]";
}

std::string json_complex(const Complex& z) {
    return "{\"re\":" + format_double(z.real()) + ",\"im\":" + format_double(z.imag()) + "}";
}

}  // namespace

std::string ode_to_json(const ResolventODE& ode) {
    std::string out = "{\"order\":" + std::to_string(ode.order);
    out += ",\"shift\":" + json_rational(ode.shift);
    out += ",\"coefficients\":[";
    for (int j = ode.order; j >= 0; --j) {
        if (j != ode.order) out += ",";
        out += json_poly(ode.coeffs[j]);
    }
    return out + "]}";
}

std::string report_to_json(const RunReport& rep) {
    std::ostringstream os;
    os << "{\"input\":{\"degree\":" << (rep.input_coeffs.size() - 1) << ",\"coefficients\":[";
    for (size_t i = 0; i < rep.input_coeffs.size(); ++i) {
        if (i) os << ",";
        os << json_rational(rep.input_coeffs[i]);
    }
    os << "]},";

    os << "\"normalization\":{\"factor\":" << json_rational(rep.normalized.factor)
       << ",\"applied\":" << (rep.normalization_applied ? "true" : "false") << "},";

    os << "\"resolvent\":";
    if (rep.ode) {
        const auto& ode = *rep.ode;
        os << "{\"order\":" << ode.order << ",\"shift\":" << json_rational(ode.shift)
           << ",\"coefficients_s\":[";
        for (int j = ode.order; j >= 0; --j) {
            if (j != ode.order) os << ",";
            os << json_poly(ode.coeffs[j]);
        }
        os << "],\"homogeneous\":" << (ode.homogeneous() ? "true" : "false") << "},";
    } else {
        os << "null,";
    }

    os << "\"branches\":[";
    for (size_t i = 0; i < rep.branches.size(); ++i) {
        const auto& br = rep.branches[i];
        if (i) os << ",";
        os << "{\"id\":" << br.branch.id << ",\"seed\":" << json_complex(br.branch.seed)
           << ",\"terms\":" << (br.branch.coeffs.empty() ? 0 : br.branch.coeffs.size() - 1)
           << ",\"radius_estimate\":" << format_double(br.branch.radius_estimate)
           << ",\"scale_e\":" << format_double(br.branch.scale) << ",\"root\":";
        if (br.root) os << json_complex(*br.root);
        else os << "null";
        os << ",\"residual\":" << format_double(br.residual) << ",\"status\":\""
           << to_string(br.branch.status) << "\"}";
    }
    os << "],";

    os << "\"oracle\":";
    if (rep.oracle) {
        os << "{\"roots\":[";
        for (size_t i = 0; i < rep.oracle->roots.size(); ++i) {
            if (i) os << ",";
            os << json_complex(rep.oracle->roots[i].value);
        }
        os << "],\"max_match_distance\":" << format_double(rep.oracle->max_match_distance)
           << "},";
    } else {
        os << "null,";
    }

    os << "\"exit_status\":" << rep.exit_status << "}";
    return os.str();
}

std::string coeffs_to_csv(const RunReport& rep) {
    std::string out = "branch_id,i,re,im\n";
    for (const auto& br : rep.branches) {
        for (size_t i = 0; i < br.raw_coeffs.size(); ++i) {
            out += std::to_string(br.branch.id) + "," + std::to_string(i) + "," +
                   format_double(br.raw_coeffs[i].real()) + "," +
                   format_double(br.raw_coeffs[i].imag()) + "\n";
        }
    }
    return out;
}

std::string report_to_text(const RunReport& rep) {
    std::ostringstream os;
    os << "degree " << rep.input_coeffs.size() - 1 << " instance";
    if (rep.normalization_applied)
        os << " (normalized by " << rep.normalized.factor.get_str() << ")";
    os << "\n";
    if (rep.ode) {
        os << "resolvent order " << rep.ode->order << ", shift "
           << rep.ode->shift.get_str() << ":";
        for (int j = rep.ode->order; j >= 0; --j) {
            os << " [" << rep.ode->coeffs[j].str() << "]";
            if (j) os << " y^(" << j << ") +";
            else os << " y = 0";
        }
        os << "\n";
    }
    for (const auto& br : rep.branches) {
        os << "branch " << br.branch.id << ": seed (" << format_double(br.branch.seed.real())
           << ", " << format_double(br.branch.seed.imag()) << ") status "
           << to_string(br.branch.status);
        if (br.root)
            os << " root (" << format_double(br.root->real()) << ", "
               << format_double(br.root->imag()) << ") residual "
               << format_double(br.residual);
        if (std::isfinite(br.branch.radius_estimate))
            os << " radius~" << format_double(br.branch.radius_estimate);
        os << "\n";
    }
    if (rep.oracle)
        os << "oracle: " << rep.oracle->roots.size() << " roots, max match distance "
           << format_double(rep.oracle->max_match_distance) << "\n";
    if (!rep.diagnostic.empty()) os << "diagnostic: " << rep.diagnostic << "\n";
    os << "exit status " << rep.exit_status << " (" << format_double(rep.elapsed_ms)
       << " ms)\n";
    return os.str();
}

}  // namespace resolvent
