#include "windguide/output.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <limits>
#include <optional>

namespace windguide {

std::string format_number(double value) {
    if (std::isnan(value)) return "nan";
    if (std::isinf(value)) return value > 0 ? "inf" : "-inf";
    if (value == 0.0) value = 0.0;  // drop the sign of -0
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof buf, value, std::chars_format::general, 9);
    return std::string(buf, res.ptr);
}

namespace {

std::string opt(const std::optional<double>& v) { return v ? format_number(*v) : std::string(); }

// Quote only when needed; messages may contain commas.
std::string csv_text(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c == '\n' ? ' ' : c;
    }
    return out + "\"";
}

}  // namespace

void write_trajectory_csv(std::ostream& out, const std::vector<TrajectorySample>& trajectory) {
    out << kTrajectoryHeader << '\n';
    for (const auto& s : trajectory) {
        const double fields[] = {
            s.t, s.state.v_bar, s.state.psi, s.state.gamma, s.state.x_bar, s.state.y_bar,
            s.state.h_bar, s.controls.p_bar, s.controls.cl, s.controls.mu, s.command.v_bar_c,
            s.command.psi_c, s.wind.components[kX], s.wind.components[kY], s.wind.components[kH],
            s.wind.rate[kX], s.wind.rate[kY], s.wind.rate[kH], s.wind_rates.w_v_rate,
            s.wind_rates.w_psi_rate, s.wind_rates.w_gamma_rate,
        };
        bool first = true;
        for (double f : fields) {
            if (!first) out << ',';
            out << format_number(f);
            first = false;
        }
        out << '\n';
    }
}

void write_metrics_csv(std::ostream& out, const std::vector<MetricsRow>& rows) {
    out << kMetricsHeader << '\n';
    for (const auto& r : rows) {
        const RunMetrics& m = r.metrics;
        out << csv_text(r.label) << ',' << to_string(r.kind) << ',' << format_number(m.p_bar_avg)
            << ',' << format_number(m.p_bar_heading_avg) << ',' << opt(m.benefit) << ','
            << format_number(m.max_p_rate) << ',' << format_number(m.max_cl_rate) << ','
            << format_number(m.max_mu_rate) << ',' << (m.bounds_respected ? "true" : "false")
            << ',' << m.adjustments << ',' << m.adjustments_accepted << '\n';
    }
}

void write_heading_sweep_csv(std::ostream& out, const HeadingSweepResult& reference,
                             const HeadingSweepResult& candidate) {
    out << kHeadingSweepHeader << '\n';
    const std::size_t n = std::min(reference.headings.size(), candidate.headings.size());
    for (std::size_t i = 0; i < n; ++i) {
        out << format_number(reference.headings[i] / kDegToRad) << ','
            << format_number(reference.p_bar_avg[i]) << ',' << format_number(candidate.p_bar_avg[i])
            << '\n';
    }
}

void write_frequency_sweep_csv(std::ostream& out, const std::vector<FrequencyRow>& rows) {
    out << kFrequencySweepHeader << '\n';
    for (const auto& r : rows) {
        out << format_number(r.omega_w) << ',' << opt(r.p_reference) << ',' << opt(r.p_adjusted)
            << ',' << opt(r.p_airspeed_only) << ',' << opt(r.benefit) << ','
            << opt(r.benefit_airspeed_only) << ',' << csv_text(r.error) << '\n';
    }
}

void write_benefit_plot_svg(std::ostream& out, const std::vector<FrequencyRow>& rows) {
    constexpr double width = 640, height = 420;
    constexpr double left = 70, right = 20, top = 40, bottom = 60;
    const double pw = width - left - right, ph = height - top - bottom;

    double x_lo = std::numeric_limits<double>::infinity(), x_hi = -x_lo;
    double y_lo = 0.0, y_hi = 0.0;
    for (const auto& r : rows) {
        x_lo = std::min(x_lo, r.omega_w);
        x_hi = std::max(x_hi, r.omega_w);
        for (const auto& b : {r.benefit, r.benefit_airspeed_only}) {
            if (b) {
                y_lo = std::min(y_lo, 100.0 * *b);
                y_hi = std::max(y_hi, 100.0 * *b);
            }
        }
    }
    if (!(x_hi > x_lo)) {
        x_lo = std::isfinite(x_lo) ? x_lo - 0.5 : 0.0;
        x_hi = x_lo + 1.0;
    }
    if (!(y_hi > y_lo)) y_hi = y_lo + 1.0;
    const double pad = 0.05 * (y_hi - y_lo);
    y_lo -= pad;
    y_hi += pad;

    auto px = [&](double x) { return left + (x - x_lo) / (x_hi - x_lo) * pw; };
    auto py = [&](double y) { return top + (y_hi - y) / (y_hi - y_lo) * ph; };

    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\""
        << height << "\" viewBox=\"0 0 " << width << ' ' << height << "\">\n";
    out << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
    out << "<text x=\"" << width / 2 << "\" y=\"24\" text-anchor=\"middle\" font-family=\"sans-serif\" "
           "font-size=\"15\">Relative benefit versus wind frequency</text>\n";
    out << "<rect x=\"" << left << "\" y=\"" << top << "\" width=\"" << pw << "\" height=\"" << ph
        << "\" fill=\"none\" stroke=\"black\"/>\n";

    constexpr int ticks = 5;
    for (int i = 0; i <= ticks; ++i) {
        const double xv = x_lo + (x_hi - x_lo) * i / ticks;
        const double yv = y_lo + (y_hi - y_lo) * i / ticks;
        out << "<line x1=\"" << format_number(px(xv)) << "\" y1=\"" << top + ph << "\" x2=\""
            << format_number(px(xv)) << "\" y2=\"" << top + ph + 5 << "\" stroke=\"black\"/>\n";
        out << "<text x=\"" << format_number(px(xv)) << "\" y=\"" << top + ph + 20
            << "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"11\">"
            << format_number(std::round(xv * 1e4) / 1e4) << "</text>\n";
        out << "<line x1=\"" << left - 5 << "\" y1=\"" << format_number(py(yv)) << "\" x2=\"" << left
            << "\" y2=\"" << format_number(py(yv)) << "\" stroke=\"black\"/>\n";
        out << "<text x=\"" << left - 8 << "\" y=\"" << format_number(py(yv) + 4)
            << "\" text-anchor=\"end\" font-family=\"sans-serif\" font-size=\"11\">"
            << format_number(std::round(yv * 100.0) / 100.0) << "</text>\n";
    }
    if (y_lo < 0.0 && y_hi > 0.0) {
        out << "<line x1=\"" << left << "\" y1=\"" << format_number(py(0.0)) << "\" x2=\""
            << left + pw << "\" y2=\"" << format_number(py(0.0))
            << "\" stroke=\"#999\" stroke-dasharray=\"2,2\"/>\n";
    }
    out << "<text x=\"" << left + pw / 2 << "\" y=\"" << height - 15
        << "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"12\">"
           "wind spatial frequency omega_w [rad/ft]</text>\n";
    out << "<text x=\"18\" y=\"" << top + ph / 2 << "\" transform=\"rotate(-90 18 " << top + ph / 2
        << ")\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"12\">"
           "relative benefit [%]</text>\n";

    auto polyline = [&](auto getter, const char* dash) {
        std::string pts;
        for (const auto& r : rows) {
            const std::optional<double> b = getter(r);
            if (!b) continue;
            pts += format_number(px(r.omega_w)) + "," + format_number(py(100.0 * *b)) + " ";
        }
        if (pts.empty()) return;
        out << "<polyline fill=\"none\" stroke=\"black\" stroke-width=\"1.5\"" << dash
            << " points=\"" << pts << "\"/>\n";
    };
    polyline([](const FrequencyRow& r) { return r.benefit; }, "");
    polyline([](const FrequencyRow& r) { return r.benefit_airspeed_only; },
             " stroke-dasharray=\"6,4\"");

    const double lx = left + pw - 190, ly = top + 15;
    out << "<line x1=\"" << lx << "\" y1=\"" << ly << "\" x2=\"" << lx + 30 << "\" y2=\"" << ly
        << "\" stroke=\"black\" stroke-width=\"1.5\"/>\n";
    out << "<text x=\"" << lx + 36 << "\" y=\"" << ly + 4
        << "\" font-family=\"sans-serif\" font-size=\"11\">airspeed and heading</text>\n";
    out << "<line x1=\"" << lx << "\" y1=\"" << ly + 16 << "\" x2=\"" << lx + 30 << "\" y2=\""
        << ly + 16 << "\" stroke=\"black\" stroke-width=\"1.5\" stroke-dasharray=\"6,4\"/>\n";
    out << "<text x=\"" << lx + 36 << "\" y=\"" << ly + 20
        << "\" font-family=\"sans-serif\" font-size=\"11\">airspeed only</text>\n";
    out << "</svg>\n";
}

}  // namespace windguide
