#include "frale/io.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace frale {

std::string format_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

std::string sample_path_csv(const SamplePath& path) {
    std::ostringstream out;
    out << "# kind=" << process_name(path.meta.kind) << "\n";
    out << "# hurst=" << format_double(path.meta.hurst) << "\n";
    out << "# seed=" << path.meta.seed << "\n";
    out << "# scheme=" << scheme_name(path.meta.scheme) << "\n";
    out << "# spec_hash=" << path.meta.spec_hash << "\n";
    if (path.meta.s_trunc) out << "# s_trunc=" << format_double(*path.meta.s_trunc) << "\n";
    if (path.meta.sigma) out << "# sigma=" << format_double(*path.meta.sigma) << "\n";
    if (path.meta.epsilon) out << "# epsilon=" << format_double(*path.meta.epsilon) << "\n";
    out << "t,value\n";
    for (std::size_t i = 0; i < path.grid.size(); ++i)
        out << format_double(path.grid[i]) << "," << format_double(path.values[i]) << "\n";
    return out.str();
}

std::string report_csv(const std::vector<ReportRow>& rows) {
    std::ostringstream out;
    out << "quantity,analytic,empirical,stderr\n";
    for (const auto& r : rows) {
        out << r.quantity << ",";
        if (r.analytic_divergent)
            out << "divergent";
        else
            out << format_double(r.analytic);
        out << "," << format_double(r.empirical) << "," << format_double(r.se) << "\n";
    }
    return out.str();
}

std::string svg_line_plot(const std::vector<double>& x,
                          const std::vector<std::vector<double>>& series, int width,
                          int height) {
    if (x.size() < 2 || series.empty())
        throw std::invalid_argument("svg_line_plot: need >= 2 points and >= 1 series");
    double xmin = x.front(), xmax = x.front();
    double ymin = 0.0, ymax = 0.0;
    bool first = true;
    for (double v : x) {
        xmin = std::min(xmin, v);
        xmax = std::max(xmax, v);
    }
    for (const auto& s : series) {
        if (s.size() != x.size()) throw std::invalid_argument("svg_line_plot: ragged series");
        for (double v : s) {
            if (first) {
                ymin = ymax = v;
                first = false;
            }
            ymin = std::min(ymin, v);
            ymax = std::max(ymax, v);
        }
    }
    if (xmax == xmin) xmax = xmin + 1.0;
    if (ymax == ymin) ymax = ymin + 1.0;
    const double margin = 10.0;
    auto px = [&](double v) {
        return margin + (v - xmin) / (xmax - xmin) * (width - 2.0 * margin);
    };
    auto py = [&](double v) {
        return height - margin - (v - ymin) / (ymax - ymin) * (height - 2.0 * margin);
    };
    static const char* colors[] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd"};
    std::ostringstream out;
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\""
        << height << "\" viewBox=\"0 0 " << width << " " << height << "\">\n";
    out << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
    for (std::size_t si = 0; si < series.size(); ++si) {
        out << "<polyline fill=\"none\" stroke=\"" << colors[si % 4]
            << "\" stroke-width=\"1\" points=\"";
        for (std::size_t i = 0; i < x.size(); ++i) {
            char buf[64];
            std::snprintf(buf, sizeof(buf), "%.2f,%.2f ", px(x[i]), py(series[si][i]));
            out << buf;
        }
        out << "\"/>\n";
    }
    out << "</svg>\n";
    return out.str();
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open for writing: " + path);
    out << content;
    if (!out) throw std::runtime_error("write failed: " + path);
}

} // namespace frale
