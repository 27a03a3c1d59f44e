#pragma once

#include <string>
#include <vector>

#include "frale/analyze.hpp"
#include "frale/simulate.hpp"

namespace frale {

/// Round-trip decimal formatting (17 significant digits), shared by every
/// writer so identical data always produces identical bytes.
std::string format_double(double v);

/// Sample path CSV: '#'-prefixed metadata lines, then a `t,value` table.
std::string sample_path_csv(const SamplePath& path);

/// quantity,analytic,empirical,stderr rows; a divergent analytic side is
/// spelled "divergent".
struct ReportRow {
    std::string quantity;
    bool analytic_divergent = false;
    double analytic = 0.0;
    double empirical = 0.0;
    double se = 0.0;
};
std::string report_csv(const std::vector<ReportRow>& rows);

/// Minimal self-contained polyline plot; a pure function of the data series.
std::string svg_line_plot(const std::vector<double>& x,
                          const std::vector<std::vector<double>>& series, int width = 640,
                          int height = 400);

void write_file(const std::string& path, const std::string& content);

} // namespace frale
