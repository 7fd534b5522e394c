#ifndef PDARRAY_PLOT_HPP
#define PDARRAY_PLOT_HPP

#include <string>

namespace pdarray::plot {

enum class PlotKind { BetaMin, BetaFixedRho, BetaScaledRho };

struct PlotSpec {
    PlotKind kind = PlotKind::BetaMin;
    std::string title;
    int width = 880;
    int height = 560;
};

// Renders a sweep CSV as a self-contained log-log SVG line chart: one series
// per (xi, SNR) or beam group, decade grid, legend, and for the beta sweeps
// the shaded region where beta^2 >= beta_min^2. Parse problems carry the
// offending line number; nothing is written unless parsing succeeds.
void render_plot(const std::string& csv_path, const PlotSpec& spec,
                 const std::string& svg_path);

} // namespace pdarray::plot

#endif
