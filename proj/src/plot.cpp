#include "pdarray/plot.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <map>
#include <sstream>
#include <stdexcept>
#include <vector>

#include "pdarray/format.hpp"

namespace pdarray::plot {

namespace {

struct Csv {
    std::vector<std::string> header;
    std::vector<std::vector<std::string>> rows;

    std::size_t column(const std::string& name) const {
        for (std::size_t i = 0; i < header.size(); ++i)
            if (header[i] == name) return i;
        throw std::runtime_error("plot: column '" + name + "' not found in CSV");
    }
};

std::vector<std::string> split(const std::string& line) {
    std::vector<std::string> out;
    std::string cell;
    std::istringstream ss(line);
    while (std::getline(ss, cell, ',')) out.push_back(cell);
    if (!line.empty() && line.back() == ',') out.emplace_back();
    return out;
}

Csv read_csv(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("plot: cannot open " + path);
    Csv csv;
    std::string line;
    long lineNo = 0;
    while (std::getline(in, line)) {
        ++lineNo;
        if (line.empty()) continue;
        auto cells = split(line);
        if (csv.header.empty()) {
            csv.header = std::move(cells);
            continue;
        }
        if (cells.size() != csv.header.size())
            throw std::runtime_error("plot: csv parse error at line " + std::to_string(lineNo) +
                                     ": expected " + std::to_string(csv.header.size()) +
                                     " columns, got " + std::to_string(cells.size()));
        csv.rows.push_back(std::move(cells));
    }
    if (csv.header.empty()) throw std::runtime_error("plot: " + path + " is empty");
    if (csv.rows.empty()) throw std::runtime_error("plot: " + path + " has no data rows");
    return csv;
}

double parse_double(const std::string& cell, std::size_t rowIndex) {
    char* end = nullptr;
    const double v = std::strtod(cell.c_str(), &end);
    if (end == cell.c_str() || *end != '\0')
        throw std::runtime_error("plot: csv parse error at line " + std::to_string(rowIndex + 2) +
                                 ": bad number '" + cell + "'");
    return v;
}

struct Series {
    std::string label;
    std::vector<std::pair<double, double>> points; // (x, y), y > 0
};

constexpr const char* kPalette[] = {"#1f6fb4", "#d1352b", "#2e8b57", "#9467bd",
                                    "#e58b00", "#17becf", "#8c564b", "#444444"};

struct LogScale {
    double lo = 0.0, hi = 1.0; // log10 endpoints
    double pix0 = 0.0, pix1 = 1.0;
    double map(double v) const {
        const double t = (std::log10(v) - lo) / (hi - lo);
        return pix0 + t * (pix1 - pix0);
    }
};

std::string svg_polyline(const std::vector<std::pair<double, double>>& pts,
                         const LogScale& xs, const LogScale& ys, const std::string& color) {
    std::string out = "<polyline fill=\"none\" stroke=\"" + color +
                      "\" stroke-width=\"1.8\" points=\"";
    for (const auto& [x, y] : pts)
        out += format::number(xs.map(x)) + "," + format::number(ys.map(y)) + " ";
    out += "\"/>\n";
    return out;
}

} // namespace

void render_plot(const std::string& csv_path, const PlotSpec& spec,
                 const std::string& svg_path) {
    const Csv csv = read_csv(csv_path);

    const bool betamin = spec.kind == PlotKind::BetaMin;
    const std::size_t xCol = csv.column("M");
    const std::size_t yCol = csv.column(betamin ? "beta_min_sq" : "beta_sq");

    std::map<std::string, Series> seriesMap;
    std::map<double, double> shade; // M -> beta_min_sq (beta sweeps only)

    for (std::size_t i = 0; i < csv.rows.size(); ++i) {
        const auto& row = csv.rows[i];
        const double x = parse_double(row[xCol], i);
        const double y = parse_double(row[yCol], i);
        std::string key;
        if (betamin)
            key = "xi=" + row[csv.column("xi")] + ", " + row[csv.column("gamma_star_db")] + " dB";
        else
            key = row[csv.column("beam")];
        auto& series = seriesMap[key];
        series.label = key;
        if (y > 0.0) series.points.emplace_back(x, y);
        if (!betamin) shade[x] = parse_double(row[csv.column("beta_min_sq")], i);
    }

    double xmin = 1e300, xmax = -1e300, ymin = 1e300, ymax = -1e300;
    for (auto& [key, series] : seriesMap) {
        std::sort(series.points.begin(), series.points.end());
        for (const auto& [x, y] : series.points) {
            xmin = std::min(xmin, x);
            xmax = std::max(xmax, x);
            ymin = std::min(ymin, y);
            ymax = std::max(ymax, y);
        }
    }
    if (!(xmin > 0.0) || !(ymin > 0.0) || xmin > xmax)
        throw std::runtime_error("plot: no positive data to draw on log axes");
    if (xmax == xmin) xmax = xmin * 10.0;

    const double marginL = 70, marginR = 16, marginT = 36, marginB = 52;
    LogScale xs{std::floor(std::log10(xmin)), std::ceil(std::log10(xmax) + 1e-12), marginL,
                spec.width - marginR};
    LogScale ys{std::floor(std::log10(ymin)), std::ceil(std::log10(ymax) + 1e-12),
                spec.height - marginB, marginT};
    if (ys.lo == ys.hi) ys.hi += 1.0;
    if (xs.lo == xs.hi) xs.hi += 1.0;

    std::string body;
    body += "<rect x=\"0\" y=\"0\" width=\"" + format::number(spec.width) + "\" height=\"" +
            format::number(spec.height) + "\" fill=\"white\"/>\n";

    // shaded verdict region: beta^2 >= beta_min^2
    if (!betamin && !shade.empty()) {
        std::string pts;
        pts += format::number(xs.map(shade.begin()->first)) + "," + format::number(ys.map(std::pow(10.0, ys.hi))) + " ";
        for (const auto& [m, bmin] : shade) {
            const double clamped = std::min(std::max(bmin, std::pow(10.0, ys.lo)), std::pow(10.0, ys.hi));
            pts += format::number(xs.map(m)) + "," + format::number(ys.map(clamped)) + " ";
        }
        pts += format::number(xs.map(shade.rbegin()->first)) + "," + format::number(ys.map(std::pow(10.0, ys.hi)));
        body += "<polygon fill=\"#f8c8d4\" fill-opacity=\"0.45\" stroke=\"none\" points=\"" +
                pts + "\"/>\n";
    }

    // decade grid and tick labels
    for (int k = static_cast<int>(xs.lo); k <= static_cast<int>(xs.hi); ++k) {
        const double px = xs.map(std::pow(10.0, k));
        body += "<line x1=\"" + format::number(px) + "\" y1=\"" + format::number(marginT) +
                "\" x2=\"" + format::number(px) + "\" y2=\"" +
                format::number(spec.height - marginB) + "\" stroke=\"#dddddd\"/>\n";
        body += "<text x=\"" + format::number(px) + "\" y=\"" +
                format::number(spec.height - marginB + 18) +
                "\" text-anchor=\"middle\" font-size=\"11\">1e" + std::to_string(k) + "</text>\n";
    }
    for (int k = static_cast<int>(ys.lo); k <= static_cast<int>(ys.hi); ++k) {
        const double py = ys.map(std::pow(10.0, k));
        body += "<line x1=\"" + format::number(marginL) + "\" y1=\"" + format::number(py) +
                "\" x2=\"" + format::number(spec.width - marginR) + "\" y2=\"" +
                format::number(py) + "\" stroke=\"#dddddd\"/>\n";
        body += "<text x=\"" + format::number(marginL - 6) + "\" y=\"" + format::number(py + 4) +
                "\" text-anchor=\"end\" font-size=\"11\">1e" + std::to_string(k) + "</text>\n";
    }

    // floor reference lines for the betamin chart
    if (betamin) {
        std::map<std::string, double> floors;
        const std::size_t floorCol = csv.column("beta_min_floor");
        const std::size_t xiCol = csv.column("xi");
        for (std::size_t i = 0; i < csv.rows.size(); ++i) {
            if (csv.rows[i][xiCol] == "0") continue;
            floors[csv.rows[i][csv.column("gamma_star_db")]] =
                parse_double(csv.rows[i][floorCol], i);
        }
        for (const auto& [db, floorVal] : floors) {
            const double py = ys.map(floorVal);
            body += "<line x1=\"" + format::number(marginL) + "\" y1=\"" + format::number(py) +
                    "\" x2=\"" + format::number(spec.width - marginR) + "\" y2=\"" +
                    format::number(py) +
                    "\" stroke=\"#999999\" stroke-dasharray=\"6 4\" stroke-width=\"1\"/>\n";
        }
    }

    // series
    int colorIndex = 0;
    double legendY = marginT + 14;
    for (const auto& [key, series] : seriesMap) {
        const std::string color = kPalette[colorIndex % 8];
        body += svg_polyline(series.points, xs, ys, color);
        body += "<rect x=\"" + format::number(spec.width - marginR - 180) + "\" y=\"" +
                format::number(legendY - 9) + "\" width=\"14\" height=\"4\" fill=\"" + color +
                "\"/>\n";
        body += "<text x=\"" + format::number(spec.width - marginR - 160) + "\" y=\"" +
                format::number(legendY - 3) + "\" font-size=\"11\">" + series.label + "</text>\n";
        legendY += 16;
        ++colorIndex;
    }

    // frame and titles
    body += "<rect x=\"" + format::number(marginL) + "\" y=\"" + format::number(marginT) +
            "\" width=\"" + format::number(spec.width - marginL - marginR) + "\" height=\"" +
            format::number(spec.height - marginT - marginB) +
            "\" fill=\"none\" stroke=\"#333333\"/>\n";
    body += "<text x=\"" + format::number((marginL + spec.width - marginR) / 2.0) + "\" y=\"" +
            format::number(spec.height - 14) +
            "\" text-anchor=\"middle\" font-size=\"13\">M</text>\n";
    body += "<text x=\"18\" y=\"" + format::number((marginT + spec.height - marginB) / 2.0) +
            "\" text-anchor=\"middle\" font-size=\"13\" transform=\"rotate(-90 18 " +
            format::number((marginT + spec.height - marginB) / 2.0) + ")\">" +
            (betamin ? "beta_min^2" : "beta^2") + "</text>\n";
    if (!spec.title.empty())
        body += "<text x=\"" + format::number(spec.width / 2.0) +
                "\" y=\"22\" text-anchor=\"middle\" font-size=\"14\">" + spec.title +
                "</text>\n";

    std::ofstream out(svg_path);
    if (!out) throw std::runtime_error("plot: cannot write " + svg_path);
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << spec.width << "\" height=\""
        << spec.height << "\" viewBox=\"0 0 " << spec.width << " " << spec.height << "\">\n"
        << body << "</svg>\n";
}

} // namespace pdarray::plot
