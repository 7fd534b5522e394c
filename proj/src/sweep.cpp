#include "pdarray/sweep.hpp"

#include <cmath>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "pdarray/format.hpp"
#include "pdarray/scaling.hpp"

namespace pdarray::sweep {

std::string Table::csv() const {
    std::ostringstream os;
    write_csv(os, *this);
    return os.str();
}

std::size_t Table::column(const std::string& name) const {
    for (std::size_t i = 0; i < header.size(); ++i)
        if (header[i] == name) return i;
    throw std::invalid_argument("Table: no column named " + name);
}

void write_csv(std::ostream& os, const Table& table) {
    for (std::size_t i = 0; i < table.header.size(); ++i)
        os << table.header[i] << (i + 1 < table.header.size() ? ',' : '\n');
    for (const auto& row : table.rows)
        for (std::size_t i = 0; i < row.size(); ++i)
            os << row[i] << (i + 1 < row.size() ? ',' : '\n');
}

Table sweep_betamin(const BetaMinSweep& spec, RunMode mode) {
    if (spec.g_max < 0) throw std::domain_error("sweep_betamin: g_max must be >= 0");
    if (spec.xi.empty() || spec.snr_db.empty())
        throw std::invalid_argument("sweep_betamin: xi and snr_db lists must be nonempty");

    Table table;
    table.header = {"M", "xi", "gamma_star_db", "beta_min_sq", "beta_min_floor"};
    const std::size_t perG = spec.xi.size() * spec.snr_db.size();
    table.rows.resize((static_cast<std::size_t>(spec.g_max) + 1) * perG);

    for_each_index(static_cast<std::size_t>(spec.g_max) + 1, mode, [&](std::size_t gi) {
        const long m = hexgeom::array_size(static_cast<int>(gi));
        std::size_t slot = gi * perG;
        for (double xi : spec.xi) {
            for (double db : spec.snr_db) {
                const double gamma = scaling::db_to_linear(db);
                const double bmin = scaling::beta_min(static_cast<double>(m), xi, gamma);
                const double floor = xi > 0.0 ? scaling::beta_min_floor(gamma) : 1.0;
                table.rows[slot++] = {format::number(m), format::number(xi), format::number(db),
                                      format::number(bmin), format::number(floor)};
            }
        }
    });
    return table;
}

double beta_for(beam::BeamKind kind, int rings, double rho, hexgeom::DistanceModel model,
                beam::Normalization norm) {
    switch (kind) {
        case beam::BeamKind::Degenerate:
            return 1.0;
        case beam::BeamKind::Uniform:
            return 1.0 / static_cast<double>(hexgeom::array_size(rings));
        case beam::BeamKind::Gaussian:
            if (model == hexgeom::DistanceModel::PaperFaithful &&
                norm == beam::Normalization::ReferenceDisk)
                return scaling::beta_gauss(rings, rho);
            break;
        case beam::BeamKind::Lg10:
            if (model == hexgeom::DistanceModel::PaperFaithful &&
                norm == beam::Normalization::ReferenceDisk)
                return scaling::beta_lg10(rings, rho);
            break;
    }
    const auto lay = hexgeom::layout(rings, rho, model);
    return scaling::loss_factor(beam::capture_profile({kind, 0.0}, lay, norm));
}

namespace {

struct ShadePoint {
    double beta_min_sq;
    bool meets(double beta_sq) const { return beta_sq >= beta_min_sq; }
};

ShadePoint shade_at(long m, double xi, double snr_db) {
    const double gamma = scaling::db_to_linear(snr_db);
    return {scaling::beta_min(static_cast<double>(m), xi, gamma)};
}

} // namespace

Table sweep_beta_fixed_rho(const FixedRhoSweep& spec, RunMode mode) {
    if (spec.g_max < 0) throw std::domain_error("sweep_beta_fixed_rho: g_max must be >= 0");
    if (!(spec.rho > 0.0)) throw std::domain_error("sweep_beta_fixed_rho: rho must be > 0");
    if (spec.beams.empty()) throw std::invalid_argument("sweep_beta_fixed_rho: beams list empty");

    Table table;
    table.header = {"G",           "M",          "beam",    "rho",         "distance_model",
                    "normalization", "beta_sq",  "beta_min_sq", "meets_reference"};
    const std::size_t perG = spec.beams.size();
    table.rows.resize((static_cast<std::size_t>(spec.g_max) + 1) * perG);

    for_each_index(static_cast<std::size_t>(spec.g_max) + 1, mode, [&](std::size_t gi) {
        const int g = static_cast<int>(gi);
        const long m = hexgeom::array_size(g);
        const ShadePoint shade = shade_at(m, spec.shade_xi, spec.shade_snr_db);
        std::size_t slot = gi * perG;
        for (const auto kind : spec.beams) {
            const double beta = beta_for(kind, g, spec.rho, spec.model, spec.norm);
            table.rows[slot++] = {format::number(g),
                                  format::number(m),
                                  beam::to_string(kind),
                                  format::number(spec.rho),
                                  hexgeom::to_string(spec.model),
                                  beam::to_string(spec.norm),
                                  format::number(beta),
                                  format::number(shade.beta_min_sq),
                                  shade.meets(beta) ? "1" : "0"};
        }
    });
    return table;
}

Table sweep_beta_scaled_rho(const ScaledRhoSweep& spec, RunMode mode) {
    if (spec.g_max < 0) throw std::domain_error("sweep_beta_scaled_rho: g_max must be >= 0");
    if (!(spec.rho0 > 0.0)) throw std::domain_error("sweep_beta_scaled_rho: rho0 must be > 0");
    if (spec.beams.empty()) throw std::invalid_argument("sweep_beta_scaled_rho: beams list empty");

    Table table;
    table.header = {"G",     "M",       "beam",        "rho0",
                    "rho",   "distance_model", "normalization", "beta_sq",
                    "beta_min_sq", "meets_reference", "log_gap_gauss_lg10"};
    const std::size_t perG = spec.beams.size();
    table.rows.resize((static_cast<std::size_t>(spec.g_max) + 1) * perG);

    for_each_index(static_cast<std::size_t>(spec.g_max) + 1, mode, [&](std::size_t gi) {
        const int g = static_cast<int>(gi);
        const long m = hexgeom::array_size(g);
        const double rho = spec.rho0 / static_cast<double>(g + 1);
        const ShadePoint shade = shade_at(m, spec.shade_xi, spec.shade_snr_db);

        std::vector<double> betas(spec.beams.size());
        double betaGauss = -1.0, betaLg = -1.0;
        for (std::size_t i = 0; i < spec.beams.size(); ++i) {
            betas[i] = beta_for(spec.beams[i], g, rho, spec.model, spec.norm);
            if (spec.beams[i] == beam::BeamKind::Gaussian) betaGauss = betas[i];
            if (spec.beams[i] == beam::BeamKind::Lg10) betaLg = betas[i];
        }
        std::string gap;
        if (betaGauss > 0.0 && betaLg > 0.0)
            gap = format::number(std::log(betaGauss) - std::log(betaLg));

        std::size_t slot = gi * perG;
        for (std::size_t i = 0; i < spec.beams.size(); ++i) {
            table.rows[slot++] = {format::number(g),
                                  format::number(m),
                                  beam::to_string(spec.beams[i]),
                                  format::number(spec.rho0),
                                  format::number(rho),
                                  hexgeom::to_string(spec.model),
                                  beam::to_string(spec.norm),
                                  format::number(betas[i]),
                                  format::number(shade.beta_min_sq),
                                  shade.meets(betas[i]) ? "1" : "0",
                                  gap};
        }
    });
    return table;
}

} // namespace pdarray::sweep
