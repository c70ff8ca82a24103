#include "ramosa/calibration.hpp"

#include "ramosa/csv.hpp"
#include "ramosa/errors.hpp"

#include <cmath>

namespace ramosa {

CalibrationModel fit_empirical_line(const std::vector<PanelObservation>& observations) {
    if (observations.empty()) throw DataError("no panel observations");
    std::map<BandId, std::vector<PanelObservation>> by_band;
    for (auto& obs : observations) {
        if (obs.band == BandId::Thermal) {
            throw DataError("Thermal is radiometrically calibrated, no panel fit applies");
        }
        if (!(obs.mean_dn > 0.0)) throw DataError("panel DN must be positive");
        if (!(obs.known_reflectance > 0.0) || obs.known_reflectance > 1.0) {
            throw DataError("panel reflectance must lie in (0, 1]");
        }
        by_band[obs.band].push_back(obs);
    }

    CalibrationModel model;
    for (auto& [band, obs] : by_band) {
        CalibrationModel::Line line;
        if (obs.size() == 1) {
            line.gain = obs[0].known_reflectance / obs[0].mean_dn;
            line.offset = 0.0;
        } else {
            double n = static_cast<double>(obs.size());
            double sx = 0, sy = 0, sxx = 0, sxy = 0;
            for (auto& o : obs) {
                sx += o.mean_dn;
                sy += o.known_reflectance;
                sxx += o.mean_dn * o.mean_dn;
                sxy += o.mean_dn * o.known_reflectance;
            }
            double denom = n * sxx - sx * sx;
            if (std::abs(denom) < 1e-12 * sxx) {
                throw DataError(std::string("panels for band ") + band_name(band) +
                                " share one DN; the line is undetermined");
            }
            line.gain = (n * sxy - sx * sy) / denom;
            line.offset = (sy - line.gain * sx) / n;
        }
        if (!(line.gain > 0.0)) {
            throw DataError(std::string("non-positive gain fitted for band ") + band_name(band));
        }
        model.lines[band] = line;
    }
    return model;
}

CalibrationResult apply_calibration(const CalibrationModel& model, const MultibandRaster& raster) {
    raster.validate();
    CalibrationResult result;
    result.raster.units = raster.units;
    for (auto& [id, b] : raster.bands) {
        Units u = raster.units_of(id);
        if (u != Units::DigitalNumber) {
            result.raster.bands.emplace(id, b); // already physical units
            continue;
        }
        auto it = model.lines.find(id);
        if (it == model.lines.end()) {
            throw DataError(std::string("band ") + band_name(id) + " has no calibration line");
        }
        const auto& line = it->second;
        RasterBand out = b;
        ClampCounts counts;
        for (auto& px : out.pixels) {
            if (is_nodata(px)) continue;
            double refl = line.gain * px + line.offset;
            if (refl < 0.0) {
                refl = 0.0;
                ++counts.negative;
            } else if (refl > 2.0) {
                // specular pixels can exceed 1; cap at 2 and flag
                refl = 2.0;
                ++counts.overflow;
            }
            px = static_cast<float>(refl);
        }
        result.raster.bands.emplace(id, std::move(out));
        result.raster.units[id] = Units::Reflectance;
        result.clamps[id] = counts;
    }
    return result;
}

std::vector<PanelObservation> load_panels_csv(const std::filesystem::path& path) {
    auto t = csv::read_file(path);
    int c_band = t.require_column("band");
    int c_dn = t.require_column("mean_dn");
    int c_refl = t.require_column("known_reflectance");
    std::vector<PanelObservation> out;
    for (auto& row : t.rows) {
        PanelObservation obs;
        auto band = band_from_name(row[c_band]);
        if (!band) throw DataError("unknown band '" + row[c_band] + "' in " + path.string());
        obs.band = *band;
        obs.mean_dn = csv::parse_double(row[c_dn], "panel mean_dn");
        obs.known_reflectance = csv::parse_double(row[c_refl], "panel known_reflectance");
        out.push_back(obs);
    }
    return out;
}

} // namespace ramosa
