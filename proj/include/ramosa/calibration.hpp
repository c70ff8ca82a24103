#pragma once

#include "ramosa/raster.hpp"

#include <cstdint>
#include <filesystem>
#include <map>
#include <vector>

namespace ramosa {

/// One reflectance panel reading: the mean digital number observed over the
/// panel in a band, and the panel's known reflectance in that band.
struct PanelObservation {
    BandId band = BandId::Blue;
    double mean_dn = 0.0;
    double known_reflectance = 0.0;
};

/// Per-band empirical line mapping digital numbers to reflectance.
/// Thermal is never part of the model; the sensor already reports celsius.
struct CalibrationModel {
    struct Line {
        double gain = 0.0;   // reflectance per DN
        double offset = 0.0; // reflectance
    };
    std::map<BandId, Line> lines;
};

/// Fit one line per band present in the observations. A single panel gives a
/// line through the origin; two or more give the least-squares line.
CalibrationModel fit_empirical_line(const std::vector<PanelObservation>& observations);

struct ClampCounts {
    std::int64_t negative = 0; // values below 0, set to 0
    std::int64_t overflow = 0; // values above the 2.0 ceiling
};

struct CalibrationResult {
    MultibandRaster raster;
    std::map<BandId, ClampCounts> clamps;
};

/// Convert every digital-number band to reflectance. Celsius bands pass
/// through untouched. Results are clamped into [0, 2]; clamped pixel counts
/// are reported per band. NaN pixels stay NaN.
CalibrationResult apply_calibration(const CalibrationModel& model, const MultibandRaster& raster);

std::vector<PanelObservation> load_panels_csv(const std::filesystem::path& path);

} // namespace ramosa
