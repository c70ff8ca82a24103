#pragma once

#include <cmath>
#include <cstdint>
#include <filesystem>
#include <limits>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace ramosa {

/// The seven sensor bands. Blue through NIR share one grid; Thermal and Pan
/// have their own ground sampling distances and may use different grids.
enum class BandId { Blue, Green, Red, RedEdge, NIR, Thermal, Pan };

inline constexpr int kBandCount = 7;

inline constexpr BandId kAllBands[kBandCount] = {
    BandId::Blue, BandId::Green, BandId::Red, BandId::RedEdge,
    BandId::NIR,  BandId::Thermal, BandId::Pan,
};

const char* band_name(BandId id);
std::optional<BandId> band_from_name(std::string_view name);

/// Nominal band center in nanometers; empty for Thermal (LWIR) and Pan.
std::optional<double> band_center_nm(BandId id);

bool is_multispectral(BandId id); // Blue..NIR

enum class Units { DigitalNumber, Reflectance, Celsius };

const char* units_name(Units u);
std::optional<Units> units_from_name(std::string_view name);

/// Pixels that carry no data are NaN. Every downstream statistic skips them.
inline constexpr float kNoData = std::numeric_limits<float>::quiet_NaN();

inline bool is_nodata(float v) { return std::isnan(v); }

struct RasterBand {
    BandId band = BandId::Blue;
    int width = 0;
    int height = 0;
    std::vector<float> pixels; // row-major, width*height entries

    RasterBand() = default;
    RasterBand(BandId b, int w, int h, float fill = 0.0f);

    float at(int row, int col) const { return pixels[static_cast<std::size_t>(row) * width + col]; }
    float& at(int row, int col) { return pixels[static_cast<std::size_t>(row) * width + col]; }

    std::size_t size() const { return pixels.size(); }
};

struct MultibandRaster {
    std::map<BandId, RasterBand> bands;
    std::map<BandId, Units> units;

    bool has(BandId id) const { return bands.count(id) != 0; }
    const RasterBand& band(BandId id) const;
    Units units_of(BandId id) const;

    /// Grid shared by the multispectral bands. Throws when none is present.
    std::pair<int, int> multispectral_grid() const; // {width, height}

    /// Checks the structural invariants: at least one band, sizes consistent,
    /// one grid across Blue..NIR.
    void validate() const;
};

/// Axis-aligned pixel box of one plant's plot on the multispectral grid.
struct PlotRegion {
    std::string plant_id;
    int x = 0;
    int y = 0;
    int w = 0;
    int h = 0;
};

// --- BSQ-F32 container ---
//
// A raster on disk is one JSON header plus one raw payload file per band.
// Payloads are little-endian 32-bit floats, row-major. Payload paths in the
// header are relative to the header's directory.

MultibandRaster load_raster(const std::filesystem::path& header_path);
void save_raster(const MultibandRaster& raster, const std::filesystem::path& header_path);

MultibandRaster crop(const MultibandRaster& raster, const PlotRegion& region);

RasterBand resample_nearest(const RasterBand& band, int target_w, int target_h);

std::vector<PlotRegion> load_regions_csv(const std::filesystem::path& path);
void save_regions_csv(const std::vector<PlotRegion>& regions, const std::filesystem::path& path);

} // namespace ramosa
