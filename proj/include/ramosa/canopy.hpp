#pragma once

#include "ramosa/raster.hpp"

#include <cstdint>
#include <filesystem>
#include <map>
#include <vector>

namespace ramosa {

/// Boolean canopy map on the multispectral grid. True marks canopy.
struct CanopyMask {
    int width = 0;
    int height = 0;
    std::vector<std::uint8_t> bits; // one byte per pixel, row-major

    CanopyMask() = default;
    CanopyMask(int w, int h) : width(w), height(h), bits(static_cast<std::size_t>(w) * h, 0) {}

    bool at(int row, int col) const {
        return bits[static_cast<std::size_t>(row) * width + col] != 0;
    }
    void set(int row, int col, bool v) {
        bits[static_cast<std::size_t>(row) * width + col] = v ? 1 : 0;
    }

    std::size_t count() const; // popcount

    bool operator==(const CanopyMask&) const = default;
};

/// Soil-adjusted vegetation index, (NIR-RED)/(NIR+RED+L)*(1+L).
/// Pixels where either input is nodata, or where the denominator magnitude
/// falls under 1e-9, come out as nodata.
RasterBand savi(const RasterBand& nir, const RasterBand& red, double L = 0.5);

/// Mask bit is true iff pixel value is strictly above tau. Nodata is false.
CanopyMask threshold_mask(const RasterBand& index, double tau = 0.5);

/// Ordered canopy pixel values per band, nodata excluded. Multispectral
/// bands must already sit on the mask grid; Thermal and Pan are resampled
/// to it (nearest neighbor) before masking.
std::map<BandId, std::vector<float>> apply_mask(const MultibandRaster& raster,
                                                const CanopyMask& mask);

// Mask file: 8-byte magic, width and height as little-endian uint32, then
// row-major bits packed 8 per byte.
void save_mask(const CanopyMask& mask, const std::filesystem::path& path);
CanopyMask load_mask(const std::filesystem::path& path);

} // namespace ramosa
