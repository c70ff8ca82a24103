#include "ramosa/canopy.hpp"

#include "ramosa/errors.hpp"

#include <cmath>
#include <cstring>
#include <fstream>

namespace ramosa {

std::size_t CanopyMask::count() const {
    std::size_t n = 0;
    for (auto b : bits) n += b;
    return n;
}

RasterBand savi(const RasterBand& nir, const RasterBand& red, double L) {
    if (nir.width != red.width || nir.height != red.height) {
        throw DataError("SAVI inputs disagree on grid size");
    }
    if (L < 0.0) throw DataError("soil adjustment factor must be nonnegative");
    RasterBand out(BandId::NIR, nir.width, nir.height);
    const double scale = 1.0 + L;
    for (std::size_t i = 0; i < nir.pixels.size(); ++i) {
        float n = nir.pixels[i];
        float r = red.pixels[i];
        if (is_nodata(n) || is_nodata(r)) {
            out.pixels[i] = kNoData;
            continue;
        }
        double denom = static_cast<double>(n) + r + L;
        if (std::abs(denom) < 1e-9) {
            out.pixels[i] = kNoData;
            continue;
        }
        out.pixels[i] = static_cast<float>((static_cast<double>(n) - r) / denom * scale);
    }
    return out;
}

CanopyMask threshold_mask(const RasterBand& index, double tau) {
    CanopyMask mask(index.width, index.height);
    for (std::size_t i = 0; i < index.pixels.size(); ++i) {
        float v = index.pixels[i];
        mask.bits[i] = (!is_nodata(v) && v > tau) ? 1 : 0;
    }
    return mask;
}

std::map<BandId, std::vector<float>> apply_mask(const MultibandRaster& raster,
                                                const CanopyMask& mask) {
    raster.validate();
    std::map<BandId, std::vector<float>> out;
    for (auto& [id, b] : raster.bands) {
        const RasterBand* src = &b;
        RasterBand resampled;
        if (b.width != mask.width || b.height != mask.height) {
            if (is_multispectral(id)) {
                throw DataError(std::string("band ") + band_name(id) +
                                " does not match the mask grid");
            }
            resampled = resample_nearest(b, mask.width, mask.height);
            src = &resampled;
        }
        std::vector<float> vals;
        vals.reserve(mask.count());
        for (std::size_t i = 0; i < src->pixels.size(); ++i) {
            if (mask.bits[i] && !is_nodata(src->pixels[i])) vals.push_back(src->pixels[i]);
        }
        out.emplace(id, std::move(vals));
    }
    return out;
}

namespace {
constexpr char kMaskMagic[8] = {'R', 'A', 'M', 'O', 'M', 'S', 'K', '1'};
}

void save_mask(const CanopyMask& mask, const std::filesystem::path& path) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw DataError("cannot write " + path.string());
    out.write(kMaskMagic, sizeof(kMaskMagic));
    std::uint32_t dims[2] = {static_cast<std::uint32_t>(mask.width),
                             static_cast<std::uint32_t>(mask.height)};
    out.write(reinterpret_cast<const char*>(dims), sizeof(dims));
    std::vector<std::uint8_t> packed((mask.bits.size() + 7) / 8, 0);
    for (std::size_t i = 0; i < mask.bits.size(); ++i) {
        if (mask.bits[i]) packed[i / 8] |= static_cast<std::uint8_t>(1u << (i % 8));
    }
    out.write(reinterpret_cast<const char*>(packed.data()),
              static_cast<std::streamsize>(packed.size()));
    if (!out) throw DataError("short write to " + path.string());
}

CanopyMask load_mask(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw DataError("cannot open " + path.string());
    char magic[8];
    in.read(magic, sizeof(magic));
    if (!in || std::memcmp(magic, kMaskMagic, sizeof(magic)) != 0) {
        throw DataError(path.string() + " is not a mask file");
    }
    std::uint32_t dims[2];
    in.read(reinterpret_cast<char*>(dims), sizeof(dims));
    if (!in || dims[0] == 0 || dims[1] == 0) throw DataError("bad mask dimensions in " + path.string());
    CanopyMask mask(static_cast<int>(dims[0]), static_cast<int>(dims[1]));
    std::vector<std::uint8_t> packed((mask.bits.size() + 7) / 8);
    in.read(reinterpret_cast<char*>(packed.data()), static_cast<std::streamsize>(packed.size()));
    if (!in) throw DataError("truncated mask file " + path.string());
    for (std::size_t i = 0; i < mask.bits.size(); ++i) {
        mask.bits[i] = (packed[i / 8] >> (i % 8)) & 1u;
    }
    return mask;
}

} // namespace ramosa
