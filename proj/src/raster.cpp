#include "ramosa/raster.hpp"

#include "ramosa/csv.hpp"
#include "ramosa/errors.hpp"

#include <json.hpp>

#include <bit>
#include <cmath>
#include <fstream>

static_assert(std::endian::native == std::endian::little,
              "BSQ-F32 payload IO assumes a little-endian host");

namespace ramosa {

namespace {

constexpr const char* kBandNames[kBandCount] = {
    "Blue", "Green", "Red", "RedEdge", "NIR", "Thermal", "Pan",
};

} // namespace

const char* band_name(BandId id) { return kBandNames[static_cast<int>(id)]; }

std::optional<BandId> band_from_name(std::string_view name) {
    for (int i = 0; i < kBandCount; ++i) {
        if (name == kBandNames[i]) return static_cast<BandId>(i);
    }
    return std::nullopt;
}

std::optional<double> band_center_nm(BandId id) {
    switch (id) {
        case BandId::Blue: return 475.0;
        case BandId::Green: return 560.0;
        case BandId::Red: return 668.0;
        case BandId::RedEdge: return 717.0;
        case BandId::NIR: return 842.0;
        default: return std::nullopt; // Thermal is LWIR, Pan is broadband
    }
}

bool is_multispectral(BandId id) {
    return id == BandId::Blue || id == BandId::Green || id == BandId::Red ||
           id == BandId::RedEdge || id == BandId::NIR;
}

const char* units_name(Units u) {
    switch (u) {
        case Units::DigitalNumber: return "digital-number";
        case Units::Reflectance: return "reflectance";
        case Units::Celsius: return "celsius";
    }
    return "?";
}

std::optional<Units> units_from_name(std::string_view name) {
    if (name == "digital-number") return Units::DigitalNumber;
    if (name == "reflectance") return Units::Reflectance;
    if (name == "celsius") return Units::Celsius;
    return std::nullopt;
}

RasterBand::RasterBand(BandId b, int w, int h, float fill)
    : band(b), width(w), height(h) {
    if (w < 1 || h < 1) throw DataError("band dimensions must be positive");
    pixels.assign(static_cast<std::size_t>(w) * h, fill);
}

const RasterBand& MultibandRaster::band(BandId id) const {
    auto it = bands.find(id);
    if (it == bands.end()) throw DataError(std::string("band not present: ") + band_name(id));
    return it->second;
}

Units MultibandRaster::units_of(BandId id) const {
    auto it = units.find(id);
    if (it == units.end()) throw DataError(std::string("no units tag for band ") + band_name(id));
    return it->second;
}

std::pair<int, int> MultibandRaster::multispectral_grid() const {
    for (auto& [id, b] : bands) {
        if (is_multispectral(id)) return {b.width, b.height};
    }
    throw DataError("raster has no multispectral band");
}

void MultibandRaster::validate() const {
    if (bands.empty()) throw DataError("raster has no bands");
    int ms_w = -1, ms_h = -1;
    for (auto& [id, b] : bands) {
        if (b.width < 1 || b.height < 1) throw DataError("band with empty grid");
        if (b.pixels.size() != static_cast<std::size_t>(b.width) * b.height) {
            throw DataError(std::string("pixel count mismatch in band ") + band_name(id));
        }
        if (units.find(id) == units.end()) {
            throw DataError(std::string("missing units tag for band ") + band_name(id));
        }
        if (is_multispectral(id)) {
            if (ms_w < 0) {
                ms_w = b.width;
                ms_h = b.height;
            } else if (b.width != ms_w || b.height != ms_h) {
                throw DataError("multispectral bands disagree on grid size");
            }
        }
    }
}

// --- disk format ---

namespace {

std::string payload_name(const std::filesystem::path& header_path, BandId id) {
    return header_path.stem().string() + "_" + band_name(id) + ".f32";
}

void write_payload(const std::filesystem::path& path, const std::vector<float>& pixels) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw DataError("cannot write " + path.string());
    out.write(reinterpret_cast<const char*>(pixels.data()),
              static_cast<std::streamsize>(pixels.size() * sizeof(float)));
    if (!out) throw DataError("short write to " + path.string());
}

std::vector<float> read_payload(const std::filesystem::path& path, std::size_t expected) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw DataError("cannot open payload " + path.string());
    in.seekg(0, std::ios::end);
    auto bytes = static_cast<std::size_t>(in.tellg());
    if (bytes != expected * sizeof(float)) {
        throw DataError("payload " + path.string() + " holds " +
                        std::to_string(bytes / sizeof(float)) + " floats, header declares " +
                        std::to_string(expected));
    }
    in.seekg(0);
    std::vector<float> pixels(expected);
    in.read(reinterpret_cast<char*>(pixels.data()), static_cast<std::streamsize>(bytes));
    if (!in) throw DataError("short read from " + path.string());
    return pixels;
}

} // namespace

void save_raster(const MultibandRaster& raster, const std::filesystem::path& header_path) {
    raster.validate();
    nlohmann::json header;
    header["format"] = "bsq-f32";
    header["version"] = 1;
    auto& list = header["bands"] = nlohmann::json::array();
    auto dir = header_path.parent_path();
    for (auto& [id, b] : raster.bands) {
        std::string payload = payload_name(header_path, id);
        list.push_back({
            {"name", band_name(id)},
            {"width", b.width},
            {"height", b.height},
            {"units", units_name(raster.units_of(id))},
            {"payload", payload},
        });
        write_payload(dir / payload, b.pixels);
    }
    std::ofstream out(header_path, std::ios::binary | std::ios::trunc);
    if (!out) throw DataError("cannot write " + header_path.string());
    out << header.dump(2) << "\n";
}

MultibandRaster load_raster(const std::filesystem::path& header_path) {
    std::ifstream in(header_path, std::ios::binary);
    if (!in) throw DataError("cannot open " + header_path.string());
    nlohmann::json header;
    try {
        in >> header;
    } catch (const nlohmann::json::exception& e) {
        throw DataError("bad raster header " + header_path.string() + ": " + e.what());
    }
    if (header.value("format", "") != "bsq-f32") {
        throw DataError(header_path.string() + " is not a bsq-f32 header");
    }
    MultibandRaster raster;
    auto dir = header_path.parent_path();
    for (auto& entry : header.at("bands")) {
        std::string name = entry.at("name").get<std::string>();
        auto id = band_from_name(name);
        if (!id) throw DataError("unknown band name '" + name + "' in " + header_path.string());
        if (!entry.at("width").is_number_integer() || !entry.at("height").is_number_integer()) {
            throw DataError("non-integer band dimensions in " + header_path.string());
        }
        int w = entry.at("width").get<int>();
        int h = entry.at("height").get<int>();
        if (w < 1 || h < 1) throw DataError("band dimensions must be positive in " + header_path.string());
        auto units = units_from_name(entry.at("units").get<std::string>());
        if (!units) throw DataError("unknown units tag in " + header_path.string());
        RasterBand b(*id, w, h);
        b.pixels = read_payload(dir / entry.at("payload").get<std::string>(), b.size());
        raster.units[*id] = *units;
        raster.bands.emplace(*id, std::move(b));
    }
    raster.validate();
    return raster;
}

// --- geometry ---

namespace {

// Proportionally scaled box, rounded outward so the cropped Thermal/Pan
// grid always covers the same ground footprint as the multispectral box.
void scaled_box(int x, int y, int w, int h, double sx, double sy, int grid_w, int grid_h,
                int& ox, int& oy, int& ow, int& oh) {
    int x0 = static_cast<int>(std::floor(x * sx));
    int y0 = static_cast<int>(std::floor(y * sy));
    int x1 = static_cast<int>(std::ceil((x + w) * sx));
    int y1 = static_cast<int>(std::ceil((y + h) * sy));
    x0 = std::max(0, x0);
    y0 = std::max(0, y0);
    x1 = std::min(grid_w, std::max(x1, x0 + 1));
    y1 = std::min(grid_h, std::max(y1, y0 + 1));
    if (x0 >= x1) x0 = x1 - 1;
    if (y0 >= y1) y0 = y1 - 1;
    ox = x0;
    oy = y0;
    ow = x1 - x0;
    oh = y1 - y0;
}

RasterBand crop_band(const RasterBand& b, int x, int y, int w, int h) {
    RasterBand out(b.band, w, h);
    for (int r = 0; r < h; ++r) {
        for (int c = 0; c < w; ++c) {
            out.at(r, c) = b.at(y + r, x + c);
        }
    }
    return out;
}

} // namespace

MultibandRaster crop(const MultibandRaster& raster, const PlotRegion& region) {
    raster.validate();
    auto [ms_w, ms_h] = raster.multispectral_grid();
    if (region.w < 1 || region.h < 1) throw DataError("crop region must have positive size");
    if (region.x < 0 || region.y < 0 || region.x + region.w > ms_w || region.y + region.h > ms_h) {
        throw DataError("crop region out of bounds for plant '" + region.plant_id + "'");
    }
    MultibandRaster out;
    out.units = raster.units;
    for (auto& [id, b] : raster.bands) {
        if (is_multispectral(id)) {
            out.bands.emplace(id, crop_band(b, region.x, region.y, region.w, region.h));
        } else {
            double sx = static_cast<double>(b.width) / ms_w;
            double sy = static_cast<double>(b.height) / ms_h;
            int ox, oy, ow, oh;
            scaled_box(region.x, region.y, region.w, region.h, sx, sy, b.width, b.height,
                       ox, oy, ow, oh);
            out.bands.emplace(id, crop_band(b, ox, oy, ow, oh));
        }
    }
    return out;
}

RasterBand resample_nearest(const RasterBand& band, int target_w, int target_h) {
    if (target_w < 1 || target_h < 1) throw DataError("resample target must be positive");
    if (target_w == band.width && target_h == band.height) return band;
    RasterBand out(band.band, target_w, target_h);
    double sh = static_cast<double>(band.height) / target_h;
    double sw = static_cast<double>(band.width) / target_w;
    for (int r = 0; r < target_h; ++r) {
        int sr = std::min(band.height - 1, static_cast<int>(std::floor((r + 0.5) * sh)));
        for (int c = 0; c < target_w; ++c) {
            int sc = std::min(band.width - 1, static_cast<int>(std::floor((c + 0.5) * sw)));
            out.at(r, c) = band.at(sr, sc);
        }
    }
    return out;
}

// --- plot region CSV ---

std::vector<PlotRegion> load_regions_csv(const std::filesystem::path& path) {
    auto t = csv::read_file(path);
    int c_id = t.require_column("plant_id");
    int c_x = t.require_column("x");
    int c_y = t.require_column("y");
    int c_w = t.require_column("w");
    int c_h = t.require_column("h");
    std::vector<PlotRegion> out;
    out.reserve(t.rows.size());
    for (auto& row : t.rows) {
        PlotRegion r;
        r.plant_id = row[c_id];
        r.x = static_cast<int>(csv::parse_int(row[c_x], "region x"));
        r.y = static_cast<int>(csv::parse_int(row[c_y], "region y"));
        r.w = static_cast<int>(csv::parse_int(row[c_w], "region w"));
        r.h = static_cast<int>(csv::parse_int(row[c_h], "region h"));
        if (r.w < 1 || r.h < 1) throw DataError("region for '" + r.plant_id + "' has empty box");
        out.push_back(std::move(r));
    }
    return out;
}

void save_regions_csv(const std::vector<PlotRegion>& regions, const std::filesystem::path& path) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw DataError("cannot write " + path.string());
    out << "plant_id,x,y,w,h\n";
    for (auto& r : regions) {
        out << r.plant_id << ',' << r.x << ',' << r.y << ',' << r.w << ',' << r.h << '\n';
    }
}

} // namespace ramosa
