#include "navone/grid.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace navone {

WorldPoint pixel_to_world(int r, int c, const MapMeta& meta) {
    meta.validate();
    if (r < 0 || r >= meta.height || c < 0 || c >= meta.width)
        throw std::out_of_range("pixel_to_world: pixel index outside the grid");
    const double s = meta.meters_per_pixel;
    return {meta.origin_x + c * s, meta.origin_z + r * s};
}

PixelCoord world_to_pixel(double x, double z, const MapMeta& meta) {
    meta.validate();
    const double s = meta.meters_per_pixel;
    const double fc = std::floor((x - meta.origin_x) / s);
    const double fr = std::floor((z - meta.origin_z) / s);
    if (fc < 0 || fr < 0 || fc >= meta.width || fr >= meta.height) {
        std::ostringstream os;
        os << "world_to_pixel: (" << x << ", " << z << ") outside the map extent";
        throw DataError(os.str());
    }
    return {static_cast<int>(fr), static_cast<int>(fc)};
}

const std::array<std::string_view, kNumCategories>& category_names() {
    static const std::array<std::string_view, kNumCategories> names = {
        "void",        "wall",      "floor",    "chair",    "door",
        "table",       "picture",   "cabinet",  "cushion",  "window",
        "sofa",        "bed",       "curtain",  "chest_of_drawers", "plant",
        "sink",        "stairs",    "ceiling",  "toilet",   "stool",
        "towel",       "mirror",    "tv_monitor", "shower", "column",
        "bathtub",     "counter",   "fireplace", "lighting", "beam",
        "railing",     "shelving",  "blinds",   "gym_equipment", "seating",
        "board_panel", "furniture", "appliances", "clothes", "objects",
        "misc"};
    return names;
}

int category_id(std::string_view name) {
    const auto& names = category_names();
    for (int i = 0; i < kNumCategories; ++i)
        if (names[i] == name) return i;
    return -1;
}

void MapBundle::validate() const {
    meta.validate();
    if (rgb.rows() != meta.height || rgb.cols() != meta.width ||
        occ.rows() != meta.height || occ.cols() != meta.width ||
        sem.rows() != meta.height || sem.cols() != meta.width)
        throw DataError("MapBundle: map dimensions do not match MapMeta");
    for (int r = 0; r < occ.rows(); ++r)
        for (int c = 0; c < occ.cols(); ++c) {
            if (occ(r, c) > 1) throw DataError("MapBundle: occupancy cells must be 0 or 1");
            if (sem(r, c) >= kNumCategories) throw DataError("MapBundle: semantic id out of range");
        }
}

ChannelMask ChannelMask::parse(std::string_view spec) {
    ChannelMask m{false, false, false};
    size_t pos = 0;
    while (pos <= spec.size()) {
        size_t comma = spec.find(',', pos);
        std::string_view tok = spec.substr(pos, comma == std::string_view::npos ? spec.size() - pos : comma - pos);
        if (tok == "rgb") m.rgb = true;
        else if (tok == "occ") m.occ = true;
        else if (tok == "sem") m.sem = true;
        else if (tok == "full" || tok == "all") m = ChannelMask{};
        else if (!tok.empty()) throw ConfigError("ChannelMask: unknown modality '" + std::string(tok) + "'");
        if (comma == std::string_view::npos) break;
        pos = comma + 1;
    }
    if (!m.rgb && !m.occ && !m.sem) throw ConfigError("ChannelMask: at least one modality required");
    return m;
}

std::string ChannelMask::str() const {
    std::string s;
    if (rgb) s += "rgb,";
    if (occ) s += "occ,";
    if (sem) s += "sem,";
    if (!s.empty()) s.pop_back();
    return s;
}

FusedMap fuse_maps(const RgbMap& rgb, const OccupancyMap& occ, const SemanticMap& sem,
                   const SemanticEmbeddingView& emb, const ChannelMask& mask) {
    if (rgb.rows() != occ.rows() || rgb.cols() != occ.cols() ||
        rgb.rows() != sem.rows() || rgb.cols() != sem.cols())
        throw DataError("fuse_maps: input maps must share the same shape");
    if (emb.data == nullptr || emb.dim < 1)
        throw ConfigError("fuse_maps: semantic embedding table missing");

    const int h = rgb.rows(), w = rgb.cols();
    const int channels = 3 + 1 + emb.dim;
    FusedMap out;
    out.h = h;
    out.w = w;
    out.channels = channels;
    out.v.assign(static_cast<size_t>(h) * w * channels, 0.0);

    for (int r = 0; r < h; ++r) {
        for (int c = 0; c < w; ++c) {
            double* p = out.px(r, c);
            if (mask.rgb) {
                const Rgb& col = rgb(r, c);
                p[0] = col[0] / 255.0;
                p[1] = col[1] / 255.0;
                p[2] = col[2] / 255.0;
            }
            if (mask.occ) p[3] = occ(r, c) ? 1.0 : 0.0;
            if (mask.sem) {
                const int id = sem(r, c);
                if (id >= kNumCategories) throw DataError("fuse_maps: semantic id out of range");
                const double* row = emb.row(id);
                for (int d = 0; d < emb.dim; ++d) p[4 + d] = row[d];
            }
        }
    }
    return out;
}

}  // namespace navone
