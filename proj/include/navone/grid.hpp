#pragma once

#include <array>
#include <cmath>
#include <cstdint>
#include <string_view>
#include <vector>

#include "navone/error.hpp"

namespace navone {

// Metric metadata tying a grid to the world frame. X grows with columns,
// Z grows with rows; (origin_x, origin_z) is the world position of pixel (0,0).
struct MapMeta {
    double meters_per_pixel = 0.05;
    double origin_x = 0.0;
    double origin_z = 0.0;
    int height = 0;
    int width = 0;

    void validate() const {
        if (!(meters_per_pixel > 0.0))
            throw ConfigError("MapMeta: meters_per_pixel must be > 0");
        if (height < 1 || width < 1)
            throw ConfigError("MapMeta: grid must be at least 1x1");
    }
    bool operator==(const MapMeta&) const = default;
};

struct PixelCoord {
    int r = 0;
    int c = 0;
    bool operator==(const PixelCoord&) const = default;
};

struct WorldPoint {
    double x = 0.0;
    double z = 0.0;
    bool operator==(const WorldPoint&) const = default;
};

// World coordinates of the top-left corner of pixel (r, c).
WorldPoint pixel_to_world(int r, int c, const MapMeta& meta);

// Inverse mapping; throws DataError when (x, z) falls outside the map extent.
PixelCoord world_to_pixel(double x, double z, const MapMeta& meta);

// World coordinates of the centre of pixel (r, c).
inline WorldPoint cell_center_world(int r, int c, const MapMeta& meta) {
    return {meta.origin_x + (c + 0.5) * meta.meters_per_pixel,
            meta.origin_z + (r + 0.5) * meta.meters_per_pixel};
}

template <typename T>
class Grid {
  public:
    Grid() = default;
    Grid(int h, int w, T fill = T{}) : h_(h), w_(w), v_(static_cast<size_t>(h) * w, fill) {
        if (h < 1 || w < 1) throw ConfigError("Grid: dimensions must be >= 1");
    }

    int rows() const { return h_; }
    int cols() const { return w_; }
    size_t size() const { return v_.size(); }
    bool empty() const { return v_.empty(); }

    bool in_bounds(int r, int c) const {
        return static_cast<unsigned>(r) < static_cast<unsigned>(h_) &&
               static_cast<unsigned>(c) < static_cast<unsigned>(w_);
    }

    T& operator()(int r, int c) { return v_[static_cast<size_t>(r) * w_ + c]; }
    const T& operator()(int r, int c) const { return v_[static_cast<size_t>(r) * w_ + c]; }

    T& at(int r, int c) {
        if (!in_bounds(r, c)) throw std::out_of_range("Grid::at: index out of bounds");
        return (*this)(r, c);
    }
    const T& at(int r, int c) const {
        if (!in_bounds(r, c)) throw std::out_of_range("Grid::at: index out of bounds");
        return (*this)(r, c);
    }

    T* data() { return v_.data(); }
    const T* data() const { return v_.data(); }
    void fill(T value) { v_.assign(v_.size(), value); }

    bool operator==(const Grid&) const = default;

  private:
    int h_ = 0, w_ = 0;
    std::vector<T> v_;
};

using Rgb = std::array<std::uint8_t, 3>;
using RgbMap = Grid<Rgb>;
using OccupancyMap = Grid<std::uint8_t>;  // 1 = free/navigable, 0 = obstacle/background
using SemanticMap = Grid<std::uint8_t>;   // class ids < kNumCategories, 0 = void
using ProbabilityMap = Grid<double>;      // values in [0,1]; stored as f32 on disk

inline constexpr int kNumCategories = 41;
inline constexpr std::uint8_t kVoidId = 0;
inline constexpr std::uint8_t kWallId = 1;
inline constexpr std::uint8_t kFloorId = 2;

// MP3D 41-category vocabulary; index = class id.
const std::array<std::string_view, kNumCategories>& category_names();
// Class id for a category name, or -1 if unknown.
int category_id(std::string_view name);

struct ProbabilityPair {
    ProbabilityMap path;
    ProbabilityMap goal;
};

struct MapBundle {
    MapMeta meta;
    RgbMap rgb;
    OccupancyMap occ;
    SemanticMap sem;

    void validate() const;
};

// Non-owning view of a learned 41 x dim semantic-class embedding table (row-major).
struct SemanticEmbeddingView {
    const double* data = nullptr;
    int dim = 0;
    const double* row(int class_id) const { return data + static_cast<size_t>(class_id) * dim; }
};

// Owning table, zero-filled; handy for tests, tools, and the python bindings.
class SemanticEmbedding {
  public:
    explicit SemanticEmbedding(int dim) : dim_(dim), table_(static_cast<size_t>(kNumCategories) * dim, 0.0) {
        if (dim < 1) throw ConfigError("SemanticEmbedding: dim must be >= 1");
    }
    int dim() const { return dim_; }
    double* row(int class_id) { return table_.data() + static_cast<size_t>(class_id) * dim_; }
    const double* row(int class_id) const { return table_.data() + static_cast<size_t>(class_id) * dim_; }
    SemanticEmbeddingView view() const { return {table_.data(), dim_}; }

  private:
    int dim_;
    std::vector<double> table_;
};

// Channel-selection mask for the modality ablation modes. Masked-out modalities
// are zero-filled so the fused channel count stays constant across modes.
struct ChannelMask {
    bool rgb = true;
    bool occ = true;
    bool sem = true;

    static ChannelMask full() { return {}; }
    static ChannelMask parse(std::string_view spec);  // comma list of rgb|occ|sem
    std::string str() const;
    bool operator==(const ChannelMask&) const = default;
};

// H x W x C tensor with per-pixel channel layout [rgb(3) | occ(1) | sem-embed(dim)].
struct FusedMap {
    int h = 0, w = 0, channels = 0;
    std::vector<double> v;  // pixel-major, channels contiguous per pixel

    double* px(int r, int c) { return v.data() + (static_cast<size_t>(r) * w + c) * channels; }
    const double* px(int r, int c) const { return v.data() + (static_cast<size_t>(r) * w + c) * channels; }
};

// Per-pixel channel vector [rgb/255, occ, emb[sem_id]]; masked modalities zero-filled.
FusedMap fuse_maps(const RgbMap& rgb, const OccupancyMap& occ, const SemanticMap& sem,
                   const SemanticEmbeddingView& emb, const ChannelMask& mask = {});

}  // namespace navone
