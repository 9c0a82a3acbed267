#pragma once

#include <Eigen/Dense>

#include <array>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace seta {

using Scalar = double;
using Mat = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
using Vec = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;
using Arr = Eigen::Array<Scalar, Eigen::Dynamic, Eigen::Dynamic>;

// Raised when a computation produces non-finite values.
class NumericError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline constexpr int kKeypointCount = 14;
inline constexpr int kPartCount = 8;

enum Keypoint : int {
  kHead = 0,
  kNeck,
  kShoulderL,
  kShoulderR,
  kElbowL,
  kElbowR,
  kWristL,
  kWristR,
  kHipL,
  kHipR,
  kKneeL,
  kKneeR,
  kAnkleL,
  kAnkleR,
};

enum Part : int {
  kPartHead = 0,
  kPartTorso,
  kPartArmL,
  kPartArmR,
  kPartThighL,
  kPartThighR,
  kPartShinL,
  kPartShinR,
};

const char* keypoint_name(int k);
const char* part_name(int q);

// RGB raster, values in [0,1]. Stored as a 3 x (H*W) matrix with sites
// indexed y*W + x so the pixel grid maps directly onto the channels-by-sites
// layout used everywhere else (features, heatmaps, masks).
struct Image {
  int height = 0;
  int width = 0;
  Mat rgb;  // 3 x (height*width)

  Image() = default;
  Image(int h, int w) : height(h), width(w), rgb(Mat::Zero(3, h * w)) {}

  int sites() const { return height * width; }
  int site(int y, int x) const { return y * width + x; }
  Scalar& at(int c, int y, int x) { return rgb(c, site(y, x)); }
  Scalar at(int c, int y, int x) const { return rgb(c, site(y, x)); }

  static Image filled(int h, int w, Scalar r, Scalar g, Scalar b) {
    Image im(h, w);
    im.rgb.row(0).setConstant(r);
    im.rgb.row(1).setConstant(g);
    im.rgb.row(2).setConstant(b);
    return im;
  }
};

// Keypoints in pixel coordinates, (x, y) per row, y-down.
struct Skeleton {
  Eigen::Matrix<Scalar, kKeypointCount, 2> keypoints =
      Eigen::Matrix<Scalar, kKeypointCount, 2>::Zero();
  std::array<bool, kKeypointCount> visibility{};

  Scalar x(int k) const { return keypoints(k, 0); }
  Scalar y(int k) const { return keypoints(k, 1); }
};

// Per-joint Gaussian response maps, one channel per keypoint.
struct Heatmaps {
  int height = 0;
  int width = 0;
  Scalar sigma = 0;
  Mat channels;  // kKeypointCount x (height*width)
};

// Q binary part masks; pairwise disjoint, union = figure foreground.
struct PartMaskSet {
  int height = 0;
  int width = 0;
  Mat masks;  // kPartCount x (height*width), entries in {0,1}

  PartMaskSet() = default;
  PartMaskSet(int h, int w)
      : height(h), width(w), masks(Mat::Zero(kPartCount, h * w)) {}

  int site(int y, int x) const { return y * width + x; }
  // 1 x (H*W) row: union of all parts.
  Mat foreground() const { return masks.colwise().sum().cwiseMin(1.0); }
};

struct PersonSample {
  Image image;
  Skeleton skeleton;
  PartMaskSet parts;
  std::string identity_tag;
};

// Inclusive pixel bounding box.
struct Box {
  int x0 = 0, y0 = 0, x1 = -1, y1 = -1;
  bool empty() const { return x1 < x0 || y1 < y0; }
  int w() const { return x1 - x0 + 1; }
  int h() const { return y1 - y0 + 1; }
  long area() const { return empty() ? 0 : long(w()) * long(h()); }
};

Box foreground_bbox(const PartMaskSet& parts);

}  // namespace seta
