#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include "dup/geometry.hpp"

namespace dup {

/// Ordered list of 3D points. The universal payload for attacks,
/// defenses and metrics. Coordinates are expected to be finite;
/// clouds fed to the classifier should be normalized to the unit cube.
struct PointCloud {
  std::vector<Vec3> points;

  std::size_t size() const { return points.size(); }
  bool empty() const { return points.empty(); }
  const Vec3& operator[](std::size_t i) const { return points[i]; }
  Vec3& operator[](std::size_t i) { return points[i]; }

  bool all_finite() const;
};

struct LabeledCloud {
  PointCloud cloud;
  int label = 0;
};

enum class ShapeFamily { Sphere, Cube, Cylinder, Cone, Torus, Pyramid, Capsule, Disk };

ShapeFamily shape_family_from_string(const std::string& name);
std::string shape_family_to_string(ShapeFamily family);

/// Parametric surface description for the synthetic dataset.
/// `scale` is the overall size, `aspect` stretches the family-specific
/// secondary dimension (height, minor radius, ...). `jitter` is the
/// standard deviation of isotropic Gaussian surface noise.
struct ShapeSpec {
  ShapeFamily family = ShapeFamily::Sphere;
  double scale = 0.5;
  double aspect = 1.0;
  double jitter = 0.005;
};

/// Area-uniform surface sampling plus Gaussian jitter. Deterministic for
/// fixed (spec, n, seed). Jitter vectors are truncated at 4 standard
/// deviations so sampled points stay within a fixed band of the surface.
PointCloud sample_shape(const ShapeSpec& spec, std::size_t n, std::uint64_t seed);

/// Map the axis-aligned bounding box into [0,1]^3 with a single uniform
/// scale (longest side becomes 1), centered along the shorter axes.
/// A degenerate cloud (all points identical) collapses to (0.5,0.5,0.5).
PointCloud normalize_unit_cube(const PointCloud& cloud);

// --- text I/O: optional "n 3" header, then one "x y z" triple per line ---

PointCloud load_cloud(const std::filesystem::path& path);
void save_cloud(const PointCloud& cloud, const std::filesystem::path& path);

// --- dataset: {train,test}/{class}/{id}.xyz plus a JSON manifest ---

struct DatasetSpec {
  std::vector<std::string> classes;  // empty -> all 8 families
  std::size_t train_per_class = 300;
  std::size_t test_per_class = 60;
  std::size_t points = 1024;
  double jitter = 0.005;
  std::uint64_t seed = 1;
};

struct Dataset {
  std::vector<std::string> classes;
  std::vector<LabeledCloud> train;
  std::vector<LabeledCloud> test;
};

std::vector<std::string> default_shape_classes();

/// Generate the synthetic dataset in memory. Per-cloud seeds are derived
/// from (spec.seed, split, class, id), so any subset is reproducible.
Dataset generate_dataset(const DatasetSpec& spec);

void write_dataset(const Dataset& ds, const std::filesystem::path& root);
Dataset read_dataset(const std::filesystem::path& root);

}  // namespace dup
