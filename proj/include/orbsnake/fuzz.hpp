#pragma once

#include <cstdint>
#include <optional>
#include <random>

#include "orbsnake/orbifold.hpp"

namespace orbsnake {

struct DiskOptions {
  int triangles = 6;
  double pending_rate = 0.4;
  int min_order = 2;
  int max_order = 6;
};

struct CurveOptions {
  CurveKind kind = CurveKind::OrdinaryArc;
  int max_crossings = 8;  // snake-graph tiles (pending pairs count twice)
  double endpoint_winding_rate = 0.2;  // generalized arcs only
};

struct FuzzCase {
  Triangulation triangulation;
  CurveDescriptor curve;
};

class Fuzzer {
 public:
  explicit Fuzzer(std::uint64_t seed) : rng_(seed) {}

  // A disk glued from triangles and pending bigons, every triangle recorded clockwise.
  Triangulation random_disk(const DiskOptions& opt);
  std::optional<CurveDescriptor> random_curve(const Triangulation& t, const CurveOptions& opt);
  // Retries until a curve of the requested kind fits the crossing budget.
  FuzzCase next(const DiskOptions& disk, const CurveOptions& curve);

  int uniform(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }
  bool coin(double p) { return std::bernoulli_distribution(p)(rng_); }

 private:
  std::optional<CurveDescriptor> random_open(const Triangulation& t, const CurveOptions& opt);
  std::optional<CurveDescriptor> random_closed(const Triangulation& t, const CurveOptions& opt);
  std::mt19937_64 rng_;
};

}  // namespace orbsnake
