#pragma once

#include <cstddef>
#include <random>
#include <string>
#include <string_view>

#include "oqmi/qcore.hpp"

namespace oqmi {

struct NamedState {
  enum class Family { Ghz, Dicke, Cluster4, Antisym3 };

  Family family = Family::Ghz;
  std::size_t n = 3;      // party count
  std::size_t r = 1;      // Dicke excitation number
  std::size_t local = 2;  // GHZ local dimension

  static NamedState ghz(std::size_t n, std::size_t d = 2) { return {Family::Ghz, n, 0, d}; }
  static NamedState dicke(std::size_t n, std::size_t r) { return {Family::Dicke, n, r, 2}; }
  static NamedState w(std::size_t n) { return dicke(n, 1); }
  static NamedState cluster4() { return {Family::Cluster4, 4, 0, 2}; }
  static NamedState antisym3() { return {Family::Antisym3, 3, 0, 3}; }

  // "ghz:3", "ghz:3:3", "w:3", "dicke:4:2", "cluster4", "antisym3".
  static NamedState parse(std::string_view spec);
  std::string spec() const;
  Dims dims() const;
};

PureState build(const NamedState& spec);

// p |psi><psi| + (1 - p) I/d, so p = 1 is the pure state.
DensityMatrix white_noise(const PureState& psi, double p);

// Hilbert-Schmidt random mixed state G G† / tr(G G†), G i.i.d. standard complex Gaussian.
DensityMatrix random_mixed_state(const Dims& dims, std::mt19937_64& rng);
// Haar-random pure state (normalized complex Gaussian vector).
PureState random_pure_state(const Dims& dims, std::mt19937_64& rng);

}  // namespace oqmi
