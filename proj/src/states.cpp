#include "oqmi/states.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <charconv>
#include <cmath>
#include <stdexcept>
#include <vector>

namespace oqmi {

namespace {

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> parts;
  std::size_t start = 0;
  for (std::size_t i = 0; i <= s.size(); ++i)
    if (i == s.size() || s[i] == sep) {
      parts.push_back(s.substr(start, i - start));
      start = i + 1;
    }
  return parts;
}

std::size_t parse_count(std::string_view text, std::string_view spec) {
  std::size_t value = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc{} || ptr != text.data() + text.size() || text.empty())
    throw std::invalid_argument("bad number '" + std::string(text) + "' in state spec '" +
                                std::string(spec) + "'");
  return value;
}

void check(const NamedState& s) {
  switch (s.family) {
    case NamedState::Family::Ghz:
      if (s.n < 2) throw std::invalid_argument("ghz needs n >= 2");
      if (s.local < 2) throw std::invalid_argument("ghz needs local dimension >= 2");
      break;
    case NamedState::Family::Dicke:
      if (s.n < 2 || s.r < 1 || s.r > s.n - 1)
        throw std::invalid_argument("dicke needs n >= 2 and 1 <= r <= n-1");
      break;
    case NamedState::Family::Cluster4:
    case NamedState::Family::Antisym3: break;
  }
  if (s.n > 16) throw std::invalid_argument("state too large");
}

}  // namespace

NamedState NamedState::parse(std::string_view spec) {
  const auto parts = split(spec, ':');
  const std::string_view family = parts.front();
  NamedState s;
  if (family == "ghz" && (parts.size() == 2 || parts.size() == 3)) {
    s = ghz(parse_count(parts[1], spec), parts.size() == 3 ? parse_count(parts[2], spec) : 2);
  } else if (family == "w" && parts.size() == 2) {
    s = w(parse_count(parts[1], spec));
  } else if (family == "dicke" && parts.size() == 3) {
    s = dicke(parse_count(parts[1], spec), parse_count(parts[2], spec));
  } else if (family == "cluster4" && parts.size() == 1) {
    s = cluster4();
  } else if (family == "antisym3" && parts.size() == 1) {
    s = antisym3();
  } else {
    throw std::invalid_argument("unknown state spec '" + std::string(spec) + "'");
  }
  check(s);
  return s;
}

std::string NamedState::spec() const {
  switch (family) {
    case Family::Ghz:
      return "ghz:" + std::to_string(n) + (local == 2 ? "" : ":" + std::to_string(local));
    case Family::Dicke:
      return r == 1 ? "w:" + std::to_string(n) : "dicke:" + std::to_string(n) + ":" + std::to_string(r);
    case Family::Cluster4: return "cluster4";
    case Family::Antisym3: return "antisym3";
  }
  return "?";
}

Dims NamedState::dims() const { return Dims(n, family == Family::Dicke ? 2 : local); }

PureState build(const NamedState& spec) {
  check(spec);
  const Dims dims = spec.dims();
  ComplexVector amps = ComplexVector::Zero(static_cast<Eigen::Index>(total_dimension(dims)));

  switch (spec.family) {
    case NamedState::Family::Ghz: {
      // |1...1> in base `local`.
      std::size_t ones = 0;
      for (std::size_t i = 0; i < spec.n; ++i) ones = ones * spec.local + 1;
      amps(0) = amps(static_cast<Eigen::Index>(ones)) = 1.0 / std::sqrt(2.0);
      break;
    }
    case NamedState::Family::Dicke: {
      std::size_t count = 0;
      for (Eigen::Index i = 0; i < amps.size(); ++i)
        if (static_cast<std::size_t>(std::popcount(static_cast<std::size_t>(i))) == spec.r) {
          amps(i) = 1.0;
          ++count;
        }
      amps /= std::sqrt(static_cast<double>(count));
      break;
    }
    case NamedState::Family::Cluster4:
      amps(0b0000) = 0.5;
      amps(0b0011) = 0.5;
      amps(0b1100) = 0.5;
      amps(0b1111) = -0.5;
      break;
    case NamedState::Family::Antisym3: {
      // Levels 1, 2, 3 of the kets map to 0, 1, 2; the coefficient is the
      // permutation sign.
      std::array<int, 3> perm{0, 1, 2};
      const double norm = 1.0 / std::sqrt(6.0);
      do {
        int inversions = 0;
        for (int i = 0; i < 3; ++i)
          for (int j = i + 1; j < 3; ++j)
            if (perm[i] > perm[j]) ++inversions;
        const auto index = static_cast<Eigen::Index>(perm[0] * 9 + perm[1] * 3 + perm[2]);
        amps(index) = (inversions % 2 == 0 ? 1.0 : -1.0) * norm;
      } while (std::next_permutation(perm.begin(), perm.end()));
      break;
    }
  }
  return PureState(std::move(amps), dims);
}

DensityMatrix white_noise(const PureState& psi, double p) {
  if (!(p >= 0.0 && p <= 1.0)) throw std::invalid_argument("noise parameter p must lie in [0, 1]");
  const auto d = psi.amplitudes.size();
  ComplexMatrix m = p * (psi.amplitudes * psi.amplitudes.adjoint());
  m.diagonal().array() += (1.0 - p) / static_cast<double>(d);
  return DensityMatrix(std::move(m), psi.dims);
}

DensityMatrix random_mixed_state(const Dims& dims, std::mt19937_64& rng) {
  const auto d = static_cast<Eigen::Index>(total_dimension(dims));
  std::normal_distribution<double> gauss(0.0, 1.0);
  ComplexMatrix g(d, d);
  for (Eigen::Index c = 0; c < d; ++c)
    for (Eigen::Index r = 0; r < d; ++r) g(r, c) = Complex{gauss(rng), gauss(rng)};
  ComplexMatrix m = g * g.adjoint();
  m /= m.trace().real();
  m = 0.5 * (m + m.adjoint()).eval();
  return DensityMatrix(std::move(m), dims);
}

PureState random_pure_state(const Dims& dims, std::mt19937_64& rng) {
  const auto d = static_cast<Eigen::Index>(total_dimension(dims));
  std::normal_distribution<double> gauss(0.0, 1.0);
  ComplexVector v(d);
  for (Eigen::Index i = 0; i < d; ++i) v(i) = Complex{gauss(rng), gauss(rng)};
  v.normalize();
  return PureState(std::move(v), dims);
}

}  // namespace oqmi
