#pragma once

// Truncated distributions on the line as finite combs of derivative-delta
// atoms, with the pairing <delta_x^(j), f> = (-1)^j f^(j)(x).

#include <complex>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "guinand/schwartz.hpp"

namespace guinand {

struct Atom {
  double location = 0.0;
  int order = 0;
  std::complex<double> weight{};
  // Exact squared node |lambda|^2 when it is an integer; used for merging.
  std::optional<std::int64_t> n;
};

enum class Parity { unknown, odd };

struct CombMeta {
  int k = 0;
  std::optional<std::int64_t> truncation_n;
  std::optional<double> radius;
  Parity parity = Parity::unknown;
};

/// Atoms sorted by (location, order) with duplicates merged.
class AtomComb {
 public:
  AtomComb() = default;
  AtomComb(std::vector<Atom> atoms, CombMeta meta);

  const std::vector<Atom>& atoms() const noexcept { return atoms_; }
  const CombMeta& meta() const noexcept { return meta_; }
  int max_order() const;

 private:
  std::vector<Atom> atoms_;
  CombMeta meta_;
};

struct PointAtom {
  std::vector<double> point;
  std::complex<double> weight{};
};

/// Finite truncation of a pure point measure on R^k.
class PointMeasure {
 public:
  PointMeasure(int dimension, std::vector<PointAtom> atoms);

  int dimension() const noexcept { return dimension_; }
  const std::vector<PointAtom>& atoms() const noexcept { return atoms_; }

 private:
  int dimension_;
  std::vector<PointAtom> atoms_;
};

/// sum_atoms weight * (-1)^order * f^(order)(location), compensated, in atom order.
std::complex<double> pair(const AtomComb& comb, const GaussPoly& f);

/// -2 delta'_0 + sum_{n<=N} r_k(n)/sqrt(n) (delta_sqrt(n) - delta_-sqrt(n)).
AtomComb sigma_k(int k, std::int64_t N);

/// 2 i alpha_k delta_0^(k-2)
///   - i sum_{n<=N} r_k(n)/n^((k-2)/2) sum_j beta_jk n^(j/2) ((-1)^j delta_sqrt(n)^(j) - delta_-sqrt(n)^(j)).
AtomComb sigma_k_hat(int k, std::int64_t N);

/// A point-measure atom reduced to its squared norm, which is all the
/// projections below depend on. `n` carries |lambda|^2 when it is an integer.
struct RadialAtom {
  double r2 = 0.0;
  std::optional<std::int64_t> n;
  std::complex<double> weight{};
};

std::vector<RadialAtom> radial_atoms(const PointMeasure& mu);

/// 1-D comb -2 a(0) delta'_0 + sum_{lambda != 0} a(lambda)/|lambda| (delta_|lambda| - delta_-|lambda|).
AtomComb project_measure(const PointMeasure& mu);

/// 1-D comb 2 i b(0) alpha_k delta_0^(k-2) - i sum_{s != 0} b(s)/|s|^(k-2) [beta-weighted atoms at +-|s|].
AtomComb project_ft(const PointMeasure& mu_hat, int k);

/// Same projections from radial atoms of a k-dimensional measure. Atoms on a
/// common sphere are merged: exactly when both carry `n`, otherwise when the
/// squared norms agree to 1e-14 relative.
AtomComb project_measure(int k, std::vector<RadialAtom> atoms);
AtomComb project_ft(int k, std::vector<RadialAtom> atoms);

/// [{n, location, order, weight: [re, im]}, ...]
nlohmann::json to_json(const AtomComb& comb);
AtomComb comb_from_json(const nlohmann::json& j, CombMeta meta = {});

}  // namespace guinand
