#include "guinand/atoms.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "guinand/compensated.hpp"
#include "guinand/sumsq.hpp"

namespace guinand {

namespace {

bool same_node(const Atom& a, const Atom& b) {
  if (a.order != b.order) return false;
  if (a.n && b.n) return *a.n == *b.n && std::signbit(a.location) == std::signbit(b.location);
  return a.location == b.location;
}

// A shell {lambda : |lambda| = r} of a point measure, keyed by |lambda|^2.
struct Shell {
  double r2 = 0.0;
  std::optional<std::int64_t> n;
  std::complex<double> weight{};
  bool origin = false;
};

std::vector<Shell> collect_shells(std::vector<RadialAtom> raw) {
  std::stable_sort(raw.begin(), raw.end(), [](const RadialAtom& a, const RadialAtom& b) {
    const double ra = a.n ? static_cast<double>(*a.n) : a.r2;
    const double rb = b.n ? static_cast<double>(*b.n) : b.r2;
    return ra < rb;
  });
  std::vector<Shell> merged;
  for (const auto& atom : raw) {
    Shell s{atom.n ? static_cast<double>(*atom.n) : atom.r2, atom.n, atom.weight, false};
    s.origin = (s.r2 == 0.0);
    if (!merged.empty()) {
      Shell& last = merged.back();
      const bool same = (last.n && s.n) ? *last.n == *s.n
                                        : std::abs(last.r2 - s.r2) <= 1e-14 * std::max(last.r2, s.r2);
      if (same) {
        last.weight += s.weight;
        continue;
      }
    }
    merged.push_back(s);
  }
  return merged;
}

double shell_radius(const Shell& s) {
  return s.n ? std::sqrt(static_cast<double>(*s.n)) : std::sqrt(s.r2);
}

// beta_jk * n^((j-k+2)/2) * factor, with the exact part rounded once.
double beta_node_weight(const ScaledRational& beta_j, const BigInt& factor, int j, int k, std::int64_t n) {
  const int e = j - k + 2;  // always negative
  const int whole = (e % 2 == 0) ? -e / 2 : (-e - 1) / 2;
  Rational denom = 1;
  for (int i = 0; i < whole; ++i) denom *= n;
  const ScaledRational exact = ScaledRational(Rational(factor) / denom, 0) * beta_j;
  const double value = exact.to_double();
  return (e % 2 == 0) ? value : value / std::sqrt(static_cast<double>(n));
}

}  // namespace

AtomComb::AtomComb(std::vector<Atom> atoms, CombMeta meta) : meta_(meta) {
  std::stable_sort(atoms.begin(), atoms.end(), [](const Atom& a, const Atom& b) {
    if (a.location != b.location) return a.location < b.location;
    return a.order < b.order;
  });
  for (auto& atom : atoms) {
    if (!std::isfinite(atom.weight.real()) || !std::isfinite(atom.weight.imag())) {
      throw std::invalid_argument("AtomComb: non-finite weight");
    }
    if (atom.order < 0) throw std::invalid_argument("AtomComb: negative derivative order");
    if (!atoms_.empty() && same_node(atoms_.back(), atom)) {
      atoms_.back().weight += atom.weight;
    } else {
      atoms_.push_back(atom);
    }
  }
  std::erase_if(atoms_, [](const Atom& a) { return a.weight == std::complex<double>{}; });
}

int AtomComb::max_order() const {
  int m = 0;
  for (const auto& a : atoms_) m = std::max(m, a.order);
  return m;
}

PointMeasure::PointMeasure(int dimension, std::vector<PointAtom> atoms)
    : dimension_(dimension), atoms_(std::move(atoms)) {
  if (dimension_ < 1) throw std::invalid_argument("PointMeasure: dimension must be >= 1");
  for (const auto& a : atoms_) {
    if (static_cast<int>(a.point.size()) != dimension_) {
      throw std::invalid_argument("PointMeasure: point has the wrong dimension");
    }
  }
  std::vector<const std::vector<double>*> points;
  for (const auto& a : atoms_) points.push_back(&a.point);
  std::sort(points.begin(), points.end(), [](auto* x, auto* y) { return *x < *y; });
  for (std::size_t i = 1; i < points.size(); ++i) {
    if (*points[i] == *points[i - 1]) throw std::invalid_argument("PointMeasure: duplicate point");
  }
}

std::complex<double> pair(const AtomComb& comb, const GaussPoly& f) {
  const auto ladder = derivative_ladder(f, comb.max_order());
  ComplexCompensatedSum sum;
  for (const auto& atom : comb.atoms()) {
    const std::complex<double> value = eval(ladder[static_cast<std::size_t>(atom.order)], atom.location);
    sum.add((atom.order % 2 == 0 ? 1.0 : -1.0) * atom.weight * value);
  }
  return sum.value();
}

AtomComb sigma_k(int k, std::int64_t N) {
  require_odd_dimension(k, "sigma_k");
  if (N < 0) throw std::invalid_argument("sigma_k: N must be >= 0");
  const RepTable table = rk_table(k, N);
  std::vector<Atom> atoms{{0.0, 1, {-2.0, 0.0}, 0}};
  for (std::int64_t n = 1; n <= N; ++n) {
    if (table[n] == 0) continue;
    const double root = std::sqrt(static_cast<double>(n));
    const double w = table.as_double(n) / root;
    atoms.push_back({root, 0, {w, 0.0}, n});
    atoms.push_back({-root, 0, {-w, 0.0}, n});
  }
  return AtomComb(std::move(atoms), {k, N, std::nullopt, Parity::odd});
}

AtomComb sigma_k_hat(int k, std::int64_t N) {
  require_odd_dimension(k, "sigma_k_hat");
  if (N < 0) throw std::invalid_argument("sigma_k_hat: N must be >= 0");
  const RepTable table = rk_table(k, N);
  const auto betas = beta_row(k);
  const double origin = (ScaledRational(2, 0) * alpha(k)).to_double();
  std::vector<Atom> atoms{{0.0, k - 2, {0.0, origin}, 0}};
  for (std::int64_t n = 1; n <= N; ++n) {
    if (table[n] == 0) continue;
    const double root = std::sqrt(static_cast<double>(n));
    for (int j = 0; j < static_cast<int>(betas.size()); ++j) {
      const double x = beta_node_weight(betas[static_cast<std::size_t>(j)], table[n], j, k, n);
      // -i x ((-1)^j delta_+ - delta_-)
      atoms.push_back({root, j, {0.0, j % 2 == 0 ? -x : x}, n});
      atoms.push_back({-root, j, {0.0, x}, n});
    }
  }
  return AtomComb(std::move(atoms), {k, N, std::nullopt, Parity::unknown});
}

std::vector<RadialAtom> radial_atoms(const PointMeasure& mu) {
  std::vector<RadialAtom> out;
  out.reserve(mu.atoms().size());
  for (const auto& atom : mu.atoms()) {
    RadialAtom r;
    r.weight = atom.weight;
    bool integral = true;
    std::int64_t n = 0;
    CompensatedSum r2;
    for (double x : atom.point) {
      r2.add(x * x);
      if (integral && x == std::nearbyint(x) && std::abs(x) < 3.0e9) {
        const auto xi = static_cast<std::int64_t>(x);
        n += xi * xi;
      } else {
        integral = false;
      }
    }
    r.r2 = integral ? static_cast<double>(n) : r2.value();
    if (integral) r.n = n;
    out.push_back(r);
  }
  return out;
}

AtomComb project_measure(const PointMeasure& mu) { return project_measure(mu.dimension(), radial_atoms(mu)); }

AtomComb project_ft(const PointMeasure& mu_hat, int k) {
  if (mu_hat.dimension() != k) throw std::invalid_argument("project_ft: k must equal the measure's dimension");
  return project_ft(k, radial_atoms(mu_hat));
}

AtomComb project_measure(int k, std::vector<RadialAtom> atoms) {
  require_odd_dimension(k, "project_measure");
  std::vector<Atom> out;
  double radius = 0.0;
  for (const auto& shell : collect_shells(std::move(atoms))) {
    if (shell.origin) {
      out.push_back({0.0, 1, -2.0 * shell.weight, 0});
      continue;
    }
    const double r = shell_radius(shell);
    radius = std::max(radius, r);
    const std::complex<double> w = shell.weight / r;
    out.push_back({r, 0, w, shell.n});
    out.push_back({-r, 0, -w, shell.n});
  }
  return AtomComb(std::move(out), {k, std::nullopt, radius, Parity::odd});
}

AtomComb project_ft(int k, std::vector<RadialAtom> atoms) {
  require_odd_dimension(k, "project_ft");
  const auto betas = beta_row(k);
  const std::vector<double> beta_d = beta_row_double(k);
  const double two_alpha = (ScaledRational(2, 0) * alpha(k)).to_double();
  const std::complex<double> minus_i{0.0, -1.0};

  std::vector<Atom> out;
  double radius = 0.0;
  for (const auto& shell : collect_shells(std::move(atoms))) {
    if (shell.origin) {
      out.push_back({0.0, k - 2, std::complex<double>{0.0, two_alpha} * shell.weight, 0});
      continue;
    }
    const double r = shell_radius(shell);
    radius = std::max(radius, r);
    for (int j = 0; j < static_cast<int>(betas.size()); ++j) {
      const double x = shell.n ? beta_node_weight(betas[static_cast<std::size_t>(j)], 1, j, k, *shell.n)
                               : beta_d[static_cast<std::size_t>(j)] * std::pow(r, j - k + 2);
      const std::complex<double> c = minus_i * shell.weight * x;
      out.push_back({r, j, j % 2 == 0 ? c : -c, shell.n});
      out.push_back({-r, j, -c, shell.n});
    }
  }
  return AtomComb(std::move(out), {k, std::nullopt, radius, Parity::unknown});
}

nlohmann::json to_json(const AtomComb& comb) {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& a : comb.atoms()) {
    out.push_back({{"n", a.n ? nlohmann::json(*a.n) : nlohmann::json(nullptr)},
                   {"location", a.location},
                   {"order", a.order},
                   {"weight", {a.weight.real(), a.weight.imag()}}});
  }
  return out;
}

AtomComb comb_from_json(const nlohmann::json& j, CombMeta meta) {
  if (!j.is_array()) throw std::invalid_argument("comb JSON must be an array");
  std::vector<Atom> atoms;
  for (const auto& item : j) {
    Atom a;
    if (!item.at("n").is_null()) a.n = item.at("n").get<std::int64_t>();
    a.location = item.at("location").get<double>();
    a.order = item.at("order").get<int>();
    const auto& w = item.at("weight");
    if (!w.is_array() || w.size() != 2) throw std::invalid_argument("comb JSON: weight must be [re, im]");
    a.weight = {w[0].get<double>(), w[1].get<double>()};
    atoms.push_back(a);
  }
  return AtomComb(std::move(atoms), meta);
}

}  // namespace guinand
