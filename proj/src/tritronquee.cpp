#include "eisum/tritronquee.hpp"

#include "eisum/error.hpp"

#include "json.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <limits>
#include <numeric>
#include <sstream>

namespace eisum {

Complex boutroux_x(const Complex& z) {
  return pow(Complex(Real(24)) * z, Real(5) / Real(4)) / Real(30);
}

TaylorSeed seed_from_approximant(const EiSumApproximant& approx, const Complex& z0_in, int order) {
  if (order < 4) fail(ErrorKind::InvalidArgument, "Taylor order must be at least 4");
  PrecisionScope scope(static_cast<unsigned>(approx.options.precision_bits));
  const Complex z0 = rebase(z0_in);
  if (z0.is_zero()) fail(ErrorKind::Domain, "z0 = 0 maps to x = 0");
  const Complex x = boutroux_x(z0);
  const EiSumJet jet = evaluate_jet(approx, x);
  const Complex one_h = Complex(1) + jet.value;
  const Complex s = sqrt(z0 / Real(6));
  const Complex dxdz = pow(Complex(Real(24)) * z0, Real(1) / Real(4));

  TaylorSeed seed;
  seed.z0 = z0;
  seed.order = order;
  seed.c0 = -(s * one_h);
  seed.c1 = -(one_h / (Complex(2) * sqrt(Complex(Real(6)) * z0))) - s * jet.d1 * dxdz;
  return seed;
}

std::vector<Complex> taylor_coefficients(const TaylorSeed& seed) {
  if (seed.order < 4) fail(ErrorKind::InvalidArgument, "Taylor order must be at least 4");
  std::vector<Complex> c{rebase(seed.c0), rebase(seed.c1)};
  for (int n = 2; n <= seed.order; ++n) {
    Complex acc;
    for (int j = 0; j <= n - 2; ++j)
      acc += c[static_cast<std::size_t>(j)] * c[static_cast<std::size_t>(n - 2 - j)];
    acc *= Real(6);
    if (n == 2) acc -= rebase(seed.z0);
    if (n == 3) acc -= Complex(1);
    c.push_back(acc / Real(n * (n - 1)));
  }
  return c;
}

const char* to_string(PoleClass c) noexcept {
  switch (c) {
    case PoleClass::Genuine: return "genuine";
    case PoleClass::Spurious: return "spurious";
    case PoleClass::Borderline: return "borderline";
  }
  return "unknown";
}

std::vector<PoleReport> merge_poles(const PoleResidueSet& set, double radius) {
  const std::size_t n = set.entries.size();
  std::vector<std::complex<double>> loc(n);
  std::vector<double> mag(n);
  for (std::size_t i = 0; i < n; ++i) {
    loc[i] = set.entries[i].pole.to_double();
    mag[i] = static_cast<double>(abs(set.entries[i].residue));
  }
  // Single-linkage clustering by union-find.
  std::vector<std::size_t> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t i) {
    while (parent[i] != i) i = parent[i] = parent[parent[i]];
    return i;
  };
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (std::abs(loc[i] - loc[j]) < radius) parent[find(i)] = find(j);

  constexpr std::size_t kNone = static_cast<std::size_t>(-1);
  std::vector<std::size_t> slot_of(n, kNone);
  std::vector<PoleReport> out;
  std::vector<Complex> sum, plain;
  std::vector<Real> weight;
  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t r = find(i);
    if (slot_of[r] == kNone) {
      slot_of[r] = out.size();
      out.push_back({});
      out.back().roots = 0;
      sum.emplace_back();
      plain.emplace_back();
      weight.emplace_back(0);
    }
    const std::size_t s = slot_of[r];
    const Real w = abs(set.entries[i].residue);
    sum[s] += set.entries[i].pole * w;
    plain[s] += set.entries[i].pole;
    weight[s] += w;
    out[s].roots += 1;
    out[s].residue_magnitude = std::max(out[s].residue_magnitude, mag[i]);
  }
  for (std::size_t s = 0; s < out.size(); ++s)
    out[s].location = weight[s] > 0 ? sum[s] / weight[s] : plain[s] / Real(out[s].roots);
  return out;
}

namespace {

PoleResidueSet z_plane_poles(const std::vector<Complex>& coeffs, const Complex& z0, int n, int m,
                             int bits) {
  if (static_cast<int>(coeffs.size()) < n + m + 1)
    fail(ErrorKind::InvalidArgument, "not enough Taylor coefficients for the requested orders");
  std::vector<GaussianRational> f;
  for (int k = 0; k <= n + m; ++k) f.push_back(exact_gaussian(coeffs[static_cast<std::size_t>(k)]));
  const auto pade = build_pade<GaussianRational>(f, n, m, exact_gaussian(z0));
  return partial_fractions(pade, bits);
}

}  // namespace

std::vector<PoleReport> locate_poles(const std::vector<Complex>& coeffs, const Complex& z0, int n,
                                     int m, const PoleSearchOptions& options) {
  PrecisionScope scope(static_cast<unsigned>(options.precision_bits));
  const auto main_set = z_plane_poles(coeffs, z0, n, m, options.precision_bits);
  auto reports = merge_poles(main_set, options.merge_radius);

  const int shift = options.stability_shift;
  std::vector<PoleReport> lower;
  if (n - shift >= 1 && m - shift >= 1)
    lower = merge_poles(z_plane_poles(coeffs, z0, n - shift, m - shift, options.precision_bits),
                        options.merge_radius);

  std::vector<double> mags;
  for (const auto& r : reports) mags.push_back(r.residue_magnitude);
  std::vector<double> sorted = mags;
  std::sort(sorted.begin(), sorted.end());
  const double ref = sorted.empty() ? 0.0 : sorted[sorted.size() / 2];

  for (auto& r : reports) {
    double best = std::numeric_limits<double>::infinity();
    const auto loc = r.location.to_double();
    for (const auto& l : lower) best = std::min(best, std::abs(loc - l.location.to_double()));
    r.stability = best;
    if (r.residue_magnitude < options.tau_prime * ref) {
      r.classification = PoleClass::Spurious;
    } else if (r.residue_magnitude >= options.tau * ref && r.stability < options.stability_tol) {
      r.classification = PoleClass::Genuine;
    } else {
      r.classification = PoleClass::Borderline;
    }
  }

  const auto z0d = z0.to_double();
  std::sort(reports.begin(), reports.end(), [&](const PoleReport& a, const PoleReport& b) {
    const double da = std::abs(a.location.to_double() - z0d);
    const double db = std::abs(b.location.to_double() - z0d);
    if (da != db) return da < db;
    return std::arg(a.location.to_double() - z0d) < std::arg(b.location.to_double() - z0d);
  });
  return reports;
}

namespace {

std::string fixed(double v) {
  std::ostringstream os;
  os.precision(17);
  os << v;
  return os.str();
}

}  // namespace

std::string to_json(const std::vector<PoleReport>& reports) {
  auto arr = nlohmann::ordered_json::array();
  for (const auto& r : reports) {
    nlohmann::ordered_json j;
    j["location"] = {to_decimal(r.location.re), to_decimal(r.location.im)};
    j["residue_magnitude"] = r.residue_magnitude;
    j["class"] = to_string(r.classification);
    j["stability"] = std::isfinite(r.stability) ? nlohmann::ordered_json(r.stability)
                                                : nlohmann::ordered_json(nullptr);
    j["roots"] = r.roots;
    arr.push_back(std::move(j));
  }
  return arr.dump(2) + "\n";
}

std::string to_csv(const std::vector<PoleReport>& reports) {
  std::string out = "re,im,residue_mag,class,stability\n";
  for (const auto& r : reports) {
    out += to_decimal(r.location.re) + "," + to_decimal(r.location.im) + "," +
           fixed(r.residue_magnitude) + "," + to_string(r.classification) + "," +
           (std::isfinite(r.stability) ? fixed(r.stability) : std::string("inf")) + "\n";
  }
  return out;
}

}  // namespace eisum
