#include <algorithm>
#include <limits>
#include <random>
#include <stdexcept>

#include "cfgpoly/stability.hpp"

namespace cfgpoly {

namespace {

GaussianInteger power(const GaussianInteger& z, std::uint32_t e) {
  GaussianInteger out(Integer(1), Integer(0));
  for (std::uint32_t k = 0; k < e; ++k) out *= z;
  return out;
}

// Uniform in [0, range) by rejection; avoids the implementation-defined
// std::uniform_int_distribution so streams match across standard libraries.
std::uint64_t bounded(std::mt19937_64& rng, std::uint64_t range) {
  constexpr std::uint64_t kMax = std::numeric_limits<std::uint64_t>::max();
  const std::uint64_t limit = kMax - kMax % range;
  std::uint64_t x;
  do x = rng();
  while (x >= limit);
  return x % range;
}

long uniform(std::mt19937_64& rng, long lo, long hi) {
  return lo + static_cast<long>(bounded(rng, static_cast<std::uint64_t>(hi - lo) + 1));
}

struct ScaledPoint {
  std::vector<GaussianInteger> g;
  Integer d;
};

ScaledPoint sample_scaled(std::size_t count, std::uint64_t seed, std::uint64_t index, const SamplingBox& box) {
  if (box.max_denominator < 1 || box.re_bound < 0 || box.im_bound < 1)
    throw std::invalid_argument("bad sampling box");
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(index), static_cast<std::uint32_t>(index >> 32)};
  std::mt19937_64 rng(seq);
  const long d = uniform(rng, 1, box.max_denominator);
  ScaledPoint p;
  p.d = d;
  p.g.reserve(count);
  for (std::size_t k = 0; k < count; ++k) {
    const long re = uniform(rng, -box.re_bound * d, box.re_bound * d);
    const long im = uniform(rng, 1, box.im_bound * d);
    p.g.emplace_back(Integer(re), Integer(im));
  }
  return p;
}

Point to_point(const std::vector<Variable>& vars, const ScaledPoint& sp) {
  Point point;
  const Rational d(sp.d);
  for (std::size_t k = 0; k < vars.size(); ++k) {
    GaussianRational z = to_rational(sp.g[k]);
    z.re /= d;
    z.im /= d;
    point[vars[k]] = z;
  }
  return point;
}

bool in_upper_half_plane(const Point& point) {
  return std::all_of(point.begin(), point.end(), [](const auto& kv) { return sgn(kv.second.im) > 0; });
}

}  // namespace

CompiledPolynomial::CompiledPolynomial(const Polynomial& p, const std::vector<Variable>& slots) {
  for (const auto& [m, c] : p.terms()) {
    Term t;
    t.coefficient = c;
    t.degree = m.degree();
    for (const auto& [v, e] : m.entries()) {
      auto it = std::lower_bound(slots.begin(), slots.end(), v);
      if (it == slots.end() || *it != v) throw unassigned_variable(v);
      t.powers.emplace_back(static_cast<std::size_t>(it - slots.begin()), e);
    }
    degree_ = std::max(degree_, t.degree);
    terms_.push_back(std::move(t));
  }
}

GaussianInteger CompiledPolynomial::scaled_value(const std::vector<GaussianInteger>& g, const Integer& d) const {
  std::vector<Integer> dpow(degree_ + 1);
  dpow[0] = 1;
  for (std::uint32_t k = 1; k <= degree_; ++k) dpow[k] = dpow[k - 1] * d;
  GaussianInteger total;
  for (const Term& t : terms_) {
    GaussianInteger z(Integer(t.coefficient * dpow[degree_ - t.degree]), Integer(0));
    for (const auto& [slot, e] : t.powers) z *= e == 1 ? g[slot] : power(g[slot], e);
    total += z;
  }
  return total;
}

PolynomialTarget::PolynomialTarget(const Polynomial& p) : vars_(p.variables()), compiled_(p, vars_) {}

bool StabilityTarget::vanishes_at(const Point& point) const {
  const auto& vars = variables();
  Integer d(1);
  for (Variable v : vars) {
    auto it = point.find(v);
    if (it == point.end()) throw unassigned_variable(v);
    mpz_lcm(d.get_mpz_t(), d.get_mpz_t(), it->second.re.get_den_mpz_t());
    mpz_lcm(d.get_mpz_t(), d.get_mpz_t(), it->second.im.get_den_mpz_t());
  }
  std::vector<GaussianInteger> g;
  g.reserve(vars.size());
  const Rational dq(d);
  for (Variable v : vars) {
    const GaussianRational& z = point.at(v);
    Rational re = z.re * dq, im = z.im * dq;
    g.emplace_back(re.get_num(), im.get_num());
  }
  return scaled_value(g, d).is_zero();
}

Point sample_point(const std::vector<Variable>& vars, std::uint64_t seed, std::uint64_t index, const SamplingBox& box) {
  return to_point(vars, sample_scaled(vars.size(), seed, index, box));
}

FalsifyResult sample_falsify(const StabilityTarget& target, const FalsifyOptions& options) {
  FalsifyResult result;
  const auto& vars = target.variables();

  for (std::size_t k = 0; k < options.injected.size(); ++k) {
    Point point;
    bool complete = true;
    for (Variable v : vars) {
      auto it = options.injected[k].find(v);
      if (it == options.injected[k].end()) {
        complete = false;
        break;
      }
      point[v] = it->second;
    }
    if (!complete || !in_upper_half_plane(point)) continue;
    ++result.points_tested;
    if (target.vanishes_at(point)) {
      result.witness = Witness{std::move(point), "injected", k};
      return result;
    }
  }

  for (std::uint64_t i = 0; i < options.samples; ++i) {
    ScaledPoint sp = sample_scaled(vars.size(), options.seed, i, options.box);
    ++result.points_tested;
    const GaussianInteger value = target.scaled_value(sp.g, sp.d);
    if (value.is_zero()) {
      result.witness = Witness{to_point(vars, sp), "sample", i};
      return result;
    }
    if (!options.solve_affine || vars.empty()) continue;

    // Restrict to the line through the sample in coordinate j.
    const std::size_t j = i % vars.size();
    ScaledPoint line = sp;
    line.g[j] = GaussianInteger();
    const GaussianInteger alpha = target.scaled_value(line.g, line.d);
    line.g[j] = GaussianInteger(sp.d, Integer(0));
    const GaussianInteger beta = target.scaled_value(line.g, line.d) - alpha;
    if (beta.is_zero()) continue;
    const GaussianRational root = -(to_rational(alpha) / to_rational(beta));
    if (sgn(root.im) <= 0) continue;
    Point candidate = to_point(vars, sp);
    candidate[vars[j]] = root;
    if (target.vanishes_at(candidate)) {
      result.witness = Witness{std::move(candidate), "affine-solve", i};
      return result;
    }
  }
  return result;
}

FalsifyResult sample_falsify(const Polynomial& p, const FalsifyOptions& options) {
  return sample_falsify(PolynomialTarget(p), options);
}

}  // namespace cfgpoly
