#include "cechkit/prosystem.hpp"

#include <algorithm>
#include <stdexcept>

#include "cechkit/errors.hpp"

namespace cechkit {

Mat ProSystem::transition(int m, int n, int degree) const {
  if (n < 1 || m < n || m > max_level()) throw std::out_of_range("transition levels out of range");
  Mat composite = Mat::identity(dim(m, degree));
  for (int k = m - 1; k >= n; --k) composite = multiply(field(), step(k, degree), composite);
  return composite;
}

FiniteProSystem::FiniteProSystem(PrimeField field, int min_degree,
                                 std::vector<std::vector<std::size_t>> dims,
                                 std::vector<std::vector<Mat>> steps)
    : field_(field), min_degree_(min_degree), dims_(std::move(dims)), steps_(std::move(steps)) {
  if (dims_.empty() || dims_.front().empty()) throw Error("a pro-system needs a level and a degree");
  if (steps_.size() + 1 != dims_.size()) throw Error("a pro-system with L levels needs L−1 steps");
  for (std::size_t n = 0; n < dims_.size(); ++n) {
    if (dims_[n].size() != dims_.front().size()) throw Error("ragged degree range");
    if (n + 1 == dims_.size()) break;
    for (std::size_t d = 0; d < dims_[n].size(); ++d) {
      const Mat& s = steps_[n].at(d);
      if (s.rows() != dims_[n][d] || s.cols() != dims_[n + 1][d])
        throw Error("step shape does not match the dimensions");
    }
  }
}

FiniteProSystem FiniteProSystem::zero(PrimeField field, int levels, int min_degree,
                                      int max_degree) {
  const std::size_t width = static_cast<std::size_t>(max_degree - min_degree + 1);
  std::vector<std::vector<std::size_t>> dims(levels, std::vector<std::size_t>(width, 0));
  std::vector<std::vector<Mat>> steps(levels - 1, std::vector<Mat>(width));
  return FiniteProSystem(field, min_degree, std::move(dims), std::move(steps));
}

std::size_t FiniteProSystem::dim(int level, int degree) const {
  if (degree < min_degree_ || degree > max_degree()) return 0;
  return dims_.at(level - 1)[degree - min_degree_];
}

Mat FiniteProSystem::step(int level, int degree) const {
  if (degree < min_degree_ || degree > max_degree())
    return Mat(0, 0);
  return steps_.at(level - 1)[degree - min_degree_];
}

std::optional<int> essentially_zero(const ProSystem& p, int n, int m_max, int degree_bound) {
  if (m_max < n) throw Error("essentially_zero needs m_max ≥ n");
  const int top = std::min(m_max, p.max_level());
  for (int m = n; m <= top; ++m) {
    bool zero = true;
    for (int d = p.min_degree(); d <= degree_bound && zero; ++d)
      zero = p.transition(m, n, d).is_zero();
    if (zero) return m;
  }
  return std::nullopt;
}

namespace {

std::string level_text(int n) { return "level " + std::to_string(n); }

bool verify_exact(const FiniteProSES& s, TwoOfThreeReport& report) {
  const PrimeField& field = s.y.field();
  const int levels = s.y.max_level();
  if (s.x.max_level() != levels || s.z.max_level() != levels ||
      s.x.min_degree() != s.y.min_degree() || s.z.min_degree() != s.y.min_degree() ||
      s.x.max_degree() != s.y.max_degree() || s.z.max_degree() != s.y.max_degree()) {
    report.violations.push_back({0, "shape", "the three systems have different truncations"});
    return false;
  }
  for (int n = 1; n <= levels; ++n) {
    for (int d = s.y.min_degree(); d <= s.y.max_degree(); ++d) {
      const std::size_t k = static_cast<std::size_t>(d - s.y.min_degree());
      const Mat& f = s.f.at(n - 1).at(k);
      const Mat& g = s.g.at(n - 1).at(k);
      const std::size_t dx = s.x.dim(n, d), dy = s.y.dim(n, d), dz = s.z.dim(n, d);
      const bool shapes = f.rows() == dy && f.cols() == dx && g.rows() == dz && g.cols() == dy;
      if (!shapes || rank(field, f) != dx || rank(field, g) != dz || dx + dz != dy ||
          (dx != 0 && dz != 0 && !multiply(field, g, f).is_zero())) {
        report.violations.push_back({n, "exactness", "not short exact in degree " + std::to_string(d)});
        return false;
      }
      if (n == levels) continue;
      const Mat& f_up = s.f.at(n).at(k);
      const Mat& g_up = s.g.at(n).at(k);
      if (!(multiply(field, s.y.step(n, d), f_up) == multiply(field, f, s.x.step(n, d))) ||
          !(multiply(field, s.z.step(n, d), g_up) == multiply(field, g, s.y.step(n, d)))) {
        report.violations.push_back({n, "compatibility", "maps do not commute with steps in degree " + std::to_string(d)});
        return false;
      }
    }
  }
  return true;
}

}  // namespace

TwoOfThreeReport two_out_of_three_check(const FiniteProSES& s) {
  TwoOfThreeReport report;
  if (!verify_exact(s, report)) {
    report.exact = false;
    return report;
  }
  const int levels = s.y.max_level();
  const int bound = s.y.max_degree();
  std::vector<std::optional<int>> wx(levels + 1), wy(levels + 1), wz(levels + 1);
  for (int n = 1; n <= levels; ++n) {
    wx[n] = essentially_zero(s.x, n, levels, bound);
    wy[n] = essentially_zero(s.y, n, levels, bound);
    wz[n] = essentially_zero(s.z, n, levels, bound);
  }
  for (int n = 1; n <= levels; ++n) {
    if (wy[n]) {
      ++report.decidable;
      const int m = *wy[n];
      if (!wx[n] || *wx[n] > m)
        report.violations.push_back({n, "Y ⇒ X", "Y dies by " + level_text(m) + " but X does not"});
      if (!wz[n] || *wz[n] > m)
        report.violations.push_back({n, "Y ⇒ Z", "Y dies by " + level_text(m) + " but Z does not"});
    } else {
      ++report.undecidable;
    }
    if (wx[n] && wz[*wx[n]]) {
      ++report.decidable;
      const int l = *wz[*wx[n]];
      if (!wy[n] || *wy[n] > l)
        report.violations.push_back({n, "X, Z ⇒ Y", "X and Z die by " + level_text(l) + " but Y does not"});
    } else {
      ++report.undecidable;
    }
  }
  return report;
}

}  // namespace cechkit
