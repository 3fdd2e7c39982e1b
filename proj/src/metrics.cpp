#include "moseed/metrics.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <mutex>
#include <stdexcept>

namespace moseed {

ApproximationResult additive_approximation(
    const std::vector<ObjectiveVector>& S,
    const std::vector<ObjectiveVector>& T) {
  if (S.empty() || T.empty())
    throw std::domain_error("additive_approximation: empty input set");
  const std::size_t d = S[0].size();
  if (T[0].size() != d)
    throw std::invalid_argument(
        "additive_approximation: objective dimension mismatch");

  double alpha = -std::numeric_limits<double>::infinity();
  std::size_t witness = 0;
  for (std::size_t si = 0; si < S.size(); ++si) {
    const ObjectiveVector& s = S[si];
    double inner = std::numeric_limits<double>::infinity();
    for (const ObjectiveVector& t : T) {
      double m = -std::numeric_limits<double>::infinity();
      for (std::size_t i = 0; i < d; ++i) {
        const double v = t[i] - s[i];
        if (v > m) {
          m = v;
          if (m >= inner) break;  // cannot improve the running min
        }
      }
      if (m < inner) {
        inner = m;
        if (inner <= alpha) break;  // cannot raise the outer max
      }
    }
    if (inner > alpha) {
      alpha = inner;
      witness = si;
    }
  }
  return {alpha, witness};
}

namespace {

std::uint64_t fnv1a(const std::string& s) {
  std::uint64_t h = 0xcbf29ce484222325ull;
  for (unsigned char c : s) {
    h ^= c;
    h *= 0x100000001b3ull;
  }
  return h;
}

}  // namespace

const std::vector<ObjectiveVector>& cached_front(const ProblemInstance& p,
                                                 std::size_t count, Rng& rng) {
  static std::map<std::pair<std::string, std::size_t>,
                  std::vector<ObjectiveVector>>
      cache;
  static std::mutex mtx;
  std::lock_guard<std::mutex> lock(mtx);
  auto key = std::make_pair(p.name, count);
  auto it = cache.find(key);
  if (it == cache.end())
    it = cache.emplace(key, front_sample(p, count, rng)).first;
  return it->second;
}

std::size_t default_front_sample_size(const ProblemInstance& p) {
  return p.name.rfind("dtlz", 0) == 0 ? 1000000u : 10000u;
}

double approximation_of_front(const ProblemInstance& p,
                              const std::vector<ObjectiveVector>& pop,
                              std::size_t front_sample_size, Rng& rng) {
  if (front_sample_size == 0)
    front_sample_size = default_front_sample_size(p);
  const auto& front = cached_front(p, front_sample_size, rng);
  return additive_approximation(front, pop).alpha;
}

// Canonical RNG for a front cache entry, independent of any experiment seed.
Rng front_rng(const ProblemInstance& p, std::size_t count) {
  return Rng(fnv1a(p.name) ^ (0x9e3779b97f4a7c15ull * count));
}

// ----------------------------------------------------------------- volumes

namespace {

bool weakly_dominated_by(const ObjectiveVector& a, const ObjectiveVector& b) {
  // b <= a componentwise
  for (std::size_t i = 0; i < a.size(); ++i)
    if (b[i] > a[i]) return false;
  return true;
}

// keep the non-dominated points, dropping exact duplicates
std::vector<ObjectiveVector> nondominated_subset(
    std::vector<ObjectiveVector> pts) {
  // decide before moving anything out, so every comparison sees intact points
  std::vector<char> keep(pts.size(), 1);
  for (std::size_t i = 0; i < pts.size(); ++i) {
    for (std::size_t j = 0; j < pts.size() && keep[i]; ++j) {
      if (i == j) continue;
      if (pts[i] == pts[j]) {
        if (j < i) keep[i] = 0;  // first duplicate survives
      } else if (weakly_dominated_by(pts[i], pts[j])) {
        keep[i] = 0;
      }
    }
  }
  std::vector<ObjectiveVector> out;
  out.reserve(pts.size());
  for (std::size_t i = 0; i < pts.size(); ++i)
    if (keep[i]) out.push_back(std::move(pts[i]));
  return out;
}

double inclusive_volume(const ObjectiveVector& p, const ObjectiveVector& ref) {
  double v = 1.0;
  for (std::size_t i = 0; i < p.size(); ++i) v *= ref[i] - p[i];
  return v;
}

double staircase_2d(std::vector<ObjectiveVector> pts,
                    const ObjectiveVector& ref) {
  std::sort(pts.begin(), pts.end());
  double area = 0.0;
  double prev_y = ref[1];
  for (const auto& p : pts) {
    if (p[1] < prev_y) {
      area += (ref[0] - p[0]) * (prev_y - p[1]);
      prev_y = p[1];
    }
  }
  return area;
}

// exclusive-volume dimension sweep (WFG style)
double hv_recurse(std::vector<ObjectiveVector> pts, const ObjectiveVector& ref,
                  bool use_2d_base) {
  if (pts.empty()) return 0.0;
  const std::size_t d = ref.size();
  if (d == 1) {
    double lo = pts[0][0];
    for (const auto& p : pts) lo = std::min(lo, p[0]);
    return ref[0] - lo;
  }
  if (d == 2 && use_2d_base) return staircase_2d(std::move(pts), ref);

  std::sort(pts.begin(), pts.end());
  double total = 0.0;
  for (std::size_t k = 0; k < pts.size(); ++k) {
    // limit set: remaining points clipped to the box of pts[k]
    std::vector<ObjectiveVector> lim;
    lim.reserve(pts.size() - k - 1);
    for (std::size_t j = k + 1; j < pts.size(); ++j) {
      ObjectiveVector q(d);
      for (std::size_t i = 0; i < d; ++i)
        q[i] = std::max(pts[k][i], pts[j][i]);
      lim.push_back(std::move(q));
    }
    total += inclusive_volume(pts[k], ref) -
             hv_recurse(nondominated_subset(std::move(lim)), ref, use_2d_base);
  }
  return total;
}

std::vector<ObjectiveVector> inside_reference(
    const std::vector<ObjectiveVector>& pts, const ObjectiveVector& ref) {
  std::vector<ObjectiveVector> kept;
  kept.reserve(pts.size());
  for (const auto& p : pts) {
    if (p.size() != ref.size())
      throw std::invalid_argument("hypervolume: dimension mismatch");
    bool ok = true;
    for (std::size_t i = 0; i < p.size(); ++i)
      if (p[i] > ref[i]) {
        ok = false;
        break;
      }
    if (ok) kept.push_back(p);
  }
  return kept;
}

}  // namespace

double hypervolume(const std::vector<ObjectiveVector>& pts,
                   const ObjectiveVector& ref) {
  if (ref.empty()) throw std::invalid_argument("hypervolume: empty reference");
  return hv_recurse(nondominated_subset(inside_reference(pts, ref)), ref,
                    true);
}

double detail::hypervolume_no_2d_base(const std::vector<ObjectiveVector>& pts,
                                      const ObjectiveVector& ref) {
  if (ref.empty()) throw std::invalid_argument("hypervolume: empty reference");
  return hv_recurse(nondominated_subset(inside_reference(pts, ref)), ref,
                    false);
}

std::vector<double> hv_contributions(const std::vector<ObjectiveVector>& pts,
                                     const ObjectiveVector& ref) {
  const double total = hypervolume(pts, ref);
  std::vector<double> contrib(pts.size(), 0.0);
  for (std::size_t i = 0; i < pts.size(); ++i) {
    std::vector<ObjectiveVector> rest;
    rest.reserve(pts.size() - 1);
    for (std::size_t j = 0; j < pts.size(); ++j)
      if (j != i) rest.push_back(pts[j]);
    contrib[i] = total - hypervolume(rest, ref);
  }
  return contrib;
}

std::vector<double> hv_contributions_2d(
    const std::vector<ObjectiveVector>& pts, const ObjectiveVector& ref) {
  if (ref.size() != 2)
    throw std::invalid_argument("hv_contributions_2d: needs 2 objectives");
  std::vector<double> contrib(pts.size(), 0.0);

  // indices of points inside the reference box, neither dominated nor
  // duplicated; everything else contributes 0
  std::vector<std::size_t> idx;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    if (pts[i].size() != 2)
      throw std::invalid_argument("hv_contributions_2d: needs 2 objectives");
    if (pts[i][0] > ref[0] || pts[i][1] > ref[1]) continue;
    bool keep = true;
    for (std::size_t j = 0; j < pts.size() && keep; ++j) {
      if (i == j) continue;
      if (pts[i] == pts[j])
        keep = false;  // duplicates contribute nothing
      else if (weakly_dominated_by(pts[i], pts[j]))
        keep = false;
    }
    if (keep) idx.push_back(i);
  }
  std::sort(idx.begin(), idx.end(), [&pts](std::size_t a, std::size_t b) {
    return pts[a][0] < pts[b][0];
  });
  for (std::size_t k = 0; k < idx.size(); ++k) {
    const double next_x = k + 1 < idx.size() ? pts[idx[k + 1]][0] : ref[0];
    const double prev_y = k > 0 ? pts[idx[k - 1]][1] : ref[1];
    contrib[idx[k]] = (next_x - pts[idx[k]][0]) * (prev_y - pts[idx[k]][1]);
  }
  return contrib;
}

}  // namespace moseed
