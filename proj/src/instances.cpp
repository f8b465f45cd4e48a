#include "distid/instances.hpp"

#include "distid/corpus.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <stdexcept>
#include <string>

namespace distid {

HittingSetInstance::HittingSetInstance(std::size_t universe_size,
                                       std::vector<std::vector<Element>> sets)
    : n_(universe_size), sets_(std::move(sets)) {
  if (n_ == 0) throw std::invalid_argument("hitting set universe must be non-empty");
  std::vector<bool> covered(n_ + 1, false);
  for (std::size_t j = 0; j < sets_.size(); ++j) {
    auto& s = sets_[j];
    if (s.empty()) throw std::invalid_argument("set " + std::to_string(j + 1) + " is empty");
    std::sort(s.begin(), s.end());
    s.erase(std::unique(s.begin(), s.end()), s.end());
    for (Element e : s) {
      if (e < 1 || e > n_)
        throw std::invalid_argument("element " + std::to_string(e) + " of set " +
                                    std::to_string(j + 1) + " outside 1.." + std::to_string(n_));
      covered[e] = true;
    }
  }
  for (std::size_t e = 1; e <= n_; ++e)
    if (!covered[e])
      throw std::invalid_argument("element " + std::to_string(e) + " belongs to no set");
}

std::size_t HittingSetInstance::membership_count() const {
  std::size_t total = 0;
  for (const auto& s : sets_) total += s.size();
  return total;
}

bool HittingSetInstance::is_hitting_set(std::span<const Element> elements) const {
  for (const auto& s : sets_) {
    const bool hit = std::any_of(elements.begin(), elements.end(), [&](Element e) {
      return std::binary_search(s.begin(), s.end(), e);
    });
    if (!hit) return false;
  }
  return true;
}

namespace {

using Element = HittingSetInstance::Element;

bool crosses(std::size_t a, std::size_t b, std::size_t c, std::size_t d) {
  if (a == c || a == d || b == c || b == d) return false;
  if (a > b) std::swap(a, b);
  const bool c_in = a < c && c < b;
  const bool d_in = a < d && d < b;
  return c_in != d_in;
}

}  // namespace

HittingSetInstance random_planar_instance(std::size_t n, std::size_t m, std::uint64_t seed) {
  if (n < 1 || m < 1) throw std::invalid_argument("random_planar_instance needs n, m >= 1");
  std::mt19937_64 rng(seed);
  const std::size_t total = n + m;
  while (true) {
    // order[p] is the node at circle position p; nodes < n are elements.
    std::vector<std::size_t> order(total);
    std::iota(order.begin(), order.end(), std::size_t{0});
    for (std::size_t p = total - 1; p > 0; --p) std::swap(order[p], order[draw(rng, 0, p)]);
    std::vector<std::pair<std::size_t, std::size_t>> candidates;  // positions
    for (std::size_t p = 0; p < total; ++p)
      for (std::size_t q = p + 1; q < total; ++q)
        if ((order[p] < n) != (order[q] < n)) candidates.emplace_back(p, q);
    for (std::size_t k = candidates.size(); k > 1; --k)
      std::swap(candidates[k - 1], candidates[draw(rng, 0, k - 1)]);
    const auto keep = draw(rng, 25, 100);
    std::vector<std::pair<std::size_t, std::size_t>> chords;
    std::vector<std::size_t> degree(total, 0);
    auto fits = [&](std::size_t p, std::size_t q) {
      return std::none_of(chords.begin(), chords.end(),
                          [&](const auto& c) { return crosses(p, q, c.first, c.second); });
    };
    auto take = [&](std::size_t p, std::size_t q) {
      chords.emplace_back(p, q);
      ++degree[p];
      ++degree[q];
    };
    for (const auto& [p, q] : candidates)
      if (draw(rng, 0, 99) < keep && fits(p, q)) take(p, q);
    for (std::size_t p = 0; p < total; ++p) {
      if (degree[p] > 0) continue;
      for (const auto& [a, b] : candidates)
        if ((a == p || b == p) && fits(a, b)) {
          take(a, b);
          break;
        }
    }
    if (std::find(degree.begin(), degree.end(), 0) != degree.end()) continue;
    std::vector<std::size_t> root(total);
    std::iota(root.begin(), root.end(), std::size_t{0});
    auto find = [&](std::size_t x) {
      while (root[x] != x) x = root[x] = root[root[x]];
      return x;
    };
    std::size_t parts = total;
    for (auto [p, q] : chords)
      if (find(p) != find(q)) {
        root[find(p)] = find(q);
        --parts;
      }
    if (parts != 1) continue;
    std::vector<std::vector<Element>> sets(m);
    for (auto [p, q] : chords) {
      std::size_t e = order[p], s = order[q];
      if (e >= n) std::swap(e, s);
      sets[s - n].push_back(static_cast<Element>(e + 1));
    }
    return HittingSetInstance(n, std::move(sets));
  }
}

HittingSetInstance random_instance(std::size_t n, std::size_t m, unsigned percent,
                                   std::uint64_t seed) {
  if (n < 1 || m < 1) throw std::invalid_argument("random_instance needs n, m >= 1");
  std::mt19937_64 rng(seed);
  std::vector<std::vector<Element>> sets(m);
  std::vector<bool> covered(n + 1, false);
  for (auto& s : sets)
    for (Element e = 1; e <= n; ++e)
      if (draw(rng, 0, 99) < percent) {
        s.push_back(e);
        covered[e] = true;
      }
  for (Element e = 1; e <= n; ++e)
    if (!covered[e]) sets[draw(rng, 0, m - 1)].push_back(e);
  for (auto& s : sets)
    if (s.empty()) s.push_back(static_cast<Element>(draw(rng, 1, n)));
  return HittingSetInstance(n, std::move(sets));
}

HittingSetInstance worked_example_instance() { return HittingSetInstance(4, {{1, 2}, {2, 3, 4}}); }

}  // namespace distid
