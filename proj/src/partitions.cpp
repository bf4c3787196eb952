#include "hlverify/partitions.hpp"

#include <algorithm>
#include <cstdlib>
#include <functional>
#include <sstream>

#include "hlverify/errors.hpp"

namespace hlv {

bool is_weakly_decreasing(const Weight& w) {
  return std::is_sorted(w.begin(), w.end(), std::greater<int>());
}

bool is_partition(const Weight& w) { return is_weakly_decreasing(w) && (w.empty() || w.back() >= 0); }

void require_weight(const Weight& w, bool allow_negative) {
  if (!is_weakly_decreasing(w)) throw ConfigError("parts must be weakly decreasing: " + format_weight(w));
  if (!allow_negative && !w.empty() && w.back() < 0)
    throw ConfigError("negative parts are not allowed here: " + format_weight(w));
}

Weight parse_weight(const std::string& text, bool allow_negative) {
  Weight w;
  std::string item;
  std::istringstream is(text);
  while (std::getline(is, item, ',')) {
    const auto b = item.find_first_not_of(" \t");
    const auto e = item.find_last_not_of(" \t");
    if (b == std::string::npos) throw ConfigError("empty part in weight '" + text + "'");
    item = item.substr(b, e - b + 1);
    char* end = nullptr;
    const long v = std::strtol(item.c_str(), &end, 10);
    if (*end != '\0' || end == item.c_str()) throw ConfigError("bad integer '" + item + "' in weight");
    w.push_back(static_cast<int>(v));
  }
  require_weight(w, allow_negative);
  return w;
}

std::string format_weight(const Weight& w) {
  std::string r;
  for (std::size_t i = 0; i < w.size(); ++i) r += (i ? "," : "") + std::to_string(w[i]);
  return r;
}

int multiplicity(const Weight& w, int value) { return static_cast<int>(std::count(w.begin(), w.end(), value)); }

int weight_size(const Weight& w) {
  int r = 0;
  for (int p : w) r += p;
  return r;
}

int weight_length(const Weight& w) {
  return static_cast<int>(std::count_if(w.begin(), w.end(), [](int p) { return p != 0; }));
}

int abs_size(const Weight& w) {
  int r = 0;
  for (int p : w) r += std::abs(p);
  return r;
}

ParityCounts parity_counts(const Weight& w) {
  ParityCounts pc;
  for (int p : w) (p % 2 != 0 ? pc.odd : pc.even)++;
  return pc;
}

std::vector<std::pair<int, int>> multiplicities(const Weight& w) {
  std::vector<std::pair<int, int>> r;
  Weight s = w;
  std::sort(s.begin(), s.end(), std::greater<int>());
  for (int p : s) {
    if (!r.empty() && r.back().first == p)
      ++r.back().second;
    else
      r.emplace_back(p, 1);
  }
  return r;
}

ShapeInfo classify_shape(const Weight& w) {
  ShapeInfo info;
  bool dm = true;
  Weight half;
  for (auto [v, m] : multiplicities(w)) {
    if (v == 0) continue;
    if (m % 2) dm = false;
    half.insert(half.end(), m / 2, v);
  }
  if (dm) {
    std::sort(half.begin(), half.end(), std::greater<int>());
    half.insert(half.end(), multiplicity(w, 0) / 2, 0);
    info.double_mult = half;
  }

  if (std::all_of(w.begin(), w.end(), [](int p) { return p % 2 == 0; })) {
    Weight mu;
    for (int p : w) mu.push_back(p / 2);
    info.double_part = mu;
  }

  const std::size_t L = w.size();
  bool pal = true;
  for (std::size_t i = 0; i < L; ++i)
    if (w[i] + w[L - 1 - i] != 0) pal = false;
  if (pal) info.palindromic = strip_zeros(Weight(w.begin(), w.begin() + static_cast<long>(L / 2)));
  return info;
}

std::pair<Weight, Weight> split_weight(const Weight& w) {
  Weight mu, nu;
  for (int p : w)
    if (p > 0) mu.push_back(p);
  for (auto it = w.rbegin(); it != w.rend(); ++it)
    if (*it < 0) nu.push_back(-*it);
  return {mu, nu};
}

Weight pad(const Weight& w, int length) {
  Weight s = strip_zeros(w);
  if (static_cast<int>(s.size()) > length)
    throw ConfigError("weight " + format_weight(w) + " has more than " + std::to_string(length) + " nonzero parts");
  if (!s.empty() && s.back() < 0) throw ConfigError("pad() expects a partition");
  s.resize(static_cast<std::size_t>(length), 0);
  return s;
}

Weight strip_zeros(const Weight& w) {
  Weight r;
  for (int p : w)
    if (p != 0) r.push_back(p);
  return r;
}

std::vector<Weight> partitions_in_box(int length, int max_size, int max_part) {
  std::vector<Weight> out;
  Weight cur;
  std::function<void(int, int)> rec = [&](int cap, int left) {
    if (static_cast<int>(cur.size()) == length) {
      out.push_back(cur);
      return;
    }
    for (int p = std::min(cap, left); p >= 0; --p) {
      cur.push_back(p);
      rec(p, left - p);
      cur.pop_back();
    }
  };
  if (length >= 0) rec(max_part, max_size);
  return out;
}

std::vector<Weight> weights_in_box(int length, int max_abs_size, int max_part) {
  std::vector<Weight> out;
  Weight cur;
  std::function<void(int, int)> rec = [&](int cap, int left) {
    if (static_cast<int>(cur.size()) == length) {
      out.push_back(cur);
      return;
    }
    for (int p = cap; p >= -max_part; --p) {
      if (std::abs(p) > left) continue;
      cur.push_back(p);
      rec(p, left - std::abs(p));
      cur.pop_back();
    }
  };
  if (length >= 0) rec(max_part, max_abs_size);
  return out;
}

}  // namespace hlv
