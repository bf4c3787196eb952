#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace hlv {

// Partitions and dominant weights are plain weakly decreasing integer vectors.
// Zero parts are stored explicitly; the stored length is the ambient rank.
using Weight = std::vector<int>;

bool is_weakly_decreasing(const Weight& w);
bool is_partition(const Weight& w);
// Throws ConfigError unless w is weakly decreasing (and non-negative when
// allow_negative is false).
void require_weight(const Weight& w, bool allow_negative);

// Comma-separated integers, e.g. "2,2,1,0". Empty string gives the empty weight.
Weight parse_weight(const std::string& text, bool allow_negative = false);
std::string format_weight(const Weight& w);

int multiplicity(const Weight& w, int value);
int weight_size(const Weight& w);    // sum of parts
int weight_length(const Weight& w);  // number of nonzero parts
int abs_size(const Weight& w);       // sum of |parts|

struct ParityCounts {
  int odd = 0;
  int even = 0;
};
ParityCounts parity_counts(const Weight& w);

// Distinct values with their multiplicities, largest value first.
std::vector<std::pair<int, int>> multiplicities(const Weight& w);

struct ShapeInfo {
  std::optional<Weight> double_mult;  // w = mu^2 (every nonzero part repeated an even number of times)
  std::optional<Weight> double_part;  // w = 2 mu (every part even)
  std::optional<Weight> palindromic;  // w = mu mu-bar (w_i + w_{L+1-i} = 0)
};
ShapeInfo classify_shape(const Weight& w);

// Positive parts mu and the negated reversed negative parts nu of w = mu nu-bar.
std::pair<Weight, Weight> split_weight(const Weight& w);

Weight pad(const Weight& w, int length);
Weight strip_zeros(const Weight& w);

// Partitions with exactly `length` stored parts, size <= max_size and largest
// part <= max_part, in reverse lexicographic order.
std::vector<Weight> partitions_in_box(int length, int max_size, int max_part);
// Dominant weights of the given length with |part| <= max_part and
// sum |part| <= max_abs_size.
std::vector<Weight> weights_in_box(int length, int max_abs_size, int max_part);

}  // namespace hlv
