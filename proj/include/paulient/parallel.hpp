// Copyright 2026 The paulient Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <functional>
#include <vector>

namespace paulient {

/// Worker cap for the data-parallel loops. 0 means "all available cores".
void set_worker_count(unsigned workers);
unsigned worker_count();

/// Runs fn(block) for block in [0, n_blocks) across the worker pool. Blocks are
/// claimed dynamically but each block's work is independent, so results
/// that are written per block do not depend on the worker count.
void parallel_blocks(std::size_t n_blocks, const std::function<void(std::size_t)>& fn);

/// Neumaier-compensated running sum.
class CompensatedSum {
 public:
  void add(double x) {
    const double t = sum_ + x;
    if (std::abs(sum_) >= std::abs(x)) {
      comp_ += (sum_ - t) + x;
    } else {
      comp_ += (x - t) + sum_;
    }
    sum_ = t;
  }
  double value() const { return sum_ + comp_; }

 private:
  double sum_ = 0.0;
  double comp_ = 0.0;
};

/// Sum of item(i) over i in [0, n). Items are grouped in fixed blocks of
/// `block_size`; each block is summed sequentially and the block partials are
/// combined in index order, so the result is bitwise independent of the worker
/// count.
template <class Item>
double deterministic_sum(std::size_t n, std::size_t block_size, Item&& item) {
  const std::size_t n_blocks = (n + block_size - 1) / block_size;
  std::vector<double> partial(n_blocks, 0.0);
  parallel_blocks(n_blocks, [&](std::size_t b) {
    CompensatedSum s;
    const std::size_t end = std::min(n, (b + 1) * block_size);
    for (std::size_t i = b * block_size; i < end; ++i) s.add(item(i));
    partial[b] = s.value();
  });
  CompensatedSum total;
  for (double p : partial) total.add(p);
  return total.value();
}

}  // namespace paulient
