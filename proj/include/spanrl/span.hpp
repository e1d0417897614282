#pragma once

#include <vector>

#include "spanrl/errors.hpp"

namespace spanrl {

// How a completion was segmented.
enum class LayoutTag { PlanSql, ThinkAnswer, FallbackAllRea };

// Disjoint answer/reasoning token-index sets covering a completion.
// Indices are 0-based token positions; together the two sets must partition
// {0, ..., L-1}.
struct SpanMask {
  std::vector<int> ans;  // sorted ascending
  std::vector<int> rea;  // sorted ascending
  LayoutTag layout = LayoutTag::FallbackAllRea;

  bool is_partition_of(int length) const;
};

// Throws InvariantError when the mask is not a partition of {0..length-1}.
void require_partition(const SpanMask& span, int length);

// All indices in rea, empty ans.
SpanMask all_reasoning(int length, LayoutTag tag = LayoutTag::FallbackAllRea);

}  // namespace spanrl
