#pragma once

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "homconf/configs.hpp"
#include "homconf/noncrossing.hpp"

namespace homconf {

/// A partition of {1..n}. Blocks are sorted, and ordered by smallest element.
struct SetPartition {
  int n = 0;
  std::vector<std::vector<int>> blocks;

  SetPartition() = default;
  SetPartition(int n, std::vector<std::vector<int>> blocks);  // validates and normalizes

  const std::vector<int>& block_of(int k) const;
  friend auto operator<=>(const SetPartition&, const SetPartition&) = default;
};

/// "1,3|2|4". When n is 0 it is taken from the largest element.
SetPartition parse_partition(std::string_view text, int n = 0);
std::string format_partition(const SetPartition& p);

bool is_noncrossing_partition(const SetPartition& p);
/// All noncrossing partitions of [n], in lexicographic order of blocks.
std::vector<SetPartition> noncrossing_partitions(int n);

/// Type A_{m-1} Weyl group elements as permutations of [m] via s_i = (i i+1).
/// perm[k-1] is the image of k.
std::vector<int> permutation_of(const WElement& w);
WElement element_of_permutation(const std::vector<int>& perm);

/// Cycles of the permutation (fixed points included) as blocks.
SetPartition biane_to_partition(const WElement& w);
/// Each block {k_1 < ... < k_s} becomes the cycle k_1 -> k_2 -> ... -> k_s -> k_1.
WElement biane_to_perm(const SetPartition& p);

/// (i, psi(i)) for i in [n], where psi(k_r) = k_{r+1} - k_r taken mod n, with
/// representatives 1..l when reducing mod l.
std::vector<std::pair<int, int>> riedtmann_coordinates(const SetPartition& p);

/// (i, j) with i + j <= n + 1 is the interval module [i, i+j-1]; otherwise
/// it is [i+j-n-1, i-1] shifted once.
OrbitObject decode_coordinate(int n, int i, int j);

/// Riedtmann's configuration for P, over the linear A_n quiver.
Configuration gamma(const SetPartition& p);

/// Adds n+1 to the block of 1.
SetPartition f_map(const SetPartition& p);

/// 1 and m lie in the same block.
bool is_positive_classical(const SetPartition& p);

/// For every P in NC(n): biane(psi(module part of gamma(P))) == f(P), with
/// gamma(P) checked to be a Hom-configuration along the way.
CheckReport check_riedtmann_compat(const OrbitCategory& linear_an);
CheckReport check_riedtmann_compat(int n);

}  // namespace homconf
