#pragma once

#include <vector>

namespace matbeta {

// Integer partition: non-increasing positive parts.  The empty vector is the
// unique partition of 0.
using Partition = std::vector<int>;

int weight(const Partition& p);
int length(const Partition& p);

// All partitions of k with at most max_len parts, in reverse lexicographic
// order: first differing part decides, larger part first.  So for k=3:
// (3), (2,1), (1,1,1).
std::vector<Partition> enumerate_partitions(int k, int max_len);

// Transpose of the Young diagram.  Involution.
Partition conjugate(const Partition& p);

// Number of partitions of k with at most max_len parts.
long long count_partitions(int k, int max_len);

}  // namespace matbeta
