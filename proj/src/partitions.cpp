#include "matbeta/partitions.hpp"

#include <numeric>

#include "matbeta/errors.hpp"

namespace matbeta {

int weight(const Partition& p) {
  return std::accumulate(p.begin(), p.end(), 0);
}

int length(const Partition& p) { return static_cast<int>(p.size()); }

namespace {

void emit(int rest, int cap, int slots, Partition& cur,
          std::vector<Partition>& out) {
  if (rest == 0) {
    out.push_back(cur);
    return;
  }
  if (slots == 0) return;
  int hi = rest < cap ? rest : cap;
  for (int v = hi; v >= 1; --v) {
    cur.push_back(v);
    emit(rest - v, v, slots - 1, cur, out);
    cur.pop_back();
  }
}

}  // namespace

std::vector<Partition> enumerate_partitions(int k, int max_len) {
  if (k < 0 || max_len < 0) throw InvalidInput("enumerate_partitions: negative argument");
  std::vector<Partition> out;
  Partition cur;
  emit(k, k, max_len, cur, out);
  return out;
}

Partition conjugate(const Partition& p) {
  Partition q;
  if (p.empty()) return q;
  q.resize(p[0]);
  for (int c = 0; c < p[0]; ++c) {
    int n = 0;
    for (int v : p)
      if (v > c) ++n;
    q[c] = n;
  }
  return q;
}

long long count_partitions(int k, int max_len) {
  if (k < 0) return 0;
  // N[j][w] = partitions of w into at most j parts.
  std::vector<long long> row(k + 1, 0);
  row[0] = 1;
  for (int j = 1; j <= max_len; ++j)
    for (int w = j; w <= k; ++w) row[w] += row[w - j];
  // Identity: partitions into at most j parts of w == partitions of w with
  // parts <= j; the recurrence above builds the latter.
  return row[k];
}

}  // namespace matbeta
