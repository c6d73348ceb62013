#pragma once

// Shared bookkeeping for the rotation-reduced subset walk.
//
// Every m-subset T of Z/n has a rotation that contains 0 and whose gap
// closing back to n is a largest gap. The walk visits exactly those
// representatives, members in increasing order, and gives each the weight
// 1/c where c counts its largest gaps. Summing a rotation-invariant f this
// way and multiplying by n gives the sum over all m-subsets.
//
// Internal linkage on purpose: this header is also compiled with wider
// instruction sets in the vector kernel.

#include <algorithm>

namespace thetakit::gapwalk {
namespace {

struct Step {
  long mx;    // largest internal gap after taking y
  long cnt;   // how many internal gaps reach it
  long emax;  // largest position the final member may take
};

// At a node whose last member is x, with q members still to place, take y.
// The placement is viable iff emax >= y + q - 1.
inline Step step(long n, long q, long x, long mx, long cnt, long y) {
  const long gap = y - x;
  const long mx2 = std::max(gap, mx);
  const long cnt2 = gap > mx ? 1 : (gap == mx ? cnt + 1 : cnt);
  const long need = (n - y + q - 1) / q;  // q gaps share the span n - y
  return {mx2, cnt2, n - std::max(mx2, need)};
}

inline bool viable(const Step& s, long q, long y) { return s.emax >= y + q - 1; }

// Last member: e runs over (x, last_bound]; only e = last_bound can tie
// with an earlier largest gap or split the remaining span evenly.
inline long last_bound(long n, long x, long mx) { return std::min(n - mx, (n + x) / 2); }

inline long last_ties(long n, long x, long mx, long cnt, long e) {
  const long closing = n - e;
  return 1 + (mx == closing ? cnt : 0) + (e - x == closing ? 1 : 0);
}

}  // namespace
}  // namespace thetakit::gapwalk
