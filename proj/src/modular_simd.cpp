#include "modular_simd.hpp"

#include <immintrin.h>

#include <cstddef>
#include <new>

#include "gap_walk.hpp"

namespace thetakit::simd {

namespace {

// Montgomery arithmetic with R = 2^52 in eight 64-bit lanes, p < 2^47.
// Products are left lazy in (0, 2p); sums of up to 2^7 products are
// accumulated as separate low and high 52-bit halves and reduced once.
struct Lanes {
  __m512i p;
  __m512i pinv;  // p^{-1} mod 2^52
  __m512d p_recip;
};

// functions rather than constants: no vector instruction may run at load time
inline __m512i mask52() { return _mm512_set1_epi64((1LL << 52) - 1); }
inline __m512i zero() { return _mm512_setzero_si512(); }

// a, b < 2^52 with a b < 2^52 p: returns a b / R mod p in (0, 2p).
// q p matches the low half of a b exactly, so no carry is needed.
inline __m512i mul(const Lanes& Ln, __m512i a, __m512i b) {
  const __m512i lo = _mm512_madd52lo_epu64(zero(), a, b);
  const __m512i hp = _mm512_madd52hi_epu64(Ln.p, a, b);
  const __m512i q = _mm512_madd52lo_epu64(zero(), lo, Ln.pinv);
  return _mm512_sub_epi64(hp, _mm512_madd52hi_epu64(zero(), q, Ln.p));
}

// (H 2^52 + L) / R mod p in (0, H' + p], H' the normalized high half.
inline __m512i redc(const Lanes& Ln, __m512i H, __m512i L) {
  H = _mm512_add_epi64(H, _mm512_add_epi64(_mm512_srli_epi64(L, 52), Ln.p));
  L = _mm512_and_si512(L, mask52());
  const __m512i q = _mm512_madd52lo_epu64(zero(), L, Ln.pinv);
  return _mm512_sub_epi64(H, _mm512_madd52hi_epu64(zero(), q, Ln.p));
}

// t < 2^57 to [0, p) via a floating quotient that is off by at most one.
inline __m512i fold(const Lanes& L, __m512i t) {
  const __m512d q = _mm512_roundscale_pd(_mm512_mul_pd(_mm512_cvtepu64_pd(t), L.p_recip), _MM_FROUND_TO_NEG_INF);
  __m512i r = _mm512_sub_epi64(t, _mm512_mullo_epi64(_mm512_cvttpd_epu64(q), L.p));
  r = _mm512_mask_add_epi64(r, _mm512_cmplt_epi64_mask(r, zero()), r, L.p);
  return _mm512_min_epu64(r, _mm512_sub_epi64(r, L.p));
}

inline __mmask8 tail_mask(long count) { return static_cast<__mmask8>(count >= 8 ? 0xff : (1u << count) - 1); }

// sum_{i < count} a[i] b[i] in floating point, vectorized over i
inline __m512d dot_f(const double* a, const double* b, long count) {
  __m512d acc = _mm512_setzero_pd();
  for (long i = 0; i < count; i += 8) {
    const __mmask8 k = tail_mask(count - i);
    acc = _mm512_fmadd_pd(_mm512_maskz_loadu_pd(k, a + i), _mm512_maskz_loadu_pd(k, b + i), acc);
  }
  return acc;
}

inline void scale_f(double* out, const double* a, const double* b, long count) {
  for (long i = 0; i < count; i += 8) {
    const __mmask8 k = tail_mask(count - i);
    _mm512_mask_storeu_pd(out + i, k, _mm512_mul_pd(_mm512_maskz_loadu_pd(k, a + i), _mm512_maskz_loadu_pd(k, b + i)));
  }
}

std::uint64_t to_mont(std::uint64_t x, std::uint64_t p) {
  return static_cast<std::uint64_t>((static_cast<unsigned __int128>(x % p) << 52) % p);
}

template <class T>
T* aligned_array(std::size_t count) {
  return static_cast<T*>(::operator new[](count * sizeof(T), std::align_val_t{64}));
}

template <class T>
void release(T* p) {
  ::operator delete[](p, std::align_val_t{64});
}

struct Kernel {
  long n = 0, m = 0;
  Lanes lanes{};
  __m512i* w = nullptr;     // w[d], d < n
  __m512i* winv = nullptr;  // winv[c n + d] = w[d] / c
  __m512i* inv = nullptr;   // inv[c] = 1 / c
  double* wf = nullptr;
  double* winvf = nullptr;
  double* invf = nullptr;
  long* need = nullptr;     // need[q (n + 1) + s] = ceil(s / q)
  __m512i* pots = nullptr;  // (m + 1) rows of n, lazy residues
  double* potf = nullptr;

  __m512i* pot(int d) { return pots + static_cast<std::ptrdiff_t>(d) * n; }
  double* pf(int d) { return potf + static_cast<std::ptrdiff_t>(d) * n; }

  gapwalk::Step step(long q, long x, long mx, long cnt, long y) const {
    const long gap = y - x;
    const long mx2 = gap > mx ? gap : mx;
    const long cnt2 = gap > mx ? 1 : (gap == mx ? cnt + 1 : cnt);
    const long nd = need[q * (n + 1) + (n - y)];
    return {mx2, cnt2, n - (mx2 > nd ? mx2 : nd)};
  }

  struct Value {
    __m512i v;  // [0, p)
    double f;
  };

  // q = 1: sum the potential over the admissible last members.
  Value last(int d, long x, long mx, long cnt) {
    const __m512i* P = pot(d);
    const double* F = pf(d);
    const long hi = gapwalk::last_bound(n, x, mx);
    __m512i s = zero();
    for (long e = x + 1; e < hi; ++e) s = _mm512_add_epi64(s, P[e]);
    double sf = 0;
    for (long e = x + 1; e < hi; ++e) sf += F[e];
    if (hi > x) {
      const long c = gapwalk::last_ties(n, x, mx, cnt, hi);
      s = _mm512_add_epi64(s, mul(lanes, P[hi], inv[c]));
      sf += F[hi] * invf[c];
    }
    return {fold(lanes, s), sf};
  }

  // q = 2: the last two members in one pass, without storing potentials.
  Value last_two(int d, long x, long mx, long cnt) {
    const __m512i* P = pot(d);
    const double* F = pf(d);
    __m512i TL = zero(), TH = zero();
    __m512d tf = _mm512_setzero_pd();
    for (long y = x + 1;; ++y) {
      const auto st = step(2, x, mx, cnt, y);
      if (st.emax < y + 1) break;
      const long hi = st.emax;
      const __m512i* wy = w - y;
      __m512i L0 = zero(), H0 = zero(), L1 = zero(), H1 = zero();
      long e = y + 1;
      for (; e + 1 < hi; e += 2) {
        L0 = _mm512_madd52lo_epu64(L0, P[e], wy[e]);
        H0 = _mm512_madd52hi_epu64(H0, P[e], wy[e]);
        L1 = _mm512_madd52lo_epu64(L1, P[e + 1], wy[e + 1]);
        H1 = _mm512_madd52hi_epu64(H1, P[e + 1], wy[e + 1]);
      }
      if (e < hi) {
        L0 = _mm512_madd52lo_epu64(L0, P[e], wy[e]);
        H0 = _mm512_madd52hi_epu64(H0, P[e], wy[e]);
      }
      const long c = gapwalk::last_ties(n, y, st.mx, st.cnt, hi);
      const __m512i wl = winv[c * n + (hi - y)];
      L1 = _mm512_madd52lo_epu64(L1, P[hi], wl);
      H1 = _mm512_madd52hi_epu64(H1, P[hi], wl);
      const __m512i s = redc(lanes, _mm512_add_epi64(H0, H1), _mm512_add_epi64(L0, L1));  // < 17p
      TL = _mm512_madd52lo_epu64(TL, P[y], s);
      TH = _mm512_madd52hi_epu64(TH, P[y], s);

      __m512d sf = dot_f(F + y + 1, wf + 1, hi - y - 1);
      sf = _mm512_mask_add_pd(sf, 1, sf, _mm512_set1_pd(F[hi] * winvf[c * n + (hi - y)]));
      tf = _mm512_fmadd_pd(_mm512_set1_pd(F[y]), sf, tf);
    }
    return {fold(lanes, redc(lanes, TH, TL)), _mm512_reduce_add_pd(tf)};
  }

  Value node(int q, int d, long x, long mx, long cnt) {
    if (q == 1) return last(d, x, mx, cnt);
    if (q == 2) return last_two(d, x, mx, cnt);
    const __m512i* P = pot(d);
    const double* F = pf(d);
    __m512i* N = pot(d + 1);
    double* NF = pf(d + 1);
    __m512i TL = zero(), TH = zero();
    double tf = 0;
    for (long y = x + 1;; ++y) {
      const auto st = step(q, x, mx, cnt, y);
      if (st.emax < y + q - 1) break;
      const __m512i* wy = w - y;
      for (long u = y + 1; u <= st.emax; ++u) N[u] = mul(lanes, P[u], wy[u]);
      scale_f(NF + y + 1, F + y + 1, wf + 1, st.emax - y);
      const Value sub = node(q - 1, d + 1, y, st.mx, st.cnt);
      TL = _mm512_madd52lo_epu64(TL, P[y], sub.v);
      TH = _mm512_madd52hi_epu64(TH, P[y], sub.v);
      tf += F[y] * sub.f;
    }
    return {fold(lanes, redc(lanes, TH, TL)), tf};
  }
};

}  // namespace

Partial branch(const Table& t, long y) {
  const long n = t.n, m = t.m;
  Partial out{};
  Kernel K;
  K.n = n;
  K.m = m;
  alignas(64) std::uint64_t buf[kLanes];
  for (int l = 0; l < kLanes; ++l) {
    const std::uint64_t p = t.primes[l];
    std::uint64_t inv = p;  // Newton iteration for p^{-1} mod 2^64
    for (int i = 0; i < 6; ++i) inv *= 2 - p * inv;
    buf[l] = inv & ((std::uint64_t{1} << 52) - 1);
  }
  K.lanes.pinv = _mm512_load_si512(buf);
  K.lanes.p = _mm512_loadu_si512(t.primes);
  K.lanes.p_recip = _mm512_div_pd(_mm512_set1_pd(1.0), _mm512_cvtepu64_pd(K.lanes.p));

  const auto cells = [](long rows, long cols) { return static_cast<std::size_t>(rows * cols); };
  K.w = aligned_array<__m512i>(cells(1, n));
  K.wf = aligned_array<double>(cells(1, n));
  K.inv = aligned_array<__m512i>(cells(1, m + 1));
  K.invf = aligned_array<double>(cells(1, m + 1));
  K.winv = aligned_array<__m512i>(cells(m + 1, n));
  K.winvf = aligned_array<double>(cells(m + 1, n));
  K.need = aligned_array<long>(cells(m + 1, n + 1));
  K.pots = aligned_array<__m512i>(cells(m + 1, n));
  K.potf = aligned_array<double>(cells(m + 1, n));
  const auto lane_load = [&](const std::uint64_t* src) {
    for (int l = 0; l < kLanes; ++l) buf[l] = to_mont(src[l], t.primes[l]);
    return _mm512_load_si512(buf);
  };
  K.w[0] = zero();
  K.wf[0] = 0;
  for (long d = 1; d < n; ++d) {
    K.w[d] = lane_load(t.w + d * kLanes);
    K.wf[d] = t.wf[d];
  }
  for (long c = 1; c <= m; ++c) {
    K.inv[c] = lane_load(t.inv + c * kLanes);
    K.invf[c] = t.invf[c];
    for (long d = 0; d < n; ++d) {
      K.winv[c * n + d] = fold(K.lanes, mul(K.lanes, K.w[d], K.inv[c]));
      K.winvf[c * n + d] = K.wf[d] * K.invf[c];
    }
  }
  for (long q = 1; q <= m; ++q)
    for (long s = 0; s <= n; ++s) K.need[q * (n + 1) + s] = (s + q - 1) / q;

  // root 0 with potential w(z); y is its successor
  const long q = m - 1;
  if (y >= 1 && y < n) {
    const auto st = K.step(q, 0, 0, 0, y);
    if (st.emax >= y + q - 1) {
      __m512i* P = K.pot(0);
      for (long u = y + 1; u <= st.emax; ++u) P[u] = mul(K.lanes, K.w[u], K.w[u - y]);
      scale_f(K.pf(0) + y + 1, K.wf + y + 1, K.wf + 1, st.emax - y);
      const Kernel::Value sub = K.node(static_cast<int>(q - 1), 0, y, st.mx, st.cnt);
      // one more product by the plain 1 leaves the Montgomery domain
      const __m512i v = fold(K.lanes, mul(K.lanes, fold(K.lanes, mul(K.lanes, K.w[y], sub.v)), _mm512_set1_epi64(1)));
      _mm512_store_si512(buf, v);
      for (int l = 0; l < kLanes; ++l) out.residues[l] = buf[l];
      out.approx = K.wf[y] * sub.f;
    }
  }

  release(K.w);
  release(K.wf);
  release(K.inv);
  release(K.invf);
  release(K.winv);
  release(K.winvf);
  release(K.need);
  release(K.pots);
  release(K.potf);
  return out;
}

}  // namespace thetakit::simd
