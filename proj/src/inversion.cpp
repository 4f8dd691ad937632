#include "fwid/inversion.hpp"

#include <algorithm>
#include <cmath>

#include "fwid/compensated_sum.hpp"

namespace fwid {

namespace {

template <class C>
struct Lifted {
  C x, y, z, w;  // w = (x - y) / z
};

template <class C>
Lifted<C> lift_context(const InversionContext& ctx) {
  if (ctx.z == Complex(0.0, 0.0)) throw DegenerateContextError("inversion context has z = 0");
  Lifted<C> l{lift<C>(ctx.x), lift<C>(ctx.y), lift<C>(ctx.z), C(0)};
  l.w = (l.x - l.y) / l.z;
  return l;
}

template <class C>
C checked_poch(const C& base, unsigned count, const char* what) {
  const C p = pochhammer(base, count);
  if (p.real() == 0 && p.imag() == 0) throw DegenerateContextError(std::string("vanishing factor in ") + what);
  return p;
}

template <class C>
C real_c(double v) {
  return C(v);
}

}  // namespace

template <class C>
C forward_transform(const std::vector<C>& g, const InversionContext& ctx, unsigned n) {
  if (g.size() < n + 1u) throw EvaluationError("forward_transform: sequence shorter than n+1");
  const auto l = lift_context<C>(ctx);
  const C nn = real_c<C>(n);
  CompensatedSum<C> sum;
  for (unsigned k = 0; k <= n; ++k) {
    const C kk = real_c<C>(k);
    C t = real_c<C>((k % 2 ? -1.0 : 1.0) * binomial(n, k));
    t *= (l.x + l.z * kk + kk) / checked_poch(l.x + l.z * nn, k + 1, "(x+zn)_{1+k}");
    t *= (l.y - l.z * kk + kk) / checked_poch(l.y - l.z * nn, k + 1, "(y-zn)_{1+k}");
    t *= pochhammer(l.w + kk, n);
    sum += t * g[k];
  }
  return sum.value();
}

template <class C>
C backward_transform(const std::vector<C>& f, const InversionContext& ctx, unsigned n) {
  if (f.size() < n + 1u) throw EvaluationError("backward_transform: sequence shorter than n+1");
  const auto l = lift_context<C>(ctx);
  const C nn = real_c<C>(n);
  CompensatedSum<C> sum;
  for (unsigned k = 0; k <= n; ++k) {
    const C kk = real_c<C>(k);
    C t = real_c<C>((k % 2 ? -1.0 : 1.0) * binomial(n, k));
    t *= pochhammer(l.x + l.z * kk, n) * pochhammer(l.y - l.z * kk, n);
    t *= (l.w + real_c<C>(2.0) * kk) / checked_poch(l.w + nn, k + 1, "((x-y)/z+n)_{1+k}");
    sum += t * f[k];
  }
  return sum.value();
}

template Complex forward_transform<Complex>(const std::vector<Complex>&, const InversionContext&, unsigned);
template QuadComplex forward_transform<QuadComplex>(const std::vector<QuadComplex>&, const InversionContext&, unsigned);
template Complex backward_transform<Complex>(const std::vector<Complex>&, const InversionContext&, unsigned);
template QuadComplex backward_transform<QuadComplex>(const std::vector<QuadComplex>&, const InversionContext&,
                                                     unsigned);

double roundtrip_error(const std::vector<Complex>& seq, const InversionContext& ctx, unsigned n_max) {
  if (seq.size() < n_max + 1u) throw EvaluationError("roundtrip_error: sequence shorter than n_max+1");
  std::vector<QuadComplex> s;
  for (unsigned n = 0; n <= n_max; ++n) s.push_back(lift<QuadComplex>(seq[n]));

  std::vector<QuadComplex> f, g;
  for (unsigned n = 0; n <= n_max; ++n) {
    f.push_back(forward_transform(s, ctx, n));
    g.push_back(backward_transform(s, ctx, n));
  }
  double worst = 0.0;
  for (unsigned n = 0; n <= n_max; ++n) {
    const QuadComplex via_f = backward_transform(f, ctx, n);
    const QuadComplex via_g = forward_transform(g, ctx, n);
    const QuadReal scale = abs(s[n]);
    for (const QuadComplex& v : {via_f, via_g}) {
      const QuadReal diff = abs(v - s[n]);
      const QuadReal denom = std::max(scale, abs(v));
      if (denom == 0) continue;
      worst = std::max(worst, static_cast<double>(diff / denom));
    }
  }
  return worst;
}

double guard_margin(const InversionContext& ctx, unsigned n_max) {
  double best = std::abs(ctx.z);
  if (best == 0.0) return 0.0;
  const Complex w = (ctx.x - ctx.y) / ctx.z;
  for (unsigned n = 0; n <= n_max; ++n) {
    const double nn = n;
    for (unsigned j = 0; j <= n; ++j) {
      best = std::min({best, std::abs(ctx.x + ctx.z * nn + double(j)), std::abs(ctx.y - ctx.z * nn + double(j)),
                       std::abs(w + nn + double(j))});
    }
  }
  return best;
}

}  // namespace fwid
