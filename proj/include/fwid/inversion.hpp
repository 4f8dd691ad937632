#pragma once

#include <vector>

#include "fwid/numerics.hpp"

namespace fwid {

/// Parameters (x, y, z) of the inverse pair. z must be nonzero.
struct InversionContext {
  Complex x;
  Complex y;
  Complex z;
};

/// f(n) from g(0..n):
///   sum_k (-1)^k C(n,k) (x+zk+k)/(x+zn)_{1+k} (y-zk+k)/(y-zn)_{1+k} ((x-y)/z+k)_n g(k)
template <class C>
C forward_transform(const std::vector<C>& g, const InversionContext& ctx, unsigned n);

/// g(n) from f(0..n):
///   sum_k (-1)^k C(n,k) (x+zk)_n (y-zk)_n ((x-y)/z+2k)/((x-y)/z+n)_{1+k} f(k)
template <class C>
C backward_transform(const std::vector<C>& f, const InversionContext& ctx, unsigned n);

/// Largest relative error over n <= n_max of backward(forward(seq)) and
/// forward(backward(seq)) against seq. Evaluated in binary128.
double roundtrip_error(const std::vector<Complex>& seq, const InversionContext& ctx, unsigned n_max);

/// Smallest magnitude among |z| and the individual factors of the guarded
/// Pochhammer symbols (x+zn)_{1+k}, (y-zn)_{1+k}, ((x-y)/z+n)_{1+k}, k <= n <= n_max.
double guard_margin(const InversionContext& ctx, unsigned n_max);

inline constexpr double kDefaultGuard = 1e-4;

}  // namespace fwid
