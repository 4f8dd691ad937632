"""Regenerates tests/oracle_values.hpp from mpmath at 40 digits."""
import mpmath as mp

mp.mp.dps = 40
out = []


def D(re, im=0):
    """Input as the binary64 value the C++ side actually sees."""
    return mp.mpc(float(mp.mpf(re)), float(mp.mpf(im))) if im else mp.mpf(float(mp.mpf(re)))


def c(z):
    z = mp.mpc(z)
    return "{%s, %s}" % (mp.nstr(z.real, 20, min_fixed=1, max_fixed=0), mp.nstr(z.imag, 20, min_fixed=1, max_fixed=0))


def emit_pairs(name, rows):
    out.append("inline const OraclePoint %s[] = {" % name)
    for z, v in rows:
        out.append("    {%s, %s}," % (c(z), c(v)))
    out.append("};")


gamma_pts = [D("0.5"), D(1, 1), D("-2.5", "0.3"), D("10.2", "-3"), D(30, 5),
             D("-15.5", "0.1"), D("0.001", "0.001"), D("3.7", "12"), D("-0.9", "-0.4")]
emit_pairs("kGamma", [(z, mp.gamma(z)) for z in gamma_pts])

lg_pts = [D(200, 50), D("-40.3", "2.2"), D("0.2", "-30"), D("5.5"), D("-3.3", "-0.7"), D("-2.5"), D("-7.25", "-1e-3"),
          D("-120.7", "15"), D("0.3", "80")]
emit_pairs("kLogGamma", [(z, mp.loggamma(z)) for z in lg_pts])

out.append("struct PochOracle { Complex x; unsigned n; Complex value; };")
out.append("inline const PochOracle kPoch[] = {")
for x, n in [(D("0.5", "0.2"), 7), (D("-3.5"), 4), (D(2), 20), (D("-1.25", "3"), 12)]:
    out.append("    {%s, %d, %s}," % (c(x), n, c(mp.rf(x, n))))
out.append("};")

out.append("inline const double kGammaQuotient = %s;  // Gamma(500)/(Gamma(499.5) Gamma(1))" %
           mp.nstr(mp.gamma(500) / mp.gamma(mp.mpf("499.5")), 20))
out.append("inline const Complex k2F1 = %s;  // 2F1(0.3+0.1i, 0.7; 1.4; 0.5)" % c(mp.hyp2f1(D("0.3", "0.1"), "0.7", "1.4", "0.5")))
out.append("inline const Complex k3F2Term = %s;  // 3F2(-5, 1.5, 0.3; 2.2, 0.7; 1)" % c(mp.hyp3f2(-5, "1.5", "0.3", "2.2", "0.7", 1)))
out.append("inline const Complex k1F1 = %s;  // 1F1(1.5; 0.25-0.5i; 0.8)" % c(mp.hyp1f1("1.5", D("0.25", "-0.5"), "0.8")))

fw = mp.nsum(lambda k: mp.gamma(mp.mpf("0.5") + k) * mp.gamma(mp.mpf("1.2") + k / 2) / mp.gamma(mp.mpf("1.7") + mp.mpf("1.5") * k)
             * mp.mpf("0.6") ** k / mp.factorial(k), [0, mp.inf])
out.append("inline const Complex kFoxWright = %s;  // Psi[(0.5;1),(1.2;0.5) | (1.7;1.5)](0.6)" % c(fw))


def thm1_lhs(a, l, n):
    s = 0
    for k in range(n + 1):
        t = (mp.gamma(1 + k) * mp.gamma(mp.mpf(3) / 2 + k) * mp.gamma(l - a + l * k) * mp.gamma(mp.mpf(1) / 2 + l - a + (1 + l) * k)
             * mp.gamma(1 + 2 * a + n + (1 + 2 * l) * k))
        t /= (mp.gamma(1 + n - k) * mp.gamma(2 + n + k) * mp.gamma(mp.mpf(1) / 2 + k) * mp.gamma(1 + a + l * k)
              * mp.gamma(mp.mpf(3) / 2 + a + (1 + l) * k) * mp.gamma(1 + 2 * l - 2 * a - n + (1 + 2 * l) * k))
        s += t * (-1) ** k / mp.factorial(k)
    return s


def thm1_rhs(a, l, n):
    return ((-1) ** n * mp.power(4, 2 * a - l) * mp.rf(1 + 2 * a - l, n)
            / ((l - a + l * n) * (1 + 2 * a + 2 * l * n + 2 * n) * mp.factorial(n)))


a, l, n = D("0.3", "0.1"), D("0.7", "-0.2"), 3
L, R = thm1_lhs(a, l, n), thm1_rhs(a, l, n)
assert abs(L - R) < mp.mpf(10) ** -30 * max(1, abs(R)), (L, R)
out.append("inline const Complex kThm1Value = %s;  // thm1 at a=0.3+0.1i, l=0.7-0.2i, n=3" % c(R))
out.append("inline const double kThm1RhsN0 = %s;  // thm1 rhs at a=0.3, l=1.2, n=0" % mp.nstr(thm1_rhs(D("0.3"), D("1.2"), 0), 20))

a, b, cc, d = 1, D("0.2"), D("0.3"), D("0.1")
dg = (mp.gamma(1 + a - b) * mp.gamma(1 + a - cc) * mp.gamma(1 + a - d) * mp.gamma(1 + a - b - cc - d)
      / (mp.gamma(1 + a) * mp.gamma(1 + a - b - cc) * mp.gamma(1 + a - b - d) * mp.gamma(1 + a - cc - d)))
out.append("inline const double kDougallRhs = %s;  // dougall rhs at a=1, b=0.2, c=0.3, d=0.1" % mp.nstr(dg, 20))


# inverse pair at one context, g(k) = 1/(k+1) + i k/3
x, y, z = D("0.4", "0.3"), D("-1.3", "0.2"), D("0.6", "0.1")
g = [D(mp.mpf(1) / (k + 1), mp.mpf(k) / 3) for k in range(6)]


def forward(g, n):
    s = 0
    for k in range(n + 1):
        s += ((-1) ** k * mp.binomial(n, k) * (x + z * k + k) / mp.rf(x + z * n, 1 + k) * (y - z * k + k) / mp.rf(y - z * n, 1 + k)
              * mp.rf((x - y) / z + k, n) * g[k])
    return s


def backward(f, n):
    s = 0
    for k in range(n + 1):
        s += ((-1) ** k * mp.binomial(n, k) * mp.rf(x + z * k, n) * mp.rf(y - z * k, n) * ((x - y) / z + 2 * k)
              / mp.rf((x - y) / z + n, 1 + k) * f[k])
    return s


f = [forward(g, n) for n in range(6)]
for n in range(6):
    assert abs(backward(f, n) - g[n]) < mp.mpf(10) ** -30
out.append("inline const Complex kInvX = %s, kInvY = %s, kInvZ = %s;" % (c(x), c(y), c(z)))
out.append("inline const Complex kInvG[] = {%s};" % ", ".join(c(v) for v in g))
out.append("inline const Complex kInvF[] = {%s};" % ", ".join(c(v) for v in f))

header = """#pragma once
// Generated by tests/oracles/gen_oracles.py (mpmath, 40 digits). Do not edit.

#include <complex>

namespace oracle {

using Complex = std::complex<double>;
struct OraclePoint { Complex z; Complex value; };

"""
with open(__file__.replace("oracles/gen_oracles.py", "oracle_values.hpp"), "w") as fh:
    fh.write(header + "\n".join(out) + "\n\n}  // namespace oracle\n")
