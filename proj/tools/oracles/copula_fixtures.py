"""Regenerates tests/support/copula_fixtures.hpp from 40-digit mpmath."""

import mpmath as mp

mp.mp.dps = 40


def gumbel(t, u, v):
    (d,) = t
    return mp.exp(-(((-mp.log(u)) ** d + (-mp.log(v)) ** d) ** (1 / d)))


def clayton(t, u, v):
    (d,) = t
    return (u ** -d + v ** -d - 1) ** (-1 / d)


def frank(t, u, v):
    (a,) = t
    return -mp.log(1 + (mp.exp(-a * u) - 1) * (mp.exp(-a * v) - 1) / (mp.exp(-a) - 1)) / a


def joe(t, u, v):
    (d,) = t
    a, b = (1 - u) ** d, (1 - v) ** d
    return 1 - (a + b - a * b) ** (1 / d)


def plackett(t, u, v):
    (e,) = t
    s = 1 + (e - 1) * (u + v)
    return (s - mp.sqrt(s * s - 4 * e * (e - 1) * u * v)) / (2 * (e - 1))


def bb1(t, u, v):
    th, de = t
    x, y = u ** -th - 1, v ** -th - 1
    return (1 + (x ** de + y ** de) ** (1 / de)) ** (-1 / th)


def bb7(t, u, v):
    th, de = t
    a, b = 1 - (1 - u) ** th, 1 - (1 - v) ** th
    return 1 - (1 - (a ** -de + b ** -de - 1) ** (-1 / de)) ** (1 / th)


def bb8(t, u, v):
    vt, de = t
    eta = 1 - (1 - de) ** vt
    a = lambda s: 1 - (1 - de * s) ** vt
    return (1 - (1 - a(u) * a(v) / eta) ** (1 / vt)) / de


def bb10(t, u, v):
    vt, pi = t
    return u * v * (1 - pi * (1 - u ** (1 / vt)) * (1 - v ** (1 / vt))) ** -vt


def asym_gumbel(t, u, v):
    d, a1, a2 = t
    x, y = -mp.log(u), -mp.log(v)
    return mp.exp(-(1 - a1) * x - (1 - a2) * y - ((a1 * x) ** d + (a2 * y) ** d) ** (1 / d))


def gaussian_h(t, u, v):
    (r,) = t
    a, b = mp.sqrt(2) * mp.erfinv(2 * u - 1), mp.sqrt(2) * mp.erfinv(2 * v - 1)
    return mp.ncdf((a - r * b) / mp.sqrt(1 - r * r))


def t_cdf(x, nu):
    z = nu / (nu + x * x)
    tail = mp.betainc(nu / 2, mp.mpf(1) / 2, 0, z, regularized=True) / 2
    return 1 - tail if x > 0 else tail


def t_quantile(p, nu):
    return mp.findroot(lambda x: t_cdf(x, nu) - p, mp.mpf(0) if p == 0.5 else mp.mpf(2 * p - 1))


def student_h(t, u, v):
    r, nu = t
    a, b = t_quantile(u, nu), t_quantile(v, nu)
    return t_cdf((a - r * b) / mp.sqrt((nu + b * b) * (1 - r * r) / (nu + 1)), nu + 1)


CASES = [
    ("Gumbel", gumbel, [(2.0,), (7.5,)]),
    ("Clayton", clayton, [(1.0,), (12.0,)]),
    ("Frank", frank, [(-4.0,), (19.0,)]),
    ("Joe", joe, [(1.8,), (27.0,)]),
    ("Plackett", plackett, [(0.2,), (230.0,)]),
    ("BB1", bb1, [(0.5, 1.5), (3.0, 4.0)]),
    ("BB7", bb7, [(1.5, 0.8), (6.0, 11.0)]),
    ("BB8", bb8, [(3.0, 0.7), (20.0, 0.95)]),
    ("BB10", bb10, [(0.3, 0.9), (4.0, 0.6)]),
    ("AsymmetricGumbel", asym_gumbel, [(2.0, 0.9, 0.4), (6.0, 0.5, 1.0)]),
]
POINTS = [(0.3, 0.7), (0.5, 0.5), (0.9, 0.05), (0.02, 0.98), (0.999, 0.6), (1e-4, 0.3)]


def fmt(x):
    return mp.nstr(x, 20, min_fixed=-mp.inf, max_fixed=mp.inf) if x != 0 else "0.0"


def main():
    rows = []
    for name, cdf, thetas in CASES:
        for t in thetas:
            tt = tuple(mp.mpf(x) for x in t)
            for u, v in POINTS:
                uu, vv = mp.mpf(u), mp.mpf(v)
                c = cdf(tt, uu, vv)
                h12 = mp.diff(lambda w: cdf(tt, uu, w), vv)
                h21 = mp.diff(lambda w: cdf(tt, w, vv), uu)
                rows.append((name, t, u, v, c, h12, h21))
    for name, h, thetas in [("Gaussian", gaussian_h, [(0.6,), (-0.95,)]), ("StudentT", student_h, [(0.5, 4.0), (0.9, 1.5)])]:
        for t in thetas:
            tt = tuple(mp.mpf(x) for x in t)
            for u, v in POINTS:
                uu, vv = mp.mpf(u), mp.mpf(v)
                rows.append((name, t, u, v, None, h(tt, uu, vv), h(tt, vv, uu)))
    print("// Generated by tools/oracles/copula_fixtures.py (mpmath, 40 digits).")
    print("// h12 = dC/dv, h21 = dC/du. cdf is NaN where only h is tabulated.")
    print()
    print("#ifndef MIXCOP_TESTS_COPULA_FIXTURES_HPP_")
    print("#define MIXCOP_TESTS_COPULA_FIXTURES_HPP_")
    print()
    print("#include <limits>")
    print("#include <vector>")
    print()
    print('#include "mixcop/copula.hpp"')
    print()
    print("namespace fixtures {")
    print()
    print("struct CopulaPoint {")
    print("  mixcop::Family family;")
    print("  std::vector<double> theta;")
    print("  double u, v, cdf, h12, h21;")
    print("};")
    print()
    print("inline const std::vector<CopulaPoint>& copula_points() {")
    print("  constexpr double kNan = std::numeric_limits<double>::quiet_NaN();")
    print("  static const std::vector<CopulaPoint> points = {")
    for name, t, u, v, c, h12, h21 in rows:
        th = ", ".join(repr(x) for x in t)
        cs = "kNan" if c is None else fmt(c)
        print(f"      {{mixcop::Family::{name}, {{{th}}}, {u!r}, {v!r}, {cs}, {fmt(h12)}, {fmt(h21)}}},")
    print("  };")
    print("  return points;")
    print("}")
    print()
    print("}  // namespace fixtures")
    print()
    print("#endif  // MIXCOP_TESTS_COPULA_FIXTURES_HPP_")


if __name__ == "__main__":
    main()
