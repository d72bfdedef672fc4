"""Regenerates tests/support/loglik_fixture.hpp: a 20-point mixed sample and
its Gaussian-copula rectangle log-likelihoods evaluated with 50-digit mpmath."""

import mpmath as mp

mp.mp.dps = 50

X = [1, 2, 3, 1, 3, 2, 2, 1, 3, 3, 2, 1, 2, 3, 1, 2, 3, 3, 1, 2]
Y = [-0.42, 0.13, 1.91, -1.37, 0.88, 0.05, 0.61, -0.95, 2.44, 0.37,
     -0.18, 0.29, 1.02, 1.35, -2.10, -0.66, 0.74, 0.08, -0.31, 0.47]
RHOS = ["0.6", "-0.3", "0.95"]


def midranks(v):
    order = sorted(range(len(v)), key=lambda i: v[i])
    r = [0.0] * len(v)
    i = 0
    while i < len(order):
        j = i
        while j + 1 < len(order) and v[order[j + 1]] == v[order[i]]:
            j += 1
        for t in range(i, j + 1):
            r[order[t]] = mp.mpf(i + j + 2) / 2
        i = j + 1
    return r


def main():
    n = len(X)
    k = max(X)
    counts = [X.count(j) for j in range(1, k + 1)]
    fx = [mp.mpf(sum(counts[:j])) / n for j in range(k + 1)]
    uy = [r / (n + 1) for r in midranks(Y)]
    qinv = lambda p: mp.sqrt(2) * mp.erfinv(2 * p - 1)
    rows = []
    for rs in RHOS:
        rho = mp.mpf(rs)
        total = mp.mpf(0)
        for x, u in zip(X, uy):
            s = qinv(u)
            h = lambda a: mp.mpf(0) if a == 0 else (mp.mpf(1) if a == 1 else mp.ncdf((qinv(a) - rho * s) / mp.sqrt(1 - rho * rho)))
            total += mp.log(h(fx[x]) - h(fx[x - 1]))
        rows.append((rs, total))
    indep = sum(mp.log(mp.mpf(counts[x - 1]) / n) for x in X)
    print("// Generated by tools/oracles/loglik_fixture.py (mpmath, 50 digits).")
    print()
    print("#ifndef MIXCOP_TESTS_LOGLIK_FIXTURE_HPP_")
    print("#define MIXCOP_TESTS_LOGLIK_FIXTURE_HPP_")
    print()
    print("#include <utility>")
    print("#include <vector>")
    print()
    print("namespace fixtures {")
    print()
    print("inline const std::vector<int> kLoglikX = {" + ", ".join(map(str, X)) + "};")
    print("inline const std::vector<double> kLoglikY = {" + ", ".join(repr(y) for y in Y) + "};")
    print("inline constexpr double kLoglikIndependence = " + mp.nstr(indep, 25) + ";")
    print("// (rho, Gaussian-copula log-likelihood)")
    print("inline const std::vector<std::pair<double, double>> kLoglikGaussian = {")
    for rs, t in rows:
        print(f"    {{{rs}, {mp.nstr(t, 25)}}},")
    print("};")
    print()
    print("}  // namespace fixtures")
    print()
    print("#endif  // MIXCOP_TESTS_LOGLIK_FIXTURE_HPP_")


if __name__ == "__main__":
    main()
