#!/usr/bin/env python3
"""Regenerates tests/oracle/reference_values.hpp.

All values are computed with mpmath at 60 decimal digits, independently of
the C++ implementation, and frozen into a header the unit tests include.
The two local-step fixed points iterate the same update order as the
library code but in extended precision, converged to 1e-30.

Usage: python3 tests/oracle/gen_reference_values.py > reference_values.hpp
"""

import mpmath as mp

mp.mp.dps = 60


def fmt(x):
    return mp.nstr(x, 22, strip_zeros=False)


def psi(x):
    return mp.digamma(x)


def dirichlet_expect_log(g):
    s = mp.fsum(g)
    return [psi(x) - psi(s) for x in g]


def normalize_exp(ws):
    m = max(ws)
    es = [mp.exp(w - m) for w in ws]
    s = mp.fsum(es)
    return [e / s for e in es]


def expect_log_sticks(a, b):
    out = []
    acc = mp.mpf(0)
    for i in range(len(a)):
        out.append(psi(a[i]) - psi(a[i] + b[i]) + acc)
        acc += psi(b[i]) - psi(a[i] + b[i])
    return out


def lda_local_fixed_point():
    # K=2, V=3, doc {0:2, 1:1}, alpha=0.5, lambda rows (2,1,1) and (1,1,2).
    K = 2
    alpha = mp.mpf("0.5")
    lam = [[mp.mpf(2), mp.mpf(1), mp.mpf(1)], [mp.mpf(1), mp.mpf(1), mp.mpf(2)]]
    elog_beta = [dirichlet_expect_log(row) for row in lam]
    terms = [0, 1]
    counts = [mp.mpf(2), mp.mpf(1)]
    gamma = [mp.mpf(1)] * K
    phi = None
    for _ in range(200000):
        elog_theta = dirichlet_expect_log(gamma)
        phi = [
            normalize_exp([elog_theta[k] + elog_beta[k][v] for k in range(K)])
            for v in terms
        ]
        gnew = [
            alpha + mp.fsum(counts[u] * phi[u][k] for u in range(len(terms)))
            for k in range(K)
        ]
        delta = mp.fsum(abs(gnew[k] - gamma[k]) for k in range(K)) / K
        gamma = gnew
        if delta < mp.mpf("1e-30"):
            break
    return gamma, phi


def hdp_local_fixed_point():
    # K=2, T=2, V=3, doc {0:1, 2:2}, alpha=1, sticks a=b=(1,1),
    # lambda rows (2,1,1) and (1,1,2).
    K, T = 2, 2
    alpha = mp.mpf(1)
    lam = [[mp.mpf(2), mp.mpf(1), mp.mpf(1)], [mp.mpf(1), mp.mpf(1), mp.mpf(2)]]
    elog_beta = [dirichlet_expect_log(row) for row in lam]
    a = [mp.mpf(1)] * K
    b = [mp.mpf(1)] * K
    elog_sticks_v = expect_log_sticks(a, b)
    terms = [0, 2]
    counts = [mp.mpf(1), mp.mpf(2)]
    U = len(terms)

    like = [
        mp.fsum(counts[u] * elog_beta[k][terms[u]] for u in range(U))
        for k in range(K)
    ]
    zeta = [normalize_exp(like) for _ in range(T)]
    phi = [
        normalize_exp(
            [
                mp.fsum(zeta[i][k] * elog_beta[k][terms[u]] for k in range(K))
                for i in range(T)
            ]
        )
        for u in range(U)
    ]
    g1 = [mp.mpf(0)] * T
    g2 = [mp.mpf(0)] * T
    first = True
    for _ in range(200000):
        g1_new = [
            1 + mp.fsum(counts[u] * phi[u][i] for u in range(U)) for i in range(T)
        ]
        g2_new = [
            alpha
            + mp.fsum(
                counts[u] * mp.fsum(phi[u][j] for j in range(i + 1, T))
                for u in range(U)
            )
            for i in range(T)
        ]
        zeta = [
            normalize_exp(
                [
                    elog_sticks_v[k]
                    + mp.fsum(counts[u] * phi[u][i] * elog_beta[k][terms[u]] for u in range(U))
                    for k in range(K)
                ]
            )
            for i in range(T)
        ]
        elog_pi = expect_log_sticks(g1_new, g2_new)
        phi = [
            normalize_exp(
                [
                    elog_pi[i]
                    + mp.fsum(zeta[i][k] * elog_beta[k][terms[u]] for k in range(K))
                    for i in range(T)
                ]
            )
            for u in range(U)
        ]
        if not first:
            delta = (
                mp.fsum(abs(g1_new[i] - g1[i]) for i in range(T))
                + mp.fsum(abs(g2_new[i] - g2[i]) for i in range(T))
            ) / (2 * T)
            if delta < mp.mpf("1e-30"):
                g1, g2 = g1_new, g2_new
                break
        g1, g2 = g1_new, g2_new
        first = False
    return g1, g2, zeta, phi


def chi2_ppf(p, df):
    # Inverse regularized incomplete gamma: solve P(df/2, x/2) = p.
    lo, hi = mp.mpf(0), mp.mpf(10 * df)
    for _ in range(200):
        mid = (lo + hi) / 2
        if mp.gammainc(mp.mpf(df) / 2, 0, mid / 2, regularized=True) < p:
            lo = mid
        else:
            hi = mid
    return (lo + hi) / 2


def main():
    print("#pragma once")
    print("// Generated by gen_reference_values.py (mpmath, 60-digit precision).")
    print("// Do not edit by hand; regenerate with:")
    print("//   python3 tests/oracle/gen_reference_values.py > tests/oracle/reference_values.hpp")
    print()
    print("namespace svi::testref {")
    print()

    # Digamma / trigamma accuracy grids.
    grid = [mp.mpf(s) for s in
            ["1e-6", "1e-5", "1e-4", "0.001", "0.01", "0.1", "0.25", "0.5",
             "0.75", "1.0", "1.5", "2.0", "3.0", "4.5", "6.0", "7.99", "8.0",
             "8.01", "10.0", "25.0", "100.0", "1234.5", "1e5", "1e8"]]
    print("inline constexpr double kDigammaGrid[][2] = {")
    for x in grid:
        print(f"    {{{fmt(x)}, {fmt(psi(x))}}},")
    print("};")
    print()
    print("inline constexpr double kTrigammaGrid[][2] = {")
    for x in grid:
        print(f"    {{{fmt(x)}, {fmt(mp.polygamma(1, x))}}},")
    print("};")
    print()

    print(f"inline constexpr double kDigammaOne = {fmt(psi(1))};")
    print(f"inline constexpr double kDigammaHalf = {fmt(psi(mp.mpf('0.5')))};")
    print()

    d = dirichlet_expect_log([mp.mpf("0.5"), mp.mpf("1.5")])
    print("inline constexpr double kDirExpectLogHalfThreeHalves[2] = {")
    print(f"    {fmt(d[0])}, {fmt(d[1])}}};")
    bl = (psi(mp.mpf("2.5")) - psi(mp.mpf(6)), psi(mp.mpf("3.5")) - psi(mp.mpf(6)))
    print("inline constexpr double kBetaLogs2p5_3p5[2] = {")
    print(f"    {fmt(bl[0])}, {fmt(bl[1])}}};")
    sm = normalize_exp([mp.mpf(-1), mp.mpf(-2), mp.mpf(-4)])
    print("inline constexpr double kSoftmaxM1M2M4[3] = {")
    print(f"    {fmt(sm[0])}, {fmt(sm[1])}, {fmt(sm[2])}}};")
    print()

    print(f"inline constexpr double kTwoPowMinus0p9 = {fmt(mp.power(2, mp.mpf('-0.9')))};")
    # alpha=0.5, K=2, D=1, rho=1, E[log theta]=(-1,-1):
    # alpha + (2*psi(1) - 2*psi(0.5) - 2)
    eb = mp.mpf("0.5") + 2 * psi(1) - 2 * psi(mp.mpf("0.5")) - 2
    print(f"inline constexpr double kEbAlphaStepExample = {fmt(eb)};")
    print()

    gamma, phi = lda_local_fixed_point()
    print("// LDA local fixed point: K=2, V=3, doc {0:2,1:1}, alpha=0.5,")
    print("// lambda rows (2,1,1),(1,1,2), gamma init all-ones, converged to 1e-30.")
    print("inline constexpr double kLdaLocalGamma[2] = {")
    print(f"    {fmt(gamma[0])}, {fmt(gamma[1])}}};")
    print("inline constexpr double kLdaLocalPhi[2][2] = {  // rows: unique terms 0,1")
    for row in phi:
        print(f"    {{{fmt(row[0])}, {fmt(row[1])}}},")
    print("};")
    print()

    g1, g2, zeta, hphi = hdp_local_fixed_point()
    print("// HDP local fixed point: K=2, T=2, V=3, doc {0:1,2:2}, alpha=1,")
    print("// sticks a=b=(1,1), lambda rows (2,1,1),(1,1,2), converged to 1e-30.")
    print("inline constexpr double kHdpLocalGamma1[2] = {")
    print(f"    {fmt(g1[0])}, {fmt(g1[1])}}};")
    print("inline constexpr double kHdpLocalGamma2[2] = {")
    print(f"    {fmt(g2[0])}, {fmt(g2[1])}}};")
    print("inline constexpr double kHdpLocalZeta[2][2] = {  // rows: i = 0,1")
    for row in zeta:
        print(f"    {{{fmt(row[0])}, {fmt(row[1])}}},")
    print("};")
    print("inline constexpr double kHdpLocalPhi[2][2] = {  // rows: unique terms 0,2")
    for row in hphi:
        print(f"    {{{fmt(row[0])}, {fmt(row[1])}}},")
    print("};")
    print()

    print(f"inline constexpr double kChi2Crit999Df99 = {fmt(chi2_ppf(mp.mpf('0.999'), 99))};")
    print(f"inline constexpr double kPiSqOver6 = {fmt(mp.pi ** 2 / 6)};")
    print()
    print("}  // namespace svi::testref")


if __name__ == "__main__":
    main()
