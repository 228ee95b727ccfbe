#!/usr/bin/env python3
"""Reference values at 40 digits, frozen into oracles.hpp.

    python3 tests/oracles/gen_oracles.py > tests/oracles/oracles.hpp

Everything here is computed independently of the C++ code with mpmath
(loggamma, qp). The hyperbolic gamma uses the infinite-product form with
mpmath's own q-Pochhammer, swapping the periods when Im(w1/w2) < 0.
"""

import random

import mpmath as mp

mp.mp.dps = 40
rng = random.Random(20240611)
N = 220


def c(z):
    z = mp.mpc(z)
    return "{%s, %s}" % (mp.nstr(z.real, 17, min_fixed=-1, max_fixed=-1),
                         mp.nstr(z.imag, 17, min_fixed=-1, max_fixed=-1))


def emit(name, fields, rows):
    print("struct %sRow { %s };" % (name, " ".join("std::complex<double> %s;" % f for f in fields)))
    print("inline const %sRow k%s[] = {" % (name, name))
    for r in rows:
        print("    {" + ", ".join(c(x) for x in r) + "},")
    print("};")
    print()


def b22(u, w1, w2):
    return u * u / (w1 * w2) - u / w1 - u / w2 + w1 / (6 * w2) + w2 / (6 * w1) + mp.mpf(1) / 2


def log_hyp_gamma(u, w1, w2):
    if (w1 / w2).imag < 0:
        w1, w2 = w2, w1
    q = mp.exp(2j * mp.pi * w1 / w2)
    qt = mp.exp(-2j * mp.pi * w2 / w1)
    num = mp.qp(mp.exp(2j * mp.pi * u / w1) * qt, qt)
    den = mp.qp(mp.exp(2j * mp.pi * u / w2), q)
    return -1j * mp.pi * b22(u, w1, w2) / 2 + mp.log(num) - mp.log(den)


def log_gamma_h(z, m, r, w1, w2):
    k = m % r
    first = (-1j * w2 * r, -1j * w1 - 1j * w2)
    second = (-1j * w1 * r, -1j * w1 - 1j * w2)
    a = -1j * z - 1j * w2 * (r - k)
    b = -1j * z - 1j * w1 * k
    return log_hyp_gamma(a, *first) + log_hyp_gamma(b, *second)


def u(a, b):
    return rng.uniform(a, b)


def main():
    print("// Generated by tests/oracles/gen_oracles.py (mpmath, 40 digits). Do not edit.")
    print("#pragma once")
    print("#include <complex>")
    print()
    print("namespace oracle {")
    print()

    # log Gamma over a wide region, including the left half plane away from poles
    rows = []
    while len(rows) < N:
        z = mp.mpc(u(-12, 30), u(-25, 25))
        if z.real < 0.5 and abs(z.imag) < 0.3 and abs(z.real - mp.nint(z.real)) < 0.05:
            continue
        rows.append((z, mp.loggamma(z)))
    emit("LogGamma", ["z", "value"], rows)

    # (z; q)_inf
    rows = []
    while len(rows) < N:
        q = mp.mpc(*(lambda r, t: (r * mp.cos(t), r * mp.sin(t)))(u(0.05, 0.9), u(-3.1, 3.1)))
        z = mp.mpc(u(-3, 3), u(-3, 3))
        v = mp.qp(z, q)
        if abs(v) < 1e-6:
            continue
        rows.append((z, q, v))
    emit("QPoch", ["z", "q", "value"], rows)

    # B22
    rows = []
    while len(rows) < N:
        w1 = mp.mpc(u(0.5, 2), u(-1, 1))
        w2 = mp.mpc(u(0.5, 2), u(-1, 1))
        z = mp.mpc(u(-3, 3), u(-3, 3))
        rows.append((z, w1, w2, b22(z, w1, w2)))
    emit("B22", ["u", "w1", "w2", "value"], rows)

    # hyperbolic gamma: w1 = 1, w2 = rho e^{i theta}, u inside and a little outside the strip
    rows = []
    while len(rows) < N:
        w1 = mp.mpc(1)
        w2 = mp.mpf(u(0.6, 1.6)) * mp.exp(1j * u(0.35, 1.4) * rng.choice([1, -1]))
        eta = (w1 + w2) / 2
        z = eta + mp.mpc(u(-1.2, 1.2), u(-1.0, 1.0))
        try:
            v = log_hyp_gamma(z, w1, w2)
        except ZeroDivisionError:
            continue
        if abs(mp.exp(v)) > 1e8 or abs(mp.exp(v)) < 1e-8:
            continue
        rows.append((z, w1, w2, mp.exp(v)))
    emit("HypGamma", ["u", "w1", "w2", "value"], rows)

    # gamma_h on the orbifold, periods in the upper half plane
    rows = []
    while len(rows) < N:
        r = rng.randint(1, 4)
        m = rng.randint(-3, 3)
        w1 = mp.mpc(0, 1)
        w2 = 1j * mp.mpf(u(0.8, 1.3)) * mp.exp(1j * u(0.2, 0.6) * rng.choice([1, -1]))
        z = mp.mpc(u(-1.5, 1.5), u(-0.3, 0.3))
        try:
            v = log_gamma_h(z, m, r, w1, w2)
        except ZeroDivisionError:
            continue
        ev = mp.exp(v)
        if abs(ev) > 1e8 or abs(ev) < 1e-8:
            continue
        rows.append((z, m, r, w1, w2, ev))
    emit("GammaH", ["z", "m", "r", "w1", "w2", "value"], rows)

    print("}  // namespace oracle")


if __name__ == "__main__":
    main()
