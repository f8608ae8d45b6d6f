#!/usr/bin/env python3
"""Recompute the frozen reference values used in tests/oracles.py.

Everything here is plain term-by-term summation (or Lerch-based polylog)
in mpmath at 40-50 digits; runtime is a couple of minutes because the
near-saturation series are summed without acceleration on purpose.
"""

import mpmath as mp


def bose_series(nu, x, dps=50):
    # z = e^-x built inside the precision context: the half-order series is
    # sensitive enough near saturation that a 15-digit argument moves the
    # 13th digit of the result
    with mp.workdps(dps):
        z = mp.e ** (-mp.mpf(x))
        nu = mp.mpf(nu)
        total = mp.mpf(0)
        l = 1
        while True:
            term = z**l / mp.mpf(l) ** nu
            total += term
            if term * z / (1 - z) < mp.mpf(10) ** (-(dps - 5)) * total:
                return total
            l += 1


def population_ex_x(x, tau, dps=40):
    with mp.workdps(dps):
        x = mp.mpf(x)
        tau = mp.mpf(tau)
        total = 1 / mp.expm1(x)
        l = 1
        while True:
            term = mp.e ** (-x * l) * ((-mp.expm1(-tau * l)) ** -3 - 1)
            total += term
            if l * float(tau) > 45 and term < mp.mpf("1e-35") * total:
                return total
            l += 1


def density_ex(z, tau, r, dps=40):
    with mp.workdps(dps):
        z = mp.mpf(z)
        tau = mp.mpf(tau)
        r = mp.mpf(r)
        total = mp.mpf(0)
        l = 1
        while True:
            term = (
                z**l
                / (-mp.expm1(-2 * tau * l)) ** mp.mpf("1.5")
                * mp.e ** (-mp.tanh(tau * l / 2) * r * r)
            )
            total += term
            if l > 20 and term * z / (1 - z) < mp.mpf("1e-35") * total:
                return total / mp.pi ** mp.mpf("1.5")
            l += 1


def saturated_capacity(tau, dps=40):
    with mp.workdps(dps):
        tau = mp.mpf(tau)
        total = mp.mpf(0)
        l = 1
        while True:
            term = (-mp.expm1(-tau * l)) ** -3 - 1
            total += term
            if l * float(tau) > 45 and term < mp.mpf("1e-35") * total:
                return total
            l += 1


def main() -> None:
    show = lambda name, value: print(f"{name} = {mp.nstr(value, 20)}")

    show("g_1/2(e^-1e-3), series", bose_series("0.5", "0.001"))
    with mp.workdps(40):
        show("g_1/2(e^-1e-6)", mp.polylog(mp.mpf("0.5"), mp.e ** (-mp.mpf("1e-6"))))
        show("g_3/2(e^-1e-6)", mp.polylog(mp.mpf("1.5"), mp.e ** (-mp.mpf("1e-6"))))
        show("g_3(e^-1e-4)", mp.polylog(3, mp.e ** (-mp.mpf("1e-4"))))
        show("g_2(e^-1e-4)", mp.polylog(2, mp.e ** (-mp.mpf("1e-4"))))

    show("N(z=0.5, tau=1)", population_ex_x(-mp.log(mp.mpf("0.5")), 1))
    show("rho(0.5, 1, r=0)", density_ex("0.5", 1, 0))
    show("rho(0.5, 1, r=1)", density_ex("0.5", 1, 1))
    show("rho(0.9, 0.5, r=2)", density_ex("0.9", "0.5", 2))
    show("capacity at T=93.37", saturated_capacity(1 / mp.mpf("93.37")))

    with mp.workdps(40):
        for atoms, guess in ((1e3, "8.7138"), (1e6, "93.358")):
            t_star = mp.findroot(
                lambda t: saturated_capacity(1 / t) - atoms, mp.mpf(guess)
            )
            show(f"T*_ex({atoms:.0e})", t_star)

        # x = -ln z at N = 1e6, tau = 1/93.37 by bisection
        tau = 1 / mp.mpf("93.37")
        lo, hi = mp.mpf("1e-6"), mp.mpf("1e-2")
        f_lo = population_ex_x(lo, tau) - 1000000
        for _ in range(140):
            mid = (lo + hi) / 2
            if (population_ex_x(mid, tau) - 1000000) * f_lo > 0:
                lo = mid
            else:
                hi = mid
        show("x*(N=1e6, tau=1/93.37)", (lo + hi) / 2)


if __name__ == "__main__":
    main()
