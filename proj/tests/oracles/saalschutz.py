"""Closed-form side of the Saalschutz-type identity at the preset points,
using the strip integral for G (all arguments lie inside the strip)."""
import mpmath as mp

from hyperbolic_gamma import log_g

mp.mp.dps = 20

PRESETS = [
    ((0.1, -0.2, 0.15, 0.05), (0.70, 0.65, 0.72, 0.68)),
    ((-0.15, 0.25, 0.05, -0.1), (0.60, 0.75, 0.70, 0.62)),
    ((0.2, 0.05, -0.25, 0.1), (0.74, 0.70, 0.78, 0.74)),
]


def rhs(u1, u2, u4, u5, omega):
    omega = mp.mpf(omega)
    wb = (1 + 1 / omega) / 2
    S = u1 + u2 + u4 + u5
    lg = (u1 * u2 - u4 * u5 + 1j * wb * (u4 + u5 - u1 - u2)) * 1j * mp.pi * omega
    lg += log_g(-3j * wb + S, omega)
    for uj in (u1, u2):
        for uk in (u4, u5):
            lg += log_g(1j * wb - uj - uk, omega)
    return mp.exp(lg) / mp.sqrt(omega)


if __name__ == "__main__":
    omega = 1
    wb = mp.mpf(1)
    for re, c in PRESETS:
        u = [mp.mpc(r, ci * wb) for r, ci in zip(re, c)]
        print(re, c, mp.nstr(rhs(*u, omega), 15))
