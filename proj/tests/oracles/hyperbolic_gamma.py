"""log G(z | 1, 1/omega) from the half-line integral in the strip, with mpmath."""
import mpmath as mp

mp.mp.dps = 25


def log_g(z, omega):
    z = mp.mpc(z)
    omega = mp.mpf(omega)

    def f(t):
        return (mp.sin(2 * omega * t * z) / (2 * mp.sinh(omega * t) * mp.sinh(t)) - z / t) / t

    # Gauss-Legendre avoids sampling next to t = 0, where the two terms cancel
    # catastrophically; the fine subdivision resolves the oscillation.
    pts = [mp.mpf(k) / 4 for k in range(0, 241)]
    return 1j * (mp.quad(f, pts, method="gauss-legendre") + mp.quad(f, [60, mp.inf]))


def asymptotic_ratio(z, omega):
    omega = mp.mpf(omega)
    lead = 1j * mp.pi * (omega * z * z / 2 + (omega + 1 / omega) / 24)
    return abs(mp.exp(log_g(z, omega) + lead))


if __name__ == "__main__":
    for z, omega in [("0.2+0.3j", 1), ("0.3+0.1j", 1), ("-1.2+0.4j", 1), ("0.5-0.2j", "0.3"), ("1.1+0.25j", "1.7"),
                     ("-0.4+0.6j", "0.3")]:
        print(z, omega, mp.nstr(log_g(mp.mpc(complex(z)), omega), 17))
    print("asym x=8 w=1", mp.nstr(asymptotic_ratio(mp.mpc(8, "0.1"), 1), 17))
