"""Line integral int_{-eps+iR} e^{alpha t}/(e^{2 pi i t}-1) dt against 1/(e^alpha-1)."""
import mpmath as mp

mp.mp.dps = 30
EPS = mp.mpf("0.3")
ALPHAS = [mp.mpc(re, im) for re, im in [
    (0, "3.14159265358979323846"), (1, 1), (0, "1.88495559215387594308"), ("-0.5", "0.3"),
    ("0.25", "5.9"), ("1.5", "2.5"), ("-1.2", "4.0"), ("0.7", "0.9"), ("0", "6.0"), ("2.0", "3.3")]]


def line_integral(alpha):
    f = lambda u: mp.exp(alpha * mp.mpc(-EPS, u)) / (mp.exp(2j * mp.pi * mp.mpc(-EPS, u)) - 1)
    return 1j * mp.quad(f, [-mp.inf, -10, -2, 0, 2, 10, mp.inf])


if __name__ == "__main__":
    for a in ALPHAS:
        lhs = line_integral(a)
        rhs = 1 / (mp.exp(a) - 1)
        print(mp.nstr(a, 17), mp.nstr(lhs, 17), mp.nstr(rhs, 17), mp.nstr(abs(lhs - rhs), 3))
