"""Taylor coefficients of R_1(x; y) in X = (e^{2 pi i x} - 1)/(2 pi i) and
Y = (e^{2 pi i y} - 1)/(2 pi i), by a discrete Cauchy integral."""
import mpmath as mp

mp.mp.dps = 30
tp = 2j * mp.pi


def R1(x, y):
    return tp * (1 - mp.exp(tp * x * y)) / ((1 - mp.exp(tp * x)) * (1 - mp.exp(tp * y)))


def coef(alpha, beta, rho=mp.mpf("0.05"), M=32):
    """Coefficient of X^beta Y^alpha."""
    s = 0
    for j in range(M):
        for k in range(M):
            X = rho * mp.expjpi(2 * mp.mpf(j) / M)
            Y = rho * mp.expjpi(2 * mp.mpf(k) / M)
            x = mp.log(1 + tp * X) / tp
            y = mp.log(1 + tp * Y) / tp
            s += R1(x, y) / (X ** beta * Y ** alpha)
    return s / M ** 2


if __name__ == "__main__":
    for alpha, beta in [(0, 0), (0, 1), (1, 0), (1, 1), (0, 2)]:
        print(alpha, beta, mp.nstr(coef(alpha, beta), 15))
