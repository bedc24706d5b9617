"""Values of Z_omega on short monomials by direct quadrature of the defining
vertical-line integrals (mpmath, independent of the C++ engine)."""
import mpmath as mp

mp.mp.dps = 20


def measure(t):
    return 1 / (mp.exp(2j * mp.pi * t) - 1)


def kernel(letter, t, omega):
    h = 2j * mp.pi * omega
    if letter == "E":
        return h
    return (h / (mp.exp(-h * t) - 1)) ** letter


def line(f, eps):
    return 1j * mp.quad(lambda u: f(mp.mpc(-eps, u)), [-mp.inf, -4, -1, 0, 1, 4, mp.inf])


def Z(letters, omega, eps):
    """Nested integral; t_1 outermost."""
    def inner(depth, partial):
        if depth == len(letters):
            return mp.mpf(1)
        return line(lambda t: measure(t) * kernel(letters[depth], partial + t, omega)
                    * inner(depth + 1, partial + t), eps)
    return inner(0, mp.mpf(0))


if __name__ == "__main__":
    cases = [
        ("g1 w=1", [1], 1.0, 0.3),
        ("g2 w=1", [2], 1.0, 0.3),
        ("g3 w=1", [3], 1.0, 0.3),
        ("E g1 w=1", ["E", 1], 1.0, 0.3),
        ("g2 w=0.3", [2], 0.3, 0.3),
        ("g1 w=0.3", [1], 0.3, 0.3),
        ("g2 w=1.7", [2], 1.7, 0.2),
        ("g1 w=1.7", [1], 1.7, 0.2),
    ]
    for name, letters, omega, eps in cases:
        print(name, mp.nstr(Z(letters, mp.mpf(omega), mp.mpf(eps)), 16))
    mp.mp.dps = 12
    print("E g2 w=1", mp.nstr(Z(["E", 2], mp.mpf(1), mp.mpf("0.3")), 10))
    print("g1 g2 w=0.5", mp.nstr(Z([1, 2], mp.mpf("0.5"), mp.mpf("0.3")), 10))
