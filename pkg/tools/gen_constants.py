"""Regenerate src/genera/constants.py.

Standalone Euler-Maclaurin evaluation of gamma and zeta(3..15), written
without importing the package so the table is an independent check on it.
Run from the repository root:

    python3 tools/gen_constants.py > src/genera/constants.py
"""

import mpmath

DIGITS = 50
WORK = 80
N = 60
TERMS = 40


def zeta(s):
    n = mpmath.mpf(N)
    total = sum(mpmath.mpf(k) ** -s for k in range(1, N))
    total += n ** (1 - s) / (s - 1) + n ** -s / 2
    for k in range(1, TERMS + 1):
        rising = mpmath.rf(s, 2 * k - 1)
        total += mpmath.bernoulli(2 * k) / mpmath.factorial(2 * k) * rising * n ** (-s - 2 * k + 1)
    return total


def gamma():
    n = mpmath.mpf(N)
    total = sum(1 / mpmath.mpf(k) for k in range(1, N + 1)) - mpmath.log(n) - 1 / (2 * n)
    for k in range(1, TERMS + 1):
        total += mpmath.bernoulli(2 * k) / (2 * k * n ** (2 * k))
    return total


def main():
    mpmath.mp.dps = WORK
    table = {"gamma": gamma()}
    for s in range(3, 16, 2):
        table[f"zeta{s}"] = zeta(s)
    print('"""High-precision constants generated by tools/gen_constants.py."""')
    print()
    print(f"TABLE_DIGITS = {DIGITS}")
    print()
    print("CONSTANTS = {")
    for name, value in table.items():
        print(f'    "{name}": "{mpmath.nstr(value, DIGITS + 1, strip_zeros=False)}",')
    print("}")


if __name__ == "__main__":
    main()
