"""Independent reference computations for values frozen into the C++ tests.

Run with: python3 tests/oracles/frozen_values.py
"""
import cmath
import math


def gold(c_init, length, nc=1600):
    x1 = [1] + [0] * 30
    x2 = [(c_init >> i) & 1 for i in range(31)]
    total = nc + length
    for n in range(total):
        x1.append((x1[n + 3] + x1[n]) % 2)
        x2.append((x2[n + 3] + x2[n + 2] + x2[n + 1] + x2[n]) % 2)
    return [(x1[n + nc] + x2[n + nc]) % 2 for n in range(length)]


def zc(u):
    d = []
    for n in range(62):
        if n < 31:
            d.append(cmath.exp(-1j * math.pi * u * n * (n + 1) / 63))
        else:
            d.append(cmath.exp(-1j * math.pi * u * (n + 1) * (n + 2) / 63))
    return d


if __name__ == "__main__":
    print("gold(1, 8)       =", gold(1, 8))
    print("gold(0, 16)      =", gold(0, 16))
    c = gold(0x1234567, 32)
    print("gold(0x1234567,32)=", "".join(map(str, c)))
    a, b, e = zc(25), zc(29), zc(34)
    print("|xcorr(25,29)|   = %.12f" % abs(sum(x * y.conjugate() for x, y in zip(a, b))))
    print("|xcorr(25,34)|   = %.12f" % abs(sum(x * y.conjugate() for x, y in zip(a, e))))
    print("|xcorr(29,34)|   = %.12f" % abs(sum(x * y.conjugate() for x, y in zip(b, e))))
    print("zc25[1]          = %.15f %.15f" % (zc(25)[1].real, zc(25)[1].imag))
    print("isr_f(5, 0.75)   = %.12f" % (5 + 10 * math.log10(0.75)))
    print("sinr(0dB isr)    = %.12f dB" % (10 * math.log10(1 / (0.01 + 1))))
    print("isr_f(0,0.0123)  = %.12f" % (10 * math.log10(0.0123)))
    print("pusch gap        = %.12f" % (-10 * math.log10(0.75)))
    print("pucch/sync gap   = %.12f ratio %.6f" % (10 * math.log10(0.25 / 0.0123), 0.25 / 0.0123))
    print("1033/84000 dB    = %.12f" % (10 * math.log10(1033 / 84000)))
    ones = sum(gold(0x5A5A5, 100000))
    print("balance(0x5A5A5) =", ones / 100000)
