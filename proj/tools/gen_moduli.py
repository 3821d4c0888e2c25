#!/usr/bin/env python3
"""Writes the modulus fixture: for every prime power p^h <= 2^20 with h >= 2,
the smallest (by little-endian coefficient index) monic primitive polynomial.
Prime fields use x - g for the smallest primitive root g and are not listed."""
import sys

LIMIT = 1 << 20


def primes_upto(n):
    sieve = bytearray([1]) * (n + 1)
    sieve[0:2] = b"\x00\x00"
    for i in range(2, int(n ** 0.5) + 1):
        if sieve[i]:
            sieve[i * i :: i] = bytearray(len(sieve[i * i :: i]))
    return [i for i in range(n + 1) if sieve[i]]


def factor(n):
    out, d = [], 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1
    if n > 1:
        out.append(n)
    return out


def polymulmod(a, b, f, p):
    h = len(f) - 1
    res = [0] * (2 * h - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                res[i + j] = (res[i + j] + x * y) % p
    for d in range(len(res) - 1, h - 1, -1):
        c = res[d]
        if c:
            for k in range(h + 1):
                res[d - h + k] = (res[d - h + k] - c * f[k]) % p
    return res[:h]


def polypow_x(e, f, p):
    h = len(f) - 1
    result = [1] + [0] * (h - 1)
    base = [0, 1] + [0] * (h - 2)
    while e:
        if e & 1:
            result = polymulmod(result, base, f, p)
        base = polymulmod(base, base, f, p)
        e >>= 1
    return result


def is_primitive(f, p, q, factors):
    one = [1] + [0] * (len(f) - 2)
    if polypow_x(q - 1, f, p) != one:
        return False
    return all(polypow_x((q - 1) // r, f, p) != one for r in factors)


def smallest_primitive(p, h):
    q = p ** h
    factors = factor(q - 1)
    for idx in range(p ** h):
        coeffs, x = [], idx
        for _ in range(h):
            coeffs.append(x % p)
            x //= p
        if coeffs[0] == 0:
            continue
        f = coeffs + [1]
        if is_primitive(f, p, q, factors):
            return f
    raise RuntimeError(f"no primitive polynomial for {p}^{h}")


def main():
    out = sys.stdout if len(sys.argv) < 2 else open(sys.argv[1], "w")
    out.write("# p h c0 c1 ... ch  (monic primitive modulus, coefficients low to high)\n")
    for p in primes_upto(1 << 10):
        h = 2
        while p ** h <= LIMIT:
            f = smallest_primitive(p, h)
            out.write(" ".join(str(v) for v in [p, h] + f) + "\n")
            h += 1


if __name__ == "__main__":
    main()
