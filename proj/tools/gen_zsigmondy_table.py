#!/usr/bin/env python3
"""Regenerates data/zsigmondy_factors.txt.

For every (p, k) used by the acceptance scan (p < 200, k <= 40) and by the
family-prime property grid (p <= 50, e <= 4, rank <= 12), the primitive
part of p^k - 1 is Phi_k(p) with the primes of k removed. Its prime
factors are exactly the primitive prime divisors. When that part is
composite and has no factor below 2^20, trial division in the library
cannot find the smallest one, so its full factorization is stored here.
The library re-verifies every line (product and primality) before use.

Requires python-flint.
"""
import sys

import flint
from sympy import factorint, primerange

TRIAL = 1 << 20


def phi(k, p):
    num, den = 1, 1
    for d in range(1, k + 1):
        if k % d:
            continue
        mu = mobius(k // d)
        if mu == 1:
            num *= p**d - 1
        elif mu == -1:
            den *= p**d - 1
    return num // den


def mobius(n):
    f = factorint(n)
    if any(e > 1 for e in f.values()):
        return 0
    return -1 if len(f) % 2 else 1


def primitive_part(p, k):
    m = phi(k, p)
    for ell in factorint(k):
        while m % ell == 0:
            m //= ell
    return m


def needs_table(m, k):
    r = k + 1
    while r <= TRIAL:
        if r * r > m:
            return False
        if m % r == 0:
            return False
        r += k
    return not flint.fmpz(m).is_probable_prime()


def exponents():
    pairs = set()
    for p in primerange(2, 200):
        for k in range(2, 41):
            pairs.add((p, k))
    for p in primerange(2, 51):
        for e in range(1, 5):
            for n in range(2, 13):
                ks = [e * n, e * (n - 1), e * (n - 2), 2 * e * (n - 1), 2 * e * n]
                pairs.update((p, k) for k in ks if k >= 2)
    return sorted(pairs)


def main(out):
    lines = []
    for p, k in exponents():
        m = primitive_part(p, k)
        if m == 1 or not needs_table(m, k):
            continue
        factors = []
        for f, mult in flint.fmpz(m).factor():
            factors += [int(f)] * mult
        factors.sort()
        lines.append(f"{p} {k} " + " ".join(map(str, factors)))
        print(p, k, len(str(m)), file=sys.stderr, flush=True)
    with open(out, "w") as fh:
        fh.write("# Full factorizations of primitive parts of p^k - 1 (Phi_k(p) with the\n")
        fh.write("# primes of k removed) that have no factor below 2^20 and are composite.\n")
        fh.write("# Generated by tools/gen_zsigmondy_table.py with python-flint.\n")
        fh.write("# p k factors...\n")
        fh.write("\n".join(lines) + "\n")


if __name__ == "__main__":
    main(sys.argv[1] if len(sys.argv) > 1 else "data/zsigmondy_factors.txt")
