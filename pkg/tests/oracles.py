"""Brute-force reference implementations, sharing no code with the package.

Vectors are strings of '0'/'1' or lists of bits; everything is enumerated
exhaustively, so these are only usable for small lengths.
"""

import itertools
import math
from collections import Counter


def to_bits(s):
    return [int(c) for c in s]


def xor(a, b):
    return [x ^ y for x, y in zip(a, b)]


def span(gens, n):
    words = set()
    for coeffs in itertools.product((0, 1), repeat=len(gens)):
        w = [0] * n
        for c, g in zip(coeffs, gens):
            if c:
                w = xor(w, g)
        words.add(tuple(w))
    return words


def coset_distribution(v, gens, n):
    counts = [0] * (n + 1)
    for w in span(gens, n):
        counts[sum(xor(list(w), v))] += 1
    return tuple(counts)


def code_distribution(gens, n):
    return coset_distribution([0] * n, gens, n)


def dual_distribution(gens, n):
    counts = [0] * (n + 1)
    for h in itertools.product((0, 1), repeat=n):
        if all(sum(a & b for a, b in zip(h, g)) % 2 == 0 for g in gens):
            counts[sum(h)] += 1
    return tuple(counts)


def pdp(rows):
    n = len(rows)
    out = []
    for i in range(n):
        dist = coset_distribution(rows[i], rows[i + 1:], n)
        out.append(next(w for w, c in enumerate(dist) if c))
    return tuple(out)


def rank(rows):
    n = len(rows[0]) if rows else 0
    return round(math.log2(len(span(rows, n)))) if rows else 0


def rate(d):
    n = len(d)
    return sum(math.log(x, n) for x in d) / n


def naive_pdps(n, e_min, cap, lemma4=True, lemma5=True):
    """Nested-loop enumeration over all of [1, n]^n with every filter applied after the fact."""
    out = set()
    for d in itertools.product(range(1, n + 1), repeat=n):
        if any(d[i] > d[i + 1] for i in range(n - 1)):
            continue
        if any(d[phi] > cap(n, n - phi) for phi in range(n)):
            continue
        if lemma4 and d[1] == 2 and any(x % 2 for x in d[1:]):
            continue
        if lemma5 and any(
            sum(2 ** (n - j) * d[j] for j in range(i, n)) > 2 ** (n - i) * n for i in range(n)
        ):
            continue
        if rate(d) > e_min:
            out.add(d)
    return out


def all_kernels_with_row_weights(pdp_target):
    """Every matrix whose row i has weight D_i and whose profile is exactly D."""
    n = len(pdp_target)
    per_row = [
        [list(w) for w in itertools.product((0, 1), repeat=n) if sum(w) == pdp_target[i]]
        for i in range(n)
    ]
    found = []
    for rows in itertools.product(*per_row):
        if pdp(list(rows)) == tuple(pdp_target):
            found.append(rows)
    return found
