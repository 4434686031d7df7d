"""Shared helpers: independent brute-force oracles for the counting tests."""

from __future__ import annotations

import itertools

from weyldiv import AffinePower, Explicit, kth_value


def factor_values_upto(spec, lam):
    """All sequence values <= lam, enumerated one by one via kth_value."""
    vals = []
    k = 1
    while True:
        try:
            v = kth_value(spec, k)
        except IndexError:
            break
        if v > lam:
            break
        vals.append(v)
        k += 1
    return vals


def brute_count(specs, lam):
    """Tuple count by exhaustive product enumeration, independent of the library.

    Uses exact integer arithmetic when every factor is an integer AffinePower,
    plain float comparison otherwise (tests pick non-boundary lam for floats).
    """
    integer = all(isinstance(s, AffinePower) and s.integer_exact for s in specs)
    lists = []
    for s in specs:
        if integer:
            vals = []
            k = 1
            while True:
                v = s.value_int(k)
                if v > lam:
                    break
                vals.append(v)
                k += 1
        else:
            vals = factor_values_upto(s, lam)
        lists.append(vals)
    n = 0
    for combo in itertools.product(*lists):
        prod = 1 if integer else 1.0
        for v in combo:
            prod *= v
        if prod <= lam:
            n += 1
    return n


def divisor_sum_table(limit):
    """D(n) = sum_{m<=n} d(m) for n = 1..limit, by sieve; independent oracle."""
    d = [0] * (limit + 1)
    for i in range(1, limit + 1):
        for j in range(i, limit + 1, i):
            d[j] += 1
    out = [0] * (limit + 1)
    acc = 0
    for n in range(1, limit + 1):
        acc += d[n]
        out[n] = acc
    return out
