"""Compiled orderly generation of semigroup tables up to isomorphism.

A table is kept iff it is the row-major lexicographically least member of
its isomorphism class. Cells are filled in row-major order; associativity is
checked for every triple whose four cells become known, and a partial table
is dropped as soon as some relabelling is provably smaller.
"""
from __future__ import annotations

from itertools import permutations

import numpy as np
from numba import njit

UNSET = -1


def permutation_arrays(n: int) -> tuple[np.ndarray, np.ndarray]:
    """All non-identity relabellings as (sigma, sigma inverse) rows."""
    perms = [p for p in permutations(range(n)) if p != tuple(range(n))]
    sig = np.array(perms, dtype=np.int64).reshape(len(perms), n)
    inv = np.empty_like(sig)
    for k in range(len(perms)):
        for i in range(n):
            inv[k, sig[k, i]] = i
    return sig, inv


@njit(cache=True)
def _known(n, pos, r, c):
    return r * n + c <= pos


@njit(cache=True)
def _assoc_ok(t, n, pos):
    """Check every triple that uses cell ``pos`` once all its cells are known."""
    i = pos // n
    j = pos - i * n
    v = t[pos]
    for w in range(n):
        # (i j) w = i (j w)
        if _known(n, pos, v, w) and _known(n, pos, j, w):
            y = t[j * n + w]
            if _known(n, pos, i, y) and t[v * n + w] != t[i * n + y]:
                return False
        # (w i) j = w (i j)
        if _known(n, pos, w, i):
            x = t[w * n + i]
            if _known(n, pos, x, j) and _known(n, pos, w, v):
                if t[x * n + j] != t[w * n + v]:
                    return False
    # cell (i, j) as the outer product (x c) with x = a b, or (a y) with y = b c
    for a in range(n):
        for b in range(n):
            if not _known(n, pos, a, b):
                continue
            ab = t[a * n + b]
            if ab == i:
                # (a b) j = a (b j)
                if _known(n, pos, b, j):
                    y = t[b * n + j]
                    if _known(n, pos, a, y) and v != t[a * n + y]:
                        return False
            if ab == j:
                # (i a) b = i (a b)
                if _known(n, pos, i, a):
                    x = t[i * n + a]
                    if _known(n, pos, x, b) and t[x * n + b] != v:
                        return False
    return True


@njit(cache=True)
def _advance(t, n, pos, sig, inv, k, state):
    """Advance the comparison of relabelling k against t.

    state holds the first position not yet known to agree, or -1 once the
    relabelled table is known to be larger. Returns False iff it is smaller.
    """
    q = state[k]
    if q < 0:
        return True
    while q <= pos:
        r = q // n
        c = q - r * n
        sr = inv[k, r]
        sc = inv[k, c]
        if sr * n + sc > pos:
            break
        val = sig[k, t[sr * n + sc]]
        if val < t[q]:
            return False
        if val > t[q]:
            q = -1
            break
        q += 1
    state[k] = q
    return True


@njit(cache=True)
def _grow(buf, count, row):
    if count == buf.shape[0]:
        bigger = np.empty((2 * buf.shape[0], buf.shape[1]), dtype=buf.dtype)
        bigger[:count] = buf[:count]
        buf = bigger
    buf[count] = row
    return buf


@njit(cache=True)
def search(n, sig, inv, prefix, stop):
    """All accepted tables of length ``stop`` extending ``prefix``.

    With stop < n*n the results are prefixes (work units); with stop = n*n
    they are complete canonical tables.
    """
    cells = n * n
    nperm = sig.shape[0]
    t = np.full(cells, UNSET, dtype=np.int64)
    states = np.zeros((cells + 1, nperm), dtype=np.int64)
    out = np.empty((64, stop), dtype=np.int64)
    count = 0
    plen = prefix.shape[0]
    # replay the prefix through the same tests
    for pos in range(plen):
        t[pos] = prefix[pos]
        if not _assoc_ok(t, n, pos):
            return out[:0]
        states[pos + 1] = states[pos]
        for k in range(nperm):
            if not _advance(t, n, pos, sig, inv, k, states[pos + 1]):
                return out[:0]
    if plen == stop:
        out = _grow(out, count, t[:stop])
        return out[:1]
    pos = plen
    t[pos] = UNSET
    while pos >= plen:
        t[pos] += 1
        if t[pos] >= n:
            t[pos] = UNSET
            pos -= 1
            continue
        if not _assoc_ok(t, n, pos):
            continue
        states[pos + 1] = states[pos]
        ok = True
        for k in range(nperm):
            if not _advance(t, n, pos, sig, inv, k, states[pos + 1]):
                ok = False
                break
        if not ok:
            continue
        if pos + 1 == stop:
            out = _grow(out, count, t[:stop])
            count += 1
            continue
        pos += 1
        t[pos] = UNSET
    return out[:count]


@njit(cache=True)
def least_relabelling(flat, n, sig, inv):
    """Row-major least relabelled copy of a flat table."""
    best = flat.copy()
    cells = n * n
    for k in range(sig.shape[0]):
        smaller = False
        for q in range(cells):
            r = q // n
            c = q - r * n
            val = sig[k, flat[inv[k, r] * n + inv[k, c]]]
            if not smaller:
                if val > best[q]:
                    break
                if val < best[q]:
                    smaller = True
            if smaller:
                best[q] = val
    return best


@njit(cache=True)
def opposite_flat(flat, n):
    out = np.empty_like(flat)
    for a in range(n):
        for b in range(n):
            out[a * n + b] = flat[b * n + a]
    return out
