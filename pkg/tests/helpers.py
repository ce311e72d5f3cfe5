"""Shared helpers for the test suite (not collected by pytest)."""

from itertools import product


def point_set(member, M):
    """All points of a lattice member, as the point-set oracles represent them."""
    p = M.algebra.field.p
    pts = set()
    for coeffs in product(range(p), repeat=member.dim):
        v = [0] * M.dim
        for c, row in zip(coeffs, member.basis):
            for j in range(M.dim):
                v[j] = (v[j] + c * row[j]) % p
        pts.add(tuple(v))
    return frozenset(pts)
