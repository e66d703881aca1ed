"""Lattice-cone combinatorics for the point-addition step.

The monoid of lattice points (x, y) with 0 <= y <= (alpha/beta) x is
generated by (1, 0) together with finitely many primitives; the
primitives index the new ring generators when a point with coefficient
alpha/beta is adjoined.  Primitives are found by an explicit sieve
(enumerate and subtract monoid sums); the continued-fraction closed form
is exposed separately and used as a cross-check in the tests.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from itertools import product


class ReducedFractionError(ValueError):
    """alpha/beta must be in lowest terms."""


@dataclass(frozen=True)
class ConePrimitive:
    """One minimal monoid generator: x-coordinate = degree, y = pole order."""

    degree: int
    pole_order: int


def cone_primitives(alpha: int, beta: int) -> list[ConePrimitive]:
    """Minimal generators of {0 <= y <= (alpha/beta) x}, excluding (1, 0).

    Sieve: walk x upward to beta (every generator has x <= beta, since a
    point at x = beta + w splits off a point at x <= beta), marking which
    (x, y) are sums of (1, 0) and generators found so far.
    """
    if alpha <= 0 or beta <= 0:
        raise ReducedFractionError("alpha and beta must be positive")
    if math.gcd(alpha, beta) != 1:
        raise ReducedFractionError(f"{alpha}/{beta} is not reduced")
    height = lambda x: (alpha * x) // beta
    reachable = {(0, 0)}
    gens: list[tuple[int, int]] = [(1, 0)]
    for x in range(1, beta + 1):
        for y in range(height(x) + 1):
            hit = any(
                x >= gx and y >= gy and (x - gx, y - gy) in reachable
                for gx, gy in gens)
            if not hit and (x, y) != (1, 0):
                gens.append((x, y))
            reachable.add((x, y))
    prims = sorted((x, y) for x, y in gens if (x, y) != (1, 0))
    out = [ConePrimitive(x, y) for x, y in prims]
    _check_shape(out, alpha, beta)
    return out


def _check_shape(prims, alpha, beta):
    poles = [p.pole_order for p in prims]
    degs = [p.degree for p in prims]
    assert poles == sorted(set(poles)), "pole orders must strictly increase"
    assert degs == sorted(degs), "degrees must weakly increase"
    assert all(p.degree <= beta and p.pole_order <= alpha for p in prims)


def best_lower_approximations(alpha: int, beta: int) -> list[ConePrimitive]:
    """Closed form via Stern-Brocot mediants: the best approximations to
    alpha/beta from below, ending with the diagonal point (beta, alpha)."""
    if math.gcd(alpha, beta) != 1:
        raise ReducedFractionError(f"{alpha}/{beta} is not reduced")
    lo, hi = (1, 0), (0, 1)  # slopes 0/1 and 1/0
    out = []
    while True:
        med = (lo[0] + hi[0], lo[1] + hi[1])
        if med[1] * beta == alpha * med[0]:
            out.append(med)
            break
        if med[1] * beta < alpha * med[0]:
            out.append(med)
            lo = med
        else:
            hi = med
    return [ConePrimitive(x, y) for x, y in out]


@dataclass(frozen=True)
class USet:
    """Relation exponents over y_1..y_i whose pole sum first reaches
    c_{i+1}: condition (U-1) with minimality (U-2) and the prefix
    condition (U-3)."""

    index: int
    monomials: tuple[tuple[int, ...], ...]


def u_relation_sets(c: list[int], k: list[int]) -> list[USet]:
    """U_i for 1 <= i <= n-1 over pole orders c and degrees k.

    Exponents are bounded by ceil(c_{i+1}/c_j) (anything larger violates
    minimality), so the enumeration is a finite box sweep.
    """
    n = len(c)
    if len(k) != n or n < 1:
        raise ValueError("pole and degree lists must have equal length >= 1")
    if any(x <= 0 for x in c) or list(c) != sorted(set(c)):
        raise ValueError("pole orders must be strictly increasing positive")
    out = []
    for i in range(1, n):
        target = c[i]          # c_{i+1} in 1-based notation
        box = [range(-(-target // c[j]) + 1) for j in range(i)]
        members = []
        for a in product(*box):
            if sum(a[j] * c[j] for j in range(i)) < target:
                continue  # (U-1)
            if not _is_minimal(a, c, target):
                continue  # (U-2)
            if any(sum(a[j] * c[j] for j in range(r)) > c[r]
                   for r in range(1, i)):
                continue  # (U-3), strict inequality as printed
            members.append(tuple(a))
        out.append(USet(i, tuple(sorted(members))))
    return out


def _is_minimal(a, c, target):
    for j in range(len(a)):
        if a[j] and sum(a[m] * c[m] for m in range(len(a))) - c[j] >= target:
            return False
    return True
