"""Dimension counts h^0(floor(kL)), Hilbert functions/series, saturation.

All dimensions come from Riemann-Roch on the coarse space, split by
genus.  The rational-series form is reconstructed from the dimension
sequence against the fixed denominator (1-t)^2 * prod_i (1-t^{e_i}) and
validated by expansion; it is never derived symbolically.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .divisor import (GENERIC, TRIVIAL, TWO_TORSION, QDivisor, Signature,
                      deg_floor, floor_divisor)

INFINITE = math.inf


class NonTerminatingNumerator(ArithmeticError):
    """Series numerator fails to terminate: a dimension-count bug, or a
    divisor class (genus-1 two-torsion with no stacky points) outside the
    fixed-denominator family."""


def h0(L: QDivisor, k: int) -> int:
    """dim H^0(X, floor(kL)) for the genus carried by L's context."""
    sig = L.context
    d = deg_floor(L, k)
    g = sig.genus
    if g == 0:
        return max(0, d + 1)
    if g == 1:
        if d < 0:
            return 0
        if d >= 1:
            return d
        return 1 if _floor_class_trivial(L, k) else 0
    # genus >= 2
    if k == 0:
        return 1
    if k == 1:
        return _theta_dim(sig)
    if k == 2:
        return g if sig.log_degree == 0 else g - 1 + sig.log_degree
    return d - g + 1


def _theta_dim(sig: Signature) -> int:
    nu = sig.theta_dim
    if nu == GENERIC or nu is None:
        return max(0, sig.log_degree // 2)
    return nu


def _floor_class_trivial(L: QDivisor, k: int) -> bool:
    """Is floor(kL) ~ 0 on a genus-1 curve?

    Degree-0 floors supported anywhere but the torsion pair are general
    position, hence nontrivial; m(P-Q) is trivial exactly for even m.
    """
    F = floor_divisor(L, k)
    m = None
    for p, c in F.terms:
        if p.kind == "distinguished" and p.label in ("P", "Q"):
            mag = c if p.label == "P" else -c
            if m is not None and mag != m:
                return False
            m = mag
        elif c != 0:
            return False
    if m is None:
        return True
    return m.denominator == 1 and m.numerator % 2 == 0


@dataclass(frozen=True)
class HilbertProfile:
    dims: tuple[int, ...]
    cutoff: int


def hilbert_function(L: QDivisor, K: int) -> HilbertProfile:
    return HilbertProfile(tuple(h0(L, k) for k in range(K + 1)), K)


@dataclass(frozen=True)
class RationalSeries:
    """numerator(t) / prod (1-t^d)^mult, factors given as (d, mult)."""

    numerator: tuple[int, ...]
    denominator: tuple[tuple[int, int], ...]

    def expand(self, K: int) -> tuple[int, ...]:
        out = list(self.numerator) + [0] * (K + 1 - len(self.numerator))
        out = out[:K + 1]
        for d, mult in self.denominator:
            for _ in range(mult):
                # multiply by 1/(1-t^d): running sums with lag d
                for i in range(d, K + 1):
                    out[i] += out[i - d]
        return tuple(out)

    def as_json(self) -> dict:
        return {"numerator": list(self.numerator),
                "denominator": [list(f) for f in self.denominator]}


def _poly_mul_trunc(a, b, K):
    out = [0] * (K + 1)
    for i, x in enumerate(a):
        if i > K or x == 0:
            continue
        for j, y in enumerate(b):
            if i + j > K:
                break
            out[i + j] += x * y
    return out


def _denominator_poly(factors, K):
    poly = [1]
    for d, mult in factors:
        base = [0] * (d + 1)
        base[0], base[d] = 1, -1
        for _ in range(mult):
            poly = _poly_mul_trunc(poly, base, K)
    return poly


def _cancel(numerator: list[int], factors: list[list[int]]):
    """Divide out (1-t^d) factors that divide the numerator exactly."""
    factors = sorted(factors)
    changed = True
    while changed:
        changed = False
        for f in factors:
            d, mult = f
            while mult > 0 and len(numerator) > 1:
                # synthetic division by (1 - t^d)
                q = list(numerator)
                for i in range(d, len(q)):
                    q[i] += q[i - d]
                if any(q[i] != 0 for i in range(len(q) - d, len(q))):
                    break
                numerator = q[:len(q) - d]
                while len(numerator) > 1 and numerator[-1] == 0:
                    numerator.pop()
                mult -= 1
                changed = True
            f[1] = mult
    kept = tuple((d, m) for d, m in factors if m > 0)
    return numerator, kept


def hilbert_series(L: QDivisor, K: int | None = None) -> RationalSeries:
    """Fit the dimension sequence to the fixed rational form.

    Floor corrections live in degrees <= 2, so the raw numerator stops by
    deg(denominator) + 2; anything surviving past that within the window
    signals an inconsistent dimension sequence.
    """
    es = sorted(L.context.stabilizers)
    D = 2 + sum(es)
    min_K = 2 * D
    if K is None:
        K = min_K
    if K < min_K:
        raise ValueError(f"window K={K} too small to certify termination "
                         f"(need >= {min_K})")
    factors = [[1, 2]] + [[e, es.count(e)] for e in sorted(set(es))]
    dims = hilbert_function(L, K).dims
    denom = _denominator_poly(factors, K)
    num = _poly_mul_trunc(dims, denom, K)
    if any(num[i] != 0 for i in range(D + 3, K + 1)):
        raise NonTerminatingNumerator(
            f"numerator of {L.context} does not terminate by degree {D + 2}")
    num = num[:D + 3]
    while len(num) > 1 and num[-1] == 0:
        num.pop()
    num, kept = _cancel(num, factors)
    return RationalSeries(tuple(num), kept)


def saturation(L: QDivisor) -> int | float:
    """sat(Eff(L)): least s with deg floor(kL) >= 0 for all k >= s.

    deg(L) > 0: floor(x) > x-1 termwise bounds the scan by
    ceil((r+2)/deg L).  deg(L) <= 0: Eff is periodic (union of residue
    classes mod the lcm of coefficient denominators), so one period
    decides between 0 and infinity.
    """
    deg = L.degree()
    n_frac = sum(1 for _, c in L.terms if c.denominator > 1)
    if deg > 0:
        bound = math.ceil(Fraction(n_frac + 2) / deg)
        last_bad = 0
        for k in range(1, bound + 1):
            if deg_floor(L, k) < 0:
                last_bad = k
        return last_bad + 1 if last_bad else 0
    if deg < 0:
        return INFINITE
    period = math.lcm(*(c.denominator for _, c in L.terms)) if L.terms else 1
    if all(deg_floor(L, k) >= 0 for k in range(period)):
        return 0
    return INFINITE
