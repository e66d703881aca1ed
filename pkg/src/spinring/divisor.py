"""Exact arithmetic on Q-divisors of stacky curves.

A stacky curve is recorded by its signature (genus, stabilizer orders,
log degree).  Divisors are formal sums of abstract points with exact
rational coefficients; the only linear-equivalence data carried is the
genus-1 torsion flag and the genus->=2 theta parameter, which is all the
dimension counts downstream ever need.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction

TRIVIAL = "trivial"
TWO_TORSION = "two-torsion"
GENERIC = "generic"


class SpinParityError(ValueError):
    """An even stabilizer order: the spin divisor would leave Div(X)."""


class LogParityError(ValueError):
    """An odd log degree: 2L ~ K + Delta + ... forces deg Delta even."""


@dataclass(frozen=True, order=True)
class PointId:
    """Abstract point label.

    kind is one of "stacky", "log", "general", "distinguished"; stacky
    points carry their 1-based index in the signature.
    """

    kind: str
    label: str
    index: int = 0

    def __str__(self) -> str:
        return self.label


def stacky_point(i: int) -> PointId:
    return PointId("stacky", f"P{i}", i)


def general_point(i: int) -> PointId:
    return PointId("general", f"A{i}", i)


def distinguished_point(label: str) -> PointId:
    return PointId("distinguished", label)


@dataclass(frozen=True)
class Signature:
    """The tuple (g; e_1, ..., e_r; delta) plus the extra class data.

    torsion is required exactly when genus == 1 and log_degree == 0 and
    distinguishes L_X = 0 from L_X = P - Q.  theta_dim (an integer or
    "generic") is the genus->=2 dimension h^0(L_X).  Stabilizers are kept
    in the order given; parity of the e_i and of delta is checked by
    spin_divisor, not here, so that the modular-forms front end can hold
    even-order signatures.
    """

    genus: int
    stabilizers: tuple[int, ...]
    log_degree: int
    torsion: str | None = None
    theta_dim: int | str | None = None

    def __post_init__(self):
        if self.genus < 0:
            raise ValueError("genus must be nonnegative")
        if self.log_degree < 0:
            raise ValueError("log degree must be nonnegative")
        for e in self.stabilizers:
            if e < 2:
                raise ValueError(f"stabilizer order {e} < 2")
        needs_torsion = self.genus == 1 and self.log_degree == 0
        if needs_torsion and self.torsion not in (TRIVIAL, TWO_TORSION):
            raise ValueError("genus-1, delta=0 signature needs torsion flag "
                             f"({TRIVIAL!r} or {TWO_TORSION!r})")
        if not needs_torsion and self.torsion is not None:
            raise ValueError("torsion flag only applies to genus 1, delta=0")
        if self.genus >= 2:
            if self.theta_dim is None:
                object.__setattr__(self, "theta_dim", GENERIC)
            elif self.theta_dim != GENERIC and (
                    not isinstance(self.theta_dim, int) or self.theta_dim < 0):
                raise ValueError("theta_dim must be a nonnegative integer "
                                 "or 'generic'")
        elif self.theta_dim is not None:
            raise ValueError("theta_dim only applies to genus >= 2")

    @property
    def r(self) -> int:
        return len(self.stabilizers)

    def sorted_stabilizers(self) -> tuple[int, ...]:
        return tuple(sorted(self.stabilizers))

    def key(self):
        """Canonical identity: stabilizers sorted, class data included."""
        return (self.genus, self.sorted_stabilizers(), self.log_degree,
                self.torsion)

    def render(self) -> str:
        parts = [str(self.genus),
                 ",".join(str(e) for e in self.stabilizers),
                 str(self.log_degree)]
        if self.torsion is not None:
            parts.append(f"torsion={self.torsion}")
        if self.theta_dim is not None:
            parts.append(f"theta={self.theta_dim}")
        return ";".join(parts)

    def __str__(self) -> str:
        return self.render()


_TORSION_ALIASES = {
    "trivial": TRIVIAL,
    "two-torsion": TWO_TORSION,
    "2-torsion": TWO_TORSION,
    "pq": TWO_TORSION,
}


def parse_signature(text: str) -> Signature:
    """Parse `g;e1,e2,...,er;delta[;torsion=t][;theta=v]`."""
    parts = [p.strip() for p in text.strip().split(";")]
    if len(parts) < 3:
        raise ValueError(f"malformed signature {text!r}")
    genus = int(parts[0])
    mid = parts[1].strip()
    if mid in ("", "-", "—"):
        stabilizers: tuple[int, ...] = ()
    else:
        stabilizers = tuple(int(tok) for tok in re.split(r"[,\s]+", mid))
    delta = int(parts[2])
    torsion = None
    theta: int | str | None = None
    for extra in parts[3:]:
        if not extra:
            continue
        key, _, value = extra.partition("=")
        key = key.strip().lower()
        value = value.strip().lower()
        if key == "torsion":
            if value not in _TORSION_ALIASES:
                raise ValueError(f"unknown torsion class {value!r}")
            torsion = _TORSION_ALIASES[value]
        elif key == "theta":
            theta = GENERIC if value == GENERIC else int(value)
        else:
            raise ValueError(f"unknown signature field {key!r}")
    return Signature(genus, stabilizers, delta, torsion, theta)


@dataclass(frozen=True)
class QDivisor:
    """Formal sum of points with exact rational coefficients."""

    terms: tuple[tuple[PointId, Fraction], ...]
    context: Signature

    @staticmethod
    def of(mapping, context: Signature) -> "QDivisor":
        items = tuple(sorted(
            (p, Fraction(c)) for p, c in dict(mapping).items()
            if Fraction(c) != 0))
        return QDivisor(items, context)

    def coefficient(self, point: PointId) -> Fraction:
        for p, c in self.terms:
            if p == point:
                return c
        return Fraction(0)

    def degree(self) -> Fraction:
        return sum((c for _, c in self.terms), Fraction(0))

    def points(self) -> tuple[PointId, ...]:
        return tuple(p for p, _ in self.terms)

    def with_term(self, point: PointId, coefficient: Fraction,
                  context: Signature | None = None) -> "QDivisor":
        """New divisor with `coefficient` added at `point`."""
        d = {p: c for p, c in self.terms}
        d[point] = d.get(point, Fraction(0)) + Fraction(coefficient)
        return QDivisor.of(d, context or self.context)

    def as_json(self) -> list[dict]:
        return [{"point": p.label, "num": c.numerator, "den": c.denominator}
                for p, c in self.terms]

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        bits = []
        for p, c in self.terms:
            sign = "-" if c < 0 else "+"
            mag = abs(c)
            coeff = "" if mag == 1 else f"{mag}*"
            bits.append(f"{sign} {coeff}{p.label}")
        out = " ".join(bits)
        return out[2:] if out.startswith("+ ") else out


def spin_divisor(sig: Signature) -> QDivisor:
    """The log spin canonical divisor L with 2L ~ K+Delta+sum((e-1)/e)P_i.

    The integral part L_X (degree g-1+delta/2) is represented by the
    convention of the design notes: -infinity for genus 0 with delta=0,
    the torsion flag's P-Q pair for genus 1 with delta=0, and otherwise a
    sum of distinct unit-coefficient general points.
    """
    for e in sig.stabilizers:
        if e % 2 == 0:
            raise SpinParityError(
                f"stabilizer {e} is even; (e-1)/(2e) is not in Div(X)")
    if sig.log_degree % 2 != 0:
        raise LogParityError(f"log degree {sig.log_degree} is odd")

    terms: dict[PointId, Fraction] = {}
    for i, e in enumerate(sig.stabilizers, start=1):
        terms[stacky_point(i)] = Fraction(e - 1, 2 * e)

    m = sig.genus - 1 + sig.log_degree // 2
    if sig.genus == 0 and sig.log_degree == 0:
        terms[distinguished_point("inf")] = Fraction(-1)
    elif sig.genus == 1 and sig.log_degree == 0:
        if sig.torsion == TWO_TORSION:
            terms[distinguished_point("P")] = Fraction(1)
            terms[distinguished_point("Q")] = Fraction(-1)
        # trivial torsion: L_X = 0, no integral terms
    else:
        for j in range(1, m + 1):
            terms[general_point(j)] = Fraction(1)
    return QDivisor.of(terms, sig)


def deg_floor(L: QDivisor, k: int) -> int:
    """deg floor(k*L) = sum of floor(k * coefficient)."""
    return sum((k * c).__floor__() for _, c in L.terms)


def floor_divisor(L: QDivisor, k: int) -> QDivisor:
    """Coefficientwise floor of k*L (an integral divisor)."""
    return QDivisor.of(
        {p: Fraction((k * c).__floor__()) for p, c in L.terms}, L.context)
