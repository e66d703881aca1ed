"""Weighted monomials and the three term orders.

Comparisons are degree-first; grevlex breaks ties at the largest
differing position of the given variable order (smaller exponent there
wins), graded P-lex inserts a pole-order comparison before that
tie-break, and the block order compares a designated variable block
before the rest.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .divisor import PointId

LESS, EQUAL, GREATER = -1, 0, 1


@dataclass(frozen=True)
class Variable:
    name: str
    degree: int
    pole_orders: tuple[tuple[PointId, int], ...] = ()

    def pole_order(self, point: PointId) -> int:
        for p, c in self.pole_orders:
            if p == point:
                return c
        return 0


@dataclass(frozen=True)
class VariableTable:
    variables: tuple[Variable, ...]

    def __post_init__(self):
        names = [v.name for v in self.variables]
        if len(set(names)) != len(names):
            raise ValueError("variable names must be unique")
        if any(v.degree < 1 for v in self.variables):
            raise ValueError("variable degrees must be >= 1")

    def __len__(self) -> int:
        return len(self.variables)

    def index(self, name: str) -> int:
        for i, v in enumerate(self.variables):
            if v.name == name:
                return i
        raise KeyError(name)

    def monomial(self, exponents: Sequence[int]) -> "Monomial":
        return Monomial(tuple(exponents), self)


@dataclass(frozen=True)
class Monomial:
    exponents: tuple[int, ...]
    table: VariableTable

    def __post_init__(self):
        if len(self.exponents) != len(self.table):
            raise ValueError("exponent tuple does not match table")
        if any(e < 0 for e in self.exponents):
            raise ValueError("exponents must be nonnegative")

    def __str__(self) -> str:
        bits = []
        for v, e in zip(self.table.variables, self.exponents):
            if e == 1:
                bits.append(v.name)
            elif e > 1:
                bits.append(f"{v.name}^{e}")
        return "*".join(bits) if bits else "1"


def degree(m: Monomial) -> int:
    return sum(v.degree * e for v, e in zip(m.table.variables, m.exponents))


def pole_order(m: Monomial, point: PointId) -> int:
    """Pole order of a product: exponent-weighted sum over the variables."""
    return sum(v.pole_order(point) * e
               for v, e in zip(m.table.variables, m.exponents))


@dataclass(frozen=True)
class Grevlex:
    variable_order: tuple[str, ...]

    def render(self) -> str:
        return f"grevlex({'<'.join(self.variable_order)})"


@dataclass(frozen=True)
class GradedPLex:
    point: PointId
    variable_order: tuple[str, ...]

    def render(self) -> str:
        return f"plex({self.point.label}; {'<'.join(self.variable_order)})"


@dataclass(frozen=True)
class Block:
    outer_vars: tuple[str, ...]
    inner_spec: "OrderSpec"
    outer_spec: "OrderSpec"

    def render(self) -> str:
        return (f"block([{','.join(self.outer_vars)}]: "
                f"{self.inner_spec.render()} | {self.outer_spec.render()})")


OrderSpec = Grevlex | GradedPLex | Block


def _revlex_tail(a: Monomial, b: Monomial, names: Sequence[str]) -> int:
    """At the largest differing position the smaller exponent wins."""
    for name in reversed(names):
        i = a.table.index(name)
        ea, eb = a.exponents[i], b.exponents[i]
        if ea != eb:
            return GREATER if ea < eb else LESS
    return EQUAL


def _restrict(m: Monomial, names: set[str]) -> Monomial:
    exps = tuple(e if v.name in names else 0
                 for v, e in zip(m.table.variables, m.exponents))
    return Monomial(exps, m.table)


def compare(a: Monomial, b: Monomial, spec: OrderSpec) -> int:
    """Total-order comparison; returns LESS (-1), EQUAL (0) or GREATER (1)."""
    if a.table is not b.table and a.table != b.table:
        raise ValueError("monomials over different variable tables")
    da, db = degree(a), degree(b)
    if da != db:
        return GREATER if da > db else LESS
    if isinstance(spec, Grevlex):
        return _revlex_tail(a, b, spec.variable_order)
    if isinstance(spec, GradedPLex):
        pa, pb = pole_order(a, spec.point), pole_order(b, spec.point)
        if pa != pb:
            return GREATER if pa > pb else LESS
        return _revlex_tail(a, b, spec.variable_order)
    if isinstance(spec, Block):
        names = set(spec.outer_vars)
        ay, by = _restrict(a, names), _restrict(b, names)
        c = compare(ay, by, spec.inner_spec)
        if c != EQUAL:
            return c
        ax = _restrict(a, {v.name for v in a.table.variables} - names)
        bx = _restrict(b, {v.name for v in b.table.variables} - names)
        return compare(ax, bx, spec.outer_spec)
    raise TypeError(f"unknown order spec {spec!r}")
