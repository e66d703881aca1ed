"""The inductive presentation engine.

Base cases come from a frozen catalog; three point-addition steps and
one stabilizer-raising step extend a presentation while tracking
generator degrees, pole orders and the initial ideal of relations.
Every emitted presentation is certified against the Riemann-Roch
Hilbert function by standard-monomial counting.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, replace
from fractions import Fraction

from . import catalog
from .cone import cone_primitives, u_relation_sets
from .divisor import (TRIVIAL, PointId, QDivisor, Signature, deg_floor,
                      floor_divisor, general_point, spin_divisor,
                      stacky_point)
from .hilbert import h0, saturation
from .order import (Block, GradedPLex, Grevlex, Monomial, OrderSpec, Variable,
                    VariableTable)
from .verify import minimalize, verify_presentation


class NotACatalogSignature(KeyError):
    pass


class HypothesisFailure(ArithmeticError):
    """A numerically checked dimension identity (or the final
    certificate) failed; indicates a bug or an out-of-family input."""


class PreconditionFailure(ValueError):
    pass


class NotAdmissible(ValueError):
    pass


class UnsupportedGenus(ValueError):
    """Presentations are only computed for genus 0 and 1; carries the
    degree-bounds report for the requested signature instead."""

    def __init__(self, message, bounds=None):
        super().__init__(message)
        self.bounds = bounds


@dataclass(frozen=True)
class GeneratorInfo:
    name: str
    degree: int
    pole_orders: tuple[tuple[PointId, int], ...] = ()

    def pole_order(self, point: PointId) -> int:
        for p, c in self.pole_orders:
            if p == point:
                return c
        return 0

    def as_json(self) -> dict:
        return {"name": self.name, "degree": self.degree,
                "poleOrders": {p.label: c for p, c in self.pole_orders}}


@dataclass(frozen=True)
class Presentation:
    signature: Signature
    divisor: QDivisor
    generators: tuple[GeneratorInfo, ...]
    initial_ideal: tuple[tuple[int, ...], ...]
    order: OrderSpec | None
    provenance: tuple[str, ...] = ()
    distinguished: tuple[tuple[int, str], ...] = ()
    exceptional: bool = False

    def generator_names(self) -> tuple[str, ...]:
        return tuple(g.name for g in self.generators)

    def generator(self, name: str) -> GeneratorInfo:
        for g in self.generators:
            if g.name == name:
                return g
        raise KeyError(name)

    def distinguished_map(self) -> dict[int, str]:
        return dict(self.distinguished)

    def variable_table(self) -> VariableTable:
        return VariableTable(tuple(
            Variable(g.name, g.degree, g.pole_orders)
            for g in self.generators))

    def initial_ideal_monomials(self) -> tuple[Monomial, ...]:
        table = self.variable_table()
        return tuple(Monomial(m, table) for m in self.initial_ideal)

    def member_degree(self, member: tuple[int, ...]) -> int:
        return sum(e * g.degree for e, g in zip(member, self.generators))

    def max_generator_degree(self) -> int:
        return max((g.degree for g in self.generators), default=0)


def minimal_relation_degrees(p: Presentation) -> tuple[int, ...]:
    """Degrees of the divisibility-minimal initial-ideal members."""
    members = minimalize(list(p.initial_ideal))
    return tuple(sorted(p.member_degree(m) for m in members))


def base_case(sig: Signature) -> Presentation:
    row = catalog.lookup(sig)
    if row is None:
        raise NotACatalogSignature(f"{sig} is not a catalog signature")
    return _materialize(row, sig)


def _materialize(row: dict, sig: Signature) -> Presentation:
    stabs = sig.sorted_stabilizers()
    sig_sorted = replace(sig, stabilizers=stabs)
    divisor = spin_divisor(sig_sorted)
    names = [n for n, _ in row["gens"]]
    degrees = [d for _, d in row["gens"]]
    dist = dict(row["distinguished"])
    explicit_poles = row.get("poles")
    gens = []
    for pos, (name, d) in enumerate(zip(names, degrees)):
        poles = []
        for i, e in enumerate(stabs, start=1):
            a = (e - 1) // 2
            if explicit_poles is not None:
                c = explicit_poles[pos][i - 1]
            elif dist.get(i) == name:
                c = a
            elif i in row["J"]:
                c = (d * a - 1) // e  # strictly below the slope line
            else:
                c = (d * a) // e      # generic maximal
            if c:
                poles.append((stacky_point(i), c))
        gens.append(GeneratorInfo(name, d, tuple(poles)))
    ideal = tuple(sorted(tuple(m) for m in row["ideal"]))
    order = Grevlex(tuple(names)) if names else None
    return Presentation(
        signature=sig_sorted, divisor=divisor, generators=tuple(gens),
        initial_ideal=ideal, order=order,
        provenance=(f"base:{sig_sorted}",),
        distinguished=tuple(sorted((i, n) for i, n in dist.items())),
        exceptional=row["exceptional"])


def _pad(member: tuple[int, ...], n: int) -> tuple[int, ...]:
    return member + (0,) * (n - len(member))


def _unique_name(base: str, taken: set[str]) -> str:
    name, k = base, 1
    while name in taken:
        k += 1
        name = f"{base}_{k}"
    return name


def _extend(p: Presentation, *, signature, divisor, new_gens, new_members,
            new_distinguished, order, step) -> Presentation:
    gens = p.generators + tuple(new_gens)
    n = len(gens)
    members = [_pad(m, n) for m in p.initial_ideal] + list(new_members)
    members = tuple(sorted(minimalize(members)))
    dist = p.distinguished_map()
    dist.update(new_distinguished)
    return Presentation(
        signature=signature, divisor=divisor, generators=gens,
        initial_ideal=members, order=order,
        provenance=p.provenance + (step,),
        distinguished=tuple(sorted(dist.items())),
        exceptional=False)


def _pair(n: int, i: int, j: int) -> tuple[int, ...]:
    m = [0] * n
    m[i] += 1
    m[j] += 1
    return tuple(m)


def add_point_sat1(p: Presentation, alpha: int, beta: int,
                   point: PointId) -> Presentation:
    """Adjoin (alpha/beta)*P for P away from every base point.

    New generators are the cone primitives; the relation monomials are
    the V-products against the old non-u generators plus the U-sets.
    """
    frac = Fraction(alpha, beta)
    if point in p.divisor.points():
        raise PreconditionFailure(f"{point.label} already in the divisor")
    u_idx = next((i for i, g in enumerate(p.generators)
                  if g.degree == 1 and g.pole_order(point) == 0), None)
    if u_idx is None:
        raise PreconditionFailure("no degree-1 generator u with pole order "
                                  f"0 at {point.label}")
    if any(g.pole_order(point) != 0 for g in p.generators):
        raise PreconditionFailure("an old generator has a pole at the "
                                  "new point")
    sig = p.signature
    if point.kind == "stacky":
        e = beta
        if e % 2 == 0 or alpha * 2 != e - 1:
            raise PreconditionFailure(
                f"stacky coefficient must be (e-1)/2e, got {alpha}/{beta}")
        if point.index != sig.r + 1:
            raise PreconditionFailure("stacky points must be added in "
                                      "signature order")
        new_sig = replace(sig, stabilizers=sig.stabilizers + (e,))
    else:
        if beta != 1:
            raise PreconditionFailure("non-stacky points carry integer "
                                      "coefficients")
        new_sig = replace(sig, log_degree=sig.log_degree + 2 * alpha)
    new_div = p.divisor.with_term(point, frac, new_sig)

    period = math.lcm(*(c.denominator for _, c in new_div.terms)) \
        if new_div.terms else 1
    for k in range(2 * beta + period + 1):
        if h0(new_div, k) != h0(p.divisor, k) + (k * frac).__floor__():
            raise HypothesisFailure(
                f"h0 identity fails at k={k} adding {alpha}/{beta} at "
                f"{point.label}")

    prims = cone_primitives(alpha, beta)
    taken = set(p.generator_names())
    new_gens = []
    for prim in prims:
        name = _unique_name(f"y{prim.degree}_{point.label}", taken)
        taken.add(name)
        new_gens.append(GeneratorInfo(
            name, prim.degree, ((point, prim.pole_order),)))
    n_old, n_new = len(p.generators), len(new_gens)
    n = n_old + n_new
    members = [
        _pair(n, i, n_old + j)
        for i in range(n_old) if i != u_idx
        for j in range(n_new)]
    for uset in u_relation_sets([pr.pole_order for pr in prims],
                                [pr.degree for pr in prims]):
        for mono in uset.monomials:
            members.append((0,) * n_old + _pad(mono, n_new))
    new_names = tuple(g.name for g in new_gens)
    order = Block(new_names, GradedPLex(point, new_names),
                  p.order or Grevlex(p.generator_names()))
    new_dist = {}
    if point.kind == "stacky":
        diag = next(g for g, prim in zip(new_gens, prims)
                    if (prim.degree, prim.pole_order) == (beta, alpha))
        new_dist[point.index] = diag.name
    return _extend(p, signature=new_sig, divisor=new_div, new_gens=new_gens,
                   new_members=members, new_distinguished=new_dist,
                   order=order,
                   step=f"sat1:{point.label}:{alpha}/{beta}")


def add_point_sat2(p: Presentation, point: PointId) -> Presentation:
    """Adjoin (1/3)*P at a base point P of L' (genus >= 1)."""
    sig = p.signature
    if sig.genus < 1:
        raise PreconditionFailure("sat-2 requires genus > 0")
    if sig.genus == 1 and deg_floor(p.divisor, 3) < 2:
        raise PreconditionFailure("genus 1 needs deg floor(3L') >= 2")
    if point in p.divisor.points():
        raise PreconditionFailure(f"{point.label} already in the divisor")
    F1 = floor_divisor(p.divisor, 1)  # basepoint test on the floor of L'
    F1_minus = F1.with_term(point, Fraction(-1))
    if h0(F1_minus, 1) != h0(F1, 1):
        raise PreconditionFailure(f"{point.label} is not a base point of L'")
    x2 = _designated(p, 2, point)
    x3 = _designated(p, 3, point)
    if x2 is None or x3 is None:
        raise PreconditionFailure("need degree-2 and degree-3 generators "
                                  "with pole order 0 at the new point")
    if point.kind != "stacky" or point.index != sig.r + 1:
        raise PreconditionFailure("sat-2 adds the next stacky point")
    new_sig = replace(sig, stabilizers=sig.stabilizers + (3,))
    new_div = p.divisor.with_term(point, Fraction(1, 3), new_sig)

    taken = set(p.generator_names())
    y3 = GeneratorInfo(_unique_name(f"y3_{point.label}", taken), 3,
                       ((point, 1),))
    taken.add(y3.name)
    y4 = GeneratorInfo(_unique_name(f"y4_{point.label}", taken), 4,
                       ((point, 1),))
    n_old = len(p.generators)
    n = n_old + 2
    i3, i4 = n_old, n_old + 1
    members = [_pair(n, i, i4) for i in range(n_old)]
    members.append(tuple(2 if i == i4 else 0 for i in range(n)))
    keep = {x2, x3}
    members += [_pair(n, i, i3) for i in range(n_old) if i not in keep]
    sq = [0] * n
    sq[x3], sq[i3] = 2, 1
    members.append(tuple(sq))
    order = Block((y3.name, y4.name), Grevlex((y3.name, y4.name)),
                  p.order or Grevlex(p.generator_names()))
    return _extend(p, signature=new_sig, divisor=new_div,
                   new_gens=[y3, y4], new_members=members,
                   new_distinguished={point.index: y3.name}, order=order,
                   step=f"sat2:{point.label}")


def add_point_sat3(p: Presentation, point: PointId) -> Presentation:
    """Adjoin (1/3)*P when the effective monoid saturates at 3 (genus 0)."""
    sig = p.signature
    if sig.genus != 0:
        raise PreconditionFailure("sat-3 requires genus 0")
    if saturation(p.divisor) != 3:
        raise PreconditionFailure("sat-3 requires saturation exactly 3")
    if point in p.divisor.points():
        raise PreconditionFailure(f"{point.label} already in the divisor")
    xs = {d: _designated(p, d, point) for d in (3, 4, 5)}
    if any(v is None for v in xs.values()):
        raise PreconditionFailure("need generators of degrees 3, 4, 5 with "
                                  "pole order 0 at the new point")
    if point.kind != "stacky" or point.index != sig.r + 1:
        raise PreconditionFailure("sat-3 adds the next stacky point")
    new_sig = replace(sig, stabilizers=sig.stabilizers + (3,))
    new_div = p.divisor.with_term(point, Fraction(1, 3), new_sig)

    taken = set(p.generator_names())
    ys = []
    for d in (3, 4, 5):
        g = GeneratorInfo(_unique_name(f"y{d}_{point.label}", taken), d,
                          ((point, 1),))
        taken.add(g.name)
        ys.append(g)
    n_old = len(p.generators)
    n = n_old + 3
    i3, i4, i5 = n_old, n_old + 1, n_old + 2
    members = [_pair(n, i, j) for j in (i4, i5) for i in range(n_old)]
    members += [_pair(n, i4, i4), _pair(n, i4, i5), _pair(n, i5, i5)]
    keep = {xs[3], xs[4], xs[5]}
    members += [_pair(n, i, i3) for i in range(n_old) if i not in keep]
    for a, b in ((xs[4], xs[4]), (xs[4], xs[5]), (xs[5], xs[5])):
        m = [0] * n
        m[a] += 1
        m[b] += 1
        m[i3] += 1
        members.append(tuple(m))
    names = tuple(g.name for g in ys)
    order = Block(names, Grevlex(names),
                  p.order or Grevlex(p.generator_names()))
    return _extend(p, signature=new_sig, divisor=new_div, new_gens=ys,
                   new_members=members,
                   new_distinguished={point.index: ys[0].name}, order=order,
                   step=f"sat3:{point.label}")


def _designated(p: Presentation, degree: int, point: PointId) -> int | None:
    for i, g in enumerate(p.generators):
        if g.degree == degree and g.pole_order(point) == 0:
            return i
    return None


@dataclass(frozen=True)
class AdmissibilityIndexReport:
    index: int
    ad_i: bool
    ad_ii: bool
    ad_iii: bool
    witness: str | None
    deg_floor_eL: int
    max_s: int

    @property
    def admissible(self) -> bool:
        return self.ad_i and self.ad_ii and self.ad_iii


@dataclass(frozen=True)
class AdmissibilityReport:
    J: tuple[int, ...]
    per_index: tuple[AdmissibilityIndexReport, ...]

    @property
    def overall(self) -> bool:
        return all(r.admissible for r in self.per_index)


def check_admissible(p: Presentation, J) -> AdmissibilityReport:
    """Conditions (Ad-i)-(Ad-iii) for raising the orders at J by two.

    (Ad-iii) follows the paper's worked example and printed table: the
    floor degree is taken for the raised divisor at level e_i = e_i'+2.
    """
    sig = p.signature
    stabs = sig.sorted_stabilizers()
    J = tuple(sorted(J))
    dist = p.distinguished_map()
    raised = {i: Fraction(stabs[i - 1] + 1, 2 * (stabs[i - 1] + 2))
              for i in J}
    L_new = QDivisor.of(
        {**{q: c for q, c in p.divisor.terms},
         **{stacky_point(i): raised[i] for i in J}}, sig)
    reports = []
    for i in J:
        e_old = stabs[i - 1]
        e_new = e_old + 2
        Q = stacky_point(i)
        slope = Fraction(e_old - 1, 2 * e_old)
        witness = dist.get(i)
        if witness is None:
            witness = next(
                (g.name for g in p.generators
                 if g.degree == e_old
                 and g.pole_order(Q) == (e_old - 1) // 2), None)
        ad_i = False
        if witness is not None:
            w = p.generator(witness)
            ad_i = (w.degree == e_old
                    and w.pole_order(Q) == (e_old - 1) // 2)
        ad_ii = all(
            Fraction(g.pole_order(Q), g.degree) < slope
            for g in p.generators if g.name != witness)
        diffs = [e_new - stabs[j - 1] for j in J if j != i]
        zero_always = sum(1 for d in diffs if d == 0)
        kmax = max((abs(d) for d in diffs), default=0)
        max_s = 0
        for k in range(kmax + 1):
            cnt = zero_always
            for j in J:
                if j == i:
                    continue
                d = e_new - stabs[j - 1]
                if d != 0 and d % (stabs[j - 1] + 2 * k) == 0:
                    cnt += 1
            max_s = max(max_s, cnt)
        dfl = deg_floor(L_new, e_new)
        ad_iii = dfl >= max(2 * sig.genus - 1, 0) + max_s
        reports.append(AdmissibilityIndexReport(
            i, ad_i, ad_ii, ad_iii, witness, dfl, max_s))
    return AdmissibilityReport(J, tuple(reports))


def all_three_configuration(p: Presentation) -> bool:
    """The Remark's escape hatch: all stabilizers equal 3 and the count
    is large enough for the genus (5 / 2 / 1 for genus 0 / 1 / >=2)."""
    sig = p.signature
    es = sig.stabilizers
    if not es or any(e != 3 for e in es):
        return False
    if sig.genus == 0:
        return sig.log_degree == 0 and len(es) >= 5
    if sig.genus == 1:
        return sig.log_degree == 0 and len(es) >= 2
    return True


def raise_orders(p: Presentation, J) -> Presentation:
    """Increment e_i by 2 for i in J, adding one generator per index."""
    J = tuple(sorted(set(J)))
    if not J:
        return p
    sig = p.signature
    stabs = list(sig.sorted_stabilizers())
    if any(i < 1 or i > len(stabs) for i in J):
        raise NotAdmissible(f"J={J} outside stacky index range")
    if not all_three_configuration(p):
        report = check_admissible(p, J)
        if not report.overall:
            raise NotAdmissible(f"(p, J={J}) fails admissibility: {report}")
    dist = p.distinguished_map()
    if any(i not in dist for i in J):
        raise NotAdmissible("no distinguished generator recorded for some "
                            f"index in J={J}")
    old_e = {i: stabs[i - 1] for i in J}
    for i in J:
        stabs[i - 1] += 2
    new_sig = replace(sig, stabilizers=tuple(stabs))
    new_div = QDivisor.of(
        {**{q: c for q, c in p.divisor.terms},
         **{stacky_point(i): Fraction(stabs[i - 1] - 1, 2 * stabs[i - 1])
            for i in J}}, new_sig)

    taken = set(p.generator_names())
    new_gens: dict[int, GeneratorInfo] = {}
    for i in J:
        e_new = old_e[i] + 2
        poles = [(stacky_point(i), (e_new - 1) // 2)]
        for j, e_j in enumerate(p.signature.sorted_stabilizers(), start=1):
            if j == i:
                continue
            if j in J:
                c = (e_new * (e_j - 1) - 2) // (2 * e_j)
            else:
                c = (e_new * (e_j - 1)) // (2 * e_j)
            if c:
                poles.append((stacky_point(j), c))
        name = _unique_name(f"y{e_new}_P{i}", taken)
        taken.add(name)
        new_gens[i] = GeneratorInfo(name, e_new, tuple(sorted(poles)))

    n_old = len(p.generators)
    order_of = {g.name: k for k, g in enumerate(p.generators)}
    for k, i in enumerate(J):
        order_of[new_gens[i].name] = n_old + k
    n = n_old + len(J)
    members = []
    seen = set()
    for i in J:
        yi = order_of[new_gens[i].name]
        excluded = {yi, order_of[dist[i]]}
        for z in range(n):
            if z in excluded:
                continue
            m = _pair(n, yi, z)
            if m not in seen:
                seen.add(m)
                members.append(m)
    new_names = tuple(new_gens[i].name for i in J)
    order = Block(new_names, Grevlex(new_names),
                  p.order or Grevlex(p.generator_names()))
    result = _extend(
        p, signature=new_sig, divisor=new_div,
        new_gens=[new_gens[i] for i in J], new_members=members,
        new_distinguished={i: new_gens[i].name for i in J}, order=order,
        step=f"raise:J={{{','.join(map(str, J))}}}")
    after = check_admissible(result, J)
    if not after.overall:
        raise NotAdmissible(
            f"internal: raised state fails part (d) for J={J}: {after}")
    return result


def _trivial_presentation(sig: Signature, gens=()) -> Presentation:
    return Presentation(
        signature=sig, divisor=spin_divisor(sig), generators=tuple(gens),
        initial_ideal=(), order=Grevlex(tuple(g.name for g in gens)) if gens
        else None,
        provenance=(f"trivial:{sig}",))


def _certify(p: Presentation) -> Presentation:
    K = max(30, 3 * p.max_generator_degree())
    report = verify_presentation(p, K)
    if not report.passed:
        raise HypothesisFailure(
            f"certificate mismatch for {p.signature} at degree "
            f"{report.first_mismatch}")
    return p


def _effective_chain(sig: Signature) -> Presentation:
    """delta >= 2 routing: seed, log points, then stacky points."""
    g = sig.genus
    delta = sig.log_degree
    seed_sig = Signature(g, (), 2)
    p = base_case(seed_sig)
    n_general = len([q for q in p.divisor.points() if q.kind == "general"])
    for extra in range(delta // 2 - 1):
        p = add_point_sat1(p, 1, 1, general_point(n_general + extra + 1))
    for i, e in enumerate(sig.sorted_stabilizers(), start=1):
        p = add_point_sat1(p, (e - 1) // 2, e, stacky_point(i))
    return p


def _backward_blocks(stabs: tuple[int, ...], stop) -> tuple[list, tuple]:
    """Decrement trailing maximal blocks until `stop` accepts the state.

    Returns the raise steps (to replay forward, outermost last) and the
    final base stabilizer tuple.
    """
    cur = list(stabs)
    steps = []
    while not stop(tuple(cur)):
        M = max(cur)
        if M <= 3:
            raise NotACatalogSignature(
                f"no base case reachable from {stabs}")
        J = tuple(i + 1 for i, e in enumerate(cur) if e == M)
        for i in J:
            cur[i - 1] = M - 2
        steps.append(J)
    return steps[::-1], tuple(cur)


def _route_genus0_delta0(sig: Signature) -> Presentation:
    stabs = sig.sorted_stabilizers()
    r = len(stabs)
    if r < 3:
        return _trivial_presentation(replace(sig, stabilizers=stabs))

    def stop(t):
        return catalog.lookup(replace(sig, stabilizers=t)) is not None \
            or all(e == 3 for e in t)

    steps, base_stabs = _backward_blocks(stabs, stop)
    base_sig = replace(sig, stabilizers=base_stabs)
    if catalog.lookup(base_sig) is not None:
        p = base_case(base_sig)
    else:
        # all-3 with r >= 6: grow case (k) by saturation-3 additions
        p = base_case(Signature(0, (3,) * 5, 0))
        for i in range(6, r + 1):
            p = add_point_sat3(p, stacky_point(i))
    for J in steps:
        target = {i: stabs[i - 1] for i in J}
        while any(p.signature.sorted_stabilizers()[i - 1] < target[i]
                  for i in J):
            p = raise_orders(p, J)
    return p


def _route_genus1_delta0(sig: Signature) -> Presentation:
    stabs = sig.sorted_stabilizers()
    r = len(stabs)
    sig = replace(sig, stabilizers=stabs)
    if catalog.lookup(sig) is not None and r <= 1:
        return base_case(sig)

    def stop(t):
        return catalog.lookup(replace(sig, stabilizers=t)) is not None \
            or all(e == 3 for e in t)

    steps, base_stabs = _backward_blocks(stabs, stop)
    base_sig = replace(sig, stabilizers=base_stabs)
    if catalog.lookup(base_sig) is not None:
        p = base_case(base_sig)
    elif sig.torsion == TRIVIAL:
        p = base_case(replace(sig, stabilizers=(3, 3, 3)))
        for i in range(4, r + 1):
            p = add_point_sat1(p, 1, 3, stacky_point(i))
    else:
        p = base_case(replace(sig, stabilizers=(3, 3)))
        for i in range(3, r + 1):
            p = add_point_sat2(p, stacky_point(i))
    for J in steps:
        target = {i: stabs[i - 1] for i in J}
        while any(p.signature.sorted_stabilizers()[i - 1] < target[i]
                  for i in J):
            p = raise_orders(p, J)
    return p


def present(sig: Signature) -> Presentation:
    """Verified presentation for a genus-0 or genus-1 signature."""
    spin_divisor(sig)  # parity validation
    sorted_sig = replace(sig, stabilizers=sig.sorted_stabilizers())
    if sig.genus >= 2:
        from .bounds import degree_bounds
        raise UnsupportedGenus(
            f"genus {sig.genus} presentations are not computed; "
            "degree bounds attached", bounds=degree_bounds(sig))
    if catalog.is_exceptional_key(sorted_sig):
        p = base_case(sorted_sig)
        return _certify(p)
    if sig.log_degree >= 2:
        p = _effective_chain(sorted_sig)
    elif sig.genus == 0:
        p = _route_genus0_delta0(sorted_sig)
    else:
        p = _route_genus1_delta0(sorted_sig)
    return _certify(p)
