"""Independent certification of presentations.

Standard monomials (monomials outside the initial ideal) of the
quotient are counted per weighted degree and compared with the
Riemann-Roch dimension counts.  Everything is exact integer arithmetic;
a mismatch is reported as data, never smoothed over.
"""

from __future__ import annotations

from dataclasses import dataclass

from .hilbert import hilbert_function


def minimalize(members: list[tuple[int, ...]]) -> list[tuple[int, ...]]:
    """Drop exponent tuples dominated by another member (divisible)."""
    out: list[tuple[int, ...]] = []
    for m in sorted(set(members), key=lambda t: (sum(t), t)):
        if not any(all(g[i] <= m[i] for i in range(len(m))) for g in out):
            out.append(m)
    return out


def count_standard_monomials(degrees: list[int],
                             members: list[tuple[int, ...]],
                             K: int) -> list[int]:
    """Count monomials of each weighted degree <= K avoiding all members.

    DFS over exponent vectors; a branch dies as soon as every support
    variable of some member is saturated, and once no member can still
    divide, the free tail is counted by a precomputed suffix table.
    """
    n = len(degrees)
    members = minimalize(list(members))
    # suffix[i][d] = number of monomials over vars i.. of degree exactly d
    suffix = [[0] * (K + 1) for _ in range(n + 1)]
    suffix[n][0] = 1
    for i in range(n - 1, -1, -1):
        step = degrees[i]
        row, prev = suffix[i], suffix[i + 1]
        for d in range(K + 1):
            total, dd = 0, d
            while dd >= 0:
                total += prev[dd]
                dd -= step
            row[d] = total
    last_support = [max((i for i in range(n) if m[i]), default=-1)
                    for m in members]
    counts = [0] * (K + 1)

    def dfs(i: int, used: int, active: tuple[int, ...]):
        if not active:
            tail = suffix[i]
            for j in range(K - used + 1):
                counts[used + j] += tail[j]
            return
        if i == n:  # active members would have triggered earlier
            counts[used] += 1
            return
        step = degrees[i]
        for f in range((K - used) // step + 1):
            keep = []
            dead = False
            for idx in active:
                m = members[idx]
                if m[i] > f:
                    continue
                if last_support[idx] <= i:
                    dead = True
                    break
                keep.append(idx)
            if dead:
                break  # larger f stays divisible by the same member
            dfs(i + 1, used + f * step, tuple(keep))

    dfs(0, 0, tuple(range(len(members))))
    return counts


def naive_standard_monomial_counts(degrees, members, K):
    """Full cartesian enumeration; the independent small-scale oracle."""
    from itertools import product
    counts = [0] * (K + 1)
    ranges = [range(K // d + 1) for d in degrees]
    for exps in product(*ranges):
        deg = sum(e * d for e, d in zip(exps, degrees))
        if deg > K:
            continue
        if any(all(exps[i] >= m[i] for i in range(len(m))) for m in members):
            continue
        counts[deg] += 1
    return counts


def standard_monomial_count(presentation, k: int) -> int:
    """Standard monomials of weighted degree exactly k."""
    degrees = [g.degree for g in presentation.generators]
    return count_standard_monomials(degrees, list(presentation.initial_ideal),
                                    k)[k]


@dataclass(frozen=True)
class VerificationReport:
    cutoff: int
    per_degree: tuple[tuple[int, int], ...]  # (expected, counted)
    first_mismatch: int | None

    @property
    def passed(self) -> bool:
        return self.first_mismatch is None

    def summary(self) -> str:
        status = "pass" if self.passed else \
            f"FAIL at degree {self.first_mismatch}"
        return f"verify K={self.cutoff}: {status}"


def verify_presentation(presentation, K: int) -> VerificationReport:
    expected = hilbert_function(presentation.divisor, K).dims
    degrees = [g.degree for g in presentation.generators]
    counted = count_standard_monomials(
        degrees, list(presentation.initial_ideal), K)
    pairs = tuple(zip(expected, counted))
    first = next((k for k, (e, c) in enumerate(pairs) if e != c), None)
    return VerificationReport(K, pairs, first)


def generator_necessity(presentation, K: int) -> dict[str, bool]:
    """Is each generator needed to reach the expected dimension counts?

    A generator is unnecessary if deleting it, along with every ideal
    member mentioning it, leaves all counts at or above expected; it is
    necessary if some count drops strictly below.
    """
    expected = hilbert_function(presentation.divisor, K).dims
    gens = presentation.generators
    out = {}
    for drop in range(len(gens)):
        degrees = [g.degree for i, g in enumerate(gens) if i != drop]
        members = [tuple(m[i] for i in range(len(gens)) if i != drop)
                   for m in presentation.initial_ideal
                   if m[drop] == 0]
        counts = count_standard_monomials(degrees, members, K)
        out[gens[drop].name] = any(
            counts[k] < expected[k] for k in range(K + 1))
    return out
