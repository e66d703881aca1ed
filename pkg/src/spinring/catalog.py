"""Frozen base-case and exceptional-case catalog.

Each row records generator names/degrees, the initial ideal (exponent
tuples over the generators in catalog order), the distinguished
generator per stacky index (the one realizing the maximal pole order
used by stabilizer raising), and table metadata.  Pole orders follow a
fixed rule (maximal off the raising set, strictly sub-maximal on it)
unless given explicitly; rows flagged `internal` support the routing
but belong to no printed table.
"""

from __future__ import annotations

from .divisor import TRIVIAL, TWO_TORSION, Signature

# genus-0 rows: pole orders by rule from J + distinguished.
# genus-1 rows: explicit pole tuples (one entry per stacky point).

ROWS: list[dict] = [
    # ---- genus 0, delta = 0: base cases (a)-(k) ----
    dict(key=(0, (3, 3, 11), 0, None), label="g0-base-a",
         gens=(("x3", 3), ("x7", 7), ("x9", 9), ("x11", 11)),
         ideal=((0, 2, 0, 0), (0, 0, 2, 0)),
         distinguished={3: "x11"}, J=(3,), e=11,
         base=True, exceptional=False),
    dict(key=(0, (3, 5, 9), 0, None), label="g0-base-b",
         gens=(("x3", 3), ("x5", 5), ("x7", 7), ("x9", 9)),
         ideal=((0, 1, 1, 0), (0, 0, 2, 0)),
         distinguished={3: "x9"}, J=(3,), e=9,
         base=True, exceptional=False),
    dict(key=(0, (3, 7, 7), 0, None), label="g0-base-c",
         gens=(("x3", 3), ("x5", 5), ("x7_1", 7), ("x7_2", 7)),
         ideal=((0, 2, 0, 0), (0, 0, 1, 1)),
         distinguished={2: "x7_1", 3: "x7_2"}, J=(2, 3), e=7,
         base=True, exceptional=False),
    dict(key=(0, (5, 5, 7), 0, None), label="g0-base-d",
         gens=(("x3", 3), ("x5_1", 5), ("x5_2", 5), ("x7", 7)),
         ideal=((0, 0, 2, 0), (0, 1, 0, 1)),
         distinguished={3: "x7"}, J=(3,), e=7,
         base=True, exceptional=False),
    dict(key=(0, (5, 7, 7), 0, None), label="g0-base-e",
         gens=(("x3", 3), ("x5_1", 5), ("x5_2", 5),
               ("x7_1", 7), ("x7_2", 7)),
         ideal=((0, 0, 0, 1, 1), (0, 0, 2, 0, 0), (0, 1, 0, 0, 1),
                (0, 1, 0, 1, 0), (0, 1, 1, 0, 0)),
         distinguished={2: "x7_1", 3: "x7_2"}, J=(2, 3), e=7,
         base=True, exceptional=False),
    dict(key=(0, (7, 7, 7), 0, None), label="g0-base-f",
         gens=(("x3", 3), ("x5_1", 5), ("x5_2", 5),
               ("x7_1", 7), ("x7_2", 7), ("x7_3", 7)),
         ideal=((0, 0, 0, 0, 1, 1), (0, 0, 0, 1, 0, 1), (0, 0, 0, 1, 1, 0),
                (0, 0, 1, 0, 0, 1), (0, 0, 1, 0, 1, 0), (0, 0, 1, 1, 0, 0),
                (0, 0, 2, 0, 0, 0), (0, 1, 1, 0, 0, 0), (0, 2, 0, 0, 0, 0)),
         distinguished={1: "x7_1", 2: "x7_2", 3: "x7_3"}, J=(1, 2, 3), e=7,
         base=True, exceptional=False),
    dict(key=(0, (3, 3, 3, 5), 0, None), label="g0-base-g",
         gens=(("x3_1", 3), ("x3_2", 3), ("x4", 4), ("x5", 5)),
         ideal=((0, 0, 2, 0), (0, 3, 0, 0)),
         distinguished={4: "x5"}, J=(4,), e=5,
         base=True, exceptional=False),
    dict(key=(0, (3, 3, 5, 5), 0, None), label="g0-base-h",
         gens=(("x3_1", 3), ("x3_2", 3), ("x4", 4),
               ("x5_1", 5), ("x5_2", 5)),
         ideal=((0, 0, 0, 1, 1), (0, 0, 1, 0, 1), (0, 0, 2, 0, 0),
                (0, 1, 0, 0, 1), (0, 3, 0, 0, 0)),
         distinguished={3: "x5_1", 4: "x5_2"}, J=(3, 4), e=5,
         base=True, exceptional=False),
    dict(key=(0, (3, 5, 5, 5), 0, None), label="g0-base-i",
         gens=(("x3_1", 3), ("x3_2", 3), ("x4", 4),
               ("x5_1", 5), ("x5_2", 5), ("x5_3", 5)),
         ideal=((0, 0, 0, 0, 1, 1), (0, 0, 0, 1, 0, 1), (0, 0, 0, 1, 1, 0),
                (0, 0, 1, 0, 0, 1), (0, 0, 1, 0, 1, 0), (0, 0, 2, 0, 0, 0),
                (0, 1, 0, 0, 0, 1), (0, 1, 0, 0, 1, 0), (0, 3, 0, 0, 0, 0)),
         distinguished={2: "x5_1", 3: "x5_2", 4: "x5_3"}, J=(2, 3, 4), e=5,
         base=True, exceptional=False),
    dict(key=(0, (5, 5, 5, 5), 0, None), label="g0-base-j",
         gens=(("x3_1", 3), ("x3_2", 3), ("x4", 4),
               ("x5_1", 5), ("x5_2", 5), ("x5_3", 5), ("x5_4", 5)),
         ideal=((0, 0, 0, 0, 0, 1, 1), (0, 0, 0, 0, 1, 0, 1),
                (0, 0, 0, 0, 1, 1, 0), (0, 0, 0, 1, 0, 0, 1),
                (0, 0, 0, 1, 0, 1, 0), (0, 0, 0, 1, 1, 0, 0),
                (0, 0, 1, 0, 0, 0, 1), (0, 0, 1, 0, 0, 1, 0),
                (0, 0, 1, 0, 1, 0, 0), (0, 0, 2, 0, 0, 0, 0),
                (0, 1, 0, 0, 0, 0, 1), (0, 1, 0, 0, 0, 1, 0),
                (0, 1, 0, 0, 1, 0, 0), (0, 3, 0, 0, 0, 0, 0)),
         distinguished={1: "x5_1", 2: "x5_2", 3: "x5_3", 4: "x5_4"},
         J=(1, 2, 3, 4), e=5, base=True, exceptional=False),
    dict(key=(0, (3, 3, 3, 3, 3), 0, None), label="g0-base-k",
         gens=(("x3_1", 3), ("x3_2", 3), ("x3_3", 3),
               ("x4_1", 4), ("x4_2", 4), ("x5", 5)),
         ideal=((0, 0, 2, 0, 0, 0), (0, 0, 1, 1, 0, 0), (0, 0, 1, 0, 1, 0),
                (0, 0, 0, 2, 0, 0), (0, 0, 0, 1, 1, 0), (0, 0, 0, 0, 2, 0),
                (0, 0, 0, 1, 0, 1), (0, 0, 0, 0, 1, 1), (0, 0, 0, 0, 0, 2)),
         distinguished={i: "x3_1" for i in range(1, 6)},
         J=(1, 2, 3, 4, 5), e=5,
         poles=[(1, 1, 1, 1, 1)] * 6,
         base=True, exceptional=False),
    # ---- genus 0 exceptional rows ----
    dict(key=(0, (3, 3, 3), 0, None), label="g0-exc-333",
         gens=(("x3", 3),), ideal=(),
         distinguished={}, J=(), e=5, base=False, exceptional=True),
    dict(key=(0, (3, 3, 5), 0, None), label="g0-exc-335",
         gens=(("x3", 3), ("x10", 10), ("x15", 15)),
         ideal=((0, 0, 2),),
         distinguished={}, J=(), e=5, base=False, exceptional=True),
    dict(key=(0, (3, 3, 7), 0, None), label="g0-exc-337",
         gens=(("x3", 3), ("x7", 7), ("x12", 12)),
         ideal=((0, 0, 2),),
         distinguished={}, J=(), e=7, base=False, exceptional=True),
    dict(key=(0, (3, 3, 9), 0, None), label="g0-exc-339",
         gens=(("x3", 3), ("x7", 7), ("x9", 9)),
         ideal=((0, 3, 0),),
         distinguished={}, J=(), e=9, base=False, exceptional=True),
    dict(key=(0, (3, 5, 5), 0, None), label="g0-exc-355",
         gens=(("x3", 3), ("x5", 5), ("x10", 10)),
         ideal=((0, 0, 2),),
         distinguished={}, J=(), e=5, base=False, exceptional=True),
    dict(key=(0, (3, 5, 7), 0, None), label="g0-exc-357",
         gens=(("x3", 3), ("x5", 5), ("x7", 7)),
         ideal=((0, 2, 1),),
         distinguished={}, J=(), e=7, base=False, exceptional=True),
    dict(key=(0, (5, 5, 5), 0, None), label="g0-exc-555",
         gens=(("x3", 3), ("x5_1", 5), ("x5_2", 5)),
         ideal=((0, 0, 3),),
         distinguished={}, J=(), e=5, base=False, exceptional=True),
    dict(key=(0, (3, 3, 3, 3), 0, None), label="g0-exc-3333",
         gens=(("x3_1", 3), ("x3_2", 3), ("x4", 4)),
         ideal=((0, 0, 3),),
         distinguished={}, J=(), e=5, base=False, exceptional=True),
    # ---- genus 1, delta = 0, trivial torsion ----
    dict(key=(1, (), 0, TRIVIAL), label="g1-base-0",
         gens=(("u", 1),), ideal=(),
         distinguished={}, J=(), e=1, poles=[()],
         base=True, exceptional=False),
    dict(key=(1, (7,), 0, TRIVIAL), label="g1-base-37",
         gens=(("u", 1), ("x5", 5), ("x7", 7)),
         ideal=((0, 3, 0),),
         distinguished={1: "x7"}, J=(1,), e=7,
         poles=[(0,), (2,), (3,)],
         base=True, exceptional=True),
    # The printed row for 1/3 P1 + 1/3 P2 ({1,3,3}/{6}) is inconsistent
    # with its own Hilbert function h^0 = 1,1,1,2,2,2,4,...; the ring is
    # k[u, f, g]/(deg-12 relation) with deg g = 6.
    dict(key=(1, (3, 3), 0, TRIVIAL), label="g1-base-33",
         gens=(("u", 1), ("f", 3), ("g", 6)),
         ideal=((0, 0, 2),),
         distinguished={1: "f", 2: "f"}, J=(1, 2), e=5,
         poles=[(0, 0), (1, 1), (2, 2)],
         base=True, exceptional=False),
    dict(key=(1, (3, 3, 3), 0, TRIVIAL), label="g1-int-333",
         gens=(("u", 1), ("h1", 3), ("h2", 3)),
         ideal=((0, 0, 3),),
         distinguished={1: "h1", 2: "h1", 3: "h1"}, J=(1, 2, 3), e=5,
         poles=[(0, 0, 0), (1, 1, 1), (1, 1, 1)],
         base=True, exceptional=False, internal=True),
    dict(key=(1, (5, 5), 0, TRIVIAL), label="g1-int-55",
         gens=(("u", 1), ("f", 3), ("a5", 5), ("b5", 5)),
         ideal=((0, 2, 0, 0), (0, 0, 1, 1)),
         distinguished={1: "a5", 2: "b5"}, J=(1, 2), e=5,
         poles=[(0, 0), (1, 1), (2, 1), (1, 2)],
         base=True, exceptional=False, internal=True),
    dict(key=(1, (3,), 0, TRIVIAL), label="g1-exc-13",
         gens=(("u", 1), ("x6", 6), ("y9", 9)),
         ideal=((0, 0, 2),),
         distinguished={}, J=(), e=5,
         poles=[(0,), (2,), (3,)],
         base=False, exceptional=True),
    dict(key=(1, (5,), 0, TRIVIAL), label="g1-exc-25",
         gens=(("u", 1), ("x5", 5), ("y8", 8)),
         ideal=((0, 0, 2),),
         distinguished={}, J=(), e=5,
         poles=[(0,), (2,), (3,)],
         base=False, exceptional=True),
    # ---- genus 1, delta = 0, two-torsion ----
    dict(key=(1, (), 0, TWO_TORSION), label="g1-exc-pq",
         gens=(("u", 2),), ideal=(),
         distinguished={}, J=(), e=1, poles=[()],
         base=False, exceptional=True),
    dict(key=(1, (3,), 0, TWO_TORSION), label="g1-exc-pq3",
         gens=(("u", 2), ("y3", 3), ("y7", 7)),
         ideal=((0, 0, 2),),
         distinguished={1: "y3"}, J=(), e=5,
         poles=[(0,), (1,), (2,)],
         base=False, exceptional=True),
    dict(key=(1, (5,), 0, TWO_TORSION), label="g1-base-pq5",
         gens=(("u", 2), ("y3", 3), ("y5", 5)),
         ideal=((0, 4, 0),),
         distinguished={1: "y5"}, J=(1,), e=5,
         poles=[(0,), (1,), (2,)],
         base=True, exceptional=True),
    dict(key=(1, (3, 3), 0, TWO_TORSION), label="g1-base-pq33",
         gens=(("u", 2), ("x3", 3), ("y3", 3), ("y4", 4)),
         ideal=((0, 1, 1, 0), (0, 0, 0, 2)),
         distinguished={1: "x3", 2: "y3"}, J=(1, 2), e=5,
         poles=[(0, 0), (1, 0), (0, 1), (1, 1)],
         base=True, exceptional=False),
    # ---- effective seeds ----
    dict(key=(0, (), 2, None), label="seed-g0",
         gens=(("u", 1),), ideal=(),
         distinguished={}, J=(), e=1, poles=[()],
         base=False, exceptional=False, internal=True),
    dict(key=(1, (), 2, None), label="seed-weierstrass",
         gens=(("u", 1), ("x2", 2), ("y3", 3)),
         ideal=((0, 0, 2),),
         distinguished={}, J=(), e=1, poles=[(), (), ()],
         base=False, exceptional=False, internal=True),
]

_BY_KEY = {row["key"]: row for row in ROWS}

# Printed relation-degree multisets for the paper tables; rows are
# identified by label.  (g1-base-33 carries the corrected values.)
PRINTED_RELATIONS = {
    "g0-base-a": (14, 18), "g0-base-b": (12, 14), "g0-base-c": (10, 14),
    "g0-base-d": (10, 12), "g0-base-e": (10, 10, 12, 12, 14),
    "g0-base-f": (10, 10, 10, 12, 12, 12, 14, 14, 14),
    "g0-base-g": (8, 9), "g0-base-h": (8, 8, 9, 9, 10),
    "g0-base-i": (8, 8, 8, 9, 9, 9, 10, 10, 10),
    "g0-base-j": (8, 8, 8, 8, 9, 9, 9, 9, 10, 10, 10, 10, 10, 10),
    "g0-base-k": (6, 7, 7, 8, 8, 8, 9, 9, 10),
    "g0-exc-333": (), "g0-exc-335": (30,), "g0-exc-337": (24,),
    "g0-exc-339": (21,), "g0-exc-355": (20,), "g0-exc-357": (17,),
    "g0-exc-555": (15,), "g0-exc-3333": (12,),
    "g1-base-0": (), "g1-base-37": (15,), "g1-base-33": (12,),
    "g1-base-pq5": (12,), "g1-base-pq33": (6, 8),
    "g1-exc-13": (18,), "g1-exc-25": (16,),
    "g1-exc-pq": (), "g1-exc-pq3": (14,),
}


def key_of(sig: Signature):
    return (sig.genus, sig.sorted_stabilizers(), sig.log_degree, sig.torsion)


def lookup(sig: Signature) -> dict | None:
    return _BY_KEY.get(key_of(sig))


def is_exceptional_key(sig: Signature) -> bool:
    row = lookup(sig)
    return bool(row and row["exceptional"])


def exceptional_row(sig: Signature) -> dict | None:
    row = lookup(sig)
    return row if row and row["exceptional"] else None


def base_rows(genus: int) -> list[dict]:
    return [r for r in ROWS
            if r["key"][0] == genus and r["base"]
            and not r.get("internal", False)]


def exceptional_rows(genus: int) -> list[dict]:
    return [r for r in ROWS if r["key"][0] == genus and r["exceptional"]]


def row_generator_degrees(row: dict) -> tuple[int, ...]:
    return tuple(sorted(d for _, d in row["gens"]))


def row_relation_degrees(row: dict) -> tuple[int, ...]:
    degs = [d for _, d in row["gens"]]
    return tuple(sorted(sum(e * d for e, d in zip(m, degs))
                        for m in row["ideal"]))
