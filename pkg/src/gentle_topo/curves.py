"""Closed curves on a surface model: windings, intersections, homology.

Two encodings are used.

``DualWalk``
    A closed curve transverse to the arcs, cut into chords.  A chord lives
    in one polygon and runs from the side at position ``entry`` to the side
    at position ``exit``.  Consecutive chords are glued across an arc: the
    exit side of one chord and the entry side of the next are the two
    sides of the same arc.

``EdgeCycle``
    A closed walk along arcs through marked points; each step is
    ``(arc, direction)`` with direction +1 meaning end 0 to end 1.

Positions inside a polygon run 0..m-1 along its forbidden thread; the
boundary segment sits after position m-1 and before position 0.  The
winding of a chord from position i to j (i < j) is ``1 - (j-i) + sum of the
degrees of the angles passed``; travelling the other way negates it.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from math import gcd
from typing import Iterable, NamedTuple, Sequence

from sympy import Matrix, ZZ
from sympy.matrices.normalforms import smith_normal_decomp

from .errors import (
    GenusOutOfRange,
    InconsistentWalk,
    IndexOutOfRange,
    InternalInconsistency,
    NotEmbedded,
    SymplecticBasisNotFound,
)
from .surface import L, R, ArcEnd, Side, SurfaceModel

__all__ = [
    "Chord",
    "DualWalk",
    "EdgeCycle",
    "HomologyBasis",
    "Curve",
    "SymplecticCurveBasis",
    "chord_winding",
    "winding_of_dual_walk",
    "reverse_walk",
    "boundary_walk",
    "check_cycle",
    "is_embedded",
    "push_off",
    "winding_of_cycle",
    "intersection_number",
    "homology",
    "homology_class",
    "walk_class",
    "enumerate_embedded_cycles",
    "enumerate_dual_trails",
    "find_symplectic_basis",
    "an_canonical_cycles",
    "gcd_all",
]


class Chord(NamedTuple):
    polygon: int
    entry: int
    exit: int
    bulge: int = 1  # only meaningful when entry == exit


@dataclass(frozen=True)
class DualWalk:
    chords: tuple[Chord, ...]

    def __post_init__(self):
        object.__setattr__(self, "chords", tuple(Chord(*c) for c in self.chords))

    def __len__(self):
        return len(self.chords)

    def triples(self, model: SurfaceModel) -> list[tuple[int, str, str]]:
        """(polygon, entry side, exit side) with sides spelled like ``3L``."""
        return [
            (c.polygon, str(model.polygons[c.polygon].sides[c.entry]), str(model.polygons[c.polygon].sides[c.exit]))
            for c in self.chords
        ]


@dataclass(frozen=True)
class EdgeCycle:
    steps: tuple[tuple[str, int], ...]

    def __post_init__(self):
        steps = tuple((str(a), int(d)) for a, d in self.steps)
        if not steps or any(d not in (1, -1) for _, d in steps):
            raise InconsistentWalk("an edge cycle needs at least one step with direction +1 or -1")
        object.__setattr__(self, "steps", steps)

    def reversed(self) -> "EdgeCycle":
        return EdgeCycle(tuple((a, -d) for a, d in reversed(self.steps)))

    def __str__(self):
        return " ".join(f"{a}{'+' if d > 0 else '-'}" for a, d in self.steps)


def gcd_all(values: Iterable[int]) -> int:
    g = 0
    for v in values:
        g = gcd(g, abs(v))
    return g


# ---------------------------------------------------------------------------
# Windings of dual walks
# ---------------------------------------------------------------------------


def chord_winding(model: SurfaceModel, chord: Chord) -> int:
    P = model.polygons[chord.polygon]
    i, j = chord.entry, chord.exit
    if i == j:
        return chord.bulge
    lo, hi = min(i, j), max(i, j)
    w = 1 - (hi - lo) + sum(model.angle_degree(a) for a in P.angles[lo:hi])
    return w if i < j else -w


def _check_walk(model: SurfaceModel, walk: DualWalk) -> None:
    if not walk.chords:
        raise InconsistentWalk("empty dual walk")
    n = len(walk.chords)
    for k, c in enumerate(walk.chords):
        if not 0 <= c.polygon < len(model.polygons):
            raise InconsistentWalk(f"chord {k} names unknown polygon {c.polygon}")
        m = len(model.polygons[c.polygon].sides)
        if not (0 <= c.entry < m and 0 <= c.exit < m):
            raise InconsistentWalk(f"chord {k} uses a side position outside 0..{m - 1}")
        if c.entry == c.exit and c.bulge not in (1, -1):
            raise InconsistentWalk(f"chord {k} returns to its entry side without a +1/-1 bulge")
        nxt = walk.chords[(k + 1) % n]
        out_side = model.polygons[c.polygon].sides[c.exit]
        in_side = model.polygons[nxt.polygon].sides[nxt.entry]
        if in_side != out_side.opposite:
            raise InconsistentWalk(
                f"chord {k} leaves through {out_side} but chord {(k + 1) % n} enters through {in_side}"
            )


def winding_of_dual_walk(model: SurfaceModel, walk: DualWalk) -> int:
    _check_walk(model, walk)
    return sum(chord_winding(model, c) for c in walk.chords)


def reverse_walk(walk: DualWalk) -> DualWalk:
    return DualWalk(tuple(Chord(c.polygon, c.exit, c.entry, -c.bulge) for c in reversed(walk.chords)))


def boundary_walk(model: SurfaceModel, i: int) -> DualWalk:
    """Push boundary component i into the surface.

    In each polygon on the component the curve follows the boundary
    segment (one chord from the first side to the last), then hugs the
    corners of the next marked point one angle at a time.
    """
    if not 0 <= i < len(model.boundaries):
        raise IndexOutOfRange(f"boundary index {i} out of range 0..{len(model.boundaries) - 1}")
    chords = []
    for pi in model.boundaries[i].polygons:
        P = model.polygons[pi]
        chords.append(Chord(pi, 0, len(P.sides) - 1, 1))
        for a in reversed(model.marked_points[P.finish].angles):
            poly, pos = _angle_position(model, a)
            chords.append(Chord(poly, pos, pos - 1))
    return DualWalk(tuple(chords))


def _angle_position(model: SurfaceModel, arrow: str) -> tuple[int, int]:
    """Polygon and position of the side whose incoming angle is ``arrow``."""
    tgt = model.algebra.arrow(arrow).target
    side = Side(tgt, L) if model.records[ArcEnd(tgt, 0)][0] == arrow else Side(tgt, R)
    return model.side_at[side]


# ---------------------------------------------------------------------------
# Edge cycles
# ---------------------------------------------------------------------------


def _ends(step):
    arc, d = step
    start = 0 if d > 0 else 1
    return ArcEnd(arc, start), ArcEnd(arc, 1 - start)


def check_cycle(model: SurfaceModel, cycle: EdgeCycle) -> None:
    """Raise InconsistentWalk if the steps do not close up, NotEmbedded if not simple."""
    arcs = set(model.algebra.vertices)
    for a, _ in cycle.steps:
        if a not in arcs:
            raise InconsistentWalk(f"unknown arc {a!r}")
    n = len(cycle.steps)
    points = []
    for k in range(n):
        arrive = _ends(cycle.steps[k])[1]
        depart = _ends(cycle.steps[(k + 1) % n])[0]
        if model.point_of(arrive) != model.point_of(depart):
            raise InconsistentWalk(
                f"step {k} ends at marked point {model.point_of(arrive)} but step "
                f"{(k + 1) % n} starts at {model.point_of(depart)}"
            )
        points.append(model.point_of(arrive))
    if len({a for a, _ in cycle.steps}) != n:
        raise NotEmbedded("an arc is used twice")
    if len(set(points)) != n:
        raise NotEmbedded("a marked point is visited twice")


def is_embedded(model: SurfaceModel, cycle: EdgeCycle) -> bool:
    try:
        check_cycle(model, cycle)
    except NotEmbedded:
        return False
    return True


def _crossings(model: SurfaceModel, cycle: EdgeCycle) -> list[tuple[str, int, int]]:
    """Arc crossings (arc, from side, to side) of the interior push-off."""
    check_cycle(model, cycle)
    steps = cycle.steps
    n = len(steps)
    turn_cross, arrive_side, depart_side = [], [], []
    for k in range(n):
        arrive = _ends(steps[k])[1]
        depart = _ends(steps[(k + 1) % n])[0]
        q, p = model.end_at[arrive]
        _, r = model.end_at[depart]
        fan = model.marked_points[q].fan
        if r < p:
            # Turn towards smaller fan positions: stay on the right.
            cross = [(fan[x].arc, 1 - fan[x].end, fan[x].end) for x in range(p - 1, r, -1)]
            arrive_side.append(arrive.end)
            depart_side.append(1 - depart.end)
        else:
            cross = [(fan[x].arc, fan[x].end, 1 - fan[x].end) for x in range(p + 1, r)]
            arrive_side.append(1 - arrive.end)
            depart_side.append(depart.end)
        turn_cross.append(cross)
    out = []
    for k in range(n):
        start_side = depart_side[k - 1]
        if start_side != arrive_side[k]:
            out.append((steps[k][0], start_side, arrive_side[k]))
        out += turn_cross[k]
    return out


def push_off(model: SurfaceModel, cycle: EdgeCycle) -> DualWalk:
    """Transverse copy of an embedded cycle, pushed off each marked point
    into the corner it turns through."""
    cross = _crossings(model, cycle)
    if not cross:
        raise InternalInconsistency(f"push-off of {cycle} meets no arc")
    chords = []
    for k, (arc, _, to) in enumerate(cross):
        nxt_arc, nxt_from, _ = cross[(k + 1) % len(cross)]
        p1, i = model.side_at[Side(arc, to)]
        p2, j = model.side_at[Side(nxt_arc, nxt_from)]
        if p1 != p2 or i == j:
            raise InternalInconsistency(f"push-off of {cycle} produced an invalid chord")
        chords.append(Chord(p1, i, j))
    return DualWalk(tuple(chords))


def winding_of_cycle(model: SurfaceModel, cycle: EdgeCycle) -> int:
    return winding_of_dual_walk(model, push_off(model, cycle))


def _cycle_chain(model: SurfaceModel, cycle: EdgeCycle) -> dict[str, int]:
    chain: dict[str, int] = {}
    for a, d in cycle.steps:
        chain[a] = chain.get(a, 0) + d
    return chain


def intersection_number(model: SurfaceModel, c1: EdgeCycle, c2: EdgeCycle) -> int:
    """Algebraic intersection of c1 with c2: signed crossings of the push-off
    of c2 with the arcs of c1 (+1 when crossing from side R to side L)."""
    check_cycle(model, c1)
    chain = _cycle_chain(model, c1)
    total = 0
    for arc, frm, _ in _crossings(model, c2):
        if arc in chain:
            total += chain[arc] * (1 if frm == R else -1)
    return total


# ---------------------------------------------------------------------------
# Homology
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class HomologyBasis:
    """H1 of the capped surface.

    Cycles of the graph of arcs are coordinatised by their coefficients on
    the non-tree arcs of a fixed spanning tree.  ``project`` maps these to a
    basis of H1(S-bar) of rank 2g, whose lifts are ``basis``.
    """

    rank: int
    tree_arcs: tuple[str, ...]
    cotree_arcs: tuple[str, ...]
    project: tuple[tuple[int, ...], ...]  # cotree coords -> H1 coords (columns)
    basis: tuple[tuple[int, ...], ...]  # lifts in cotree coords
    intersection: tuple[tuple[int, ...], ...]
    cell_rank: int
    torsion: tuple[int, ...]

    @property
    def mod2(self) -> tuple[tuple[int, ...], ...]:
        return tuple(tuple(x % 2 for x in row) for row in self.intersection)

    def coords(self, chain: dict[str, int]) -> tuple[int, ...]:
        x = [chain.get(a, 0) for a in self.cotree_arcs]
        return tuple(
            sum(x[i] * self.project[i][k] for i in range(len(x))) for k in range(self.rank)
        )

    def pair(self, u: Sequence[int], v: Sequence[int]) -> int:
        J = self.intersection
        return sum(u[i] * J[i][j] * v[j] for i in range(self.rank) for j in range(self.rank))


def _spanning_tree(model: SurfaceModel) -> list[str]:
    adj: dict[int, list[tuple[str, int]]] = {}
    for v in model.algebra.vertices:
        a, b = model.point_of(ArcEnd(v, 0)), model.point_of(ArcEnd(v, 1))
        adj.setdefault(a, []).append((v, b))
        adj.setdefault(b, []).append((v, a))
    seen, tree, queue = {0}, [], [0]
    while queue:
        x = queue.pop(0)
        for arc, y in adj.get(x, []):
            if y not in seen:
                seen.add(y)
                tree.append(arc)
                queue.append(y)
    return tree


def _fundamental_cycle(model: SurfaceModel, tree: set[str], arc: str) -> EdgeCycle:
    start, stop = model.point_of(ArcEnd(arc, 1)), model.point_of(ArcEnd(arc, 0))
    # Path in the tree from start to stop.
    prev = {start: None}
    queue = [start]
    while queue:
        x = queue.pop(0)
        for v in tree:
            for e in (0, 1):
                if model.point_of(ArcEnd(v, e)) == x:
                    y = model.point_of(ArcEnd(v, 1 - e))
                    if y not in prev:
                        prev[y] = (x, v, 1 if e == 0 else -1)
                        queue.append(y)
    steps = []
    cur = stop
    while prev[cur] is not None:
        x, v, d = prev[cur]
        steps.append((v, d))
        cur = x
    return EdgeCycle(((arc, 1), *reversed(steps)))


def _polygon_path(model: SurfaceModel, pi: int) -> dict[str, int]:
    chain: dict[str, int] = {}
    for sd in model.polygons[pi].sides:
        chain[sd.arc] = chain.get(sd.arc, 0) + (1 if sd.side == L else -1)
    return chain


def _snf(M: Matrix):
    D, U, V = smith_normal_decomp(M, domain=ZZ)
    diag = [D[i, i] for i in range(min(D.shape)) if D[i, i] != 0]
    return diag, U, V


def homology(model: SurfaceModel) -> HomologyBasis:
    cache = getattr(model, "_homology_cache", None)
    if cache is not None:
        return cache
    arcs = list(model.algebra.vertices)
    tree = _spanning_tree(model)
    tree_set = set(tree)
    cotree = [a for a in arcs if a not in tree_set]
    r = len(cotree)
    g = model.genus

    # Cellular check on the capped surface.
    cells1 = arcs + [f"seg{P.index}" for P in model.polygons]
    col = {c: k for k, c in enumerate(cells1)}
    d1 = Matrix.zeros(len(model.marked_points), len(cells1))
    for v in arcs:
        d1[model.point_of(ArcEnd(v, 1)), col[v]] += 1
        d1[model.point_of(ArcEnd(v, 0)), col[v]] -= 1
    for P in model.polygons:
        d1[P.start, col[f"seg{P.index}"]] += 1
        d1[P.finish, col[f"seg{P.index}"]] -= 1
    two_cells = len(model.polygons) + len(model.boundaries)
    d2 = Matrix.zeros(len(cells1), two_cells)
    for P in model.polygons:
        for a, c in _polygon_path(model, P.index).items():
            d2[col[a], P.index] += c
        d2[col[f"seg{P.index}"], P.index] += 1
    for bc in model.boundaries:
        for pi in bc.polygons:
            d2[col[f"seg{pi}"], len(model.polygons) + bc.index] += 1
    if d1 * d2 != Matrix.zeros(d1.rows, d2.cols):
        raise InternalInconsistency("cellular boundary maps do not compose to zero")
    rank1 = len(_snf(d1)[0]) if d1.cols else 0
    diag2 = _snf(d2)[0] if d2.cols else []
    cell_rank = len(cells1) - rank1 - len(diag2)
    torsion = tuple(abs(int(x)) for x in diag2 if abs(x) != 1)
    if cell_rank != 2 * g or torsion:
        raise InternalInconsistency(f"H1 of the capped surface has rank {cell_rank}, torsion {torsion}; genus is {g}")

    if r == 0:
        hb = HomologyBasis(0, tuple(tree), (), (), (), (), cell_rank, torsion)
        object.__setattr__(model, "_homology_cache", hb)
        return hb

    fundamentals = [_fundamental_cycle(model, tree_set, a) for a in cotree]
    omega = Matrix(r, r, lambda i, j: intersection_number(model, fundamentals[i], fundamentals[j]))
    B = Matrix([[_polygon_chain_sum(model, bc)[a] for a in cotree] for bc in model.boundaries])
    diag, _, V = _snf(B)
    if any(abs(x) != 1 for x in diag):
        raise InternalInconsistency("boundary classes do not span a direct summand")
    k = len(diag)
    if r - k != 2 * g:
        raise InternalInconsistency(f"graph homology quotient has rank {r - k}, expected {2 * g}")
    Vinv = V.inv()
    lifts = Vinv[k:, :]
    J = lifts * omega * lifts.T
    if J != -J.T or abs(J.det()) != 1:
        raise InternalInconsistency("intersection form on H1 is not unimodular and skew")
    project = V[:, k:]
    hb = HomologyBasis(
        2 * g,
        tuple(tree),
        tuple(cotree),
        tuple(tuple(int(x) for x in project.row(i)) for i in range(r)),
        tuple(tuple(int(x) for x in lifts.row(i)) for i in range(2 * g)),
        tuple(tuple(int(x) for x in J.row(i)) for i in range(2 * g)),
        cell_rank,
        torsion,
    )
    object.__setattr__(model, "_homology_cache", hb)
    return hb


def _polygon_chain_sum(model: SurfaceModel, bc) -> dict[str, int]:
    total = {a: 0 for a in model.algebra.vertices}
    for pi in bc.polygons:
        for a, c in _polygon_path(model, pi).items():
            total[a] += c
    return total


def homology_class(model: SurfaceModel, cycle: EdgeCycle) -> tuple[int, ...]:
    check_cycle(model, cycle)
    return homology(model).coords(_cycle_chain(model, cycle))


def walk_chain(model: SurfaceModel, walk: DualWalk) -> dict[str, int]:
    """Arc chain homologous to a dual walk.

    Each chord is replaced by the run of polygon sides between the two arc
    midpoints that avoids the boundary segment.  Half arcs are counted as
    halves; the total is integral because the walk is closed.
    """
    _check_walk(model, walk)
    half: dict[str, Fraction] = {}

    def add(side: Side, c):
        half[side.arc] = half.get(side.arc, Fraction(0)) + c * (1 if side.side == L else -1)

    for ch in walk.chords:
        if ch.entry == ch.exit:
            continue
        sides = model.polygons[ch.polygon].sides
        lo, hi = min(ch.entry, ch.exit), max(ch.entry, ch.exit)
        sign = 1 if ch.entry < ch.exit else -1
        add(sides[lo], Fraction(sign, 2))
        add(sides[hi], Fraction(sign, 2))
        for k in range(lo + 1, hi):
            add(sides[k], sign)
    chain = {}
    for a, c in half.items():
        if c.denominator != 1:
            raise InternalInconsistency("dual walk chain is not integral")
        if c:
            chain[a] = int(c)
    return chain


def walk_class(model: SurfaceModel, walk: DualWalk) -> tuple[int, ...]:
    return homology(model).coords(walk_chain(model, walk))


# ---------------------------------------------------------------------------
# Enumeration
# ---------------------------------------------------------------------------


def _canonical_steps(steps: tuple) -> tuple:
    n = len(steps)
    rev = tuple((a, -d) for a, d in reversed(steps))
    return min(min(s[k:] + s[:k] for k in range(n)) for s in (steps, rev))


def enumerate_embedded_cycles(model: SurfaceModel, max_len: int) -> list[EdgeCycle]:
    """All simple cycles of the arc graph with at most ``max_len`` arcs."""
    out_steps: dict[int, list[tuple[str, int, int]]] = {}
    for v in model.algebra.vertices:
        a, b = model.point_of(ArcEnd(v, 0)), model.point_of(ArcEnd(v, 1))
        out_steps.setdefault(a, []).append((v, 1, b))
        out_steps.setdefault(b, []).append((v, -1, a))
    found = set()

    def dfs(start, cur, path, points, arcs):
        for arc, d, nxt in out_steps.get(cur, []):
            if arc in arcs:
                continue
            if nxt == start:
                found.add(_canonical_steps(tuple(path + [(arc, d)])))
            elif nxt > start and nxt not in points and len(path) + 1 < max_len:
                dfs(start, nxt, path + [(arc, d)], points | {nxt}, arcs | {arc})

    if max_len >= 1:
        for s in range(len(model.marked_points)):
            dfs(s, s, [], {s}, set())
    return [EdgeCycle(s) for s in sorted(found, key=lambda s: (len(s), s))]


def enumerate_dual_trails(model: SurfaceModel, max_len: int | None = None) -> list[DualWalk]:
    """Closed dual walks crossing every arc at most once with pairwise
    disjoint chords in each polygon; each is a simple closed curve."""
    arcs = list(model.algebra.vertices)
    order = {a: i for i, a in enumerate(arcs)}
    limit = len(arcs) if max_len is None else max_len
    found = {}

    def interleaves(a, b, c, d):
        lo, hi = min(a, b), max(a, b)
        return (lo < c < hi) != (lo < d < hi)

    def dfs(first, crossings, used, chords_in):
        arc, to = crossings[-1]
        poly, i = model.side_at[Side(arc, to)]
        sides = model.polygons[poly].sides
        for j, sd in enumerate(sides):
            if j == i:
                continue
            closing = sd.arc == first[0] and sd.side == 1 - first[1] and len(crossings) >= 1
            if sd.arc in used and not closing:
                continue
            if not closing and order[sd.arc] < order[first[0]]:
                continue
            if any(interleaves(i, j, c, d) for c, d in chords_in.get(poly, [])):
                continue
            new_chords = dict(chords_in)
            new_chords[poly] = chords_in.get(poly, []) + [(i, j)]
            if closing:
                walk = []
                cs = crossings
                for k in range(len(cs)):
                    a1, t1 = cs[k]
                    a2, t2 = cs[(k + 1) % len(cs)]
                    p1, e1 = model.side_at[Side(a1, t1)]
                    _, e2 = model.side_at[Side(a2, 1 - t2)]
                    walk.append(Chord(p1, e1, e2))
                key = _trail_key(walk)
                found.setdefault(key, tuple(walk))
                continue
            if len(crossings) < limit:
                dfs(first, crossings + [(sd.arc, 1 - sd.side)], used | {sd.arc}, new_chords)

    for a in arcs:
        for to in (L, R):
            dfs((a, to), [(a, to)], {a}, {})
    return [DualWalk(found[k]) for k in sorted(found)]


def _trail_key(chords) -> tuple:
    n = len(chords)
    fwd = tuple(chords)
    rev = tuple(Chord(c.polygon, c.exit, c.entry) for c in reversed(chords))
    return min(min(s[k:] + s[:k] for k in range(n)) for s in (fwd, rev))


# ---------------------------------------------------------------------------
# Symplectic bases
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class Curve:
    """A simple closed curve with its homology class and winding number."""

    kind: str  # "cycle" or "trail"
    cycle: EdgeCycle | None
    walk: DualWalk
    cls: tuple[int, ...]
    winding: int

    def reversed(self) -> "Curve":
        return Curve(
            self.kind,
            None if self.cycle is None else self.cycle.reversed(),
            reverse_walk(self.walk),
            tuple(-x for x in self.cls),
            -self.winding,
        )

    def describe(self, model: SurfaceModel) -> dict:
        if self.cycle is not None:
            return {"kind": "cycle", "arcs": [[a, d] for a, d in self.cycle.steps], "winding": self.winding}
        return {"kind": "trail", "chords": [list(t) for t in self.walk.triples(model)], "winding": self.winding}


@dataclass(frozen=True)
class SymplecticCurveBasis:
    curves: tuple[Curve, ...]  # s1, t1, s2, t2, ...
    pool_size: int

    @property
    def windings(self) -> list[int]:
        return [c.winding for c in self.curves]

    @property
    def pairs(self) -> list[tuple[Curve, Curve]]:
        return [(self.curves[2 * i], self.curves[2 * i + 1]) for i in range(len(self.curves) // 2)]


def _cycle_curve(model, cyc: EdgeCycle) -> Curve:
    walk = push_off(model, cyc)
    return Curve("cycle", cyc, walk, homology_class(model, cyc), winding_of_dual_walk(model, walk))


def _trail_curve(model, walk: DualWalk) -> Curve:
    return Curve("trail", None, walk, walk_class(model, walk), winding_of_dual_walk(model, walk))


def _search(H: HomologyBasis, pool: list[Curve], g: int, budget: list[int]):
    if g == 0:
        return []
    live = [c for c in pool if any(c.cls)]
    for a, s in enumerate(live):
        for t in live[a + 1:]:
            budget[0] -= 1
            if budget[0] < 0:
                return None
            p = H.pair(s.cls, t.cls)
            if p not in (1, -1):
                continue
            if p == -1:
                t = t.reversed()
            rest = [c for c in live if H.pair(c.cls, s.cls) == 0 and H.pair(c.cls, t.cls) == 0]
            sub = _search(H, rest, g - 1, budget)
            if sub is not None:
                return [s, t] + sub
    return None


def find_symplectic_basis(
    model: SurfaceModel, max_len: int | None = None, seed: int | None = None, budget: int = 200000
) -> SymplecticCurveBasis:
    """Search for s1, t1, ..., sg, tg among simple closed curves.

    Graph cycles with at most ``max_len`` arcs are tried first; if they do
    not contain a symplectic basis, simple dual trails are added.  ``seed``
    shuffles the search order (the resulting invariants must not change).
    """
    g = model.genus
    if g < 1:
        raise GenusOutOfRange("a symplectic basis needs genus at least 1")
    H = homology(model)
    cap = len(model.algebra.vertices) if max_len is None else max_len
    rng = random.Random(seed) if seed is not None else None

    def attempt(pool):
        pool = list(pool)
        if rng is not None:
            rng.shuffle(pool)
        found = _search(H, pool, g, [budget])
        if found is None:
            return None
        return SymplecticCurveBasis(tuple(found), len(pool))

    pool = [_cycle_curve(model, c) for c in enumerate_embedded_cycles(model, cap)]
    result = attempt(pool)
    if result is not None:
        return result
    pool += [_trail_curve(model, w) for w in enumerate_dual_trails(model)]
    result = attempt(pool)
    if result is not None:
        return result
    raise SymplecticBasisNotFound(
        f"no symplectic basis among {len(pool)} simple closed curves (genus {g}, cycle cap {cap})"
    )


def an_canonical_cycles(model: SurfaceModel, roles) -> list[tuple[EdgeCycle, EdgeCycle]]:
    """The loops (s_i, t_i) of an A^(n) model, with w(s_i) = a_i - 1 and w(t_i) = b_i - 1.

    s_i runs along arc 2i towards the end where gamma_i arrives; t_i runs
    along arc 2i-1 towards the end where gamma_i departs.
    """
    out = []
    for i in range(len(roles.alpha)):
        odd, even = roles.vertices[2 * i], roles.vertices[2 * i + 1]
        ga = roles.gamma[i]
        e_even = 0 if model.records[ArcEnd(even, 0)][0] == ga else 1
        e_odd = 0 if model.records[ArcEnd(odd, 0)][1] == ga else 1
        s = EdgeCycle(((even, -1 if e_even == 0 else 1),))
        t = EdgeCycle(((odd, -1 if e_odd == 0 else 1),))
        out.append((s, t))
    return out
