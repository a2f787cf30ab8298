"""The marked surface model of a smooth proper graded gentle algebra.

Arcs of the dissection are the vertices of the quiver.  Each arc has two
ends (0 and 1) and two sides, L (0) and R (1).

The model is assembled from *end records*.  At a vertex v the incoming and
outgoing arrows are grouped into two records ``(in, out)``: an incoming
arrow shares a record with the outgoing arrow it composes with nonzero.
The records are the two ends of arc v.

* Marked points are chains of records linked by arrows: the record holding
  ``out = b`` is followed by the record at ``target(b)`` holding ``in = b``.
  The chain is the fan of arc ends around the marked point; the arrows are
  its angles.
* Side L of arc v is ``(in of end 0, out of end 1)`` and side R is
  ``(in of end 1, out of end 0)``.  Chaining sides by arrows the same way
  gives the forbidden threads, i.e. the polygons.  A polygon whose first
  side is ``(v, s)`` has its start corner at end s of v; its last side
  ``(w, s')`` ends at end ``1 - s'`` of w.  The boundary segment joins the
  finish corner back to the start corner.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import NamedTuple

from .algebra import GentleAlgebra, check_proper, check_smooth, connected_components
from .errors import (
    DisconnectedAlgebra,
    IndexOutOfRange,
    InternalInconsistency,
    NotProper,
    NotSmooth,
    UnsupportedLoop,
)

__all__ = [
    "ArcEnd",
    "Side",
    "MarkedPoint",
    "Polygon",
    "BoundaryComponent",
    "SurfaceModel",
    "build_surface",
    "forbidden_threads",
    "topology_summary",
    "boundary_winding",
    "canonical_form",
    "incidence_dot",
    "dual_dot",
]

L, R = 0, 1


class ArcEnd(NamedTuple):
    arc: str
    end: int


class Side(NamedTuple):
    arc: str
    side: int

    @property
    def opposite(self) -> "Side":
        return Side(self.arc, 1 - self.side)

    def __str__(self):
        return f"{self.arc}{'LR'[self.side]}"


@dataclass(frozen=True)
class MarkedPoint:
    index: int
    fan: tuple[ArcEnd, ...]
    angles: tuple[str, ...]  # angles[k] joins fan[k] to fan[k + 1]


@dataclass(frozen=True)
class Polygon:
    index: int
    sides: tuple[Side, ...]
    angles: tuple[str, ...]  # angles[k] sits between sides[k] and sides[k + 1]
    start: int  # marked point at the start corner
    finish: int  # marked point at the finish corner

    @property
    def thread(self) -> tuple[str, ...]:
        return self.angles


@dataclass(frozen=True)
class BoundaryComponent:
    index: int
    polygons: tuple[int, ...]  # boundary segments in boundary order
    marked: tuple[int, ...]  # marked points, marked[k] = start of polygons[k]
    winding: int

    @property
    def marked_count(self) -> int:
        return len(self.marked)


@dataclass(frozen=True)
class SurfaceModel:
    algebra: GentleAlgebra
    marked_points: tuple[MarkedPoint, ...]
    polygons: tuple[Polygon, ...]
    boundaries: tuple[BoundaryComponent, ...]
    genus: int
    euler: int
    records: dict = field(compare=False, repr=False)  # ArcEnd -> (in, out)
    side_at: dict = field(compare=False, repr=False)  # Side -> (polygon, position)
    end_at: dict = field(compare=False, repr=False)  # ArcEnd -> (marked point, position)

    def side_arrows(self, side: Side) -> tuple[str | None, str | None]:
        """(incoming angle, outgoing angle) of a side inside its polygon."""
        v, s = side
        return self.records[ArcEnd(v, s)][0], self.records[ArcEnd(v, 1 - s)][1]

    def angle_degree(self, arrow: str) -> int:
        return self.algebra.degree(arrow)

    def point_of(self, end: ArcEnd) -> int:
        return self.end_at[end][0]


def _end_records(A: GentleAlgebra) -> dict[ArcEnd, tuple[str | None, str | None]]:
    order = {a.name: i for i, a in enumerate(A.arrows)}
    big = len(order)
    records = {}
    for v in A.vertices:
        ins = [a.name for a in A.incoming(v)]
        outs = [a.name for a in A.outgoing(v)]
        recs, used = [], set()
        for a in ins:
            b = A.nonzero_successor(a)
            if b is not None:
                recs.append((a, b))
                used.add(b)
            else:
                recs.append((a, None))
        recs += [(None, b) for b in outs if b not in used]
        if len(recs) > 2:
            raise InternalInconsistency(f"vertex {v!r} produced {len(recs)} end records")
        recs += [(None, None)] * (2 - len(recs))
        recs.sort(key=lambda r: (order.get(r[0], big), order.get(r[1], big)))
        records[ArcEnd(v, 0)], records[ArcEnd(v, 1)] = recs
    return records


def forbidden_threads(A: GentleAlgebra) -> list[tuple[str, ...]]:
    """Maximal forbidden threads, one per polygon, trivial threads included."""
    if not check_smooth(A):
        raise NotSmooth("there is a cyclic forbidden thread")
    return [angles for _, angles in _polygons(A, _end_records(A))[0]]


def _polygons(A: GentleAlgebra, records):
    def side_arrows(v, s):
        return records[ArcEnd(v, s)][0], records[ArcEnd(v, 1 - s)][1]

    polygons = []
    for v in A.vertices:
        for s in (L, R):
            if side_arrows(v, s)[0] is not None:
                continue
            sides, angles = [Side(v, s)], []
            out = side_arrows(v, s)[1]
            while out is not None:
                if len(sides) > 2 * len(A.vertices):
                    raise NotSmooth("polygon trace does not close")
                t = A.arrow(out).target
                nxt = Side(t, L) if records[ArcEnd(t, 0)][0] == out else Side(t, R)
                angles.append(out)
                sides.append(nxt)
                out = side_arrows(*nxt)[1]
            polygons.append((tuple(sides), tuple(angles)))
    covered = sum(len(s) for s, _ in polygons)
    if covered != 2 * len(A.vertices):
        # Sides not reached from a thread start lie on a cyclic thread.
        raise NotSmooth("some polygon has no boundary segment (cyclic forbidden thread)")
    return polygons, side_arrows


def build_surface(A: GentleAlgebra) -> SurfaceModel:
    if not A.vertices:
        raise DisconnectedAlgebra("the algebra has no vertices")
    if not check_proper(A):
        raise NotProper("a fan closes up into a cycle: the algebra is not proper")
    if not check_smooth(A):
        raise NotSmooth("there is a cyclic forbidden thread: the algebra is not smooth")
    loops = [a.name for a in A.arrows if a.is_loop]
    if loops:
        raise UnsupportedLoop(f"loops are not supported: {loops}")
    if len(connected_components(A)) > 1:
        raise DisconnectedAlgebra("the surface model needs a connected quiver")

    records = _end_records(A)
    by_in = {rec[0]: end for end, rec in records.items() if rec[0] is not None}

    marked, end_at = [], {}
    for v in A.vertices:
        for e in (0, 1):
            end = ArcEnd(v, e)
            if records[end][0] is not None:
                continue
            fan, angles = [end], []
            out = records[end][1]
            while out is not None:
                nxt = by_in[out]
                angles.append(out)
                fan.append(nxt)
                out = records[nxt][1]
            idx = len(marked)
            for pos, fe in enumerate(fan):
                end_at[fe] = (idx, pos)
            marked.append(MarkedPoint(idx, tuple(fan), tuple(angles)))
    if len(end_at) != 2 * len(A.vertices):
        raise NotProper("a fan closes up into a cycle")

    raw, _ = _polygons(A, records)
    polygons, side_at = [], {}
    for idx, (sides, angles) in enumerate(raw):
        first, last = sides[0], sides[-1]
        start = end_at[ArcEnd(first.arc, first.side)][0]
        finish = end_at[ArcEnd(last.arc, 1 - last.side)][0]
        for pos, sd in enumerate(sides):
            side_at[sd] = (idx, pos)
        polygons.append(Polygon(idx, sides, angles, start, finish))

    starting = {p.start: p.index for p in polygons}
    if len(starting) != len(polygons) or len(polygons) != len(marked):
        raise InternalInconsistency("boundary segments do not match marked points")
    seen, cycles = set(), []
    for p in polygons:
        if p.index in seen:
            continue
        cyc, cur = [], p.index
        while cur not in seen:
            seen.add(cur)
            cyc.append(cur)
            cur = starting[polygons[cur].finish]
        cycles.append(tuple(cyc))

    deg = A.degree
    boundaries = []
    for i, cyc in enumerate(cycles):
        w = 0
        for pi in cyc:
            P = polygons[pi]
            w += 1 - len(P.angles) + sum(deg(a) for a in P.angles)
            w -= sum(deg(a) for a in marked[P.start].angles)
        boundaries.append(
            BoundaryComponent(i, cyc, tuple(polygons[pi].start for pi in cyc), w)
        )

    n0, m, b = len(A.vertices), len(marked), len(boundaries)
    twice_g = n0 - m - b + 2
    if twice_g % 2 or twice_g < 0:
        raise InternalInconsistency(f"non-integral or negative genus from |Q0|={n0}, |M|={m}, b={b}")
    euler = m - n0
    if sum(bc.winding for bc in boundaries) != 2 * euler:
        raise InternalInconsistency("boundary windings violate Poincare-Hopf")
    return SurfaceModel(
        A,
        tuple(marked),
        tuple(polygons),
        tuple(boundaries),
        twice_g // 2,
        euler,
        records,
        side_at,
        end_at,
    )


def topology_summary(model: SurfaceModel) -> tuple[int, int, list[int]]:
    return model.genus, len(model.boundaries), [bc.marked_count for bc in model.boundaries]


def boundary_winding(model: SurfaceModel, i: int) -> int:
    if not 0 <= i < len(model.boundaries):
        raise IndexOutOfRange(f"boundary index {i} out of range 0..{len(model.boundaries) - 1}")
    return model.boundaries[i].winding


def canonical_form(model: SurfaceModel) -> tuple:
    """A labelling-independent encoding of the fans, arcs and angle degrees.

    Two models have equal canonical forms iff they are isomorphic as graded
    marked surfaces with dissection.
    """
    best = None
    for root in model.end_at:
        code = _encode_from(model, root)
        if best is None or code < best:
            best = code
    return best


def _encode_from(model: SurfaceModel, root: ArcEnd) -> tuple:
    label: dict[str, tuple[int, int]] = {}  # arc -> (new id, end that becomes 0)
    queue = [root]
    label[root.arc] = (0, root.end)
    done = set()
    code = []
    while queue:
        end = queue.pop(0)
        mp = model.point_of(end)
        if mp in done:
            continue
        done.add(mp)
        point = model.marked_points[mp]
        entry = []
        for fe in point.fan:
            if fe.arc not in label:
                label[fe.arc] = (len(label), fe.end)
            new_id, zero = label[fe.arc]
            entry.append((new_id, 0 if fe.end == zero else 1))
            other = ArcEnd(fe.arc, 1 - fe.end)
            queue.append(other)
        code.append((tuple(entry), tuple(model.angle_degree(a) for a in point.angles)))
    return tuple(code)


def _q(s) -> str:
    return '"' + str(s).replace('"', '\\"') + '"'


def incidence_dot(model: SurfaceModel) -> str:
    """Marked points joined by arcs; node labels show fan order and angle degrees."""
    lines = ["graph incidence {"]
    for mp in model.marked_points:
        fan = " ".join(f"{e.arc}.{e.end}" for e in mp.fan)
        degs = ",".join(str(model.angle_degree(a)) for a in mp.angles)
        lines.append(f"  m{mp.index} [label={_q(f'M{mp.index}: {fan} | {degs}')}];")
    for v in model.algebra.vertices:
        a = model.point_of(ArcEnd(v, 0))
        b = model.point_of(ArcEnd(v, 1))
        lines.append(f"  m{a} -- m{b} [label={_q(v)}];")
    lines.append("}")
    return "\n".join(lines) + "\n"


def dual_dot(model: SurfaceModel) -> str:
    """Polygons joined across shared arcs."""
    lines = ["graph dual {"]
    for P in model.polygons:
        sides = " ".join(str(s) for s in P.sides)
        angles = " ".join(f"{a}:{model.angle_degree(a)}" for a in P.angles)
        lines.append(f"  p{P.index} [label={_q(f'P{P.index}: {sides} | {angles}')}];")
    for v in model.algebra.vertices:
        a = model.side_at[Side(v, L)][0]
        b = model.side_at[Side(v, R)][0]
        lines.append(f"  p{a} -- p{b} [label={_q(v)}];")
    lines.append("}")
    return "\n".join(lines) + "\n"
