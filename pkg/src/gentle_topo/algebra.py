"""Graded gentle algebras given by quivers with quadratic monomial relations.

Paths are composed left to right: ``(a, b)`` in the relation set means the
path "a then b" is zero, which requires ``target(a) == source(b)``.
"""

from __future__ import annotations

import re
from collections import defaultdict
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, NamedTuple

from .errors import (
    InvalidIdempotent,
    NotAnForm,
    NotGentle,
    NotProper,
    PresentationError,
    RelationNotComposable,
)

__all__ = [
    "Arrow",
    "GradedQuiver",
    "GentleAlgebra",
    "AnForm",
    "AnRoles",
    "BasisPath",
    "validate_gentle",
    "check_proper",
    "check_smooth",
    "path_basis",
    "make_an",
    "an_roles",
    "an_form_of",
    "reduce_idempotent",
    "corner_algebra",
    "corner_presentation",
    "is_presilting_idempotent",
    "koszul_dual_a2",
    "an_rewrite_move",
    "connected_components",
    "relabel",
    "regrade",
]


@dataclass(frozen=True)
class Arrow:
    name: str
    source: str
    target: str
    degree: int = 0

    @property
    def is_loop(self) -> bool:
        return self.source == self.target


@dataclass(frozen=True)
class GradedQuiver:
    vertices: tuple[str, ...]
    arrows: tuple[Arrow, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "vertices", tuple(self.vertices))
        object.__setattr__(self, "arrows", tuple(self.arrows))
        declared = set()
        for v in self.vertices:
            if v in declared:
                raise PresentationError(f"duplicate vertex {v!r}")
            declared.add(v)
        names = set()
        for a in self.arrows:
            if a.name in names:
                raise PresentationError(f"duplicate arrow {a.name!r}")
            names.add(a.name)
            for end in (a.source, a.target):
                if end not in declared:
                    raise PresentationError(
                        f"arrow {a.name!r} refers to undeclared vertex {end!r}"
                    )
            if not isinstance(a.degree, int) or isinstance(a.degree, bool):
                raise PresentationError(f"arrow {a.name!r} has non-integer degree")


@dataclass(frozen=True)
class GentleAlgebra:
    """A validated graded gentle algebra kQ/I.

    Construction runs every gentleness check, so holding an instance is
    proof of validity.  Use :func:`validate_gentle` or :meth:`build`.
    """

    quiver: GradedQuiver
    relations: frozenset

    def __post_init__(self):
        object.__setattr__(
            self, "relations", frozenset((str(a), str(b)) for a, b in self.relations)
        )
        _check_gentle(self)

    @classmethod
    def build(cls, vertices, arrows, relations=()) -> "GentleAlgebra":
        """``arrows`` holds ``Arrow`` objects or ``(name, src, tgt, deg)`` tuples."""
        arrows = tuple(a if isinstance(a, Arrow) else Arrow(*a) for a in arrows)
        return cls(GradedQuiver(tuple(vertices), arrows), frozenset(map(tuple, relations)))

    @property
    def vertices(self) -> tuple[str, ...]:
        return self.quiver.vertices

    @property
    def arrows(self) -> tuple[Arrow, ...]:
        return self.quiver.arrows

    @cached_property
    def _by_name(self) -> dict[str, Arrow]:
        return {a.name: a for a in self.arrows}

    def arrow(self, name: str) -> Arrow:
        return self._by_name[name]

    def degree(self, name: str) -> int:
        return self._by_name[name].degree

    @cached_property
    def _out(self) -> dict[str, tuple[Arrow, ...]]:
        out = defaultdict(list)
        for a in self.arrows:
            out[a.source].append(a)
        return {v: tuple(out[v]) for v in self.vertices}

    @cached_property
    def _in(self) -> dict[str, tuple[Arrow, ...]]:
        inc = defaultdict(list)
        for a in self.arrows:
            inc[a.target].append(a)
        return {v: tuple(inc[v]) for v in self.vertices}

    def outgoing(self, v: str) -> tuple[Arrow, ...]:
        return self._out[v]

    def incoming(self, v: str) -> tuple[Arrow, ...]:
        return self._in[v]

    @cached_property
    def _successors(self):
        nz, rel = {}, {}
        for a in self.arrows:
            nz[a.name] = rel[a.name] = None
            for b in self._out[a.target]:
                if (a.name, b.name) in self.relations:
                    rel[a.name] = b.name
                else:
                    nz[a.name] = b.name
        return nz, rel

    @cached_property
    def _predecessors(self):
        nz_next, rel_next = self._successors
        nz = {a.name: None for a in self.arrows}
        rel = dict(nz)
        for a, b in nz_next.items():
            if b is not None:
                nz[b] = a
        for a, b in rel_next.items():
            if b is not None:
                rel[b] = a
        return nz, rel

    def nonzero_successor(self, name: str) -> str | None:
        """The unique arrow b with ``name``·b composable and not a relation."""
        return self._successors[0][name]

    def relation_successor(self, name: str) -> str | None:
        return self._successors[1][name]

    def nonzero_predecessor(self, name: str) -> str | None:
        return self._predecessors[0][name]

    def relation_predecessor(self, name: str) -> str | None:
        return self._predecessors[1][name]

    def is_connected(self) -> bool:
        return len(connected_components(self)) <= 1

    def is_ungraded(self) -> bool:
        return all(a.degree == 0 for a in self.arrows)


def _check_gentle(A: GentleAlgebra) -> None:
    names = {a.name: a for a in A.quiver.arrows}
    for a, b in sorted(A.relations):
        if a not in names or b not in names:
            missing = a if a not in names else b
            raise RelationNotComposable(f"relation ({a}, {b}) refers to unknown arrow {missing!r}")
        if names[a].target != names[b].source:
            raise RelationNotComposable(
                f"relation ({a}, {b}) is not composable: target({a}) = "
                f"{names[a].target!r} but source({b}) = {names[b].source!r}"
            )
    out = defaultdict(list)
    inc = defaultdict(list)
    for arr in A.quiver.arrows:
        out[arr.source].append(arr.name)
        inc[arr.target].append(arr.name)
    for v in A.quiver.vertices:
        if len(out[v]) > 2:
            raise NotGentle(f"vertex {v!r} is the source of {len(out[v])} arrows (at most 2 allowed)")
        if len(inc[v]) > 2:
            raise NotGentle(f"vertex {v!r} is the target of {len(inc[v])} arrows (at most 2 allowed)")
    for arr in A.quiver.arrows:
        after = out[arr.target]
        rel = [b for b in after if (arr.name, b) in A.relations]
        free = [b for b in after if (arr.name, b) not in A.relations]
        if len(rel) > 1:
            raise NotGentle(f"arrow {arr.name!r} has {len(rel)} relation successors {rel}")
        if len(free) > 1:
            raise NotGentle(f"arrow {arr.name!r} has {len(free)} non-relation successors {free}")
        before = inc[arr.source]
        rel = [c for c in before if (c, arr.name) in A.relations]
        free = [c for c in before if (c, arr.name) not in A.relations]
        if len(rel) > 1:
            raise NotGentle(f"arrow {arr.name!r} has {len(rel)} relation predecessors {rel}")
        if len(free) > 1:
            raise NotGentle(f"arrow {arr.name!r} has {len(free)} non-relation predecessors {free}")


def validate_gentle(quiver: GradedQuiver, relations: Iterable) -> GentleAlgebra:
    return GentleAlgebra(quiver, frozenset(tuple(r) for r in relations))


def _cyclic_arrows(A: GentleAlgebra, successor) -> list[str]:
    """Arrows lying on a cycle of the partial injective map ``successor``."""
    has_pred = {b for a in A.arrows if (b := successor(a.name)) is not None}
    reached = set()
    for a in A.arrows:
        if a.name in has_pred:
            continue
        cur = a.name
        while cur is not None and cur not in reached:
            reached.add(cur)
            cur = successor(cur)
    return [a.name for a in A.arrows if a.name not in reached]


def check_proper(A: GentleAlgebra) -> bool:
    """True iff A is finite dimensional (no cycle of nonzero compositions)."""
    return not _cyclic_arrows(A, A.nonzero_successor)


def check_smooth(A: GentleAlgebra) -> bool:
    """True iff there is no cyclic forbidden thread."""
    return not _cyclic_arrows(A, A.relation_successor)


class BasisPath(NamedTuple):
    source: str
    target: str
    arrows: tuple[str, ...]
    degree: int


def path_basis(A: GentleAlgebra) -> tuple[BasisPath, ...]:
    if not check_proper(A):
        raise NotProper("path basis is infinite: there is a cycle of nonzero compositions")
    basis = [BasisPath(v, v, (), 0) for v in A.vertices]
    for a in A.arrows:
        path, deg, cur = [], 0, a.name
        while cur is not None:
            path.append(cur)
            deg += A.degree(cur)
            basis.append(BasisPath(a.source, A.arrow(cur).target, tuple(path), deg))
            cur = A.nonzero_successor(cur)
    return tuple(basis)


# ---------------------------------------------------------------------------
# The A^(n) family
# ---------------------------------------------------------------------------

_PAIRS_RE = re.compile(r"^\(?\s*(.*?)\s*\)?$")


@dataclass(frozen=True)
class AnForm:
    """Grading sums (a1,b1;...;an,bn) of an algebra of the form A^(n)."""

    pairs: tuple[tuple[int, int], ...]

    def __post_init__(self):
        pairs = tuple((int(a), int(b)) for a, b in self.pairs)
        if not pairs:
            raise NotAnForm("an A^(n) form needs at least one pair")
        object.__setattr__(self, "pairs", pairs)

    @property
    def n(self) -> int:
        return len(self.pairs)

    @classmethod
    def parse(cls, text: str) -> "AnForm":
        body = _PAIRS_RE.match(text.strip()).group(1)
        pairs = []
        for chunk in body.split(";"):
            parts = [p.strip() for p in chunk.split(",")]
            if len(parts) != 2:
                raise NotAnForm(f"cannot parse pair {chunk.strip()!r} in {text!r}")
            try:
                pairs.append((int(parts[0]), int(parts[1])))
            except ValueError:
                raise NotAnForm(f"non-integer entry in pair {chunk.strip()!r}") from None
        return cls(tuple(pairs))

    def __str__(self) -> str:
        return "(" + ";".join(f"{a},{b}" for a, b in self.pairs) + ")"


def make_an(form: AnForm) -> GentleAlgebra:
    """Algebra of the form A^(n) realizing ``form``.

    Degrees: |alpha_i| = a_i, |gamma_i| = b_i, beta and delta arrows in degree 0.
    """
    if not isinstance(form, AnForm):
        form = AnForm(tuple(form))
    n = form.n
    vertices = [str(k) for k in range(1, 2 * n + 1)]
    arrows, relations = [], []
    for i, (a, b) in enumerate(form.pairs, start=1):
        odd, even = str(2 * i - 1), str(2 * i)
        arrows += [
            Arrow(f"alpha{i}", odd, even, a),
            Arrow(f"beta{i}", even, odd, 0),
            Arrow(f"gamma{i}", odd, even, b),
        ]
        relations += [(f"alpha{i}", f"beta{i}"), (f"beta{i}", f"gamma{i}")]
        if i < n:
            arrows.append(Arrow(f"delta{i}", even, str(2 * i + 1), 0))
            relations += [(f"gamma{i}", f"delta{i}"), (f"delta{i}", f"alpha{i + 1}")]
    return GentleAlgebra(GradedQuiver(tuple(vertices), tuple(arrows)), frozenset(relations))


class AnRoles(NamedTuple):
    """Identification of an algebra with (Q^(n), I^(n)): vertex i+1 is ``vertices[i]``."""

    vertices: tuple[str, ...]
    alpha: tuple[str, ...]
    beta: tuple[str, ...]
    gamma: tuple[str, ...]
    delta: tuple[str, ...]

    def form(self, A: GentleAlgebra) -> AnForm:
        return AnForm(
            tuple(
                (A.degree(al) + A.degree(be), A.degree(be) + A.degree(ga))
                for al, be, ga in zip(self.alpha, self.beta, self.gamma)
            )
        )


def _roles_from(A: GentleAlgebra, first: str, n: int) -> AnRoles | None:
    R = A.relations
    verts, al, be, ga, de = [], [], [], [], []
    odd = first
    for i in range(n):
        outs = A.outgoing(odd)
        if len(outs) != 2 or outs[0].target != outs[1].target or outs[0].is_loop:
            return None
        even = outs[0].target
        backs = [x for x in A.outgoing(even) if x.target == odd]
        if len(backs) != 1:
            return None
        beta = backs[0].name
        alpha = [x.name for x in outs if (x.name, beta) in R]
        gamma = [x.name for x in outs if (beta, x.name) in R]
        if len(alpha) != 1 or len(gamma) != 1 or alpha[0] == gamma[0]:
            return None
        if i > 0 and (de[-1], alpha[0]) not in R:
            return None
        verts += [odd, even]
        al.append(alpha[0])
        be.append(beta)
        ga.append(gamma[0])
        if i < n - 1:
            forward = [x for x in A.outgoing(even) if x.name != beta]
            if len(forward) != 1 or (gamma[0], forward[0].name) not in R:
                return None
            de.append(forward[0].name)
            odd = forward[0].target
    roles = AnRoles(tuple(verts), tuple(al), tuple(be), tuple(ga), tuple(de))
    # Exact check: the identification maps arrows and relations bijectively.
    if len(set(verts)) != 2 * n:
        return None
    if {a.name for a in A.arrows} != set(al + be + ga + de):
        return None
    expected = {(al[i], be[i]) for i in range(n)} | {(be[i], ga[i]) for i in range(n)}
    expected |= {(ga[j], de[j]) for j in range(n - 1)} | {(de[j], al[j + 1]) for j in range(n - 1)}
    if expected != set(A.relations):
        return None
    return roles


def an_roles(A: GentleAlgebra) -> AnRoles | None:
    """Identify A with some (Q^(n), I^(n)), ignoring degrees; None if impossible."""
    nv, na = len(A.vertices), len(A.arrows)
    if nv == 0 or nv % 2 or na != 2 * nv - 1 or len(A.relations) != 2 * nv - 2:
        return None
    found = [r for v in A.vertices if (r := _roles_from(A, v, nv // 2)) is not None]
    if not found:
        return None
    return min(found, key=lambda r: (r.form(A).pairs, r.vertices))


def an_form_of(A: GentleAlgebra) -> AnForm | None:
    roles = an_roles(A)
    return None if roles is None else roles.form(A)


def koszul_dual_a2(form: AnForm) -> AnForm:
    if form.n != 2:
        raise NotAnForm(f"Koszul dual formula needs n = 2, got n = {form.n}")
    (a1, b1), (a2, b2) = form.pairs
    return AnForm(((2 - a2, 2 - b2), (2 - a1, 2 - b1)))


def an_rewrite_move(form: AnForm) -> AnForm:
    """(a1+a2+b1-4, b1; a2, 3-b1+b2; a3,b3; ...), a derived-equivalent form."""
    if form.n < 2:
        raise NotAnForm(f"rewrite move needs n >= 2, got n = {form.n}")
    (a1, b1), (a2, b2), *rest = form.pairs
    return AnForm(((a1 + a2 + b1 - 4, b1), (a2, 3 - b1 + b2), *rest))


# ---------------------------------------------------------------------------
# Idempotents
# ---------------------------------------------------------------------------


def _vertex_subset(A: GentleAlgebra, vs, what: str) -> set[str]:
    vs = set(vs)
    unknown = vs - set(A.vertices)
    if unknown:
        raise InvalidIdempotent(f"{what} set names unknown vertices {sorted(unknown)}")
    return vs


def reduce_idempotent(A: GentleAlgebra, dropped) -> GentleAlgebra:
    """The algebra A_e obtained by dropping the vertices of e.

    New arrows are relation paths whose endpoints survive and whose interior
    vertices are all dropped; a path of k arrows gets degree sum - k + 1.
    """
    dropped = _vertex_subset(A, dropped, "dropped")
    if dropped == set(A.vertices):
        raise InvalidIdempotent("cannot drop every vertex")
    kept = [v for v in A.vertices if v not in dropped]
    paths = []
    for a in A.arrows:
        if a.source in dropped:
            continue
        path = [a.name]
        while A.arrow(path[-1]).target in dropped:
            nxt = A.relation_successor(path[-1])
            if nxt is None or nxt in path:
                path = None
                break
            path.append(nxt)
        if path is not None:
            paths.append(tuple(path))
    name = {p: p[0] if len(p) == 1 else "[" + ".".join(p) + "]" for p in paths}
    arrows = tuple(
        Arrow(
            name[p],
            A.arrow(p[0]).source,
            A.arrow(p[-1]).target,
            sum(A.degree(x) for x in p) - len(p) + 1,
        )
        for p in paths
    )
    relations = {
        (name[p], name[q])
        for p in paths
        for q in paths
        if (p[-1], q[0]) in A.relations
    }
    return GentleAlgebra(GradedQuiver(tuple(kept), arrows), frozenset(relations))


def corner_algebra(A: GentleAlgebra, kept) -> dict[int, int]:
    """Graded dimension of eAe: basis paths with both ends in ``kept``."""
    kept = _vertex_subset(A, kept, "kept")
    dims: dict[int, int] = defaultdict(int)
    for p in path_basis(A):
        if p.source in kept and p.target in kept:
            dims[p.degree] += 1
    return dict(sorted(dims.items()))


def is_presilting_idempotent(A: GentleAlgebra, kept) -> bool:
    return all(d <= 0 for d in corner_algebra(A, kept))


def corner_presentation(A: GentleAlgebra, kept) -> GentleAlgebra:
    """eAe as a quiver with relations.

    Arrows are nonzero paths between kept vertices passing only through
    dropped ones.  Raises NotGentle when the result is not gentle.
    """
    kept = _vertex_subset(A, kept, "kept")
    if not kept:
        raise InvalidIdempotent("kept set is empty")
    if not check_proper(A):
        raise NotProper("corner presentation needs a finite dimensional algebra")
    paths = []
    for a in A.arrows:
        if a.source not in kept:
            continue
        path = [a.name]
        while A.arrow(path[-1]).target not in kept:
            nxt = A.nonzero_successor(path[-1])
            if nxt is None:
                path = None
                break
            path.append(nxt)
        if path is not None:
            paths.append(tuple(path))
    name = {p: p[0] if len(p) == 1 else "(" + ".".join(p) + ")" for p in paths}
    arrows = tuple(
        Arrow(name[p], A.arrow(p[0]).source, A.arrow(p[-1]).target, sum(A.degree(x) for x in p))
        for p in paths
    )
    relations = {
        (name[p], name[q]) for p in paths for q in paths if (p[-1], q[0]) in A.relations
    }
    verts = tuple(v for v in A.vertices if v in kept)
    return GentleAlgebra(GradedQuiver(verts, arrows), frozenset(relations))


def connected_components(A: GentleAlgebra) -> list[GentleAlgebra]:
    parent = {v: v for v in A.vertices}

    def find(v):
        while parent[v] != v:
            parent[v] = parent[parent[v]]
            v = parent[v]
        return v

    for a in A.arrows:
        ra, rb = find(a.source), find(a.target)
        if ra != rb:
            parent[rb] = ra
    groups: dict[str, list[str]] = {}
    for v in A.vertices:
        groups.setdefault(find(v), []).append(v)
    comps = []
    for verts in groups.values():
        vs = set(verts)
        arrows = tuple(a for a in A.arrows if a.source in vs)
        names = {a.name for a in arrows}
        rels = frozenset(r for r in A.relations if r[0] in names)
        comps.append(GentleAlgebra(GradedQuiver(tuple(verts), arrows), rels))
    return comps


def relabel(A: GentleAlgebra, vertex_map=None, arrow_map=None, order=None) -> GentleAlgebra:
    """Rename vertices/arrows; ``order`` optionally permutes the vertex list."""
    vm = vertex_map or {}
    am = arrow_map or {}
    verts = [vm.get(v, v) for v in A.vertices]
    if order is not None:
        verts = [verts[i] for i in order]
    arrows = tuple(
        Arrow(am.get(a.name, a.name), vm.get(a.source, a.source), vm.get(a.target, a.target), a.degree)
        for a in A.arrows
    )
    rels = frozenset((am.get(x, x), am.get(y, y)) for x, y in A.relations)
    return GentleAlgebra(GradedQuiver(tuple(verts), arrows), rels)


def regrade(A: GentleAlgebra, degrees: dict[str, int]) -> GentleAlgebra:
    arrows = tuple(Arrow(a.name, a.source, a.target, degrees.get(a.name, a.degree)) for a in A.arrows)
    return GentleAlgebra(GradedQuiver(A.vertices, arrows), A.relations)
