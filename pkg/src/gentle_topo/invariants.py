"""Derived invariants of smooth proper graded gentle algebras and the
decisions built on them (derived equivalence, silting, partial silting)."""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field

from .algebra import (
    GentleAlgebra,
    an_form_of,
    check_proper,
    check_smooth,
    connected_components,
    corner_algebra,
    corner_presentation,
    reduce_idempotent,
)
from .curves import find_symplectic_basis, gcd_all
from .errors import ArfUndefined, GenusOutOfRange, InvalidIdempotent, NotGentle
from .surface import SurfaceModel, build_surface

__all__ = [
    "InvariantRecord",
    "compute_invariants",
    "sigma",
    "atilde",
    "arf",
    "derived_equivalent",
    "has_silting",
    "PartialSiltingReport",
    "partial_silting_analysis",
]


@dataclass(frozen=True)
class InvariantRecord:
    genus: int
    boundaries: tuple[tuple[int, int], ...]  # (marked points, winding) per component
    basis_windings: tuple[int, ...] = ()  # w(s1), w(t1), ..., w(sg), w(tg)
    sigma: int | None = None
    atilde: int | None = None
    arf: int | None = None
    basis: object = field(default=None, compare=False, repr=False)

    @property
    def b(self) -> int:
        return len(self.boundaries)

    @property
    def boundary_windings(self) -> list[int]:
        return [w for _, w in self.boundaries]

    @property
    def W(self) -> list[int]:
        return self.boundary_windings + list(self.basis_windings)

    @property
    def marked_total(self) -> int:
        return sum(m for m, _ in self.boundaries)

    def to_dict(self) -> dict:
        return {
            "genus": self.genus,
            "boundaries": [{"marked": m, "winding": w} for m, w in self.boundaries],
            "sigma": self.sigma,
            "atilde": self.atilde,
            "arf": self.arf,
            "W": self.W,
        }


def sigma(record: InvariantRecord) -> int:
    if record.genus <= 1:
        raise GenusOutOfRange(f"sigma is defined for genus > 1, got genus {record.genus}")
    return 0 if all(w % 2 == 0 for w in record.W) else 1


def atilde(record: InvariantRecord) -> int:
    if record.genus != 1:
        raise GenusOutOfRange(f"A-tilde is defined for genus 1, got genus {record.genus}")
    return gcd_all([w + 2 for w in record.boundary_windings] + list(record.basis_windings))


def arf(record: InvariantRecord) -> int:
    if record.genus <= 1:
        raise ArfUndefined(f"Arf invariant needs genus > 1, got genus {record.genus}")
    if sigma(record) != 0:
        raise ArfUndefined("Arf invariant needs sigma = 0 (all windings even)")
    if any(w % 4 != 2 for w in record.boundary_windings):
        raise ArfUndefined("Arf invariant needs every boundary winding to be 2 mod 4")
    ws = record.basis_windings
    total = sum((ws[2 * i] // 2 + 1) * (ws[2 * i + 1] // 2 + 1) for i in range(record.genus))
    return total % 2


def compute_invariants(A, max_len: int | None = None, seed: int | None = None) -> InvariantRecord:
    """Full derived invariant of A (a GentleAlgebra or an already built SurfaceModel)."""
    model = A if isinstance(A, SurfaceModel) else build_surface(A)
    g = model.genus
    bounds = tuple((bc.marked_count, bc.winding) for bc in model.boundaries)
    if g == 0:
        return InvariantRecord(g, bounds)
    basis = find_symplectic_basis(model, max_len=max_len, seed=seed)
    rec = InvariantRecord(g, bounds, tuple(basis.windings), basis=basis)
    if g == 1:
        return InvariantRecord(g, bounds, rec.basis_windings, atilde=atilde(rec), basis=basis)
    s = sigma(rec)
    a = None
    if s == 0 and all(w % 4 == 2 for w in rec.boundary_windings):
        a = arf(rec)
    return InvariantRecord(g, bounds, rec.basis_windings, sigma=s, arf=a, basis=basis)


def _record(x, max_len, seed) -> InvariantRecord:
    return x if isinstance(x, InvariantRecord) else compute_invariants(x, max_len=max_len, seed=seed)


def derived_equivalent(A, B, max_len: int | None = None, seed: int | None = None) -> tuple[bool, list[dict]]:
    """Decide whether two smooth proper graded gentle algebras are derived
    equivalent.  Returns the verdict and the list of compared invariants."""
    ra, rb = _record(A, max_len, seed), _record(B, max_len, seed)
    cert = []

    def check(name, left, right, ok=None):
        ok = (left == right) if ok is None else ok
        cert.append({"invariant": name, "left": left, "right": right, "match": ok})
        return ok

    ok = check("genus", ra.genus, rb.genus)
    ok = check("boundary_components", ra.b, rb.b) and ok
    pa = sorted(ra.boundaries)
    pb = sorted(rb.boundaries)
    ok = check("boundary_pairs", [list(p) for p in pa], [list(p) for p in pb], Counter(pa) == Counter(pb)) and ok
    if not ok:
        return False, cert
    g = ra.genus
    if g == 1:
        ok = check("atilde", ra.atilde, rb.atilde)
    elif g > 1:
        sa, sb = ra.sigma, rb.sigma
        if not check("sigma", sa, sb):
            return False, cert
        if sa == 1:
            cert.append({"invariant": "condition", "left": "a", "right": "a", "match": True})
            ok = True
        elif any(w % 4 == 0 for w in ra.boundary_windings):
            cert.append({"invariant": "condition", "left": "b", "right": "b", "match": True})
            ok = True
        else:
            ok = check("arf", ra.arf, rb.arf)
    return ok, cert


def has_silting(A, max_len: int | None = None, seed: int | None = None) -> bool:
    """False exactly on the derived class of the A^(1) form (1,1):
    genus 1, one boundary component with one marked point, A-tilde = 0."""
    if isinstance(A, InvariantRecord):
        rec = A
        return not (rec.genus == 1 and rec.boundaries == ((1, -2),) and rec.atilde == 0)
    model = A if isinstance(A, SurfaceModel) else build_surface(A)
    if model.genus != 1 or len(model.boundaries) != 1 or len(model.marked_points) != 1:
        return True
    return compute_invariants(model, max_len=max_len, seed=seed).atilde != 0


@dataclass
class PartialSiltingReport:
    kept: list[str]
    dropped: list[str]
    presilting: bool
    corner_dims: dict[int, int]
    corner_smooth: bool | None = None
    components: list[dict] = field(default_factory=list)
    verdict: str = "Unknown"
    reason: str = ""

    def to_dict(self) -> dict:
        return {
            "kept": self.kept,
            "dropped": self.dropped,
            "presilting": self.presilting,
            "corner_dims": {str(k): v for k, v in self.corner_dims.items()},
            "corner_smooth": self.corner_smooth,
            "components": self.components,
            "verdict": self.verdict,
            "reason": self.reason,
        }


def _component_silting(C: GentleAlgebra, max_len, seed) -> bool | None:
    # A non-positively graded algebra is silting in its own perfect category.
    if all(a.degree <= 0 for a in C.arrows):
        return True
    if not (check_proper(C) and check_smooth(C)):
        return None
    return has_silting(C, max_len=max_len, seed=seed)


def partial_silting_analysis(
    A: GentleAlgebra, kept, max_len: int | None = None, seed: int | None = None
) -> PartialSiltingReport:
    """Decide whether eA (e = sum of the kept vertices) is partial silting."""
    kept_set = set(kept)
    if not kept_set:
        raise InvalidIdempotent("kept set is empty")
    dims = corner_algebra(A, kept_set)
    kept_l = [v for v in A.vertices if v in kept_set]
    dropped = [v for v in A.vertices if v not in kept_set]
    report = PartialSiltingReport(kept_l, dropped, all(d <= 0 for d in dims), dims)
    if not report.presilting:
        report.verdict = "NotPreSilting"
        report.reason = "eAe has nonzero positive-degree part"
        return report
    if not dropped:
        report.verdict = "PartialSilting"
        report.reason = "eA = A is pre-silting and generates, hence silting"
        return report

    reduced = reduce_idempotent(A, kept_set)
    for C in connected_components(reduced):
        form = an_form_of(C)
        report.components.append(
            {
                "vertices": list(C.vertices),
                "arrows": [{"id": a.name, "src": a.source, "tgt": a.target, "deg": a.degree} for a in C.arrows],
                "an_form": None if form is None else str(form),
                "has_silting": _component_silting(C, max_len, seed),
            }
        )

    try:
        corner = corner_presentation(A, kept_set)
        report.corner_smooth = check_smooth(corner)
    except NotGentle:
        report.corner_smooth = None

    if len(dropped) == 1:
        report.verdict = "PartialSilting"
        report.reason = "almost complete pre-silting object"
        return report
    if not report.corner_smooth:
        report.verdict = "Unknown"
        report.reason = (
            "eAe is not presentable as a gentle algebra"
            if report.corner_smooth is None
            else "eAe is not homologically smooth"
        )
        return report
    flags = [c["has_silting"] for c in report.components]
    if any(f is False for f in flags):
        report.verdict = "NotPartialSilting"
        report.reason = "a component of the reduced algebra has no silting object"
    elif any(f is None for f in flags):
        report.verdict = "Unknown"
        report.reason = "a component of the reduced algebra is not smooth and proper"
    else:
        report.verdict = "PartialSilting"
        report.reason = "every component of the reduced algebra has a silting object"
    return report
