import random

import pytest

from conftest import a2_quiver, an, point_algebra, prenotpartial_algebra, remark_algebra
from oracles import an_equivalent, arf_an, atilde_an1, sigma_an
from randalg import random_smooth_proper
from gentle_topo.algebra import AnForm, make_an, regrade, relabel
from gentle_topo.errors import ArfUndefined, GenusOutOfRange
from gentle_topo.invariants import (
    InvariantRecord,
    arf,
    atilde,
    compute_invariants,
    derived_equivalent,
    has_silting,
    partial_silting_analysis,
    sigma,
)


def test_record_a1():
    for a, b in [(1, 1), (3, 5), (0, 0), (-2, 4)]:
        rec = compute_invariants(an(f"{a},{b}"))
        assert rec.genus == 1 and rec.boundaries == ((1, -2),)
        assert rec.atilde == atilde_an1(a, b)
        assert rec.sigma is None and rec.arf is None


def test_record_an_boundary():
    for n in (1, 2, 3):
        rec = compute_invariants(an(";".join(["2,1"] * n)))
        assert rec.boundaries == ((1, 2 - 4 * n),)
        assert sum(w for _, w in rec.boundaries) == 2 * (2 - 2 * rec.genus - rec.b)


def test_record_point():
    rec = compute_invariants(point_algebra())
    assert rec.genus == 0 and rec.boundaries == ((2, 2),)
    assert (rec.sigma, rec.atilde, rec.arf) == (None, None, None)


def test_sigma_values():
    assert compute_invariants(an("3,3;5,7")).sigma == 0
    assert compute_invariants(an("0,0;0,0")).sigma == 1
    assert sigma(InvariantRecord(2, ((1, -6),), (2, 0, 4, -2))) == 0


def test_atilde_values():
    assert compute_invariants(an("1,1")).atilde == 0
    assert compute_invariants(an("3,5")).atilde == 2
    assert compute_invariants(an("0,0")).atilde == 1


def test_arf_values():
    assert compute_invariants(an("3,3;3,3")).arf == 0
    assert compute_invariants(an("3,3;1,1")).arf == 1
    assert compute_invariants(an("1,1;1,1")).arf == 0


def test_genus_guards():
    g1 = InvariantRecord(1, ((1, -2),), (0, 0))
    with pytest.raises(GenusOutOfRange):
        sigma(g1)
    with pytest.raises(GenusOutOfRange):
        atilde(InvariantRecord(2, ((1, -6),), (0, 0, 0, 0)))
    with pytest.raises(ArfUndefined):
        arf(InvariantRecord(2, ((1, -6),), (1, 0, 0, 0)))
    with pytest.raises(ArfUndefined):
        arf(InvariantRecord(2, ((1, -4),), (0, 0, 0, 0)))
    with pytest.raises(ArfUndefined):
        arf(g1)


@pytest.mark.parametrize(
    "left,right,expected",
    [
        ("0,0;0,0", "1,1;0,0", True),
        ("1,1;1,1;1,1", "-1,1;1,3;1,1", True),
        ("1,1", "3,3", False),
        ("2,3", "3,2", True),
        ("3,3;3,3", "3,3;1,1", False),
    ],
)
def test_equivalence_goldens(left, right, expected):
    ok, cert = derived_equivalent(an(left), an(right))
    assert ok is expected
    assert cert and all({"invariant", "left", "right", "match"} <= set(c) for c in cert)


def test_equivalence_different_topology():
    ok, cert = derived_equivalent(an("1,1"), an("1,1;1,1"))
    assert not ok and cert[0]["invariant"] == "genus" and not cert[0]["match"]
    assert not derived_equivalent(a2_quiver(0), point_algebra())[0]


def test_equivalence_reflexive_symmetric_relabel():
    rng = random.Random(12)
    for _ in range(30):
        A = random_smooth_proper(rng, max_vertices=6)
        B = random_smooth_proper(rng, max_vertices=6)
        assert derived_equivalent(A, A)[0]
        assert derived_equivalent(A, B)[0] == derived_equivalent(B, A)[0]
        vmap = {v: f"q{v}" for v in A.vertices}
        assert derived_equivalent(A, relabel(A, vmap))[0]


def test_equivalence_regrading_fixing_sums():
    # shifting degree t from beta to alpha/gamma keeps a_i and b_i
    base = an("2,5;-1,0")
    degrees = {a.name: a.degree for a in base.arrows}
    degrees["beta1"] += 3
    degrees["alpha1"] -= 3
    degrees["gamma1"] -= 3
    assert derived_equivalent(base, regrade(base, degrees))[0]


def test_remark_algebra_equivalent_to_a2_class():
    # same surface as A^(2); ungraded, so sigma = 1 like (0,0;0,0)
    assert derived_equivalent(remark_algebra(), an("0,0;0,0"))[0]


def test_silting_goldens():
    assert has_silting(an("1,1")) is False
    for f in ["1,3", "0,0", "1,1;1,1", "0,0;0,0"]:
        assert has_silting(an(f)) is True
    assert has_silting(remark_algebra()) is True
    assert has_silting(point_algebra()) is True


def test_silting_agrees_across_equivalent_algebras():
    rng = random.Random(13)
    forms = [((rng.randint(-3, 3), rng.randint(-3, 3)),) for _ in range(25)] + [((1, 1),)]
    records = [compute_invariants(make_an(AnForm(f))) for f in forms]
    for A in records:
        for B in records:
            if derived_equivalent(A, B)[0]:
                assert has_silting(A) == has_silting(B)


def test_ungraded_random_have_silting():
    rng = random.Random(6)
    for _ in range(40):
        A = random_smooth_proper(rng, degree_range=(0, 0))
        assert has_silting(A)


def test_partial_silting_prenotpartial():
    rep = partial_silting_analysis(prenotpartial_algebra(), {"3", "4"})
    assert rep.presilting and rep.verdict == "NotPartialSilting"
    assert rep.components[0]["an_form"] == "(1,1)"


@pytest.mark.parametrize("n", [2, 3, 4])
def test_partial_silting_an_prime(n):
    A = an(";".join(["1,1"] + ["0,0"] * (n - 1)))
    rep = partial_silting_analysis(A, {str(k) for k in range(3, 2 * n + 1)})
    assert rep.verdict == "NotPartialSilting"


def test_almost_complete_presilting_is_partial():
    rng = random.Random(31)
    seen = 0
    for _ in range(200):
        A = random_smooth_proper(rng, max_vertices=6)
        if len(A.vertices) < 2:
            continue
        drop = rng.choice(A.vertices)
        kept = set(A.vertices) - {drop}
        rep = partial_silting_analysis(A, kept)
        if rep.presilting:
            seen += 1
            assert rep.verdict == "PartialSilting"
            assert all(c["has_silting"] for c in rep.components)
    assert seen > 20


def test_not_presilting_verdict():
    rep = partial_silting_analysis(an("1,1"), {"1"})
    assert not rep.presilting and rep.verdict == "NotPreSilting"


def test_full_idempotent():
    rep = partial_silting_analysis(an("0,0;0,0"), {"1", "2", "3", "4"})
    assert rep.verdict == "PartialSilting"


def test_pipeline_matches_closed_form():
    rng = random.Random(40)
    for _ in range(60):
        n = rng.choice([1, 2, 3])
        p = tuple((rng.randint(-4, 4), rng.randint(-4, 4)) for _ in range(n))
        q = tuple((rng.randint(-4, 4), rng.randint(-4, 4)) for _ in range(n))
        assert derived_equivalent(make_an(AnForm(p)), make_an(AnForm(q)))[0] == an_equivalent(p, q)
        if n > 1:
            rec = compute_invariants(make_an(AnForm(p)))
            assert rec.sigma == sigma_an(p)
            if rec.sigma == 0:
                assert rec.arf == arf_an(p)
