import os
import sys

import pytest

sys.path.insert(0, os.path.dirname(__file__))

from gentle_topo.algebra import AnForm, GentleAlgebra, make_an  # noqa: E402


def an(text: str) -> GentleAlgebra:
    return make_an(AnForm.parse(text))


def remark_algebra(degrees=None) -> GentleAlgebra:
    """Four vertices, seven arrows; same surface as A^(2) but not of that form."""
    degrees = degrees or {}
    arrows = [
        ("alpha1", "1", "2"), ("beta1", "1", "2"),
        ("alpha2", "2", "3"), ("beta2", "2", "3"),
        ("alpha3", "3", "4"), ("beta3", "3", "4"),
        ("delta", "4", "1"),
    ]
    rels = [("alpha1", "beta2"), ("beta1", "alpha2"), ("alpha2", "beta3"),
            ("beta2", "alpha3"), ("delta", "alpha1"), ("beta3", "delta")]
    return GentleAlgebra.build(
        ["1", "2", "3", "4"], [(n, s, t, degrees.get(n, 0)) for n, s, t in arrows], rels
    )


def prenotpartial_algebra() -> GentleAlgebra:
    return GentleAlgebra.build(
        ["1", "2", "3", "4"],
        [("alpha", "1", "2", 1), ("gamma", "1", "2", 1), ("beta", "2", "1", 0),
         ("delta", "2", "3", 0), ("eta", "3", "4", 0)],
        [("alpha", "beta"), ("beta", "gamma"), ("gamma", "delta")],
    )


def point_algebra() -> GentleAlgebra:
    return GentleAlgebra.build(["1"], [])


def a2_quiver(d: int = 0) -> GentleAlgebra:
    return GentleAlgebra.build(["1", "2"], [("a", "1", "2", d)])


@pytest.fixture
def remark():
    return remark_algebra()
