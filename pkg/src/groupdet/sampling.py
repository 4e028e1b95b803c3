"""Seeded random sampling of numeric algebra values for verification runs.

All sampling goes through an explicit ``random.Random`` instance so a fixed
seed reproduces every check bit for bit.
"""

from __future__ import annotations

import random
from fractions import Fraction

from .algebra import AlgebraElement, AlgebraMatrix, default_nvars
from .cyclotomic import Cyclotomic, root_of_unity
from .groups import FiniteGroup


def random_rational(rng: random.Random, span: int = 3) -> Fraction:
    return Fraction(rng.randint(-span, span))

def random_cyclotomic(rng: random.Random, conductor: int, span: int = 2) -> Cyclotomic:
    value = Cyclotomic.zero(conductor)
    for k in range(len(root_of_unity(conductor, 0).coeffs)):
        value = value + root_of_unity(conductor, k) * rng.randint(-span, span)
    return value


def random_element(G: FiniteGroup, rng: random.Random, *, span: int = 3,
                   nvars: int = None, conductor: int = 1) -> AlgebraElement:
    """A numeric element with small integer (or cyclotomic) coefficients."""
    nvars = nvars or default_nvars(G)
    coeffs = {}
    for g in G.elements():
        if conductor == 1:
            coeffs[g] = rng.randint(-span, span)
        else:
            coeffs[g] = random_cyclotomic(rng, conductor, span)
    return AlgebraElement.from_coeff_map(G, coeffs, nvars)


def random_matrix(G: FiniteGroup, size: int, rng: random.Random, *,
                  span: int = 3, nvars: int = None,
                  conductor: int = 1) -> AlgebraMatrix:
    nvars = nvars or default_nvars(G)
    return AlgebraMatrix(G, nvars, [
        [random_element(G, rng, span=span, nvars=nvars, conductor=conductor)
         for _ in range(size)]
        for _ in range(size)])


def random_assignment(G: FiniteGroup, rng: random.Random, *, span: int = 2) -> dict:
    """A full numeric assignment for the group variables."""
    return {g: rng.randint(-span, span) for g in G.elements()}
