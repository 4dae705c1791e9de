import random
from fractions import Fraction

import pytest

from frickelab import (
    F2SectionFrame,
    F2SectionPoint,
    SectionFrame,
    dihedral,
    f2_param_affine,
    f2_quadric_add,
    f2_quadric_inverse,
    param_affine,
    quadric_add,
    quadric_inverse,
    solve_z,
    ta_power,
)
from frickelab.double_fricke import DenominatorVanishes as F2DenominatorVanishes
from frickelab.sections import DenominatorVanishes


def random_nonzero_rational(rng: random.Random, height: int = 50) -> Fraction:
    num = rng.randint(1, height) * rng.choice((-1, 1))
    return Fraction(num, rng.randint(1, height))


def random_fricke_pair(rng: random.Random, height: int = 50):
    """Two distinct surface points drawn from the affine chart."""
    while True:
        a = param_affine(random_nonzero_rational(rng, height), random_nonzero_rational(rng, height))
        b = param_affine(random_nonzero_rational(rng, height), random_nonzero_rational(rng, height))
        if a.coords != b.coords:
            return a, b


def random_f2_pair(rng: random.Random, height: int = 50):
    while True:
        a = f2_param_affine(random_nonzero_rational(rng, height), random_nonzero_rational(rng, height))
        b = f2_param_affine(random_nonzero_rational(rng, height), random_nonzero_rational(rng, height))
        if a.coords != b.coords:
            return a, b


def section_point_pool(frame: SectionFrame, rng: random.Random, count: int):
    """Rational section points built by group-law combinations of small
    integral generators, seeded with solve_z hits."""
    O = frame.origin
    gens = [
        dihedral(frame, O, "TA"),
        dihedral(frame, O, "TC"),
        dihedral(frame, O, "B"),
        quadric_inverse(frame, ta_power(frame, O, 2)),
    ]
    for x in range(-6, 7):
        gens.extend(solve_z(frame, x))
    pool = [O]
    acc = O
    while len(pool) < count:
        try:
            acc = quadric_add(frame, acc, rng.choice(gens))
        except DenominatorVanishes:
            acc = O
            continue
        pool.append(acc)
    return pool


def f2_section_point_pool(frame: F2SectionFrame, rng: random.Random, count: int):
    O = frame.origin
    n0 = frame.n0
    # the Vieta involutions on the section keep points integral
    a_img = F2SectionPoint(O.x, 9 * n0 * O.x - 2 * n0 - 2 * O.x - O.z, frame)
    c_img = F2SectionPoint(9 * n0 * O.z - 2 * n0 - 2 * O.z - O.x, O.z, frame)
    gens = [a_img, c_img, F2SectionPoint(O.z, O.x, frame), f2_quadric_inverse(frame, a_img)]
    pool = [O]
    acc = O
    while len(pool) < count:
        try:
            acc = f2_quadric_add(frame, acc, rng.choice(gens))
        except F2DenominatorVanishes:
            acc = O
            continue
        pool.append(acc)
    return pool


@pytest.fixture
def rng() -> random.Random:
    return random.Random(20250823)
