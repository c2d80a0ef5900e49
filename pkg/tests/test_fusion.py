import cmath
import math
import random
from itertools import permutations, product

import numpy as np
import pytest

from oracles import schur_jacobi_trudi
from ttreps.errors import NumericalError, ValidationError
from ttreps.fusion import (
    SpecialElement,
    character_table,
    character_value,
    in_fusion_ideal,
    partition_of,
    special_element,
    verify_zeta_identity,
    zeta,
)
from ttreps.lie import INTERIOR, alcove_classify, enumerate_P_k, epsilon, rho
from ttreps.params import KParams
from ttreps.reps import AffineDominantWeight as W


def test_zeta_examples():
    assert zeta(W(1, (0,), 1)) == rho(1) / 3
    assert zeta(W(1, (0,), 1)).to_json() == ["1/6", "-1/6"]
    assert zeta(W(1, (1,), 1)) == 2 * epsilon(1, 1) / 3
    assert zeta(W(2, (0, 0), 0)) == rho(2) / 3


def test_special_element_examples():
    t = special_element(W(1, (0,), 1))
    np.testing.assert_allclose(t.x, [cmath.exp(1j * math.pi / 3), cmath.exp(-1j * math.pi / 3)], atol=1e-15)
    np.testing.assert_allclose(special_element(W(1, (0,), 0)).x, [1j, -1j], atol=1e-15)


def test_special_elements_interior_and_distinct():
    for n in range(1, 4):
        for k in range(5):
            for v in enumerate_P_k(n, k):
                w = W(n, v, k)
                assert alcove_classify(zeta(w)) == INTERIOR
                t = special_element(w)
                assert t.min_separation() > 1e-9
                assert np.allclose(np.abs(t.x), 1, atol=1e-12)
                assert abs(np.prod(t.x) - 1) < 1e-12


def test_zeta_identity_examples_and_sweep():
    assert verify_zeta_identity(KParams((1, 0)))
    assert verify_zeta_identity(KParams((0, 1, 1)))
    for n in range(1, 4):
        for k in product(range(5), repeat=n + 1):
            if sum(k) <= 4:
                assert verify_zeta_identity(KParams(k))


def test_partition_of():
    assert partition_of((1, 0, 2)) == (3, 2, 2, 0)
    assert partition_of(W(2, (0, 1), 3)) == (1, 1, 0)
    with pytest.raises(ValidationError):
        partition_of((-1,))


def test_character_examples():
    t = special_element(W(1, (0,), 1))
    assert abs(character_value((1,), t) - 1) < 1e-12
    assert abs(character_value((0,), t) - 1) < 1e-12
    assert abs(character_value((2,), t)) < 1e-12


def test_character_sl2_against_sine_ratio():
    for k in range(1, 7):
        for lam in range(k + 1):
            t = special_element(W(1, (lam,), k))
            theta = math.pi * (lam + 1) / (k + 2)
            for v in range(8):
                expected = math.sin((v + 1) * theta) / math.sin(theta)
                # power-sum route: x^v + x^{v-2} + ... + x^{-v}
                x = t.x[0]
                direct = sum(x ** (v - 2 * j) for j in range(v + 1))
                assert abs(character_value((v,), t) - expected) < 1e-9
                assert abs(direct - expected) < 1e-9


def test_character_against_jacobi_trudi():
    rng = random.Random(5)
    for _ in range(40):
        n = rng.randint(1, 3)
        v = tuple(rng.randint(0, 3) for _ in range(n))
        phases = rng.sample(range(1, 200), n)
        c = [p / 200 for p in phases]
        c.append(-sum(c))
        x = [cmath.exp(2j * math.pi * a) for a in c]
        t = SpecialElement(tuple(x))
        if t.min_separation() < 1e-3:
            continue
        assert abs(character_value(v, t) - schur_jacobi_trudi(partition_of(v), x)) < 1e-8


def test_character_symmetric_in_entries():
    t = special_element(W(3, (1, 0, 2), 4))
    for mu in [(1, 0, 0), (0, 2, 1), (3, 1, 0)]:
        base = character_value(mu, t)
        for perm in permutations(t.x):
            assert abs(character_value(mu, SpecialElement(perm)) - base) < 1e-10


def test_character_collision_guard():
    with pytest.raises(NumericalError):
        character_value((1,), SpecialElement((1, 1)))


@pytest.mark.parametrize("k", range(1, 5))
def test_fusion_ideal_sl2(k):
    assert in_fusion_ideal((k + 1,), 1, k)
    assert not in_fusion_ideal((0,), 1, k)
    assert not in_fusion_ideal((k,), 1, k)


def test_fusion_ideal_examples():
    assert not in_fusion_ideal((1,), 1, 1)
    for n in range(1, 4):
        for k in range(3):
            assert not in_fusion_ideal((0,) * n, n, k)


def test_fusion_ideal_sl3():
    # (k+1) eps_1 has lambda_1 = k+1 and lies on the affine wall; its character vanishes
    for k in range(1, 4):
        assert in_fusion_ideal((k + 1, 0), 2, k)
        assert not in_fusion_ideal((k, 0), 2, k)


def test_character_table_shape():
    rows = character_table((1,), 1, 2)
    assert [r["Lambda"] for r in rows] == [[0], [1], [2]]
    assert SpecialElement.from_json({"x": rows[0]["t"]}).n == 1
