"""Exact operator algebra, the ((9,12,3)) projector, and the enumerator."""

import random
from fractions import Fraction

import numpy as np
import pytest

from cwskit import operatoralg as oa
from cwskit.cwscode import CwsCode, _codeword_masks, the_9_12_3
from cwskit.graphstate import (
    apply_pauli,
    dense_matrix,
    loop_graph,
    stabilizer_element,
    state_vector,
)
from cwskit.pauli import PauliOperator, identity, mul, parse_label, z_on

C = oa.coeff


def dense_sum(x):
    m = np.zeros((1 << x.n, 1 << x.n), dtype=complex)
    for (xm, zm), c in x.terms:
        m += complex(c) * dense_matrix(PauliOperator(x.n, xm, zm, 0))
    return m


def random_coeff(rng):
    return oa.Coeff(
        Fraction(rng.randint(-3, 3), rng.choice((1, 2, 4))),
        Fraction(rng.randint(-2, 2), rng.choice((1, 2))),
    )


def random_sum(rng, n, max_terms=4):
    full = 1 << n
    terms = tuple(
        ((rng.randrange(full), rng.randrange(full)), random_coeff(rng))
        for _ in range(rng.randint(1, max_terms))
    )
    return oa.PauliSum(n, terms)


def test_coeff_arithmetic():
    a = oa.Coeff(Fraction(1, 2), Fraction(-3))
    b = oa.Coeff(Fraction(2), Fraction(1, 4))
    assert a + b == oa.Coeff(Fraction(5, 2), Fraction(-11, 4))
    assert a * b == oa.Coeff(Fraction(7, 4), Fraction(-47, 8))
    assert -a == oa.Coeff(Fraction(-1, 2), Fraction(3))
    assert a.conjugate() == oa.Coeff(Fraction(1, 2), Fraction(3))
    assert a.rotated(1) == oa.Coeff(Fraction(3), Fraction(1, 2))
    assert a.rotated(2) == -a
    assert a.rotated(3) == a.rotated(-1)
    assert a.rotated(4) == a
    assert C(5) == 5 == C(5)
    assert C(Fraction(1, 2)) == Fraction(1, 2)
    assert C(0) != 1 and not C(0)
    assert oa.Coeff(Fraction(0), Fraction(1)) != 1
    assert complex(a) == 0.5 - 3j


def test_pauli_sum_canonicalizes():
    dup = oa.PauliSum(2, (((1, 0), C(1)), ((1, 0), C(2)), ((0, 3), C(0))))
    assert dup.terms == (((1, 0), C(3)),)
    assert oa.PauliSum(2, (((1, 0), C(1)), ((1, 0), C(-1)))) == oa.zero_sum(2)
    with pytest.raises(ValueError):
        oa.PauliSum(2, (((4, 0), C(1)),))


def test_from_pauli_folds_phase():
    p = parse_label("- X1", 2)
    assert oa.from_pauli(p) == oa.sum_scale(oa.from_pauli(parse_label("X1", 2)), -1)
    q = parse_label("i X1 Y5 Z9", 9)
    assert oa.coefficient_of(oa.from_pauli(q), q) == 1
    assert oa.coefficient_of(oa.from_pauli(q, 3), q) == 3


def test_sum_mul_matches_operator_mul():
    rng = random.Random(11)
    full = 1 << 9
    for _ in range(60):
        p = PauliOperator(9, rng.randrange(full), rng.randrange(full), rng.randrange(4))
        q = PauliOperator(9, rng.randrange(full), rng.randrange(full), rng.randrange(4))
        assert oa.sum_mul(oa.from_pauli(p), oa.from_pauli(q)) == oa.from_pauli(mul(p, q))


def test_algebra_laws_against_dense():
    rng = random.Random(12)
    for _ in range(20):
        x = random_sum(rng, 3)
        y = random_sum(rng, 3)
        z = random_sum(rng, 3)
        assert np.allclose(dense_sum(oa.sum_mul(x, y)), dense_sum(x) @ dense_sum(y))
        assert oa.sum_mul(oa.sum_add(x, y), z) == oa.sum_add(oa.sum_mul(x, z), oa.sum_mul(y, z))
        assert oa.sum_mul(x, oa.sum_mul(y, z)) == oa.sum_mul(oa.sum_mul(x, y), z)
        assert oa.adjoint(oa.sum_mul(x, y)) == oa.sum_mul(oa.adjoint(y), oa.adjoint(x))
        assert np.allclose(dense_sum(oa.adjoint(x)), dense_sum(x).conj().T)
        assert complex(oa.trace(x)) == pytest.approx(np.trace(dense_sum(x)))


def test_trace_and_coefficient_lookup():
    assert oa.trace(oa.identity_sum(4, Fraction(3, 8))) == 6
    assert oa.trace(oa.from_pauli(z_on(3, [1]))) == 0
    assert oa.coefficient_of(oa.zero_sum(3), z_on(3, [2])) == 0
    with pytest.raises(ValueError):
        oa.sum_add(oa.zero_sum(2), oa.zero_sum(3))
    with pytest.raises(ValueError):
        oa.sum_mul(oa.zero_sum(2), oa.zero_sum(3))


def test_apply_sum_matches_dense():
    rng = random.Random(13)
    g = loop_graph(3)
    base = state_vector(g)
    for _ in range(15):
        x = random_sum(rng, 3)
        assert np.allclose(oa.apply_sum(base, x), dense_sum(x) @ base.amps)
    with pytest.raises(ValueError):
        oa.apply_sum(base, oa.zero_sum(4))


# The expansion of A multiplied out by hand: G_U G_V = G_(U xor V), so each
# product collapses to a single stabilizer element with the scalar in front.
A_EXPANSION = (
    ((1, 4), 1),
    ((1, 3, 4, 6), -1),
    ((1, 3, 4, 9), 1),
    ((1, 4, 6, 9), -1),
    ((1, 3, 4, 6, 9), 2),
    ((1, 4, 9), 2),
    ((1, 7), 1),
    ((1, 3, 7, 9), -1),
    ((1, 3, 6, 7), 1),
    ((1, 6, 7, 9), -1),
    ((1, 3, 6, 7, 9), 2),
    ((1, 6, 7), 2),
)


def test_build_a_matches_hand_expansion():
    g = loop_graph(9)
    by_hand = oa.zero_sum(9)
    for vertices, k in A_EXPANSION:
        by_hand = oa.sum_add(by_hand, oa.from_pauli(stabilizer_element(g, vertices), k))
    a = oa.build_A()
    assert a == by_hand
    assert len(a.terms) == 12
    assert oa.trace(a) == 0
    assert oa.adjoint(a) == a


def test_build_projector_equals_codeword_projector():
    p = oa.build_projector()
    q = oa.projector_from_codewords(the_9_12_3())
    assert p == q
    assert len(p.terms) == 176


def test_projector_laws():
    p = oa.build_projector()
    assert oa.sum_mul(p, p) == p
    assert oa.adjoint(p) == p
    assert oa.trace(p) == 12
    assert oa.coefficient_of(p, identity(9)) == Fraction(12, 512)


def test_projector_action_on_graph_basis():
    p = oa.build_projector()
    base = state_vector(loop_graph(9))
    for m in _codeword_masks(the_9_12_3()):
        v = apply_pauli(base, PauliOperator(9, 0, m, 0))
        assert np.array_equal(oa.apply_sum(v, p), v.amps)
    stray = apply_pauli(base, z_on(9, [1]))
    assert not oa.apply_sum(stray, p).any()


def test_single_codeword_projector_is_graph_state_projector():
    g = loop_graph(5)
    code = CwsCode(g, (frozenset(),))
    p = oa.projector_from_codewords(code)
    product = oa.identity_sum(5)
    for a in range(1, 6):
        factor = oa.sum_add(oa.identity_sum(5), oa.from_pauli(stabilizer_element(g, (a,))))
        product = oa.sum_mul(product, factor)
    assert p == oa.sum_scale(product, Fraction(1, 32))
    assert oa.sum_mul(p, p) == p
    assert oa.trace(p) == 1


def test_stabilizes_local_elements():
    code = the_9_12_3()
    g = loop_graph(9)
    for pair in ((3, 8), (6, 2), (9, 5)):
        flags = oa.stabilizes(oa.from_pauli(stabilizer_element(g, pair)), code)
        assert flags == (True,) * 12
    # G_1 flips exactly the six codewords containing vertex 1
    flags = oa.stabilizes(stabilizer_element(g, (1,)), code)
    assert flags == (True,) * 6 + (False,) * 6


def test_stabilizes_rejects_non_elements():
    code = the_9_12_3()
    g = loop_graph(9)
    two = oa.sum_add(oa.identity_sum(9), oa.from_pauli(stabilizer_element(g, (1,))))
    with pytest.raises(ValueError):
        oa.stabilizes(two, code)
    with pytest.raises(ValueError):
        oa.stabilizes(oa.from_pauli(stabilizer_element(g, (1,)), 2), code)


EXPECTED_ENUMERATOR = (144, 0, 0, 0, 96, 0, 1536, 3072, 1296, 0)


def test_weight_enumerator_frozen_vector():
    code = the_9_12_3()
    fast = oa.weight_enumerator(code, "fast")
    assert fast.a == EXPECTED_ENUMERATOR
    assert sum(fast.a) == 6144 == (1 << 9) * 12
    assert fast.a[0] == 144 == 12 * 12


def test_weight_enumerator_brute_agrees():
    code = the_9_12_3()
    brute = oa.weight_enumerator(code, "brute")
    assert brute.a == EXPECTED_ENUMERATOR
    assert oa.weight_enumerator(code, "brute", threads=4) == brute


def test_weight_enumerator_random_codes():
    rng = random.Random(14)
    for n in (5, 6):
        g = loop_graph(n)
        for _ in range(5):
            size = rng.randint(1, 4)
            masks = rng.sample(range(1 << n), size)
            code = CwsCode(g, tuple(frozenset(
                a + 1 for a in range(n) if m >> a & 1) for m in masks))
            fast = oa.weight_enumerator(code, "fast")
            assert fast == oa.weight_enumerator(code, "brute")
            assert sum(fast.a) == (1 << n) * size
            assert fast.a[0] == size * size


def test_weight_enumerator_rejects_unknown_method():
    with pytest.raises(ValueError):
        oa.weight_enumerator(the_9_12_3(), "exact")
