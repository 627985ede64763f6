"""Exact sparse sums of Pauli operators and what the code does with them.

A `PauliSum` maps phase-free Pauli keys (mask pairs) to exact complex
rational coefficients; any i-power carried by an operator is folded into
its coefficient, so equal sums compare equal structurally.  Every
coefficient arising here is dyadic (denominators are powers of two), and
`Fraction` keeps the arithmetic exact without caring.

The code projector is built twice on purpose: once from the published
product of stabilizer-element factors, once as the sum of codeword
projectors, and the two expansions must agree term for term.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import reduce
from typing import Iterable, Union

import numpy as np

from ._parallel import run_chunks
from .cwscode import CwsCode, _codeword_masks, matrix_element, the_9_12_3
from .graphstate import DenseState, apply_pauli, loop_graph, stabilizer_element, _stabilizer_table
from .pauli import PauliOperator, enumerate_errors

_Scalar = Union[int, Fraction, "Coeff"]


@dataclass(frozen=True)
class Coeff:
    """An exact complex number with rational real and imaginary parts."""

    re: Fraction = Fraction(0)
    im: Fraction = Fraction(0)

    def __add__(self, other: "Coeff") -> "Coeff":
        return Coeff(self.re + other.re, self.im + other.im)

    def __neg__(self) -> "Coeff":
        return Coeff(-self.re, -self.im)

    def __mul__(self, other: "Coeff") -> "Coeff":
        return Coeff(
            self.re * other.re - self.im * other.im,
            self.re * other.im + self.im * other.re,
        )

    def rotated(self, k: int) -> "Coeff":
        """self times i**k."""
        k %= 4
        if k == 0:
            return self
        if k == 1:
            return Coeff(-self.im, self.re)
        if k == 2:
            return Coeff(-self.re, -self.im)
        return Coeff(self.im, -self.re)

    def conjugate(self) -> "Coeff":
        return Coeff(self.re, -self.im)

    def __bool__(self) -> bool:
        return bool(self.re) or bool(self.im)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, Coeff):
            return self.re == other.re and self.im == other.im
        if isinstance(other, (int, Fraction)):
            return self.im == 0 and self.re == other
        return NotImplemented

    def __hash__(self) -> int:
        return hash((self.re, self.im))

    def __complex__(self) -> complex:
        return float(self.re) + 1j * float(self.im)

    def __str__(self) -> str:
        if self.im == 0:
            return str(self.re)
        if self.re == 0:
            return f"{self.im} i"
        return f"{self.re} + {self.im} i"


def coeff(value: _Scalar) -> Coeff:
    if isinstance(value, Coeff):
        return value
    return Coeff(Fraction(value), Fraction(0))


@dataclass(frozen=True)
class PauliSum:
    """Canonical term list: ((x_mask, z_mask), coefficient), keys sorted.

    Construction merges duplicate keys and drops zero coefficients, so
    structural equality is equality of operators.
    """

    n: int
    terms: tuple[tuple[tuple[int, int], Coeff], ...]

    def __post_init__(self) -> None:
        full = (1 << self.n) - 1
        merged: dict[tuple[int, int], Coeff] = {}
        for (x, z), c in self.terms:
            if not 0 <= x <= full or not 0 <= z <= full:
                raise ValueError(f"mask outside {self.n}-qubit range")
            key = (x, z)
            merged[key] = merged[key] + c if key in merged else c
        canon = tuple(sorted((k, c) for k, c in merged.items() if c))
        object.__setattr__(self, "terms", canon)


def zero_sum(n: int) -> PauliSum:
    return PauliSum(n, ())


def identity_sum(n: int, c: _Scalar = 1) -> PauliSum:
    return PauliSum(n, (((0, 0), coeff(c)),))


def from_pauli(p: PauliOperator, c: _Scalar = 1) -> PauliSum:
    """p as a one-term sum; the i-power of p moves into the coefficient."""
    return PauliSum(p.n, (((p.x, p.z), coeff(c).rotated(p.phase)),))


def sum_add(x: PauliSum, y: PauliSum) -> PauliSum:
    if x.n != y.n:
        raise ValueError("qubit counts differ")
    return PauliSum(x.n, x.terms + y.terms)


def sum_scale(x: PauliSum, c: _Scalar) -> PauliSum:
    s = coeff(c)
    return PauliSum(x.n, tuple((k, v * s) for k, v in x.terms))


def sum_mul(x: PauliSum, y: PauliSum) -> PauliSum:
    """Exact product, expanding all pairwise Pauli products.

    The phase arithmetic matches `pauli.mul`: one i per Y letter on each
    side, a sign per Z-over-X hop, minus one i per Y in the result key.
    """
    if x.n != y.n:
        raise ValueError("qubit counts differ")
    acc: dict[tuple[int, int], Coeff] = {}
    for (x1, z1), c1 in x.terms:
        y1 = (x1 & z1).bit_count()
        for (x2, z2), c2 in y.terms:
            xm = x1 ^ x2
            zm = z1 ^ z2
            k = (
                y1
                + (x2 & z2).bit_count()
                + 2 * (z1 & x2).bit_count()
                - (xm & zm).bit_count()
            ) % 4
            key = (xm, zm)
            term = (c1 * c2).rotated(k)
            acc[key] = acc[key] + term if key in acc else term
    return PauliSum(x.n, tuple(acc.items()))


def adjoint(x: PauliSum) -> PauliSum:
    # term keys are Hermitian, so only coefficients conjugate
    return PauliSum(x.n, tuple((k, c.conjugate()) for k, c in x.terms))


def trace(x: PauliSum) -> Coeff:
    """Tr(x) = 2**n times the identity coefficient; all other terms are traceless."""
    for key, c in x.terms:
        if key == (0, 0):
            return c * coeff(1 << x.n)
    return Coeff()


def coefficient_of(x: PauliSum, p: PauliOperator) -> Coeff:
    """The exact coefficient with which the operator p appears in x."""
    if p.n != x.n:
        raise ValueError("qubit counts differ")
    for key, c in x.terms:
        if key == (p.x, p.z):
            return c.rotated(-p.phase)
    return Coeff()


def apply_sum(state: DenseState, x: PauliSum) -> np.ndarray:
    """x|state> as a scaled amplitude array.

    General sums do not preserve normalization, so the result is a bare
    array in the same sqrt(2**n) scaling as DenseState.  Dyadic
    coefficients at these sizes stay exact in double precision.
    """
    if x.n != state.n:
        raise ValueError("qubit counts differ")
    out = np.zeros_like(state.amps)
    for (xm, zm), c in x.terms:
        out += complex(c) * apply_pauli(state, PauliOperator(x.n, xm, zm, 0)).amps
    return out


# ---------------------------------------------------------------------------
# The ((9,12,3)) projector


def _g(vertices: Iterable[int]) -> PauliSum:
    return from_pauli(stabilizer_element(loop_graph(9), vertices))


def build_A() -> PauliSum:
    """The 12-term anchor operator of the ((9,12,3)) projector.

    A = G_14 (1 - G_36 + G_39 - G_69 + 2 G_369 + 2 G_9)
      + G_17 (1 - G_39 + G_36 - G_69 + 2 G_369 + 2 G_6)
    """
    one = identity_sum(9)
    left = reduce(
        sum_add,
        (
            one,
            sum_scale(_g((3, 6)), -1),
            _g((3, 9)),
            sum_scale(_g((6, 9)), -1),
            sum_scale(_g((3, 6, 9)), 2),
            sum_scale(_g((9,)), 2),
        ),
    )
    right = reduce(
        sum_add,
        (
            one,
            sum_scale(_g((3, 9)), -1),
            _g((3, 6)),
            sum_scale(_g((6, 9)), -1),
            sum_scale(_g((3, 6, 9)), 2),
            sum_scale(_g((6,)), 2),
        ),
    )
    return sum_add(sum_mul(_g((1, 4)), left), sum_mul(_g((1, 7)), right))


def build_projector() -> PauliSum:
    """P = 2**-10 (1 + G_38)(1 + G_62)(1 + G_95) A (A + 8)."""
    one = identity_sum(9)
    a = build_A()
    p = sum_add(one, _g((3, 8)))
    p = sum_mul(p, sum_add(one, _g((6, 2))))
    p = sum_mul(p, sum_add(one, _g((9, 5))))
    p = sum_mul(p, a)
    p = sum_mul(p, sum_add(a, identity_sum(9, 8)))
    return sum_scale(p, Fraction(1, 1 << 10))


def projector_from_codewords(code: CwsCode) -> PauliSum:
    """Sum of codeword projectors, expanded in the stabilizer basis.

    Conjugating a stabilizer element G_U by Z on codeword c flips its
    sign iff |U & c| is odd, so the coefficient of G_U in the projector
    is the signed codeword count over 2**n.
    """
    n = code.n
    table = _stabilizer_table(code.graph)
    masks = _codeword_masks(code)
    scale = Fraction(1, 1 << n)
    terms = []
    for u in range(1 << n):
        t = sum(-1 if (u & c).bit_count() & 1 else 1 for c in masks)
        if t:
            z, ph = table[u]
            terms.append(((u, z), coeff(t * scale).rotated(ph)))
    return PauliSum(n, tuple(terms))


def stabilizes(x: PauliSum | PauliOperator, code: CwsCode) -> tuple[bool, ...]:
    """Per-codeword +1-eigenvalue test for a single stabilizer element."""
    if isinstance(x, PauliOperator):
        p = x
    else:
        if len(x.terms) != 1:
            raise ValueError("not a single Pauli term")
        (xm, zm), c = x.terms[0]
        for k in range(4):
            if coeff(1).rotated(k) == c:
                p = PauliOperator(x.n, xm, zm, k)
                break
        else:
            raise ValueError("not a single Pauli term with unit coefficient")
    return tuple(
        matrix_element(code, i, i, p) == 1 for i in range(1, code.size + 1)
    )


# ---------------------------------------------------------------------------
# Weight enumerator


@dataclass(frozen=True)
class EnumeratorResult:
    """A_d = sum of squared error traces of the projector, d = 0..n."""

    a: tuple[int, ...]


def weight_enumerator(code: CwsCode, method: str = "fast", *, threads: int = 1) -> EnumeratorResult:
    """The integer vector (A_0, ..., A_n) for the code projector.

    fast streams the 2**n stabilizer elements and squares their signed
    codeword counts; brute expands the projector and sums Tr(P E)**2
    over every Hermitian error E of each weight.  Both are exact and
    must agree.
    """
    n = code.n
    if method == "fast":
        table = _stabilizer_table(code.graph)
        masks = _codeword_masks(code)
        a = [0] * (n + 1)
        for u in range(1 << n):
            z, _ = table[u]
            t = sum(-1 if (u & c).bit_count() & 1 else 1 for c in masks)
            a[(u | z).bit_count()] += t * t
        return EnumeratorResult(tuple(a))
    if method == "brute":
        if n > 12:
            raise ValueError("brute enumeration limited to 12 qubits")
        lookup = dict(projector_from_codewords(code).terms)
        scale = 1 << n

        def tally(chunk) -> int:
            total = 0
            for e in chunk:
                c = lookup.get((e.x, e.z))
                if c is not None:
                    if c.im != 0:
                        raise RuntimeError("projector coefficient not real")
                    tr = c.re * scale
                    if tr.denominator != 1:
                        raise RuntimeError("error trace not an integer")
                    total += int(tr) ** 2
            return total

        a = []
        for d in range(n + 1):
            errors = list(enumerate_errors(n, d))
            a.append(sum(run_chunks(tally, errors, threads)))
        return EnumeratorResult(tuple(a))
    raise ValueError(f"unknown method {method!r}")
