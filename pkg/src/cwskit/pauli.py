"""Exact n-qubit Pauli operators in binary-symplectic form.

An operator is a pair of bit masks plus a power of i:

    operator = i**phase * product over qubits of L_a

where L_a is the Hermitian single-qubit letter selected by the mask bits
(x bit only -> X, z bit only -> Z, both -> Y, neither -> identity), and
bit a-1 of a mask belongs to qubit a.  Qubit labels are 1-based on every
public surface.  The letters obey Y = iXZ, so rewriting an operator in
the X-before-Z normal form costs one extra factor of i per Y letter;
that bookkeeping is confined to `mul`.

Everything here is immutable and side-effect free.
"""

from __future__ import annotations

import itertools
import re
from dataclasses import dataclass
from typing import Iterable, Iterator

from ._masks import mask_of, vertices_of

# i**k for k = 0..3, as exact complex values.
_PHASE_VALUES = (1 + 0j, 1j, -1 + 0j, -1j)

_PHASE_TOKENS = {"+": 0, "i": 1, "-": 2, "-i": 3}
_PHASE_PREFIXES = {0: "", 1: "i ", 2: "- ", 3: "-i "}

_LETTER_BITS = {"X": (1, 0), "Y": (1, 1), "Z": (0, 1)}
_TOKEN_RE = re.compile(r"([XYZ])([1-9][0-9]*)")


@dataclass(frozen=True)
class PauliOperator:
    """A signed Pauli on n qubits; `phase` is the exponent of i."""

    n: int
    x: int
    z: int
    phase: int = 0

    def __post_init__(self) -> None:
        if self.n < 1:
            raise ValueError("need at least one qubit")
        full = (1 << self.n) - 1
        if not 0 <= self.x <= full or not 0 <= self.z <= full:
            raise ValueError(f"mask outside {self.n}-qubit range")
        object.__setattr__(self, "phase", self.phase % 4)

    @property
    def y_count(self) -> int:
        return (self.x & self.z).bit_count()

    def support(self) -> frozenset[int]:
        """1-based labels of the qubits acted on non-trivially."""
        return vertices_of(self.x | self.z)


def identity(n: int) -> PauliOperator:
    return PauliOperator(n, 0, 0, 0)


def x_on(n: int, qubits: Iterable[int]) -> PauliOperator:
    return PauliOperator(n, mask_of(qubits, n), 0, 0)


def z_on(n: int, qubits: Iterable[int]) -> PauliOperator:
    return PauliOperator(n, 0, mask_of(qubits, n), 0)


def phase_value(k: int) -> complex:
    """The exact complex value of i**k."""
    return _PHASE_VALUES[k % 4]


def mul(p: PauliOperator, q: PauliOperator) -> PauliOperator:
    """Exact operator product p*q.

    Phase accounting: convert each factor to X-before-Z normal form
    (one i per Y letter), pick up (-1) for every Z in p that hops over
    an X in q, then convert the result back to letter form.
    """
    if p.n != q.n:
        raise ValueError("qubit counts differ")
    x = p.x ^ q.x
    z = p.z ^ q.z
    phase = (
        p.phase
        + q.phase
        + (p.x & p.z).bit_count()
        + (q.x & q.z).bit_count()
        + 2 * ((p.z & q.x).bit_count())
        - (x & z).bit_count()
    ) % 4
    return PauliOperator(p.n, x, z, phase)


def adjoint(p: PauliOperator) -> PauliOperator:
    # The letter part is Hermitian, so only the phase conjugates.
    return PauliOperator(p.n, p.x, p.z, -p.phase)


def commutes(p: PauliOperator, q: PauliOperator) -> bool:
    """True iff the symplectic form x_p.z_q + z_p.x_q vanishes mod 2."""
    if p.n != q.n:
        raise ValueError("qubit counts differ")
    return ((p.x & q.z).bit_count() + (p.z & q.x).bit_count()) % 2 == 0


def weight(p: PauliOperator) -> int:
    """Number of qubits acted on by a non-identity letter."""
    return (p.x | p.z).bit_count()


def is_hermitian(p: PauliOperator) -> bool:
    # With Y stored as the Hermitian letter, only the overall sign matters.
    return p.phase % 2 == 0


def enumerate_errors(n: int, d: int) -> Iterator[PauliOperator]:
    """Yield every phase-free Hermitian Pauli acting on exactly d qubits.

    Order: supports ascend lexicographically as index tuples, then the
    letters run through X < Y < Z with the last qubit varying fastest.
    There are 3**d * C(n, d) operators in total.
    """
    if not 0 <= d <= n:
        raise ValueError(f"weight {d} outside 0..{n}")
    for support in itertools.combinations(range(1, n + 1), d):
        for letters in itertools.product("XYZ", repeat=d):
            x = 0
            z = 0
            for qubit, letter in zip(support, letters):
                xb, zb = _LETTER_BITS[letter]
                bit = 1 << (qubit - 1)
                if xb:
                    x |= bit
                if zb:
                    z |= bit
            yield PauliOperator(n, x, z, 0)


def parse_label(s: str, n: int) -> PauliOperator:
    """Parse a whitespace-separated label such as "-i Y1 Z4" or "I".

    An optional leading phase token from {+, -, i, -i} is followed either
    by the single token I or by letter-index tokens with 1-based indices.
    A qubit index may appear at most once.
    """
    tokens = s.split()
    phase = 0
    if tokens and tokens[0] in _PHASE_TOKENS:
        phase = _PHASE_TOKENS[tokens[0]]
        tokens = tokens[1:]
    if not tokens:
        raise ValueError(f"label {s!r} has no Pauli body")
    if tokens == ["I"]:
        return PauliOperator(n, 0, 0, phase)
    x = 0
    z = 0
    seen: set[int] = set()
    for token in tokens:
        m = _TOKEN_RE.fullmatch(token)
        if m is None:
            raise ValueError(f"bad token {token!r} in label {s!r}")
        qubit = int(m.group(2))
        if not 1 <= qubit <= n:
            raise ValueError(f"qubit {qubit} outside 1..{n} in label {s!r}")
        if qubit in seen:
            raise ValueError(f"qubit {qubit} repeated in label {s!r}")
        seen.add(qubit)
        xb, zb = _LETTER_BITS[m.group(1)]
        bit = 1 << (qubit - 1)
        if xb:
            x |= bit
        if zb:
            z |= bit
    return PauliOperator(n, x, z, phase)


def render_label(p: PauliOperator) -> str:
    """Canonical label: phase prefix, then letters by ascending qubit."""
    parts = []
    for qubit in range(1, p.n + 1):
        bit = 1 << (qubit - 1)
        xb = bool(p.x & bit)
        zb = bool(p.z & bit)
        if xb and zb:
            parts.append(f"Y{qubit}")
        elif xb:
            parts.append(f"X{qubit}")
        elif zb:
            parts.append(f"Z{qubit}")
    body = " ".join(parts) if parts else "I"
    return _PHASE_PREFIXES[p.phase] + body
