"""Finite abelian torus quotient, its per-reflection data, and characters.

The group is presented as a product of cyclic groups Z/d_1 x ... x Z/d_r
with order prime to the residue characteristic p.  Each affine reflection
carries an involutive conjugation action (an exponent matrix) and a
subgroup given by generator exponent vectors.  Characters are stored as
exact rational phases in Q/Z, so equality, twisting and restriction
triviality are plain integer arithmetic.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Mapping, Sequence

DEFAULT_ENUMERATION_BOUND = 1_000_000


class TorusError(ValueError):
    """Invalid torus datum."""


class UnknownReflectionError(TorusError):
    """Reflection label not present in the datum."""


class EnumerationBoundError(RuntimeError):
    """Group too large for exhaustive character enumeration."""


Vector = tuple[int, ...]


@dataclass(frozen=True, eq=True)
class TorusDatum:
    """Generator orders, conjugation actions and rank-one subgroups.

    ``actions[s][i]`` is the exponent vector of the image of generator i
    under conjugation by reflection s; ``subgroups[s]`` lists generator
    exponent vectors of the subgroup controlling the quadratic relation
    at s.
    """

    residue_char: int
    orders: tuple[int, ...]
    actions: Mapping[str, tuple[Vector, ...]]
    subgroups: Mapping[str, tuple[Vector, ...]]

    def __post_init__(self) -> None:
        p = self.residue_char
        if p < 2 or any(p % k == 0 for k in range(2, int(p**0.5) + 1)):
            raise TorusError("residue characteristic %r is not prime" % p)
        for d in self.orders:
            if d < 1:
                raise TorusError("generator order %r must be positive" % d)
            if math.gcd(d, p) != 1:
                raise TorusError("generator order %d not coprime to p=%d" % (d, p))
        r = len(self.orders)
        for s, matrix in self.actions.items():
            if len(matrix) != r or any(len(v) != r for v in matrix):
                raise TorusError("action for %r is not a %dx%d table" % (s, r, r))
            self._check_endomorphism(s, matrix)
            self._check_involutive(s, matrix)
        if set(self.subgroups) != set(self.actions):
            raise TorusError("actions and subgroups must cover the same reflections")
        for s, gens in self.subgroups.items():
            for v in gens:
                if len(v) != r:
                    raise TorusError("subgroup generator for %r has wrong length" % s)

    def _check_endomorphism(self, s: str, matrix: tuple[Vector, ...]) -> None:
        for i, image in enumerate(matrix):
            for j, e in enumerate(image):
                if (self.orders[i] * e) % self.orders[j] != 0:
                    raise TorusError(
                        "action for %r is not well defined on generator %d" % (s, i)
                    )

    def _check_involutive(self, s: str, matrix: tuple[Vector, ...]) -> None:
        square = compose_exponent_maps(self, matrix, matrix)
        for i, image in enumerate(square):
            expected = tuple(1 if j == i else 0 for j in range(len(self.orders)))
            if not vectors_equal(self, image, expected):
                raise TorusError("action for %r is not involutive" % s)

    @property
    def rank(self) -> int:
        return len(self.orders)

    @property
    def group_order(self) -> int:
        return math.prod(self.orders)

    def reflection_labels(self) -> frozenset[str]:
        return frozenset(self.actions)

    def action(self, s: str) -> tuple[Vector, ...]:
        try:
            return self.actions[s]
        except KeyError:
            raise UnknownReflectionError("unknown reflection %r" % s) from None

    def subgroup(self, s: str) -> tuple[Vector, ...]:
        try:
            return self.subgroups[s]
        except KeyError:
            raise UnknownReflectionError("unknown reflection %r" % s) from None


def vectors_equal(datum: TorusDatum, x: Vector, y: Vector) -> bool:
    """Equality of group elements written as exponent vectors."""
    return all((a - b) % d == 0 for a, b, d in zip(x, y, datum.orders))


def compose_exponent_maps(
    datum: TorusDatum, outer: Sequence[Vector], inner: Sequence[Vector]
) -> tuple[Vector, ...]:
    """Exponent table of g -> outer(inner(g)), reduced mod the orders."""
    r = datum.rank
    rows = []
    for i in range(r):
        acc = [0] * r
        for j, coeff in enumerate(inner[i]):
            for k in range(r):
                acc[k] += coeff * outer[j][k]
        rows.append(tuple(e % d for e, d in zip(acc, datum.orders)))
    return tuple(rows)


@dataclass(frozen=True, eq=True)
class Character:
    """Character of the torus quotient, as exact phases in Q/Z.

    The value on the element with exponent vector x is the root of unity
    with phase sum_i x_i * phases[i] (mod 1).  Phases are kept reduced in
    [0, 1), so equality is componentwise.
    """

    phases: tuple[Fraction, ...]


def character(datum: TorusDatum, phases: Iterable[Fraction | int | str]) -> Character:
    """Validated constructor: phase denominators must divide the orders."""
    normalized = tuple(Fraction(ph) % 1 for ph in phases)
    if len(normalized) != datum.rank:
        raise TorusError(
            "expected %d phases, got %d" % (datum.rank, len(normalized))
        )
    for ph, d in zip(normalized, datum.orders):
        if d % ph.denominator != 0:
            raise TorusError(
                "phase %s has denominator not dividing generator order %d" % (ph, d)
            )
    return Character(normalized)


def trivial_character(datum: TorusDatum) -> Character:
    return Character(tuple(Fraction(0) for _ in range(datum.rank)))


def pair(char: Character, vector: Sequence[int]) -> Fraction:
    """Phase of the character value on the element with this exponent vector."""
    if len(vector) != len(char.phases):
        raise TorusError(
            "exponent vector has %d components, expected %d"
            % (len(vector), len(char.phases))
        )
    return sum((x * ph for x, ph in zip(vector, char.phases)), Fraction(0)) % 1


def twist(datum: TorusDatum, char: Character, s: str) -> Character:
    """The character g -> char(conjugate of g by s)."""
    matrix = datum.action(s)
    return Character(tuple(pair(char, row) for row in matrix))


def is_trivial_on_subgroup(datum: TorusDatum, char: Character, s: str) -> bool:
    return all(pair(char, g) == 0 for g in datum.subgroup(s))


def c_value(datum: TorusDatum, char: Character, s: str) -> int:
    """Value of the character on the averaged subgroup sum: 1 or 0.

    The subgroup has order prime to p, so averaging over it gives exactly
    1 on a trivial restriction and 0 otherwise; no root-of-unity sums are
    needed.
    """
    return 1 if is_trivial_on_subgroup(datum, char, s) else 0


def s_lambda(datum: TorusDatum, labels: Sequence[str], char: Character) -> frozenset[str]:
    """Reflections where the quadratic-relation constant acts invertibly."""
    return frozenset(s for s in labels if c_value(datum, char, s) == 1)


def enumerate_characters(
    datum: TorusDatum, bound: int = DEFAULT_ENUMERATION_BOUND
) -> list[Character]:
    """All characters in lexicographic phase order."""
    total = datum.group_order
    if total > bound:
        raise EnumerationBoundError(
            "group order %d exceeds enumeration bound %d" % (total, bound)
        )
    out: list[Character] = []
    phases = [Fraction(0)] * datum.rank

    def rec(i: int) -> None:
        if i == datum.rank:
            out.append(Character(tuple(phases)))
            return
        d = datum.orders[i]
        for k in range(d):
            phases[i] = Fraction(k, d)
            rec(i + 1)

    rec(0)
    return out
