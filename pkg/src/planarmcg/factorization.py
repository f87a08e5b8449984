"""Positive Dehn twist factorizations and their multiplicity invariants."""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Iterable, Sequence

import numpy as np

from .mcg import (
    Curve,
    MappingClass,
    SizeMismatchError,
    apply,
    compose,
    curve,
    identity,
    invert,
)


@dataclass(frozen=True)
class Factorization:
    curves: tuple[Curve, ...]
    n: int

    def __post_init__(self):
        object.__setattr__(self, "curves", tuple(self.curves))
        for c in self.curves:
            if c.n != self.n:
                raise SizeMismatchError(f"curve on D{c.n} in a factorization on D{self.n}")

    def __len__(self) -> int:
        return len(self.curves)

    def __iter__(self):
        return iter(self.curves)

    def __getitem__(self, i):
        return self.curves[i]

    def classes(self) -> tuple:
        return tuple(c.cls.letters for c in self.curves)

    def same_curves(self, other: "Factorization") -> bool:
        return self.n == other.n and self.classes() == other.classes()


@dataclass(frozen=True, eq=False)
class MultiplicityProfile:
    M: tuple[int, ...]
    J: np.ndarray = field(repr=False)

    def __post_init__(self):
        J = np.array(self.J, dtype=np.int64)
        J.setflags(write=False)
        object.__setattr__(self, "J", J)

    @property
    def n(self) -> int:
        return len(self.M)

    def joint(self, i: int, j: int) -> int:
        return int(self.J[i - 1, j - 1])

    def pairs(self) -> dict[tuple[int, int], int]:
        """Nonzero off-diagonal entries, 1-based, i < j."""
        out = {}
        for i, j in itertools.combinations(range(1, self.n + 1), 2):
            v = self.joint(i, j)
            if v:
                out[(i, j)] = v
        return out

    def __eq__(self, other) -> bool:
        if not isinstance(other, MultiplicityProfile):
            return NotImplemented
        return self.M == other.M and bool(np.array_equal(self.J, other.J))

    def __hash__(self) -> int:
        return hash((self.M, self.J.tobytes()))


def factorization(items: Iterable, n: int) -> Factorization:
    """Build from Curves, or from (S, conjugator) pairs / bare hole sets."""
    out = []
    for it in items:
        if isinstance(it, Curve):
            out.append(it)
        elif isinstance(it, tuple) and len(it) == 2 and not isinstance(it[0], int):
            out.append(curve(it[0], n, it[1]))
        else:
            out.append(curve(it, n))
    return Factorization(tuple(out), n)


def product(F: Factorization) -> MappingClass:
    out = identity(F.n)
    for c in F.curves:
        out = compose(out, c.twist)
    return out


def multiplicity_profile(F: Factorization) -> MultiplicityProfile:
    n = F.n
    M = [0] * n
    J = np.zeros((n, n), dtype=np.int64)
    for c in F.curves:
        idx = [i - 1 for i in c.enclosed]
        for i in idx:
            M[i] += 1
        J[np.ix_(idx, idx)] += 1
    np.fill_diagonal(J, 0)
    return MultiplicityProfile(tuple(M), J)


def _check_position(F: Factorization, i: int) -> None:
    if not 1 <= i < len(F):
        raise IndexError(f"Hurwitz position {i} outside 1..{len(F) - 1}")


def hurwitz_move(F: Factorization, i: int) -> Factorization:
    """(a, b) at positions i, i+1 becomes (b, tau_b^-1(a))."""
    _check_position(F, i)
    a, b = F.curves[i - 1], F.curves[i]
    new = (b, apply(b.inverse_twist, a))
    return Factorization(F.curves[:i - 1] + new + F.curves[i + 1:], F.n)


def hurwitz_inverse(F: Factorization, i: int) -> Factorization:
    """(a, b) at positions i, i+1 becomes (tau_a(b), a)."""
    _check_position(F, i)
    a, b = F.curves[i - 1], F.curves[i]
    new = (apply(a.twist, b), a)
    return Factorization(F.curves[:i - 1] + new + F.curves[i + 1:], F.n)


def global_conjugate(F: Factorization, f: MappingClass) -> Factorization:
    if f.n != F.n:
        raise SizeMismatchError(f"surface sizes {f.n} and {F.n} differ")
    return Factorization(tuple(apply(f, c) for c in F.curves), F.n)


def verify_relation_disjoint(A: Curve, B: Curve) -> bool:
    ta, tb = A.twist, B.twist
    return compose(ta, tb) == compose(tb, ta)


def conjugator_words(n: int, bound: int):
    """Freely reduced half-twist words of length <= bound, shortest first."""
    letters = [a for i in range(1, n) for a in (i, -i)]
    yield ()
    frontier = [()]
    for _ in range(bound):
        nxt = []
        for w in frontier:
            for a in letters:
                if w and w[-1] == -a:
                    continue
                v = w + (a,)
                nxt.append(v)
                yield v
        frontier = nxt


def verify_relation_lantern(A: Iterable[int], B: Iterable[int], C: Iterable[int], n: int,
                            bound: int = 4) -> tuple[bool, Curve | None]:
    """Search for an A u C curve making the lantern relation hold exactly.

    tau_A tau_B tau_C tau_ABC = tau_AB tau_BC tau_AC, with the AB, BC, ABC
    curves canonical.  Returns (found, witness).
    """
    A, B, C = (frozenset(x) for x in (A, B, C))
    if A & B or B & C or A & C or not (A and B and C):
        raise ValueError("A, B, C must be nonempty and pairwise disjoint")
    lhs = product(factorization([A, B, C, A | B | C], n))
    head = product(factorization([A | B, B | C], n))
    seen = set()
    for g in conjugator_words(n, bound):
        c = curve(A | C, n, g)
        if c in seen:
            continue
        seen.add(c)
        if compose(head, c.twist) == lhs:
            return True, c
    return False, None
