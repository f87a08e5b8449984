"""Mapping classes of the disk with n holes and the curves they move.

A mapping class is stored as the automorphism it induces on F_n = pi_1(D_n)
(generator images) plus an integer framing vector.  Boundary twists about
the inner holes act trivially on F_n; the framing vector records them.

Conventions
-----------
* ``compose(f, g)`` is ``f o g``: apply ``g`` first.  Images satisfy
  ``(f o g)(x_i) = f(g(x_i))``.
* Half twists are blackboard (holes slide past each other without turning),
  so ``half_twist(i)`` has framing 0 and the framing of a product transforms
  as ``t(f o g) = t(f) + P_f t(g)`` where ``P_f`` permutes holes the way
  ``f`` does.  With this convention the twist about a curve enclosing the
  hole set S has framing equal to the indicator vector of S, and on pure
  mapping classes the framing is exactly the multiplicity vector M_i.
* Every mapping class built here carries ``braid``: a word in the half
  twists (``i`` = sigma_i, ``-i`` = sigma_i^-1) with the same action on
  curves.  Boundary twists contribute nothing to it.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property, lru_cache
from typing import Iterable, Sequence

from .words import (
    AlphabetMismatchError,
    CyclicWord,
    Letters,
    Word,
    abelian_vector,
    canonical_letters,
    free_reduce,
    invert_letters,
)


class SizeMismatchError(AlphabetMismatchError):
    pass


class BoundaryViolationError(AssertionError):
    pass


def _substitute(images: Sequence[Letters], inv_images: Sequence[Letters], letters: Iterable[int]) -> Letters:
    out: list[int] = []
    ext = out.extend
    for a in letters:
        ext(images[a - 1] if a > 0 else inv_images[-a - 1])
    return free_reduce(out)


def _braid_perm(braid: Sequence[int], n: int) -> tuple[int, ...]:
    """perm[i-1] = hole position that hole i is carried to (1-based values)."""
    # g = g_1 o ... o g_k acts on positions right to left
    perm = list(range(1, n + 1))
    for a in reversed(braid):
        i = abs(a)
        perm = [i + 1 if p == i else i if p == i + 1 else p for p in perm]
    return tuple(perm)


def _aut_from_braid(braid: Sequence[int], n: int) -> tuple[Letters, ...]:
    images = [(i,) for i in range(1, n + 1)]
    for a in braid:
        i = abs(a)
        inv = [invert_letters(w) for w in images]
        if a > 0:
            new_i = _substitute(images, inv, (i, i + 1, -i))
            new_j = images[i - 1]
        else:
            new_i = images[i]
            new_j = _substitute(images, inv, (-(i + 1), i, i + 1))
        images[i - 1], images[i] = new_i, new_j
    return tuple(images)


def _check_braid(braid: Iterable[int], n: int) -> Letters:
    out = tuple(int(a) for a in braid)
    for a in out:
        if a == 0 or abs(a) > n - 1:
            raise ValueError(f"half twist index {abs(a)} out of range 1..{n - 1}")
    return out


@dataclass(frozen=True, eq=False)
class MappingClass:
    images: tuple[Letters, ...]
    framing: tuple[int, ...]
    braid: Letters | None = None

    @property
    def n(self) -> int:
        return len(self.images)

    @cached_property
    def inverse_images(self) -> tuple[Letters, ...]:
        return tuple(invert_letters(w) for w in self.images)

    @cached_property
    def perm(self) -> tuple[int, ...]:
        out = []
        for w in self.images:
            v = abelian_vector(w, self.n)
            out.append(v.index(1) + 1)
        return tuple(out)

    @cached_property
    def key(self) -> tuple:
        return (self.images, self.framing)

    def __eq__(self, other) -> bool:
        if not isinstance(other, MappingClass):
            return NotImplemented
        return equals(self, other)

    def __hash__(self) -> int:
        return hash(self.key)

    def __mul__(self, other: "MappingClass") -> "MappingClass":
        return compose(self, other)

    def __call__(self, w: Word) -> Word:
        return self.act(w)

    def act(self, w: Word) -> Word:
        if w.n != self.n:
            raise SizeMismatchError(f"word on F_{w.n} fed to mapping class of D_{self.n}")
        return Word(self.act_letters(w.letters), self.n)

    def act_letters(self, letters: Iterable[int]) -> Letters:
        return _substitute(self.images, self.inverse_images, letters)

    def is_pure(self) -> bool:
        return self.perm == tuple(range(1, self.n + 1))

    def check(self) -> "MappingClass":
        """Raise unless the outer boundary word and the punctures are respected."""
        n = self.n
        delta = tuple(range(1, n + 1))
        if self.act_letters(delta) != delta:
            raise BoundaryViolationError("mapping class does not fix x1...xn")
        for i, w in enumerate(self.images):
            if len(canonical_letters(w)) != 1:
                raise BoundaryViolationError(f"image of x{i + 1} is not conjugate to a generator")
        return self

    def __repr__(self) -> str:
        imgs = ", ".join(f"x{i + 1}->{Word(w, self.n)}" for i, w in enumerate(self.images))
        return f"MappingClass({imgs}; framing={self.framing})"


def _same_size(f, g) -> None:
    if f.n != g.n:
        raise SizeMismatchError(f"surface sizes {f.n} and {g.n} differ")


@lru_cache(maxsize=None)
def identity(n: int) -> MappingClass:
    return MappingClass(tuple((i,) for i in range(1, n + 1)), (0,) * n, ())


def from_braid(braid: Sequence[int], n: int) -> MappingClass:
    b = free_reduce(_check_braid(braid, n))
    return MappingClass(_aut_from_braid(b, n), (0,) * n, b)


def half_twist(i: int, n: int) -> MappingClass:
    if not 1 <= i <= n - 1:
        raise ValueError(f"half twist index {i} out of range 1..{n - 1}")
    return from_braid((i,), n)


def compose(f: MappingClass, g: MappingClass) -> MappingClass:
    _same_size(f, g)
    images = tuple(f.act_letters(w) for w in g.images)
    t = list(f.framing)
    for i, ti in enumerate(g.framing):
        t[f.perm[i] - 1] += ti
    braid = None
    if f.braid is not None and g.braid is not None:
        braid = free_reduce(f.braid + g.braid)
    return MappingClass(images, tuple(t), braid)


def invert(f: MappingClass) -> MappingClass:
    if f.braid is None:
        raise ValueError("cannot invert a mapping class without a half-twist word")
    braid = invert_letters(f.braid)
    t = tuple(-f.framing[p - 1] for p in f.perm)
    return MappingClass(_aut_from_braid(braid, f.n), t, braid)


def equals(f: MappingClass, g: MappingClass) -> bool:
    _same_size(f, g)
    return f.framing == g.framing and f.images == g.images


def power(f: MappingClass, k: int) -> MappingClass:
    base = f if k >= 0 else invert(f)
    out = identity(f.n)
    for _ in range(abs(k)):
        out = compose(out, base)
    return out


def conjugate(g: MappingClass, f: MappingClass) -> MappingClass:
    """g f g^-1."""
    return compose(compose(g, f), invert(g))


def product(classes: Iterable[MappingClass], n: int) -> MappingClass:
    out = identity(n)
    for f in classes:
        out = compose(out, f)
    return out


def _norm_set(S: Iterable[int], n: int) -> tuple[int, ...]:
    s = tuple(sorted(set(int(i) for i in S)))
    if not s:
        raise ValueError("enclosed set must be nonempty")
    if s[0] < 1 or s[-1] > n:
        raise ValueError(f"hole indices {s} outside 1..{n}")
    return s


@lru_cache(maxsize=None)
def gathering_braid(S: tuple[int, ...]) -> Letters:
    """Permutation braid carrying the block min(S)..min(S)+|S|-1 onto S.

    Holes of the block keep their relative order and pass every skipped hole
    with an inverse half twist, so all canonical curves run along the same
    side of the holes they skip (the n-gon convex curves).
    """
    a, m = S[0], len(S)
    word: list[int] = []
    # rightmost block hole moves first so that moves do not collide
    for j in range(m - 1, 0, -1):
        start, target = a + j, S[j]
        segment = list(range(start, target))  # sigma_start first, then start+1, ...
        # apply-first letters go on the right of the word
        word = [-k for k in reversed(segment)] + word
    return tuple(word)


def _full_twist_braid(a: int, b: int) -> Letters:
    return tuple(range(a, b)) * (b - a + 1)


@lru_cache(maxsize=None)
def _block_twist(a: int, b: int, n: int) -> MappingClass:
    w = tuple(range(a, b + 1))
    wi = invert_letters(w)
    images = []
    for k in range(1, n + 1):
        images.append(free_reduce(w + (k,) + wi) if a <= k <= b else (k,))
    t = tuple(1 if a <= k <= b else 0 for k in range(1, n + 1))
    return MappingClass(tuple(images), t, _full_twist_braid(a, b))


@lru_cache(maxsize=None)
def _convex_twist(S: tuple[int, ...], n: int) -> MappingClass:
    a, b = S[0], S[0] + len(S) - 1
    block = _block_twist(a, b, n)
    if S[-1] == b:
        return block
    h = from_braid(gathering_braid(S), n)
    return conjugate(h, block)


def convex_twist(S: Iterable[int], n: int) -> MappingClass:
    return _convex_twist(_norm_set(S, n), n)


def boundary_twist(i: int, n: int) -> MappingClass:
    return convex_twist((i,), n)


def format_braid(braid: Sequence[int]) -> str:
    return " ".join(f"s{a}" if a > 0 else f"s{-a}^-1" for a in braid)


def parse_braid(text: str) -> Letters:
    """Inverse of ``format_braid``; accepts ``"s3 s2^-1"`` and ``"s3s2^-1"``."""
    import re

    text = text.strip()
    out = []
    pos = 0
    for m in re.finditer(r"\s*s(\d+)(\^-1)?\s*", text):
        if m.start() != pos:
            raise ValueError(f"bad half-twist word {text!r} at {pos}")
        i = int(m.group(1))
        out.append(-i if m.group(2) else i)
        pos = m.end()
    if pos != len(text):
        raise ValueError(f"bad half-twist word {text!r} at {pos}")
    return tuple(out)


@dataclass(frozen=True, eq=False)
class Curve:
    """Simple closed curve enclosing the holes ``enclosed``.

    The curve is ``g(c0)`` where ``g`` is the half-twist word ``conjugator``
    and ``c0`` is the canonical convex curve around ``g^-1(enclosed)``.
    Equality and hashing go through the free-homotopy class.
    """

    enclosed: tuple[int, ...]
    conjugator: Letters
    n: int

    def __post_init__(self):
        object.__setattr__(self, "enclosed", _norm_set(self.enclosed, self.n))
        object.__setattr__(self, "conjugator", free_reduce(_check_braid(self.conjugator, self.n)))

    @cached_property
    def base(self) -> tuple[int, ...]:
        perm = _braid_perm(self.conjugator, self.n)
        return tuple(sorted(i for i in range(1, self.n + 1) if perm[i - 1] in self.enclosed))

    @cached_property
    def _carrier(self) -> Letters:
        return free_reduce(self.conjugator + gathering_braid(self.base))

    @cached_property
    def word(self) -> Letters:
        a = self.base[0]
        block = tuple(range(a, a + len(self.base)))
        images = _aut_from_braid(self._carrier, self.n)
        inv = [invert_letters(w) for w in images]
        return _substitute(images, inv, block)

    @cached_property
    def cls(self) -> CyclicWord:
        return CyclicWord(canonical_letters(self.word), self.n)

    @cached_property
    def twist(self) -> MappingClass:
        a = self.base[0]
        block = _block_twist(a, a + len(self.base) - 1, self.n)
        if not self._carrier:
            return block
        return conjugate(from_braid(self._carrier, self.n), block)

    @cached_property
    def inverse_twist(self) -> MappingClass:
        return invert(self.twist)

    @property
    def is_boundary(self) -> bool:
        return len(self.enclosed) == 1

    def sort_key(self) -> tuple:
        return (len(self.enclosed), self.enclosed, self.cls.sort_key())

    def __eq__(self, other) -> bool:
        if not isinstance(other, Curve):
            return NotImplemented
        return self.n == other.n and self.cls.letters == other.cls.letters

    def __hash__(self) -> int:
        return hash((self.n, self.cls.letters))

    def __repr__(self) -> str:
        conj = f" | {format_braid(self.conjugator)}" if self.conjugator else ""
        return f"Curve({set(self.enclosed)}{conj} on D{self.n})"


def curve(S: Iterable[int], n: int, conjugator: Sequence[int] | str = ()) -> Curve:
    if isinstance(conjugator, str):
        conjugator = parse_braid(conjugator)
    return Curve(tuple(S), tuple(conjugator), n)


def apply(f: MappingClass, c: Curve) -> Curve:
    """Image of ``c`` under ``f``."""
    _same_size(f, c)
    if f.braid is None:
        raise ValueError("mapping class has no half-twist word")
    S = tuple(f.perm[i - 1] for i in c.enclosed)
    return Curve(S, free_reduce(f.braid + c.conjugator), c.n)


def twist_about(c: Curve) -> MappingClass:
    return c.twist
