"""Free group words over x_1..x_n.

Letters are nonzero ints: ``i`` stands for x_i and ``-i`` for its inverse.
The raw helpers (``free_reduce``, ``invert_letters`` ...) work on plain tuples
and are what the hot loops call; ``Word`` and ``CyclicWord`` wrap them with
the alphabet size so that words from different surfaces cannot be mixed.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

Letters = tuple[int, ...]


class MalformedWordError(ValueError):
    pass


class AlphabetMismatchError(ValueError):
    pass


def free_reduce(letters: Iterable[int]) -> Letters:
    stack: list[int] = []
    push, pop = stack.append, stack.pop
    for a in letters:
        if stack and stack[-1] == -a:
            pop()
        else:
            push(a)
    return tuple(stack)


def invert_letters(letters: Sequence[int]) -> Letters:
    return tuple(-a for a in reversed(letters))


def cyclic_reduce(letters: Sequence[int]) -> Letters:
    w = free_reduce(letters)
    i, j = 0, len(w) - 1
    while i < j and w[i] == -w[j]:
        i += 1
        j -= 1
    return w[i:j + 1]


def _letter_key(a: int) -> int:
    # (index, sign) with positive before negative
    return 2 * a if a > 0 else -2 * a + 1


def _least_rotation(keys: Sequence[int]) -> int:
    """Booth's algorithm: start index of the lexicographically least rotation."""
    s = list(keys) * 2
    n = len(s)
    f = [-1] * n
    k = 0
    for j in range(1, n):
        sj = s[j]
        i = f[j - k - 1]
        while i != -1 and sj != s[k + i + 1]:
            if sj < s[k + i + 1]:
                k = j - i - 1
            i = f[i]
        if sj != s[k + i + 1]:
            if sj < s[k]:
                k = j
            f[j - k] = -1
        else:
            f[j - k] = i + 1
    return k


def _min_rotation(letters: Letters) -> tuple[tuple[int, ...], Letters]:
    keys = [_letter_key(a) for a in letters]
    k = _least_rotation(keys)
    rot = letters[k:] + letters[:k]
    return tuple(keys[k:] + keys[:k]), rot


def canonical_letters(letters: Sequence[int]) -> Letters:
    """Least rotation of the cyclic reduction of ``letters`` or of its inverse."""
    w = cyclic_reduce(letters)
    if not w:
        return ()
    k1, r1 = _min_rotation(w)
    k2, r2 = _min_rotation(invert_letters(w))
    return r1 if k1 <= k2 else r2


def abelian_vector(letters: Iterable[int], n: int) -> tuple[int, ...]:
    v = [0] * n
    for a in letters:
        if a > 0:
            v[a - 1] += 1
        else:
            v[-a - 1] -= 1
    return tuple(v)


def _check(letters: Iterable[int], n: int) -> Letters:
    out = tuple(int(a) for a in letters)
    for a in out:
        if a == 0 or abs(a) > n:
            raise MalformedWordError(f"letter {a} outside alphabet of size {n}")
    return out


@dataclass(frozen=True)
class Word:
    letters: Letters
    n: int

    def __post_init__(self):
        object.__setattr__(self, "letters", _check(self.letters, self.n))

    @classmethod
    def parse(cls, text: str, n: int) -> "Word":
        """Read words like ``"x1 x2 X1"`` or ``"1 2 -1"`` (capital X = inverse)."""
        letters = []
        for tok in text.replace("*", " ").split():
            if tok[0] in "xX":
                idx = int(tok[1:])
                letters.append(idx if tok[0] == "x" else -idx)
            else:
                letters.append(int(tok))
        return cls(tuple(letters), n)

    def __len__(self) -> int:
        return len(self.letters)

    def __iter__(self):
        return iter(self.letters)

    def _same_alphabet(self, other: "Word") -> None:
        if self.n != other.n:
            raise AlphabetMismatchError(f"alphabet sizes {self.n} and {other.n} differ")

    def __mul__(self, other: "Word") -> "Word":
        self._same_alphabet(other)
        return Word(free_reduce(self.letters + other.letters), self.n)

    def inverse(self) -> "Word":
        return Word(invert_letters(self.letters), self.n)

    def reduce(self) -> "Word":
        return reduce(self)

    def __str__(self) -> str:
        if not self.letters:
            return "1"
        return " ".join(f"x{a}" if a > 0 else f"X{-a}" for a in self.letters)


@dataclass(frozen=True)
class CyclicWord:
    """Conjugacy class of a word, stored as its canonical letters."""

    letters: Letters
    n: int

    def __len__(self) -> int:
        return len(self.letters)

    def sort_key(self) -> tuple:
        return (len(self.letters), tuple(_letter_key(a) for a in self.letters))

    def __lt__(self, other: "CyclicWord") -> bool:
        return self.sort_key() < other.sort_key()

    def __str__(self) -> str:
        return "[" + str(Word(self.letters, self.n)) + "]"


def reduce(w: Word) -> Word:
    return Word(free_reduce(w.letters), w.n)


def cyclic_canonical(w: Word) -> CyclicWord:
    return CyclicWord(canonical_letters(w.letters), w.n)


def conjugacy_equal(a: Word, b: Word) -> bool:
    a._same_alphabet(b)
    return canonical_letters(a.letters) == canonical_letters(b.letters)


def abelianize(w: Word) -> tuple[int, ...]:
    return abelian_vector(w.letters, w.n)
