"""Exact curve lengths under long braid iterations.

Free-group words of iterated pseudo-Anosov images grow geometrically, so
materializing them is hopeless past a dozen steps.  A curve is instead
stored by its normal coordinates on a fixed ideal triangulation and half
twists act by a short sequence of edge flips.  The cyclically reduced word
length of the curve is the number of times it crosses the arcs dual to the
generators, which is a sum of coordinates.

Layout: the n holes sit on a horizontal line with two padding punctures on
each side (big index j = i + 2 for hole i, N = n + 4 punctures in all) and
the outer boundary at infinity.  Edges are ``s[j]`` between punctures j and
j+1, ``d[j]`` straight down from puncture j to infinity and ``u[j]`` straight
up.  The generator x_i is dual to ``d[i + 2]``.
"""

from __future__ import annotations

from typing import Iterable, Sequence


class Lamination:
    __slots__ = ("n", "s", "d", "u")

    def __init__(self, n: int, s=None, d=None, u=None):
        N = n + 4
        self.n = n
        # 1-based arrays with one slot of slack on each side
        self.s = list(s) if s is not None else [0] * (N + 2)
        self.d = list(d) if d is not None else [0] * (N + 2)
        self.u = list(u) if u is not None else [0] * (N + 2)

    @classmethod
    def block_curve(cls, a: int, b: int, n: int) -> "Lamination":
        """Tight curve around holes a..b (1-based hole indices)."""
        lam = cls(n)
        A, B = a + 2, b + 2
        for j in range(A, B + 1):
            lam.d[j] = 1
            lam.u[j] = 1
        lam.s[A - 1] = 1
        lam.s[B] = 1
        return lam

    def copy(self) -> "Lamination":
        return Lamination(self.n, self.s, self.d, self.u)

    def length(self) -> int:
        d = self.d
        return sum(d[i + 2] for i in range(1, self.n + 1))

    def key(self) -> tuple:
        return (tuple(self.s), tuple(self.d), tuple(self.u))

    def _twist(self, j: int, up: list, down: list) -> None:
        s = self.s
        Z = max(up[j - 1] + s[j], s[j - 1] + up[j + 1]) - up[j]
        W = max(down[j] + s[j + 1], s[j] + down[j + 2]) - down[j + 1]
        Y = max(down[j - 1] + s[j], down[j] + Z) - s[j - 1]
        X = max(s[j] + up[j + 2], up[j + 1] + W) - s[j + 1]
        up[j] = up[j + 1]
        down[j + 1] = down[j]
        up[j + 1] = X
        down[j] = Y
        s[j - 1] = Z
        s[j + 1] = W

    def half_twist(self, a: int) -> None:
        """Apply sigma_a (a > 0) or its inverse (a < 0) in place."""
        j = abs(a) + 2
        if a > 0:
            self._twist(j, self.u, self.d)
        else:
            self._twist(j, self.d, self.u)

    def apply_braid(self, braid: Sequence[int]) -> None:
        # the word g_1 ... g_k acts right to left
        for a in reversed(braid):
            self.half_twist(a)


def lamination_of(enclosed_base: Sequence[int], carrier: Iterable[int], n: int) -> Lamination:
    """Curve ``carrier(c)`` where ``c`` is the tight curve around a block."""
    a = enclosed_base[0]
    lam = Lamination.block_curve(a, a + len(enclosed_base) - 1, n)
    lam.apply_braid(tuple(carrier))
    return lam
