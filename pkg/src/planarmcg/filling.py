"""Homology of the Lefschetz fibration of a factorization, and the model families.

A positive factorization on D_n gives a 4-manifold: D_n x D^2 plus one
2-handle per factor.  D_n x D^2 has Euler characteristic 1 - n and free H_1
on the holes, and each handle kills the homology class of its curve, which
is the indicator vector of the enclosed holes.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Mapping, Sequence

from .factorization import Factorization, conjugator_words
from .mcg import compose, curve
from .pa import curve_lengths, stretch_from_z


@dataclass(frozen=True)
class FillingInvariants:
    euler: int
    h1_rank: int
    h1_torsion: tuple[int, ...]
    relation_matrix: tuple[tuple[int, ...], ...] = ()

    def summary(self) -> dict:
        return {"euler": self.euler, "h1_rank": self.h1_rank, "h1_torsion": list(self.h1_torsion)}


def _smallest(A, t, cells):
    best = None
    for i, j in cells:
        if A[i][j] and (best is None or abs(A[i][j]) < abs(A[best[0]][best[1]])):
            best = (i, j)
    return best


def _move_to_pivot(A, t, ij) -> None:
    i, j = ij
    A[t], A[i] = A[i], A[t]
    for r in A:
        r[t], r[j] = r[j], r[t]


def smith_diagonal(rows: Sequence[Sequence[int]]) -> list[int]:
    """Nonzero invariant factors d_1 | d_2 | ... of an integer matrix."""
    A = [[int(a) for a in r] for r in rows]
    if not A or not A[0]:
        return []
    m, n = len(A), len(A[0])
    diag = []
    for t in range(min(m, n)):
        piv = _smallest(A, t, ((i, j) for i in range(t, m) for j in range(t, n)))
        if piv is None:
            break
        _move_to_pivot(A, t, piv)
        while True:
            p = A[t][t]
            for i in range(t + 1, m):
                q = A[i][t] // p
                if q:
                    A[i] = [a - q * b for a, b in zip(A[i], A[t])]
            for j in range(t + 1, n):
                q = A[t][j] // p
                if q:
                    for r in A:
                        r[j] -= q * r[t]
            # leftover remainders are smaller than the pivot
            rest = _smallest(A, t, [(i, t) for i in range(t + 1, m)] + [(t, j) for j in range(t + 1, n)])
            if rest is not None:
                _move_to_pivot(A, t, rest)
                continue
            bad = next((i for i in range(t + 1, m) for j in range(t + 1, n) if A[i][j] % p), None)
            if bad is None:
                break
            A[t] = [a + b for a, b in zip(A[t], A[bad])]
        diag.append(abs(A[t][t]))
    return diag


def relation_matrix(F: Factorization) -> tuple[tuple[int, ...], ...]:
    return tuple(tuple(1 if i in c.enclosed else 0 for i in range(1, F.n + 1)) for c in F.curves)


def euler_characteristic(F: Factorization) -> int:
    return 1 - F.n + len(F)


def h1(F: Factorization) -> FillingInvariants:
    R = relation_matrix(F)
    d = smith_diagonal(R) if R else []
    return FillingInvariants(
        euler=euler_characteristic(F),
        h1_rank=F.n - len(d),
        h1_torsion=tuple(sorted(x for x in d if x > 1)),
        relation_matrix=R,
    )


filling_invariants = h1


def compare_invariants(a: FillingInvariants, b: FillingInvariants) -> bool:
    return (a.euler, a.h1_rank, a.h1_torsion) == (b.euler, b.h1_rank, b.h1_torsion)


class FamilyParameterError(ValueError):
    pass


# the base pair's affine representative has z = 4
B2_TARGET = stretch_from_z(4)


@lru_cache(maxsize=None)
def b2_conjugator(n: int, k: int, p: int, q: int, bound: int = 4, iters: int = 20) -> tuple[int, ...]:
    """Shortest half-twist word (then lexicographic) putting B2 at z = 4 from B1."""
    N = n + p + q
    B1 = curve(range(k, n + q + 1), N)
    S2 = tuple(range(1, k + q)) + (n + q,)
    t1 = B1.twist
    seen = set()
    for g in conjugator_words(N, bound):
        c = curve(S2, N, g)
        if c in seen:
            continue
        seen.add(c)
        f = compose(t1, c.twist)
        # cheap reject before the full run
        L = curve_lengths(f, B1, 8)
        if not L[-2] or abs(L[-1] / L[-2] - B2_TARGET) > 0.05 * B2_TARGET:
            continue
        L = curve_lengths(f, B1, iters)
        if abs(L[-1] / L[-2] - B2_TARGET) <= 0.01 * B2_TARGET:
            return g
    raise RuntimeError(f"no B2 conjugator of length <= {bound} for {(n, k, p, q)}")


def _exponents(m, N: int, skip: int) -> dict[int, int]:
    if m is None:
        m = 0
    if isinstance(m, int):
        out = {i: m for i in range(1, N + 1) if i != skip}
    elif isinstance(m, Mapping):
        out = {int(i): int(v) for i, v in m.items() if v is not None}
    else:
        m = list(m)
        if len(m) != N:
            raise FamilyParameterError(f"need {N} exponents, got {len(m)}")
        out = {i: int(v) for i, v in enumerate(m, 1) if v is not None}
    if out.get(skip, 0):
        raise FamilyParameterError(f"hole {skip} carries no boundary twist")
    for i, v in out.items():
        if not 1 <= i <= N:
            raise FamilyParameterError(f"exponent index {i} outside 1..{N}")
        if v < 0:
            raise FamilyParameterError("exponents must be nonnegative")
    out.pop(skip, None)
    return out


def paper_family(n: int, k: int, p: int, q: int, m=None) -> Factorization:
    """tau_1^m_1 ... (no twist at n+q) ... tau_{n+p+q}^m_{n+p+q} tau_B1 tau_B2 on D_{n+p+q}.

    ``m`` is an int (same exponent everywhere), a mapping hole -> exponent,
    or a sequence of length n+p+q whose entry at n+q is None or 0.
    """
    if min(n, k, p, q) < 1 or n < k:
        raise FamilyParameterError("need n, k, p, q >= 1 and n >= k")
    N = n + p + q
    ex = _exponents(m, N, n + q)
    curves = []
    for i in sorted(ex):
        curves.extend([curve((i,), N)] * ex[i])
    curves.append(curve(range(k, n + q + 1), N))
    curves.append(curve(tuple(range(1, k + q)) + (n + q,), N, b2_conjugator(n, k, p, q)))
    return Factorization(tuple(curves), N)


def twist_knot_family(p: int, n: int, k: int, m=None) -> Factorization:
    """q = 1 member with exponent 1 at hole k and at holes n+2..n+p+1.

    ``m`` gives the exponents at the other holes 1..n: an int, a mapping or a
    length-n sequence (its k-th entry is ignored).
    """
    if min(n, k, p) < 1 or n < k:
        raise FamilyParameterError("need p, n, k >= 1 and n >= k")
    if m is None:
        m = 1
    if isinstance(m, int):
        ex = {i: m for i in range(1, n + 1)}
    elif isinstance(m, Mapping):
        ex = {int(i): int(v) for i, v in m.items() if v is not None}
    else:
        m = list(m)
        if len(m) != n:
            raise FamilyParameterError(f"need {n} exponents, got {len(m)}")
        ex = {i: v for i, v in enumerate(m, 1)}
    ex[k] = 1
    for i in range(1, n + 1):
        if ex.get(i) is None or ex[i] < 1:
            raise FamilyParameterError(f"exponent at hole {i} must be >= 1")
    ex.update({j: 1 for j in range(n + 2, n + p + 2)})
    return paper_family(n, k, p, 1, ex)
