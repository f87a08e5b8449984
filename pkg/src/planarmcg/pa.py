"""Nielsen-Thurston type of twist pairs and stretch factor estimates.

For two curves a, b meeting z times and filling their neighbourhood, the
twists generate a copy of a subgroup of SL(2, Z):

    tau_a -> [[1, z], [0, 1]]      tau_b -> [[1, 0], [-z, 1]]

and the trace of the image of a word decides its type.  ``growth_rate``
gives an independent estimate by iterating on an actual curve.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .laminations import lamination_of
from .mcg import Curve, MappingClass, SizeMismatchError
from .words import canonical_letters


class NotATwistPairStretch(ValueError):
    pass


@dataclass(frozen=True, eq=False)
class AffineRep:
    m: np.ndarray

    def __post_init__(self):
        m = np.array(self.m, dtype=np.int64)
        if m.shape != (2, 2):
            raise ValueError("affine representative must be 2x2")
        if self._det(m) != 1:
            raise ValueError(f"matrix {m.tolist()} is not unimodular")
        m.setflags(write=False)
        object.__setattr__(self, "m", m)

    @staticmethod
    def _det(m) -> int:
        return int(m[0, 0]) * int(m[1, 1]) - int(m[0, 1]) * int(m[1, 0])

    @property
    def trace(self) -> int:
        return int(self.m[0, 0]) + int(self.m[1, 1])

    def __matmul__(self, other: "AffineRep") -> "AffineRep":
        return AffineRep(self.m @ other.m)

    def __eq__(self, other) -> bool:
        return isinstance(other, AffineRep) and bool(np.array_equal(self.m, other.m))

    def __hash__(self) -> int:
        return hash(self.m.tobytes())

    def tolist(self) -> list:
        return self.m.tolist()


@dataclass(frozen=True)
class NTClass:
    kind: str  # "elliptic", "parabolic" or "hyperbolic"
    stretch: float | None = None

    @property
    def pseudo_anosov(self) -> bool:
        return self.kind == "hyperbolic"


def thurston_rep(z: int) -> tuple[AffineRep, AffineRep]:
    if z < 0:
        raise ValueError("intersection number must be nonnegative")
    return AffineRep([[1, z], [0, 1]]), AffineRep([[1, 0], [-z, 1]])


def classify(m: AffineRep | np.ndarray | list) -> NTClass:
    if not isinstance(m, AffineRep):
        m = AffineRep(m)
    t = abs(m.trace)
    if t < 2:
        return NTClass("elliptic")
    if t == 2:
        return NTClass("parabolic")
    return NTClass("hyperbolic", (t + math.sqrt(t * t - 4)) / 2)


def stretch_from_z(z: int) -> float:
    if z < 2:
        raise ValueError("need z >= 2")
    return 0.5 * (z * z - 2 + z * math.sqrt(z * z - 4))


def z_from_stretch(lam: float, rtol: float = 0.02) -> int:
    if lam < 1:
        raise ValueError("stretch factor is at least 1")
    z = round(math.sqrt(lam) + 1 / math.sqrt(lam))
    if z < 2 or abs(stretch_from_z(z) - lam) / lam > rtol:
        raise NotATwistPairStretch(f"{lam} is not the stretch of a twist pair")
    return z


def curve_lengths(f: MappingClass, seed: Curve, iters: int, materialize: bool = False) -> list[int]:
    """Cyclically reduced lengths of f^k(seed) for k = 0..iters."""
    if f.n != seed.n:
        raise SizeMismatchError(f"surface sizes {f.n} and {seed.n} differ")
    if materialize or f.braid is None:
        w = seed.word
        out = [len(canonical_letters(w))]
        for _ in range(iters):
            w = f.act_letters(w)
            out.append(len(canonical_letters(w)))
        return out
    lam = lamination_of(seed.base, seed._carrier, seed.n)
    out = [lam.length()]
    for _ in range(iters):
        lam.apply_braid(f.braid)
        out.append(lam.length())
    return out


def growth_rate(f: MappingClass, seed: Curve, iters: int = 20, materialize: bool = False) -> float:
    """l(f^iters(seed)) / l(f^(iters-1)(seed)), lengths exact."""
    if iters < 2:
        raise ValueError("need at least two iterations")
    lengths = curve_lengths(f, seed, iters, materialize)
    a, b = lengths[-1], lengths[-2]
    if b == 0:
        raise RuntimeError("seed curve was annihilated")
    return a / b
