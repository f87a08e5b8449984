"""Bounded enumeration of positive factorizations of a fixed monodromy.

The multiplicity profile pins down which hole sets the factors enclose, so
the search only has to choose, for each non-boundary slot, one curve from a
bounded family enclosing the right set.  The last slot is never enumerated:
the twist it needs is forced, and is looked up in a table.
"""

from __future__ import annotations

import itertools
import logging
from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field

from .factorization import (
    Factorization,
    MultiplicityProfile,
    conjugator_words,
    multiplicity_profile,
    product,
)
from .filling import compare_invariants, h1
from .laminations import lamination_of
from .mcg import Curve, MappingClass, compose, curve, identity, invert
from .pa import NotATwistPairStretch, curve_lengths, z_from_stretch
from .words import free_reduce, invert_letters

log = logging.getLogger(__name__)


class ResourceLimitError(RuntimeError):
    def __init__(self, explored: int, ceiling: int):
        super().__init__(f"candidate ceiling {ceiling} exceeded ({explored} candidates explored)")
        self.explored = explored
        self.ceiling = ceiling


@dataclass(frozen=True)
class SearchConfig:
    conjugator_bound: int = 2
    dedupe_bound: int = 2
    workers: int = 1
    max_candidates: int = 2_000_000
    growth_iters: int = 12

    def __post_init__(self):
        if min(self.conjugator_bound, self.dedupe_bound, self.max_candidates) < 0 or self.workers < 1:
            raise ValueError("search bounds must be nonnegative and workers >= 1")


@dataclass
class FactorizationClass:
    representative: Factorization
    signature: tuple
    members_found: int = 1
    members: list = field(default_factory=list, repr=False)
    possibly_equivalent: list = field(default_factory=list)
    contains_target: bool = False


# ---------------------------------------------------------------- profiles

def profile_multisets(p: MultiplicityProfile) -> list[tuple[tuple[int, ...], ...]]:
    """Every multiset of hole sets whose counting profile is ``p``.

    Sets of size >= 2 are found by covering the joint multiplicities; the
    singletons then make up whatever multiplicity is left.
    """
    n = p.n
    J = {(i, j): p.joint(i, j) for i, j in itertools.combinations(range(1, n + 1), 2)}
    M = list(p.M)
    found = set()

    def rem(i, j):
        return J[(i, j) if i < j else (j, i)]

    def cliques(base, pool):
        # subsets T of pool such that base + T is a clique of open pairs
        pool = sorted(pool)
        out = []

        def grow(cur, start):
            out.append(tuple(cur))
            for idx in range(start, len(pool)):
                l = pool[idx]
                if all(rem(l, x) > 0 for x in cur):
                    cur.append(l)
                    grow(cur, idx + 1)
                    cur.pop()

        grow(list(base), 0)
        return out

    def go(chosen):
        open_pairs = [ij for ij, v in J.items() if v > 0]
        if not open_pairs:
            if all(m >= 0 for m in M):
                singles = [(i,) for i in range(1, n + 1) for _ in range(M[i - 1])]
                found.add(tuple(sorted(chosen + singles, key=lambda s: (len(s), s))))
            return
        i, j = open_pairs[0]
        pool = [l for l in range(1, n + 1) if l not in (i, j) and rem(i, l) > 0 and rem(j, l) > 0]
        for S in cliques((i, j), pool):
            S = tuple(sorted(S))
            if any(M[l - 1] < 1 for l in S):
                continue
            for a, b in itertools.combinations(S, 2):
                J[(a, b)] -= 1
            for l in S:
                M[l - 1] -= 1
            go(chosen + [S])
            for a, b in itertools.combinations(S, 2):
                J[(a, b)] += 1
            for l in S:
                M[l - 1] += 1

    go([])
    return sorted(found, key=lambda ms: (len(ms), ms))


# ------------------------------------------------------------------ curves

def enumerate_curves(S, bound: int, n: int) -> list[Curve]:
    """Distinct curves around S reached by half-twist words of length <= bound."""
    S = tuple(sorted(S))
    if len(S) == 1:
        return [curve(S, n)]
    out, seen = [], set()
    for g in conjugator_words(n, bound):
        c = curve(S, n, g)
        if c.cls.letters not in seen:
            seen.add(c.cls.letters)
            out.append(c)
    return out


# ------------------------------------------------------------------ search

def normalize(F: Factorization) -> Factorization:
    """Boundary-parallel factors commuted to the front in hole order."""
    bd = sorted((c for c in F if c.is_boundary), key=lambda c: c.enclosed)
    rest = [c for c in F if not c.is_boundary]
    return Factorization(tuple(curve(c.enclosed, F.n) for c in bd) + tuple(rest), F.n)


def _fact_key(F: Factorization) -> tuple:
    return tuple(c.sort_key() for c in F)


@dataclass
class _Job:
    n: int
    head: tuple            # boundary curves, fixed
    sets: tuple            # non-boundary hole sets (multiset, sorted)
    families: dict         # set -> list of curves
    rest: MappingClass     # product the non-boundary part must hit
    ceiling: int


def _commute(a: Curve, b: Curve, cache: dict) -> bool:
    key = (a.cls.letters, b.cls.letters)
    hit = cache.get(key)
    if hit is None:
        ta, tb = a.twist, b.twist
        hit = compose(ta, tb) == compose(tb, ta)
        cache[key] = cache[key[::-1]] = hit
    return hit


def _run_prefix(job: _Job, first: tuple) -> tuple[list, int]:
    """All completions of the slot-1 choice ``first`` = (set, curve index)."""
    S0, idx0 = first
    families = job.families
    lookup = {}
    for S, fam in families.items():
        lookup[S] = {c.twist: c for c in fam}
    remaining = Counter(job.sets)
    remaining[S0] -= 1
    c0 = families[S0][idx0]
    comm_cache: dict = {}
    results = []
    explored = 0

    def go(prefix, prod, remaining):
        nonlocal explored
        left = sum(remaining.values())
        if left == 1:
            (S,) = [s for s, k in remaining.items() if k]
            need = compose(invert(prod), job.rest)
            c = lookup[S].get(need)
            explored += 1
            if c is not None and not _pruned(prefix[-1], c):
                results.append(prefix + [c])
            return
        for S in sorted(s for s, k in remaining.items() if k):
            remaining[S] -= 1
            for c in families[S]:
                explored += 1
                if explored > job.ceiling:
                    raise ResourceLimitError(explored, job.ceiling)
                if _pruned(prefix[-1], c):
                    continue
                go(prefix + [c], compose(prod, c.twist), remaining)
            remaining[S] += 1

    def _pruned(prev: Curve, c: Curve) -> bool:
        # of two commuting neighbours only the sorted order is explored
        return c.sort_key() < prev.sort_key() and _commute(prev, c, comm_cache)

    if sum(remaining.values()) == 0:
        explored = 1
        if c0.twist == job.rest:
            results.append([c0])
    else:
        go([c0], c0.twist, remaining)
    return [Factorization(job.head + tuple(r), job.n) for r in results], explored


def _run_chunk(job: _Job, firsts: list) -> list:
    return [_run_prefix(job, f) for f in firsts]


def _solve(target: Factorization, cfg: SearchConfig) -> tuple[list[Factorization], int]:
    n = target.n
    phi = product(target)
    prof = multiplicity_profile(target)
    solutions = {}
    total = 0
    for ms in profile_multisets(prof):
        head = tuple(curve(S, n) for S in ms if len(S) == 1)
        sets = tuple(S for S in ms if len(S) > 1)
        boundary = identity(n)
        for c in head:
            boundary = compose(boundary, c.twist)
        rest = compose(invert(boundary), phi)
        if not sets:
            if rest == identity(n):
                F = Factorization(head, n)
                solutions[_fact_key(F)] = F
            total += 1
            continue
        families = {S: enumerate_curves(S, cfg.conjugator_bound, n) for S in set(sets)}
        job = _Job(n, head, sets, families, rest, cfg.max_candidates)
        firsts = [(S, i) for S in sorted(set(sets)) for i in range(len(families[S]))]
        if cfg.workers > 1 and len(firsts) > 1:
            chunks = [firsts[w::cfg.workers] for w in range(cfg.workers)]
            with ProcessPoolExecutor(max_workers=cfg.workers) as ex:
                parts = list(ex.map(_run_chunk, [job] * len(chunks), chunks))
            outcomes = [o for part in parts for o in part]
        else:
            outcomes = _run_chunk(job, firsts)
        for found, explored in outcomes:
            total += explored
            for F in found:
                solutions[_fact_key(F)] = F
        if total > cfg.max_candidates:
            raise ResourceLimitError(total, cfg.max_candidates)
    # the target itself is always a solution
    T = normalize(target)
    solutions.setdefault(_fact_key(T), T)
    out = [solutions[k] for k in sorted(solutions)]
    for F in out:
        if product(F) != phi:
            raise AssertionError("search produced a factorization of the wrong mapping class")
    return out, total


# --------------------------------------------------------------- classes

def pair_trace(a: Curve, b: Curve, iters: int = 12) -> int:
    """Trace 2 - z^2 of the affine representative of tau_a tau_b, z read off growth."""
    ta, tb = a.twist, b.twist
    if a == b or compose(ta, tb) == compose(tb, ta):
        return 2
    L = curve_lengths(compose(ta, tb), a, iters)
    ratio = L[-1] / L[-2]
    if ratio < 3:
        return 2 - 4
    try:
        z = z_from_stretch(ratio)
    except NotATwistPairStretch:
        # never seen for twist pairs; keep a distinguishing fingerprint anyway
        return -round(1000 * ratio)
    return 2 - z * z


def signature(F: Factorization, iters: int = 12) -> tuple:
    sets = tuple(sorted((c.enclosed for c in F), key=lambda s: (len(s), s)))
    rest = [c for c in F if not c.is_boundary]
    traces = tuple(sorted(pair_trace(a, b, iters) for a, b in itertools.combinations(rest, 2)))
    return sets, traces


def dedupe_conjugators(phi: MappingClass, n: int, bound: int) -> list[tuple[int, ...]]:
    """Half-twist words for the global-conjugation test, as braid words.

    Short words, powers of the monodromy (which centralize it) and their
    products on either side.
    """
    if phi.braid is None:
        raise ValueError("monodromy has no half-twist word")
    words = list(conjugator_words(n, bound))
    kmax = max(1, bound)
    powers = []
    for k in range(1, kmax + 1):
        powers.append(phi.braid * k)
        powers.append(invert_letters(phi.braid) * k)
    out = words + powers
    for w in words[1:]:
        for P in powers:
            out.append(free_reduce(w + P))
            out.append(free_reduce(P + w))
    return out


def _lam_key(braid, c: Curve) -> tuple:
    lam = lamination_of(c.base, c._carrier, c.n)
    lam.apply_braid(braid)
    return lam.key()


def _image_keys(braid, F: Factorization) -> tuple:
    return tuple(_lam_key(braid, c) for c in F)


def group_classes(solutions: list[Factorization], phi: MappingClass, cfg: SearchConfig,
                  target: Factorization | None = None) -> list[FactorizationClass]:
    n = phi.n
    sigs = [signature(F, cfg.growth_iters) for F in solutions]
    conj = None
    parent = list(range(len(solutions)))

    def find(i):
        while parent[i] != i:
            parent[i] = parent[parent[i]]
            i = parent[i]
        return i

    by_sig: dict = {}
    for i, s in enumerate(sigs):
        by_sig.setdefault(s, []).append(i)
    for idxs in by_sig.values():
        if len(idxs) < 2:
            continue
        if conj is None:
            conj = dedupe_conjugators(phi, n, cfg.dedupe_bound)
        want = {_image_keys((), solutions[i]): i for i in idxs}
        last_keys = {(k[-1],) for k in want}
        for i in idxs:
            F = solutions[i]
            for f in conj:
                # cheap first-slot reject
                if (_lam_key(f, F[-1]),) not in last_keys:
                    continue
                j = want.get(_image_keys(f, F))
                if j is not None and find(j) != find(i):
                    parent[find(j)] = find(i)
    groups: dict = {}
    for i in range(len(solutions)):
        groups.setdefault(find(i), []).append(i)
    tkey = _fact_key(normalize(target)) if target is not None else None
    classes = []
    for members in sorted(groups.values()):
        rep = solutions[members[0]]
        classes.append(FactorizationClass(
            representative=rep,
            signature=sigs[members[0]],
            members_found=len(members),
            members=[solutions[i] for i in members],
            contains_target=tkey is not None and any(_fact_key(solutions[i]) == tkey for i in members),
        ))
    for a, b in itertools.combinations(range(len(classes)), 2):
        if classes[a].signature == classes[b].signature:
            classes[a].possibly_equivalent.append(b)
            classes[b].possibly_equivalent.append(a)
    return classes


def enumerate_factorizations(target: Factorization, cfg: SearchConfig | None = None) -> list[FactorizationClass]:
    if not len(target):
        raise ValueError("target factorization is empty")
    cfg = cfg or SearchConfig()
    solutions, explored = _solve(target, cfg)
    log.info("%d factorizations from %d candidates", len(solutions), explored)
    return group_classes(solutions, product(target), cfg, target)


def verify_unique_filling(target: Factorization, cfg: SearchConfig | None = None) -> dict:
    classes = enumerate_factorizations(target, cfg)
    inv = [h1(c.representative) for c in classes]
    return {
        "class_count": len(classes),
        "all_invariants_equal": all(compare_invariants(inv[0], x) for x in inv[1:]),
        "invariants": inv,
        "classes": classes,
    }
