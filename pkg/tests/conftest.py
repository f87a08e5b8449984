import itertools

import pytest
from hypothesis import strategies as st

from planarmcg import curve, factorization, multiplicity_profile


@st.composite
def words(draw, max_n=8, max_len=40, n=None):
    n = n or draw(st.integers(1, max_n))
    letters = draw(st.lists(st.integers(1, n).flatmap(lambda i: st.sampled_from([i, -i])), max_size=max_len))
    return tuple(letters), n


def braid_words(n, max_len=6):
    if n < 2:
        return st.just(())
    letter = st.integers(1, n - 1).flatmap(lambda i: st.sampled_from([i, -i]))
    return st.lists(letter, max_size=max_len).map(tuple)


@st.composite
def curves(draw, n, max_conj=3):
    size = draw(st.integers(1, n))
    S = draw(st.sets(st.integers(1, n), min_size=size, max_size=size))
    g = draw(braid_words(n, max_conj)) if size > 1 else ()
    return curve(S, n, g)


@st.composite
def factorizations(draw, min_n=2, max_n=5, max_len=5, min_len=2):
    n = draw(st.integers(min_n, max_n))
    cs = draw(st.lists(curves(n), min_size=min_len, max_size=max_len))
    return factorization(cs, n)


def interleaved(A, B):
    """Disjoint hole sets that alternate around the n-gon."""
    U = sorted(set(A) | set(B))
    s = ["a" if x in A else "b" for x in U]
    return sum(s[i] != s[i - 1] for i in range(len(s))) > 2


def subsets(n):
    return [frozenset(c) for k in range(1, n + 1) for c in itertools.combinations(range(1, n + 1), k)]


def family_profile_ok(F, n, k, p, q, m):
    """The joint counts a model-family member must have, with constant exponent m."""
    P = multiplicity_profile(F)
    nq = n + q
    ok = P.M[nq - 1] == 2
    ok &= all(P.joint(i, nq) == 2 for i in range(k, k + q))
    ok &= all(P.joint(nq, j) == 0 for j in range(nq + 1, nq + p + 1))
    ok &= all(P.joint(r, nq) == 1 for r in [*range(1, k), *range(k + q, nq)])
    ok &= all(P.joint(s, t) == 0 for s in range(1, k) for t in range(k + q, nq))
    for j in range(nq + 1, nq + p + 1):
        ok &= P.M[j - 1] == m
        ok &= all(P.joint(i, j) == 0 for i in range(1, nq + p + 1) if i != j)
    return bool(ok)


# acceptance outcomes, printed once at the end of the run
ACCEPTANCE = {}


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for num in sorted(ACCEPTANCE):
        ok, label, secs = ACCEPTANCE[num]
        terminalreporter.write_line(f"{'PASS' if ok else 'FAIL'}  criterion {num}: {label} ({secs:.2f}s)")


@pytest.fixture(scope="session")
def base_pair():
    from planarmcg import paper_family

    return paper_family(1, 1, 1, 1)


@pytest.fixture(scope="session")
def d5_instance():
    from planarmcg import paper_family

    return paper_family(3, 2, 1, 1, [1, 1, 1, None, 1])
