"""JSON-lines archive of factorizations.

One factorization per line::

    {"n":5,"curves":[{"S":[2,3,4],"conj":""},{"S":[1,2,4],"conj":"s4^-1"}]}
"""

from __future__ import annotations

import json
from typing import IO, Iterable, Iterator

from .factorization import Factorization
from .mcg import Curve, curve, format_braid


def curve_record(c: Curve) -> dict:
    return {"S": list(c.enclosed), "conj": format_braid(c.conjugator)}


def record(F: Factorization) -> dict:
    return {"n": F.n, "curves": [curve_record(c) for c in F]}


def dumps(F: Factorization) -> str:
    return json.dumps(record(F), sort_keys=True, separators=(",", ":"))


def from_record(rec: dict) -> Factorization:
    try:
        n = int(rec["n"])
        curves = tuple(curve(c["S"], n, c.get("conj", "")) for c in rec["curves"])
    except (KeyError, TypeError) as e:
        raise ValueError(f"malformed archive record: {e}") from None
    return Factorization(curves, n)


def loads(line: str) -> Factorization:
    return from_record(json.loads(line))


def write(fs: Iterable[Factorization], fh: IO[str]) -> None:
    for F in fs:
        fh.write(dumps(F) + "\n")


def read(fh: IO[str]) -> Iterator[Factorization]:
    for line in fh:
        if line.strip():
            yield loads(line)
