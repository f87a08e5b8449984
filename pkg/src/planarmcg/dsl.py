"""A small language for monodromies.

    program  := surface stmt* command
    surface  := "surface(" INT ")"
    stmt     := twist | family | twistknot
    twist    := "tw{" INT ("," INT)* ("|" conj)? "}" ("^" INT)?
    conj     := (("s" INT) ("^-1")?)+
    family   := "family(" INT "," INT "," INT "," INT ("," "m=" exps)? ")"
    twistknot:= "twistknot(" INT "," INT "," INT ("," "m=" exps)? ")"
    exps     := INT | "[" (INT | "_") ("," (INT | "_"))* "]"
    command  := NAME ("(" INT ")")?

Factors are multiplied left to right.  ``#`` starts a comment.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from functools import cached_property

from .factorization import Factorization
from .filling import FamilyParameterError, paper_family, twist_knot_family
from .mcg import curve, format_braid

COMMANDS = ("product", "mult", "relations-check", "hurwitz", "enumerate", "stretch",
            "invariants", "family", "verify-unique")


class DSLSyntaxError(ValueError):
    def __init__(self, msg: str, line: int, col: int):
        super().__init__(f"{line}:{col}: {msg}")
        self.line, self.col = line, col


class DSLSemanticError(ValueError):
    pass


@dataclass(frozen=True)
class Twist:
    S: tuple[int, ...]
    conj: tuple[int, ...] = ()
    exp: int = 1

    def text(self) -> str:
        body = ",".join(map(str, self.S))
        if self.conj:
            body += "|" + format_braid(self.conj)
        out = "tw{" + body + "}"
        return out if self.exp == 1 else f"{out}^{self.exp}"


@dataclass(frozen=True)
class Family:
    kind: str  # "family" or "twistknot"
    params: tuple[int, ...]
    m: int | tuple | None = None

    def text(self) -> str:
        args = ",".join(map(str, self.params))
        if isinstance(self.m, int):
            args += f",m={self.m}"
        elif self.m is not None:
            args += ",m=[" + ",".join("_" if v is None else str(v) for v in self.m) + "]"
        return f"{self.kind}({args})"

    @property
    def surface(self) -> int:
        if self.kind == "family":
            n, k, p, q = self.params
            return n + p + q
        p, n, k = self.params
        return n + p + 1

    def expand(self) -> Factorization:
        m = list(self.m) if isinstance(self.m, tuple) else self.m
        if self.kind == "family":
            return paper_family(*self.params, m)
        return twist_knot_family(*self.params, m)


@dataclass(frozen=True)
class Program:
    n: int
    statements: tuple
    command: str
    arg: int | None = None

    @cached_property
    def factorization(self) -> Factorization:
        curves = []
        for st in self.statements:
            if isinstance(st, Twist):
                curves.extend([curve(st.S, self.n, st.conj)] * st.exp)
            else:
                curves.extend(st.expand().curves)
        return Factorization(tuple(curves), self.n)

    @property
    def family(self) -> Family | None:
        fam = [st for st in self.statements if isinstance(st, Family)]
        return fam[0] if len(fam) == 1 and len(self.statements) == 1 else None


def to_text(p: Program) -> str:
    lines = [f"surface({p.n})"]
    lines += [st.text() for st in p.statements]
    lines.append(p.command if p.arg is None else f"{p.command}({p.arg})")
    return "\n".join(lines) + "\n"


_TOKEN = re.compile(r"""
    (?P<ws>[ \t\r]+|\#[^\n]*)
  | (?P<nl>\n)
  | (?P<int>-?\d+)
  | (?P<name>[A-Za-z_][A-Za-z0-9_]*(?:-[A-Za-z][A-Za-z0-9_]*)*)
  | (?P<punct>[(){}\[\],|^=])
""", re.VERBOSE)


@dataclass
class _Tok:
    kind: str
    text: str
    line: int
    col: int


def _tokenize(src: str) -> list[_Tok]:
    out, pos, line, lstart = [], 0, 1, 0
    while pos < len(src):
        m = _TOKEN.match(src, pos)
        if not m:
            raise DSLSyntaxError(f"unexpected character {src[pos]!r}", line, pos - lstart + 1)
        kind = m.lastgroup
        if kind == "nl":
            line += 1
            lstart = m.end()
        elif kind != "ws":
            out.append(_Tok(kind, m.group(), line, pos - lstart + 1))
        pos = m.end()
    out.append(_Tok("eof", "", line, pos - lstart + 1))
    return out


class _Parser:
    def __init__(self, src: str):
        self.toks = _tokenize(src)
        self.i = 0

    @property
    def tok(self) -> _Tok:
        return self.toks[self.i]

    def fail(self, msg: str, tok: _Tok | None = None):
        tok = tok or self.tok
        raise DSLSyntaxError(msg, tok.line, tok.col)

    def take(self, kind: str, text: str | None = None) -> _Tok:
        t = self.tok
        if t.kind != kind or (text is not None and t.text != text):
            want = text or kind
            self.fail(f"expected {want!r}, found {t.text or 'end of input'!r}")
        self.i += 1
        return t

    def peek(self, text: str) -> bool:
        return self.tok.text == text

    def integer(self) -> int:
        return int(self.take("int").text)

    def program(self) -> Program:
        self.take("name", "surface")
        self.take("punct", "(")
        ntok = self.tok
        n = self.integer()
        if n < 1:
            self.fail("surface needs at least one hole", ntok)
        self.take("punct", ")")
        stmts = []
        while self.is_statement():
            stmts.append(self.twist(n) if self.tok.text == "tw" else self.family())
        t = self.take("name")
        if t.text not in COMMANDS:
            self.fail(f"unknown command {t.text!r}", t)
        arg = None
        if self.peek("("):
            self.take("punct", "(")
            arg = self.integer()
            self.take("punct", ")")
        self.take("eof")
        return Program(n, tuple(stmts), t.text, arg)

    def is_statement(self) -> bool:
        t = self.tok
        if t.kind != "name" or t.text not in ("tw", "family", "twistknot"):
            return False
        if t.text == "tw":
            return True
        # "family" is also a command; the statement form has a comma after its first argument
        ahead = [x.text for x in self.toks[self.i + 1:self.i + 4]]
        return len(ahead) == 3 and ahead[0] == "(" and ahead[2] == ","

    def hole_set(self, n: int) -> tuple[int, ...]:
        out = []
        while True:
            t = self.tok
            i = self.integer()
            if not 1 <= i <= n:
                raise DSLSemanticError(f"{t.line}:{t.col}: hole {i} outside 1..{n}")
            out.append(i)
            if not self.peek(","):
                return tuple(sorted(set(out)))
            self.take("punct", ",")

    def conj(self, n: int) -> tuple[int, ...]:
        out = []
        while self.tok.kind == "name":
            t = self.take("name")
            parts = re.fullmatch(r"(?:s\d+)+", t.text)
            if not parts:
                self.fail(f"bad half twist {t.text!r}", t)
            idx = [int(x) for x in re.findall(r"\d+", t.text)]
            for i in idx:
                if not 1 <= i <= n - 1:
                    raise DSLSemanticError(f"{t.line}:{t.col}: half twist s{i} outside 1..{n - 1}")
            if self.peek("^"):
                self.take("punct", "^")
                e = self.tok
                if self.integer() != -1:
                    self.fail("half twists take only the exponent -1", e)
                idx[-1] = -idx[-1]
            out.extend(idx)
        if not out:
            self.fail("empty conjugator after '|'")
        return tuple(out)

    def twist(self, n: int) -> Twist:
        self.take("name", "tw")
        self.take("punct", "{")
        S = self.hole_set(n)
        conj = ()
        if self.peek("|"):
            self.take("punct", "|")
            conj = self.conj(n)
        self.take("punct", "}")
        exp = 1
        if self.peek("^"):
            self.take("punct", "^")
            e = self.tok
            exp = self.integer()
            if exp < 0:
                self.fail("only positive twists are allowed", e)
        return Twist(S, conj, exp)

    def family(self) -> Family:
        kind = self.take("name").text
        want = 4 if kind == "family" else 3
        self.take("punct", "(")
        params = [self.integer()]
        m = None
        while self.peek(","):
            self.take("punct", ",")
            if self.peek("m"):
                self.take("name", "m")
                self.take("punct", "=")
                m = self.exponents()
                break
            params.append(self.integer())
        if len(params) != want:
            self.fail(f"{kind} takes {want} parameters")
        self.take("punct", ")")
        return Family(kind, tuple(params), m)

    def exponents(self):
        if self.tok.kind == "int":
            return self.integer()
        self.take("punct", "[")
        out = []
        while True:
            if self.peek("_"):
                self.take("name", "_")
                out.append(None)
            else:
                out.append(self.integer())
            if not self.peek(","):
                break
            self.take("punct", ",")
        self.take("punct", "]")
        return tuple(out)


def parse(source: str) -> Program:
    p = _Parser(source).program()
    for st in p.statements:
        if isinstance(st, Family):
            if st.surface != p.n:
                raise DSLSemanticError(f"{st.text()} lives on D{st.surface}, not D{p.n}")
            try:
                st.expand()
            except FamilyParameterError as e:
                raise DSLSemanticError(str(e)) from None
    return p
