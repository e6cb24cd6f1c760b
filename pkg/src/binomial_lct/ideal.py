"""General binomial ideals: generators, the exponent triple, and text I/O.

Input format::

    vars x1 x2 x3
    # comments and blank lines are ignored
    x2^2 - x1*x3
    x2*x3 - x1^3
    x3^2 - x1^2*x2

Each generator line holds one or two terms. ``c*x^a - d*x^b`` is stored as
``x^a - u x^b`` with ``u = d/c``; a lone term is a monomial (``u = 0``).
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional, Sequence

from .linalg import IntMatrix, IntVector


class IdealError(ValueError):
    pass


class ParseError(IdealError):
    def __init__(self, message: str, line: int, column: int):
        super().__init__(f"line {line}, column {column}: {message}")
        self.message = message
        self.line = line
        self.column = column


@dataclass(frozen=True)
class Generator:
    """``x^a - u x^b``; ``u == 0`` (with ``b == a``) encodes the monomial ``x^a``."""

    a: IntVector
    b: IntVector
    u: Fraction = Fraction(0)

    @property
    def is_monomial(self) -> bool:
        return self.u == 0

    @property
    def monomial_part(self) -> IntVector:
        return tuple(min(x, y) for x, y in zip(self.a, self.b))

    @property
    def difference(self) -> IntVector:
        """a - b; its positive and negative parts are the reduced binomial's exponents."""
        return tuple(x - y for x, y in zip(self.a, self.b))


def monomial(a: Sequence[int]) -> Generator:
    a = tuple(a)
    return Generator(a, a, Fraction(0))


def binomial(a: Sequence[int], b: Sequence[int], u=1) -> Generator:
    return normalize_generator(Generator(tuple(a), tuple(b), Fraction(u)))


def normalize_generator(g: Generator) -> Generator:
    if len(g.a) != len(g.b):
        raise IdealError("exponent vectors of different lengths")
    if any(x < 0 for x in g.a + g.b):
        raise IdealError("negative exponent")
    u = Fraction(g.u)
    if g.a == g.b:
        if u == 1:
            raise IdealError("zero generator")
        return Generator(g.a, g.a, Fraction(0))
    if u == 0:
        return Generator(g.a, g.a, Fraction(0))
    return Generator(g.a, g.b, u)


@dataclass(frozen=True)
class IdealTriple:
    """Row i of ``plus``/``minus`` holds the exponents of the two monomials of f_i."""

    plus: IntMatrix
    minus: IntMatrix
    u: tuple[Fraction, ...]

    @property
    def r(self) -> int:
        return len(self.plus)

    @property
    def n(self) -> int:
        return len(self.plus[0])

    @property
    def difference(self) -> IntMatrix:
        return tuple(tuple(p - m for p, m in zip(pr, mr)) for pr, mr in zip(self.plus, self.minus))

    @property
    def generators(self) -> tuple[Generator, ...]:
        return tuple(Generator(a, b, u) for a, b, u in zip(self.plus, self.minus, self.u))


@dataclass(frozen=True)
class GeneralBinomialIdeal:
    n: int
    generators: tuple[Generator, ...]
    names: tuple[str, ...] = field(default=())

    def __post_init__(self):
        if not self.generators:
            raise IdealError("an ideal needs at least one generator")
        if not self.names:
            object.__setattr__(self, "names", tuple(f"x{i + 1}" for i in range(self.n)))
        if len(self.names) != self.n:
            raise IdealError("number of variable names does not match n")
        gens = tuple(normalize_generator(g) for g in self.generators)
        for g in gens:
            if len(g.a) != self.n:
                raise IdealError(f"generator has {len(g.a)} exponents, expected {self.n}")
        object.__setattr__(self, "generators", gens)

    @classmethod
    def from_triple(cls, triple: IdealTriple, names: Sequence[str] = ()) -> "GeneralBinomialIdeal":
        return cls(triple.n, triple.generators, tuple(names))

    @property
    def is_monomial(self) -> bool:
        return all(g.is_monomial for g in self.generators)

    def triple(self) -> IdealTriple:
        return triple_of(self)

    def render(self) -> str:
        return render_ideal(self)


def triple_of(ideal: GeneralBinomialIdeal) -> IdealTriple:
    return IdealTriple(
        plus=tuple(g.a for g in ideal.generators),
        minus=tuple(g.b for g in ideal.generators),
        u=tuple(g.u for g in ideal.generators),
    )


# -- parsing -----------------------------------------------------------------

_TOKEN = re.compile(
    r"""\s*(?:
        (?P<num>\d+(?:/\d+)?)
      | (?P<id>[A-Za-z_][A-Za-z_0-9]*)
      | (?P<op>[-+*^])
      | (?P<bad>\S)
    )""",
    re.VERBOSE,
)


def _tokenize(text: str, lineno: int, offset: int) -> list[tuple[str, str, int]]:
    tokens = []
    pos = 0
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if m is None or m.end() == pos:
            break
        kind = m.lastgroup
        col = m.start(kind) + 1 + offset
        if kind == "bad":
            raise ParseError(f"unexpected character {m.group(kind)!r}", lineno, col)
        tokens.append((kind, m.group(kind), col))
        pos = m.end()
    return tokens


class _LineParser:
    def __init__(self, tokens, names: dict[str, int], lineno: int, eol: int):
        self.tokens = tokens
        self.pos = 0
        self.names = names
        self.lineno = lineno
        self.eol = eol

    def peek(self):
        return self.tokens[self.pos] if self.pos < len(self.tokens) else None

    def error(self, msg, tok=None):
        col = tok[2] if tok else self.eol
        raise ParseError(msg, self.lineno, col)

    def take(self):
        tok = self.peek()
        if tok is None:
            self.error("unexpected end of line")
        self.pos += 1
        return tok

    def term(self) -> tuple[Fraction, list[int]]:
        coef = Fraction(1)
        expo = [0] * len(self.names)
        tok = self.peek()
        if tok is None:
            self.error("expected a term")
        if tok[0] == "num":
            self.take()
            coef = Fraction(tok[1])
            nxt = self.peek()
            if nxt is None or nxt[1] in "+-":
                return coef, expo
            if nxt[1] != "*":
                self.error("expected '*' after coefficient", nxt)
            self.take()
        self.factor(expo)
        while (tok := self.peek()) is not None and tok[1] == "*":
            self.take()
            self.factor(expo)
        return coef, expo

    def factor(self, expo: list[int]) -> None:
        tok = self.take()
        if tok[0] != "id":
            self.error(f"expected a variable, found {tok[1]!r}", tok)
        if tok[1] not in self.names:
            self.error(f"unknown variable {tok[1]!r}", tok)
        k = 1
        nxt = self.peek()
        if nxt is not None and nxt[1] == "^":
            self.take()
            e = self.take()
            if e[1] == "-":
                self.error("negative exponent", e)
            if e[0] != "num" or "/" in e[1] or int(e[1]) == 0:
                self.error("exponent must be a positive integer", e)
            k = int(e[1])
        expo[self.names[tok[1]]] += k

    def generator(self) -> Generator:
        sign = 1
        tok = self.peek()
        if tok is not None and tok[1] in "+-":
            self.take()
            sign = -1 if tok[1] == "-" else 1
        c1, a = self.term()
        c1 *= sign
        tok = self.peek()
        if tok is None:
            if c1 == 0:
                self.error("zero coefficient", None)
            return monomial(a)
        if tok[1] not in "+-":
            self.error(f"unexpected {tok[1]!r}", tok)
        self.take()
        c2, b = self.term()
        if tok[1] == "+":
            c2 = -c2
        extra = self.peek()
        if extra is not None:
            if extra[1] in "+-":
                self.error("a generator has at most two terms", extra)
            self.error(f"unexpected {extra[1]!r}", extra)
        if c1 == 0 or c2 == 0:
            self.error("zero coefficient", None)
        try:
            return normalize_generator(Generator(tuple(a), tuple(b), c2 / c1))
        except IdealError as exc:
            raise ParseError(str(exc), self.lineno, 1) from None


def parse_ideal(text: str) -> GeneralBinomialIdeal:
    names: Optional[list[str]] = None
    gens: list[Generator] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0]
        if not line.strip():
            continue
        if names is None:
            parts = line.split()
            if parts[0] != "vars":
                raise ParseError("first line must be 'vars <names...>'", lineno, 1)
            names = parts[1:]
            if not names:
                raise ParseError("no variables declared", lineno, len(line) + 1)
            for nm in names:
                if not re.fullmatch(r"[A-Za-z_][A-Za-z_0-9]*", nm):
                    raise ParseError(f"bad variable name {nm!r}", lineno, line.index(nm) + 1)
            if len(set(names)) != len(names):
                raise ParseError("duplicate variable name", lineno, 1)
            continue
        tokens = _tokenize(line, lineno, 0)
        p = _LineParser(tokens, {nm: i for i, nm in enumerate(names)}, lineno, len(line.rstrip()) + 1)
        gens.append(p.generator())
    if names is None:
        raise ParseError("empty input", 1, 1)
    if not gens:
        raise ParseError("ideal has no generators", 1, 1)
    return GeneralBinomialIdeal(len(names), tuple(gens), tuple(names))


# -- rendering ---------------------------------------------------------------

def _render_monomial(e: Sequence[int], names: Sequence[str]) -> str:
    parts = [nm if k == 1 else f"{nm}^{k}" for nm, k in zip(names, e) if k]
    return "*".join(parts) if parts else "1"


def render_generator(g: Generator, names: Sequence[str]) -> str:
    first = _render_monomial(g.a, names)
    if g.is_monomial:
        return first
    second = _render_monomial(g.b, names)
    u = g.u
    op = "-" if u > 0 else "+"
    c = abs(u)
    if c == 1:
        return f"{first} {op} {second}"
    if second == "1":
        return f"{first} {op} {c}"
    return f"{first} {op} {c}*{second}"


def render_ideal(ideal: GeneralBinomialIdeal) -> str:
    lines = ["vars " + " ".join(ideal.names)]
    lines += [render_generator(g, ideal.names) for g in ideal.generators]
    return "\n".join(lines) + "\n"
