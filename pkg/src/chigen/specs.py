"""Group and vector-space spec syntax.

Grammar (whitespace ignored, case-insensitive)::

    spec    := vec | product
    vec     := 'V(' int ',' int ')'            F_q^d
    product := atom ('x' atom)*                left-associative
    atom    := 'Z' int                         cyclic of order n
             | 'D' int                         dihedral of ORDER 2n
             | 'S' int | 'A' int               symmetric / alternating on n points
             | 'SD(' int ',' int ',' int ')'   Z_m x| Z_n with y x y^-1 = x^a
             | '(' product ')'
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Union


class SpecError(ValueError):
    """Base class for malformed or invalid specs."""


class ParseError(SpecError):
    def __init__(self, message: str, position: int):
        super().__init__(f"{message} at position {position}")
        self.position = position


class InvalidSpec(SpecError):
    def __init__(self, message: str, constraint: str):
        super().__init__(f"{message} (violates: {constraint})")
        self.constraint = constraint


@dataclass(frozen=True)
class Cyclic:
    n: int

    def __str__(self) -> str:
        return f"Z{self.n}"


@dataclass(frozen=True)
class Dihedral:
    """Dihedral group of order 2n (r^n = s^2 = e, srs = r^-1)."""

    n: int

    def __str__(self) -> str:
        return f"D{self.n}"


@dataclass(frozen=True)
class Symmetric:
    n: int

    def __str__(self) -> str:
        return f"S{self.n}"


@dataclass(frozen=True)
class Alternating:
    n: int

    def __str__(self) -> str:
        return f"A{self.n}"


@dataclass(frozen=True)
class Semidirect:
    """Z_m x| Z_n where the generator y of Z_n acts by x -> x^a."""

    m: int
    n: int
    a: int

    def __str__(self) -> str:
        return f"SD({self.m},{self.n},{self.a})"


@dataclass(frozen=True)
class Product:
    left: "GroupSpec"
    right: "GroupSpec"

    def __str__(self) -> str:
        right = f"({self.right})" if isinstance(self.right, Product) else str(self.right)
        return f"{self.left}x{right}"


@dataclass(frozen=True)
class VecSpec:
    q: int
    d: int

    def __str__(self) -> str:
        return f"V({self.q},{self.d})"


GroupSpec = Union[Cyclic, Dihedral, Symmetric, Alternating, Semidirect, Product]


def spec_order(spec: GroupSpec) -> int:
    if isinstance(spec, Cyclic):
        return spec.n
    if isinstance(spec, Dihedral):
        return 2 * spec.n
    if isinstance(spec, Symmetric):
        return math.factorial(spec.n)
    if isinstance(spec, Alternating):
        return max(1, math.factorial(spec.n) // 2)
    if isinstance(spec, Semidirect):
        return spec.m * spec.n
    if isinstance(spec, Product):
        return spec_order(spec.left) * spec_order(spec.right)
    raise TypeError(f"not a group spec: {spec!r}")


def validate(spec: GroupSpec) -> None:
    """Raise InvalidSpec if any declared parameter is out of range."""
    if isinstance(spec, Product):
        validate(spec.left)
        validate(spec.right)
        return
    if isinstance(spec, Semidirect):
        if spec.m < 1 or spec.n < 1:
            raise InvalidSpec(f"{spec}: orders must be >= 1", "m >= 1 and n >= 1")
        if math.gcd(spec.a, spec.m) != 1:
            raise InvalidSpec(f"{spec}: multiplier not a unit mod m", "gcd(a, m) = 1")
        if pow(spec.a, spec.n, spec.m) != 1 % spec.m:
            raise InvalidSpec(f"{spec}: action order does not divide n", "a^n = 1 (mod m)")
        return
    if isinstance(spec, (Cyclic, Dihedral, Symmetric, Alternating)):
        if spec.n < 1:
            raise InvalidSpec(f"{spec}: order parameter must be >= 1", "n >= 1")
        return
    raise TypeError(f"not a group spec: {spec!r}")


class _Parser:
    def __init__(self, text: str):
        # positions refer to the original text
        self.chars = [(i, c.lower()) for i, c in enumerate(text) if not c.isspace()]
        self.pos = 0
        self.end = len(text)

    def _where(self) -> int:
        return self.chars[self.pos][0] if self.pos < len(self.chars) else self.end

    def peek(self, k: int = 0) -> str:
        j = self.pos + k
        return self.chars[j][1] if j < len(self.chars) else ""

    def expect(self, c: str) -> None:
        if self.peek() != c:
            found = self.peek() or "end of input"
            raise ParseError(f"expected {c!r}, found {found!r}", self._where())
        self.pos += 1

    def integer(self) -> int:
        start = self.pos
        neg = False
        if self.peek() == "-":
            neg = True
            self.pos += 1
        digits = ""
        while self.peek().isdigit():
            digits += self.peek()
            self.pos += 1
        if not digits:
            self.pos = start
            raise ParseError("expected an integer", self._where())
        return -int(digits) if neg else int(digits)

    def args(self, count: int) -> list[int]:
        self.expect("(")
        out = [self.integer()]
        for _ in range(count - 1):
            self.expect(",")
            out.append(self.integer())
        self.expect(")")
        return out

    def atom(self) -> GroupSpec:
        c = self.peek()
        if c == "(":
            self.pos += 1
            inner = self.product()
            self.expect(")")
            return inner
        if c == "s" and self.peek(1) == "d":
            self.pos += 2
            m, n, a = self.args(3)
            return Semidirect(m, n, a)
        kinds = {"z": Cyclic, "d": Dihedral, "s": Symmetric, "a": Alternating}
        if c in kinds:
            self.pos += 1
            return kinds[c](self.integer())
        found = c or "end of input"
        raise ParseError(f"unexpected {found!r}", self._where())

    def product(self) -> GroupSpec:
        spec = self.atom()
        while self.peek() == "x":
            self.pos += 1
            spec = Product(spec, self.atom())
        return spec

    def top(self) -> GroupSpec | VecSpec:
        if not self.chars:
            raise ParseError("empty spec", 0)
        if self.peek() == "v":
            self.pos += 1
            q, d = self.args(2)
            result: GroupSpec | VecSpec = VecSpec(q, d)
        else:
            result = self.product()
        if self.pos != len(self.chars):
            raise ParseError(f"trailing input {self.peek()!r}", self._where())
        return result


def parse_spec(text: str) -> GroupSpec | VecSpec:
    """Parse and validate a spec string such as ``"Z2xZ4"`` or ``"SD(3,4,2)"``."""
    spec = _Parser(text).top()
    if isinstance(spec, VecSpec):
        if spec.d < 1:
            raise InvalidSpec(f"{spec}: dimension must be >= 1", "d >= 1")
        if spec.q < 2:
            raise InvalidSpec(f"{spec}: field size must be >= 2", "q is a prime power")
    else:
        validate(spec)
    return spec
