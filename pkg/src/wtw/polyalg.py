"""Exact multivariate polynomial arithmetic over the rationals.

A :class:`Scalar` is a sparse polynomial with :class:`fractions.Fraction`
coefficients over a fixed, ordered tuple of symbols (a :class:`Ring`).  It is
represented as a dictionary mapping exponent tuples (one non-negative integer
per symbol) to nonzero coefficients; the zero polynomial has an empty map.
All arithmetic keeps this canonical form, so equality of polynomials is
equality of dictionaries.  There is no floating point anywhere: identity
tests are exact.

Rendering contract
------------------
``str(scalar)`` lists terms in descending lexicographic order of their
exponent tuples (symbol order is the ring's declared order), coefficients as
``p`` or ``p/q``, powers with ``^``, e.g. ``-1/2*a2^2 - a2``.  This string is
part of the golden-output contract of the command line tool, so it must stay
byte-stable.

Values are immutable after construction and safe to share across threads.
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator, Mapping, Union

Exponents = tuple[int, ...]
RationalLike = Union[int, Fraction]

_NAME_RE = re.compile(r"[A-Za-z_][A-Za-z0-9_]*\Z")


class RingMismatchError(ValueError):
    """Raised when combining scalars that belong to different rings."""


class PolynomialParseError(ValueError):
    """Raised for malformed polynomial strings."""


@dataclass(frozen=True)
class Ring:
    """An ordered set of symbol names; the context all scalars live in.

    The declared order fixes the exponent-tuple layout, the lexicographic
    monomial order used for canonical rendering, and the meaning of
    :func:`normalize_up_to_unit`.
    """

    symbols: tuple[str, ...]

    def __post_init__(self) -> None:
        if len(set(self.symbols)) != len(self.symbols):
            raise ValueError(f"duplicate symbols in {self.symbols!r}")
        for name in self.symbols:
            if not _NAME_RE.match(name):
                raise ValueError(f"invalid symbol name {name!r}")

    @property
    def nsymbols(self) -> int:
        return len(self.symbols)

    def zero(self) -> Scalar:
        return Scalar(self, {})

    def one(self) -> Scalar:
        return self.const(1)

    def const(self, value: RationalLike) -> Scalar:
        coeff = Fraction(value)
        if coeff == 0:
            return Scalar(self, {})
        return Scalar(self, {(0,) * self.nsymbols: coeff})

    def sym(self, name: str) -> Scalar:
        try:
            idx = self.symbols.index(name)
        except ValueError:
            raise KeyError(f"symbol {name!r} not declared in ring {self.symbols}") from None
        exps = [0] * self.nsymbols
        exps[idx] = 1
        return Scalar(self, {tuple(exps): Fraction(1)})

    def extend(self, *names: str) -> Ring:
        """Ring with extra symbols appended after the existing ones."""
        return Ring(self.symbols + tuple(names))

    def parse(self, text: str) -> Scalar:
        """Parse ``text`` using ``+ - * / ^``, integer literals and symbols."""
        return _Parser(self, text).parse()


class Scalar:
    """Immutable sparse polynomial over a :class:`Ring`.

    Supports ``+ - * **`` with other scalars of the same ring and with plain
    integers or Fractions, which are coerced to constants.
    """

    __slots__ = ("ring", "_terms")

    def __init__(self, ring: Ring, terms: Mapping[Exponents, Fraction]):
        object.__setattr__(self, "ring", ring)
        clean = {e: c for e, c in terms.items() if c != 0}
        object.__setattr__(self, "_terms", clean)

    def __setattr__(self, name, value):  # pragma: no cover - immutability guard
        raise AttributeError("Scalar is immutable")

    # -- inspection ------------------------------------------------------

    @property
    def is_zero(self) -> bool:
        return not self._terms

    @property
    def is_constant(self) -> bool:
        return all(all(e == 0 for e in exps) for exps in self._terms)

    def constant_value(self) -> Fraction:
        """The value of a constant polynomial (raises if symbols remain)."""
        if self.is_zero:
            return Fraction(0)
        if not self.is_constant:
            raise ValueError(f"not a constant polynomial: {self}")
        return next(iter(self._terms.values()))

    def terms(self) -> Iterator[tuple[Exponents, Fraction]]:
        """Terms in descending lexicographic order of exponent tuples."""
        return iter(sorted(self._terms.items(), reverse=True))

    def coefficient(self, exps: Exponents) -> Fraction:
        return self._terms.get(tuple(exps), Fraction(0))

    def total_degree(self) -> int:
        if self.is_zero:
            return 0
        return max(sum(e) for e in self._terms)

    # -- ring operations -------------------------------------------------

    def _coerce(self, other) -> "Scalar | None":
        if isinstance(other, Scalar):
            if other.ring != self.ring:
                raise RingMismatchError(
                    f"symbol-set mismatch: {self.ring.symbols} vs {other.ring.symbols}")
            return other
        if isinstance(other, (int, Fraction)):
            return self.ring.const(other)
        return None

    def __add__(self, other):
        rhs = self._coerce(other)
        if rhs is None:
            return NotImplemented
        out = dict(self._terms)
        for exps, coeff in rhs._terms.items():
            out[exps] = out.get(exps, Fraction(0)) + coeff
        return Scalar(self.ring, out)

    __radd__ = __add__

    def __neg__(self):
        return Scalar(self.ring, {e: -c for e, c in self._terms.items()})

    def __sub__(self, other):
        rhs = self._coerce(other)
        if rhs is None:
            return NotImplemented
        return self + (-rhs)

    def __rsub__(self, other):
        rhs = self._coerce(other)
        if rhs is None:
            return NotImplemented
        return rhs + (-self)

    def __mul__(self, other):
        rhs = self._coerce(other)
        if rhs is None:
            return NotImplemented
        out: dict[Exponents, Fraction] = {}
        for e1, c1 in self._terms.items():
            for e2, c2 in rhs._terms.items():
                exps = tuple(a + b for a, b in zip(e1, e2))
                out[exps] = out.get(exps, Fraction(0)) + c1 * c2
        return Scalar(self.ring, out)

    __rmul__ = __mul__

    def __pow__(self, exponent: int):
        if not isinstance(exponent, int) or exponent < 0:
            raise ValueError("exponent must be a non-negative integer")
        result = self.ring.one()
        base = self
        n = exponent
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, Fraction)):
            other = self.ring.const(other)
        if not isinstance(other, Scalar):
            return NotImplemented
        return self.ring == other.ring and self._terms == other._terms

    def __hash__(self) -> int:
        return hash((self.ring.symbols, tuple(sorted(self._terms.items()))))

    # -- substitution ----------------------------------------------------

    def substitute(self, assignment: Mapping[str, RationalLike]) -> Scalar:
        """Partial evaluation; keys must be declared symbols.

        Substitution is a ring homomorphism, so it commutes with ``+``/``*``.
        The result lives in the same ring (a polynomial in the remaining
        symbols).
        """
        values: dict[int, Fraction] = {}
        for name, value in assignment.items():
            if name not in self.ring.symbols:
                raise KeyError(f"unknown symbol {name!r}")
            values[self.ring.symbols.index(name)] = Fraction(value)
        if not values:
            return self
        out: dict[Exponents, Fraction] = {}
        for exps, coeff in self._terms.items():
            new = list(exps)
            for idx, val in values.items():
                coeff = coeff * val ** exps[idx]
                new[idx] = 0
            key = tuple(new)
            out[key] = out.get(key, Fraction(0)) + coeff
        return Scalar(self.ring, out)

    def lift(self, ring: Ring) -> Scalar:
        """Reinterpret in a ring whose symbols start with this ring's."""
        if ring.symbols[: self.ring.nsymbols] != self.ring.symbols:
            raise RingMismatchError(
                f"{ring.symbols} does not extend {self.ring.symbols}")
        pad = (0,) * (ring.nsymbols - self.ring.nsymbols)
        return Scalar(ring, {e + pad: c for e, c in self._terms.items()})

    # -- rendering -------------------------------------------------------

    def __str__(self) -> str:
        if self.is_zero:
            return "0"
        parts: list[str] = []
        for exps, coeff in self.terms():
            monomial = "*".join(
                name if power == 1 else f"{name}^{power}"
                for name, power in zip(self.ring.symbols, exps) if power)
            mag = abs(coeff)
            if not monomial:
                body = str(mag)
            elif mag == 1:
                body = monomial
            else:
                body = f"{mag}*{monomial}"
            if not parts:
                parts.append(f"-{body}" if coeff < 0 else body)
            else:
                parts.append(f"- {body}" if coeff < 0 else f"+ {body}")
        return " ".join(parts)

    def __repr__(self) -> str:
        return f"Scalar({self})"


def normalize_up_to_unit(p: Scalar) -> Scalar:
    """Divide by the rational content and make the leading coefficient positive.

    The leading term is the lexicographically largest exponent tuple.  The
    result is idempotent and invariant under scaling by nonzero rationals;
    zero maps to zero.  Two polynomial systems are compared as sets of
    normalized scalars.
    """
    if p.is_zero:
        return p
    nums = [c.numerator for c in p._terms.values()]
    dens = [c.denominator for c in p._terms.values()]
    content = Fraction(math.gcd(*nums) if len(nums) > 1 else abs(nums[0]),
                       math.lcm(*dens) if len(dens) > 1 else dens[0])
    lead = max(p._terms)
    if p._terms[lead] < 0:
        content = -content
    return p * (1 / content)


def normalized_system(polys) -> set[Scalar]:
    """The set of nonzero normalized scalars of an iterable (zeros dropped)."""
    out = set()
    for p in polys:
        q = normalize_up_to_unit(p)
        if not q.is_zero:
            out.add(q)
    return out


class _Parser:
    """Recursive-descent parser for polynomial strings.

    Grammar: ``expr := term (('+'|'-') term)*``;
    ``term := unary (('*'|'/') unary)*``; ``unary := '-' unary | power``;
    ``power := atom ('^' INT)?``; ``atom := INT | NAME | '(' expr ')'``.
    Division requires a nonzero constant divisor.
    """

    _TOKEN_RE = re.compile(r"\s*(?:(\d+)|([A-Za-z_][A-Za-z0-9_]*)|([-+*/^()]))")

    def __init__(self, ring: Ring, text: str):
        self.ring = ring
        self.text = text
        self.tokens = self._tokenize(text)
        self.pos = 0

    def _tokenize(self, text: str):
        tokens = []
        pos = 0
        while pos < len(text):
            match = self._TOKEN_RE.match(text, pos)
            if not match or match.end() == pos:
                if text[pos:].strip():
                    raise PolynomialParseError(
                        f"unexpected character {text[pos:].strip()[0]!r} in {text!r}")
                break
            if match.group(1) is not None:
                tokens.append(("int", match.group(1)))
            elif match.group(2) is not None:
                tokens.append(("name", match.group(2)))
            else:
                tokens.append(("op", match.group(3)))
            pos = match.end()
        tokens.append(("end", ""))
        return tokens

    def _peek(self):
        return self.tokens[self.pos]

    def _next(self):
        token = self.tokens[self.pos]
        self.pos += 1
        return token

    def parse(self) -> Scalar:
        value = self._expr()
        if self._peek()[0] != "end":
            raise PolynomialParseError(f"trailing input in {self.text!r}")
        return value

    def _expr(self) -> Scalar:
        value = self._term()
        while self._peek() == ("op", "+") or self._peek() == ("op", "-"):
            op = self._next()[1]
            rhs = self._term()
            value = value + rhs if op == "+" else value - rhs
        return value

    def _term(self) -> Scalar:
        value = self._unary()
        while self._peek() == ("op", "*") or self._peek() == ("op", "/"):
            op = self._next()[1]
            rhs = self._unary()
            if op == "*":
                value = value * rhs
            else:
                if not rhs.is_constant or rhs.is_zero:
                    raise PolynomialParseError(
                        f"division only by nonzero constants in {self.text!r}")
                value = value * (1 / rhs.constant_value())
        return value

    def _unary(self) -> Scalar:
        if self._peek() == ("op", "-"):
            self._next()
            return -self._unary()
        if self._peek() == ("op", "+"):
            self._next()
            return self._unary()
        return self._power()

    def _power(self) -> Scalar:
        value = self._atom()
        if self._peek() == ("op", "^"):
            self._next()
            kind, text = self._next()
            if kind != "int":
                raise PolynomialParseError(f"exponent must be an integer in {self.text!r}")
            return value ** int(text)
        return value

    def _atom(self) -> Scalar:
        kind, text = self._next()
        if kind == "int":
            return self.ring.const(int(text))
        if kind == "name":
            try:
                return self.ring.sym(text)
            except KeyError:
                raise PolynomialParseError(
                    f"undeclared symbol {text!r} in {self.text!r}") from None
        if (kind, text) == ("op", "("):
            value = self._expr()
            if self._next() != ("op", ")"):
                raise PolynomialParseError(f"unbalanced parentheses in {self.text!r}")
            return value
        raise PolynomialParseError(f"unexpected token {text!r} in {self.text!r}")
