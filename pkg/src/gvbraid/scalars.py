"""Exact coefficients: sparse multivariate Laurent polynomials over Q.

Every identity this library certifies is checked by exact arithmetic, so the
coefficient ring is a Laurent polynomial ring Q[v1^±1, ..., vk^±1] with
arbitrary-precision rational coefficients.  No floating point anywhere.

A scalar is stored as a map from dense exponent vectors to nonzero
``Fraction`` coefficients.  The exponent vectors are indexed by an ordered
*variable registry*, ``("q", "t")`` unless stated otherwise.  Values are
immutable, hashable and always in canonical form (no zero coefficients), so
``==`` is plain structural equality and doubles as exact ring equality.

String syntax (both directions)::

    (q - q^-1)*t^2 + 1/3

Integer literals, ``+ - * /``, ``^`` with possibly negative integer
exponents, and parentheses.  Division is only allowed by invertible
monomials (in particular by nonzero rational constants).
"""

from __future__ import annotations

import re
from fractions import Fraction
from typing import Iterator, Mapping, Union

__all__ = [
    "DEFAULT_VARIABLES",
    "ONE",
    "RegistryMismatch",
    "Scalar",
    "ScalarParseError",
    "ZERO",
    "parse_scalar",
    "rational",
    "variable",
]

DEFAULT_VARIABLES = ("q", "t")

Coercible = Union["Scalar", int, Fraction]


class RegistryMismatch(ValueError):
    """Raised when combining scalars over different variable registries."""


class ScalarParseError(ValueError):
    """Raised for a malformed scalar expression."""


class Scalar:
    """An exact Laurent polynomial in canonical form.

    >>> q = variable("q")
    >>> str((q - q**-1) * q)
    'q^2 - 1'
    >>> (q + 1) * (q - 1) == q**2 - 1
    True
    """

    __slots__ = ("variables", "_terms", "_hash")

    def __init__(
        self,
        terms: Mapping[tuple[int, ...], Fraction],
        variables: tuple[str, ...] = DEFAULT_VARIABLES,
    ):
        nvars = len(variables)
        canon: dict[tuple[int, ...], Fraction] = {}
        for exps, coeff in terms.items():
            if len(exps) != nvars:
                raise ValueError(f"exponent vector {exps!r} does not match registry {variables!r}")
            if coeff:
                canon[tuple(exps)] = Fraction(coeff)
        object.__setattr__(self, "variables", tuple(variables))
        object.__setattr__(self, "_terms", canon)
        object.__setattr__(self, "_hash", None)

    def __setattr__(self, name, value):  # immutability guard
        raise AttributeError("Scalar is immutable")

    # -- inspection ---------------------------------------------------------

    def terms(self) -> Iterator[tuple[tuple[int, ...], Fraction]]:
        """Iterate (exponent vector, coefficient) pairs in canonical order."""
        return iter(sorted(self._terms.items(), reverse=True))

    def is_zero(self) -> bool:
        return not self._terms

    def is_one(self) -> bool:
        zero_exps = (0,) * len(self.variables)
        return self._terms == {zero_exps: Fraction(1)}

    def is_monomial(self) -> bool:
        return len(self._terms) == 1

    def constant_value(self) -> Fraction:
        """The value of a constant scalar, as a Fraction.

        Raises ValueError if any variable occurs.
        """
        if not self._terms:
            return Fraction(0)
        zero_exps = (0,) * len(self.variables)
        if set(self._terms) != {zero_exps}:
            raise ValueError(f"not a constant: {self}")
        return self._terms[zero_exps]

    def __bool__(self) -> bool:
        return bool(self._terms)

    # -- ring structure -----------------------------------------------------

    def _coerce(self, other: Coercible) -> "Scalar":
        if isinstance(other, Scalar):
            if other.variables != self.variables:
                raise RegistryMismatch(
                    f"cannot mix registries {self.variables!r} and {other.variables!r}"
                )
            return other
        if isinstance(other, (int, Fraction)):
            return Scalar({(0,) * len(self.variables): Fraction(other)}, self.variables)
        return NotImplemented  # type: ignore[return-value]

    def __add__(self, other: Coercible) -> "Scalar":
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        merged = dict(self._terms)
        for exps, coeff in other._terms.items():
            acc = merged.get(exps)
            if acc is None:
                merged[exps] = coeff
            else:
                acc = acc + coeff
                if acc:
                    merged[exps] = acc
                else:
                    del merged[exps]
        return _raw(merged, self.variables)

    __radd__ = __add__

    def __neg__(self) -> "Scalar":
        return _raw({e: -c for e, c in self._terms.items()}, self.variables)

    def __sub__(self, other: Coercible) -> "Scalar":
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other: Coercible) -> "Scalar":
        return (-self) + other

    def __mul__(self, other: Coercible) -> "Scalar":
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        out: dict[tuple[int, ...], Fraction] = {}
        for e1, c1 in self._terms.items():
            for e2, c2 in other._terms.items():
                exps = tuple(a + b for a, b in zip(e1, e2))
                coeff = c1 * c2
                acc = out.get(exps)
                if acc is None:
                    out[exps] = coeff
                else:
                    acc = acc + coeff
                    if acc:
                        out[exps] = acc
                    else:
                        del out[exps]
        return _raw(out, self.variables)

    __rmul__ = __mul__

    def __truediv__(self, other: Coercible) -> "Scalar":
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self * other ** -1

    def __pow__(self, n: int) -> "Scalar":
        if not isinstance(n, int):
            raise TypeError("exponent must be an integer")
        if n < 0:
            if len(self._terms) != 1:
                raise ValueError(f"cannot invert non-monomial scalar {self}")
            ((exps, coeff),) = self._terms.items()
            inv = _raw({tuple(-e for e in exps): 1 / coeff}, self.variables)
            return inv ** (-n)
        result = Scalar({(0,) * len(self.variables): Fraction(1)}, self.variables)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    # -- comparison ---------------------------------------------------------

    def __eq__(self, other: object) -> bool:
        if isinstance(other, (int, Fraction)):
            other = self._coerce(other)
        if not isinstance(other, Scalar):
            return NotImplemented
        return self.variables == other.variables and self._terms == other._terms

    def __hash__(self) -> int:
        h = self._hash
        if h is None:
            h = hash((self.variables, frozenset(self._terms.items())))
            object.__setattr__(self, "_hash", h)
        return h

    # -- formatting ---------------------------------------------------------

    def _format_monomial(self, exps: tuple[int, ...], coeff: Fraction) -> str:
        var_part = "*".join(
            name if e == 1 else f"{name}^{e}"
            for name, e in zip(self.variables, exps)
            if e != 0
        )
        if not var_part:
            return str(coeff)
        if coeff == 1:
            return var_part
        if coeff == -1:
            return f"-{var_part}"
        return f"{coeff}*{var_part}"

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        pieces = []
        for i, (exps, coeff) in enumerate(self.terms()):
            text = self._format_monomial(exps, coeff)
            if i == 0:
                pieces.append(text)
            elif text.startswith("-"):
                pieces.append(f" - {text[1:]}")
            else:
                pieces.append(f" + {text}")
        return "".join(pieces)

    def __repr__(self) -> str:
        return f"Scalar({str(self)!r})"


def _raw(terms: dict[tuple[int, ...], Fraction], variables: tuple[str, ...]) -> Scalar:
    """Build a Scalar from an already-canonical term dict, skipping checks."""
    s = Scalar({}, variables)
    object.__setattr__(s, "_terms", {e: c for e, c in terms.items() if c})
    return s


def rational(value: Union[int, Fraction, str], variables: tuple[str, ...] = DEFAULT_VARIABLES) -> Scalar:
    """The constant scalar with the given rational value."""
    return Scalar({(0,) * len(variables): Fraction(value)}, variables)


def variable(name: str, variables: tuple[str, ...] = DEFAULT_VARIABLES) -> Scalar:
    """The scalar for a single registry variable."""
    if name not in variables:
        raise RegistryMismatch(f"unknown variable {name!r}; registry is {variables!r}")
    exps = tuple(1 if v == name else 0 for v in variables)
    return Scalar({exps: Fraction(1)}, variables)


ZERO = rational(0)
ONE = rational(1)


# -- parser -----------------------------------------------------------------

_TOKEN = re.compile(r"\s*(?:(?P<int>\d+)|(?P<name>[A-Za-z_][A-Za-z_0-9]*)|(?P<op>[-+*/^()]))")


def _tokenize(text: str) -> list[tuple[str, str]]:
    tokens: list[tuple[str, str]] = []
    pos = 0
    while pos < len(text):
        match = _TOKEN.match(text, pos)
        if match is None:
            rest = text[pos:].strip()
            if not rest:
                break
            raise ScalarParseError(f"unexpected character at {rest[:10]!r}")
        pos = match.end()
        if match.lastgroup == "int":
            tokens.append(("int", match.group("int")))
        elif match.lastgroup == "name":
            tokens.append(("name", match.group("name")))
        else:
            tokens.append(("op", match.group("op")))
    return tokens


class _Parser:
    """Recursive-descent parser for the scalar expression grammar."""

    def __init__(self, tokens: list[tuple[str, str]], variables: tuple[str, ...]):
        self.tokens = tokens
        self.pos = 0
        self.variables = variables

    def peek(self) -> tuple[str, str] | None:
        return self.tokens[self.pos] if self.pos < len(self.tokens) else None

    def take(self) -> tuple[str, str]:
        tok = self.peek()
        if tok is None:
            raise ScalarParseError("unexpected end of expression")
        self.pos += 1
        return tok

    def expect_op(self, op: str) -> None:
        tok = self.take()
        if tok != ("op", op):
            raise ScalarParseError(f"expected {op!r}, found {tok[1]!r}")

    def parse_expr(self) -> Scalar:
        value = self.parse_term()
        while True:
            tok = self.peek()
            if tok == ("op", "+"):
                self.take()
                value = value + self.parse_term()
            elif tok == ("op", "-"):
                self.take()
                value = value - self.parse_term()
            else:
                return value

    def parse_term(self) -> Scalar:
        value = self.parse_factor()
        while True:
            tok = self.peek()
            if tok == ("op", "*"):
                self.take()
                value = value * self.parse_factor()
            elif tok == ("op", "/"):
                self.take()
                divisor = self.parse_factor()
                try:
                    value = value / divisor
                except ValueError as exc:
                    raise ScalarParseError(str(exc)) from exc
            else:
                return value

    def parse_factor(self) -> Scalar:
        tok = self.peek()
        if tok == ("op", "-"):
            self.take()
            return -self.parse_factor()
        if tok == ("op", "+"):
            self.take()
            return self.parse_factor()
        return self.parse_power()

    def parse_power(self) -> Scalar:
        base = self.parse_atom()
        if self.peek() == ("op", "^"):
            self.take()
            exponent = self.parse_signed_int()
            try:
                return base ** exponent
            except ValueError as exc:
                raise ScalarParseError(str(exc)) from exc
        return base

    def parse_signed_int(self) -> int:
        sign = 1
        tok = self.take()
        if tok == ("op", "-"):
            sign = -1
            tok = self.take()
        elif tok == ("op", "+"):
            tok = self.take()
        if tok[0] != "int":
            raise ScalarParseError(f"expected integer exponent, found {tok[1]!r}")
        return sign * int(tok[1])

    def parse_atom(self) -> Scalar:
        tok = self.take()
        if tok[0] == "int":
            return rational(int(tok[1]), self.variables)
        if tok[0] == "name":
            return variable(tok[1], self.variables)
        if tok == ("op", "("):
            value = self.parse_expr()
            self.expect_op(")")
            return value
        raise ScalarParseError(f"unexpected token {tok[1]!r}")


def parse_scalar(text: str, variables: tuple[str, ...] = DEFAULT_VARIABLES) -> Scalar:
    """Parse the canonical string syntax back into a Scalar.

    >>> parse_scalar("(q - q^-1)*t^2 + 1/3") == parse_scalar("q*t^2 - q^-1*t^2 + 1/3")
    True
    """
    tokens = _tokenize(text)
    if not tokens:
        raise ScalarParseError("empty expression")
    parser = _Parser(tokens, variables)
    value = parser.parse_expr()
    if parser.peek() is not None:
        raise ScalarParseError(f"trailing input from {parser.peek()[1]!r}")
    return value
