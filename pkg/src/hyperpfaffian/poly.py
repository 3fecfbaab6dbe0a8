"""Exact sparse multivariate polynomial arithmetic over the rationals.

Variables are identified by 1-based index, so ``x1, x2, ...`` throughout.
A monomial is a tuple of ``(variable, exponent)`` pairs sorted by variable,
with strictly positive exponents; the empty tuple is the constant monomial.
A :class:`Polynomial` maps monomials to nonzero coefficients, which are
exact rationals (``int`` or :class:`fractions.Fraction`).  Every operation
is exact, so polynomial identities are checked with plain ``==`` on term
maps -- there is no tolerance anywhere.

The canonical text rendering sorts terms in ascending graded lexicographic
order (total degree first, then exponents of x1, x2, ... compared
entrywise) and writes terms like ``3*x1*x2^2`` with explicit ``+``/``-``
separators.  :func:`parse_polynomial` inverts :func:`render`.
"""

from __future__ import annotations

import re
from fractions import Fraction
from functools import lru_cache, reduce
from typing import Mapping, Sequence, Union

Scalar = Union[int, Fraction]
#: sorted tuple of (variable, exponent) pairs; () is the constant monomial
Monomial = tuple

_CONST: Monomial = ()


def is_scalar(value) -> bool:
    return isinstance(value, (int, Fraction))


def _merge_monomials(a: Monomial, b: Monomial) -> Monomial:
    """Multiply two monomials: merge sorted pair tuples, adding exponents."""
    if not a:
        return b
    if not b:
        return a
    out = []
    i = j = 0
    la, lb = len(a), len(b)
    while i < la and j < lb:
        va, ea = a[i]
        vb, eb = b[j]
        if va < vb:
            out.append(a[i])
            i += 1
        elif vb < va:
            out.append(b[j])
            j += 1
        else:
            out.append((va, ea + eb))
            i += 1
            j += 1
    out.extend(a[i:])
    out.extend(b[j:])
    return tuple(out)


class Polynomial:
    """Immutable-by-convention sparse polynomial with exact coefficients.

    Do not mutate ``terms`` of a polynomial you did not build yourself;
    all arithmetic returns fresh objects.
    """

    __slots__ = ("terms",)

    def __init__(self, terms: Mapping[Monomial, Scalar] | None = None):
        cleaned: dict[Monomial, Scalar] = {}
        if terms:
            for mono, coeff in terms.items():
                if coeff:
                    cleaned[mono] = coeff
        self.terms = cleaned

    @classmethod
    def _raw(cls, terms: dict) -> "Polynomial":
        p = object.__new__(cls)
        p.terms = terms
        return p

    @classmethod
    def zero(cls) -> "Polynomial":
        return cls._raw({})

    @classmethod
    def one(cls) -> "Polynomial":
        return cls._raw({_CONST: 1})

    @classmethod
    def constant(cls, value: Scalar) -> "Polynomial":
        return cls._raw({_CONST: value} if value else {})

    @classmethod
    def variable(cls, index: int) -> "Polynomial":
        if not isinstance(index, int) or index < 1:
            raise ValueError(f"variable index must be a positive integer, got {index!r}")
        return cls._raw({((index, 1),): 1})

    @classmethod
    def monomial(cls, exponents: Mapping[int, int], coeff: Scalar = 1) -> "Polynomial":
        """Build ``coeff * prod x_v^e`` from an exponent map (zeros dropped)."""
        pairs = []
        for var, exp in exponents.items():
            if not isinstance(var, int) or var < 1:
                raise ValueError(f"variable index must be a positive integer, got {var!r}")
            if not isinstance(exp, int) or exp < 0:
                raise ValueError(f"exponent of x{var} must be a nonnegative integer, got {exp!r}")
            if exp:
                pairs.append((var, exp))
        if not coeff:
            return cls.zero()
        return cls._raw({tuple(sorted(pairs)): coeff})

    # -- ring structure -------------------------------------------------

    def __bool__(self) -> bool:
        return bool(self.terms)

    def is_zero(self) -> bool:
        return not self.terms

    def __eq__(self, other) -> bool:
        if isinstance(other, Polynomial):
            return self.terms == other.terms
        if is_scalar(other):
            if not other:
                return not self.terms
            return self.terms == {_CONST: other}
        return NotImplemented

    __hash__ = None  # mutable mapping inside

    def __neg__(self) -> "Polynomial":
        return Polynomial._raw({m: -c for m, c in self.terms.items()})

    def __add__(self, other) -> "Polynomial":
        if is_scalar(other):
            other = Polynomial.constant(other)
        if not isinstance(other, Polynomial):
            return NotImplemented
        if not self.terms:
            return other
        if not other.terms:
            return self
        out = dict(self.terms)
        for mono, coeff in other.terms.items():
            acc = out.get(mono, 0) + coeff
            if acc:
                out[mono] = acc
            elif mono in out:
                del out[mono]
        return Polynomial._raw(out)

    __radd__ = __add__

    def __sub__(self, other) -> "Polynomial":
        if is_scalar(other):
            other = Polynomial.constant(other)
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other) -> "Polynomial":
        return (-self) + other

    def __mul__(self, other) -> "Polynomial":
        if is_scalar(other):
            if not other:
                return Polynomial.zero()
            return Polynomial._raw({m: c * other for m, c in self.terms.items()})
        if not isinstance(other, Polynomial):
            return NotImplemented
        a, b = self.terms, other.terms
        if not a or not b:
            return Polynomial.zero()
        out: dict[Monomial, Scalar] = {}
        # Over disjoint variable sets (the common case in block products)
        # distinct term pairs give distinct product monomials, so no
        # accumulation, cancellation, or cleanup can occur.
        if self.variables().isdisjoint(other.variables()):
            b_items = list(b.items())
            for m1, c1 in a.items():
                for m2, c2 in b_items:
                    out[tuple(sorted(m1 + m2))] = c1 * c2
            return Polynomial._raw(out)
        get = out.get
        for m1, c1 in a.items():
            for m2, c2 in b.items():
                key = _merge_monomials(m1, m2)
                acc = get(key)
                out[key] = c1 * c2 if acc is None else acc + c1 * c2
        return Polynomial._raw({m: c for m, c in out.items() if c})

    __rmul__ = __mul__

    def __pow__(self, exponent: int) -> "Polynomial":
        if not isinstance(exponent, int) or exponent < 0:
            raise ValueError(f"polynomial exponent must be a nonnegative integer, got {exponent!r}")
        result = Polynomial.one()
        for _ in range(exponent):
            result = result * self
        return result

    # -- queries ---------------------------------------------------------

    def variables(self) -> set[int]:
        return {var for mono in self.terms for var, _ in mono}

    def degree(self) -> int:
        """Total degree; the zero polynomial has degree 0 by convention."""
        if not self.terms:
            return 0
        return max(sum(e for _, e in mono) for mono in self.terms)

    def is_homogeneous(self) -> bool:
        degrees = {sum(e for _, e in mono) for mono in self.terms}
        return len(degrees) <= 1

    def coefficient(self, exponents: Mapping[int, int]) -> Scalar:
        key = tuple(sorted((v, e) for v, e in exponents.items() if e))
        return self.terms.get(key, 0)

    def evaluate(self, point: Mapping[int, Scalar]) -> Scalar:
        """Exact value at a point assigning every variable of the polynomial."""
        total: Scalar = 0
        for mono, coeff in self.terms.items():
            value = coeff
            for var, exp in mono:
                try:
                    value = value * point[var] ** exp
                except KeyError:
                    raise ValueError(f"no value assigned to variable x{var}") from None
            total += value
        return total

    def map_variables(self, mapping: Mapping[int, int]) -> "Polynomial":
        """Rename variables; unmapped variables stay put.

        The mapping need not be injective: substituting x_i -> x_j merges
        exponents and collects any colliding terms.
        """
        out: dict[Monomial, Scalar] = {}
        for mono, coeff in self.terms.items():
            exps: dict[int, int] = {}
            for var, exp in mono:
                target = mapping.get(var, var)
                if not isinstance(target, int) or target < 1:
                    raise ValueError(f"variable index must be a positive integer, got {target!r}")
                exps[target] = exps.get(target, 0) + exp
            key = tuple(sorted(exps.items()))
            acc = out.get(key, 0) + coeff
            if acc:
                out[key] = acc
            elif key in out:
                del out[key]
        return Polynomial._raw(out)

    def div_exact(self, divisor: int) -> "Polynomial":
        return Polynomial._raw({m: _div_scalar(c, divisor) for m, c in self.terms.items()})

    # -- rendering --------------------------------------------------------

    def sorted_terms(self) -> list[tuple[Monomial, Scalar]]:
        """Terms in ascending graded lexicographic order."""
        if not self.terms:
            return []
        occurring = self.variables()
        top = max(occurring) if occurring else 0

        def key(item):
            mono, _ = item
            exps = dict(mono)
            return (sum(exps.values()), tuple(exps.get(v, 0) for v in range(1, top + 1)))

        return sorted(self.terms.items(), key=key)

    def __str__(self) -> str:
        return render(self)

    def __repr__(self) -> str:
        return f"Polynomial({render(self)})"


def _div_scalar(value: Scalar, divisor: int) -> Scalar:
    if divisor == 0:
        raise ZeroDivisionError("division of exact coefficients by zero")
    if isinstance(value, int):
        quotient, remainder = divmod(value, divisor)
        if remainder:
            raise ArithmeticError(
                f"inexact division {value}/{divisor}; this indicates an implementation bug"
            )
        return quotient
    return value / divisor


def div_exact(value: Scalar | Polynomial, divisor: int):
    """Divide a scalar or polynomial by an integer, insisting on exactness."""
    if isinstance(value, Polynomial):
        return value.div_exact(divisor)
    return _div_scalar(value, divisor)


@lru_cache(maxsize=None)
def vandermonde(n: int) -> Polynomial:
    """The expanded product of ``x_j - x_i`` over all pairs 1 <= i < j <= n.

    Homogeneous of degree n*(n-1)/2 with exactly n! terms, all of
    coefficient +1 or -1.  Cached; treat the result as immutable.
    """
    if not isinstance(n, int) or n < 1:
        raise ValueError(f"vandermonde requires a positive integer order, got {n!r}")
    factors = [
        Polynomial.variable(j) - Polynomial.variable(i)
        for j in range(2, n + 1)
        for i in range(1, j)
    ]
    return reduce(lambda p, q: p * q, factors, Polynomial.one())


def vandermonde_at(values: Sequence[Scalar]) -> Scalar:
    """Evaluate the Vandermonde product at a point without expanding it."""
    total: Scalar = 1
    for j in range(1, len(values)):
        for i in range(j):
            total *= values[j] - values[i]
    return total


# -- canonical text form ---------------------------------------------------


def _render_magnitude(coeff: Scalar, mono: Monomial) -> str:
    body = "*".join(f"x{v}" if e == 1 else f"x{v}^{e}" for v, e in mono)
    if not body:
        return str(coeff)
    if coeff == 1:
        return body
    return f"{coeff}*{body}"


def render(p: Polynomial) -> str:
    """Canonical single-line rendering used by the CLI and golden tests."""
    items = p.sorted_terms()
    if not items:
        return "0"
    pieces = []
    for index, (mono, coeff) in enumerate(items):
        negative = coeff < 0
        magnitude = _render_magnitude(-coeff if negative else coeff, mono)
        if index == 0:
            pieces.append(f"-{magnitude}" if negative else magnitude)
        else:
            pieces.append(f" - {magnitude}" if negative else f" + {magnitude}")
    return "".join(pieces)


_TOKEN = re.compile(r"\s*(x\d+|\d+|[*/^+\-])")


def _tokenize(text: str) -> list[str]:
    tokens = []
    pos = 0
    while pos < len(text):
        match = _TOKEN.match(text, pos)
        if match is None:
            raise ValueError(f"cannot parse polynomial near {text[pos:]!r}")
        tokens.append(match.group(1))
        pos = match.end()
    return tokens


def parse_polynomial(text: str) -> Polynomial:
    """Parse the canonical rendering back into a polynomial."""
    tokens = _tokenize(text)
    if not tokens:
        raise ValueError("empty polynomial text")
    pos = 0

    def peek() -> str | None:
        return tokens[pos] if pos < len(tokens) else None

    def take() -> str:
        nonlocal pos
        token = tokens[pos]
        pos += 1
        return token

    def take_number() -> int:
        token = peek()
        if token is None or not token.isdigit():
            raise ValueError(f"expected a number, got {token!r}")
        return int(take())

    def parse_factor(coeff: Scalar, exps: dict[int, int]) -> Scalar:
        token = peek()
        if token is None:
            raise ValueError("unexpected end of polynomial text")
        if token.isdigit():
            value: Scalar = take_number()
            if peek() == "/":
                take()
                value = Fraction(value, take_number())
            return coeff * value
        if token.startswith("x"):
            take()
            var = int(token[1:])
            exp = 1
            if peek() == "^":
                take()
                exp = take_number()
            exps[var] = exps.get(var, 0) + exp
            return coeff
        raise ValueError(f"unexpected token {token!r} in polynomial text")

    terms: dict[Monomial, Scalar] = {}
    sign = 1
    token = peek()
    if token in ("+", "-"):
        take()
        sign = -1 if token == "-" else 1
    while True:
        coeff: Scalar = 1
        exps: dict[int, int] = {}
        coeff = parse_factor(coeff, exps)
        while peek() == "*":
            take()
            coeff = parse_factor(coeff, exps)
        mono = tuple(sorted((v, e) for v, e in exps.items() if e))
        acc = terms.get(mono, 0) + sign * coeff
        if acc:
            terms[mono] = acc
        elif mono in terms:
            del terms[mono]
        token = peek()
        if token is None:
            break
        if token not in ("+", "-"):
            raise ValueError(f"unexpected token {token!r} in polynomial text")
        take()
        sign = -1 if token == "-" else 1
    return Polynomial(terms)
