"""Exterior algebra on n anticommuting generators with exact coefficients.

An element is a table mapping subsets of [n] (encoded as bitmasks, bit i-1
for generator i) to coefficients, which may be exact scalars or
:class:`~hyperpfaffian.poly.Polynomial` values.  The basis element for a
subset S is the ascending product of its generators, so the product of two
basis elements over disjoint subsets is the basis element of the union
times (-1) to the number of crossing pairs, and products over overlapping
subsets vanish.

This is the performance-sensitive kernel: wedging two elements touches
every pair of stored subsets, and the bitmask encoding keeps the
disjointness test and the crossing count at machine speed.
"""

from __future__ import annotations

from typing import Iterator, Mapping, Sequence

from .poly import Polynomial, Scalar


def _mask_of(subset: Sequence[int], n: int) -> int:
    mask = 0
    for element in subset:
        if not isinstance(element, int) or not 1 <= element <= n:
            raise ValueError(f"subset element {element!r} is not in 1..{n}")
        bit = 1 << (element - 1)
        if mask & bit:
            raise ValueError(f"repeated element {element} in subset {tuple(subset)!r}")
        mask |= bit
    return mask


def _subset_of(mask: int) -> tuple[int, ...]:
    out = []
    index = 1
    while mask:
        if mask & 1:
            out.append(index)
        mask >>= 1
        index += 1
    return tuple(out)


def merge_sign(s_mask: int, t_mask: int) -> int:
    """Sign of reordering the ascending concatenation of disjoint S and T:
    (-1) to the number of pairs (s, t) in S x T with s > t."""
    crossings = 0
    remaining = t_mask
    while remaining:
        low = remaining & -remaining
        above = low.bit_length()  # bits strictly above this generator
        crossings += (s_mask >> above).bit_count()
        remaining ^= low
    return -1 if crossings & 1 else 1


class ExteriorElement:
    """Element of the exterior algebra over n generators."""

    __slots__ = ("n", "table")

    def __init__(self, n: int, table: Mapping[int, Scalar | Polynomial] | None = None):
        if not isinstance(n, int) or n < 0:
            raise ValueError(f"number of generators must be a nonnegative integer, got {n!r}")
        self.n = n
        cleaned: dict[int, Scalar | Polynomial] = {}
        if table:
            full = (1 << n) - 1
            for mask, coeff in table.items():
                if not isinstance(mask, int) or mask < 0 or mask & ~full:
                    raise ValueError(f"mask {mask!r} is not a subset of [{n}]")
                if coeff:
                    cleaned[mask] = coeff
        self.table = cleaned

    @classmethod
    def _raw(cls, n: int, table: dict) -> "ExteriorElement":
        element = object.__new__(cls)
        element.n = n
        element.table = table
        return element

    @classmethod
    def scalar(cls, n: int, value: Scalar | Polynomial) -> "ExteriorElement":
        return cls(n, {0: value})

    @classmethod
    def generator(cls, n: int, index: int) -> "ExteriorElement":
        return cls(n, {_mask_of((index,), n): 1})

    @classmethod
    def from_subset_values(
        cls, n: int, values: Mapping[Sequence[int], Scalar | Polynomial]
    ) -> "ExteriorElement":
        """Build the sum of value(S) times the basis element of S."""
        table: dict[int, Scalar | Polynomial] = {}
        for subset, coeff in values.items():
            mask = _mask_of(subset, n)
            if mask in table:
                raise ValueError(f"subset {tuple(subset)!r} listed twice")
            if coeff:
                table[mask] = coeff
        return cls._raw(n, table)

    def coefficient(self, subset: Sequence[int]) -> Scalar | Polynomial:
        return self.table.get(_mask_of(subset, self.n), 0)

    def top_coefficient(self) -> Scalar | Polynomial:
        """Coefficient of the full-set basis element (0 if absent)."""
        return self.table.get((1 << self.n) - 1, 0)

    def grades(self) -> set[int]:
        return {mask.bit_count() for mask in self.table}

    def subsets(self) -> Iterator[tuple[tuple[int, ...], Scalar | Polynomial]]:
        for mask in sorted(self.table):
            yield _subset_of(mask), self.table[mask]

    def __bool__(self) -> bool:
        return bool(self.table)

    def __eq__(self, other) -> bool:
        if not isinstance(other, ExteriorElement):
            return NotImplemented
        return self.n == other.n and self.table == other.table

    __hash__ = None

    def __add__(self, other: "ExteriorElement") -> "ExteriorElement":
        if not isinstance(other, ExteriorElement):
            return NotImplemented
        if self.n != other.n:
            raise ValueError(f"mismatched generator counts: {self.n} vs {other.n}")
        out = dict(self.table)
        for mask, coeff in other.table.items():
            acc = out.get(mask, 0) + coeff
            if acc:
                out[mask] = acc
            elif mask in out:
                del out[mask]
        return ExteriorElement._raw(self.n, out)

    def __neg__(self) -> "ExteriorElement":
        return ExteriorElement._raw(self.n, {m: -c for m, c in self.table.items()})

    def __sub__(self, other: "ExteriorElement") -> "ExteriorElement":
        return self + (-other)

    def scale(self, value: Scalar | Polynomial) -> "ExteriorElement":
        if not value:
            return ExteriorElement._raw(self.n, {})
        return ExteriorElement._raw(self.n, {m: c * value for m, c in self.table.items()})

    def wedge(self, other: "ExteriorElement") -> "ExteriorElement":
        """Bilinear product; overlapping subset pairs contribute nothing."""
        if not isinstance(other, ExteriorElement):
            raise TypeError(f"cannot wedge with {type(other).__name__}")
        if self.n != other.n:
            raise ValueError(f"mismatched generator counts: {self.n} vs {other.n}")
        out: dict[int, Scalar | Polynomial] = {}
        get = out.get
        for s_mask, s_coeff in self.table.items():
            for t_mask, t_coeff in other.table.items():
                if s_mask & t_mask:
                    continue
                value = s_coeff * t_coeff
                if merge_sign(s_mask, t_mask) < 0:
                    value = -value
                union = s_mask | t_mask
                acc = get(union)
                out[union] = value if acc is None else acc + value
        return ExteriorElement._raw(self.n, {m: c for m, c in out.items() if c})

    def _wedge_square(self) -> "ExteriorElement":
        """Wedge of the element with itself, visiting each unordered subset
        pair once: odd-grade pairs cancel outright, others contribute twice.
        """
        items = list(self.table.items())
        out: dict[int, Scalar | Polynomial] = {}
        get = out.get
        empty = self.table.get(0)
        if empty:
            out[0] = empty * empty
        for i, (s_mask, s_coeff) in enumerate(items):
            for t_mask, t_coeff in items[i + 1:]:
                if s_mask & t_mask:
                    continue
                factor = merge_sign(s_mask, t_mask) + merge_sign(t_mask, s_mask)
                if not factor:
                    continue
                value = s_coeff * t_coeff * factor
                union = s_mask | t_mask
                acc = get(union)
                out[union] = value if acc is None else acc + value
        return ExteriorElement._raw(self.n, {m: c for m, c in out.items() if c})

    def wedge_power(self, m: int) -> "ExteriorElement":
        """m-fold wedge of the element with itself; m = 0 gives the scalar 1.

        Uses binary exponentiation, which halves the number of full
        products for the even-grade elements this library powers up, with a
        dedicated squaring that visits each unordered subset pair once.
        """
        if not isinstance(m, int) or m < 0:
            raise ValueError(f"wedge power must be a nonnegative integer, got {m!r}")
        if m == 0:
            return ExteriorElement.scalar(self.n, 1)
        result: ExteriorElement | None = None
        base = self
        while m:
            if m & 1:
                result = base if result is None else result.wedge(base)
            m >>= 1
            if m:
                base = base._wedge_square()
        return result

    def __repr__(self) -> str:
        body = ", ".join(f"{subset}: {coeff}" for subset, coeff in self.subsets())
        return f"ExteriorElement(n={self.n}, {{{body}}})"
