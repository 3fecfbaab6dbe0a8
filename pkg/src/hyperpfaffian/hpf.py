"""The three hyperpfaffian evaluation routes and the identities tying a
skew-symmetric function's hyperpfaffian to its coefficients.

A skew-symmetric k-ary function on [n] is determined by its values on the
sorted k-subsets, with values on other argument orders defined by the sign
of the reordering.  Two input shapes are supported:

* :class:`SkewSpec` -- a homogeneous skew-symmetric *polynomial* in k
  variables described by one coefficient per strictly increasing exponent
  tuple (antisymmetrizing each such term over all k! orders recovers the
  full polynomial);
* :class:`SkewFunction` -- arbitrary exact values (scalars or polynomials)
  on all sorted k-subsets of [n].

The three routes:

* :func:`pf_definition` -- the signed sum over equal-block partitions of
  the products of block values;
* :func:`pf_exterior` -- the coefficient of the full wedge in the
  (n/k)-th wedge power of the subset-weighted generator sum, divided
  exactly by (n/k)!;
* :func:`pf_closed_form` -- for a SkewSpec of full degree k/2*(n-1), the
  closed form: a signed sum of coefficient products over composition
  tilings times the Vandermonde product.

All three agree exactly; the test suite checks this symbolically and at
integer points.
"""

from __future__ import annotations

from itertools import combinations, permutations
from math import comb, factorial
from typing import Mapping, Sequence, Union

from .combinat import (
    composition_tilings,
    inversion_sign,
    permutation_sign,
    signed_equal_block_partitions,
    tiling_sign,
)
from .exterior import ExteriorElement
from .poly import Polynomial, Scalar, div_exact, is_scalar, vandermonde

Value = Union[Scalar, Polynomial]


class SkewSpec:
    """Coefficient description of a homogeneous skew-symmetric polynomial.

    ``coeffs`` maps strictly increasing k-tuples of nonnegative exponents
    (each summing to ``degree``) to nonzero rational coefficients.  The
    default degree, k/2*(n-1), is the one for which the closed form
    applies; lower homogeneous degrees are legal and make the
    hyperpfaffian vanish.
    """

    __slots__ = ("n", "k", "degree", "coeffs")

    def __init__(
        self,
        n: int,
        k: int,
        coeffs: Mapping[Sequence[int], Scalar],
        degree: int | None = None,
    ):
        if not isinstance(n, int) or n < 1:
            raise ValueError(f"order n must be a positive integer, got {n!r}")
        if not isinstance(k, int) or k < 2 or k % 2:
            raise ValueError(f"arity k must be a positive even integer, got {k!r}")
        if degree is None:
            degree = k * (n - 1) // 2
        if not isinstance(degree, int) or degree < 0:
            raise ValueError(f"degree must be a nonnegative integer, got {degree!r}")
        self.n = n
        self.k = k
        self.degree = degree
        cleaned: dict[tuple[int, ...], Scalar] = {}
        for key, value in coeffs.items():
            exponents = tuple(key)
            if len(exponents) != k or not all(isinstance(e, int) for e in exponents):
                raise ValueError(f"exponent tuple {exponents!r} is not a {k}-tuple of integers")
            if exponents[0] < 0 or any(a >= b for a, b in zip(exponents, exponents[1:])):
                raise ValueError(f"exponent tuple {exponents!r} is not strictly increasing")
            if sum(exponents) != degree:
                raise ValueError(
                    f"exponent tuple {exponents!r} sums to {sum(exponents)}, expected {degree}"
                )
            if not is_scalar(value):
                raise ValueError(f"coefficient for {exponents!r} is not an exact rational: {value!r}")
            if exponents in cleaned:
                raise ValueError(f"duplicate exponent tuple {exponents!r}")
            if value:
                cleaned[exponents] = value
        self.coeffs = dict(sorted(cleaned.items()))

    @property
    def full_degree(self) -> int:
        return self.k * (self.n - 1) // 2

    def coefficient(self, exponents: Sequence[int]) -> Scalar:
        """Coefficient lookup; tuples absent from the spec count as 0."""
        return self.coeffs.get(tuple(exponents), 0)

    def __eq__(self, other) -> bool:
        if not isinstance(other, SkewSpec):
            return NotImplemented
        return (
            self.n == other.n
            and self.k == other.k
            and self.degree == other.degree
            and self.coeffs == other.coeffs
        )

    __hash__ = None

    def __repr__(self) -> str:
        return f"SkewSpec(n={self.n}, k={self.k}, degree={self.degree}, coeffs={self.coeffs})"


class SkewFunction:
    """Skew-symmetric k-ary function on [n], stored on sorted k-subsets.

    For sorted-subset input skew-symmetry is definitional: values at other
    argument orders are the stored value times the sign of the sorting
    permutation (see :meth:`value_at`).
    """

    __slots__ = ("n", "k", "values")

    def __init__(self, n: int, k: int, values: Mapping[Sequence[int], Value]):
        if not isinstance(n, int) or n < 1:
            raise ValueError(f"order n must be a positive integer, got {n!r}")
        if not isinstance(k, int) or k < 2 or k % 2 or k > n:
            raise ValueError(f"arity k must be a positive even integer <= n, got k={k!r}")
        self.n = n
        self.k = k
        stored: dict[tuple[int, ...], Value] = {}
        for key, value in values.items():
            subset = tuple(key)
            stored[subset] = value
        expected = set(combinations(range(1, n + 1), k))
        if set(stored) != expected:
            missing = sorted(expected - set(stored))[:3]
            extra = sorted(set(stored) - expected)[:3]
            raise ValueError(
                f"values must cover exactly the sorted {k}-subsets of [{n}]"
                + (f"; missing {missing}" if missing else "")
                + (f"; unexpected {extra}" if extra else "")
            )
        self.values = stored

    def __getitem__(self, subset: Sequence[int]) -> Value:
        return self.values[tuple(subset)]

    def value_at(self, args: Sequence[int]) -> Value:
        """Value at an arbitrary argument order (0 on repeated arguments)."""
        ordered = tuple(args)
        if len(set(ordered)) != len(ordered):
            return 0
        sign = inversion_sign(ordered)
        value = self.values[tuple(sorted(ordered))]
        return value if sign > 0 else -value

    def map_values(self, transform) -> "SkewFunction":
        return SkewFunction(self.n, self.k, {s: transform(v) for s, v in self.values.items()})


def skew_expand(spec: SkewSpec) -> Polynomial:
    """The full k-variable polynomial: antisymmetrize each coefficient's
    monomial over all k! argument orders with the permutation sign.

    Since exponent tuples have distinct parts, the k! rearranged monomials
    are distinct and the result has exactly k! * len(coeffs) terms.
    """
    terms: dict[tuple, Scalar] = {}
    k = spec.k
    for exponents, coeff in spec.coeffs.items():
        for order in permutations(range(k)):
            sign = inversion_sign(order)
            mono = tuple(
                (position + 1, exponents[order[position]])
                for position in range(k)
                if exponents[order[position]]
            )
            terms[mono] = sign * coeff
    return Polynomial(terms)


def instantiate(p: Polynomial, block: Sequence[int]) -> Polynomial:
    """Substitute x_j -> x_{block[j-1]}: the polynomial on a block's variables."""
    width = len(block)
    high = [v for v in p.variables() if v > width]
    if high:
        raise ValueError(
            f"polynomial uses variable x{max(high)} but the block has only {width} slots"
        )
    return p.map_variables({j + 1: block[j] for j in range(width)})


def skew_function_from_spec(spec: SkewSpec) -> SkewFunction:
    """Materialize a spec's polynomial values on all sorted k-subsets of [n]."""
    expanded = skew_expand(spec)
    values = {
        subset: instantiate(expanded, subset)
        for subset in combinations(range(1, spec.n + 1), spec.k)
    }
    return SkewFunction(spec.n, spec.k, values)


def _point_mapping(point: Sequence[Scalar]) -> dict[int, Scalar]:
    return {index + 1: value for index, value in enumerate(point)}


def skew_function_from_spec_at(spec: SkewSpec, point: Sequence[Scalar]) -> SkewFunction:
    """Scalar values of the spec's polynomial at a point, per sorted subset.

    Avoids materializing the n-variable symbolic values, which matters for
    the evaluation-based identity checks at larger n.
    """
    if len(point) != spec.n:
        raise ValueError(f"point has {len(point)} coordinates, expected {spec.n}")
    expanded = skew_expand(spec)
    values: dict[tuple[int, ...], Value] = {}
    for subset in combinations(range(1, spec.n + 1), spec.k):
        assignment = {j + 1: point[subset[j] - 1] for j in range(spec.k)}
        values[subset] = expanded.evaluate(assignment)
    return SkewFunction(spec.n, spec.k, values)


def skew_function_at(f: SkewFunction, point: Sequence[Scalar]) -> SkewFunction:
    """Evaluate polynomial-valued subset values at a point."""
    mapping = _point_mapping(point)
    return f.map_values(lambda v: v.evaluate(mapping) if isinstance(v, Polynomial) else v)


def pf_definition(f: SkewFunction) -> Value:
    """Hyperpfaffian as the signed sum over equal-block partitions of the
    products of block values."""
    values = f.values
    scalar_total: Scalar = 0
    poly_acc: dict[tuple, Scalar] = {}
    for sign, blocks in signed_equal_block_partitions(f.n, f.k):
        term: Value | None = None
        for block in blocks:
            value = values[block]
            term = value if term is None else term * value
        if isinstance(term, Polynomial):
            # accumulate in place rather than copying the running sum
            for mono, coeff in term.terms.items():
                acc = poly_acc.get(mono, 0) + (coeff if sign > 0 else -coeff)
                if acc:
                    poly_acc[mono] = acc
                elif mono in poly_acc:
                    del poly_acc[mono]
        else:
            scalar_total += term if sign > 0 else -term
    if poly_acc or any(isinstance(v, Polynomial) for v in f.values.values()):
        return Polynomial(poly_acc) + scalar_total
    return scalar_total


def pf_exterior(f: SkewFunction) -> Value:
    """Hyperpfaffian extracted from the (n/k)-th wedge power of the
    subset-weighted generator sum; the division by (n/k)! must be exact."""
    blocks = f.n // f.k
    if f.n % f.k:
        raise ValueError(f"arity {f.k} does not divide order {f.n}")
    element = ExteriorElement.from_subset_values(f.n, f.values)
    top = element.wedge_power(blocks).top_coefficient()
    if not isinstance(top, Polynomial) and any(
        isinstance(v, Polynomial) for v in f.values.values()
    ):
        top = Polynomial.constant(top)
    return div_exact(top, factorial(blocks))


def theorem_coefficient(spec: SkewSpec) -> Scalar:
    """The closed form's scalar: the signed sum over composition tilings of
    the products of spec coefficients (absent tuples contribute 0)."""
    if spec.degree != spec.full_degree:
        raise ValueError(
            f"closed form needs degree k/2*(n-1) = {spec.full_degree}, got {spec.degree}"
        )
    coeffs = spec.coeffs
    total: Scalar = 0
    for tiling in composition_tilings(spec.n, spec.k):
        product: Scalar = 1
        for composition in tiling:
            value = coeffs.get(composition)
            if value is None:
                product = 0
                break
            product *= value
        if product:
            total += tiling_sign(tiling) * product
    return total


def pf_closed_form(spec: SkewSpec) -> Polynomial:
    """The hyperpfaffian of a full-degree spec: tiling coefficient times the
    expanded Vandermonde product."""
    return theorem_coefficient(spec) * vandermonde(spec.n)


def torelli_constant(n: int) -> int:
    """The order-n Pfaffian of (y - x)^(n-1) divided by the Vandermonde
    product: a signed product of the first n/2 binomial coefficients."""
    if not isinstance(n, int) or n < 2 or n % 2:
        raise ValueError(f"order must be a positive even integer, got {n!r}")
    sign = -1 if comb(n // 2, 2) & 1 else 1
    product = 1
    for i in range(n // 2):
        product *= comb(n - 1, i)
    return sign * product


def torelli_spec(n: int) -> SkewSpec:
    """The binomial coefficient spec of f(x, y) = (y - x)^(n-1)."""
    if not isinstance(n, int) or n < 2 or n % 2:
        raise ValueError(f"order must be a positive even integer, got {n!r}")
    coeffs = {
        (i, n - 1 - i): (-1) ** i * comb(n - 1, i)
        for i in range(n // 2)
    }
    return SkewSpec(n, 2, coeffs)


def relabel(f: SkewFunction, perm: Sequence[int]) -> SkewFunction:
    """The function g with g(args) = f(perm(args)).

    g is again skew-symmetric, and its hyperpfaffian is the sign of the
    permutation times the hyperpfaffian of f.
    """
    permutation_sign(perm)  # raises on anything that is not a permutation
    if len(perm) != f.n or min(perm) != 1:
        raise ValueError(f"expected a permutation of 1..{f.n}, got {tuple(perm)!r}")
    values: dict[tuple[int, ...], Value] = {}
    for subset in f.values:
        image = [perm[element - 1] for element in subset]
        sign = inversion_sign(image)
        value = f.values[tuple(sorted(image))]
        values[subset] = value if sign > 0 else -value
    return SkewFunction(f.n, f.k, values)
