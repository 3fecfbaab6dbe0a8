"""Enumeration and signing of the combinatorial families behind the
hyperpfaffian algorithms.

Everything lives on the ground set [n] = {1, ..., n} with block size k,
where k is even and divides n:

* equal-block partitions: partitions of [n] into n/k blocks of size k,
  represented as tuples of ascending blocks ordered by minimum element;
* oriented partitions: the same partitions with each block carrying a
  linear order, so blocks are arbitrary k-tuples;
* increasing compositions: strictly increasing k-tuples of nonnegative
  integers summing to k/2*(n-1), the admissible block weight vectors;
* composition tilings: sets of n/k increasing compositions whose parts are
  pairwise distinct, and which therefore tile {0, ..., n-1}.

The sign of any of these objects is the inversion parity of the
concatenation of its blocks.  Because k is even, swapping two whole blocks
flips k*k element pairs and therefore changes the inversion count by an
even amount, so the signs do not depend on the order in which blocks are
concatenated; the canonical order (ascending minimum) is fixed only to
make representations and enumeration output reproducible.

All enumerators are pure generators yielding in lexicographic order on the
canonical representation.
"""

from __future__ import annotations

from itertools import combinations, permutations, product
from typing import Iterator, Sequence

Block = tuple  # tuple[int, ...]
Blocks = tuple  # tuple[Block, ...]
Composition = tuple  # tuple[int, ...]


def inversion_sign(values: Sequence) -> int:
    """(-1) to the number of inversions among (distinct) entries."""
    count = 0
    n = len(values)
    for i in range(n):
        vi = values[i]
        for j in range(i + 1, n):
            if vi > values[j]:
                count += 1
    return -1 if count & 1 else 1


def permutation_sign(perm: Sequence[int]) -> int:
    """Sign of a permutation given as its image sequence.

    Accepts permutations of {1, ..., m} or of {0, ..., m-1}.
    """
    m = len(perm)
    seen = set(perm)
    if seen != set(range(1, m + 1)) and seen != set(range(m)):
        raise ValueError(f"{tuple(perm)!r} is not a permutation of 1..{m} or 0..{m - 1}")
    return inversion_sign(perm)


def _check_block_args(n: int, k: int) -> None:
    if not isinstance(n, int) or not isinstance(k, int):
        raise ValueError(f"n and k must be integers, got n={n!r}, k={k!r}")
    if k < 2 or k % 2:
        raise ValueError(f"block size k must be a positive even integer, got k={k}")
    if n < k or n % k:
        raise ValueError(f"n must be a positive multiple of k, got n={n}, k={k}")


def signed_equal_block_partitions(n: int, k: int) -> Iterator[tuple[int, Blocks]]:
    """Yield (sign, partition) pairs over all equal-block partitions of [n].

    The sign is accumulated while blocks are peeled off: a block
    contributes one inversion for each smaller element it jumps over, and
    sorted blocks contribute none internally.
    """
    _check_block_args(n, k)

    def rec(remaining: tuple[int, ...]) -> Iterator[tuple[int, Blocks]]:
        if not remaining:
            yield 1, ()
            return
        first = remaining[0]
        rest = remaining[1:]
        size = len(rest)
        for positions in combinations(range(size), k - 1):
            block = (first,) + tuple(rest[p] for p in positions)
            crossings = sum(p - offset for offset, p in enumerate(positions))
            head_sign = -1 if crossings & 1 else 1
            chosen = set(positions)
            residue = tuple(rest[q] for q in range(size) if q not in chosen)
            for tail_sign, tail in rec(residue):
                yield head_sign * tail_sign, (block,) + tail

    return rec(tuple(range(1, n + 1)))


def equal_block_partitions(n: int, k: int) -> Iterator[Blocks]:
    """All partitions of [n] into n/k ascending k-blocks, lexicographically.

    There are n! / ((n/k)! * (k!)^(n/k)) of them.
    """
    return (blocks for _, blocks in signed_equal_block_partitions(n, k))


def partition_sign(blocks: Blocks) -> int:
    """Sign of the concatenation of the blocks of a partition."""
    return inversion_sign([element for block in blocks for element in block])


def oriented_partitions(n: int, k: int) -> Iterator[Blocks]:
    """All oriented partitions: each block additionally carries an order.

    There are n!/(n/k)! of them, (k!)^(n/k) per plain partition.
    """
    plain = equal_block_partitions(n, k)

    def orient() -> Iterator[Blocks]:
        for blocks in plain:
            yield from product(*(permutations(block) for block in blocks))

    return orient()


def oriented_sign(blocks: Blocks) -> int:
    """Sign of the concatenation of the (ordered) blocks as given."""
    return inversion_sign([element for block in blocks for element in block])


def increasing_compositions_summing(total: int, parts: int) -> Iterator[Composition]:
    """Strictly increasing tuples of `parts` nonnegative integers summing
    to `total`, in lexicographic order."""
    if not isinstance(total, int) or total < 0:
        raise ValueError(f"total must be a nonnegative integer, got {total!r}")
    if not isinstance(parts, int) or parts < 1:
        raise ValueError(f"parts must be a positive integer, got {parts!r}")

    def rec(count: int, minimum: int, left: int) -> Iterator[Composition]:
        if count == 1:
            if left >= minimum:
                yield (left,)
            return
        value = minimum
        while True:
            # smallest possible strictly increasing tail above `value`
            tail_floor = (count - 1) * (value + 1) + (count - 1) * (count - 2) // 2
            if value + tail_floor > left:
                return
            for tail in rec(count - 1, value + 1, left - value):
                yield (value,) + tail
            value += 1

    return rec(parts, 0, total)


def increasing_compositions(n: int, k: int) -> Iterator[Composition]:
    """The admissible weight vectors for ground set size n and block size k:
    strictly increasing k-tuples of nonnegative integers with sum k/2*(n-1)."""
    if not isinstance(k, int) or k < 2 or k % 2:
        raise ValueError(f"block size k must be a positive even integer, got k={k!r}")
    if not isinstance(n, int) or n < 1:
        raise ValueError(f"n must be a positive integer, got n={n!r}")
    return increasing_compositions_summing(k * (n - 1) // 2, k)


def composition_tilings(n: int, k: int) -> Iterator[tuple[Composition, ...]]:
    """Sets of n/k increasing compositions whose parts tile {0, ..., n-1}.

    Each tiling is represented as a tuple of compositions ordered by first
    part, and tilings appear in lexicographic order on that representation.
    """
    _check_block_args(n, k)
    total = k * (n - 1) // 2

    def rec(remaining: tuple[int, ...]) -> Iterator[tuple[Composition, ...]]:
        if not remaining:
            yield ()
            return
        first = remaining[0]
        rest = remaining[1:]
        for chosen in combinations(rest, k - 1):
            composition = (first,) + chosen
            if sum(composition) != total:
                continue
            leftover = set(chosen)
            residue = tuple(v for v in rest if v not in leftover)
            for tail in rec(residue):
                yield (composition,) + tail

    return rec(tuple(range(n)))


def tiling_sign(compositions: Sequence[Composition]) -> int:
    """Sign of the concatenation of a tiling's compositions as given."""
    return inversion_sign([part for comp in compositions for part in comp])
