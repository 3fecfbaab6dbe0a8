"""Command-line front end.

Subcommands:

* ``compute``    -- read a JSON spec file, run one evaluation route, print
                    the resulting polynomial in canonical term order;
* ``verify``     -- seeded random specs, check that all three routes agree
                    (symbolically, or exactly at random integer points);
* ``coeffs``     -- list the signed composition tilings of the closed form;
* ``torelli``    -- the binomial-power special case against brute force;
* ``involution`` -- the pairing/cancellation suite on weighted oriented
                    partitions;
* ``compose``    -- the composition identity on random skew functions.

Exit codes: 0 success / identity verified, 1 identity violated (a
mathematical counterexample; should never occur), 2 usage or input error.
Output is deterministic given the flags, byte for byte.

Spec files are UTF-8 JSON objects with integer fields ``n`` and ``k``, an
optional integer ``degree`` (default k/2*(n-1)), and ``terms``: a list of
records ``{"r": [...], "a": ...}`` where ``r`` is a strictly increasing
k-tuple of nonnegative integers summing to the degree and ``a`` is a
nonzero rational written as an integer or a ``"p/q"`` string.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction
from math import factorial

from .combinat import (
    composition_tilings,
    increasing_compositions,
    permutation_sign,
    tiling_sign,
)
from .compose import verify_composition
from .hpf import (
    SkewSpec,
    pf_closed_form,
    pf_definition,
    pf_exterior,
    skew_function_from_spec,
    skew_function_from_spec_at,
    theorem_coefficient,
    torelli_constant,
    torelli_spec,
)
from .involution import (
    compose_distinct,
    decompose_distinct,
    has_distinct_weights,
    pairing_involution,
    weighted_oriented_partitions,
)
from .poly import Polynomial, render, vandermonde, vandermonde_at
from .randgen import Lcg, random_point, random_skew_function, random_skew_spec

MAX_SYMBOLIC_N = 8
MAX_POINTS_N = 12
MAX_COEFFS_N = 16
MAX_TORELLI_N = 8
MAX_COMPOSE_P = 8
MAX_INVOLUTION_N = {2: 6, 4: 8}


# -- spec files -------------------------------------------------------------


def _parse_rational(raw, where: str) -> Fraction | int:
    if isinstance(raw, bool):
        raise ValueError(f"{where}: coefficient must be a rational, got {raw!r}")
    if isinstance(raw, int):
        return raw
    if isinstance(raw, str):
        try:
            value = Fraction(raw)
        except (ValueError, ZeroDivisionError) as exc:
            raise ValueError(f"{where}: cannot parse rational {raw!r}: {exc}") from None
        return int(value) if value.denominator == 1 else value
    raise ValueError(
        f"{where}: coefficient must be an integer or a 'p/q' string, got {raw!r}"
        " (floats are rejected to keep the arithmetic exact)"
    )


def _require_int(document: dict, field: str, minimum: int) -> int:
    value = document.get(field)
    if isinstance(value, bool) or not isinstance(value, int) or value < minimum:
        raise ValueError(f"field {field!r} must be an integer >= {minimum}, got {value!r}")
    return value


def load_spec_file(path: str) -> SkewSpec:
    """Read and validate a spec file; raises ValueError with a diagnostic
    naming the offending field or tuple."""
    try:
        with open(path, encoding="utf-8") as handle:
            document = json.load(handle)
    except OSError as exc:
        raise ValueError(f"cannot read {path}: {exc}") from None
    except json.JSONDecodeError as exc:
        raise ValueError(f"{path}: invalid JSON: {exc}") from None
    if not isinstance(document, dict):
        raise ValueError(f"{path}: spec file must contain a JSON object")
    unknown = set(document) - {"n", "k", "degree", "terms"}
    if unknown:
        raise ValueError(f"{path}: unexpected field {sorted(unknown)[0]!r}")
    n = _require_int(document, "n", 1)
    k = _require_int(document, "k", 2)
    if k % 2:
        raise ValueError(f"field 'k' must be even, got {k}")
    degree = k * (n - 1) // 2
    if "degree" in document:
        degree = _require_int(document, "degree", 0)
    terms = document.get("terms")
    if not isinstance(terms, list):
        raise ValueError(f"{path}: field 'terms' must be a list of records")
    coeffs: dict[tuple[int, ...], Fraction | int] = {}
    for index, record in enumerate(terms):
        where = f"terms[{index}]"
        if not isinstance(record, dict) or set(record) != {"r", "a"}:
            raise ValueError(f"{where}: each term must be a record with exactly 'r' and 'a'")
        raw_r = record["r"]
        if (
            not isinstance(raw_r, list)
            or len(raw_r) != k
            or any(isinstance(e, bool) or not isinstance(e, int) for e in raw_r)
        ):
            raise ValueError(f"{where}: 'r' must be a list of {k} integers, got {raw_r!r}")
        exponents = tuple(raw_r)
        if exponents[0] < 0 or any(a >= b for a, b in zip(exponents, exponents[1:])):
            raise ValueError(f"{where}: r = {list(exponents)} is not strictly increasing")
        if sum(exponents) != degree:
            raise ValueError(
                f"{where}: r = {list(exponents)} sums to {sum(exponents)}, expected degree {degree}"
            )
        if exponents in coeffs:
            raise ValueError(f"{where}: duplicate exponent tuple r = {list(exponents)}")
        value = _parse_rational(record["a"], where)
        if not value:
            raise ValueError(f"{where}: coefficient for r = {list(exponents)} must be nonzero")
        coeffs[exponents] = value
    return SkewSpec(n, k, coeffs, degree)


def dump_spec(spec: SkewSpec) -> str:
    """One-line JSON rendering of a spec, suitable as a spec file."""
    terms = [{"r": list(r), "a": str(a)} for r, a in spec.coeffs.items()]
    return json.dumps({"n": spec.n, "k": spec.k, "degree": spec.degree, "terms": terms})


# -- shared helpers ---------------------------------------------------------


def _refuse(message: str) -> int:
    print(f"error: {message}", file=sys.stderr)
    return 2


def _show(value) -> str:
    return render(value) if isinstance(value, Polynomial) else str(value)


def tiling_label(compositions) -> str:
    """Render a tiling as coefficient labels: ``a_{0,3} a_{1,2}``."""
    return " ".join("a_{" + ",".join(map(str, comp)) + "}" for comp in compositions)


def _partition_count(n: int, k: int) -> int:
    return factorial(n) // (factorial(n // k) * factorial(k) ** (n // k))


# -- commands ---------------------------------------------------------------


def cmd_compute(args) -> int:
    spec = load_spec_file(args.input)
    if spec.n > MAX_SYMBOLIC_N and not args.force:
        return _refuse(
            f"refusing n={spec.n}: the expanded result can reach {spec.n}! = "
            f"{factorial(spec.n)} terms; pass --force to override"
        )
    if args.method == "definition":
        result = pf_definition(skew_function_from_spec(spec))
    elif args.method == "exterior":
        result = pf_exterior(skew_function_from_spec(spec))
    else:
        if spec.degree != spec.full_degree:
            raise ValueError(
                f"method 'theorem' needs degree k/2*(n-1) = {spec.full_degree}, "
                f"got degree {spec.degree}"
            )
        result = pf_closed_form(spec)
    print(render(result))
    return 0


def _verify_trial_symbolic(spec: SkewSpec) -> list[tuple[str, object]]:
    f = skew_function_from_spec(spec)
    return [
        ("definition", pf_definition(f)),
        ("exterior", pf_exterior(f)),
        ("closed form", pf_closed_form(spec)),
    ]


def cmd_verify(args) -> int:
    n, k, seed = args.n, args.k, args.seed
    if args.trials < 1 or args.points < 1:
        return _refuse("--trials and --points must be positive")
    mode = args.mode
    if mode == "auto":
        mode = "symbolic" if n <= MAX_SYMBOLIC_N else "points"
    if mode == "symbolic" and n > MAX_SYMBOLIC_N and not args.force:
        return _refuse(
            f"refusing symbolic mode at n={n}: results can reach {n}! = {factorial(n)} "
            f"terms; use --mode points or pass --force"
        )
    if mode == "points" and n > MAX_POINTS_N and not args.force:
        return _refuse(
            f"refusing n={n}: each point sums over {_partition_count(n, k)} partitions; "
            f"pass --force to override"
        )
    composition_tilings(n, k)  # validates (n, k) before the trial loop
    for trial in range(args.trials):
        rng = Lcg(seed + trial)
        spec = random_skew_spec(n, k, rng)
        if mode == "symbolic":
            sides = _verify_trial_symbolic(spec)
            if any(value != sides[0][1] for _, value in sides[1:]):
                print(f"MISMATCH trial {trial + 1} (n={n}, k={k}, seed={seed + trial})")
                print(f"spec: {dump_spec(spec)}")
                for name, value in sides:
                    print(f"{name}: {_show(value)}")
                return 1
            print(f"trial {trial + 1}: ok (symbolic)")
        else:
            coefficient = theorem_coefficient(spec)
            for index in range(args.points):
                point = random_point(n, rng)
                f_at = skew_function_from_spec_at(spec, point)
                sides = [
                    ("definition", pf_definition(f_at)),
                    ("exterior", pf_exterior(f_at)),
                    ("closed form", coefficient * vandermonde_at(point)),
                ]
                if any(value != sides[0][1] for _, value in sides[1:]):
                    print(
                        f"MISMATCH trial {trial + 1} point {index + 1} "
                        f"(n={n}, k={k}, seed={seed + trial})"
                    )
                    print(f"spec: {dump_spec(spec)}")
                    print(f"point: {list(point)}")
                    for name, value in sides:
                        print(f"{name}: {_show(value)}")
                    return 1
            print(f"trial {trial + 1}: ok ({args.points} points)")
    print(f"verified: {args.trials}/{args.trials} trials, definition = exterior = closed form")
    return 0


def cmd_coeffs(args) -> int:
    n, k = args.n, args.k
    if n > MAX_COEFFS_N and not args.force:
        composition_tilings(n, k)  # surface (n, k) validation first
        gamma_count = sum(1 for _ in increasing_compositions(n, k))
        return _refuse(
            f"refusing n={n}: up to C({gamma_count},{n // k}) combinations of the "
            f"{gamma_count} admissible weight vectors to sift; pass --force to override"
        )
    positive = negative = 0
    for tiling in composition_tilings(n, k):
        sign = tiling_sign(tiling)
        if sign > 0:
            positive += 1
        else:
            negative += 1
        print(("+" if sign > 0 else "-") + " " + tiling_label(tiling))
    total = positive + negative
    noun = "term" if total == 1 else "terms"
    print(f"{total} {noun} ({positive} positive, {negative} negative)")
    return 0


def cmd_torelli(args) -> int:
    n = args.n
    if n > MAX_TORELLI_N and not args.force:
        return _refuse(
            f"refusing n={n}: brute force sums over {_partition_count(n, 2)} matchings "
            f"of degree-{n - 1} polynomials; pass --force to override"
        )
    constant = torelli_constant(n)
    spec = torelli_spec(n)
    brute = pf_definition(skew_function_from_spec(spec))
    expected = constant * vandermonde(n)
    if brute != expected or theorem_coefficient(spec) != constant:
        print(f"MISMATCH at n={n}")
        print(f"constant: {constant}")
        print(f"tiling coefficient: {theorem_coefficient(spec)}")
        print(f"brute force: {render(brute)}")
        return 1
    print(f"constant = {constant}, verified")
    return 0


def cmd_involution(args) -> int:
    n, k = args.n, args.k
    limit = MAX_INVOLUTION_N.get(k, 8)
    if n > limit and not args.force:
        gamma_count = sum(1 for _ in increasing_compositions(n, k))
        estimate = factorial(n) // factorial(n // k) * gamma_count ** (n // k)
        return _refuse(
            f"refusing n={n}, k={k}: |W| = {estimate} weighted oriented partitions; "
            f"pass --force to override"
        )
    # deterministic distinct coefficients: i+1 for the i-th admissible tuple
    coeffs = {
        exponents: index + 1
        for index, exponents in enumerate(increasing_compositions(n, k))
    }
    spec = SkewSpec(n, k, coeffs)
    total = repeated = distinct = 0
    repeated_sum = Polynomial.zero()
    seen_factorizations = set()
    for wop in weighted_oriented_partitions(n, k):
        total += 1
        if has_distinct_weights(wop):
            distinct += 1
            perm, tiling = decompose_distinct(wop)
            if wop.sign != tiling_sign(tiling) * permutation_sign(perm):
                print(f"MISMATCH: sign factorization fails on {wop}")
                return 1
            if compose_distinct(perm, tiling) != wop:
                print(f"MISMATCH: factorization does not round-trip on {wop}")
                return 1
            seen_factorizations.add((perm, tiling))
        else:
            repeated += 1
            image = pairing_involution(wop)
            if (
                image == wop
                or has_distinct_weights(image)
                or pairing_involution(image) != wop
                or image.sign != -wop.sign
                or image.weight_exponents() != wop.weight_exponents()
                or image.coefficient(spec) != wop.coefficient(spec)
            ):
                print(f"MISMATCH: pairing involution misbehaves on {wop}")
                return 1
            term = wop.coefficient(spec) * wop.sign
            repeated_sum += Polynomial({wop.weight_exponents(): term})
    tilings = sum(1 for _ in composition_tilings(n, k))
    ok = (
        repeated_sum.is_zero()
        and distinct == factorial(n) * tilings
        and len(seen_factorizations) == distinct
    )
    if not ok:
        print(f"MISMATCH: repeated-weight sum {render(repeated_sum)}, "
              f"distinct count {distinct} vs n! * tilings = {factorial(n) * tilings}")
        return 1
    print(f"|W| = {total} (n={n}, k={k}): {repeated} repeated, {distinct} distinct "
          f"= {factorial(n)} * {tilings}")
    print(f"W^r sum = 0, phi^2 = id on {repeated} elements, "
          f"sign factorization ok on {distinct} elements, verified")
    return 0


def cmd_compose(args) -> int:
    k, n, p = args.k, args.n, args.p
    if p > MAX_COMPOSE_P and not args.force:
        return _refuse(
            f"refusing p={p}: the outer sum runs over {_partition_count(p, n)} partitions "
            f"with C({p},{n}) inner hyperpfaffians; pass --force to override"
        )
    constant = None
    for trial in range(args.trials):
        rng = Lcg(args.seed + trial)
        f = random_skew_function(p, k, rng)
        check = verify_composition(f, k, n, p)
        constant = check.constant
        if not check.ok:
            print(f"MISMATCH trial {trial + 1} (seed={args.seed + trial})")
            print(f"constant: {check.constant}")
            print(f"composed: {_show(check.pf_composed)}")
            print(f"original: {_show(check.pf_original)}")
            return 1
    print(f"constant = {constant}, verified")
    return 0


# -- argument parsing -------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="hyperpfaffian",
        description="Exact hyperpfaffians of skew-symmetric k-ary polynomials.",
    )
    parser.add_argument("--force", action="store_true",
                        help="override the built-in size guards")
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name: str, **kwargs) -> argparse.ArgumentParser:
        p = sub.add_parser(name, **kwargs)
        p.add_argument("--force", action="store_true", default=argparse.SUPPRESS,
                       help="override the built-in size guards")
        return p

    p = add("compute", help="evaluate a spec file by one algorithm")
    p.add_argument("--input", required=True, help="path to a JSON spec file")
    p.add_argument("--method", required=True, choices=["definition", "exterior", "theorem"])

    p = add("verify", help="check that the three algorithms agree on random specs")
    p.add_argument("--n", required=True, type=int)
    p.add_argument("--k", required=True, type=int)
    p.add_argument("--trials", type=int, default=10)
    p.add_argument("--seed", type=int, default=1)
    p.add_argument("--mode", choices=["auto", "symbolic", "points"], default="auto",
                   help="symbolic compares polynomials; points compares exact values "
                        "at random integer points (default: symbolic up to n=8)")
    p.add_argument("--points", type=int, default=5, help="points per trial in points mode")

    p = add("coeffs", help="list the closed form's signed coefficient products")
    p.add_argument("--n", required=True, type=int)
    p.add_argument("--k", required=True, type=int)

    p = add("torelli", help="binomial-power Pfaffian constant against brute force")
    p.add_argument("--n", required=True, type=int)

    p = add("involution", help="pairing/cancellation suite on weighted oriented partitions")
    p.add_argument("--n", required=True, type=int)
    p.add_argument("--k", required=True, type=int)

    p = add("compose", help="composition identity on random skew functions")
    p.add_argument("--k", required=True, type=int)
    p.add_argument("--n", required=True, type=int)
    p.add_argument("--p", required=True, type=int)
    p.add_argument("--trials", type=int, default=5)
    p.add_argument("--seed", type=int, default=1)

    return parser


_COMMANDS = {
    "compute": cmd_compute,
    "verify": cmd_verify,
    "coeffs": cmd_coeffs,
    "torelli": cmd_torelli,
    "involution": cmd_involution,
    "compose": cmd_compose,
}


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return _COMMANDS[args.command](args)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
