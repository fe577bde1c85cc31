"""Command-line front end.

Subcommands compute single degrees (through a chosen pipeline), full degree
tables, Tutte/characteristic/one-variable polynomials, permutohedral
volumes, q-deformed Eulerian numbers, tree expansions, and cross-checking
suites. Results are emitted as plain text, JSON records, or CSV rows with
columns matroid, c, pipeline, value, millis; numeric values are serialized
as decimal strings so arbitrarily large integers survive the trip.

Exit codes: 0 success, 1 bad input, 2 broken internal invariant (two
pipelines disagreeing is always a bug, never a property of the input).
"""

from __future__ import annotations

import argparse
import csv
import json
import sys
import time
from dataclasses import dataclass
from fractions import Fraction
from math import factorial

from .errors import (
    CompositionMismatch,
    InputError,
    InternalError,
    NotPMD,
    ParseError,
    PreconditionViolation,
    VOutOfRange,
)
from .expansion import (
    composition_to_indices,
    compositions,
    count_initial_descending_flags,
    expand_gamma_product,
    gamma_product_degree,
    indices_to_composition,
    log_concavity_check,
    pvol,
)
from .localization import gamma_degree_via_localization
from .matroid import (
    Matroid,
    build_boolean,
    build_projective_geometry,
    build_sparse_paving,
    build_uniform,
    set_of,
)
from .matroid_json import load_matroid
from .pmd import lopsided_degree, pmd_profile, pmd_recurrence_check, remixed_eulerian_eval
from .polynomials import UniPoly
from .recursion import (
    c_degree,
    classify_support,
    cv_polynomial,
    cv_via_tutte_convolution,
    deletion_contraction_degree,
    eulerian_recursion_degree,
)
from .trees import aggregate_by_flag, enumerate_trees
from .tutte import characteristic_data, tutte_polynomial

__all__ = ["MatroidSpec", "parse_matroid_spec", "run", "main"]

PIPELINES = ("flag", "eulerian", "delcon", "localization", "lopsided", "convolution")


@dataclass(frozen=True)
class MatroidSpec:
    """A parsed matroid description: constructor tag plus its parameters."""

    tag: str
    params: tuple
    text: str

    def build(self) -> Matroid:
        if self.tag == "uniform":
            return build_uniform(*self.params)
        if self.tag == "boolean":
            return build_boolean(*self.params)
        if self.tag == "pg":
            return build_projective_geometry(*self.params)
        if self.tag == "sparse":
            rank, size, chs = self.params
            return build_sparse_paving(rank, size, chs)
        return load_matroid(self.params[0])


def _spec_ints(spec: str, chunk: str, offset: int, count: int) -> tuple:
    parts = chunk.split(",")
    if len(parts) != count:
        raise ParseError(
            f"matroid spec {spec!r}: expected {count} comma-separated "
            f"integers at position {offset}"
        )
    out = []
    pos = offset
    for part in parts:
        if not part or not part.isdigit():
            raise ParseError(
                f"matroid spec {spec!r}: expected an integer at position {pos}"
            )
        out.append(int(part))
        pos += len(part) + 1
    return tuple(out)


def parse_matroid_spec(s: str) -> MatroidSpec:
    """Parse "uniform:R,N" | "boolean:N" | "pg:R,Q" | "sparse:R,N;012|345"
    | "file:PATH"."""
    text = s.strip()
    head, sep, rest = text.partition(":")
    if not sep:
        raise ParseError(
            f"matroid spec {text!r}: missing ':' at position {len(text)}"
        )
    offset = len(head) + 1
    if head == "file":
        if not rest:
            raise ParseError(
                f"matroid spec {text!r}: empty path at position {offset}"
            )
        return MatroidSpec("file", (rest,), text)
    if head == "boolean":
        return MatroidSpec("boolean", _spec_ints(text, rest, offset, 1), text)
    if head in ("uniform", "pg"):
        return MatroidSpec(head, _spec_ints(text, rest, offset, 2), text)
    if head == "sparse":
        nums, semi, blocks = rest.partition(";")
        rank, size = _spec_ints(text, nums, offset, 2)
        chs = []
        pos = offset + len(nums) + 1
        if semi:
            for block in blocks.split("|"):
                if not block or not block.isdigit():
                    raise ParseError(
                        f"matroid spec {text!r}: expected a digit block "
                        f"at position {pos}"
                    )
                chs.append(tuple(int(ch) for ch in block))
                pos += len(block) + 1
        return MatroidSpec("sparse", (rank, size, tuple(chs)), text)
    raise ParseError(f"matroid spec {text!r}: unknown tag {head!r} at position 0")


# -- small shared helpers ----------------------------------------------------


def _parse_int_list(value: str, flag: str) -> tuple:
    out = []
    for part in value.split(","):
        part = part.strip()
        try:
            out.append(int(part))
        except ValueError:
            raise ParseError(
                f"{flag} expects comma-separated integers, got {part!r}"
            ) from None
    return tuple(out)


def _join(values) -> str:
    return ",".join(str(x) for x in values)


def _ms(start: float) -> int:
    return int((time.perf_counter() - start) * 1000)


def _value_text(value) -> str:
    if isinstance(value, Fraction):
        if value.denominator == 1:
            return str(value.numerator)
        return f"{value.numerator}/{value.denominator}"
    return str(value)


def _render_terms(pairs) -> str:
    """Human-readable signed sum from (monomial string, coefficient) pairs."""
    parts = []
    for mono, coef in pairs:
        if not coef:
            continue
        mag = abs(coef)
        if not mono:
            body = str(mag)
        elif mag == 1:
            body = mono
        else:
            body = f"{mag}*{mono}"
        parts.append((coef < 0, body))
    if not parts:
        return "0"
    neg, body = parts[0]
    out = ("-" if neg else "") + body
    for neg, body in parts[1:]:
        out += (" - " if neg else " + ") + body
    return out


def _power(var: str, k: int) -> str:
    if k == 0:
        return ""
    if k == 1:
        return var
    return f"{var}^{k}"


def _render_unipoly(p: UniPoly, var: str) -> str:
    pairs = [
        (_power(var, k), p.coeffs[k]) for k in range(len(p.coeffs) - 1, -1, -1)
    ]
    return _render_terms(pairs)


def _render_polyxy(p) -> str:
    keys = sorted(p.coeffs, key=lambda k: (-(k[0] + k[1]), -k[0]))
    pairs = []
    for i, j in keys:
        mono = "*".join(t for t in (_power("x", i), _power("y", j)) if t)
        pairs.append((mono, p.coeffs[(i, j)]))
    return _render_terms(pairs)


def _render_flag(flag) -> str:
    return ";".join(_join(set_of(mask)) for mask in flag)


def _contiguous_sorted_vectors(matroid: Matroid):
    """All sorted index vectors of full length whose support is an interval."""
    out = []
    for comp in compositions(matroid.r, matroid.n):
        support = [i + 1 for i, x in enumerate(comp) if x]
        if not support:
            continue
        if support != list(range(support[0], support[-1] + 1)):
            continue
        out.append(composition_to_indices(comp))
    return out


# -- degree pipelines --------------------------------------------------------


def _first_repeat_position(vs) -> int:
    for k, val in enumerate(vs):
        if vs.count(val) >= 2:
            return k + 1
    raise PreconditionViolation(
        "the repeat-entry pipeline needs some index to occur at least twice"
    )


def _lopsided_exponents(matroid: Matroid, vs) -> tuple:
    profile = pmd_profile(matroid)
    slots = {size: i for i, size in enumerate(profile.n_seq)}
    exps = [0] * len(profile.n_seq)
    for val in vs:
        if val not in slots:
            raise PreconditionViolation(
                f"index {val} is not a flat size; the closed form covers "
                "products of classes at flat sizes only"
            )
        exps[slots[val]] += 1
    return tuple(exps)


def _degree_by_pipeline(
    matroid: Matroid, vs, pipeline: str, convention: str
) -> int:
    if pipeline == "flag":
        return gamma_product_degree(matroid, vs, convention)
    svs = tuple(sorted(vs))
    if pipeline == "eulerian":
        return eulerian_recursion_degree(
            matroid, svs, _first_repeat_position(svs), convention
        )
    if pipeline == "delcon":
        return deletion_contraction_degree(matroid, svs, 0, 0, convention)
    if pipeline == "localization":
        return gamma_degree_via_localization(
            matroid, indices_to_composition(vs, matroid.n)
        )
    if pipeline == "lopsided":
        return lopsided_degree(matroid, _lopsided_exponents(matroid, vs))
    if pipeline == "convolution":
        return cv_via_tutte_convolution(matroid, svs, convention)
    raise ParseError(f"unknown pipeline {pipeline!r}")


# -- subcommand handlers: (args) -> (records, text, exit_code) ---------------


def _cmd_degree(args):
    spec = parse_matroid_spec(args.matroid)
    matroid = spec.build()
    if (args.c is None) == (args.v is None):
        raise ParseError("exactly one of --c or --v is required")
    if args.c is not None:
        cs = _parse_int_list(args.c, "--c")
        if len(cs) != matroid.n:
            raise CompositionMismatch(
                f"--c has {len(cs)} parts, ground set needs {matroid.n}"
            )
        if any(x < 0 for x in cs):
            raise CompositionMismatch("--c entries must be nonnegative")
        if sum(cs) != matroid.r:
            raise CompositionMismatch(
                f"--c sums to {sum(cs)}, top degree is {matroid.r}"
            )
        vs = composition_to_indices(cs)
    else:
        vs = _parse_int_list(args.v, "--v")
        for val in vs:
            if not 1 <= val <= matroid.n:
                raise VOutOfRange(f"--v index {val} outside 1..{matroid.n}")
        cs = indices_to_composition(vs, matroid.n)
    start = time.perf_counter()
    value = _degree_by_pipeline(matroid, vs, args.pipeline, args.convention)
    record = {
        "matroid": spec.text,
        "c": _join(cs),
        "pipeline": args.pipeline,
        "value": str(value),
        "millis": _ms(start),
        "v": _join(vs),
        "convention": args.convention,
    }
    return [record], str(value), 0


def _cmd_table(args):
    spec = parse_matroid_spec(args.matroid)
    matroid = spec.build()
    records = []
    lines = []
    for cs in compositions(matroid.r, matroid.n):
        vs = composition_to_indices(cs)
        if args.contiguous_only and vs:
            if not classify_support(matroid, vs).contiguous:
                continue
        start = time.perf_counter()
        value = gamma_product_degree(matroid, vs)
        records.append(
            {
                "matroid": spec.text,
                "c": _join(cs),
                "pipeline": "flag",
                "value": str(value),
                "millis": _ms(start),
                "v": _join(vs),
            }
        )
        lines.append(f"c=({_join(cs)})  v=({_join(vs)})  {value}")
    lines.append(f"{len(records)} compositions")
    return records, "\n".join(lines), 0


def _cmd_tutte(args):
    spec = parse_matroid_spec(args.matroid)
    matroid = spec.build()
    start = time.perf_counter()
    poly = tutte_polynomial(matroid)
    rendered = _render_polyxy(poly)
    record = {
        "matroid": spec.text,
        "c": "-",
        "pipeline": "tutte",
        "value": rendered,
        "millis": _ms(start),
        "terms": [
            [i, j, str(poly.coeffs[(i, j)])]
            for i, j in sorted(poly.coeffs)
        ],
    }
    return [record], f"T(x,y) = {rendered}", 0


def _cmd_charpoly(args):
    spec = parse_matroid_spec(args.matroid)
    matroid = spec.build()
    start = time.perf_counter()
    data = characteristic_data(matroid)
    millis = _ms(start)

    def rec(name, value, extra):
        return {
            "matroid": spec.text,
            "c": name,
            "pipeline": "charpoly",
            "value": value,
            "millis": millis,
            "coeffs": extra,
        }

    records = [
        rec("chi", _render_unipoly(data.chi, "t"), [str(c) for c in data.chi.coeffs]),
        rec(
            "chi_reduced",
            _render_unipoly(data.chi_reduced, "t"),
            [str(c) for c in data.chi_reduced.coeffs],
        ),
        rec("mu", _join(data.mu), [str(c) for c in data.mu]),
    ]
    text = (
        f"chi(t) = {records[0]['value']}\n"
        f"chi_reduced(t) = {records[1]['value']}\n"
        f"mu = {records[2]['value']}"
    )
    return records, text, 0


def _cmd_cvpoly(args):
    spec = parse_matroid_spec(args.matroid)
    matroid = spec.build()
    vs = tuple(sorted(_parse_int_list(args.v, "--v")))
    start = time.perf_counter()
    poly = cv_polynomial(matroid, vs)
    rendered = _render_unipoly(poly, "y")
    record = {
        "matroid": spec.text,
        "c": _join(indices_to_composition(vs, matroid.n)),
        "pipeline": "cvpoly",
        "value": rendered,
        "millis": _ms(start),
        "v": _join(vs),
        "coeffs": [str(c) for c in poly.coeffs],
    }
    return [record], f"C_v(y) = {rendered}", 0


def _cmd_pvol(args):
    spec = parse_matroid_spec(args.matroid)
    matroid = spec.build()
    start = time.perf_counter()
    value = pvol(matroid)
    record = {
        "matroid": spec.text,
        "c": "-",
        "pipeline": "pvol",
        "value": str(value),
        "millis": _ms(start),
    }
    return [record], str(value), 0


def _cmd_remixed(args):
    try:
        q = Fraction(args.q)
    except (ValueError, ZeroDivisionError):
        raise ParseError(f"--q expects a rational like 2 or 1/2, got {args.q!r}") from None
    cs = _parse_int_list(args.c, "--c")
    start = time.perf_counter()
    value = remixed_eulerian_eval(args.r, cs, q)
    record = {
        "matroid": "-",
        "c": _join(cs),
        "pipeline": "remixed",
        "value": _value_text(value),
        "millis": _ms(start),
        "r": args.r,
        "q": str(q),
    }
    return [record], _value_text(value), 0


def _cmd_trees(args):
    spec = parse_matroid_spec(args.matroid)
    matroid = spec.build()
    vs = _parse_int_list(args.v, "--v")
    start = time.perf_counter()
    terms = enumerate_trees(matroid, vs)
    agg = aggregate_by_flag(terms)
    millis = _ms(start)
    total = sum(agg.values(), 0)
    records = []
    lines = [f"{len(terms)} weighted trees over {len(agg)} flags"]
    for flag in sorted(agg):
        weight = agg[flag]
        records.append(
            {
                "matroid": spec.text,
                "c": _render_flag(flag),
                "pipeline": "trees",
                "value": _value_text(weight),
                "millis": millis,
                "flats": [list(set_of(mask)) for mask in flag],
            }
        )
        lines.append(f"flag {_render_flag(flag)}  {_value_text(weight)}")
    records.append(
        {
            "matroid": spec.text,
            "c": "total",
            "pipeline": "trees",
            "value": _value_text(total),
            "millis": millis,
            "v": _join(vs),
            "tree_count": len(terms),
        }
    )
    lines.append(f"total {_value_text(total)}")
    return records, "\n".join(lines), 0


# -- verification suites -----------------------------------------------------


class _Tally:
    """Aggregate many boolean checks into one named row."""

    def __init__(self, name):
        self.name = name
        self.count = 0
        self.first_bad = None

    def add(self, ok: bool, witness):
        self.count += 1
        if not ok and self.first_bad is None:
            self.first_bad = witness

    def row(self):
        if self.first_bad is not None:
            return (self.name, False, f"first failure at {self.first_bad}")
        return (self.name, True, f"{self.count} cases")


def _suite_charpoly(matroid: Matroid):
    rows = []
    data = characteristic_data(matroid)
    rows.append(("chi_vanishes_at_one", data.chi(1) == 0, f"chi(1) = {data.chi(1)}"))
    rows.append(
        (
            "reduced_form_exact",
            data.chi == data.chi_reduced * UniPoly((-1, 1)),
            "chi == chi_reduced * (t - 1)",
        )
    )
    degrees = _Tally("mu_equals_degrees")
    flags = _Tally("mu_equals_descending_flags")
    for k in range(matroid.r + 1):
        v = (1,) * k + (matroid.n,) * (matroid.r - k)
        for convention in ("oi", "mult"):
            got = gamma_product_degree(matroid, v, convention)
            degrees.add(got == data.mu[k], (k, convention, got, data.mu[k]))
        count = count_initial_descending_flags(matroid, k)
        flags.add(count == data.mu[k], (k, count, data.mu[k]))
    rows.append(degrees.row())
    rows.append(flags.row())
    return rows


def _suite_tutte(matroid: Matroid):
    r = matroid.r
    if r == 0:
        return [("tutte_trivial_rank", True, "no positive-degree products")]
    rows = []
    tutte = tutte_polynomial(matroid)
    t1y = tutte.substitute(1, UniPoly.variable())
    boolean = build_boolean(matroid.rank_total)
    fact = factorial(r)
    staircase = tuple(range(1, r + 1))
    rows.append(
        (
            "staircase_is_factorial_times_tutte",
            cv_polynomial(matroid, staircase) == fact * t1y,
            "C_(1..r)(y) == r! T(1,y)",
        )
    )
    rows.append(
        (
            "staircase_degree_counts_internal",
            gamma_product_degree(matroid, staircase) == fact * tutte.substitute(1, 0),
            "deg == r! T(1,0)",
        )
    )
    factorization = _Tally("contiguous_factorization")
    vectors = _contiguous_sorted_vectors(matroid)
    for vs in vectors:
        if vs[0] != 1:
            continue
        ok = cv_polynomial(matroid, vs) == t1y * cv_polynomial(boolean, vs)
        factorization.add(ok, vs)
    rows.append(factorization.row())
    bases = tutte.substitute(1, 1)
    grand = sum(c_degree(matroid, vs, 0) for vs in vectors)
    rows.append(
        (
            "contiguous_grand_total",
            grand == fact * 2 ** (r - 1) * bases,
            f"sum {grand} == r! 2^(r-1) #bases",
        )
    )
    return rows


def _suite_pipelines(matroid: Matroid):
    conventions = _Tally("flag_oi_equals_mult")
    localized = _Tally("localization_agrees")
    eulerian = _Tally("repeat_entry_agrees")
    delcon = _Tally("deletion_contraction_agrees")
    convolution = _Tally("convolution_agrees")
    small = matroid.m <= 8
    for cs in compositions(matroid.r, matroid.n):
        vs = composition_to_indices(cs)
        want = gamma_product_degree(matroid, vs, "oi")
        conventions.add(
            gamma_product_degree(matroid, vs, "mult") == want, (cs, want)
        )
        if small:
            localized.add(
                gamma_degree_via_localization(matroid, cs) == want, (cs, want)
            )
        if not vs:
            continue
        support = classify_support(matroid, vs)
        if support.flatly_contiguous and any(vs.count(x) >= 2 for x in vs):
            got = eulerian_recursion_degree(
                matroid, vs, _first_repeat_position(vs), "oi"
            )
            eulerian.add(got == want, (cs, got, want))
        if support.contiguous:
            if matroid.rank_total >= 3:
                got = deletion_contraction_degree(matroid, vs, 0, 0, "oi")
                delcon.add(got == want, (cs, got, want))
            convolution.add(
                cv_via_tutte_convolution(matroid, vs) == want, (cs, want)
            )
    rows = [conventions.row()]
    if small:
        rows.append(localized.row())
    rows.extend([eulerian.row(), delcon.row(), convolution.row()])
    return [row for row in rows if not row[2].startswith("0 cases")]


def _suite_trees(matroid: Matroid):
    agreement = _Tally("tree_weights_match_expansion")
    comps = list(compositions(matroid.r, matroid.n))[:120]
    for cs in comps:
        vs = composition_to_indices(cs)
        got = aggregate_by_flag(enumerate_trees(matroid, vs))
        want = {
            flag: w
            for flag, w in expand_gamma_product(matroid, vs).terms.items()
            if w
        }
        agreement.add(got == want, cs)
    return [agreement.row()]


def _suite_logconcave(matroid: Matroid):
    if matroid.r < 2:
        return [("log_concavity_trivial_rank", True, "needs r >= 2")]
    tally = _Tally("log_concavity_holds")
    n = matroid.n
    for cs in compositions(matroid.r - 2, n):
        for i in range(1, n + 1):
            for j in range(i, n + 1):
                result = log_concavity_check(matroid, cs, i, j)
                tally.add(result.holds, (cs, i, j))
    return [tally.row()]


def _suite_pmd(matroid: Matroid):
    profile = pmd_profile(matroid)
    rows = [
        (
            "size_perfect_profile",
            True,
            f"n={profile.n_seq} N={profile.N_seq} V={profile.V_M}",
        )
    ]
    closed = _Tally("lopsided_closed_form")
    exchange = _Tally("exchange_relation")
    r = matroid.r
    for cs in compositions(r, r):
        prefix = 0
        lopsided = True
        for j, x in enumerate(cs, start=1):
            prefix += x
            if prefix < j:
                lopsided = False
                break
        vs = []
        for size, exp in zip(profile.n_seq, cs):
            vs.extend([size] * exp)
        if lopsided:
            closed.add(
                lopsided_degree(matroid, cs)
                == gamma_product_degree(matroid, tuple(vs)),
                cs,
            )
        for i in range(1, r + 1):
            if cs[i - 1] >= 2:
                exchange.add(pmd_recurrence_check(matroid, cs, i), (cs, i))
    rows.append(closed.row())
    if r >= 2:
        rows.append(exchange.row())
    if matroid.rank_total == 3:
        n1, n2 = profile.n_seq
        top = matroid.m
        ok = (
            gamma_product_degree(matroid, (n1, n1))
            == Fraction((top - n1) * (top - n2) * n1, n2)
            and gamma_product_degree(matroid, (n1, n2))
            == (top - n1) * (top - n2)
            and gamma_product_degree(matroid, (n2, n2)) == (top - n2) ** 2
        )
        rows.append(("rank_three_closed_forms", ok, "three size formulas"))
    return rows


_SUITES = {
    "charpoly": _suite_charpoly,
    "tutte": _suite_tutte,
    "pipelines": _suite_pipelines,
    "trees": _suite_trees,
    "logconcave": _suite_logconcave,
    "pmd": _suite_pmd,
}


def _cmd_check(args):
    spec = parse_matroid_spec(args.matroid)
    matroid = spec.build()
    names = list(_SUITES) if args.suite == "all" else [args.suite]
    records = []
    lines = []
    all_ok = True
    for name in names:
        start = time.perf_counter()
        try:
            rows = _SUITES[name](matroid)
        except NotPMD as exc:
            if args.suite != "all":
                raise
            rows = [("size_perfect_profile", True, f"skipped: {exc}")]
        millis = _ms(start)
        for check, ok, detail in rows:
            all_ok = all_ok and ok
            records.append(
                {
                    "matroid": spec.text,
                    "c": check,
                    "pipeline": f"check:{name}",
                    "value": "ok" if ok else "FAIL",
                    "millis": millis,
                    "detail": detail,
                }
            )
            lines.append(f"{'ok  ' if ok else 'FAIL'} {name}:{check}  {detail}")
    lines.append(
        f"{len(records)} checks, "
        + ("all passed" if all_ok else "FAILURES above are bugs")
    )
    return records, "\n".join(lines), 0 if all_ok else 2


# -- argument parsing and dispatch -------------------------------------------


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise ParseError(message)


def _build_parser() -> argparse.ArgumentParser:
    parser = _Parser(
        prog="mixeuler",
        description="Exact degree computations for products of hypersimplex "
        "classes in matroid Chow rings.",
    )
    shared = _Parser(add_help=False)
    shared.add_argument(
        "--format",
        choices=("json", "csv", "text"),
        default="text",
        help="output format (default text)",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def command(name, handler, help_text, matroid=True):
        p = sub.add_parser(name, parents=[shared], help=help_text)
        p.set_defaults(handler=handler)
        if matroid:
            p.add_argument(
                "--matroid",
                required=True,
                help="uniform:R,N | boolean:N | pg:R,Q | sparse:R,N;012|345 "
                "| file:PATH",
            )
        return p

    p = command("degree", _cmd_degree, "one degree through one pipeline")
    p.add_argument("--c", help="composition c_1,..,c_n over class indices")
    p.add_argument("--v", help="index multiset v_1,..,v_r")
    p.add_argument(
        "--pipeline",
        choices=PIPELINES,
        default="flag",
        help="algorithm (default flag)",
    )
    p.add_argument(
        "--convention",
        choices=("oi", "mult"),
        default="oi",
        help="weight convention for expansion pipelines (default oi)",
    )

    p = command("table", _cmd_table, "degrees of every composition")
    p.add_argument(
        "--contiguous-only",
        action="store_true",
        help="keep only compositions with interval support",
    )

    command("tutte", _cmd_tutte, "Tutte polynomial")
    command("charpoly", _cmd_charpoly, "characteristic polynomial and mu")

    p = command("cvpoly", _cmd_cvpoly, "one-variable degree polynomial of v")
    p.add_argument("--v", required=True, help="index multiset v_1,..,v_r")

    command("pvol", _cmd_pvol, "volume of the full class sum")

    p = command("remixed", _cmd_remixed, "q-deformed Eulerian number", matroid=False)
    p.add_argument("--r", type=int, required=True, help="rank parameter")
    p.add_argument("--q", required=True, help="positive rational, e.g. 2 or 1/2")
    p.add_argument("--c", required=True, help="exponents c_1,..,c_r")

    p = command("trees", _cmd_trees, "tree expansion of a product")
    p.add_argument("--v", required=True, help="index multiset v_1,..,v_r")

    p = command("check", _cmd_check, "run a verification suite")
    p.add_argument(
        "--suite",
        required=True,
        choices=tuple(_SUITES) + ("all",),
        help="which identities to verify",
    )
    return parser


def _emit(records, text, fmt):
    if fmt == "json":
        print(json.dumps(records, indent=2))
    elif fmt == "csv":
        writer = csv.writer(sys.stdout)
        writer.writerow(["matroid", "c", "pipeline", "value", "millis"])
        for rec in records:
            writer.writerow(
                [rec["matroid"], rec["c"], rec["pipeline"], rec["value"], rec["millis"]]
            )
    else:
        print(text)


def run(argv=None) -> int:
    """Parse argv, dispatch, print; return the process exit code."""
    try:
        args = _build_parser().parse_args(argv)
        records, text, code = args.handler(args)
        _emit(records, text, args.format)
        return code
    except SystemExit as exc:
        return 0 if exc.code in (0, None) else 1
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except InternalError as exc:
        print(f"internal error: {exc}", file=sys.stderr)
        return 2


def main() -> None:
    sys.exit(run(sys.argv[1:]))


if __name__ == "__main__":
    main()
