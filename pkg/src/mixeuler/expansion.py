"""Hypersimplex classes and their products in the Chow ring of a matroid.

For a loopless matroid on {0..n} of rank r+1, the Chow ring is spanned in
degree one by the classes x_F of proper nonempty flats, and carries a family
gamma_1, ..., gamma_n of nef divisor classes (pullbacks of the hypersimplex
classes from the permutohedral variety). This module expands products
gamma_{v_1} * ... * gamma_{v_r} into the weighted basis of flags of flats and
reads off the degree: the matroidal mixed Eulerian number
A_c(M) = deg(gamma_1^{c_1} * ... * gamma_n^{c_n}).

Two weight conventions are supported and must agree on every degree:

* "oi": gamma_k = sum over flats S of OI_E(S, T) x_S, where T is the set of
  the n+1-k largest elements and OI is the over-intersection, the amount by
  which |S cap T| exceeds the generic overlap. Integer weights.
* "mult": gamma_k = sum over flats S of (min(|S|, k) - k|S|/(n+1)) x_S.
  Exact rational weights via fractions.Fraction; every degree must come out
  an integer, and failure to do so raises InternalError.

Multiplying a weighted flag sum by gamma_k inserts one new flat into each
flag: if some flat of the flag has size exactly k the term dies, otherwise
there is a unique gap (F, G) in the flag with |F| < k < |G| (the ends padded
with the empty set and the ground set), and every flat strictly between F
and G enters with the convention's weight computed inside the interval.

For matroids whose proper flats are exactly the subsets of size at most r
(uniform matroids), degrees are also computed by aggregating flags into size
sequences; with mult weights this regrouping is term-exact, and with oi
weights the total outgoing weight of each gap depends only on sizes, so the
degree agrees. The flag expansion remains the reference path and the default
for everything that is not structurally uniform.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from math import comb

from .errors import CompositionMismatch, InternalError, VOutOfRange
from .matroid import Matroid, largest_elements_mask

__all__ = [
    "CONVENTIONS",
    "oi_weight",
    "mult_weight",
    "compositions",
    "composition_to_indices",
    "indices_to_composition",
    "WeightedFlagSum",
    "expand_gamma_product",
    "gamma_product_degree",
    "mixed_eulerian_degree",
    "pvol",
    "count_initial_descending_flags",
    "LogConcavityResult",
    "log_concavity_check",
]

CONVENTIONS = ("oi", "mult")


def oi_weight(s_mask: int, t_mask: int, u_mask: int) -> int:
    """Over-intersection of S and T inside U, on bitmasks."""
    s = (s_mask & u_mask).bit_count()
    t = (t_mask & u_mask).bit_count()
    overlap = (s_mask & t_mask & u_mask).bit_count()
    return overlap - max(0, s + t - u_mask.bit_count())


def mult_weight(s_size: int, k: int, u_size: int) -> Fraction:
    """Weight of a flat of size s_size in gamma_k over a u_size universe."""
    return min(s_size, k) - Fraction(k * s_size, u_size)


def compositions(total: int, parts: int):
    """All weak compositions of `total` into `parts` parts."""
    if parts == 0:
        if total == 0:
            yield ()
        return
    for bars in combinations(range(total + parts - 1), parts - 1):
        out = []
        prev = -1
        for b in bars:
            out.append(b - prev - 1)
            prev = b
        out.append(total + parts - 2 - prev)
        yield tuple(out)


def composition_to_indices(c) -> tuple:
    """(c_1..c_n) to the sorted index vector with k repeated c_k times."""
    out = []
    for k, ck in enumerate(c, start=1):
        out.extend([k] * ck)
    return tuple(out)


def indices_to_composition(v, n: int) -> tuple:
    out = [0] * n
    for k in v:
        if not 1 <= k <= n:
            raise VOutOfRange(f"index {k} outside 1..{n}")
        out[k - 1] += 1
    return tuple(out)


def _check_convention(convention: str):
    if convention not in CONVENTIONS:
        raise VOutOfRange(f"unknown weight convention {convention!r}")


@dataclass
class WeightedFlagSum:
    """A linear combination of flags of proper flats, keyed by flag tuple.

    Flags are tuples of flat bitmasks in increasing chain order. Weights are
    ints under the oi convention and Fractions under mult.
    """

    matroid: Matroid
    convention: str
    terms: dict

    def total(self):
        return sum(self.terms.values())

    def __len__(self):
        return len(self.terms)


def _find_gap(flag, val):
    """Gap index for inserting a flat of target size val, or None on a hit."""
    idx = 0
    for i, f in enumerate(flag):
        fs = f.bit_count()
        if fs == val:
            return None
        if fs < val:
            idx = i + 1
        else:
            break
    return idx


def _expand_step(matroid, terms, val, convention):
    full = matroid.full_mask
    new = {}
    for flag, w in terms.items():
        idx = _find_gap(flag, val)
        if idx is None:
            continue
        lo = flag[idx - 1] if idx else 0
        hi = flag[idx] if idx < len(flag) else full
        lo_size = lo.bit_count()
        hi_size = hi.bit_count()
        if convention == "oi":
            t_mask = largest_elements_mask(hi & ~lo, hi_size - val)
        for g in matroid.flats_strictly_between(lo, hi):
            if convention == "oi":
                wt = ((g & t_mask).bit_count()) - max(0, g.bit_count() - val)
            else:
                s_rel = (g & ~lo).bit_count()
                wt = mult_weight(s_rel, val - lo_size, hi_size - lo_size)
            if wt:
                nf = flag[:idx] + (g,) + flag[idx:]
                prev = new.get(nf)
                new[nf] = w * wt if prev is None else prev + w * wt
    return new


def expand_gamma_product(matroid: Matroid, v, convention: str = "oi") -> WeightedFlagSum:
    """Expand gamma_{v_1} * ... * gamma_{v_k} over flags, left to right.

    Every v_i must lie in 1..n and the product length may not exceed r. The
    resulting weights depend on the order of v; the total over full-length
    flags (the degree) does not.
    """
    _check_convention(convention)
    vs = tuple(v)
    if len(vs) > matroid.r:
        raise VOutOfRange(f"product of {len(vs)} classes exceeds top degree {matroid.r}")
    for val in vs:
        if not 1 <= val <= matroid.n:
            raise VOutOfRange(f"index {val} outside 1..{matroid.n}")
    terms = {(): 1 if convention == "oi" else Fraction(1)}
    for val in vs:
        terms = _expand_step(matroid, terms, val, convention)
    return WeightedFlagSum(matroid, convention, terms)


def _uniform_gap_weight(lo, hi, g, val, convention):
    """Total insertion weight over all flats of size g in a gap, sizes only."""
    u = hi - lo
    if convention == "oi":
        x = g - lo
        return (hi - val) * comb(u - 1, x - 1) - comb(u, x) * max(0, g - val)
    s_rel = g - lo
    return comb(u, s_rel) * mult_weight(s_rel, val - lo, u)


def _degree_by_sizes(matroid, vs, convention):
    m = matroid.m
    max_flat = matroid.rank_total - 1
    states = {(): 1 if convention == "oi" else Fraction(1)}
    for val in vs:
        new = {}
        for sizes, w in states.items():
            idx = 0
            hit = False
            for i, s in enumerate(sizes):
                if s == val:
                    hit = True
                    break
                if s < val:
                    idx = i + 1
                else:
                    break
            if hit:
                continue
            lo = sizes[idx - 1] if idx else 0
            hi = sizes[idx] if idx < len(sizes) else m
            for g in range(lo + 1, min(hi - 1, max_flat) + 1):
                wt = _uniform_gap_weight(lo, hi, g, val, convention)
                if wt:
                    ns = sizes[:idx] + (g,) + sizes[idx:]
                    prev = new.get(ns)
                    new[ns] = w * wt if prev is None else prev + w * wt
        states = new
    return sum(states.values())


def _as_integer(value) -> int:
    if isinstance(value, Fraction):
        if value.denominator != 1:
            raise InternalError(f"degree {value} is not an integer")
        return int(value)
    return int(value)


def gamma_product_degree(
    matroid: Matroid, v, convention: str = "oi", engine: str = "auto"
) -> int:
    """Degree of the product of the gamma_{v_i}, 0 when it trivially dies.

    Liberal on input: an index outside 1..n, or a product length different
    from r, gives 0. Recursive identities lean on that convention.
    """
    _check_convention(convention)
    vs = tuple(sorted(v))
    if len(vs) != matroid.r:
        return 0
    if vs and (vs[0] < 1 or vs[-1] > matroid.n):
        return 0
    if engine == "auto":
        engine = "sizes" if matroid.is_size_uniform() else "flag"
    if engine == "sizes":
        if not matroid.is_size_uniform():
            raise VOutOfRange("size engine needs a structurally uniform matroid")
        return _as_integer(_degree_by_sizes(matroid, vs, convention))
    if engine != "flag":
        raise VOutOfRange(f"unknown engine {engine!r}")
    terms = {(): 1 if convention == "oi" else Fraction(1)}
    for val in vs:
        terms = _expand_step(matroid, terms, val, convention)
    return _as_integer(sum(terms.values()))


def mixed_eulerian_degree(
    matroid: Matroid, c, convention: str = "oi", engine: str = "auto"
) -> int:
    """A_c(M) for a composition c = (c_1..c_n) of r."""
    cs = tuple(c)
    if len(cs) != matroid.n:
        raise CompositionMismatch(
            f"composition has {len(cs)} parts, ground set needs {matroid.n}"
        )
    if any(x < 0 for x in cs):
        raise CompositionMismatch("composition entries must be nonnegative")
    if sum(cs) != matroid.r:
        raise CompositionMismatch(
            f"composition sums to {sum(cs)}, top degree is {matroid.r}"
        )
    return gamma_product_degree(
        matroid, composition_to_indices(cs), convention, engine
    )


def pvol(matroid: Matroid, convention: str = "oi", engine: str = "auto") -> int:
    """Degree of (gamma_1 + ... + gamma_n)^r, the permutohedral volume.

    Equals the multinomial-weighted sum of all A_c(M); computed in one
    expansion by summing the insertion weight over all class indices.
    """
    _check_convention(convention)
    r = matroid.r
    if engine == "auto":
        engine = "sizes" if matroid.is_size_uniform() else "flag"
    if engine == "sizes":
        m = matroid.m
        max_flat = matroid.rank_total - 1
        states = {(): 1 if convention == "oi" else Fraction(1)}
        for _ in range(r):
            new = {}
            for sizes, w in states.items():
                bounds = (0,) + sizes + (m,)
                for idx in range(len(sizes) + 1):
                    lo, hi = bounds[idx], bounds[idx + 1]
                    for g in range(lo + 1, min(hi - 1, max_flat) + 1):
                        wt = sum(
                            _uniform_gap_weight(lo, hi, g, val, convention)
                            for val in range(lo + 1, hi)
                        )
                        if wt:
                            ns = sizes[:idx] + (g,) + sizes[idx:]
                            prev = new.get(ns)
                            new[ns] = w * wt if prev is None else prev + w * wt
            states = new
        return _as_integer(sum(states.values()))
    full = matroid.full_mask
    terms = {(): 1 if convention == "oi" else Fraction(1)}
    for _ in range(r):
        new = {}
        for flag, w in terms.items():
            chain = (0,) + flag + (full,)
            for idx in range(len(flag) + 1):
                lo, hi = chain[idx], chain[idx + 1]
                lo_size = lo.bit_count()
                hi_size = hi.bit_count()
                for g in matroid.flats_strictly_between(lo, hi):
                    wt = 0
                    for val in range(lo_size + 1, hi_size):
                        if convention == "oi":
                            t_mask = largest_elements_mask(hi & ~lo, hi_size - val)
                            wt += ((g & t_mask).bit_count()) - max(
                                0, g.bit_count() - val
                            )
                        else:
                            wt += mult_weight(
                                (g & ~lo).bit_count(), val - lo_size, hi_size - lo_size
                            )
                    if wt:
                        nf = flag[:idx] + (g,) + flag[idx:]
                        prev = new.get(nf)
                        new[nf] = w * wt if prev is None else prev + w * wt
        terms = new
    return _as_integer(sum(terms.values()))


def count_initial_descending_flags(matroid: Matroid, k: int) -> int:
    """Flags F_1 < ... < F_k with rank(F_i) = i and strictly falling minima.

    The minimum of F_k must itself be positive (element 0 appears in no
    flat of the flag). The count for k equals the k-th coefficient of the
    reduced characteristic polynomial, up to sign.
    """
    if k < 0 or k > matroid.r:
        raise VOutOfRange(f"flag length {k} outside 0..{matroid.r}")

    def grow(flat, prev_min, depth):
        if depth == k:
            return 1
        total = 0
        for g in matroid.flats_by_rank[depth + 1]:
            if flat & g == flat:
                g_min = (g & -g).bit_length() - 1
                if g_min > 0 and (depth == 0 or g_min < prev_min):
                    total += grow(g, g_min, depth + 1)
        return total

    return grow(0, matroid.m, 0)


@dataclass(frozen=True)
class LogConcavityResult:
    middle: int
    left: int
    right: int

    @property
    def holds(self) -> bool:
        return self.middle * self.middle >= self.left * self.right


def log_concavity_check(
    matroid: Matroid, c, i: int, j: int, convention: str = "oi"
) -> LogConcavityResult:
    """Compare A_{c+e_i+e_j}^2 against A_{c+2e_i} * A_{c+2e_j}."""
    cs = list(c)
    n = matroid.n
    if len(cs) != n:
        raise CompositionMismatch(f"composition has {len(cs)} parts, need {n}")
    if sum(cs) != matroid.r - 2:
        raise CompositionMismatch("composition must sum to r-2")
    if not (1 <= i <= n and 1 <= j <= n):
        raise VOutOfRange("class indices outside 1..n")

    def bump(a, b):
        out = list(cs)
        out[a - 1] += 1
        out[b - 1] += 1
        return mixed_eulerian_degree(matroid, out, convention)

    return LogConcavityResult(bump(i, j), bump(i, i), bump(j, j))
