"""Tutte and characteristic polynomials, exactly.

Two independent routes to the Tutte polynomial: the corank-nullity sum over
all subsets of the ground set (primary, exhaustive), and loopless
deletion-contraction where a non-coloop element i satisfies
T_M = T_{M minus i} + y^(p-1) T_{M contract cl(i)} with p the number of
elements parallel to i, a coloop contributes a factor of x, and the empty
matroid is 1. The characteristic polynomial comes from T by the standard
substitution, and its reduced form carries the coefficients mu^k that the
degree computations must reproduce.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import comb

from .errors import DivisionNotExact, LoopDetected
from .matroid import Matroid, bits_of
from .polynomials import PolyXY, UniPoly

__all__ = ["tutte_polynomial", "CharData", "characteristic_data"]


def _tutte_corank_nullity(matroid: Matroid) -> PolyXY:
    counts = matroid.corank_nullity_counts()
    out = {}
    for (i, j), cnt in counts.items():
        # expand (x-1)^i (y-1)^j
        for a in range(i + 1):
            ca = comb(i, a) * (-1) ** (i - a)
            for b in range(j + 1):
                coef = cnt * ca * comb(j, b) * (-1) ** (j - b)
                key = (a, b)
                out[key] = out.get(key, 0) + coef
    return PolyXY(out)


def _tutte_delcon(matroid: Matroid) -> PolyXY:
    x = PolyXY.x()
    memo = {}

    def rank_in(contracted, subset):
        # rank of subset in the minor contracted by the flat `contracted`
        return matroid.rank(subset | contracted) - matroid.rank(contracted)

    def rec(ground, contracted):
        if ground == 0:
            return PolyXY.constant(1)
        key = (ground, contracted)
        hit = memo.get(key)
        if hit is not None:
            return hit
        rk = rank_in(contracted, ground)
        # pick the smallest non-coloop element if one exists
        pick = None
        for i in bits_of(ground):
            if rank_in(contracted, ground & ~(1 << i)) == rk:
                pick = i
                break
        if pick is None:
            # every element a coloop: Boolean minor
            res = x ** ground.bit_count()
        else:
            bit = 1 << pick
            parallel = matroid.closure(contracted | bit) & ground
            p = parallel.bit_count()
            y_pow = PolyXY({(0, p - 1): 1})
            res = rec(ground & ~bit, contracted) + y_pow * rec(
                ground & ~parallel, matroid.closure(contracted | bit)
            )
        memo[key] = res
        return res

    return rec(matroid.full_mask, 0)


def tutte_polynomial(matroid: Matroid, method: str = "corank-nullity") -> PolyXY:
    """T_M(x, y); `method` is "corank-nullity" or "deletion-contraction"."""
    if method == "corank-nullity":
        return _tutte_corank_nullity(matroid)
    if method == "deletion-contraction":
        return _tutte_delcon(matroid)
    raise ValueError(f"unknown Tutte method {method!r}")


@dataclass(frozen=True)
class CharData:
    chi: UniPoly
    chi_reduced: UniPoly
    mu: tuple


def characteristic_data(matroid: Matroid, tutte: PolyXY = None) -> CharData:
    """Characteristic polynomial, its reduced form, and the mu coefficients.

    chi(t) = (-1)^(r+1) T(1-t, 0), reduced by the factor (t-1); the k-th
    coefficient of the reduced polynomial is (-1)^k mu^k with mu^k >= 0.
    """
    t = tutte if tutte is not None else tutte_polynomial(matroid)
    lam = UniPoly.variable()
    chi = t.substitute(1 - lam, UniPoly())
    if isinstance(chi, int):
        chi = UniPoly.constant(chi)
    sign = -1 if matroid.rank_total % 2 else 1
    chi = sign * chi
    reduced = chi.divide_exact(lam - 1)
    r = matroid.r
    mu = []
    for k in range(r + 1):
        coef = reduced[r - k]
        if coef * (-1) ** k < 0:
            raise DivisionNotExact(
                f"reduced characteristic coefficient {coef} at degree {r - k} "
                "has the wrong sign"
            )
        mu.append(abs(coef))
    if mu[0] != 1:
        raise DivisionNotExact("reduced characteristic polynomial is not monic")
    if matroid.flats_by_rank[0][0] != 0:
        raise LoopDetected("characteristic polynomial needs a loopless matroid")
    return CharData(chi, reduced, tuple(mu))
