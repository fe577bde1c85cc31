"""Loopless matroids on ground sets {0, ..., n} with exact lattice queries.

A matroid here is stored by its lattice of flats, enumerated once at
construction time, with every flat held as an integer bitmask over the
ground set. All later rank and closure queries walk the cover relation of
that lattice (each step from a flat to the unique cover flat gaining a given
element), so they cost a handful of dict lookups and never re-run the
original rank oracle. Element order is the natural integer order and minors
relabel surviving elements in that induced order; several downstream weight
conventions depend on "largest elements" being stable under taking minors,
which this preserves.

Constructors cover uniform matroids, projective geometries over prime
fields, sparse paving matroids given by their circuit-hyperplanes, explicit
basis lists, and explicit flat lists. Loops are rejected everywhere: the
degree theory downstream is only developed for loopless matroids.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from math import comb

from .errors import (
    BasisExchangeViolation,
    EmptyInput,
    InternalError,
    LoopDetected,
    NonPrimeQ,
    NotAFlat,
    OverlapViolation,
    RankCollapse,
    RankOutOfRange,
    SizeViolation,
)

__all__ = [
    "Matroid",
    "MinorMap",
    "bits_of",
    "mask_of",
    "set_of",
    "largest_elements_mask",
    "build_uniform",
    "build_boolean",
    "build_from_bases",
    "build_sparse_paving",
    "build_projective_geometry",
    "build_from_flats",
]


def bits_of(mask: int):
    """Yield the set bits of a mask in increasing order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def mask_of(elements) -> int:
    out = 0
    for e in elements:
        out |= 1 << e
    return out


def set_of(mask: int) -> tuple:
    return tuple(bits_of(mask))


def largest_elements_mask(universe: int, count: int) -> int:
    """Mask of the `count` largest elements of `universe`."""
    out = 0
    while count > 0 and universe:
        top = 1 << (universe.bit_length() - 1)
        out |= top
        universe ^= top
        count -= 1
    return out


@dataclass(frozen=True)
class MinorMap:
    """Order-preserving relabeling from a minor back to its parent.

    parent_elements[i] is the parent element that child element i came from.
    rank_dropped is set by single-element deletion when the element was a
    coloop.
    """

    parent_elements: tuple
    rank_dropped: bool = False

    def to_parent(self, child_mask: int) -> int:
        out = 0
        for i in bits_of(child_mask):
            out |= 1 << self.parent_elements[i]
        return out

    def to_child(self, parent_mask: int) -> int:
        out = 0
        for i, e in enumerate(self.parent_elements):
            if (parent_mask >> e) & 1:
                out |= 1 << i
        return out


class Matroid:
    """A loopless matroid with its flats enumerated by rank.

    Use the module-level build_* constructors; the raw initializer trusts
    its arguments apart from cheap structural checks.
    """

    def __init__(self, m: int, rank_total: int, flats_by_rank, provenance: str = ""):
        if m < 1:
            raise EmptyInput("ground set must be nonempty")
        if not (1 <= rank_total <= m):
            raise RankOutOfRange(f"rank {rank_total} invalid for {m} elements")
        self.m = m
        self.rank_total = rank_total
        self.full_mask = (1 << m) - 1
        levels = [tuple(sorted(level)) for level in flats_by_rank]
        if len(levels) != rank_total + 1:
            raise InternalError("flat levels do not match rank")
        if levels[0] != (0,):
            raise LoopDetected("empty set is not closed; matroid has loops")
        if levels[-1] != (self.full_mask,):
            raise InternalError("top flat is not the ground set")
        self.flats_by_rank = tuple(levels)
        self.provenance = provenance
        self._rank_of_flat = {}
        for k, level in enumerate(levels):
            for f in level:
                self._rank_of_flat[f] = k
        self._cover_step = self._build_cover_steps()
        self._between_cache = {}
        self._closure_tab = None
        self._key = None
        self._size_uniform = None
        self._flat_sizes = None

    # -- lattice plumbing ------------------------------------------------

    def _build_cover_steps(self):
        step = {}
        for k in range(self.rank_total):
            lower = self.flats_by_rank[k]
            upper = self.flats_by_rank[k + 1]
            for f in lower:
                row = {}
                for g in upper:
                    if f & g == f:
                        for x in bits_of(g & ~f):
                            if x in row:
                                raise NotAFlat(
                                    f"element {x} lies in two covers of flat {set_of(f)}"
                                )
                            row[x] = g
                if len(row) != self.m - f.bit_count():
                    missing = [x for x in bits_of(self.full_mask & ~f) if x not in row]
                    raise NotAFlat(
                        f"covers of flat {set_of(f)} do not partition the complement"
                        f" (no cover gains {missing[:3]})"
                    )
                step[f] = row
        step[self.full_mask] = {}
        return step

    def _walk(self, mask: int):
        c = 0
        rk = 0
        step = self._cover_step
        for x in bits_of(mask):
            if not (c >> x) & 1:
                c = step[c][x]
                rk += 1
                if c == self.full_mask:
                    break
        return c, rk

    def rank(self, mask: int) -> int:
        return self._walk(mask)[1]

    def closure(self, mask: int) -> int:
        return self._walk(mask)[0]

    def is_flat(self, mask: int) -> bool:
        return mask in self._rank_of_flat

    def rank_of_flat(self, mask: int) -> int:
        try:
            return self._rank_of_flat[mask]
        except KeyError:
            raise NotAFlat(f"{set_of(mask)} is not a flat") from None

    @property
    def n(self) -> int:
        """Top index of the class family gamma_1 .. gamma_n."""
        return self.m - 1

    @property
    def r(self) -> int:
        """Top degree of the Chow ring: rank minus one."""
        return self.rank_total - 1

    def proper_flats(self):
        for k in range(1, self.rank_total):
            yield from self.flats_by_rank[k]

    def flats_strictly_between(self, lo: int, hi: int):
        """All flats G with lo < G < hi, as a cached tuple."""
        key = (lo, hi)
        got = self._between_cache.get(key)
        if got is None:
            lo_rank = self._rank_of_flat[lo] if lo else 0
            hi_rank = (
                self.rank_total if hi == self.full_mask else self._rank_of_flat[hi]
            )
            got = tuple(
                g
                for k in range(lo_rank + 1, hi_rank)
                for g in self.flats_by_rank[k]
                if g & lo == lo and g & hi == g
            )
            self._between_cache[key] = got
        return got

    def closure_table(self):
        """Closure of every subset, as a list indexed by mask. Needs m <= 20."""
        if self._closure_tab is None:
            if self.m > 20:
                raise InternalError("full closure table limited to 20 elements")
            size = 1 << self.m
            tab = [0] * size
            step = self._cover_step
            for s in range(1, size):
                low = s & -s
                t = tab[s ^ low]
                x = low.bit_length() - 1
                tab[s] = t if (t >> x) & 1 else step[t][x]
            self._closure_tab = tab
        return self._closure_tab

    def corank_nullity_counts(self):
        """Counts of subsets by (corank, nullity) over the whole power set."""
        tab = self.closure_table()
        rk = self._rank_of_flat
        top = self.rank_total
        counts = {}
        for s, c in enumerate(tab):
            r = rk[c]
            key = (top - r, s.bit_count() - r)
            counts[key] = counts.get(key, 0) + 1
        return counts

    # -- structure predicates ---------------------------------------------

    def is_coloop(self, i: int) -> bool:
        if not 0 <= i < self.m:
            raise RankOutOfRange(f"element {i} out of range")
        return self.rank(self.full_mask ^ (1 << i)) == self.rank_total - 1

    def is_size_uniform(self) -> bool:
        """True when the proper flats are exactly the small subsets.

        Degree computations may then aggregate chains by size sequence.
        """
        if self._size_uniform is None:
            ok = True
            for k in range(1, self.rank_total):
                level = self.flats_by_rank[k]
                if len(level) != comb(self.m, k) or any(
                    f.bit_count() != k for f in level
                ):
                    ok = False
                    break
            self._size_uniform = ok
        return self._size_uniform

    def canonical_key(self):
        if self._key is None:
            self._key = (self.m, self.rank_total, self.flats_by_rank)
        return self._key

    def proper_flat_sizes(self) -> tuple:
        """Sorted distinct sizes of nonempty proper flats."""
        if self._flat_sizes is None:
            self._flat_sizes = tuple(
                sorted({f.bit_count() for f in self.proper_flats()})
            )
        return self._flat_sizes

    def __repr__(self):
        tag = self.provenance or "matroid"
        return f"<Matroid {tag} m={self.m} rank={self.rank_total}>"

    # -- minors -------------------------------------------------------------

    def minor_interval(self, lower: int, upper: int):
        """Matroid on upper minus lower: restrict to upper, contract lower.

        Both arguments must be flats with lower contained in upper. Flats of
        the minor are exactly the flats of self between them, relabeled in
        induced element order.
        """
        lo_rank = self.rank_of_flat(lower)
        hi_rank = self.rank_of_flat(upper)
        if lower & upper != lower:
            raise NotAFlat("lower flat is not contained in upper flat")
        if lo_rank == hi_rank:
            raise RankCollapse("minor interval has rank 0")
        elements = set_of(upper & ~lower)
        position = {e: i for i, e in enumerate(elements)}
        levels = []
        for k in range(lo_rank, hi_rank + 1):
            level = []
            for g in self.flats_by_rank[k]:
                if g & lower == lower and g & upper == g:
                    child = 0
                    for x in bits_of(g & ~lower):
                        child |= 1 << position[x]
                    level.append(child)
            levels.append(level)
        child = Matroid(len(elements), hi_rank - lo_rank, levels, provenance="minor")
        return child, MinorMap(elements)

    def restriction(self, flat: int):
        return self.minor_interval(0, flat)

    def contraction(self, flat: int):
        return self.minor_interval(flat, self.full_mask)

    def delete_element(self, i: int):
        """Single-element deletion. Rank drops exactly when i is a coloop."""
        if not 0 <= i < self.m:
            raise RankOutOfRange(f"element {i} out of range")
        if self.m == 1:
            raise EmptyInput("cannot delete the last element")
        elements = tuple(e for e in range(self.m) if e != i)
        dropped = self.is_coloop(i)

        def child_rank(child_mask):
            parent = 0
            for j in bits_of(child_mask):
                parent |= 1 << elements[j]
            return self.rank(parent)

        child = _from_rank_oracle(
            len(elements), child_rank, provenance="deletion"
        )
        return child, MinorMap(elements, rank_dropped=dropped)

    def truncate(self, s: int):
        """Drop the top s ranks, keeping the flats below and the ground set."""
        if s < 0:
            raise RankOutOfRange("truncation amount must be nonnegative")
        if s >= self.rank_total:
            raise RankCollapse(f"truncating rank {self.rank_total} by {s}")
        if s == 0:
            return self
        levels = [list(level) for level in self.flats_by_rank[: self.rank_total - s]]
        levels.append([self.full_mask])
        return Matroid(self.m, self.rank_total - s, levels, provenance="truncation")


# -- generic construction from a rank oracle --------------------------------


def _closure_from_oracle(mask, base_rank, m, rank_fn):
    out = mask
    for y in range(m):
        if not (out >> y) & 1 and rank_fn(mask | (1 << y)) == base_rank:
            out |= 1 << y
    return out


def _from_rank_oracle(m: int, rank_fn, provenance: str) -> Matroid:
    """Enumerate the flats of the matroid given by a rank oracle.

    Saturates upward: the flats of rank k+1 are the closures of F + x over
    flats F of rank k and elements x outside F.
    """
    full = (1 << m) - 1
    total = rank_fn(full)
    if total < 1:
        raise RankOutOfRange("matroid of rank 0")
    for x in range(m):
        if rank_fn(1 << x) == 0:
            raise LoopDetected(f"element {x} is a loop")
    levels = [[0]]
    current = [0]
    for k in range(1, total + 1):
        found = set()
        for f in current:
            rest = full & ~f
            for x in bits_of(rest):
                g = f | (1 << x)
                found.add(_closure_from_oracle(g, rank_fn(g), m, rank_fn))
        current = sorted(found)
        levels.append(current)
    return Matroid(m, total, levels, provenance=provenance)


# -- constructors ------------------------------------------------------------


def build_uniform(rank: int, n_plus_1: int) -> Matroid:
    """Uniform matroid: every subset of size up to `rank` is independent."""
    if not 1 <= rank <= n_plus_1:
        raise RankOutOfRange(f"uniform rank {rank} needs 1 <= rank <= {n_plus_1}")
    m = n_plus_1
    full = (1 << m) - 1
    levels = [[0]]
    for k in range(1, rank):
        levels.append([mask_of(c) for c in combinations(range(m), k)])
    levels.append([full])
    tag = "boolean" if rank == m else "uniform"
    return Matroid(m, rank, levels, provenance=tag)


def build_boolean(n_plus_1: int) -> Matroid:
    return build_uniform(n_plus_1, n_plus_1)


def build_from_bases(ground_set_size: int, bases) -> Matroid:
    """Matroid from an explicit list of bases, with the exchange axiom checked.

    The check is exhaustive over ordered pairs of bases, so this is meant for
    desk-scale inputs.
    """
    if ground_set_size < 1:
        raise EmptyInput("ground set must be nonempty")
    basis_list = []
    seen = set()
    for b in bases:
        mask = mask_of(b)
        if len(set(b)) != len(tuple(b)):
            raise SizeViolation(f"basis {sorted(b)} repeats an element")
        if mask < 0 or mask >= (1 << ground_set_size):
            raise SizeViolation(f"basis {sorted(b)} leaves the ground set")
        if mask not in seen:
            seen.add(mask)
            basis_list.append(mask)
    if not basis_list:
        raise EmptyInput("no bases given")
    size = basis_list[0].bit_count()
    for b in basis_list:
        if b.bit_count() != size:
            raise SizeViolation("bases of unequal size")
    covered = 0
    for b in basis_list:
        covered |= b
    if covered != (1 << ground_set_size) - 1:
        loose = set_of(((1 << ground_set_size) - 1) & ~covered)
        raise LoopDetected(f"elements {loose} lie in no basis")
    basis_set = set(basis_list)
    for b1 in basis_list:
        for b2 in basis_list:
            for x in bits_of(b1 & ~b2):
                probe = b1 ^ (1 << x)
                if not any(probe | (1 << y) in basis_set for y in bits_of(b2 & ~b1)):
                    raise BasisExchangeViolation(
                        f"no exchange for {x} from {set_of(b1)} into {set_of(b2)}"
                    )

    def rank_fn(mask):
        return max((mask & b).bit_count() for b in basis_list)

    return _from_rank_oracle(ground_set_size, rank_fn, provenance="bases")


def build_sparse_paving(rank: int, ground_set_size: int, circuit_hyperplanes) -> Matroid:
    """Sparse paving matroid: all rank-size sets are bases except the listed
    circuit-hyperplanes, which must pairwise meet in at most rank-2 elements.
    """
    if not 1 <= rank <= ground_set_size:
        raise RankOutOfRange(f"rank {rank} invalid for {ground_set_size} elements")
    chs = []
    for ch in circuit_hyperplanes:
        mask = mask_of(ch)
        if mask >= (1 << ground_set_size):
            raise SizeViolation(f"circuit-hyperplane {sorted(ch)} leaves the ground set")
        if mask.bit_count() != rank or len(set(ch)) != len(tuple(ch)):
            raise SizeViolation(
                f"circuit-hyperplane {sorted(ch)} does not have size {rank}"
            )
        chs.append(mask)
    if chs and rank == ground_set_size:
        raise SizeViolation("circuit-hyperplane cannot be the whole ground set")
    for a, b in combinations(chs, 2):
        if (a & b).bit_count() > rank - 2:
            raise OverlapViolation(
                f"circuit-hyperplanes {set_of(a)} and {set_of(b)} share too much"
            )
    ch_set = set(chs)

    def rank_fn(mask):
        size = mask.bit_count()
        if size < rank:
            return size
        if size == rank and mask in ch_set:
            return rank - 1
        return rank

    return _from_rank_oracle(ground_set_size, rank_fn, provenance="sparse")


def _is_prime(q: int) -> bool:
    if q < 2:
        return False
    d = 2
    while d * d <= q:
        if q % d == 0:
            return False
        d += 1
    return True


def _gf_rank(vectors, q: int) -> int:
    rows = []
    for vec in vectors:
        v = list(vec)
        for lead, row in rows:
            c = v[lead]
            if c:
                v = [(a - c * b) % q for a, b in zip(v, row)]
        lead = next((i for i, a in enumerate(v) if a), None)
        if lead is not None:
            inv = pow(v[lead], q - 2, q) if q > 2 else v[lead]
            v = [(a * inv) % q for a in v]
            rows.append((lead, v))
    return len(rows)


def build_projective_geometry(r: int, q: int) -> Matroid:
    """Rank r+1 projective geometry over the prime field of order q.

    Elements are the points, ordered by their lexicographically normalized
    coordinate vectors (first nonzero coordinate scaled to 1).
    """
    if r < 1:
        raise RankOutOfRange("projective geometry needs r >= 1")
    if not _is_prime(q):
        raise NonPrimeQ(f"{q} is not prime")
    dim = r + 1
    points = []
    for code in range(1, q**dim):
        vec = []
        rest = code
        for _ in range(dim):
            vec.append(rest % q)
            rest //= q
        vec.reverse()
        lead = next(a for a in vec if a)
        if lead == 1:
            points.append(tuple(vec))
    points.sort()

    def rank_fn(mask):
        return _gf_rank([points[i] for i in bits_of(mask)], q)

    return _from_rank_oracle(len(points), rank_fn, provenance="pg")


def build_from_flats(ground_set_size: int, flats_by_rank) -> Matroid:
    """Matroid from explicit flat lists, one list per rank starting at 0.

    Checks the defining lattice axioms: the bottom level is the empty set,
    the top is the ground set, intersections of flats are flats, and the
    covers of each flat partition its complement (the Matroid initializer
    enforces the partition).
    """
    if ground_set_size < 1:
        raise EmptyInput("ground set must be nonempty")
    full = (1 << ground_set_size) - 1
    levels = []
    seen = set()
    for level in flats_by_rank:
        masks = []
        for flat in level:
            mask = mask_of(flat)
            if mask >= (1 << ground_set_size):
                raise SizeViolation(f"flat {sorted(flat)} leaves the ground set")
            if mask in seen:
                raise SizeViolation(f"flat {sorted(flat)} listed twice")
            seen.add(mask)
            masks.append(mask)
        levels.append(masks)
    if not levels or levels[0] != [0]:
        raise LoopDetected("rank-0 level must be exactly the empty set")
    if levels[-1] != [full]:
        raise NotAFlat("top level must be exactly the ground set")
    for a in seen:
        for b in seen:
            if a < b and (a & b) not in seen:
                raise NotAFlat(
                    f"intersection of flats {set_of(a)} and {set_of(b)} is not a flat"
                )
    return Matroid(ground_set_size, len(levels) - 1, levels, provenance="flats")
