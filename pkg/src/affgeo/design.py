"""Design verification in AG/PG, the lambda_s reduction, and the
classical-design expansions.

A FlatFamily is a geometry plus a deduplicated list of equal-rank flats
(blocks).  verify_design counts, for every rank-t flat of the geometry,
how many blocks contain it; the count is obtained by enumerating each
block's rank-t subflats and tallying, which is linear in the blocks
rather than in all (t-flat, block) pairs.

All counts are exact integers; lambda_s is an exact Fraction.
"""

from __future__ import annotations

import itertools
import math
from collections import Counter
from dataclasses import dataclass
from fractions import Fraction

from . import flatspace
from .flatspace import (AffineFlat, GeometryError, GeometrySpec,
                        LinearSubspace, count_flats, enumerate_flats,
                        flat_rank, rref_rows, vec_add, vec_scale)
from .matroid import PmdType


class DesignError(ValueError):
    pass


@dataclass(frozen=True)
class FlatFamily:
    """A uniform-rank family of flats in one geometry (design, code, spread)."""

    geometry: GeometrySpec
    blocks: tuple

    def __post_init__(self):
        if len(set(self.blocks)) != len(self.blocks):
            raise DesignError("blocks must be pairwise distinct")
        ranks = {flat_rank(b, self.geometry) for b in self.blocks}
        if len(ranks) > 1:
            raise DesignError(f"blocks have mixed ranks {sorted(ranks)}")

    @property
    def block_rank(self) -> int:
        if not self.blocks:
            raise DesignError("empty family has no block rank")
        return flat_rank(self.blocks[0], self.geometry)

    def sorted(self) -> "FlatFamily":
        return FlatFamily(self.geometry,
                          tuple(sorted(self.blocks, key=lambda b: b.sort_key())))

    def __len__(self):
        return len(self.blocks)


@dataclass(frozen=True)
class DesignParams:
    t: int
    k: int
    n: int
    lam: int
    q: int

    def __post_init__(self):
        if not 1 <= self.t <= self.k <= self.n:
            raise DesignError(f"need 1 <= t <= k <= n, got {self}")


@dataclass(frozen=True)
class ClassicalDesign:
    """A classical design on points 0..v-1 with uniform block size."""

    point_count: int
    blocks: tuple  # tuple of frozensets of indices

    def __post_init__(self):
        sizes = {len(b) for b in self.blocks}
        if len(sizes) > 1:
            raise DesignError(f"non-uniform classical block sizes {sorted(sizes)}")
        for b in self.blocks:
            if any(not 0 <= i < self.point_count for i in b):
                raise DesignError("block index out of range")

    @property
    def block_size(self) -> int:
        return len(self.blocks[0]) if self.blocks else 0


@dataclass(frozen=True)
class VerifyResult:
    ok: bool
    lam: int | None = None
    witness: object = None
    counts: tuple = ()

    def __bool__(self):
        return self.ok


# --- subflat enumeration ------------------------------------------------------

def _affine_subflats(block: AffineFlat, t: int):
    """All rank-t flats contained in an affine block."""
    if t == 0:
        return [AffineFlat.empty(block.spec, block.d)]
    K = block.spec
    kk = block.dir.dim  # block rank - 1
    out = []
    pts = block.points()
    for sub in flatspace.enumerate_subspaces(K, kk, t - 1):
        # lift the coordinate subspace through the block's direction basis
        lifted = []
        for row in sub.rows:
            v = (0,) * block.d
            for c, brow in zip(row, block.dir.rows):
                if c:
                    v = vec_add(K, v, vec_scale(K, c, brow))
            lifted.append(v)
        T = LinearSubspace.from_rows(K, block.d, lifted)
        reps = {flatspace.reduce_vector(K, T.rows, T.pivots, p) for p in pts}
        for rep in sorted(reps):
            out.append(AffineFlat(K, block.d, rep, T))
    return out


def _projective_subflats(block: LinearSubspace, t: int):
    """All rank-t subspaces of a projective block."""
    K = block.spec
    out = []
    for sub in flatspace.enumerate_subspaces(K, block.dim, t):
        lifted = []
        for row in sub.rows:
            v = (0,) * block.d
            for c, brow in zip(row, block.rows):
                if c:
                    v = vec_add(K, v, vec_scale(K, c, brow))
            lifted.append(v)
        out.append(LinearSubspace.from_rows(K, block.d, lifted))
    return out


def subflats(block, t: int, g: GeometrySpec):
    if g.kind == "affine":
        return _affine_subflats(block, t)
    return _projective_subflats(block, t)


# --- verification -------------------------------------------------------------

def verify_design(fam: FlatFamily, t: int) -> VerifyResult:
    """Common containment count lambda over all rank-t flats, or a witness."""
    g = fam.geometry
    if not fam.blocks:
        raise DesignError("cannot verify an empty family")
    k = fam.block_rank
    if t > k:
        raise DesignError(f"t={t} exceeds block rank {k}")
    tally = Counter()
    for b in fam.blocks:
        tally.update(subflats(b, t, g))
    total = count_flats(g, t)
    values = set(tally.values())
    if len(values) == 1 and len(tally) == total:
        return VerifyResult(True, lam=values.pop())
    if len(tally) < total:
        # some rank-t flat is uncovered; find one for the report
        observed = max(values) if values else 0
        for f in enumerate_flats(g, t):
            if f not in tally:
                return VerifyResult(False, witness=f, counts=(0, observed))
    lo, hi = min(values), max(values)
    wit = next(f for f, c in tally.items() if c == lo)
    return VerifyResult(False, witness=wit, counts=(lo, hi))


def lambda_s(p: DesignParams, typ: PmdType, s: int) -> Fraction:
    """Derived index: lambda * prod_{i=s}^{t-1} (f_n - f_i) / (f_k - f_i)."""
    if not 0 <= s <= p.t:
        raise DesignError(f"s={s} out of range [0, {p.t}]")
    f = typ.f
    if len(f) < p.n + 1:
        raise DesignError("PMD type too short for design parameters")
    val = Fraction(p.lam)
    for i in range(s, p.t):
        val *= Fraction(f[p.n] - f[i], f[p.k] - f[i])
    return val


def complete_design(g: GeometrySpec, k: int) -> FlatFamily:
    """All rank-k flats; trivially a t-design for every t <= k."""
    return FlatFamily(g, tuple(enumerate_flats(g, k)))


# --- point indexing and classical expansion ------------------------------------

def affine_point_index(g: GeometrySpec):
    """Vectors of AG in serialization order, with index lookup."""
    pts = sorted(flatspace.enumerate_points(g),
                 key=lambda v: tuple(g.field.decode(c) for c in v))
    return pts, {p: i for i, p in enumerate(pts)}


def projective_point_index(g: GeometrySpec):
    """Normalized 1-dim subspace representatives in serialization order."""
    pts = sorted(flatspace.enumerate_points(g),
                 key=lambda v: tuple(g.field.decode(c) for c in v))
    return pts, {p: i for i, p in enumerate(pts)}


def expand_subspace_design(fam: FlatFamily) -> ClassicalDesign:
    """Blocks become their projective point sets (sizes [k]_q)."""
    g = fam.geometry
    if g.kind != "projective":
        raise DesignError("expand_subspace_design needs a projective family")
    _, index = projective_point_index(g)
    K = g.field
    blocks = []
    for b in fam.blocks:
        pts = {flatspace.normalize_projective_point(K, v)
               for v in b.vectors() if any(v)}
        blocks.append(frozenset(index[p] for p in pts))
    return ClassicalDesign(len(index), tuple(blocks))


def expand_affine_design(fam: FlatFamily, t: int) -> ClassicalDesign:
    """Blocks become their point sets (sizes q^(k-1)).

    Valid for t = 2 always, and t = 3 when q = 2 (three points of an
    F_2 space are never collinear, so point triples and planes agree).
    """
    g = fam.geometry
    if g.kind != "affine":
        raise DesignError("expand_affine_design needs an affine family")
    if not (t == 2 or (t == 3 and g.q == 2)):
        raise DesignError(f"unsupported expansion: t={t}, q={g.q}")
    _, index = affine_point_index(g)
    blocks = tuple(frozenset(index[p] for p in b.points()) for b in fam.blocks)
    return ClassicalDesign(len(index), blocks)


def verify_classical(design: ClassicalDesign, t: int) -> VerifyResult:
    """Brute-force coverage count of all t-subsets of the point set."""
    tally = Counter()
    for b in design.blocks:
        for combo in itertools.combinations(sorted(b), t):
            tally[combo] += 1
    total = math.comb(design.point_count, t)
    values = set(tally.values())
    if len(values) == 1 and len(tally) == total:
        return VerifyResult(True, lam=values.pop())
    if len(tally) < total:
        observed = max(values) if values else 0
        for combo in itertools.combinations(range(design.point_count), t):
            if combo not in tally:
                return VerifyResult(False, witness=combo, counts=(0, observed))
    lo, hi = min(values), max(values)
    wit = next(c for c, n in tally.items() if c == lo)
    return VerifyResult(False, witness=wit, counts=(lo, hi))


def ev11_compose(fam: FlatFamily) -> ClassicalDesign:
    """2-(n,k,lam) subspace design over F_2 -> classical 3-(2^n, 2^k, lam)."""
    g = fam.geometry
    if g.kind != "projective":
        raise DesignError("ev11_compose needs a projective family")
    if g.q != 2:
        raise DesignError("ev11_compose requires q = 2")
    from .construct import translate_closure
    if not fam.blocks:
        return ClassicalDesign(flatspace.count_points(
            flatspace.affine_geometry(g.field, g.rank + 1)), ())
    return expand_affine_design(translate_closure(fam), 3)


# --- parallel-class analysis ----------------------------------------------------

def parallel_classes(fam: FlatFamily) -> int:
    """Number of distinct direction subspaces among the blocks."""
    if fam.geometry.kind != "affine":
        raise DesignError("parallel classes are an affine notion")
    if not fam.blocks:
        raise DesignError("empty family")
    return len({b.dir for b in fam.blocks})


def is_skew(fam: FlatFamily) -> bool:
    """True iff no two blocks are parallel (every direction occurs once)."""
    return parallel_classes(fam) == len(fam.blocks)
