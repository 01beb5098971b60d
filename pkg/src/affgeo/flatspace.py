"""Subspaces and affine flats over F_q in canonical form.

Vectors are tuples of field-element encodings (see galois.FieldSpec);
a LinearSubspace stores a reduced row-echelon basis, an AffineFlat a
canonical coset representative plus a direction subspace.  Canonical
forms make equality and hashing O(1), which everything downstream
(dedup, design verification, decoding) relies on.

Geometries are coordinatized: AG(d, q) on the vectors of F_q^d and
PG(d, q) on the subspaces of F_q^(d+1).  A GeometrySpec carries the
matroid rank n of the whole geometry: affine rank n means ambient
dimension n-1, projective rank n means underlying vector dimension n.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from math import prod

from .galois import FieldElem, FieldSpec

ENUMERATION_GUARD = 10 ** 7


class GeometryError(ValueError):
    """Invalid flat/geometry operation."""


class GuardExceeded(GeometryError):
    """Requested enumeration is larger than the documented guard."""


# --- raw row operations (tuples of encodings) ------------------------------

def vec_add(K: FieldSpec, u, v):
    return tuple(K.add(a, b) for a, b in zip(u, v))


def vec_sub(K: FieldSpec, u, v):
    return tuple(K.sub(a, b) for a, b in zip(u, v))


def vec_scale(K: FieldSpec, c, u):
    return tuple(K.mul(c, a) for a in u)


def rref_rows(K: FieldSpec, rows, d):
    """Reduced row echelon form; returns (rows, pivots) as tuples."""
    work = [list(r) for r in rows]
    pivots = []
    r = 0
    for col in range(d):
        piv = next((i for i in range(r, len(work)) if work[i][col]), None)
        if piv is None:
            continue
        work[r], work[piv] = work[piv], work[r]
        lead = work[r][col]
        if lead != 1:
            il = K.inv(lead)
            work[r] = [K.mul(il, x) for x in work[r]]
        for i in range(len(work)):
            if i != r and work[i][col]:
                c = work[i][col]
                work[i] = [K.sub(x, K.mul(c, y)) for x, y in zip(work[i], work[r])]
        pivots.append(col)
        r += 1
        if r == len(work):
            break
    return tuple(tuple(row) for row in work[:r]), tuple(pivots)


def reduce_vector(K: FieldSpec, rows, pivots, v):
    """Reduce v modulo the RREF rows; result is zero iff v is in the row space."""
    v = list(v)
    for row, c in zip(rows, pivots):
        if v[c]:
            coef = v[c]
            v = [K.sub(x, K.mul(coef, y)) for x, y in zip(v, row)]
    return tuple(v)


def solve_combination(K: FieldSpec, gens, target, d):
    """Coefficients c with sum(c_i * gens_i) == target, or None."""
    n = len(gens)
    aug = [list(g) + [1 if j == i else 0 for j in range(n)] for i, g in enumerate(gens)]
    r = 0
    for col in range(d):
        piv = next((i for i in range(r, n) if aug[i][col]), None)
        if piv is None:
            continue
        aug[r], aug[piv] = aug[piv], aug[r]
        lead = aug[r][col]
        if lead != 1:
            il = K.inv(lead)
            aug[r] = [K.mul(il, x) for x in aug[r]]
        for i in range(n):
            if i != r and aug[i][col]:
                c = aug[i][col]
                aug[i] = [K.sub(x, K.mul(c, y)) for x, y in zip(aug[i], aug[r])]
        r += 1
        if r == n:
            break
    t = list(target) + [0] * n
    for i in range(r):
        col = next(c for c in range(d) if aug[i][c])
        if t[col]:
            coef = t[col]
            t = [K.sub(x, K.mul(coef, y)) for x, y in zip(t, aug[i])]
    if any(t[:d]):
        return None
    return tuple(K.neg(x) for x in t[d:])


# --- core types -------------------------------------------------------------

@dataclass(frozen=True)
class VectorFq:
    """A point of AG(d, q): a coordinate vector over a fixed field."""

    spec: FieldSpec
    coords: tuple  # encodings

    @classmethod
    def of(cls, spec: FieldSpec, values) -> "VectorFq":
        enc = tuple(v.val if isinstance(v, FieldElem) else v % spec.p for v in values)
        return cls(spec, enc)

    @property
    def d(self) -> int:
        return len(self.coords)

    def elems(self):
        return tuple(FieldElem(self.spec, c) for c in self.coords)

    def __repr__(self):
        return f"VectorFq({' '.join(self.spec.digits(c) for c in self.coords)})"


@dataclass(frozen=True)
class LinearSubspace:
    """A subspace of F_q^d, stored as its unique RREF basis."""

    spec: FieldSpec
    d: int
    rows: tuple  # tuple of coordinate tuples, RREF
    pivots: tuple

    @classmethod
    def from_rows(cls, spec: FieldSpec, d: int, rows) -> "LinearSubspace":
        if d < 1:
            raise GeometryError("ambient dimension must be >= 1")
        rr, piv = rref_rows(spec, rows, d)
        return cls(spec, d, rr, piv)

    @classmethod
    def zero(cls, spec: FieldSpec, d: int) -> "LinearSubspace":
        return cls(spec, d, (), ())

    @property
    def dim(self) -> int:
        return len(self.rows)

    def contains_vector(self, v) -> bool:
        return not any(reduce_vector(self.spec, self.rows, self.pivots, v))

    def contains(self, other: "LinearSubspace") -> bool:
        if (self.spec, self.d) != (other.spec, other.d):
            raise GeometryError("ambient mismatch")
        return all(self.contains_vector(r) for r in other.rows)

    def vectors(self):
        """All q^dim vectors of the subspace, deterministic order."""
        K = self.spec
        out = []
        for coeffs in itertools.product(K.encodings_lex(), repeat=self.dim):
            v = (0,) * self.d
            for c, row in zip(coeffs, self.rows):
                if c:
                    v = vec_add(K, v, vec_scale(K, c, row))
            out.append(v)
        return out

    def sort_key(self):
        return (self.dim, self.pivots, self.rows)

    def __repr__(self):
        return f"LinearSubspace(dim={self.dim} of F^{self.d})"


@dataclass(frozen=True)
class AffineFlat:
    """A coset of a subspace of F_q^d, or the empty flat (rep=None).

    The representative is canonical: its entries at the direction's
    pivot columns are zero, so equal cosets compare equal.
    """

    spec: FieldSpec
    d: int
    rep: tuple | None  # None encodes the empty flat
    dir: LinearSubspace | None

    @classmethod
    def empty(cls, spec: FieldSpec, d: int) -> "AffineFlat":
        return cls(spec, d, None, None)

    @classmethod
    def coset(cls, rep, dir: LinearSubspace) -> "AffineFlat":
        rep = rep.coords if isinstance(rep, VectorFq) else tuple(rep)
        canon = reduce_vector(dir.spec, dir.rows, dir.pivots, rep)
        return cls(dir.spec, dir.d, canon, dir)

    @classmethod
    def point(cls, v: VectorFq) -> "AffineFlat":
        return cls.coset(v, LinearSubspace.zero(v.spec, v.d))

    @property
    def is_empty(self) -> bool:
        return self.rep is None

    @property
    def rank(self) -> int:
        return 0 if self.is_empty else self.dir.dim + 1

    def contains_vector(self, v) -> bool:
        if self.is_empty:
            return False
        return not any(reduce_vector(self.spec, self.dir.rows, self.dir.pivots,
                                     vec_sub(self.spec, v, self.rep)))

    def contains(self, other: "AffineFlat") -> bool:
        if (self.spec, self.d) != (other.spec, other.d):
            raise GeometryError("ambient mismatch")
        if other.is_empty:
            return True
        if self.is_empty:
            return False
        return (all(self.dir.contains_vector(r) for r in other.dir.rows)
                and self.contains_vector(other.rep))

    def points(self):
        """All q^(rank-1) points of the coset."""
        if self.is_empty:
            return []
        K = self.spec
        return [vec_add(K, self.rep, v) for v in self.dir.vectors()]

    def sort_key(self):
        if self.is_empty:
            return (0, (), (), ())
        return (self.rank, self.dir.pivots, self.rep, self.dir.rows)

    def __repr__(self):
        if self.is_empty:
            return "AffineFlat(empty)"
        return f"AffineFlat(rank={self.rank} of AG^{self.d})"


@dataclass(frozen=True)
class GeometrySpec:
    """AG or PG over a fixed field, identified by total matroid rank n."""

    kind: str  # 'affine' | 'projective'
    field: FieldSpec
    rank: int

    def __post_init__(self):
        if self.kind not in ("affine", "projective"):
            raise GeometryError(f"unknown geometry kind {self.kind!r}")
        if self.rank < 1:
            raise GeometryError("geometry rank must be >= 1")

    @property
    def ambient_dim(self) -> int:
        return self.rank - 1 if self.kind == "affine" else self.rank

    @property
    def q(self) -> int:
        return self.field.order


def affine_geometry(field: FieldSpec, rank: int) -> GeometrySpec:
    return GeometrySpec("affine", field, rank)


def projective_geometry(field: FieldSpec, rank: int) -> GeometrySpec:
    return GeometrySpec("projective", field, rank)


# --- operations -------------------------------------------------------------

def rref(rows) -> LinearSubspace:
    """Canonical subspace spanned by the given vectors."""
    rows = list(rows)
    if not rows:
        raise GeometryError("cannot infer ambient dimension from no rows")
    spec = rows[0].spec if isinstance(rows[0], VectorFq) else None
    if spec is None:
        raise GeometryError("rref expects VectorFq rows")
    d = rows[0].d
    if any(r.spec != spec or r.d != d for r in rows):
        raise GeometryError("rows disagree on field or length")
    return LinearSubspace.from_rows(spec, d, [r.coords for r in rows])


def lin_meet(U: LinearSubspace, V: LinearSubspace) -> LinearSubspace:
    """Intersection of subspaces (Zassenhaus block elimination)."""
    if (U.spec, U.d) != (V.spec, V.d):
        raise GeometryError("ambient mismatch")
    K, d = U.spec, U.d
    stacked = [r + r for r in U.rows] + [r + (0,) * d for r in V.rows]
    rr, _ = rref_rows(K, stacked, 2 * d)
    meet_rows = [row[d:] for row in rr if not any(row[:d])]
    return LinearSubspace.from_rows(K, d, meet_rows)


def lin_join(U: LinearSubspace, V: LinearSubspace) -> LinearSubspace:
    if (U.spec, U.d) != (V.spec, V.d):
        raise GeometryError("ambient mismatch")
    return LinearSubspace.from_rows(U.spec, U.d, list(U.rows) + list(V.rows))


def aff_closure(points) -> AffineFlat:
    """Smallest coset containing the given nonempty point set."""
    pts = [p.coords if isinstance(p, VectorFq) else tuple(p) for p in points]
    if not pts:
        raise GeometryError("affine closure of an empty set is undefined")
    specs = {p.spec for p in points if isinstance(p, VectorFq)}
    if len(specs) > 1:
        raise GeometryError("points disagree on field")
    spec = specs.pop() if specs else None
    if spec is None:
        raise GeometryError("aff_closure expects VectorFq points")
    base = pts[0]
    d = len(base)
    diffs = [vec_sub(spec, p, base) for p in pts[1:]]
    dir = LinearSubspace.from_rows(spec, d, diffs)
    return AffineFlat.coset(base, dir)


def aff_meet(E: AffineFlat, F: AffineFlat) -> AffineFlat:
    """Intersection of cosets; the empty flat when disjoint."""
    if (E.spec, E.d) != (F.spec, F.d):
        raise GeometryError("ambient mismatch")
    if E.is_empty or F.is_empty:
        return AffineFlat.empty(E.spec, E.d)
    K, d = E.spec, E.d
    diff = vec_sub(K, F.rep, E.rep)
    gens = list(E.dir.rows) + [vec_scale(K, K.neg(1), r) for r in F.dir.rows]
    if not gens:
        return E if diff == (0,) * d else AffineFlat.empty(K, d)
    coeffs = solve_combination(K, gens, diff, d)
    if coeffs is None:
        return AffineFlat.empty(K, d)
    point = E.rep
    for c, row in zip(coeffs[:E.dir.dim], E.dir.rows):
        if c:
            point = vec_add(K, point, vec_scale(K, c, row))
    return AffineFlat.coset(point, lin_meet(E.dir, F.dir))


def aff_join(E: AffineFlat, F: AffineFlat) -> AffineFlat:
    """Smallest coset containing both (the lattice join)."""
    if (E.spec, E.d) != (F.spec, F.d):
        raise GeometryError("ambient mismatch")
    if E.is_empty:
        return F
    if F.is_empty:
        return E
    K, d = E.spec, E.d
    rows = list(E.dir.rows) + list(F.dir.rows) + [vec_sub(K, F.rep, E.rep)]
    return AffineFlat.coset(E.rep, LinearSubspace.from_rows(K, d, rows))


def parallel(E: AffineFlat, F: AffineFlat) -> bool:
    """True iff the cosets share their direction subspace."""
    if E.is_empty or F.is_empty:
        raise GeometryError("parallelism is defined for nonempty flats")
    return E.dir == F.dir


def flat_rank(f, g: GeometrySpec) -> int:
    """Matroid rank of a flat within its geometry."""
    if g.kind == "affine":
        if not isinstance(f, AffineFlat) or f.d != g.ambient_dim or f.spec != g.field:
            raise GeometryError("flat does not belong to this affine geometry")
        return f.rank
    if not isinstance(f, LinearSubspace) or f.d != g.ambient_dim or f.spec != g.field:
        raise GeometryError("flat does not belong to this projective geometry")
    return f.dim


def count_points(g: GeometrySpec) -> int:
    q, n = g.q, g.rank
    if g.kind == "projective":
        return (q ** n - 1) // (q - 1)
    return q ** (n - 1)


def gaussian_binomial(n: int, k: int, q: int) -> int:
    if k < 0 or k > n:
        return 0
    num = prod(q ** (n - i) - 1 for i in range(k))
    den = prod(q ** (k - i) - 1 for i in range(k))
    return num // den


def count_flats(g: GeometrySpec, r: int) -> int:
    """Number of rank-r flats, by closed form."""
    if r < 0 or r > g.rank:
        raise GeometryError(f"rank {r} out of range for geometry of rank {g.rank}")
    q = g.q
    if g.kind == "projective":
        return gaussian_binomial(g.rank, r, q)
    if r == 0:
        return 1
    d, t = g.ambient_dim, r - 1
    return q ** (d - t) * gaussian_binomial(d, t, q)


def enumerate_subspaces(spec: FieldSpec, d: int, k: int):
    """All k-dim subspaces of F_q^d as RREF bases, pivot-pattern order."""
    if k == 0:
        yield LinearSubspace.zero(spec, d)
        return
    lex = spec.encodings_lex()
    for pivots in itertools.combinations(range(d), k):
        pivset = set(pivots)
        free = [(i, j) for i in range(k) for j in range(d)
                if j > pivots[i] and j not in pivset]
        for assignment in itertools.product(lex, repeat=len(free)):
            rows = [[0] * d for _ in range(k)]
            for i in range(k):
                rows[i][pivots[i]] = 1
            for (i, j), val in zip(free, assignment):
                rows[i][j] = val
            yield LinearSubspace(spec, d, tuple(tuple(r) for r in rows), pivots)


def enumerate_flats(g: GeometrySpec, r: int):
    """All rank-r flats of the geometry, each once, deterministic order."""
    n = count_flats(g, r)
    if n > ENUMERATION_GUARD:
        raise GuardExceeded(f"{n} flats exceed the guard of {ENUMERATION_GUARD}")
    K = g.field
    d = g.ambient_dim
    if g.kind == "projective":
        return list(enumerate_subspaces(K, d, r))
    if r == 0:
        return [AffineFlat.empty(K, d)]
    t = r - 1
    lex = K.encodings_lex()
    out = []
    for dir in enumerate_subspaces(K, d, t):
        nonpivot = [j for j in range(d) if j not in dir.pivots]
        for values in itertools.product(lex, repeat=len(nonpivot)):
            rep = [0] * d
            for j, val in zip(nonpivot, values):
                rep[j] = val
            out.append(AffineFlat(K, d, tuple(rep), dir))
    return out


def enumerate_points(g: GeometrySpec):
    """Ground points: vectors for AG, normalized nonzero vectors for PG."""
    K = g.field
    d = g.ambient_dim
    lex = K.encodings_lex()
    if g.kind == "affine":
        return [tuple(v) for v in itertools.product(lex, repeat=d)]
    pts = []
    for lead in range(d):
        for tail in itertools.product(lex, repeat=d - lead - 1):
            pts.append((0,) * lead + (1,) + tail)
    return pts


def normalize_projective_point(K: FieldSpec, v):
    """Scale a nonzero vector so its first nonzero coordinate is 1."""
    lead = next((c for c in v if c), None)
    if lead is None:
        raise GeometryError("zero vector is not a projective point")
    if lead == 1:
        return tuple(v)
    il = K.inv(lead)
    return tuple(K.mul(il, c) for c in v)


def projective_completion(E: AffineFlat) -> LinearSubspace:
    """Embed a nonempty affine flat into PG via x -> (1 : x)."""
    if E.is_empty:
        raise GeometryError("the empty flat has no projective completion")
    rows = [(1,) + E.rep] + [(0,) + r for r in E.dir.rows]
    return LinearSubspace.from_rows(E.spec, E.d + 1, rows)


def hyperplane_restriction(S: LinearSubspace) -> AffineFlat:
    """Inverse of projective_completion; empty if S lies in x0 = 0."""
    if S.dim == 0 or S.pivots[0] != 0:
        return AffineFlat.empty(S.spec, S.d - 1)
    rep = S.rows[0][1:]
    dir_rows = [r[1:] for r in S.rows[1:]]
    dir = LinearSubspace.from_rows(S.spec, S.d - 1, dir_rows)
    return AffineFlat.coset(rep, dir)
