"""Exact arithmetic in small finite fields F_{p^e}.

Elements are stored as integers in [0, p^e) encoding polynomial-basis
coordinates: the value sum(c_i * p^i) encodes the element with
coefficients (c_0, ..., c_{e-1}), constant term first.  Each FieldSpec
carries add/mul/inv lookup tables, so per-operation cost is a couple of
list indexings.  Fields are capped at ORDER_LIMIT elements; this is a
desk-scale library, not a crypto one.

The modulus for (p, e) is the lexicographically least monic irreducible
polynomial of degree e over F_p (ordered by the coefficient tuple,
constant term first), found by trial division.  Same (p, e) always
yields the same field.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache

ORDER_LIMIT = 512


class FieldError(ValueError):
    """Bad field parameters or invalid field operation."""


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0:
        return False
    f = 3
    while f * f <= n:
        if n % f == 0:
            return False
        f += 2
    return True


def _poly_mod_mul(a, b, modulus, p):
    """Multiply coefficient tuples mod (modulus, p)."""
    prod = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                prod[i + j] = (prod[i + j] + ai * bj) % p
    e = len(modulus) - 1
    # reduce: modulus is monic of degree e
    for i in range(len(prod) - 1, e - 1, -1):
        c = prod[i]
        if c:
            prod[i] = 0
            for j in range(e):
                prod[i - e + j] = (prod[i - e + j] - c * modulus[j]) % p
    return tuple(prod[:e]) if len(prod) >= e else tuple(prod) + (0,) * (e - len(prod))


def _poly_divmod_deg(num, den, p):
    """Remainder of polynomial division over F_p; inputs are lists, leading coeff of den nonzero."""
    num = list(num)
    dd = len(den) - 1
    inv_lead = pow(den[-1], p - 2, p) if p > 2 else den[-1]
    for i in range(len(num) - 1, dd - 1, -1):
        c = (num[i] * inv_lead) % p
        if c:
            for j in range(dd + 1):
                num[i - dd + j] = (num[i - dd + j] - c * den[j]) % p
    return num[:dd]


def _is_irreducible(coeffs, p: int) -> bool:
    """Trial division by every lower-degree monic polynomial."""
    e = len(coeffs) - 1
    if e == 1:
        return True
    if coeffs[0] == 0:
        return False  # divisible by X
    for d in range(1, e // 2 + 1):
        for lower in itertools.product(range(p), repeat=d):
            den = list(lower) + [1]
            rem = _poly_divmod_deg(coeffs, den, p)
            if not any(rem):
                return False
    return True


@lru_cache(maxsize=None)
def _least_irreducible(p: int, e: int) -> tuple:
    """Least monic irreducible of degree e over F_p, ordered
    lexicographically on (c_{e-1}, ..., c_0); picks the usual low-weight
    polynomials (X^3+X+1 for F_8, X^4+X+1 for F_16, ...)."""
    for lower in itertools.product(range(p), repeat=e):
        coeffs = tuple(reversed(lower)) + (1,)
        if _is_irreducible(coeffs, p):
            return coeffs
    raise FieldError(f"no irreducible polynomial found for p={p}, e={e}")  # unreachable


class FieldSpec:
    """The field F_{p^e} with a fixed irreducible modulus.

    Obtain instances through field_new(); direct construction skips the
    instance cache but is otherwise equivalent.
    """

    def __init__(self, p: int, e: int, modulus: tuple):
        self.p = p
        self.e = e
        self.order = p ** e
        self.modulus = modulus
        self._build_tables()

    def _build_tables(self):
        p, e, q = self.p, self.e, self.order
        coeff = [self.decode(v) for v in range(q)]
        if e == 1:
            self._add = [[(a + b) % p for b in range(p)] for a in range(p)]
            self._mul = [[(a * b) % p for b in range(p)] for a in range(p)]
        else:
            self._add = [
                [self.encode(tuple((x + y) % p for x, y in zip(coeff[a], coeff[b])))
                 for b in range(q)]
                for a in range(q)
            ]
            self._mul = [
                [self.encode(_poly_mod_mul(coeff[a], coeff[b], self.modulus, p))
                 for b in range(q)]
                for a in range(q)
            ]
        self._neg = [self._neg_scan(a) for a in range(q)]
        self._inv = [0] * q
        for a in range(1, q):
            row = self._mul[a]
            self._inv[a] = row.index(1)

    def _neg_scan(self, a):
        p = self.p
        return self.encode(tuple((-c) % p for c in self.decode(a)))

    # --- encoding helpers -------------------------------------------------

    def decode(self, val: int) -> tuple:
        """Integer encoding -> coefficient tuple (constant first)."""
        p = self.p
        return tuple((val // p ** i) % p for i in range(self.e))

    def encode(self, coeffs) -> int:
        p = self.p
        return sum(c * p ** i for i, c in enumerate(coeffs))

    # --- arithmetic on encodings -----------------------------------------

    def add(self, a: int, b: int) -> int:
        return self._add[a][b]

    def neg(self, a: int) -> int:
        return self._neg[a]

    def sub(self, a: int, b: int) -> int:
        return self._add[a][self._neg[b]]

    def mul(self, a: int, b: int) -> int:
        return self._mul[a][b]

    def inv(self, a: int) -> int:
        if a == 0:
            raise FieldError("inversion of zero")
        return self._inv[a]

    def pow(self, a: int, n: int) -> int:
        if n < 0:
            a, n = self.inv(a), -n
        result = 1
        while n:
            if n & 1:
                result = self._mul[result][a]
            a = self._mul[a][a]
            n >>= 1
        return result

    def encodings_lex(self):
        """All encodings ordered lexicographically by coefficient tuple."""
        return sorted(range(self.order), key=self.decode)

    def digits(self, val: int) -> str:
        """Serialize an element: e base-p digits, constant first."""
        cs = self.decode(val)
        if self.p <= 10:
            return "".join(str(c) for c in cs)
        return ",".join(str(c) for c in cs)

    def parse_digits(self, s: str) -> int:
        if self.p <= 10:
            cs = tuple(int(ch) for ch in s)
        else:
            cs = tuple(int(tok) for tok in s.split(","))
        if len(cs) != self.e or any(not 0 <= c < self.p for c in cs):
            raise FieldError(f"bad element serialization {s!r} for F_{self.p}^{self.e}")
        return self.encode(cs)

    def __eq__(self, other):
        return (isinstance(other, FieldSpec)
                and (self.p, self.e, self.modulus) == (other.p, other.e, other.modulus))

    def __hash__(self):
        return hash((self.p, self.e, self.modulus))

    def __repr__(self):
        return f"FieldSpec(p={self.p}, e={self.e})"


@lru_cache(maxsize=None)
def field_new(p: int, e: int = 1) -> FieldSpec:
    """The field F_{p^e} with the built-in deterministic modulus."""
    if not _is_prime(p):
        raise FieldError(f"p={p} is not prime")
    if e < 1:
        raise FieldError(f"extension degree e={e} must be >= 1")
    if p ** e > ORDER_LIMIT:
        raise FieldError(f"field order {p}^{e} exceeds limit {ORDER_LIMIT}")
    return FieldSpec(p, e, _least_irreducible(p, e))


def field_of_order(q: int) -> FieldSpec:
    """Field of order q = p^e; errors when q is not a prime power."""
    for p in range(2, q + 1):
        if _is_prime(p) and q % p == 0:
            e = 0
            n = q
            while n % p == 0:
                n //= p
                e += 1
            if n != 1:
                raise FieldError(f"{q} is not a prime power")
            return field_new(p, e)
    raise FieldError(f"{q} is not a prime power")


@dataclass(frozen=True)
class FieldElem:
    """An element of F_{p^e}, wrapping its integer encoding."""

    spec: FieldSpec
    val: int

    @property
    def coeffs(self) -> tuple:
        return self.spec.decode(self.val)

    def _check(self, other: "FieldElem"):
        if self.spec != other.spec:
            raise FieldError("operands belong to different fields")

    def __add__(self, other):
        self._check(other)
        return FieldElem(self.spec, self.spec.add(self.val, other.val))

    def __sub__(self, other):
        self._check(other)
        return FieldElem(self.spec, self.spec.sub(self.val, other.val))

    def __neg__(self):
        return FieldElem(self.spec, self.spec.neg(self.val))

    def __mul__(self, other):
        self._check(other)
        return FieldElem(self.spec, self.spec.mul(self.val, other.val))

    def inv(self):
        return FieldElem(self.spec, self.spec.inv(self.val))

    def __pow__(self, n: int):
        return FieldElem(self.spec, self.spec.pow(self.val, n))

    def __bool__(self):
        return self.val != 0

    def digits(self) -> str:
        return self.spec.digits(self.val)

    def __repr__(self):
        return f"FieldElem({self.digits()})"


def elem(spec: FieldSpec, coeffs) -> FieldElem:
    """Element from coefficients (constant first) or from an integer residue when e=1."""
    if isinstance(coeffs, int):
        coeffs = (coeffs % spec.p,) + (0,) * (spec.e - 1)
    return FieldElem(spec, spec.encode(coeffs))


def elements(spec: FieldSpec):
    """All p^e elements, lexicographic on coefficient tuples."""
    return [FieldElem(spec, v) for v in spec.encodings_lex()]


def _modp_solve_matrix(mat, p: int):
    """Invert a square matrix over F_p; returns the inverse (list of rows)."""
    n = len(mat)
    aug = [list(row) + [1 if i == j else 0 for j in range(n)] for i, row in enumerate(mat)]
    r = 0
    for col in range(n):
        piv = next((i for i in range(r, n) if aug[i][col] % p), None)
        if piv is None:
            raise FieldError("singular matrix in embedding setup")
        aug[r], aug[piv] = aug[piv], aug[r]
        ilead = pow(aug[r][col], p - 2, p) if p > 2 else aug[r][col]
        aug[r] = [(x * ilead) % p for x in aug[r]]
        for i in range(n):
            if i != r and aug[i][col] % p:
                c = aug[i][col]
                aug[i] = [(x - c * y) % p for x, y in zip(aug[i], aug[r])]
        r += 1
    return [row[n:] for row in aug]


class Embedding:
    """Injective homomorphism F_{q} -> F_{q^m}, plus the vector-space view.

    The image field is an F_q-vector space of dimension m with fixed
    basis {1, beta, ..., beta^(m-1)}, where beta is the canonical
    generator (the residue of X) of the big field.
    """

    def __init__(self, sub: FieldSpec, sup: FieldSpec):
        if sub.p != sup.p:
            raise FieldError("incompatible characteristic")
        if sup.e % sub.e != 0:
            raise FieldError(f"{sub.e} does not divide {sup.e}: no embedding")
        self.sub = sub
        self.sup = sup
        self.m = sup.e // sub.e
        self._root = self._find_root()
        # images of the sub polynomial basis 1, x, x^2, ...
        self._sub_basis_img = [sup.pow(self._root, i) for i in range(sub.e)]
        beta = sup.p if sup.e > 1 else 1  # encoding of X (or of 1 in a prime field)
        self.beta = beta
        self.beta_pows = [sup.pow(beta, j) for j in range(self.m)]
        self._setup_coords()

    def _find_root(self) -> int:
        """Smallest root (by encoding) of the subfield modulus inside sup."""
        sub, sup = self.sub, self.sup
        mod_coeffs = sub.modulus
        for cand in range(sup.order):
            acc = 0
            power = 1
            for c in mod_coeffs:
                if c:
                    acc = sup.add(acc, sup.mul(c % sup.p, power))
                power = sup.mul(power, cand)
            if acc == 0:
                return cand
        raise FieldError("modulus has no root in the extension")  # unreachable

    def _setup_coords(self):
        sup, sub = self.sup, self.sub
        p = sup.p
        # basis of sup over F_p: {embed(x^i) * beta^j}; columns indexed (j, i)
        cols = []
        for j in range(self.m):
            for i in range(sub.e):
                v = sup.mul(self._sub_basis_img[i], self.beta_pows[j])
                cols.append(sup.decode(v))
        mat = [[cols[c][r] for c in range(sup.e)] for r in range(sup.e)]
        self._coord_inv = _modp_solve_matrix(mat, p)

    def map_enc(self, a: int) -> int:
        """Embed a subfield encoding into the big field."""
        cs = self.sub.decode(a)
        acc = 0
        for c, img in zip(cs, self._sub_basis_img):
            if c:
                acc = self.sup.add(acc, self.sup.mul(c, img))
        return acc

    def __call__(self, x: FieldElem) -> FieldElem:
        if x.spec != self.sub:
            raise FieldError("element not in the source field")
        return FieldElem(self.sup, self.map_enc(x.val))

    def to_vector_enc(self, a: int) -> tuple:
        """Big-field encoding -> tuple of m subfield encodings (beta-basis coords)."""
        target = self.sup.decode(a)
        p = self.sup.p
        flat = [sum(r * t for r, t in zip(row, target)) % p for row in self._coord_inv]
        out = []
        for j in range(self.m):
            out.append(self.sub.encode(tuple(flat[j * self.sub.e:(j + 1) * self.sub.e])))
        return tuple(out)

    def from_vector_enc(self, coords) -> int:
        acc = 0
        for c, bp in zip(coords, self.beta_pows):
            if c:
                acc = self.sup.add(acc, self.sup.mul(self.map_enc(c), bp))
        return acc

    def to_vector(self, x: FieldElem):
        return tuple(FieldElem(self.sub, c) for c in self.to_vector_enc(x.val))

    def from_vector(self, coords) -> FieldElem:
        return FieldElem(self.sup, self.from_vector_enc(tuple(c.val for c in coords)))


@lru_cache(maxsize=None)
def embed(sub: FieldSpec, sup: FieldSpec) -> Embedding:
    return Embedding(sub, sup)
