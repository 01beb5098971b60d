"""Bit-exact text format for flat families.

Layout (LF line endings, UTF-8):

    affgeo v1
    field p=<p> e=<e> modulus=<digits>
    space kind=<affine|projective> rank=<n>
    block
    rep <coords>          (affine blocks only)
    dir <coords>          (one per basis row)
    ...

Coordinates are space-separated element digit strings: e base-p digits,
constant coefficient first (comma-joined digits when p > 10).  Blocks
are sorted by canonical form, so parse(render(x)) == x and files diff
cleanly.
"""

from __future__ import annotations

from .design import FlatFamily, ClassicalDesign
from .flatspace import (AffineFlat, GeometrySpec, LinearSubspace)
from .galois import FieldError, field_new

MAGIC = "affgeo v1"


class ParseError(ValueError):
    pass


def _render_vec(K, v) -> str:
    return " ".join(K.digits(c) for c in v)


def _parse_vec(K, tokens) -> tuple:
    return tuple(K.parse_digits(tok) for tok in tokens)


def render(fam: FlatFamily) -> str:
    g = fam.geometry
    K = g.field
    # modulus has e+1 coefficients; same digit convention as elements
    if K.p <= 10:
        mod = "".join(str(c) for c in K.modulus)
    else:
        mod = ",".join(str(c) for c in K.modulus)
    lines = [MAGIC,
             f"field p={K.p} e={K.e} modulus={mod}",
             f"space kind={g.kind} rank={g.rank}"]
    for b in sorted(fam.blocks, key=lambda x: x.sort_key()):
        lines.append("block")
        if g.kind == "affine":
            lines.append("rep " + _render_vec(K, b.rep))
            rows = b.dir.rows
        else:
            rows = b.rows
        for row in rows:
            lines.append("dir " + _render_vec(K, row))
    return "\n".join(lines) + "\n"


def parse(text: str) -> FlatFamily:
    lines = [ln.rstrip("\n") for ln in text.splitlines()]
    lines = [ln for ln in lines if ln.strip()]
    if not lines or lines[0] != MAGIC:
        raise ParseError(f"missing header {MAGIC!r}")
    try:
        fields = dict(tok.split("=", 1) for tok in lines[1].split()[1:])
        p, e = int(fields["p"]), int(fields["e"])
        mod = fields["modulus"]
        space = dict(tok.split("=", 1) for tok in lines[2].split()[1:])
        kind, rank = space["kind"], int(space["rank"])
    except (KeyError, ValueError, IndexError) as exc:
        raise ParseError(f"malformed header: {exc}") from exc
    try:
        K = field_new(p, e)
    except FieldError as exc:
        raise ParseError(str(exc)) from exc
    if p <= 10:
        file_mod = "".join(str(c) for c in K.modulus)
    else:
        file_mod = ",".join(str(c) for c in K.modulus)
    if mod != file_mod:
        raise ParseError(f"modulus {mod!r} does not match the built-in "
                         f"modulus for ({p},{e})")
    g = GeometrySpec(kind, K, rank)
    d = g.ambient_dim

    blocks = []
    rep = None
    rows = []
    in_block = False

    def flush():
        if not in_block:
            return
        try:
            if kind == "affine":
                if rep is None:
                    raise ParseError("affine block without rep line")
                sub = LinearSubspace.from_rows(K, d, rows)
                blocks.append(AffineFlat.coset(rep, sub))
            else:
                blocks.append(LinearSubspace.from_rows(K, d, rows))
        except ParseError:
            raise
        except Exception as exc:
            raise ParseError(f"bad block: {exc}") from exc

    for ln in lines[3:]:
        parts = ln.split()
        if parts[0] == "block":
            flush()
            in_block, rep, rows = True, None, []
        elif parts[0] == "rep":
            if not in_block or kind != "affine":
                raise ParseError("unexpected rep line")
            rep = _parse_vec(K, parts[1:])
            if len(rep) != d:
                raise ParseError(f"rep has {len(rep)} coordinates, expected {d}")
        elif parts[0] == "dir":
            if not in_block:
                raise ParseError("dir line outside a block")
            row = _parse_vec(K, parts[1:])
            if len(row) != d:
                raise ParseError(f"dir has {len(row)} coordinates, expected {d}")
            rows.append(row)
        else:
            raise ParseError(f"unknown record {parts[0]!r}")
    flush()
    try:
        return FlatFamily(g, tuple(blocks))
    except Exception as exc:
        raise ParseError(str(exc)) from exc


def render_classical(design: ClassicalDesign) -> str:
    lines = [f"{design.point_count} {len(design.blocks)} {design.block_size}"]
    for b in sorted(tuple(sorted(blk)) for blk in design.blocks):
        lines.append(" ".join(str(i) for i in b))
    return "\n".join(lines) + "\n"


def parse_classical(text: str) -> ClassicalDesign:
    lines = [ln for ln in text.splitlines() if ln.strip()]
    if not lines:
        raise ParseError("empty classical design file")
    try:
        v, b, k = (int(x) for x in lines[0].split())
        blocks = tuple(frozenset(int(x) for x in ln.split()) for ln in lines[1:])
    except ValueError as exc:
        raise ParseError(f"malformed classical design: {exc}") from exc
    if len(blocks) != b or any(len(blk) != k for blk in blocks):
        raise ParseError("classical design header disagrees with body")
    return ClassicalDesign(v, blocks)
