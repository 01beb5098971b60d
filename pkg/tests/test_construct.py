import pytest

from affgeo import (AffineFlat, ConstructError, LinearSubspace,
                    affine_poly_code, affine_steiner, desarguesian_spread,
                    field_new, is_skew, lin_meet, max_pairwise_meet_rank,
                    parallel_classes, through_zero, translate_closure,
                    verify_design)

F2 = field_new(2)


def test_spread_partitions_pg():
    fam = desarguesian_spread(4, 2, 2)  # 5 lines partitioning PG(3, 2)
    assert fam.geometry.kind == "projective" and fam.geometry.rank == 4
    assert len(fam) == 5
    assert all(b.dim == 2 for b in fam.blocks)
    seen = set()
    for b in fam.blocks:
        pts = {v for v in b.vectors() if any(v)}
        assert not (pts & seen)
        seen |= pts
    assert len(seen) == 15
    # pairwise trivial intersection
    assert max_pairwise_meet_rank(fam) == 0


def test_spread_counts():
    fam = desarguesian_spread(6, 3, 2)  # (2^6-1)/(2^3-1) = 9 blocks
    assert len(fam) == 9
    fam = desarguesian_spread(4, 2, 3)  # (81-1)/(9-1) = 10 blocks
    assert len(fam) == 10


def test_spread_requires_divisibility():
    with pytest.raises(ConstructError):
        desarguesian_spread(5, 2, 2)


def test_translate_closure_counts_and_roundtrip():
    spread = desarguesian_spread(4, 2, 2)
    closed = translate_closure(spread)
    # each rank-2 subspace contributes q^(n-k) distinct cosets
    assert len(closed) == 5 * 4
    assert closed.geometry.kind == "affine"
    back = through_zero(closed)
    assert back == spread.sorted()


def test_through_zero_picks_exactly_subspaces():
    spread = desarguesian_spread(6, 2, 2)
    closed = translate_closure(spread)
    zero = (0,) * 6
    expected = sum(1 for b in closed.blocks if b.contains_vector(zero))
    assert len(through_zero(closed)) == expected == len(spread)


def test_affine_steiner_degenerate_k1():
    fam = affine_steiner(1, 3, 2)  # blocks are all 2-point lines of AG(3, 2)
    assert fam.geometry.kind == "affine"
    assert len(fam) == 28
    res = verify_design(fam, 2)
    assert res.ok and res.lam == 1


def test_affine_steiner_s234():
    fam = affine_steiner(2, 2, 2)  # S(2, 4, 16) in AG(4, 2)
    assert len(fam) == 20
    res = verify_design(fam, 2)
    assert res.ok and res.lam == 1


def test_affine_steiner_f7():
    fam = affine_steiner(1, 2, 7)  # all lines of AG(2, 7): trivial spread
    res = verify_design(fam, 2)
    assert res.ok and res.lam == 1
    assert len(fam) == 56


def test_affine_steiner_parallelism():
    fam = affine_steiner(2, 2, 2)
    # translate closure keeps whole parallel classes: 5 directions, 4 cosets
    assert parallel_classes(fam) == 5
    assert not is_skew(fam)


def test_poly_code_block_count_and_shape():
    fam = affine_poly_code(2, 2, 2, 2)  # q=2, m=2, ell=2, t=2: 16 blocks
    assert len(fam) == 16
    assert fam.geometry.ambient_dim == 4
    assert all(b.rank == 3 for b in fam.blocks)  # graphs over a 2-dim domain
    assert max_pairwise_meet_rank(fam) <= 1


def test_poly_code_meet_bound_t2():
    fam = affine_poly_code(2, 3, 2, 2)  # 64 blocks in AG(5, 2)
    assert len(fam) == 64
    # graphs of distinct degree-(q^(t-2)) maps agree on < q^(t-1) points
    assert max_pairwise_meet_rank(fam) <= 1


def test_poly_code_custom_domain():
    rows = [(1, 0, 0), (0, 1, 0)]
    U = AffineFlat.coset((0, 0, 1), LinearSubspace.from_rows(F2, 3, rows))
    fam = affine_poly_code(2, 3, 2, 2, U=U)
    assert len(fam) == 64
    assert all(b.rank == 3 for b in fam.blocks)


def test_poly_code_param_validation():
    with pytest.raises(ConstructError):
        affine_poly_code(2, 3, 4, 2)  # ell > m
    with pytest.raises(ConstructError):
        affine_poly_code(2, 3, 1, 3)  # ell < t - 1
    with pytest.raises(ConstructError):
        affine_poly_code(2, 3, 2, 0)
