"""Exact-cover search: verdicts, determinism, limits, fixtures, scans."""

import pytest

from frobtile.codec import encode
from frobtile.errors import CapExceededError, PreconditionError, SearchLimitError
from frobtile.model import BoxShape, Brick, verify_full
from frobtile.oracle import (
    BUILTIN_FIXTURES,
    SearchConfig,
    builtin_fixture,
    exact_cover_search,
    regenerate_fixtures,
    threshold_scan,
)


def squares(*sides):
    return [Brick((s, s)) for s in sides]


def test_grid_case():
    r = exact_cover_search(BoxShape((4, 4)), squares(2))
    assert r.status == "found"
    assert len(r.tiling.placements) == 4
    assert verify_full(r.tiling).valid


def test_small_infeasible_square():
    r = exact_cover_search(BoxShape((7, 7)), squares(2, 3, 5))
    assert r.status == "infeasible"


def test_found_13_and_17():
    r13 = exact_cover_search(BoxShape((13, 13)), squares(2, 3, 5))
    assert r13.status == "found"
    assert verify_full(r13.tiling).valid
    r17 = exact_cover_search(BoxShape((17, 17)), squares(2, 3, 7))
    assert r17.status == "found"
    assert verify_full(r17.tiling).valid


def test_infeasible_11_with_237():
    r = exact_cover_search(BoxShape((11, 11)), squares(2, 3, 7))
    assert r.status == "infeasible"


def test_volume_precheck_rejects_without_search():
    r = exact_cover_search(BoxShape((3, 3)), squares(2))
    assert r.status == "infeasible"
    assert r.nodes == 0


def test_rotation_policy_changes_verdict():
    box = BoxShape((3, 2))
    brick = [Brick((2, 3))]
    fixed = exact_cover_search(box, brick, SearchConfig(rotation_policy="fixed"))
    assert fixed.status == "infeasible"
    free = exact_cover_search(box, brick)
    assert free.status == "found"
    assert free.tiling.placements[0].orientation == (1, 0)


def test_sequential_determinism():
    cfg = SearchConfig()
    a = exact_cover_search(BoxShape((13, 13)), squares(2, 3, 5), cfg)
    b = exact_cover_search(BoxShape((13, 13)), squares(2, 3, 5), cfg)
    assert encode(a.tiling) == encode(b.tiling)


def test_declared_brick_order_steers_the_solution():
    asc = exact_cover_search(BoxShape((6, 6)), squares(2, 3))
    desc = exact_cover_search(BoxShape((6, 6)), squares(3, 2))
    assert asc.status == desc.status == "found"
    first_asc = asc.tiling.bricks[asc.tiling.placements[0].brick_index]
    first_desc = desc.tiling.bricks[desc.tiling.placements[0].brick_index]
    assert first_asc.sides == (2, 2)
    assert first_desc.sides == (3, 3)


def test_node_limit_exhausts():
    r = exact_cover_search(
        BoxShape((13, 13)), squares(2, 3, 5), SearchConfig(node_limit=5)
    )
    assert r.status == "exhausted"
    assert r.reason == "node_limit"


def test_cell_cap():
    with pytest.raises(CapExceededError):
        exact_cover_search(BoxShape((70, 70)), squares(2))
    with pytest.raises(CapExceededError):
        threshold_scan(squares(2, 3), 65)


def test_parallel_matches_sequential():
    cfg = SearchConfig(parallel=True)
    par = exact_cover_search(BoxShape((13, 13)), squares(2, 3, 5), cfg)
    seq = exact_cover_search(BoxShape((13, 13)), squares(2, 3, 5))
    assert par.status == "found"
    assert encode(par.tiling) == encode(seq.tiling)
    bad = exact_cover_search(BoxShape((7, 7)), squares(2, 3, 5), cfg)
    assert bad.status == "infeasible"


def test_threshold_scans():
    assert threshold_scan(squares(2, 3, 5), 30) == [1, 7]
    assert threshold_scan(squares(2, 3, 7), 30) == [1, 5, 11]
    assert threshold_scan(squares(2, 3), 20) == [1, 5, 7, 11, 13, 17, 19]


def test_threshold_scan_validates():
    with pytest.raises(PreconditionError):
        threshold_scan([Brick((2, 3))], 10)
    with pytest.raises(PreconditionError):
        threshold_scan(squares(2), 0)


def test_search_config_validates():
    with pytest.raises(PreconditionError):
        SearchConfig(node_limit=0)
    with pytest.raises(PreconditionError):
        SearchConfig(rotation_policy="mirror")


def test_builtin_fixtures_match_regeneration(tmp_path):
    paths = regenerate_fixtures(tmp_path)
    assert len(paths) == len(BUILTIN_FIXTURES)
    for name in BUILTIN_FIXTURES:
        committed = builtin_fixture(name)
        assert verify_full(committed).valid
        regen = (tmp_path / f"{name}.json").read_text()
        assert regen == encode(committed)


def test_unknown_fixture_name():
    with pytest.raises(PreconditionError):
        builtin_fixture("square99-000")
