"""Tests for ASCII and SVG rendering."""

import pytest

from frobtile.errors import DimensionUnsupportedError, PreconditionError
from frobtile.model import BoxShape, Brick, Placement, Tiling, grid_fill
from frobtile.oracle import builtin_fixture
from frobtile.render import RenderOptions, render_ascii, render_svg


def reconstruct_partition(text):
    """Map each letter-labeled connected component back to its cell set."""
    grid = text.split("\n")
    rows, cols = len(grid), len(grid[0])
    seen = set()
    components = []
    for r in range(rows):
        for c in range(cols):
            if (r, c) in seen or grid[r][c] == ".":
                continue
            symbol = grid[r][c]
            stack, cells = [(r, c)], set()
            seen.add((r, c))
            while stack:
                rr, cc = stack.pop()
                cells.add((rr, cc))
                for nr, nc in ((rr - 1, cc), (rr + 1, cc), (rr, cc - 1), (rr, cc + 1)):
                    if 0 <= nr < rows and 0 <= nc < cols and (nr, nc) not in seen:
                        if grid[nr][nc] == symbol:
                            seen.add((nr, nc))
                            stack.append((nr, nc))
            components.append(frozenset(cells))
    return set(components)


def placement_cells(t):
    out = set()
    for p in t.placements:
        e0, e1 = p.oriented_sides(t.bricks[p.brick_index])
        r0, c0 = p.origin
        out.add(frozenset((r, c) for r in range(r0, r0 + e0) for c in range(c0, c0 + e1)))
    return out


class TestAscii:
    def test_four_blocks(self):
        text = render_ascii(grid_fill(BoxShape((4, 4)), Brick((2, 2))))
        lines = text.split("\n")
        assert len(lines) == 4 and all(len(line) == 4 for line in lines)
        assert len({ch for line in lines for ch in line}) == 4
        assert lines[0][0] == lines[0][1] == lines[1][0] == lines[1][1]

    def test_single_brick_uniform(self):
        text = render_ascii(grid_fill(BoxShape((2, 3)), Brick((2, 3))))
        assert text == "AAA\nAAA"

    def test_rejects_3d(self):
        t = grid_fill(BoxShape((2, 2, 2)), Brick((2, 2, 2)))
        with pytest.raises(DimensionUnsupportedError):
            render_ascii(t)

    def test_rejects_oversized(self):
        t = grid_fill(BoxShape((202, 2)), Brick((2, 2)))
        with pytest.raises(DimensionUnsupportedError, match="202"):
            render_ascii(t)

    def test_uncovered_cells_are_dots(self):
        t = Tiling(
            BoxShape((4, 4)),
            (Brick((2, 2)),),
            (Placement(0, (0, 1), (0, 0)),),
        )
        text = render_ascii(t)
        assert text.count(".") == 12 and text.count("A") == 4

    def test_partition_roundtrip_fixture(self):
        t = builtin_fixture("square13-235")
        text = render_ascii(t)
        assert reconstruct_partition(text) == placement_cells(t)

    def test_partition_roundtrip_many_placements(self):
        # 225 placements exceed the alphabet; neighbors must still differ
        t = grid_fill(BoxShape((30, 30)), Brick((2, 2)))
        text = render_ascii(t)
        assert reconstruct_partition(text) == placement_cells(t)

    def test_deterministic(self):
        t = builtin_fixture("square17-237")
        assert render_ascii(t) == render_ascii(t)


class TestSvg:
    def test_fixture_canvas_and_count(self):
        t = builtin_fixture("square13-235")
        doc = render_svg(t, RenderOptions(cell_size=10))
        assert 'width="130" height="130"' in doc
        assert doc.count("<rect") == len(t.placements)

    def test_empty_tiling_canvas_only(self):
        t = Tiling(BoxShape((1, 1)), (Brick((1, 1)),), ())
        doc = render_svg(t)
        assert doc.count("<rect") == 0 and doc.startswith("<svg")

    def test_grid_count(self):
        doc = render_svg(grid_fill(BoxShape((6, 9)), Brick((3, 3))))
        assert doc.count("<rect") == 6

    def test_color_by_brick_index(self):
        t = Tiling(
            BoxShape((2, 5)),
            (Brick((2, 2)), Brick((2, 3))),
            (Placement(0, (0, 1), (0, 0)), Placement(1, (0, 1), (0, 2))),
        )
        opts = RenderOptions(palette=("#aaa", "#bbb"))
        doc = render_svg(t, opts)
        assert 'fill="#aaa"' in doc and 'fill="#bbb"' in doc

    def test_rejects_3d(self):
        t = grid_fill(BoxShape((2, 2, 2)), Brick((2, 2, 2)))
        with pytest.raises(DimensionUnsupportedError):
            render_svg(t)

    def test_options_validated(self):
        with pytest.raises(PreconditionError):
            RenderOptions(cell_size=0)
        with pytest.raises(PreconditionError):
            RenderOptions(format="png")
        with pytest.raises(PreconditionError):
            RenderOptions(palette=())
