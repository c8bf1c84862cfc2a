"""Boxes, bricks, placements, tilings; exact verification; combinators.

A tiling is a box, a list of brick types, and a list of axis-aligned
placements.  For axis-aligned placements, exact cover of the box is
equivalent to the conjunction of three checks:

    (i)   every placement fits inside the box,
    (ii)  placements are pairwise interior-disjoint, and
    (iii) total placement volume equals box volume,

which is what verify_full tests (pairwise open-interval overlap on every
axis, O(m^2 * n) with numpy chunking).  verify_sampled swaps (ii) for a
randomized unit-cell coverage check so that million-placement tilings
remain verifiable: it draws seeded random cells and asserts each is
covered exactly once, locating candidate placements through a per-axis
bucket grid.

Construction-time validation is structural only (dimensions, index
ranges, permutation validity); geometric soundness is always the
verifier's job, so malformed geometry can be loaded and diagnosed.

The combinators mirror how larger tilings are assembled from smaller
ones: grid_fill (divisible sides), extrude (lift an (n-1)-dim tiling to
n dimensions by stacking copies of each brick up to a common height),
and stack (concatenate tilings along one axis).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable, Optional, Sequence

import numpy as np

from .errors import (
    DimensionMismatchError,
    DivisibilityError,
    PreconditionError,
    ShapeMismatchError,
)

ROTATION_FIXED = "fixed"
ROTATION_AXIS_PERMUTATIONS = "axis-permutations"
_ROTATION_POLICIES = (ROTATION_FIXED, ROTATION_AXIS_PERMUTATIONS)

_IDENTITY_CACHE: dict[int, tuple[int, ...]] = {}


def identity_orientation(n: int) -> tuple[int, ...]:
    perm = _IDENTITY_CACHE.get(n)
    if perm is None:
        perm = _IDENTITY_CACHE[n] = tuple(range(n))
    return perm


@dataclass(frozen=True)
class BoxShape:
    sides: tuple[int, ...]

    def __init__(self, sides: Iterable[int]):
        s = tuple(int(v) for v in sides)
        if not s:
            raise PreconditionError("box must have at least one axis")
        if any(v < 1 for v in s):
            raise PreconditionError(f"box sides must be >= 1, got {s}")
        object.__setattr__(self, "sides", s)

    @property
    def dimension(self) -> int:
        return len(self.sides)

    @property
    def volume(self) -> int:
        return math.prod(self.sides)


@dataclass(frozen=True)
class Brick:
    sides: tuple[int, ...]

    def __init__(self, sides: Iterable[int]):
        s = tuple(int(v) for v in sides)
        if not s:
            raise PreconditionError("brick must have at least one axis")
        if any(v < 1 for v in s):
            raise PreconditionError(f"brick sides must be >= 1, got {s}")
        object.__setattr__(self, "sides", s)

    @property
    def dimension(self) -> int:
        return len(self.sides)

    @property
    def volume(self) -> int:
        return math.prod(self.sides)


@dataclass(frozen=True, slots=True)
class Placement:
    """One brick copy: which brick, how its axes map, where it sits.

    oriented side along box axis j = brick.sides[orientation[j]].
    """

    brick_index: int
    orientation: tuple[int, ...]
    origin: tuple[int, ...]

    def oriented_sides(self, brick: Brick) -> tuple[int, ...]:
        return tuple(brick.sides[a] for a in self.orientation)


@dataclass(frozen=True)
class Tiling:
    box: BoxShape
    bricks: tuple[Brick, ...]
    placements: tuple[Placement, ...]
    rotation_policy: str = ROTATION_FIXED

    def __init__(
        self,
        box: BoxShape,
        bricks: Iterable[Brick],
        placements: Iterable[Placement],
        rotation_policy: str = ROTATION_FIXED,
    ):
        bricks = tuple(bricks)
        placements = tuple(placements)
        if rotation_policy not in _ROTATION_POLICIES:
            raise PreconditionError(f"unknown rotation policy {rotation_policy!r}")
        n = box.dimension
        for b in bricks:
            if b.dimension != n:
                raise DimensionMismatchError(
                    f"brick {b.sides} has dimension {b.dimension}, box has {n}"
                )
        ident = identity_orientation(n)
        for i, p in enumerate(placements):
            if not 0 <= p.brick_index < len(bricks):
                raise PreconditionError(f"placement {i}: brick index {p.brick_index} out of range")
            if len(p.origin) != n or any(v < 0 for v in p.origin):
                raise PreconditionError(f"placement {i}: bad origin {p.origin}")
            if sorted(p.orientation) != list(range(n)):
                raise PreconditionError(f"placement {i}: orientation {p.orientation} is not a permutation")
            if rotation_policy == ROTATION_FIXED and p.orientation != ident:
                raise PreconditionError(
                    f"placement {i}: non-identity orientation under the fixed policy"
                )
        object.__setattr__(self, "box", box)
        object.__setattr__(self, "bricks", bricks)
        object.__setattr__(self, "placements", placements)
        object.__setattr__(self, "rotation_policy", rotation_policy)

    @property
    def dimension(self) -> int:
        return self.box.dimension

    def placement_volume(self) -> int:
        return sum(self.bricks[p.brick_index].volume for p in self.placements)


@dataclass(frozen=True)
class VerifyReport:
    valid: bool
    mode: str
    reason: Optional[str] = None
    placement_index: Optional[int] = None
    overlap_pair: Optional[tuple[int, int]] = None
    expected_volume: Optional[int] = None
    actual_volume: Optional[int] = None
    samples: Optional[int] = None

    def __str__(self) -> str:
        if self.valid:
            extra = f", samples={self.samples}" if self.samples is not None else ""
            return f"Valid({self.mode}{extra})"
        parts = [self.reason or "invalid"]
        if self.placement_index is not None:
            parts.append(f"placement={self.placement_index}")
        if self.overlap_pair is not None:
            parts.append(f"pair={self.overlap_pair}")
        if self.expected_volume is not None:
            parts.append(f"expected_volume={self.expected_volume}")
        if self.actual_volume is not None:
            parts.append(f"actual_volume={self.actual_volume}")
        return f"Invalid({', '.join(parts)})"


# ---------------------------------------------------------------------------
# verification
# ---------------------------------------------------------------------------

def _bounds_arrays(t: Tiling) -> tuple[np.ndarray, np.ndarray]:
    """(m, n) int64 arrays of placement lower and upper corners."""
    m = len(t.placements)
    n = t.dimension
    lo = np.empty((m, n), dtype=np.int64)
    hi = np.empty((m, n), dtype=np.int64)
    side_table = [b.sides for b in t.bricks]
    for i, p in enumerate(t.placements):
        sides = side_table[p.brick_index]
        o = p.origin
        lo[i] = o
        hi[i] = tuple(o[j] + sides[a] for j, a in enumerate(p.orientation))
    return lo, hi


def _check_fits(t: Tiling, lo: np.ndarray, hi: np.ndarray, mode: str) -> Optional[VerifyReport]:
    if len(t.placements) == 0:
        return None
    box = np.asarray(t.box.sides, dtype=np.int64)
    bad = (lo < 0).any(axis=1) | (hi > box).any(axis=1)
    if bad.any():
        idx = int(np.argmax(bad))
        return VerifyReport(
            valid=False, mode=mode, reason="placement_out_of_bounds", placement_index=idx
        )
    return None


def _check_volume(t: Tiling, mode: str) -> Optional[VerifyReport]:
    expected = t.box.volume
    actual = t.placement_volume()
    if actual != expected:
        return VerifyReport(
            valid=False,
            mode=mode,
            reason="volume_mismatch",
            expected_volume=expected,
            actual_volume=actual,
        )
    return None


def verify_full(t: Tiling, chunk_rows: int = 512) -> VerifyReport:
    """Exact exact-cover check: fit, pairwise disjointness, volume.

    Reports the first violation in placement-list order: the first
    out-of-bounds placement, else the lexicographically first overlapping
    pair (i, j), else the volume mismatch.
    """
    lo, hi = _bounds_arrays(t)
    report = _check_fits(t, lo, hi, "full")
    if report:
        return report
    m = len(t.placements)
    n = t.dimension
    col_idx = np.arange(m)
    for start in range(0, m, chunk_rows):
        stop = min(start + chunk_rows, m)
        # open boxes [lo, hi) overlap iff they overlap on every axis
        over = np.ones((stop - start, m), dtype=bool)
        for k in range(n):
            a_lo = lo[start:stop, k, None]
            a_hi = hi[start:stop, k, None]
            over &= (a_lo < hi[None, :, k]) & (lo[None, :, k] < a_hi)
            if not over.any():
                break
        # keep only j > i
        over &= col_idx[None, :] > (np.arange(start, stop)[:, None])
        if over.any():
            i_local, j = np.argwhere(over)[0]
            return VerifyReport(
                valid=False,
                mode="full",
                reason="overlap",
                overlap_pair=(int(start + i_local), int(j)),
            )
    report = _check_volume(t, "full")
    if report:
        return report
    return VerifyReport(valid=True, mode="full")


def verify_sampled(t: Tiling, samples: int, seed: int) -> VerifyReport:
    """Fit and volume exactly; disjoint coverage probabilistically.

    Draws `samples` unit cells uniformly (deterministic in seed) and
    requires each to be covered by exactly one placement.  Candidate
    placements per cell come from a bucket grid over the first two axes
    with bucket width = the largest oriented side, so each placement
    lands in one bucket and each cell probes at most four.
    """
    if samples < 1:
        raise PreconditionError(f"samples must be >= 1, got {samples}")
    lo, hi = _bounds_arrays(t)
    report = _check_fits(t, lo, hi, "sampled")
    if report:
        return report
    report = _check_volume(t, "sampled")
    if report:
        return report
    rng = np.random.default_rng(seed)
    pts = rng.integers(0, np.asarray(t.box.sides, dtype=np.int64), size=(samples, t.dimension))

    grid_axes = list(range(min(2, t.dimension)))
    widths = [max(1, int((hi[:, k] - lo[:, k]).max())) for k in grid_axes]
    nb = [int(t.box.sides[k] // widths[i]) + 1 for i, k in enumerate(grid_axes)]

    def bucket_key(coords: np.ndarray) -> np.ndarray:
        key = np.zeros(len(coords), dtype=np.int64)
        for i, k in enumerate(grid_axes):
            key = key * nb[i] + coords[:, k] // widths[i]
        return key

    place_key = bucket_key(lo)
    order = np.argsort(place_key, kind="stable")
    sorted_keys = place_key[order]
    lo_sorted = lo[order]
    hi_sorted = hi[order]

    counts = np.zeros(samples, dtype=np.int64)
    from itertools import product as _product

    # a cell can only be covered by a placement whose bucket, along each
    # grid axis, is the cell's own or the one just below it
    for delta in _product((0, -1), repeat=len(grid_axes)):
        b = np.zeros(samples, dtype=np.int64)
        skip = np.zeros(samples, dtype=bool)
        for i, k in enumerate(grid_axes):
            bk = pts[:, k] // widths[i] + delta[i]
            skip |= bk < 0
            b = b * nb[i] + bk
        b[skip] = -1
        starts = np.searchsorted(sorted_keys, b, side="left")
        stops = np.searchsorted(sorted_keys, b, side="right")
        # group samples by bucket to vectorize the inner containment test
        sample_order = np.argsort(b, kind="stable")
        s = 0
        while s < samples:
            key = b[sample_order[s]]
            e = s
            while e < samples and b[sample_order[e]] == key:
                e += 1
            if key >= 0:
                sel = sample_order[s:e]
                p0, p1 = starts[sel[0]], stops[sel[0]]
                if p1 > p0:
                    cells = pts[sel]  # (S, n)
                    inside = np.ones((len(sel), p1 - p0), dtype=bool)
                    for k in range(t.dimension):
                        inside &= (lo_sorted[None, p0:p1, k] <= cells[:, k, None]) & (
                            cells[:, k, None] < hi_sorted[None, p0:p1, k]
                        )
                    counts[sel] += inside.sum(axis=1)
            s = e
    if (counts != 1).any():
        idx = int(np.argmax(counts != 1))
        return VerifyReport(
            valid=False,
            mode="sampled",
            reason="sample_coverage",
            placement_index=None,
            expected_volume=1,
            actual_volume=int(counts[idx]),
        )
    return VerifyReport(valid=True, mode="sampled", samples=samples)


# ---------------------------------------------------------------------------
# combinators
# ---------------------------------------------------------------------------

def _sorted_placements(placements: Iterable[Placement]) -> tuple[Placement, ...]:
    return tuple(sorted(placements, key=lambda p: p.origin))


def remap_bricks(t: Tiling, bricks: Sequence[Brick], index_map: Sequence[int]) -> Tiling:
    """Re-point placements at a different brick list; geometry unchanged.

    index_map[i] is the new index of the tiling's brick i; the mapped
    bricks must have identical sides.
    """
    bricks = tuple(bricks)
    for i, old in enumerate(t.bricks):
        if bricks[index_map[i]].sides != old.sides:
            raise ShapeMismatchError(
                f"brick {i} maps to {bricks[index_map[i]].sides}, expected {old.sides}"
            )
    placements = tuple(
        Placement(index_map[p.brick_index], p.orientation, p.origin) for p in t.placements
    )
    return Tiling(t.box, bricks, placements, rotation_policy=t.rotation_policy)


def grid_fill(box: BoxShape, brick: Brick) -> Tiling:
    """Tile a box whose every side is divisible by the brick's."""
    if brick.dimension != box.dimension:
        raise DimensionMismatchError(
            f"brick dimension {brick.dimension} != box dimension {box.dimension}"
        )
    for k, (a, x) in enumerate(zip(box.sides, brick.sides)):
        if a % x != 0:
            raise DivisibilityError(f"axis {k}: brick side {x} does not divide box side {a}")
    n = box.dimension
    ident = identity_orientation(n)
    from itertools import product as _product

    ranges = [range(0, a, x) for a, x in zip(box.sides, brick.sides)]
    placements = tuple(
        Placement(brick_index=0, orientation=ident, origin=origin)
        for origin in _product(*ranges)
    )
    return Tiling(box=box, bricks=(brick,), placements=placements)


def extrude(t: Tiling, full_bricks: Sequence[Brick], height_product: int) -> Tiling:
    """Lift an (n-1)-dim tiling to n dimensions at a common height.

    Each input brick must be the last-axis projection of the
    corresponding full brick; every placement becomes a stack of
    height_product / (full brick's last side) copies along the new axis.
    """
    full_bricks = tuple(full_bricks)
    if len(full_bricks) != len(t.bricks):
        raise DimensionMismatchError(
            f"{len(t.bricks)} projected bricks but {len(full_bricks)} full bricks"
        )
    n = t.dimension + 1
    for i, (proj, full) in enumerate(zip(t.bricks, full_bricks)):
        if full.dimension != n:
            raise DimensionMismatchError(
                f"full brick {i} has dimension {full.dimension}, expected {n}"
            )
        if full.sides[:-1] != proj.sides:
            raise DimensionMismatchError(
                f"brick {i}: {proj.sides} is not the projection of {full.sides}"
            )
    if t.rotation_policy != ROTATION_FIXED:
        raise PreconditionError("extrude requires a fixed-orientation tiling")
    if height_product < 1:
        raise PreconditionError(f"height must be >= 1, got {height_product}")
    for i, full in enumerate(full_bricks):
        if height_product % full.sides[-1] != 0:
            raise DivisibilityError(
                f"brick {i}: last side {full.sides[-1]} does not divide height {height_product}"
            )
    ident = identity_orientation(n)
    placements = []
    for p in t.placements:
        h = full_bricks[p.brick_index].sides[-1]
        for c in range(height_product // h):
            placements.append(
                Placement(
                    brick_index=p.brick_index,
                    orientation=ident,
                    origin=p.origin + (c * h,),
                )
            )
    return Tiling(
        box=BoxShape(t.box.sides + (height_product,)),
        bricks=full_bricks,
        placements=_sorted_placements(placements),
    )


def stack(parts: Sequence[Tiling], axis: int) -> Tiling:
    """Concatenate tilings along one axis; all other sides must agree."""
    parts = list(parts)
    if not parts:
        raise ShapeMismatchError("cannot stack an empty list of tilings")
    first = parts[0]
    n = first.dimension
    if not 0 <= axis < n:
        raise PreconditionError(f"axis {axis} out of range for dimension {n}")
    ref_other = tuple(s for k, s in enumerate(first.box.sides) if k != axis)
    ref_bricks = tuple(b.sides for b in first.bricks)
    for t in parts[1:]:
        if t.dimension != n:
            raise ShapeMismatchError("stacked tilings must share a dimension")
        other = tuple(s for k, s in enumerate(t.box.sides) if k != axis)
        if other != ref_other:
            raise ShapeMismatchError(
                f"sides off the stacking axis differ: {other} vs {ref_other}"
            )
        if tuple(b.sides for b in t.bricks) != ref_bricks:
            raise ShapeMismatchError("stacked tilings must share the same brick list")
        if t.rotation_policy != first.rotation_policy:
            raise ShapeMismatchError("stacked tilings must share a rotation policy")
    placements = []
    offset = 0
    for t in parts:
        for p in t.placements:
            origin = list(p.origin)
            origin[axis] += offset
            placements.append(
                Placement(
                    brick_index=p.brick_index,
                    orientation=p.orientation,
                    origin=tuple(origin),
                )
            )
        offset += t.box.sides[axis]
    sides = list(first.box.sides)
    sides[axis] = offset
    return Tiling(
        box=BoxShape(sides),
        bricks=first.bricks,
        placements=_sorted_placements(placements),
        rotation_policy=first.rotation_policy,
    )
