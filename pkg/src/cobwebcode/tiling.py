"""Cobweb tiles and exact tilings of finite hyper-boxes.

A tile in a box of m dimensions picks, for each dimension s, a subset of
that dimension's coordinates of size sigma(s)_F for some permutation sigma
of 1..m; the tile is the Cartesian product of those subsets and so holds
m_F! points. A tiling is a partition of the whole box into such tiles.

The enumerator always covers the least uncovered point (in increasing
base-F order) next and branches over every tile through it, which yields
each tiling exactly once and in a fixed order.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterator, NamedTuple, Sequence

from .cobweb import HyperBox, check_permutation
from .errors import NonDivisible, SearchLimitExceeded, UnsupportedDimension
from .sequences import FSequence, f_factorial, parse_sequence

__all__ = [
    "DEFAULT_POINT_LIMIT",
    "Tile",
    "TileShape",
    "Tiling",
    "canonical_tiles",
    "verify_tiling",
    "enumerate_tilings",
    "count_tilings",
    "enumerate_box_tilings",
    "count_box_tilings",
    "tiles_per_tiling",
    "tile_labels",
    "render_text_grid",
    "render_tiling",
    "tiling_to_json",
    "tiling_from_json",
]

# exhaustive search explodes combinatorially well before 100 points
DEFAULT_POINT_LIMIT = 64


@dataclass(frozen=True)
class Tile:
    sigma: tuple[int, ...]
    subsets: tuple[tuple[int, ...], ...]

    @property
    def size(self) -> int:
        out = 1
        for a in self.subsets:
            out *= len(a)
        return out

    def points(self) -> Iterator[tuple[int, ...]]:
        for rev in itertools.product(*reversed(self.subsets)):
            yield rev[::-1]


class TileShape(NamedTuple):
    sigma: tuple[int, ...]
    sizes: tuple[int, ...]
    placeable: bool

    def anchored(self) -> Tile:
        """The tile built from the prefix subsets {0, ..., size-1}."""
        return Tile(self.sigma, tuple(tuple(range(n)) for n in self.sizes))


@dataclass(frozen=True)
class Tiling:
    box: HyperBox
    tiles: tuple[Tile, ...]


def canonical_tiles(F: FSequence, m: int, box: HyperBox | None = None) -> list[TileShape]:
    """One shape per permutation of 1..m, in lexicographic order of sigma.

    With ``box`` given, shapes needing more coordinates than an extent has
    are flagged unplaceable.
    """
    extents = box.extents if box is not None else None
    shapes = []
    for sigma in itertools.permutations(range(1, m + 1)):
        sizes = tuple(F[i] for i in sigma)
        ok = extents is None or all(n <= e for n, e in zip(sizes, extents))
        shapes.append(TileShape(sigma, sizes, ok))
    return shapes


def verify_tiling(t: Tiling) -> tuple[bool, str | None]:
    """Check tile shapes, pairwise disjointness and cover; report the first violation."""
    box = t.box
    ext = box.extents
    m = box.dims
    F = box.sequence
    tile_size = f_factorial(F, m)
    owner: dict[tuple[int, ...], int] = {}
    for i, tile in enumerate(t.tiles):
        try:
            sigma = check_permutation(tile.sigma, m)
        except ValueError:
            return False, f"tile {i}: sigma {tile.sigma} is not a permutation of 1..{m}"
        if len(tile.subsets) != m:
            return False, f"tile {i}: has {len(tile.subsets)} subsets for {m} dimensions"
        for s, (a, e) in enumerate(zip(tile.subsets, ext)):
            if len(set(a)) != len(a) or any(not 0 <= c < e for c in a):
                return False, f"tile {i}: subset {a} is not a set of coordinates in 0..{e - 1} (dimension {s})"
            if len(a) != F[sigma[s]]:
                return False, f"tile {i}: dimension {s} has {len(a)} coordinates, expected {F[sigma[s]]}"
        if tile.size != tile_size:
            return False, f"tile {i}: has {tile.size} points, expected {tile_size}"
        for p in tile.points():
            if p in owner:
                return False, f"tiles {owner[p]} and {i} overlap at {p}"
            owner[p] = i
    for p in box.points():
        if p not in owner:
            return False, f"point {p} is not covered"
    return True, None


# search core, on plain extents so that permuted boxes can be searched too


def _subset_choices(extent: int, size: int, intervals_only: bool):
    if intervals_only:
        return [tuple(range(a, a + size)) for a in range(extent - size + 1)]
    return list(itertools.combinations(range(extent), size))


@lru_cache(maxsize=64)
def _candidates(extents: tuple[int, ...], part_sizes: tuple[int, ...], intervals_only: bool):
    """All distinct tiles as (mask, sigma, subsets), plus, per point, the tiles through it."""
    m = len(extents)
    weights = [1]
    for e in extents:
        weights.append(weights[-1] * e)
    npoints = weights[-1]
    seen_sizes = set()
    tiles = []
    for sigma in itertools.permutations(range(1, m + 1)):
        sizes = tuple(part_sizes[i - 1] for i in sigma)
        # equal part sizes make several sigmas give the same point sets
        if sizes in seen_sizes or any(n > e for n, e in zip(sizes, extents)):
            continue
        seen_sizes.add(sizes)
        choices = [_subset_choices(e, n, intervals_only) for e, n in zip(extents, sizes)]
        for rev in itertools.product(*reversed(choices)):
            subsets = rev[::-1]
            mask = 0
            for prev in itertools.product(*reversed(subsets)):
                mask |= 1 << sum(c * w for c, w in zip(reversed(prev), weights))
            tiles.append((mask, sigma, subsets))
    through = [[] for _ in range(npoints)]
    for idx, (mask, _, _) in enumerate(tiles):
        for p in range(npoints):
            if mask >> p & 1:
                through[p].append(idx)
    return tiles, through, npoints


def _guard(npoints: int, limit: int) -> None:
    if npoints > limit:
        raise SearchLimitExceeded(
            f"box has {npoints} points, above the search limit {limit}; "
            "raise the limit only for small boxes, the search grows combinatorially"
        )


def enumerate_box_tilings(
    extents: Sequence[int],
    part_sizes: Sequence[int],
    *,
    limit: int = DEFAULT_POINT_LIMIT,
    intervals_only: bool = False,
) -> Iterator[list[tuple[tuple[int, ...], tuple[tuple[int, ...], ...]]]]:
    """Yield every tiling of a box with the given extents as a list of (sigma, subsets).

    ``part_sizes`` are 1_F, ..., m_F. The size check happens here, before
    the first tiling is requested.
    """
    extents, part_sizes, npoints, divisible = _prepare(extents, part_sizes, limit)
    if not divisible:
        return iter(())
    tiles, through, npoints = _candidates(extents, part_sizes, intervals_only)
    return _walk(tiles, through, (1 << npoints) - 1)


def _prepare(extents, part_sizes, limit):
    extents = tuple(extents)
    part_sizes = tuple(part_sizes)
    if len(part_sizes) != len(extents):
        raise ValueError("need one part size per dimension")
    npoints = 1
    for e in extents:
        npoints *= e
    _guard(npoints, limit)
    tile_size = 1
    for n in part_sizes:
        tile_size *= n
    return extents, part_sizes, npoints, npoints % tile_size == 0


def _walk(tiles, through, full):
    chosen: list[int] = []

    def walk(covered: int):
        if covered == full:
            yield [(tiles[i][1], tiles[i][2]) for i in chosen]
            return
        free = ~covered & full
        p = (free & -free).bit_length() - 1
        for idx in through[p]:
            mask = tiles[idx][0]
            if mask & covered:
                continue
            chosen.append(idx)
            yield from walk(covered | mask)
            chosen.pop()

    return walk(0)


def count_box_tilings(
    extents: Sequence[int],
    part_sizes: Sequence[int],
    *,
    limit: int = DEFAULT_POINT_LIMIT,
    intervals_only: bool = False,
) -> int:
    """Number of tilings, memoized on the covered set."""
    extents, part_sizes, npoints, divisible = _prepare(extents, part_sizes, limit)
    if not divisible:
        return 0
    tiles, through, npoints = _candidates(extents, part_sizes, intervals_only)
    full = (1 << npoints) - 1
    memo: dict[int, int] = {full: 1}

    def count(covered: int) -> int:
        hit = memo.get(covered)
        if hit is not None:
            return hit
        free = ~covered & full
        p = (free & -free).bit_length() - 1
        total = 0
        for idx in through[p]:
            mask = tiles[idx][0]
            if not mask & covered:
                total += count(covered | mask)
        memo[covered] = total
        return total

    return count(0)


def _part_sizes(box: HyperBox) -> tuple[int, ...]:
    return tuple(box.sequence[i] for i in range(1, box.dims + 1))


def enumerate_tilings(
    box: HyperBox, *, limit: int = DEFAULT_POINT_LIMIT, intervals_only: bool = False
) -> Iterator[Tiling]:
    raws = enumerate_box_tilings(box.extents, _part_sizes(box), limit=limit, intervals_only=intervals_only)
    return (Tiling(box, tuple(Tile(sigma, subsets) for sigma, subsets in raw)) for raw in raws)


def count_tilings(box: HyperBox, *, limit: int = DEFAULT_POINT_LIMIT, intervals_only: bool = False) -> int:
    return count_box_tilings(box.extents, _part_sizes(box), limit=limit, intervals_only=intervals_only)


def tiles_per_tiling(box: HyperBox) -> int:
    """|box| / m_F!, the number of tiles any tiling of the box must use."""
    tile_size = f_factorial(box.sequence, box.dims)
    q, r = divmod(box.size, tile_size)
    if r:
        raise NonDivisible(f"{box.size} points are not a multiple of the tile size {tile_size}")
    return q


def tile_labels(t: Tiling) -> dict[tuple[int, ...], int]:
    """Map every covered point to the index of its tile."""
    return {p: i for i, tile in enumerate(t.tiles) for p in tile.points()}


def render_text_grid(t: Tiling) -> str:
    """Rows are coordinates of dimension 0, columns those of dimension 1; cells hold tile indices."""
    ext = t.box.extents
    if len(ext) > 2:
        raise UnsupportedDimension(f"text grid needs at most 2 dimensions, box has {len(ext)}")
    rows, cols = (tuple(ext) + (1, 1))[:2]
    labels = tile_labels(t)
    width = len(str(max(len(t.tiles) - 1, 0)))
    lines = []
    for r in range(rows):
        cells = []
        for c in range(cols):
            p = (r, c)[: len(ext)]
            cells.append(str(labels[p]).rjust(width) if p in labels else ".".rjust(width))
        lines.append(" ".join(cells))
    return "\n".join(lines) + "\n"


def tiling_to_json(t: Tiling) -> dict:
    return {
        "box": t.box.descriptor(),
        "tiles": [{"sigma": list(tile.sigma), "subsets": [sorted(a) for a in tile.subsets]} for tile in t.tiles],
    }


def tiling_from_json(obj: dict, F: FSequence | None = None) -> Tiling:
    b = obj["box"]
    seq = F if F is not None else parse_sequence(b["sequence"])
    box = HyperBox(seq, b["origin"], b["end"])
    tiles = tuple(
        Tile(tuple(tile["sigma"]), tuple(tuple(sorted(a)) for a in tile["subsets"])) for tile in obj["tiles"]
    )
    return Tiling(box, tiles)


def render_tiling(t: Tiling, fmt: str = "text", path=None) -> str:
    """Render as a ``text`` grid (up to 2 dimensions) or an ``svg`` figure (up to 3).

    The document is returned and, when ``path`` is given, also written there.
    """
    if fmt == "text":
        doc = render_text_grid(t)
    elif fmt == "svg":
        from .plotting import tiling_svg

        doc = tiling_svg(t)
    else:
        raise ValueError(f"unknown render format {fmt!r}")
    if path is not None:
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(doc)
    return doc
