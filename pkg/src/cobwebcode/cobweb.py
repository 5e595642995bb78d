"""Cobweb posets as layered digraphs, their maximal-chain hyper-boxes, and orders on them."""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterator, NamedTuple, Sequence

from .errors import AmbientMismatch, InvalidPermutation, InvalidRange
from .sequences import FSequence, rising_factorial

__all__ = [
    "Vertex",
    "HasseDigraph",
    "HyperBox",
    "BoxInterval",
    "build_hasse",
    "layer_digraph",
    "poset_leq",
    "permuted_subposet",
    "enumerate_max_chains",
    "count_max_chains",
    "count_paths_dfs",
    "box_contains",
    "product_leq",
    "join",
    "meet",
    "strip",
    "pair_order",
    "check_permutation",
]


class Vertex(NamedTuple):
    level: int
    position: int  # 1-based within the level

    @property
    def label(self) -> str:
        return f"{self.position}:{self.level}"


def poset_leq(x: Vertex, y: Vertex) -> bool:
    """<j,s> <= <k,t> iff s < t, or the two vertices coincide."""
    return x.level < y.level or (x.position == y.position and x.level == y.level)


@dataclass(frozen=True)
class HasseDigraph:
    """Levels of vertices with every vertex of a level joined to every vertex of the next."""

    sequence: FSequence
    levels: tuple[tuple[Vertex, ...], ...]

    @property
    def n(self) -> int:
        return len(self.levels) - 1

    @property
    def widths(self) -> tuple[int, ...]:
        return tuple(len(lv) for lv in self.levels)

    @property
    def vertices(self) -> list[Vertex]:
        return [v for lv in self.levels for v in lv]

    def arcs(self) -> Iterator[tuple[Vertex, Vertex]]:
        for lower, upper in zip(self.levels, self.levels[1:]):
            for u in lower:
                for v in upper:
                    yield u, v

    @property
    def arc_count(self) -> int:
        w = self.widths
        return sum(a * b for a, b in zip(w, w[1:]))

    def to_dot(self, name: str = "cobweb") -> str:
        lines = [f"digraph {name} {{", "  rankdir=BT;", "  node [shape=circle, fontsize=10];"]
        for i, lv in enumerate(self.levels):
            lines.append(f"  subgraph level_{i} {{")
            lines.append("    rank=same;")
            for v in lv:
                lines.append(f'    "{v.label}";')
            lines.append("  }")
        for u, v in self.arcs():
            lines.append(f'  "{u.label}" -> "{v.label}";')
        lines.append("}")
        return "\n".join(lines) + "\n"

    def to_json(self) -> dict:
        return {
            "sequence": self.sequence.spec,
            "levels": [[list(v) for v in lv] for lv in self.levels],
            "arcs": [[list(u), list(v)] for u, v in self.arcs()],
        }

    @classmethod
    def from_json(cls, obj: dict, F: FSequence) -> HasseDigraph:
        levels = tuple(tuple(Vertex(*v) for v in lv) for lv in obj["levels"])
        g = cls(F, levels)
        arcs = {(Vertex(*u), Vertex(*v)) for u, v in obj.get("arcs", [])}
        if arcs and arcs != set(g.arcs()):
            raise ValueError("arc list does not match the complete bipartite levels")
        return g


def _levels_from_widths(pairs) -> tuple[tuple[Vertex, ...], ...]:
    return tuple(tuple(Vertex(s, j) for j in range(1, w + 1)) for s, w in pairs)


def build_hasse(F: FSequence, n: int) -> HasseDigraph:
    """The Hasse digraph of P_n: levels 0..n of sizes 0_F, ..., n_F."""
    if n < 0:
        raise InvalidRange(f"n must be >= 0, got {n}")
    return HasseDigraph(F, _levels_from_widths((s, F.width(s)) for s in range(n + 1)))


def layer_digraph(F: FSequence, k: int, n: int) -> HasseDigraph:
    """The layer of levels k..n."""
    if k < 0 or n < k - 1:
        raise InvalidRange(f"bad layer bounds k={k}, n={n}")
    return HasseDigraph(F, _levels_from_widths((s, F.width(s)) for s in range(k, n + 1)))


def check_permutation(sigma: Sequence[int], m: int) -> tuple[int, ...]:
    sigma = tuple(int(x) for x in sigma)
    if len(sigma) != m or sorted(sigma) != list(range(1, m + 1)):
        raise InvalidPermutation(f"{sigma} is not a permutation of 1..{m}")
    return sigma


def permuted_subposet(F: FSequence, m: int, sigma: Sequence[int]) -> HasseDigraph:
    """Levels 1..m with widths sigma(1)_F, ..., sigma(m)_F."""
    sigma = check_permutation(sigma, m)
    return HasseDigraph(F, _levels_from_widths((s, F.width(sigma[s - 1])) for s in range(1, m + 1)))


@dataclass(frozen=True)
class HyperBox:
    """The discrete box [k_F] x [(k+1)_F] x ... x [n_F]; n == k-1 is the one-point empty box."""

    sequence: FSequence
    origin: int
    end: int

    def __post_init__(self):
        if self.origin < 1:
            raise InvalidRange(f"origin must be >= 1, got {self.origin}")
        if self.end < self.origin - 1:
            raise InvalidRange(f"end {self.end} is below origin-1 = {self.origin - 1}")

    @property
    def dims(self) -> int:
        return self.end - self.origin + 1

    @property
    def extents(self) -> tuple[int, ...]:
        return tuple(self.sequence[s] for s in range(self.origin, self.end + 1))

    @property
    def size(self) -> int:
        return rising_factorial(self.sequence, self.origin, self.dims)

    def __contains__(self, point) -> bool:
        ext = self.extents
        return len(point) == len(ext) and all(0 <= c < e for c, e in zip(point, ext))

    def points(self) -> Iterator[tuple[int, ...]]:
        """All points, least significant coordinate varying fastest."""
        for rev in itertools.product(*(range(e) for e in reversed(self.extents))):
            yield rev[::-1]

    def as_interval(self) -> BoxInterval:
        ext = self.extents
        return BoxInterval(ext, tuple(0 for _ in ext), tuple(e - 1 for e in ext))

    def descriptor(self) -> dict:
        return {
            "sequence": self.sequence.spec,
            "origin": self.origin,
            "end": self.end,
            "extents": list(self.extents),
        }


def enumerate_max_chains(box: HyperBox) -> Iterator[tuple[int, ...]]:
    """Every point of the box once, in increasing base-F value."""
    return box.points()


def count_max_chains(box: HyperBox) -> int:
    return box.size


def count_paths_dfs(g: HasseDigraph) -> int:
    """Count source-to-sink paths by walking the arc list one path at a time."""
    if not g.levels:
        return 1
    out: dict[Vertex, list[Vertex]] = {v: [] for v in g.vertices}
    for u, v in g.arcs():
        out[u].append(v)
    top = g.levels[-1]
    count = 0
    stack = list(g.levels[0])
    while stack:
        v = stack.pop()
        nxt = out[v]
        if nxt:
            stack.extend(nxt)
        elif v in top:
            count += 1
    return count


@dataclass(frozen=True)
class BoxInterval:
    """An axis-aligned sub-box: per-dimension inclusive ranges lo..hi inside ``ambient`` extents."""

    ambient: tuple[int, ...]
    lo: tuple[int, ...]
    hi: tuple[int, ...]

    def __post_init__(self):
        if not len(self.ambient) == len(self.lo) == len(self.hi):
            raise AmbientMismatch("lo, hi and ambient must have equal length")
        for a, l, h in zip(self.ambient, self.lo, self.hi):
            if not 0 <= l <= h < a:
                raise InvalidRange(f"interval {l}..{h} does not fit extent {a}")

    @property
    def size(self) -> int:
        out = 1
        for l, h in zip(self.lo, self.hi):
            out *= h - l + 1
        return out

    def __contains__(self, point) -> bool:
        return len(point) == len(self.lo) and all(l <= c <= h for c, l, h in zip(point, self.lo, self.hi))

    def points(self) -> Iterator[tuple[int, ...]]:
        for rev in itertools.product(*(range(l, h + 1) for l, h in zip(reversed(self.lo), reversed(self.hi)))):
            yield rev[::-1]

    @classmethod
    def point(cls, ambient, p) -> BoxInterval:
        return cls(tuple(ambient), tuple(p), tuple(p))


def box_contains(outer: BoxInterval, inner: BoxInterval) -> bool:
    if outer.ambient != inner.ambient:
        raise AmbientMismatch(f"ambient boxes differ: {outer.ambient} vs {inner.ambient}")
    return all(ol <= il and ih <= oh for ol, oh, il, ih in zip(outer.lo, outer.hi, inner.lo, inner.hi))


def _same_dims(x, y):
    if len(x) != len(y):
        raise AmbientMismatch(f"points of different dimension: {len(x)} vs {len(y)}")


def product_leq(x, y) -> bool:
    _same_dims(x, y)
    return all(a <= b for a, b in zip(x, y))


def join(x, y) -> tuple[int, ...]:
    _same_dims(x, y)
    return tuple(max(a, b) for a, b in zip(x, y))


def meet(x, y) -> tuple[int, ...]:
    _same_dims(x, y)
    return tuple(min(a, b) for a, b in zip(x, y))


def strip(x, y, box: HyperBox) -> BoxInterval:
    """The sub-box [x meet y, x join y]; it holds both points."""
    if x not in box or y not in box:
        raise AmbientMismatch("both points must lie in the box")
    return BoxInterval(box.extents, meet(x, y), join(x, y))


def pair_order(kind: str, a, b) -> bool:
    """One of three orders on pairs: ``lex``, ``product`` or ``strict-reflexive``."""
    (p, q), (r, s) = a, b
    if kind == "lex":
        return p < r or (p == r and q <= s)
    if kind == "product":
        return p <= r and q <= s
    if kind == "strict-reflexive":
        return (p < r and q < s) or (p == r and q == s)
    raise ValueError(f"unknown pair order {kind!r}")
