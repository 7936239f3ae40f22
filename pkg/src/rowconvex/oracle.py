"""Brute-force ground truth: every fixed polyomino of a given area, plus shape predicates.

Fixed polyominoes (translation classes) are grown with Redelmeier's
algorithm. Each animal is reached exactly once, so no dedup set is needed.
A slower generate-and-canonicalize search is kept for cross-checking at
small sizes.
"""
from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Iterator

from .core import Composition, _check_n
from .errors import LimitExceededError

ORACLE_LIMIT = 12
NAIVE_LIMIT = 8

Cell = tuple[int, int]  # (row, column); row 0 is the bottom row


def _normalize(cells: Iterable[Cell]) -> tuple[Cell, ...]:
    cells = list(cells)
    r0 = min(r for r, _ in cells)
    c0 = min(c for _, c in cells)
    return tuple(sorted((r - r0, c - c0) for r, c in cells))


def _connected(cells: frozenset) -> bool:
    start = next(iter(cells))
    seen = {start}
    todo = [start]
    while todo:
        r, c = todo.pop()
        for nb in ((r + 1, c), (r - 1, c), (r, c + 1), (r, c - 1)):
            if nb in cells and nb not in seen:
                seen.add(nb)
                todo.append(nb)
    return len(seen) == len(cells)


@dataclass(frozen=True, order=True)
class Polyomino:
    """A fixed polyomino: cells translated so the minimum row and column are 0, sorted."""

    cells: tuple[Cell, ...]

    @classmethod
    def from_cells(cls, cells: Iterable[Cell]) -> "Polyomino":
        cells = _normalize(cells) if cells else ()
        if not cells:
            raise ValueError("a polyomino needs at least one cell")
        if len(set(cells)) != len(cells):
            raise ValueError("duplicate cells")
        if not _connected(frozenset(cells)):
            raise ValueError("cells are not 4-connected")
        return cls(cells)

    @classmethod
    def from_text(cls, text: str) -> "Polyomino":
        """Parse text art ('#' = cell, '.' = empty); the first line is the top row."""
        lines = [ln.strip() for ln in text.strip().splitlines() if ln.strip()]
        h = len(lines)
        return cls.from_cells(
            (h - 1 - i, j) for i, ln in enumerate(lines) for j, ch in enumerate(ln) if ch == "#"
        )

    @property
    def area(self) -> int:
        return len(self.cells)

    @property
    def height(self) -> int:
        return max(r for r, _ in self.cells) + 1

    @property
    def width(self) -> int:
        return max(c for _, c in self.cells) + 1

    def __len__(self):
        return len(self.cells)

    def to_text(self) -> str:
        occupied = set(self.cells)
        return "\n".join(
            "".join("#" if (r, c) in occupied else "." for c in range(self.width))
            for r in range(self.height - 1, -1, -1)
        )


@dataclass(frozen=True)
class RowRun:
    """A maximal horizontal run of cells."""

    row: int
    offset: int
    length: int

    def __post_init__(self):
        if self.length < 1:
            raise ValueError("run length must be positive")


def _runs(cells, axis):
    by_line: dict[int, list[int]] = {}
    for cell in cells:
        by_line.setdefault(cell[axis], []).append(cell[1 - axis])
    out = []
    for line in sorted(by_line):
        pos = sorted(by_line[line])
        start = prev = pos[0]
        for p in pos[1:]:
            if p != prev + 1:
                out.append(RowRun(line, start, prev - start + 1))
                start = p
            prev = p
        out.append(RowRun(line, start, prev - start + 1))
    return out


def row_runs(p: Polyomino) -> list[RowRun]:
    """Maximal horizontal runs, bottom row first, left to right."""
    return _runs(p.cells, 0)


def _line_convex(cells, axis) -> bool:
    lo: dict[int, int] = {}
    hi: dict[int, int] = {}
    cnt: dict[int, int] = {}
    for cell in cells:
        k, v = cell[axis], cell[1 - axis]
        if k in cnt:
            cnt[k] += 1
            if v < lo[k]:
                lo[k] = v
            elif v > hi[k]:
                hi[k] = v
        else:
            cnt[k] = 1
            lo[k] = hi[k] = v
    return all(hi[k] - lo[k] + 1 == n for k, n in cnt.items())


def is_row_convex(p: Polyomino) -> bool:
    """True iff every occupied row is one contiguous run."""
    return _line_convex(p.cells, 0)


def is_column_convex(p: Polyomino) -> bool:
    """True iff every occupied column is one contiguous run."""
    return _line_convex(p.cells, 1)


def _hole_free(cells) -> bool:
    occupied = set(cells)
    h = max(r for r, _ in occupied) + 1
    w = max(c for _, c in occupied) + 1
    # flood the empty cells of the box padded by one on every side
    seen = {(-1, -1)}
    todo = deque(seen)
    outside = 0
    while todo:
        r, c = todo.popleft()
        outside += 1
        for nb in ((r + 1, c), (r - 1, c), (r, c + 1), (r, c - 1)):
            if -1 <= nb[0] <= h and -1 <= nb[1] <= w and nb not in occupied and nb not in seen:
                seen.add(nb)
                todo.append(nb)
    return outside + len(occupied) == (h + 2) * (w + 2)


def is_hole_free(p: Polyomino) -> bool:
    """True iff every empty cell of the bounding box is reachable from outside it."""
    return _hole_free(p.cells)


def row_composition(p: Polyomino) -> Composition:
    """Row lengths bottom to top of a row-convex polyomino."""
    if not is_row_convex(p):
        raise ValueError("polyomino is not row-convex")
    return Composition(tuple(run.length for run in row_runs(p)))


def reflect_vertical(p: Polyomino) -> Polyomino:
    """Mirror image across a vertical axis."""
    return Polyomino(_normalize((r, -c) for r, c in p.cells))


def rotate90(p: Polyomino) -> Polyomino:
    """Quarter turn clockwise."""
    return Polyomino(_normalize((-c, r) for r, c in p.cells))


def _check_oracle_n(n, limit):
    _check_n(n)
    if limit is not None and n > limit:
        raise LimitExceededError("oracle", n, limit)


def _redelmeier(n_max: int) -> Iterator[list[Cell]]:
    """Yield every fixed polyomino with at most ``n_max`` cells, once each.

    The yielded list is rebuilt for every animal. Its first cell is the
    leftmost cell of the bottom row, at (0, 0).
    """
    W = 2 * n_max + 1
    origin = n_max  # index of (0, 0); cells with a smaller index are off limits
    placed: list[int] = []
    blocked = {origin}

    def grow(untried: list[int]):
        untried = list(untried)
        while untried:
            cell = untried.pop()
            placed.append(cell)
            yield [(c // W, c % W - origin) for c in placed]
            if len(placed) < n_max:
                fresh = []
                for nb in (cell + 1, cell - 1, cell + W, cell - W):
                    if nb > origin and nb not in blocked:
                        blocked.add(nb)
                        fresh.append(nb)
                yield from grow(untried + fresh)
                blocked.difference_update(fresh)
            placed.pop()

    yield from grow([origin])


def _naive(n: int) -> set[tuple[Cell, ...]]:
    shapes = {((0, 0),)}
    for _ in range(n - 1):
        grown = set()
        for cells in shapes:
            occupied = set(cells)
            for r, c in cells:
                for nb in ((r + 1, c), (r - 1, c), (r, c + 1), (r, c - 1)):
                    if nb not in occupied:
                        grown.add(_normalize(occupied | {nb}))
        shapes = grown
    return shapes


def enumerate_fixed_polyominoes(
    n: int, *, method: str = "redelmeier", limit: int | None = ORACLE_LIMIT
) -> Iterator[Polyomino]:
    """Yield every fixed polyomino of area ``n`` exactly once, normalized.

    ``method="naive"`` grows all shapes cell by cell and deduplicates by
    canonical form; it is capped at area 8 and meant for cross-checking.
    """
    _check_oracle_n(n, limit)
    if method == "naive":
        if n > NAIVE_LIMIT:
            raise LimitExceededError("naive oracle", n, NAIVE_LIMIT)
        for cells in sorted(_naive(n)):
            yield Polyomino(cells)
        return
    if method != "redelmeier":
        raise ValueError(f"unknown oracle method {method!r}")
    for cells in _redelmeier(n):
        if len(cells) == n:
            yield Polyomino(_normalize(cells))


@dataclass(frozen=True)
class Census:
    """Counts over all fixed polyominoes of one area."""

    n: int
    total: int
    row_convex: int
    column_convex: int
    row_convex_with_hole: int  # should always be 0
    mirror_symmetric: int  # row-convex shapes equal to their mirror image
    reflection_classes: int  # row-convex shapes up to mirror image
    rotation_bijection: bool  # rotate90 maps row-convex shapes onto column-convex ones
    by_composition: dict[tuple[int, ...], int]


@lru_cache(maxsize=None)
def census(n: int, limit: int | None = ORACLE_LIMIT) -> Census:
    """Classify every fixed polyomino of area ``n``."""
    _check_oracle_n(n, limit)
    total = bad = sym = classes = 0
    row_shapes = set()
    col_shapes = set()
    by_comp: dict[tuple[int, ...], int] = {}
    for cells in _redelmeier(n):
        if len(cells) != n:
            continue
        total += 1
        if _line_convex(cells, 1):
            col_shapes.add(_normalize(cells))
        if not _line_convex(cells, 0):
            continue
        shape = _normalize(cells)
        bad += not _hole_free(shape)
        row_shapes.add(shape)
        mirror = _normalize((r, -c) for r, c in shape)
        if mirror == shape:
            sym += 1
        if shape <= mirror:
            classes += 1
        comp = tuple(run.length for run in _runs(shape, 0))
        by_comp[comp] = by_comp.get(comp, 0) + 1
    rotated = {_normalize((-c, r) for r, c in shape) for shape in row_shapes}
    return Census(
        n=n,
        total=total,
        row_convex=len(row_shapes),
        column_convex=len(col_shapes),
        row_convex_with_hole=bad,
        mirror_symmetric=sym,
        reflection_classes=classes,
        rotation_bijection=rotated == col_shapes,
        by_composition=by_comp,
    )


def count_row_convex_oracle(n: int, *, limit: int | None = ORACLE_LIMIT) -> int:
    """Number of fixed polyominoes of area ``n`` whose rows are all contiguous."""
    return census(n, limit).row_convex


def count_column_convex_oracle(n: int, *, limit: int | None = ORACLE_LIMIT) -> int:
    return census(n, limit).column_convex


def count_distinct_up_to_reflection(n: int, *, limit: int | None = ORACLE_LIMIT) -> tuple[int, int]:
    """(classes of row-convex shapes under mirror image, mirror-symmetric shapes)."""
    c = census(n, limit)
    return c.reflection_classes, c.mirror_symmetric


def rotation_bijection_holds(n: int, *, limit: int | None = ORACLE_LIMIT) -> bool:
    """True iff a quarter turn maps the row-convex shapes of area ``n`` onto the column-convex ones."""
    return census(n, limit).rotation_bijection


def dump_text(polyominoes: Iterable[Polyomino]) -> str:
    """Text art, one block per shape, blocks separated by a blank line."""
    return "".join(p.to_text() + "\n\n" for p in polyominoes)
