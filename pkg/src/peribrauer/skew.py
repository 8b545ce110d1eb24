"""Skew Young diagrams up to translation, hooks, and hook coverings.

A skew diagram is stored in a canonical frame: the first occupied row is
row 1 and the leftmost occupied column is column 1.  Row r occupies the
half-open column interval (l, r], i.e. columns l+1..r; interior rows may
be empty (l == r), which happens for diagrams whose connected components
are separated vertically.  Two diagrams are equal exactly when they agree
as translation classes.

The membership test `is_gamma` decomposes a diagram into its covering by
rim hooks (peeling the rightmost box of each content off every connected
component, recursively) and checks each hook for two conditions: width =
height + 1, and no box strictly above the diagonal through the box of
minimal content.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import pairwise
from typing import Iterable, Iterator, Optional

from .partitions import Box, Partition, contains, format_partition

# Working form used by the algorithms: {row: (l, r)} with l < r, mapping
# each occupied row (any integer) to its column interval (l, r] = l+1..r.
Occ = dict


def _occ_valid(occ: Occ) -> bool:
    items = sorted(occ.items())
    for (a, (la, ra)), (b, (lb, rb)) in pairwise(items):
        if b == a + 1:
            if la < lb or ra < rb:
                return False
        elif la < rb:  # empty rows in between force left-above >= right-below
            return False
    return True


def occ_violation(occ: Occ) -> Optional[str]:
    """Why the row intervals fail to form a skew shape, or None."""
    items = sorted(occ.items())
    for (a, (la, ra)), (b, (lb, rb)) in pairwise(items):
        if b == a + 1:
            if la < lb:
                return f"left endpoints increase from row {a} to row {b}"
            if ra < rb:
                return f"right endpoints increase from row {a} to row {b}"
        elif la < rb:
            return (
                f"row {b} reaches column {rb} right of the left end of row "
                f"{a} across empty rows"
            )
    return None


def _occ_boxes(occ: Occ) -> Iterator[tuple[int, int]]:
    for i, (l, r) in occ.items():
        for j in range(l + 1, r + 1):
            yield (i, j)


def _occ_from_boxes(boxes: Iterable[tuple[int, int]]) -> Occ:
    rows: dict[int, list[int]] = {}
    for i, j in boxes:
        rows.setdefault(i, []).append(j)
    occ = {}
    for i, cols in rows.items():
        lo, hi = min(cols), max(cols)
        if hi - lo + 1 != len(set(cols)):
            raise ValueError(f"row {i} is not contiguous: {sorted(cols)}")
        occ[i] = (lo - 1, hi)
    if not _occ_valid(occ):
        raise ValueError("box set is not a skew diagram")
    return occ


def _occ_add(occ: Occ, i: int, j: int) -> Optional[Occ]:
    """occ with box (i, j) added, or None if the result is not skew."""
    new = dict(occ)
    if i in occ:
        l, r = occ[i]
        if j == l:
            new[i] = (l - 1, r)
        elif j == r + 1:
            new[i] = (l, r + 1)
        else:
            return None  # occupied or would break row contiguity
    else:
        new[i] = (j - 1, j)
    return new if _occ_valid(new) else None


def _occ_remove(occ: Occ, i: int, j: int) -> Optional[Occ]:
    """occ with box (i, j) removed, or None if the result is not skew."""
    if i not in occ:
        return None
    l, r = occ[i]
    new = dict(occ)
    if j == l + 1 == r:
        del new[i]
    elif j == l + 1:
        new[i] = (l + 1, r)
    elif j == r:
        new[i] = (l, r - 1)
    else:
        return None
    return new if _occ_valid(new) else None


@dataclass(frozen=True, slots=True)
class SkewDiagram:
    """Canonical translation class of a skew Young diagram.

    rows[k] is the interval of row k+1; the first and last entries are
    nonempty, interior empty rows are normalised to (x, x) with x the
    right endpoint of the nearest occupied row below.
    """

    rows: tuple[tuple[int, int], ...]

    @staticmethod
    def from_occ(occ: Occ) -> "SkewDiagram":
        occupied = {i: itv for i, itv in occ.items() if itv[0] < itv[1]}
        if not occupied:
            return EMPTY
        lo, hi = min(occupied), max(occupied)
        shift = min(l for l, _ in occupied.values())
        out = [None] * (hi - lo + 1)
        fill = None
        for i in range(hi, lo - 1, -1):
            if i in occupied:
                l, r = occupied[i]
                fill = r - shift
                out[i - lo] = (l - shift, fill)
            else:
                out[i - lo] = (fill, fill)
        return SkewDiagram(tuple(out))

    @staticmethod
    def from_boxes(boxes: Iterable[tuple[int, int]]) -> "SkewDiagram":
        boxes = list(boxes)
        if not boxes:
            return EMPTY
        return SkewDiagram.from_occ(_occ_from_boxes(boxes))

    def occ(self) -> Occ:
        return {i + 1: itv for i, itv in enumerate(self.rows) if itv[0] < itv[1]}

    def boxes(self) -> frozenset[tuple[int, int]]:
        return frozenset(_occ_boxes(self.occ()))

    @property
    def size(self) -> int:
        return sum(r - l for l, r in self.rows if l < r)

    @property
    def is_empty(self) -> bool:
        return not self.rows

    def content_range(self) -> tuple[int, int]:
        """(min, max) content over boxes, with content(i, j) = j - i."""
        if self.is_empty:
            raise ValueError("empty diagram has no contents")
        occ = self.occ()
        return (
            min(l + 1 - i for i, (l, _) in occ.items()),
            max(r - i for i, (_, r) in occ.items()),
        )

    def span(self) -> int:
        if self.is_empty:
            return 0
        lo, hi = self.content_range()
        return hi - lo

    def __str__(self) -> str:
        return format_skew(self)


EMPTY = SkewDiagram(())


def skew_from_pair(outer: Partition, inner: Partition) -> SkewDiagram:
    """The canonical skew diagram of outer minus inner."""
    if not contains(inner, outer):
        raise ValueError(
            f"{format_partition(inner)} is not contained in {format_partition(outer)}"
        )
    inner_padded = tuple(inner) + (0,) * (len(outer) - len(inner))
    occ = {
        i + 1: (inner_padded[i], outer[i])
        for i in range(len(outer))
        if inner_padded[i] < outer[i]
    }
    return SkewDiagram.from_occ(occ)


def _connected_pieces(boxes) -> list[frozenset]:
    remaining = set(boxes)
    out = []
    while remaining:
        seed = min(remaining)
        comp = {seed}
        frontier = [seed]
        while frontier:
            i, j = frontier.pop()
            for nb in ((i - 1, j), (i + 1, j), (i, j - 1), (i, j + 1)):
                if nb in remaining and nb not in comp:
                    comp.add(nb)
                    frontier.append(nb)
        remaining -= comp
        out.append(frozenset(comp))
    return out


def components(k: SkewDiagram) -> list[tuple[SkewDiagram, tuple[int, int]]]:
    """Maximal edge-connected components with their placement offsets.

    Boxes are adjacent when they share a side.  Each component is returned
    canonicalised, together with the offset (dr, dc) such that a canonical
    box (i, j) sits at (i + dr, j + dc) in the frame of k.
    """
    out = []
    for comp in _connected_pieces(k.boxes()):
        dr = min(i for i, _ in comp) - 1
        dc = min(j for _, j in comp) - 1
        out.append((SkewDiagram.from_boxes((i - dr, j - dc) for i, j in comp), (dr, dc)))
    out.sort(key=lambda t: t[1])
    return out


# ---------------------------------------------------------------------------
# Addable / removable boxes


def _has_box(occ: Occ, i: int, j: int) -> bool:
    itv = occ.get(i)
    return itv is not None and itv[0] < j <= itv[1]


def _box_right_or_below(occ: Occ, i: int, j: int) -> bool:
    itv = occ.get(i)
    if itv is not None and itv[1] > j:
        return True
    return any(i2 > i and l < j <= r for i2, (l, r) in occ.items())


def _box_left_or_above(occ: Occ, i: int, j: int) -> bool:
    itv = occ.get(i)
    if itv is not None and itv[0] + 1 < j:
        return True
    return any(i2 < i and l < j <= r for i2, (l, r) in occ.items())


def _addable_positions(occ: Occ, content: int, down: bool) -> list[tuple[int, int]]:
    """Addable boxes of the given content (content = j - i), restricted to
    d-addable (down=True: nothing right of or below) or u-addable ones.

    A box separated from the diagram by g empty rows differs in content
    from the nearest extreme content by at least g + 2, which bounds the
    rows that can carry a candidate.
    """
    if not occ:
        raise ValueError("use an explicit placement for the empty diagram")
    lo_row, hi_row = min(occ), max(occ)
    mincon = min(l + 1 - i for i, (l, _) in occ.items())
    maxcon = max(r - i for i, (_, r) in occ.items())
    above = 1 + max(0, content - maxcon - 2)
    below = 1 + max(0, mincon - content - 2)
    out = []
    for i in range(lo_row - above, hi_row + below + 1):
        j = i + content
        if _has_box(occ, i, j) or _occ_add(occ, i, j) is None:
            continue
        blocked = _box_right_or_below(occ, i, j) if down else _box_left_or_above(occ, i, j)
        if not blocked:
            out.append((i, j))
    return out


def _removable_positions(occ: Occ, content: int, down: bool) -> list[tuple[int, int]]:
    out = []
    for i, (l, r) in occ.items():
        j = i + content
        if not (l < j <= r) or _occ_remove(occ, i, j) is None:
            continue
        blocked = _box_right_or_below(occ, i, j) if down else _box_left_or_above(occ, i, j)
        if not blocked:
            out.append((i, j))
    return out


def _window_boxes(k: SkewDiagram, down: bool, add: bool,
                  window: Optional[tuple[int, int]] = None) -> frozenset[Box]:
    if k.is_empty:
        if not add:
            return frozenset()
        if window is None:
            raise ValueError("the empty diagram needs an explicit content window")
        return frozenset(Box(1, c + 1) for c in range(window[0], window[1] + 1))
    if window is None:
        lo, hi = k.content_range()
        window = (lo - 2, hi + 2)
    occ = k.occ()
    fn = _addable_positions if add else _removable_positions
    return frozenset(
        Box(i, j) for c in range(window[0], window[1] + 1) for i, j in fn(occ, c, down)
    )


def d_addable(k: SkewDiagram, window=None) -> frozenset[Box]:
    """Addable boxes with nothing right of or below them, truncated to the
    content window [min-2, max+2] (detached families are infinite)."""
    return _window_boxes(k, down=True, add=True, window=window)


def u_addable(k: SkewDiagram, window=None) -> frozenset[Box]:
    """Addable boxes with nothing left of or above them."""
    return _window_boxes(k, down=False, add=True, window=window)


def d_removable(k: SkewDiagram) -> frozenset[Box]:
    """Removable boxes with nothing right of or below them."""
    return _window_boxes(k, down=True, add=False)


def u_removable(k: SkewDiagram) -> frozenset[Box]:
    """Removable boxes with nothing left of or above them."""
    return _window_boxes(k, down=False, add=False)


# ---------------------------------------------------------------------------
# Hooks and coverings


@dataclass(frozen=True, slots=True)
class Hook:
    """A connected skew diagram with pairwise distinct contents, fixed in
    space (absolute box coordinates)."""

    boxes: frozenset[tuple[int, int]]

    def __post_init__(self):
        if not self.boxes:
            raise ValueError("a hook has at least one box")
        contents = {j - i for i, j in self.boxes}
        if len(contents) != len(self.boxes):
            raise ValueError("hook has two boxes of equal content")
        _occ_from_boxes(self.boxes)  # must be a valid skew shape
        if len(_connected_pieces(self.boxes)) != 1:
            raise ValueError("hook is not connected")
        assert len(self.boxes) == self.ht + self.wd - 1

    @property
    def ht(self) -> int:
        return len({i for i, _ in self.boxes})

    @property
    def wd(self) -> int:
        return len({j for _, j in self.boxes})

    @property
    def min_box(self) -> Box:
        return Box(*min(self.boxes, key=lambda b: b[1] - b[0]))

    @property
    def max_box(self) -> Box:
        return Box(*max(self.boxes, key=lambda b: b[1] - b[0]))

    def diagram(self) -> SkewDiagram:
        return SkewDiagram.from_boxes(self.boxes)


Covering = tuple


def covering(k: SkewDiagram) -> Covering:
    """The covering of k: per connected component, repeatedly strip the
    outer rim hook made of the rightmost box of each content.

    Hooks are returned with absolute coordinates in k's canonical frame,
    sorted by their minimal box.
    """
    hooks: list[Hook] = []

    def strip(piece: frozenset):
        by_content: dict[int, tuple[int, int]] = {}
        for b in piece:
            c = b[1] - b[0]
            if c not in by_content or b[1] > by_content[c][1]:
                by_content[c] = b
        outer = frozenset(by_content.values())
        hooks.append(Hook(outer))
        for rest in _connected_pieces(piece - outer):
            strip(rest)

    for piece in _connected_pieces(k.boxes()):
        strip(piece)
    hooks.sort(key=lambda h: sorted(h.boxes))
    return tuple(hooks)


def hooks_disjoint(a: frozenset, b: frozenset) -> bool:
    """No box of one shares a side with (or equals) a box of the other."""
    for i, j in a:
        if (i, j) in b:
            return False
        for nb in ((i - 1, j), (i + 1, j), (i, j - 1), (i, j + 1)):
            if nb in b:
                return False
    return True


def hook_nested_in(a: frozenset, b: frozenset) -> bool:
    """Each lower and right side of a box of `a` is shared with another box
    of `a` or of `b`."""
    u = a | b
    return all((i + 1, j) in u and (i, j + 1) in u for i, j in a)


def disjoint_or_nested(a: frozenset, b: frozenset) -> bool:
    return hooks_disjoint(a, b) or hook_nested_in(a, b) or hook_nested_in(b, a)


def is_gamma0(h: Hook) -> bool:
    """Width equals height plus one, and the minimal box attains the
    minimal anticontent of the hook."""
    if h.wd != h.ht + 1:
        return False
    m = h.min_box
    a = m.row + m.col
    return all(i + j >= a for i, j in h.boxes)


_GAMMA_CACHE: dict[tuple, bool] = {}


def is_gamma(k: SkewDiagram) -> bool:
    """True iff every hook of the covering of k passes `is_gamma0`; the
    empty diagram is a member."""
    cached = _GAMMA_CACHE.get(k.rows)
    if cached is None:
        cached = _GAMMA_CACHE[k.rows] = all(is_gamma0(h) for h in covering(k))
    return cached


def conjugate_skew(k: SkewDiagram) -> SkewDiagram:
    """Transpose of the box set, re-canonicalised."""
    return SkewDiagram.from_boxes((j, i) for i, j in k.boxes())


# ---------------------------------------------------------------------------
# Exhaustive decomposition search (used to certify covering uniqueness)


def _hooks_through(anchor: tuple[int, int], avail: frozenset) -> list[frozenset]:
    """All hooks inside `avail` containing `anchor`.

    A hook is a ribbon: walking contents upward moves right or up, walking
    downward moves left or down, one box per content.
    """

    def tails(box, delta):
        yield (box,)
        i, j = box
        steps = ((i, j + 1), (i - 1, j)) if delta > 0 else ((i, j - 1), (i + 1, j))
        for nb in steps:
            if nb in avail:
                for t in tails(nb, delta):
                    yield (box,) + t

    out = []
    for down in tails(anchor, -1):
        for up in tails(anchor, +1):
            out.append(frozenset(down) | frozenset(up))
    return out


def hook_decompositions(k: SkewDiagram, limit: int = 2) -> list[frozenset]:
    """Up to `limit` decompositions of k into hooks that are pairwise
    disjoint or nested.  Each decomposition is a frozenset of hook box
    sets."""
    found: list[frozenset] = []

    def rec(remaining: frozenset, chosen: tuple):
        if len(found) >= limit:
            return
        if not remaining:
            found.append(frozenset(chosen))
            return
        anchor = min(remaining)
        for hook in _hooks_through(anchor, remaining):
            if all(disjoint_or_nested(hook, c) for c in chosen):
                rec(remaining - hook, chosen + (hook,))
                if len(found) >= limit:
                    return

    rec(k.boxes(), ())
    return found


# ---------------------------------------------------------------------------
# Enumeration of canonical diagrams


def enumerate_skew_diagrams(max_size: int, span_cap: Optional[int] = None
                            ) -> Iterator[SkewDiagram]:
    """All canonical skew diagrams with at most `max_size` boxes and content
    span at most `span_cap` (default max_size + 1).

    The span cap is what makes the family finite: connected components may
    sit arbitrarily far apart in general, and every extra row or column of
    separation costs content span.
    """
    if span_cap is None:
        span_cap = max_size + 1
    yield EMPTY
    if max_size < 1:
        return

    def rec(rows: list, row_idx: int, used: int, maxcon: int):
        l_prev, r_prev = rows[-1]
        if l_prev == 0:
            yield SkewDiagram.from_occ(
                {i + 1: itv for i, itv in enumerate(rows) if itv[0] < itv[1]}
            )
        budget = max_size - used
        if budget == 0:
            return
        for g in range(0, span_cap + 2):  # g empty rows before the next one
            t = row_idx + g + 1
            r_hi = r_prev if g == 0 else l_prev
            if r_hi < 1:
                break
            feasible = False
            for r2 in range(r_hi, 0, -1):
                # row t occupies (l2, r2]; its lowest content is l2 + 1 - t
                l_lo = max(0, r2 - budget, maxcon - span_cap + t - 1)
                l_hi = min(l_prev, r2 - 1) if g == 0 else r2 - 1
                for l2 in range(l_lo, l_hi + 1):
                    feasible = True
                    rows2 = rows + [(r2, r2)] * g + [(l2, r2)]
                    yield from rec(rows2, t, used + (r2 - l2), maxcon)
            if not feasible and g > 0:
                break

    # first occupied row: interval (l1, r1], contents [l1, r1 - 1]
    for l1 in range(0, span_cap + 1):
        for r1 in range(l1 + 1, l1 + max_size + 1):
            if (r1 - 1) - l1 > span_cap:
                break
            yield from rec([(l1, r1)], 1, r1 - l1, r1 - 1)


# ---------------------------------------------------------------------------
# Text forms


def format_skew(k: SkewDiagram) -> str:
    """Compact row-interval syntax `1:l..r;2:l..r;...`; `-` for the empty
    diagram."""
    if k.is_empty:
        return "-"
    return ";".join(f"{i + 1}:{l}..{r}" for i, (l, r) in enumerate(k.rows))


def parse_skew(s: str) -> SkewDiagram:
    t = s.strip()
    if t == "-":
        return EMPTY
    occ = {}
    for pos, piece in enumerate(t.split(";"), start=1):
        try:
            head, itv = piece.split(":")
            l, r = itv.split("..")
            occ[int(head)] = (int(l), int(r))
        except ValueError:
            raise ValueError(
                f"bad row-interval at piece {pos} ({piece!r}) of {s!r}"
            ) from None
    occ = {i: v for i, v in occ.items() if v[0] < v[1]}
    problem = occ_violation(occ)
    if problem is not None:
        raise ValueError(f"not a skew diagram ({problem}): {s!r}")
    return SkewDiagram.from_occ(occ)


def render(k: SkewDiagram, contents: bool = False) -> str:
    """ASCII picture: one line per row, `#` per box (or the content mod 10
    with contents=True), `.` elsewhere in the bounding box."""
    if k.is_empty:
        return "(empty)"
    occ = k.occ()
    width = max(r for _, r in occ.values())
    lines = []
    for idx in range(len(k.rows)):
        i = idx + 1
        l, r = k.rows[idx]
        chars = []
        for j in range(1, width + 1):
            if i in occ and l < j <= r:
                chars.append(str((j - i) % 10) if contents else "#")
            else:
                chars.append(".")
        lines.append("".join(chars))
    return "\n".join(lines)
