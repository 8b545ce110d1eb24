"""Push-down and extend operators on skew diagrams, and the closures they
generate.

With a content normalisation fixed (an `AnchoredSkew`), the operator P_q
moves the chain of q-boxes one step down its diagonal: it needs a
d-addable q-box whose addition leaves a u-removable q-box elsewhere, adds
the former and removes the latter.  E_q extends the diagram by a
u-addable (q-1)-box on the upper rim followed by a d-addable q-box on the
lower rim.  The barred variants additionally require the result to admit
no d-addable (q+1)-box (for P) or (q-1)-box (for E).

Closing {empty} under the plain operators gives one family, under the
barred operators another; `equivalence_report` checks both against the
covering-based membership test over an exhaustive universe of diagrams.
Termination of the closure is size-driven: E grows a diagram by two boxes
and P permutes contents, so within a size bound and a content-span bound
the reachable set is finite.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import NamedTuple, Optional, Union

from .skew import (
    EMPTY,
    Occ,
    SkewDiagram,
    _addable_positions,
    _occ_add,
    _occ_remove,
    _removable_positions,
    components,
    is_gamma,
    enumerate_skew_diagrams,
)


class AnchoredSkew(NamedTuple):
    """A skew diagram with a chosen content normalisation: the box at
    relative position (1, 1) would have content `content_offset`."""

    diagram: SkewDiagram
    content_offset: int = 0


Anchorable = Union[AnchoredSkew, SkewDiagram]


def _coerce(k: Anchorable) -> AnchoredSkew:
    if isinstance(k, SkewDiagram):
        return AnchoredSkew(k, 0)
    return k


def _op_p_raw(occ: Occ, c: int) -> list[Occ]:
    """All outcomes of the push-down at relative content c (at most one)."""
    out = []
    for b1 in _addable_positions(occ, c, down=True):
        occ2 = _occ_add(occ, *b1)
        for b2 in _removable_positions(occ2, c, down=False):
            if b2 != b1:  # pushing must move a box, not add-and-remove one
                out.append(_occ_remove(occ2, *b2))
    return out


def _op_e_raw(occ: Occ, c: int) -> list[tuple[Occ, Occ]]:
    """All outcomes of the extension at relative content c, paired with the
    intermediate diagram holding only the first new box."""
    if not occ:
        # all placements of the first box are translates of one another
        mids = [{1: (c - 1, c)}]  # a single box of content c - 1
    else:
        mids = [
            _occ_add(occ, *b2)
            for b2 in _addable_positions(occ, c - 1, down=False)
        ]
    out = []
    for occ2 in mids:
        for b1 in _addable_positions(occ2, c, down=True):
            out.append((occ2, _occ_add(occ2, *b1)))
    return out


def _no_d_addable(occ: Occ, c: int) -> bool:
    return not occ or not _addable_positions(occ, c, down=True)


def op_P_all(k: Anchorable, q: int) -> set[SkewDiagram]:
    k = _coerce(k)
    if k.diagram.is_empty:
        return set()
    c = q - k.content_offset
    return {SkewDiagram.from_occ(o) for o in _op_p_raw(k.diagram.occ(), c)}


def op_E_all(k: Anchorable, q: int) -> set[SkewDiagram]:
    k = _coerce(k)
    c = q - k.content_offset
    return {SkewDiagram.from_occ(o) for _, o in _op_e_raw(k.diagram.occ(), c)}


def op_Pbar_all(k: Anchorable, q: int) -> set[SkewDiagram]:
    k = _coerce(k)
    if k.diagram.is_empty:
        return set()
    c = q - k.content_offset
    return {
        SkewDiagram.from_occ(o)
        for o in _op_p_raw(k.diagram.occ(), c)
        if _no_d_addable(o, c + 1)
    }


def op_Ebar_all(k: Anchorable, q: int) -> set[SkewDiagram]:
    k = _coerce(k)
    c = q - k.content_offset
    return {
        SkewDiagram.from_occ(o)
        for _, o in _op_e_raw(k.diagram.occ(), c)
        if _no_d_addable(o, c - 1)
    }


def _single(results: set[SkewDiagram], name: str) -> SkewDiagram:
    if not results:
        return EMPTY
    if len(results) > 1:
        raise ValueError(
            f"{name} has {len(results)} inequivalent outcomes (detached "
            f"placements); use the *_all variant"
        )
    return next(iter(results))


def op_P(k: Anchorable, q: int) -> SkewDiagram:
    """Push the q-boxes one step down their diagonal; the empty diagram
    encodes failure."""
    return _single(op_P_all(k, q), "op_P")


def op_E(k: Anchorable, q: int) -> SkewDiagram:
    """Extend by a (q-1)-box on the upper rim and a q-box on the lower rim;
    the empty diagram encodes failure."""
    return _single(op_E_all(k, q), "op_E")


def op_Pbar(k: Anchorable, q: int) -> SkewDiagram:
    """op_P, additionally requiring the result to admit no d-addable
    (q+1)-box."""
    return _single(op_Pbar_all(k, q), "op_Pbar")


def op_Ebar(k: Anchorable, q: int) -> SkewDiagram:
    """op_E, additionally requiring the result to admit no d-addable
    (q-1)-box."""
    return _single(op_Ebar_all(k, q), "op_Ebar")


# ---------------------------------------------------------------------------
# Closure generation


def generate_upsilon(max_size: int, barred: bool,
                     span_cap: Optional[int] = None) -> frozenset[SkewDiagram]:
    """Worklist closure of {empty} under the (barred) operators, keeping
    diagrams with at most `max_size` boxes and content span at most
    `span_cap` (default max_size + 1).

    The q-range tried per step is exactly what can produce a result inside
    those bounds: pushes only act on contents already present, and an
    extension whose new boxes leave the span bound is discarded anyway.
    A push never changes the multiset of contents and the reverse of an
    extension removes boxes, so restricting the closure to the bounded
    universe loses no members of it.
    """
    if max_size < 0:
        raise ValueError("max_size must be >= 0")
    if span_cap is None:
        span_cap = max_size + 1
    p_all = op_Pbar_all if barred else op_P_all
    e_all = op_Ebar_all if barred else op_E_all

    seen = {EMPTY}
    frontier = [EMPTY]
    while frontier:
        k = frontier.pop()
        produced: set[SkewDiagram] = set()
        if k.is_empty:
            if max_size >= 2:
                produced |= e_all(k, 0)
        else:
            lo, hi = k.content_range()
            for q in range(lo, hi + 1):
                produced |= p_all(k, q)
            if k.size + 2 <= max_size:
                for q in range(hi - span_cap + 1, lo + span_cap + 1):
                    produced |= e_all(k, q)
        for res in produced:
            if res.is_empty or res in seen:
                continue
            if res.size > max_size or res.span() > span_cap:
                continue
            seen.add(res)
            frontier.append(res)
    return frozenset(seen)


# ---------------------------------------------------------------------------
# Three-way equivalence harness


@dataclass
class EquivalenceReport:
    max_size: int
    span_cap: int
    diagrams_checked: int = 0
    member_count: int = 0
    connected_nonzero_members: int = 0
    disagreements: list = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.disagreements


def _gamma_verdicts(diagrams):
    return [(k, is_gamma(k)) for k in diagrams]


def equivalence_report(max_size: int, span_cap: Optional[int] = None,
                       workers: int = 1) -> EquivalenceReport:
    """Compare the covering-based membership test with membership in the
    plain and barred closures, over every canonical diagram with at most
    `max_size` boxes and span at most `span_cap`.

    Any diagram on which the three verdicts differ is reported; with a
    correct implementation there are none.
    """
    if span_cap is None:
        span_cap = max_size + 1
    upsilon = generate_upsilon(max_size, barred=False, span_cap=span_cap)
    upsilon_bar = generate_upsilon(max_size, barred=True, span_cap=span_cap)
    report = EquivalenceReport(max_size=max_size, span_cap=span_cap)

    diagrams = list(enumerate_skew_diagrams(max_size, span_cap))
    if workers > 1:
        import multiprocessing as mp

        chunk = max(1, len(diagrams) // (workers * 8))
        chunks = [diagrams[i:i + chunk] for i in range(0, len(diagrams), chunk)]
        with mp.Pool(workers) as pool:
            verdict_lists = pool.map(_gamma_verdicts, chunks)
        verdicts = [v for lst in verdict_lists for v in lst]
    else:
        verdicts = _gamma_verdicts(diagrams)

    for k, in_gamma in verdicts:
        report.diagrams_checked += 1
        in_ups = k in upsilon
        in_bar = k in upsilon_bar
        if in_gamma:
            report.member_count += 1
            if not k.is_empty and len(components(k)) == 1:
                report.connected_nonzero_members += 1
        if not (in_gamma == in_ups == in_bar):
            report.disagreements.append((k, in_gamma, in_ups, in_bar))
    return report
