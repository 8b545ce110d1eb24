"""Decategorified restriction operators on graded class vectors.

A class vector is a finitely supported integer combination of cell-module
classes, keyed by (r, partition) with the partition a valid cell label
for grade r.  The lowering operator for a content value q sends a basis
class at grade r to the class of the partition with a q-box removed plus,
when the partition is strictly smaller than r, the class with a
(q-1)-box added, both at grade r - 1; grade 2 is annihilated.  The
two-step lowering operator drops straight to grade r - 2 (zero on
partitions of full size and below grade 4).

`verify_tl` checks the square-zero, far-commutation and braid-like
relations of these operators on every basis class in a range.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field

from .partitions import (
    Partition,
    add_q,
    format_partition,
    labels_L,
    remove_q,
    size,
)

# finitely supported map (r, partition) -> coefficient, no zero values
ClassVector = dict


def check_vector(v: ClassVector) -> ClassVector:
    for (r, lam), coeff in v.items():
        if lam not in set(labels_L(r)):
            raise ValueError(f"({r}, {format_partition(lam)}) is not a valid key")
        if coeff == 0:
            raise ValueError("zero coefficients must not be stored")
    return v


def basis_class(r: int, lam: Partition) -> ClassVector:
    return check_vector({(r, tuple(lam)): 1})


def vec_add(*vectors: ClassVector) -> ClassVector:
    out: ClassVector = {}
    for v in vectors:
        for key, coeff in v.items():
            new = out.get(key, 0) + coeff
            if new:
                out[key] = new
            else:
                out.pop(key, None)
    return out


def vec_scale(c: int, v: ClassVector) -> ClassVector:
    return {k: c * x for k, x in v.items()} if c else {}


def apply_Rq(v: ClassVector, q: int) -> ClassVector:
    """Linear extension of the grade-lowering action at content q."""
    out: ClassVector = {}

    def bump(key, coeff):
        new = out.get(key, 0) + coeff
        if new:
            out[key] = new
        else:
            out.pop(key, None)

    for (r, lam), coeff in v.items():
        if r <= 2:
            continue
        removed = remove_q(lam, q)
        if removed is not None:
            bump((r - 1, removed), coeff)
        if size(lam) < r:
            added = add_q(lam, q)
            if added is not None:
                bump((r - 1, added), coeff)
    return out


def apply_E(v: ClassVector) -> ClassVector:
    """Drop every basis class two grades, killing full-size partitions and
    grades below 4."""
    out: ClassVector = {}
    for (r, lam), coeff in v.items():
        if r < 4 or size(lam) >= r:
            continue
        key = (r - 2, lam)
        new = out.get(key, 0) + coeff
        if new:
            out[key] = new
        else:
            out.pop(key, None)
    return out


@dataclass
class TLReport:
    r_max: int
    q_lo: int
    q_hi: int
    checks: int = 0
    violations: list = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.violations


def verify_tl(r_max: int, q_lo: int, q_hi: int) -> TLReport:
    """Check, on every basis class with 2 <= r <= r_max, that the lowering
    operators square to zero, commute at content distance > 1, and satisfy
    R_q R_{q+-1} R_q = E R_q.

    Both sides of each identity are evaluated independently; violations
    are reported with the witnessing basis class.
    """
    if r_max < 2:
        raise ValueError("r_max must be >= 2")
    report = TLReport(r_max=r_max, q_lo=q_lo, q_hi=q_hi)

    def record(relation, r, lam, q, p, lhs, rhs):
        report.checks += 1
        if lhs != rhs:
            report.violations.append((relation, r, lam, q, p, lhs, rhs))

    qs = range(q_lo, q_hi + 1)
    for r in range(2, r_max + 1):
        for lam in labels_L(r):
            v = basis_class(r, lam)
            rq = {q: apply_Rq(v, q) for q in qs}
            for q in qs:
                record("square", r, lam, q, None, apply_Rq(rq[q], q), {})
                for p in qs:
                    if p - q > 1:
                        record(
                            "commute", r, lam, q, p,
                            apply_Rq(rq[q], p), apply_Rq(rq[p], q),
                        )
                for s in (1, -1):
                    lhs = apply_Rq(apply_Rq(rq[q], q + s), q)
                    rhs = apply_E(rq[q])
                    record("braid", r, lam, q, q + s, lhs, rhs)
    return report


def random_vector(r_max: int, rng: random.Random, terms: int = 4) -> ClassVector:
    """Small random class vector, for linearity smoke tests."""
    out: ClassVector = {}
    for _ in range(terms):
        r = rng.randint(2, r_max)
        lam = rng.choice(labels_L(r))
        coeff = rng.choice([-2, -1, 1, 2, 3])
        key = (r, lam)
        new = out.get(key, 0) + coeff
        if new:
            out[key] = new
        else:
            out.pop(key, None)
    return out
