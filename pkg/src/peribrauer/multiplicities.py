"""Cell and Cartan decomposition multiplicities.

The cell multiplicity of a pair (lam, mu) is 1 exactly when lam sits
inside mu and the skew diagram mu/lam passes `is_gamma`; it does not
depend on the algebra grade r beyond validating the labels.  Cartan
entries are computed twice, through the reciprocity sum and through an
explicit witness search, and the two must agree entrywise with every
entry 0 or 1 -- any discrepancy means the implementation is wrong, so it
raises instead of warning.
"""

from __future__ import annotations

import csv
import io
import json
from dataclasses import dataclass, field
from functools import cache

from .partitions import (
    Partition,
    conjugate,
    contains,
    format_partition,
    labels_L,
    labels_Lambda,
    partitions_of,
)
from .skew import conjugate_skew, is_gamma, skew_from_pair


class ConsistencyError(RuntimeError):
    """Two supposedly equivalent computations disagreed."""


@dataclass(frozen=True)
class DecompositionMatrix:
    r: int
    row_labels: tuple[Partition, ...]
    col_labels: tuple[Partition, ...]
    entries: tuple[tuple[int, ...], ...]


@cache
def _gamma_pair(lam: Partition, mu: Partition) -> bool:
    return contains(lam, mu) and is_gamma(skew_from_pair(mu, lam))


def cell_mult(r: int, lam: Partition, mu: Partition) -> int:
    """Multiplicity of the simple labelled mu in the cell module labelled
    lam, for the grade-r algebra."""
    lam, mu = tuple(lam), tuple(mu)
    if lam not in set(labels_L(r)):
        raise ValueError(f"{format_partition(lam)} is not a cell label for r={r}")
    if mu not in set(labels_Lambda(r)):
        raise ValueError(f"{format_partition(mu)} is not a simple label for r={r}")
    return 1 if _gamma_pair(lam, mu) else 0


def cell_matrix(r: int) -> DecompositionMatrix:
    """Rows over the cell labels, columns over the simple labels, both in
    size-descending display order."""
    rows = labels_L(r)
    cols = labels_Lambda(r)
    entries = tuple(
        tuple(1 if _gamma_pair(lam, mu) else 0 for mu in cols) for lam in rows
    )
    return DecompositionMatrix(r, rows, cols, entries)


def cartan_mult_sum(r: int, nu: Partition, mu: Partition) -> int:
    """Projective-module multiplicity via the reciprocity sum over all cell
    labels lam of cell(lam, mu) * cell(lam', nu')."""
    nu, mu = tuple(nu), tuple(mu)
    lambdas = set(labels_Lambda(r))
    if nu not in lambdas or mu not in lambdas:
        raise ValueError(f"labels must lie in the simple label set for r={r}")
    nu_c = conjugate(nu)
    return sum(
        1
        for lam in labels_L(r)
        if _gamma_pair(lam, mu) and _gamma_pair(conjugate(lam), nu_c)
    )


def cartan_mult_witness(r: int, nu: Partition, mu: Partition) -> int:
    """Same multiplicity via the witness form: 1 iff some cell label lam
    sits inside both mu and nu with mu/lam a member and the transpose of
    nu/lam a member."""
    nu, mu = tuple(nu), tuple(mu)
    lambdas = set(labels_Lambda(r))
    if nu not in lambdas or mu not in lambdas:
        raise ValueError(f"labels must lie in the simple label set for r={r}")
    for lam in labels_L(r):
        if (
            contains(lam, mu)
            and contains(lam, nu)
            and is_gamma(skew_from_pair(mu, lam))
            and is_gamma(conjugate_skew(skew_from_pair(nu, lam)))
        ):
            return 1
    return 0


def cartan_matrix(r: int) -> DecompositionMatrix:
    """Matrix of cartan_mult_sum values over the simple labels, with the
    witness formula and the 0/1 bound asserted entrywise."""
    labels = labels_Lambda(r)
    entries = []
    for nu in labels:
        row = []
        for mu in labels:
            s = cartan_mult_sum(r, nu, mu)
            w = cartan_mult_witness(r, nu, mu)
            if s != w or s > 1:
                raise ConsistencyError(
                    f"cartan entry ({format_partition(nu)}, {format_partition(mu)}) "
                    f"at r={r}: sum={s}, witness={w}"
                )
            row.append(s)
        entries.append(tuple(row))
    return DecompositionMatrix(r, labels, labels, tuple(entries))


@dataclass
class Diff2Report:
    max_n: int
    pairs_checked: int = 0
    violations: list = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.violations


def _two_box_extensions(lam: Partition) -> set[Partition]:
    out = set()
    base = list(lam) + [0, 0]
    for i in range(len(base)):
        one = base.copy()
        one[i] += 1
        if all(one[k] >= one[k + 1] for k in range(len(one) - 1)):
            for j in range(len(one)):
                two = one.copy()
                two[j] += 1
                if all(two[k] >= two[k + 1] for k in range(len(two) - 1)):
                    out.add(tuple(x for x in two if x))
    return out


def prop_diff2_check(max_n: int) -> Diff2Report:
    """For every lam of size <= max_n and every mu two boxes larger, the
    cell multiplicity is 1 exactly when the two added boxes form a
    horizontal domino."""
    report = Diff2Report(max_n=max_n)
    for n in range(0, max_n + 1):
        for lam in partitions_of(n):
            for mu in _two_box_extensions(lam):
                report.pairs_checked += 1
                diff = skew_from_pair(mu, lam)
                expected = diff.rows == ((0, 2),)  # horizontal domino
                if _gamma_pair(lam, mu) != expected:
                    report.violations.append((lam, mu))
    return report


# ---------------------------------------------------------------------------
# Output formats


def matrix_text(m: DecompositionMatrix) -> str:
    headers = [format_partition(p) for p in m.col_labels]
    row_names = [format_partition(p) for p in m.row_labels]
    w0 = max(len(s) for s in row_names)
    widths = [max(len(h), 1) for h in headers]
    lines = [" " * w0 + "  " + "  ".join(h.rjust(w) for h, w in zip(headers, widths))]
    for name, row in zip(row_names, m.entries):
        lines.append(
            name.rjust(w0) + "  "
            + "  ".join(str(x).rjust(w) for x, w in zip(row, widths))
        )
    return "\n".join(lines)


def matrix_csv(m: DecompositionMatrix) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow([""] + [format_partition(p) for p in m.col_labels])
    for lam, row in zip(m.row_labels, m.entries):
        writer.writerow([format_partition(lam)] + list(row))
    return buf.getvalue()


def matrix_json(m: DecompositionMatrix) -> str:
    return json.dumps(
        {
            "r": m.r,
            "rows": [format_partition(p) for p in m.row_labels],
            "cols": [format_partition(p) for p in m.col_labels],
            "entries": [list(row) for row in m.entries],
        }
    )
