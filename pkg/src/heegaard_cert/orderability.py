"""Sign-matrix obstructions to left-orderability.

Two one-directional checks on the sign matrix of a presentation:

* the row-scaling test: for every nonzero choice of signs for the
  generators, some relator column must come out uniformly + or uniformly -;
* the formal-determinant test for square matrices: a nonzero summand exists,
  no nonzero summand involves ``*``, and all nonzero summands share a sign.

A passing check certifies that the presented group is not left-orderable.
A failing check says nothing about orderability.

The determinant test implies the row-scaling test. The argument is
constructive: if a scaling fails, a loop through the matrix produces a
second permutation summand of the opposite sign. :func:`find_cycle_witness`
and :func:`verify_cycle_contradiction` carry that construction out.
"""

from __future__ import annotations

import enum
import itertools
from dataclasses import dataclass
from typing import Optional, Sequence

from heegaard_cert.errors import InputError, ResourceLimitError
from heegaard_cert.signs import (
    DEFAULT_MAX_PERM_N,
    Sign,
    SignMatrix,
    classify_formal_det,
    cycle_permutation,
    perm_sign,
    sign_mul,
    sign_product,
)

DEFAULT_MAX_BRUTEFORCE_ROWS = 16

# Enumeration order of scaling entries; fixes what "least witness" means.
SCALARS = (Sign.ZERO, Sign.PLUS, Sign.MINUS)

RowScaling = tuple[Sign, ...]


def scale_rows(e: SignMatrix, d: Sequence[Sign]) -> SignMatrix:
    if len(d) != e.rows:
        raise InputError(f"scaling has length {len(d)}, matrix has {e.rows} rows")
    return SignMatrix(
        e.rows, e.cols, tuple(sign_mul(d[i], e[i, j]) for i in range(e.rows) for j in range(e.cols))
    )


def column_is_uniform(column: Sequence[Sign]) -> bool:
    """Nonzero, and every nonzero entry is + or every nonzero entry is -."""
    nonzero = {s for s in column if s is not Sign.ZERO}
    return nonzero == {Sign.PLUS} or nonzero == {Sign.MINUS}


def notlo_column_condition(m: SignMatrix) -> Optional[int]:
    """Least (0-based) column index that is nonzero with all nonzero entries of one sign."""
    for j in range(m.cols):
        if column_is_uniform(m.column(j)):
            return j
    return None


@dataclass(frozen=True)
class BruteForceResult:
    holds: bool
    witness: Optional[RowScaling] = None
    scalings_checked: int = 0


def check_notlo_bruteforce(e: SignMatrix, max_rows: int = DEFAULT_MAX_BRUTEFORCE_ROWS) -> BruteForceResult:
    """Try all ``3**m - 1`` nonzero row scalings of ``e``.

    ``holds`` is true when every scaled matrix has a uniform column. Otherwise
    ``witness`` is the first failing scaling in the order generated by
    :data:`SCALARS`. A false result is inconclusive.
    """
    if e.rows < 1:
        raise InputError("row-scaling test needs at least one row")
    if e.rows > max_rows:
        raise ResourceLimitError(f"{e.rows} rows exceeds brute-force cap {max_rows}")
    columns = [e.column(j) for j in range(e.cols)]
    checked = 0
    for d in itertools.product(SCALARS, repeat=e.rows):
        if all(s is Sign.ZERO for s in d):
            continue
        checked += 1
        if not any(column_is_uniform([sign_mul(d[i], col[i]) for i in range(e.rows)]) for col in columns):
            return BruteForceResult(False, tuple(d), checked)
    return BruteForceResult(True, None, checked)


class Outcome(enum.Enum):
    NOT_LEFT_ORDERABLE = "NotLeftOrderable"
    CRITERION_INAPPLICABLE = "CriterionInapplicable"


@dataclass(frozen=True)
class OrderabilityVerdict:
    """Result of the formal-determinant test.

    ``failed_condition`` is 1 (no nonzero summand), 2 (a nonzero summand
    contains ``*``; ``witnesses`` holds that permutation) or 3 (summands of
    both signs; ``witnesses`` holds one of each). Permutations are 0-based
    one-line tuples.
    """

    outcome: Outcome
    sigma0: Optional[tuple[int, ...]] = None
    summand_sign: Optional[Sign] = None
    failed_condition: Optional[int] = None
    witnesses: tuple[tuple[int, ...], ...] = ()

    @property
    def not_left_orderable(self) -> bool:
        return self.outcome is Outcome.NOT_LEFT_ORDERABLE

    def to_dict(self) -> dict:
        return {
            "outcome": self.outcome.value,
            "sigma0": _perm_out(self.sigma0),
            "summand_sign": None if self.summand_sign is None else self.summand_sign.value,
            "failed_condition": self.failed_condition,
            "witnesses": [_perm_out(w) for w in self.witnesses],
        }

    @classmethod
    def from_dict(cls, data: dict) -> "OrderabilityVerdict":
        return cls(
            outcome=Outcome(data["outcome"]),
            sigma0=_perm_in(data["sigma0"]),
            summand_sign=None if data["summand_sign"] is None else Sign(data["summand_sign"]),
            failed_condition=data["failed_condition"],
            witnesses=tuple(_perm_in(w) for w in data["witnesses"]),
        )


def _perm_out(sigma: Optional[Sequence[int]]) -> Optional[list[int]]:
    return None if sigma is None else [i + 1 for i in sigma]


def _perm_in(sigma: Optional[Sequence[int]]) -> Optional[tuple[int, ...]]:
    return None if sigma is None else tuple(i - 1 for i in sigma)


def check_lemma_matrix(e: SignMatrix, max_n: int = DEFAULT_MAX_PERM_N) -> OrderabilityVerdict:
    """Formal-determinant test; conditions are reported in order 1, 2, 3."""
    c = classify_formal_det(e, max_n=max_n)
    if not c.has_nonzero_summand:
        return OrderabilityVerdict(Outcome.CRITERION_INAPPLICABLE, failed_condition=1)
    if c.star_in_nonzero_summand:
        return OrderabilityVerdict(
            Outcome.CRITERION_INAPPLICABLE,
            sigma0=c.witness_sigma0,
            failed_condition=2,
            witnesses=(c.star_witness,),
        )
    if len(c.signs_seen) == 2:
        return OrderabilityVerdict(
            Outcome.CRITERION_INAPPLICABLE,
            sigma0=c.witness_sigma0,
            failed_condition=3,
            witnesses=c.conflict_witness,
        )
    (sign,) = c.signs_seen
    return OrderabilityVerdict(Outcome.NOT_LEFT_ORDERABLE, sigma0=c.witness_sigma0, summand_sign=sign)


def _check_diagonal(m: SignMatrix) -> None:
    if not m.is_square:
        raise InputError("cycle construction needs a square matrix")
    for i in range(m.rows):
        if m[i, i] not in (Sign.PLUS, Sign.MINUS):
            raise InputError(f"diagonal entry {i + 1} is {m[i, i]}, expected + or -")


def _breaking_rows(m: SignMatrix, j: int) -> list[int]:
    """Rows i != j whose entry in column j is nonzero and differs from the diagonal."""
    diag = m[j, j]
    return [i for i in range(m.rows) if i != j and m[i, j].is_nonzero and m[i, j] is not diag]


def find_cycle_witness(m: SignMatrix) -> Optional[tuple[int, ...]]:
    """Connect-the-dots loop through a matrix with a +/- diagonal.

    If every column has an off-diagonal nonzero entry unlike its diagonal
    entry, start at index 0 and repeatedly step from column ``i`` to the least
    such row; the walk must revisit an index, and the indices from the first
    visit to the revisit are returned (0-based). Consecutive indices
    ``i_j, i_{j+1}`` mark the entry ``m[i_{j+1}, i_j]``. Returns ``None`` when
    some column has no such entry, in which case that column is uniform.
    """
    _check_diagonal(m)
    steps = []
    for j in range(m.cols):
        rows = _breaking_rows(m, j)
        if not rows:
            return None
        steps.append(rows[0])
    path = [0]
    position = {0: 0}
    while True:
        nxt = steps[path[-1]]
        if nxt in position:
            return tuple(path[position[nxt]:])
        position[nxt] = len(path)
        path.append(nxt)


def verify_cycle_contradiction(m: SignMatrix, cycle: Sequence[int]) -> bool:
    """Check the loop gives a summand of the opposite sign to the diagonal one.

    With ``tau(i_j) = i_{j+1}``, compares ``sign(tau) * prod_i m[tau(i), i]``
    against ``-prod_i m[i, i]``. Both must be + or -; a ``*`` on the loop
    makes the check fail.
    """
    _check_diagonal(m)
    if len(cycle) < 2:
        raise InputError("a cycle witness needs at least two indices")
    tau = cycle_permutation(m.rows, cycle)
    diagonal = sign_mul(perm_sign(range(m.rows)), sign_product(m[i, i] for i in range(m.rows)))
    looped = sign_mul(perm_sign(tau), sign_product(m[tau[i], i] for i in range(m.rows)))
    if looped not in (Sign.PLUS, Sign.MINUS):
        return False
    return looped is sign_mul(Sign.MINUS, diagonal)


def cycle_entries(cycle: Sequence[int]) -> list[tuple[int, int]]:
    """Positions ``(i_{j+1}, i_j)`` visited by a cycle witness, 0-based."""
    k = len(cycle)
    return [(cycle[(j + 1) % k], cycle[j]) for j in range(k)]
