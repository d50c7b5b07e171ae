"""Sign arithmetic on {0, +, -, *} and sign matrices.

``*`` stands for a quantity whose sign is unknown. Signs multiply but are
never added: a formal determinant is classified by the set of signs its
nonzero summands take, not summed.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Iterable, Iterator, Optional, Sequence

from heegaard_cert.errors import InputError, ResourceLimitError

DEFAULT_MAX_PERM_N = 12


class Sign(enum.Enum):
    ZERO = "0"
    PLUS = "+"
    MINUS = "-"
    STAR = "*"

    def __str__(self) -> str:
        return self.value

    def __mul__(self, other: "Sign") -> "Sign":
        return sign_mul(self, other)

    @property
    def is_nonzero(self) -> bool:
        return self is not Sign.ZERO

    @classmethod
    def parse(cls, token: str) -> "Sign":
        try:
            return cls(token)
        except ValueError:
            raise InputError(f"not a sign symbol: {token!r}") from None

    @classmethod
    def of_int(cls, value: int) -> "Sign":
        if value > 0:
            return cls.PLUS
        if value < 0:
            return cls.MINUS
        return cls.ZERO


def sign_mul(a: Sign, b: Sign) -> Sign:
    if a is Sign.ZERO or b is Sign.ZERO:
        return Sign.ZERO
    if a is Sign.STAR or b is Sign.STAR:
        return Sign.STAR
    return Sign.PLUS if a is b else Sign.MINUS


def sign_product(seq: Iterable[Sign]) -> Sign:
    result = Sign.PLUS
    for s in seq:
        result = sign_mul(result, s)
    return result


def _check_permutation(sigma: Sequence[int]) -> None:
    if sorted(sigma) != list(range(len(sigma))):
        raise InputError(f"not a permutation of 0..{len(sigma) - 1}: {tuple(sigma)!r}")


def perm_sign(sigma: Sequence[int]) -> Sign:
    """Sign of a permutation given in one-line form, ``sigma[i]`` the image of ``i``.

    Indices are 0-based. Raises :class:`InputError` for non-bijections.
    """
    _check_permutation(sigma)
    seen = [False] * len(sigma)
    cycles = 0
    for start in range(len(sigma)):
        if seen[start]:
            continue
        cycles += 1
        i = start
        while not seen[i]:
            seen[i] = True
            i = sigma[i]
    return Sign.PLUS if (len(sigma) - cycles) % 2 == 0 else Sign.MINUS


def cycle_permutation(n: int, cycle: Sequence[int]) -> tuple[int, ...]:
    """One-line form of the cycle ``cycle[0] -> cycle[1] -> ... -> cycle[0]`` in S_n."""
    if len(set(cycle)) != len(cycle) or any(not 0 <= i < n for i in cycle):
        raise InputError(f"malformed cycle {tuple(cycle)!r} in S_{n}")
    sigma = list(range(n))
    for j, i in enumerate(cycle):
        sigma[i] = cycle[(j + 1) % len(cycle)]
    return tuple(sigma)


@dataclass(frozen=True)
class SignMatrix:
    """Rectangular grid of signs, stored row-major."""

    rows: int
    cols: int
    entries: tuple[Sign, ...]

    def __post_init__(self) -> None:
        if self.rows < 0 or self.cols < 0:
            raise InputError("matrix dimensions must be nonnegative")
        if len(self.entries) != self.rows * self.cols:
            raise InputError(
                f"{self.rows}x{self.cols} matrix needs {self.rows * self.cols} entries, got {len(self.entries)}"
            )

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[Sign | str]], cols: Optional[int] = None) -> "SignMatrix":
        grid = [[s if isinstance(s, Sign) else Sign.parse(s) for s in row] for row in rows]
        width = cols if cols is not None else (len(grid[0]) if grid else 0)
        for row in grid:
            if len(row) != width:
                raise InputError("rows of a sign matrix must have equal length")
        return cls(len(grid), width, tuple(s for row in grid for s in row))

    def __getitem__(self, ij: tuple[int, int]) -> Sign:
        i, j = ij
        if not (0 <= i < self.rows and 0 <= j < self.cols):
            raise IndexError(ij)
        return self.entries[i * self.cols + j]

    @property
    def is_square(self) -> bool:
        return self.rows == self.cols

    def row(self, i: int) -> tuple[Sign, ...]:
        return self.entries[i * self.cols:(i + 1) * self.cols]

    def column(self, j: int) -> tuple[Sign, ...]:
        return tuple(self.entries[i * self.cols + j] for i in range(self.rows))

    def to_rows(self) -> list[list[Sign]]:
        return [list(self.row(i)) for i in range(self.rows)]

    def transpose(self) -> "SignMatrix":
        return SignMatrix(
            self.cols, self.rows, tuple(self[i, j] for j in range(self.cols) for i in range(self.rows))
        )

    def permuted(self, row_perm: Sequence[int], col_perm: Sequence[int]) -> "SignMatrix":
        """Matrix whose entry (i, j) is ``self[row_perm[i], col_perm[j]]``."""
        return SignMatrix(
            self.rows,
            self.cols,
            tuple(self[row_perm[i], col_perm[j]] for i in range(self.rows) for j in range(self.cols)),
        )

    def format(self) -> str:
        return "\n".join(" ".join(s.value for s in self.row(i)) for i in range(self.rows))

    def __str__(self) -> str:
        return self.format()

    @classmethod
    def parse(cls, text: str) -> "SignMatrix":
        """Parse the line format: one row per line, symbols separated by one space.

        Trailing newlines at the end of the text are tolerated; anything else
        irregular (double spaces, trailing blanks, ragged rows) is rejected.
        """
        body = text.rstrip("\n")
        if not body:
            raise InputError("empty sign matrix")
        grid = []
        for lineno, line in enumerate(body.split("\n"), start=1):
            line = line.removesuffix("\r")
            tokens = line.split(" ")
            if any(len(t) != 1 for t in tokens):
                raise InputError(f"line {lineno}: entries must be single symbols separated by one space")
            grid.append([Sign.parse(t) for t in tokens])
        try:
            return cls.from_rows(grid)
        except InputError as exc:
            raise InputError(f"sign matrix: {exc}") from None


@dataclass(frozen=True)
class DetClassification:
    """What the nonzero summands of a formal determinant look like.

    ``signs_seen`` only collects summands free of ``*``. ``conflict_witness``
    pairs the first summand of each sign, in the order they were met.
    """

    has_nonzero_summand: bool
    star_in_nonzero_summand: bool
    signs_seen: frozenset[Sign]
    witness_sigma0: Optional[tuple[int, ...]] = None
    star_witness: Optional[tuple[int, ...]] = None
    conflict_witness: Optional[tuple[tuple[int, ...], tuple[int, ...]]] = None


def nonzero_permutations(m: SignMatrix) -> Iterator[tuple[int, ...]]:
    """Yield, in lexicographic order, every sigma with all ``m[i, sigma[i]]`` nonzero."""
    n = m.rows
    used = [False] * n
    sigma: list[int] = []
    support = [[j for j in range(n) if m[i, j].is_nonzero] for i in range(n)]

    def extend(i: int) -> Iterator[tuple[int, ...]]:
        if i == n:
            yield tuple(sigma)
            return
        for j in support[i]:
            if used[j]:
                continue
            used[j] = True
            sigma.append(j)
            yield from extend(i + 1)
            sigma.pop()
            used[j] = False

    return extend(0)


def summand_sign(m: SignMatrix, sigma: Sequence[int]) -> Sign:
    """``sign(sigma) * prod_i m[i, sigma[i]]``."""
    return sign_mul(perm_sign(sigma), sign_product(m[i, j] for i, j in enumerate(sigma)))


def classify_formal_det(
    m: SignMatrix, max_n: int = DEFAULT_MAX_PERM_N, exhaustive: bool = False
) -> DetClassification:
    """Classify the nonzero summands of the formal determinant of a square sign matrix.

    Permutations are enumerated row by row, skipping zero entries. Unless
    ``exhaustive`` is set, enumeration stops as soon as a ``*`` summand is
    found or both signs have appeared, since either settles the orderability
    criterion. Witnesses are the lexicographically first permutations with
    the relevant property among those visited.
    """
    if not m.is_square:
        raise InputError(f"formal determinant needs a square matrix, got {m.rows}x{m.cols}")
    if m.rows > max_n:
        raise ResourceLimitError(f"matrix size {m.rows} exceeds permutation cap {max_n}")

    sigma0 = None
    star_witness = None
    first_by_sign: dict[Sign, tuple[int, ...]] = {}
    for sigma in nonzero_permutations(m):
        if sigma0 is None:
            sigma0 = sigma
        s = summand_sign(m, sigma)
        if s is Sign.STAR:
            if star_witness is None:
                star_witness = sigma
        elif s not in first_by_sign:
            first_by_sign[s] = sigma
        if not exhaustive and (star_witness is not None or len(first_by_sign) == 2):
            break

    conflict = None
    if len(first_by_sign) == 2:
        a, b = first_by_sign.values()
        conflict = (a, b)
    return DetClassification(
        has_nonzero_summand=sigma0 is not None,
        star_in_nonzero_summand=star_witness is not None,
        signs_seen=frozenset(first_by_sign),
        witness_sigma0=sigma0,
        star_witness=star_witness,
        conflict_witness=conflict,
    )
