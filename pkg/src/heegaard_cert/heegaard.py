"""Heegaard diagrams reduced to signed intersection words.

A genus-g diagram is stored as one cyclic word per beta curve listing the
alpha curves it crosses, in order, with the local intersection sign of each
crossing. Everything computed here (the group presentation, Floer
generators and their gradings, the order of H_1) depends only on that data.
Whether the words can be realised by curves on a surface is not checked.

Indices are 0-based in Python and 1-based in the file format.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Iterator, NamedTuple, Optional, Sequence

from heegaard_cert.errors import InputError, ResourceLimitError
from heegaard_cert.intmat import bareiss_det
from heegaard_cert.presentation import Letter, Presentation
from heegaard_cert.signs import perm_sign, Sign

DEFAULT_MAX_GENERATORS = 10**6


class IntersectionPoint(NamedTuple):
    alpha: int
    sign: int


@dataclass(frozen=True)
class HeegaardDiagram:
    genus: int
    beta_words: tuple[tuple[IntersectionPoint, ...], ...]
    label: Optional[str] = field(default=None, compare=False)

    def __post_init__(self) -> None:
        if not isinstance(self.genus, int) or self.genus < 1:
            raise InputError(f"genus must be a positive integer, got {self.genus!r}")
        words = tuple(tuple(IntersectionPoint(*p) for p in w) for w in self.beta_words)
        if len(words) != self.genus:
            raise InputError(f"genus {self.genus} diagram needs {self.genus} beta words, got {len(words)}")
        for j, w in enumerate(words):
            for pos, p in enumerate(w):
                if not 0 <= p.alpha < self.genus:
                    raise InputError(f"beta {j + 1}, point {pos + 1}: alpha index {p.alpha + 1} out of range")
                if p.sign not in (1, -1):
                    raise InputError(f"beta {j + 1}, point {pos + 1}: sign must be 1 or -1, got {p.sign!r}")
        object.__setattr__(self, "beta_words", words)

    @classmethod
    def from_lists(cls, words: Sequence[Sequence[tuple[int, int]]], label: Optional[str] = None) -> "HeegaardDiagram":
        """Build from 1-based ``(alpha, sign)`` pairs, as written in diagram files."""
        return cls(len(words), tuple(tuple(IntersectionPoint(a - 1, s) for a, s in w) for w in words), label)

    def to_dict(self) -> dict:
        data: dict = {
            "genus": self.genus,
            "beta": [[[p.alpha + 1, p.sign] for p in w] for w in self.beta_words],
        }
        if self.label is not None:
            data["label"] = self.label
        return data

    @classmethod
    def from_dict(cls, data: object) -> "HeegaardDiagram":
        if not isinstance(data, dict) or "genus" not in data or "beta" not in data:
            raise InputError("diagram must be an object with 'genus' and 'beta' fields")
        genus, beta = data["genus"], data["beta"]
        if isinstance(genus, bool) or not isinstance(genus, int):
            raise InputError("'genus' must be an integer")
        if not isinstance(beta, list) or not all(isinstance(w, list) for w in beta):
            raise InputError("'beta' must be a list of lists of [alpha, sign] pairs")
        words = []
        for j, w in enumerate(beta):
            pts = []
            for p in w:
                if (
                    not isinstance(p, list)
                    or len(p) != 2
                    or not all(isinstance(x, int) and not isinstance(x, bool) for x in p)
                ):
                    raise InputError(f"beta {j + 1}: each point must be an [alpha, sign] pair of integers")
                pts.append((p[0], p[1]))
            words.append(pts)
        label = data.get("label")
        if len(words) != genus:
            raise InputError(f"genus {genus} diagram needs {genus} beta words, got {len(words)}")
        return cls.from_lists(words, label=label if isinstance(label, str) else None)

    def dumps(self) -> str:
        return json.dumps(self.to_dict()) + "\n"

    @classmethod
    def loads(cls, text: str) -> "HeegaardDiagram":
        try:
            data = json.loads(text)
        except json.JSONDecodeError as exc:
            raise InputError(f"diagram file is not valid JSON: {exc}") from None
        return cls.from_dict(data)


def presentation_of(h: HeegaardDiagram) -> Presentation:
    """One generator per alpha curve, one relator per beta word read in stored order."""
    return Presentation(
        h.genus, tuple(tuple(Letter(p.alpha, p.sign) for p in w) for w in h.beta_words)
    )


def count_matrix(h: HeegaardDiagram) -> list[list[int]]:
    """``C[i][j]`` = number of points of alpha i on beta j."""
    c = [[0] * h.genus for _ in range(h.genus)]
    for j, w in enumerate(h.beta_words):
        for p in w:
            c[p.alpha][j] += 1
    return c


def algebraic_matrix(h: HeegaardDiagram) -> list[list[int]]:
    """``A[i][j]`` = signed count of points of alpha i on beta j."""
    a = [[0] * h.genus for _ in range(h.genus)]
    for j, w in enumerate(h.beta_words):
        for p in w:
            a[p.alpha][j] += p.sign
    return a


def h1_order(h: HeegaardDiagram) -> Optional[int]:
    """``|H_1(Y)|`` as ``|det A|``, or ``None`` when ``det A = 0`` (positive first Betti number)."""
    d = bareiss_det(algebraic_matrix(h))
    return abs(d) if d != 0 else None


@dataclass(frozen=True)
class Generator:
    """A tuple of intersection points, one on each alpha and each beta curve.

    Point ``i`` is ``beta_words[sigma[i]][choices[i]]`` and lies on alpha ``i``.
    """

    sigma: tuple[int, ...]
    choices: tuple[int, ...]
    grading: int

    def points(self, h: HeegaardDiagram) -> list[IntersectionPoint]:
        return [h.beta_words[j][pos] for j, pos in zip(self.sigma, self.choices)]


def _positions(h: HeegaardDiagram) -> list[list[list[int]]]:
    pos = [[[] for _ in range(h.genus)] for _ in range(h.genus)]
    for j, w in enumerate(h.beta_words):
        for k, p in enumerate(w):
            pos[p.alpha][j].append(k)
    return pos


def iter_generators(h: HeegaardDiagram) -> Iterator[Generator]:
    """Generators ordered lexicographically by sigma, then by point positions."""
    g = h.genus
    pos = _positions(h)
    used = [False] * g
    sigma: list[int] = []
    choice: list[int] = []

    def choose_points(i: int, sign: int) -> Iterator[Generator]:
        if i == g:
            yield Generator(tuple(sigma), tuple(choice), sign)
            return
        word = h.beta_words[sigma[i]]
        for k in pos[i][sigma[i]]:
            choice.append(k)
            yield from choose_points(i + 1, sign * word[k].sign)
            choice.pop()

    def choose_sigma(i: int) -> Iterator[Generator]:
        if i == g:
            base = 1 if perm_sign(sigma) is Sign.PLUS else -1
            yield from choose_points(0, base)
            return
        for j in range(g):
            if used[j] or not pos[i][j]:
                continue
            used[j] = True
            sigma.append(j)
            yield from choose_sigma(i + 1)
            sigma.pop()
            used[j] = False

    return choose_sigma(0)


def generators(h: HeegaardDiagram, cap: int = DEFAULT_MAX_GENERATORS) -> list[Generator]:
    out = []
    for gen in iter_generators(h):
        if len(out) >= cap:
            raise ResourceLimitError(f"more than {cap} generators")
        out.append(gen)
    return out


def euler_characteristic(h: HeegaardDiagram, cap: int = DEFAULT_MAX_GENERATORS) -> int:
    return sum(gen.grading for gen in generators(h, cap))


@dataclass(frozen=True)
class StrongReport:
    """Strongness of a single diagram. ``h1_order`` is ``None`` when b_1 > 0."""

    h1_order: Optional[int]
    generator_count: int
    gradings_uniform: bool
    is_strong: bool
    euler_characteristic: int

    def to_dict(self) -> dict:
        return {
            "h1_order": "b1 positive" if self.h1_order is None else self.h1_order,
            "generator_count": self.generator_count,
            "gradings_uniform": self.gradings_uniform,
            "is_strong": self.is_strong,
            "euler_characteristic": self.euler_characteristic,
        }

    @classmethod
    def from_dict(cls, data: dict) -> "StrongReport":
        h1 = data["h1_order"]
        return cls(
            h1_order=None if h1 == "b1 positive" else h1,
            generator_count=data["generator_count"],
            gradings_uniform=data["gradings_uniform"],
            is_strong=data["is_strong"],
            euler_characteristic=data["euler_characteristic"],
        )


def strong_report(h: HeegaardDiagram, gens: Sequence[Generator]) -> StrongReport:
    h1 = h1_order(h)
    gradings = {gen.grading for gen in gens}
    uniform = len(gradings) <= 1
    return StrongReport(
        h1_order=h1,
        generator_count=len(gens),
        gradings_uniform=uniform,
        is_strong=h1 is not None and len(gens) == h1 and uniform,
        euler_characteristic=sum(gen.grading for gen in gens),
    )


def is_strong(h: HeegaardDiagram, cap: int = DEFAULT_MAX_GENERATORS) -> StrongReport:
    """Is the Floer chain group of ``h`` free of rank ``|H_1|``?"""
    return strong_report(h, generators(h, cap))


def gen_lens(p: int, q: Optional[int] = None) -> HeegaardDiagram:
    """Standard genus-1 diagram of L(p, q): the beta curve meets alpha p times, all positively.

    ``q`` does not change the word data and is kept only in the label.
    ``p = 1`` gives the one-point diagram of S^3.
    """
    if isinstance(p, bool) or not isinstance(p, int) or p < 1:
        raise InputError(f"lens space parameter p must be a positive integer, got {p!r}")
    label = f"L({p},{q})" if q is not None else ("S3" if p == 1 else f"L({p})")
    return HeegaardDiagram(1, ((IntersectionPoint(0, 1),) * p,), label=label)


def flip_alpha_orientation(h: HeegaardDiagram, i: int) -> HeegaardDiagram:
    if not 0 <= i < h.genus:
        raise InputError(f"alpha index {i + 1} out of range for genus {h.genus}")
    return HeegaardDiagram(
        h.genus,
        tuple(tuple(IntersectionPoint(p.alpha, -p.sign if p.alpha == i else p.sign) for p in w) for w in h.beta_words),
        label=h.label,
    )


def rotate_beta(h: HeegaardDiagram, j: int, k: int) -> HeegaardDiagram:
    """Start beta word ``j`` ``k`` points later; the cyclic word is unchanged."""
    words = list(h.beta_words)
    w = words[j]
    if w:
        k %= len(w)
        words[j] = w[k:] + w[:k]
    return HeegaardDiagram(h.genus, tuple(words), label=h.label)
