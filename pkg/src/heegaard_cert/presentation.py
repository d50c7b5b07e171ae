"""Finite presentations with relators written as literal signed words."""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import NamedTuple, Sequence

from heegaard_cert.errors import InputError
from heegaard_cert.signs import Sign, SignMatrix

# A line holding only this token is the empty relator.
EMPTY_WORD_TOKEN = "1"

_TOKEN = re.compile(r"g([1-9][0-9]*)(\^-1)?")


class Letter(NamedTuple):
    generator: int  # 0-based
    exponent: int  # +1 or -1

    def inverse(self) -> "Letter":
        return Letter(self.generator, -self.exponent)

    def format(self) -> str:
        return f"g{self.generator + 1}" + ("^-1" if self.exponent < 0 else "")


Word = tuple[Letter, ...]


def word(*pairs: tuple[int, int]) -> Word:
    """Build a word from ``(generator, exponent)`` pairs, generators 0-based."""
    return tuple(Letter(g, e) for g, e in pairs)


def invert_word(w: Sequence[Letter]) -> Word:
    return tuple(letter.inverse() for letter in reversed(w))


def word_is_trivial_free_reduction(w: Sequence[Letter]) -> bool:
    stack: list[Letter] = []
    for letter in w:
        if stack and stack[-1] == letter.inverse():
            stack.pop()
        else:
            stack.append(letter)
    return not stack


@dataclass(frozen=True)
class Presentation:
    """``<x_1..x_m | r_1..r_n>``; words are kept exactly as written, never reduced."""

    num_generators: int
    relators: tuple[Word, ...] = ()

    def __post_init__(self) -> None:
        if self.num_generators < 0:
            raise InputError("generator count must be nonnegative")
        relators = tuple(tuple(Letter(*letter) for letter in r) for r in self.relators)
        for j, r in enumerate(relators):
            for letter in r:
                if not 0 <= letter.generator < self.num_generators:
                    raise InputError(f"relator {j + 1}: generator index {letter.generator + 1} out of range")
                if letter.exponent not in (1, -1):
                    raise InputError(f"relator {j + 1}: exponent must be +1 or -1, got {letter.exponent}")
        object.__setattr__(self, "relators", relators)

    def format(self) -> str:
        lines = [f"gens {self.num_generators}"]
        for r in self.relators:
            lines.append(" ".join(letter.format() for letter in r) if r else EMPTY_WORD_TOKEN)
        return "\n".join(lines) + "\n"

    @classmethod
    def parse(cls, text: str) -> "Presentation":
        lines = [line.strip() for line in text.splitlines()]
        lines = [line for line in lines if line]
        if not lines:
            raise InputError("empty presentation")
        head = lines[0].split()
        if len(head) != 2 or head[0] != "gens" or not head[1].isdigit():
            raise InputError(f"first line must be 'gens <m>', got {lines[0]!r}")
        m = int(head[1])
        relators = []
        for lineno, line in enumerate(lines[1:], start=2):
            if line == EMPTY_WORD_TOKEN:
                relators.append(())
                continue
            letters = []
            for token in line.split():
                match = _TOKEN.fullmatch(token)
                if match is None:
                    raise InputError(f"line {lineno}: bad token {token!r}")
                letters.append(Letter(int(match.group(1)) - 1, -1 if match.group(2) else 1))
            relators.append(tuple(letters))
        try:
            return cls(m, tuple(relators))
        except InputError as exc:
            raise InputError(f"presentation: {exc}") from None


def epsilon_matrix(p: Presentation) -> SignMatrix:
    """Sign matrix of a presentation: rows are generators, columns relators.

    Entry (i, j) records which exponents of generator i occur in relator j
    as written: none (0), only +1 (+), only -1 (-), or both (*).
    """
    n = len(p.relators)
    seen = [[set() for _ in range(n)] for _ in range(p.num_generators)]
    for j, r in enumerate(p.relators):
        for letter in r:
            seen[letter.generator][j].add(letter.exponent)

    def entry(exps: set[int]) -> Sign:
        if not exps:
            return Sign.ZERO
        if len(exps) == 2:
            return Sign.STAR
        return Sign.PLUS if 1 in exps else Sign.MINUS

    return SignMatrix(p.num_generators, n, tuple(entry(seen[i][j]) for i in range(p.num_generators) for j in range(n)))
