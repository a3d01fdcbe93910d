"""Formal words over labeled automorphism generators.

A word is a sequence of (label, +1/-1) letters over a generator table;
evaluation is ordered composition with the first letter outermost, so
evaluate(uv) = compose(evaluate(u), evaluate(v)).
"""

from __future__ import annotations

from typing import Mapping, Sequence

from .automorphisms import TriangularAutomorphism, compose, identity, invert


class GroupWord:
    """An evaluable word; the generator table is shared, not copied."""

    __slots__ = ("letters", "generators", "n")

    def __init__(self, letters: Sequence[tuple[str, int]],
                 generators: Mapping[str, TriangularAutomorphism],
                 n: int | None = None):
        letters = tuple((label, exp) for label, exp in letters)
        for label, exp in letters:
            if exp not in (1, -1):
                raise ValueError(f"letter exponent must be +1 or -1, got {exp}")
            if label not in generators:
                raise KeyError(f"unknown generator label {label!r}")
        dims = {g.n for g in generators.values()}
        if len(dims) > 1:
            raise ValueError(f"generators have mixed dimensions {sorted(dims)}")
        if dims:
            table_n = dims.pop()
            if n is not None and n != table_n:
                raise ValueError(f"n={n} conflicts with generator dimension {table_n}")
            n = table_n
        elif n is None:
            raise ValueError("empty generator table needs an explicit n")
        self.letters = letters
        self.generators = dict(generators)
        self.n = n

    def __len__(self) -> int:
        return len(self.letters)

    def __eq__(self, other) -> bool:
        if not isinstance(other, GroupWord):
            return NotImplemented
        return (self.letters == other.letters and self.n == other.n
                and self.generators == other.generators)

    def __repr__(self) -> str:
        body = " ".join(l if e == 1 else f"{l}^-1" for l, e in self.letters)
        return f"GroupWord({body or 'empty'})"


def evaluate(word: GroupWord) -> TriangularAutomorphism:
    """Ordered composition of the word's letters; empty word is the identity."""
    inverses: dict[str, TriangularAutomorphism] = {}
    result = identity(word.n)
    for label, exp in reversed(word.letters):
        if exp == 1:
            g = word.generators[label]
        else:
            g = inverses.get(label)
            if g is None:
                g = invert(word.generators[label])
                inverses[label] = g
        result = compose(g, result)
    return result


def concat(u: GroupWord, v: GroupWord) -> GroupWord:
    """Concatenation uv; shared labels must agree."""
    if u.n != v.n:
        raise ValueError(f"dimension mismatch: {u.n} vs {v.n}")
    merged = dict(u.generators)
    for label, g in v.generators.items():
        if label in merged and merged[label] != g:
            raise ValueError(f"label {label!r} bound to different generators")
        merged[label] = g
    return GroupWord(u.letters + v.letters, merged, n=u.n)
