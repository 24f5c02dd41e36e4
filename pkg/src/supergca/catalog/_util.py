"""Helpers shared by the table builders."""

from __future__ import annotations

import itertools
from collections.abc import Iterable, Sequence
from dataclasses import dataclass, field

from ..exactmath import BaseNumber, as_scalar
from ..salg import EVEN, ODD, BracketTable, Generator, LinComb, SplitSpec, StarStructure

HALF = BaseNumber(1) / 2
I = BaseNumber(0, 1)


class Family:
    """Indexed generator family, e.g. ``R[a,b]`` symmetric in (a, b).

    ``sym`` lists slot pairs over which labels are symmetric; ``anti`` lists
    antisymmetric pairs (diagonal components vanish, reversed order flips sign).
    """

    def __init__(
        self,
        name: str,
        ranges: Sequence[Iterable[int]],
        odd: bool = False,
        sym: Sequence[tuple[int, int]] = (),
        anti: Sequence[tuple[int, int]] = (),
        skip: Iterable[tuple] = (),
    ):
        self.name = name
        self.parity = ODD if odd else EVEN
        self.ranges = [tuple(r) for r in ranges]
        self.sym = tuple(sym)
        self.anti = tuple(anti)
        skip = set(skip)
        seen = []
        for labels in itertools.product(*self.ranges):
            canon, sign = self._canon(labels)
            if sign and canon == labels and labels not in skip:
                seen.append(labels)
        self.gens = [Generator(name, lab, self.parity) for lab in seen]
        self._set = set(self.gens)

    def _canon(self, labels: tuple) -> tuple[tuple, int]:
        lab = list(labels)
        sign = 1
        for i, j in self.sym:
            if lab[i] > lab[j]:
                lab[i], lab[j] = lab[j], lab[i]
        for i, j in self.anti:
            if lab[i] == lab[j]:
                return tuple(lab), 0
            if lab[i] > lab[j]:
                lab[i], lab[j] = lab[j], lab[i]
                sign = -sign
        return tuple(lab), sign

    def __call__(self, *labels, coef=1) -> LinComb:
        canon, sign = self._canon(tuple(labels))
        if not sign:
            return LinComb()
        g = Generator(self.name, canon, self.parity)
        if g not in self._set:
            return LinComb()
        return LinComb.of(g, as_scalar(coef) * sign)

    def __contains__(self, g: Generator) -> bool:
        return g in self._set

    def __iter__(self):
        return iter(self.gens)

    def __len__(self) -> int:
        return len(self.gens)


def eps(a: int, b: int) -> int:
    return 0 if a == b else (1 if a < b else -1)


def epsu(a: int, b: int) -> int:
    return -eps(a, b)


def lsum(parts: Iterable[LinComb]) -> LinComb:
    out = LinComb()
    for p in parts:
        if p:
            out = out + p
    return out


@dataclass
class AlgebraCase:
    """A built table plus everything the checks need."""

    id: str
    family: str
    table: BracketTable
    params: dict = field(default_factory=dict)
    star: StarStructure | None = None
    splits: list = field(default_factory=list)  # (name, SplitSpec, mode)
    expected: dict = field(default_factory=dict)
    notes: list = field(default_factory=list)
    deviations: list = field(default_factory=list)
    extra: dict = field(default_factory=dict)


def split_by_family(t: BracketTable, plus: Iterable[str]) -> SplitSpec:
    return SplitSpec.by_names(t, plus)


def is_zero_lc(x: LinComb) -> bool:
    return not x
