"""Dowker-Thistlethwaite codes.

A DT code of an ``n``-crossing knot diagram lists, for the odd traversal
labels ``1, 3, ..., 2n-1``, the even label met at the same crossing.  An
even label is negative when that visit passes under the other strand.

Everything here is a pure function of immutable values.
"""

from __future__ import annotations

import enum
import re
from dataclasses import dataclass
from typing import Iterable, Sequence

__all__ = [
    "DtError",
    "DtSyntaxError",
    "OddValue",
    "OutOfRange",
    "DuplicateLabel",
    "DtCode",
    "Visit",
    "OverUnderSequence",
    "Pairing",
    "parse_dt",
    "over_under_sequence",
    "diagram_bridges",
    "pairing",
    "relabelings",
    "canonicalize",
]


class DtError(ValueError):
    """Base class for malformed DT codes."""


class DtSyntaxError(DtError):
    """A token is not an integer."""


class OddValue(DtError):
    """An odd integer appears in the code."""


class OutOfRange(DtError):
    """Some ``|v|`` is below 2 or above ``2n``."""


class DuplicateLabel(DtError):
    """Some ``|v|`` occurs more than once."""


_TOKEN_SPLIT = re.compile(r"[\s,()\[\]]+")


@dataclass(frozen=True)
class DtCode:
    """A validated DT code; ``values[i]`` is paired with odd label ``2i+1``."""

    values: tuple[int, ...]

    def __post_init__(self) -> None:
        values = tuple(int(v) for v in self.values)
        object.__setattr__(self, "values", values)
        n = len(values)
        if n == 0:
            raise DtError("a DT code needs at least one crossing")
        seen = set()
        for v in values:
            a = abs(v)
            if a % 2:
                raise OddValue(f"odd value {v} in DT code")
            if a < 2 or a > 2 * n:
                raise OutOfRange(f"|{v}| outside 2..{2 * n}")
            if a in seen:
                raise DuplicateLabel(f"label {a} repeated")
            seen.add(a)

    @classmethod
    def from_pairs(cls, partner: Sequence[int], under: Sequence[bool]) -> "DtCode":
        """Build a code from a 1-indexed involution and per-label under flags.

        ``partner[k]`` and ``under[k]`` are read for ``k = 1..2n``; index 0 is
        ignored.
        """
        m = len(partner) - 1
        values = []
        for odd in range(1, m, 2):
            even = partner[odd]
            if even % 2:
                raise OddValue(f"label {odd} is paired with odd label {even}")
            values.append(-even if under[even] else even)
        return cls(tuple(values))

    @property
    def n(self) -> int:
        return len(self.values)

    def __len__(self) -> int:
        return len(self.values)

    def __iter__(self):
        return iter(self.values)

    def __str__(self) -> str:
        return " ".join(str(v) for v in self.values)


class Visit(enum.Enum):
    OVER = "O"
    UNDER = "U"

    def __str__(self) -> str:
        return self.value


@dataclass(frozen=True)
class OverUnderSequence:
    """Over/under status of every traversal label; ``visits[k-1]`` is label ``k``."""

    visits: tuple[Visit, ...]

    def __getitem__(self, label: int) -> Visit:
        return self.visits[label - 1]

    def __len__(self) -> int:
        return len(self.visits)

    def __str__(self) -> str:
        return "".join(v.value for v in self.visits)

    def runs(self) -> list[tuple[Visit, int, int]]:
        """Maximal cyclic runs as ``(kind, first_label, length)``.

        A sequence of one kind only is a single run starting at label 1.
        """
        seq = self.visits
        m = len(seq)
        starts = [k for k in range(m) if seq[k] != seq[k - 1]]
        if not starts:
            return [(seq[0], 1, m)]
        out = []
        for idx, s in enumerate(starts):
            nxt = starts[(idx + 1) % len(starts)]
            length = (nxt - s) % m or m
            out.append((seq[s], s + 1, length))
        return out


@dataclass(frozen=True)
class Pairing:
    """Fixed-point-free involution on ``1..2n`` matching odd with even labels."""

    partner: tuple[int, ...]  # partner[0] is unused

    def __getitem__(self, label: int) -> int:
        return self.partner[label]

    def __len__(self) -> int:
        return len(self.partner) - 1

    def as_dict(self) -> dict[int, int]:
        return {k: self.partner[k] for k in range(1, len(self.partner))}


def _tokens(text: str) -> Iterable[str]:
    return (tok for tok in _TOKEN_SPLIT.split(text.strip()) if tok)


def parse_dt(text: str) -> DtCode:
    """Parse whitespace/comma separated signed even integers.

    Parentheses and brackets are ignored, so ``"(4, 6, 2)"``, ``"4,6,2"`` and
    ``"4 6 2"`` are the same code.

    >>> parse_dt("(4, 6, 2)").values
    (4, 6, 2)
    """
    if not text or not text.strip():
        raise DtSyntaxError("empty DT code")
    values = []
    for tok in _tokens(text):
        try:
            values.append(int(tok))
        except ValueError:
            raise DtSyntaxError(f"not an integer: {tok!r}") from None
    if not values:
        raise DtSyntaxError("empty DT code")
    return DtCode(tuple(values))


def pairing(code: DtCode) -> Pairing:
    partner = [0] * (2 * code.n + 1)
    for i, v in enumerate(code.values):
        odd, even = 2 * i + 1, abs(v)
        partner[odd] = even
        partner[even] = odd
    return Pairing(tuple(partner))


def _under_flags(code: DtCode) -> list[bool]:
    under = [False] * (2 * code.n + 1)
    for i, v in enumerate(code.values):
        odd, even = 2 * i + 1, abs(v)
        if v < 0:
            under[even] = True
        else:
            under[odd] = True
    return under


def over_under_sequence(code: DtCode) -> OverUnderSequence:
    """Per-label over/under pattern.

    A negative even entry marks the even visit as under, so its odd partner
    is over; a positive entry is the reverse.
    """
    under = _under_flags(code)
    return OverUnderSequence(
        tuple(Visit.UNDER if under[k] else Visit.OVER for k in range(1, 2 * code.n + 1))
    )


def diagram_bridges(code: DtCode) -> int:
    """Number of maximal cyclic runs of over-visits, i.e. the diagram's bridges."""
    seq = over_under_sequence(code).visits
    count = sum(
        1 for k in range(len(seq)) if seq[k] is Visit.OVER and seq[k - 1] is Visit.UNDER
    )
    # every crossing has one over visit, so an all-over sequence cannot occur
    return count


def relabelings(code: DtCode) -> list[DtCode]:
    """All codes of the same diagram: every start label, both directions.

    The list has ``4n`` entries (with repeats when the diagram has symmetry).
    Mirroring is not applied.
    """
    m = 2 * code.n
    part = pairing(code)
    under = _under_flags(code)
    out = []
    for reverse in (False, True):
        for s in range(m):
            if reverse:
                new = [0] + [((s - k) % m) + 1 for k in range(1, m + 1)]
            else:
                new = [0] + [((k - 1 - s) % m) + 1 for k in range(1, m + 1)]
            new_partner = [0] * (m + 1)
            new_under = [False] * (m + 1)
            for k in range(1, m + 1):
                new_partner[new[k]] = new[part[k]]
                new_under[new[k]] = under[k]
            out.append(DtCode.from_pairs(new_partner, new_under))
    return out


def canonicalize(code: DtCode) -> DtCode:
    """Lexicographically least code over all start points and orientations."""
    return min(relabelings(code), key=lambda c: c.values)
