"""Rational tangles, Montesinos knots and 2-bridge classification.

Continued fractions are written ``[a1, ..., ak]`` with value
``ak + 1/(a(k-1) + 1/(... + 1/a1))``; ``ak`` is the last twist added.
Expansions truncate toward zero, so every term of a fraction's expansion
has the same sign and the twist diagram is alternating.

Montesinos knots are the numerator closure of ``[a0] + R1 + ... + Rr``
where ``Ri`` is the rational tangle whose fraction is the printed value
``bi/ai``.
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .dt import DtCode
from .realize import PlanarDiagram, realize

__all__ = [
    "ContinuedFractionError",
    "NotAKnot",
    "RuleNotApplicable",
    "MontesinosForm",
    "parse_fraction",
    "parse_montesinos",
    "cf_to_fraction",
    "fraction_to_cf",
    "TangleDiagram",
    "rational_tangle",
    "rational_knot_code",
    "rational_knot",
    "montesinos_code",
    "montesinos_diagram",
    "montesinos_bridge_index",
    "two_bridge_equivalent",
    "schubert_normal_form",
    "two_bridge_fraction",
]


class ContinuedFractionError(ZeroDivisionError):
    """A nested partial quotient evaluated to zero."""


class NotAKnot(ValueError):
    """The closure has more than one component."""


class RuleNotApplicable(ValueError):
    """The bridge-index rule needs at least three non-integer tangles."""


def parse_fraction(text: str) -> Fraction:
    """``"p/q"`` or ``"p"``; whitespace tolerant."""
    try:
        return Fraction(text.replace(" ", ""))
    except (ValueError, ZeroDivisionError):
        raise ValueError(f"not a fraction: {text!r}") from None


# -- continued fractions -------------------------------------------------

def cf_to_fraction(terms: Sequence[int]) -> Fraction:
    if not terms:
        raise ValueError("empty continued fraction")
    value = Fraction(terms[0])
    for a in terms[1:]:
        if value == 0:
            raise ContinuedFractionError(f"division by zero in {list(terms)}")
        value = a + 1 / value
    return value


def fraction_to_cf(f: Fraction | int) -> list[int]:
    """Expansion with ``cf_to_fraction(fraction_to_cf(f)) == f``.

    >>> fraction_to_cf(Fraction(2, 3))
    [2, 1, 0]
    """
    f = Fraction(f)
    out = []
    while True:
        a = math.trunc(f)
        out.append(a)
        rest = f - a
        if rest == 0:
            break
        f = 1 / rest
    out.reverse()
    return out


# -- tangle diagrams -------------------------------------------------------

class TangleDiagram:
    """Combinatorial 4-ended tangle diagram.

    Crossings have four ports, numbered counterclockwise SW, SE, NE, NW; the
    strands through a crossing join opposite ports.  ``over[c]`` is 0 when
    the SW-NE strand is on top, 1 for SE-NW.  Plain nodes that are not ports
    ("joints") let crossing-free arcs exist.
    """

    def __init__(self):
        self._next = 0
        self.port_of: dict[int, tuple[int, int]] = {}  # node -> (crossing, port)
        self.crossings: list[tuple[int, int, int, int]] = []
        self.over: list[int] = []
        self.edges: list[tuple[int, int]] = []
        self.ends: dict[str, int] = {}

    def _node(self) -> int:
        self._next += 1
        return self._next

    def _crossing(self, over: int) -> tuple[int, int, int, int]:
        c = len(self.crossings)
        ports = tuple(self._node() for _ in range(4))
        for p, node in enumerate(ports):
            self.port_of[node] = (c, p)
        self.crossings.append(ports)  # type: ignore[arg-type]
        self.over.append(over)
        return ports  # type: ignore[return-value]

    @classmethod
    def zero(cls) -> "TangleDiagram":
        t = cls()
        nw, ne, sw, se = (t._node() for _ in range(4))
        t.edges += [(nw, ne), (sw, se)]
        t.ends = {"NW": nw, "NE": ne, "SW": sw, "SE": se}
        return t

    @classmethod
    def infinity(cls) -> "TangleDiagram":
        t = cls()
        nw, ne, sw, se = (t._node() for _ in range(4))
        t.edges += [(nw, sw), (ne, se)]
        t.ends = {"NW": nw, "NE": ne, "SW": sw, "SE": se}
        return t

    def twist_horizontal(self, count: int) -> None:
        """Add ``|count|`` crossings on the right; the fraction grows by ``count``."""
        over = 0 if count > 0 else 1
        for _ in range(abs(count)):
            sw, se, ne, nw = self._crossing(over)
            self.edges += [(self.ends["NE"], nw), (self.ends["SE"], sw)]
            self.ends["NE"], self.ends["SE"] = ne, se

    def twist_vertical(self, count: int) -> None:
        """Add ``|count|`` crossings below; ``1/fraction`` grows by ``count``."""
        over = 0 if count > 0 else 1
        for _ in range(abs(count)):
            sw, se, ne, nw = self._crossing(over)
            self.edges += [(self.ends["SW"], nw), (self.ends["SE"], ne)]
            self.ends["SW"], self.ends["SE"] = sw, se

    def add(self, other: "TangleDiagram") -> None:
        """Tangle sum: place ``other`` to the right of ``self``."""
        offset = self._next
        for a, b in other.edges:
            self.edges.append((a + offset, b + offset))
        for ports, over in zip(other.crossings, other.over):
            c = len(self.crossings)
            ports = tuple(p + offset for p in ports)
            for p, node in enumerate(ports):
                self.port_of[node] = (c, p)
            self.crossings.append(ports)  # type: ignore[arg-type]
            self.over.append(over)
        self._next += other._next
        self.edges += [
            (self.ends["NE"], other.ends["NW"] + offset),
            (self.ends["SE"], other.ends["SW"] + offset),
        ]
        self.ends["NE"] = other.ends["NE"] + offset
        self.ends["SE"] = other.ends["SE"] + offset

    def numerator_closure_code(self) -> DtCode:
        """DT code of ``N(T)``: join NW-NE and SW-SE, then traverse."""
        edges = self.edges + [
            (self.ends["NW"], self.ends["NE"]),
            (self.ends["SW"], self.ends["SE"]),
        ]
        return _dt_from_closed_diagram(self.crossings, self.over, self.port_of, edges)

    @property
    def crossing_count(self) -> int:
        return len(self.crossings)


def _dt_from_closed_diagram(crossings, over, port_of, edges) -> DtCode:
    n = len(crossings)
    if n == 0:
        raise NotAKnot("closure has no crossings")
    incident: dict[int, list[tuple[int, int]]] = {}
    for idx, (a, b) in enumerate(edges):
        incident.setdefault(a, []).append((b, idx))
        incident.setdefault(b, []).append((a, idx))
    used = [False] * len(edges)
    visits: list[tuple[int, bool]] = []  # (crossing, passes over)
    c, p = 0, 0
    while True:
        visits.append((c, over[c] == p % 2))
        node = crossings[c][(p + 2) % 4]
        (node, idx), = incident[node]
        used[idx] = True
        while node not in port_of:
            # a joint: leave by its other edge
            (a, ia), (b, ib) = incident[node]
            node, idx = (b, ib) if ia == idx else (a, ia)
            used[idx] = True
        c, p = port_of[node]
        if (c, p) == (0, 0):
            break
    if len(visits) != 2 * n or not all(used):
        raise NotAKnot("closure has more than one component")
    labels: dict[int, list[int]] = {}
    for k, (cr, _) in enumerate(visits, start=1):
        labels.setdefault(cr, []).append(k)
    partner = [0] * (2 * n + 1)
    under = [False] * (2 * n + 1)
    for k1, k2 in labels.values():
        partner[k1], partner[k2] = k2, k1
    for k, (_, is_over) in enumerate(visits, start=1):
        under[k] = not is_over
    return DtCode.from_pairs(partner, under)


def rational_tangle(f: Fraction | int) -> TangleDiagram:
    """Twist diagram for the expansion of ``f``; the last term is horizontal."""
    terms = fraction_to_cf(f)
    k = len(terms)
    t = TangleDiagram.zero() if k % 2 else TangleDiagram.infinity()
    for m, a in enumerate(terms, start=1):
        if (k - m) % 2 == 0:
            t.twist_horizontal(a)
        else:
            t.twist_vertical(a)
    return t


def rational_knot_code(f: Fraction) -> DtCode:
    f = Fraction(f)
    if f.denominator < 2:
        raise ValueError(f"{f} is an integer tangle")
    if f.numerator % 2 == 0:
        raise NotAKnot(f"numerator closure of {f} is a two-component link")
    return rational_tangle(f).numerator_closure_code()


def rational_knot(f: Fraction) -> PlanarDiagram:
    """Numerator closure of the rational tangle ``f`` (a 2-bridge knot ``b(p, q)``)."""
    return realize(rational_knot_code(f))


# -- Montesinos knots ------------------------------------------------------

@dataclass(frozen=True)
class MontesinosForm:
    alpha0: int
    tangles: tuple[Fraction, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "tangles", tuple(Fraction(f) for f in self.tangles))
        for f in self.tangles:
            if f.denominator < 2:
                raise ValueError(f"{f} is an integer tangle")

    @property
    def r(self) -> int:
        return len(self.tangles)

    @property
    def crossing_count(self) -> int:
        return abs(self.alpha0) + sum(
            sum(abs(a) for a in fraction_to_cf(f)) for f in self.tangles
        )

    def __str__(self) -> str:
        return f"({self.alpha0}; " + ", ".join(str(f) for f in self.tangles) + ")"


_FORM_RE = re.compile(r"^\s*\(\s*(-?\d+)\s*;\s*(.*?)\s*\)\s*$")


def parse_montesinos(text: str) -> MontesinosForm:
    """Parse ``"(a0; b1/a1, b2/a2, ...)"``."""
    m = _FORM_RE.match(text)
    if not m:
        raise ValueError(f"not a Montesinos form: {text!r}")
    body = m.group(2)
    fractions = [parse_fraction(tok) for tok in body.split(",") if tok.strip()] if body else []
    return MontesinosForm(int(m.group(1)), tuple(fractions))


def montesinos_code(form: MontesinosForm) -> DtCode:
    t = TangleDiagram.zero()
    t.twist_horizontal(form.alpha0)
    for f in form.tangles:
        t.add(rational_tangle(f))
    return t.numerator_closure_code()


def montesinos_diagram(form: MontesinosForm) -> PlanarDiagram:
    return realize(montesinos_code(form))


def montesinos_bridge_index(form: MontesinosForm) -> int:
    """Bridge index ``r`` of a Montesinos knot with ``r >= 3`` rational tangles."""
    if form.r < 3:
        raise RuleNotApplicable(f"needs at least 3 non-integer tangles, got {form.r}")
    return form.r


# -- 2-bridge classification ----------------------------------------------

def two_bridge_equivalent(p: int, q: int, p2: int, q2: int, up_to_mirror: bool = False) -> bool:
    """Schubert: ``b(p,q) = b(p2,q2)`` iff ``p = p2`` and ``q2 = q^(+-1) mod p``.

    With ``up_to_mirror`` the sign of ``q`` is also ignored.
    """
    if p != p2:
        return False
    if p == 1:
        return True
    classes = {q % p, pow(q, -1, p)}
    if up_to_mirror:
        classes |= {(-c) % p for c in classes}
    return q2 % p in classes


def schubert_normal_form(p: int, q: int, up_to_mirror: bool = False) -> tuple[int, int]:
    """Least ``0 < q' < p`` in the class of ``q``."""
    best = min(
        c for c in range(1, max(p, 2)) if math.gcd(c, p) == 1 and two_bridge_equivalent(p, q, p, c, up_to_mirror)
    ) if p > 1 else 0
    return p, best


def _class_representative(p: int, q: int) -> Fraction:
    """A non-integer fraction ``p/q'`` with ``q'`` in the Schubert class of ``q``."""
    for c in sorted({q % p, pow(q, -1, p)}):
        if c >= 2:
            return Fraction(p, c)
    return Fraction(p, (q % p) + p)


def two_bridge_fraction(diagram: PlanarDiagram) -> tuple[int, int]:
    """Recover ``(p, q)`` of a 2-bridge knot from one of its diagrams.

    ``p`` is the determinant.  Each Schubert class ``q`` (up to mirror) is
    built with :func:`rational_knot` and compared by Alexander polynomial,
    then by Jones polynomial up to mirror when that leaves a tie.  Returns
    the normal form ``0 < q < p`` (least member of the class); raises
    ``ValueError`` if no single class matches.
    """
    from .invariants import SizeGuardExceeded, alexander, jones

    target = alexander(diagram)
    p = target.determinant
    if p == 1:
        return 1, 0
    if p % 2 == 0:
        raise ValueError("even determinant: not a knot")
    seen: set[int] = set()
    matches = []
    for q in range(1, p):
        if math.gcd(q, p) != 1:
            continue
        rep = schubert_normal_form(p, q, up_to_mirror=True)[1]
        if rep in seen:
            continue
        seen.add(rep)
        if alexander(rational_knot(_class_representative(p, rep))).polynomial == target.polynomial:
            matches.append(rep)
    if len(matches) > 1:
        try:
            v = jones(diagram)
            matches = [
                q for q in matches
                if jones(rational_knot(_class_representative(p, q))) in (v, v.reflect())
            ]
        except SizeGuardExceeded:
            pass
    if len(matches) != 1:
        raise ValueError(f"cannot single out a 2-bridge class (candidates {matches})")
    return p, matches[0]
