"""Planar realization of DT codes.

A DT code fixes the Gauss word of the projection.  Realizing it means
choosing, at every crossing, one of the two cyclic orders in which the
strands pass straight through each other, so that the resulting rotation
system is a map on the sphere.  We encode each crossing as a wheel ``W4``
(whose embedding is rigid up to reflection) and hand the gadget graph to a
planarity test; the rotation at each hub then gives the crossing's local
orientation.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import networkx as nx

from .dt import DtCode, Visit, over_under_sequence, pairing

__all__ = [
    "NotRealizable",
    "Crossing",
    "PlanarDiagram",
    "RealizabilityReport",
    "realize",
    "realization_report",
    "is_realizable",
    "pd_text",
    "mirror",
    "writhe",
    "count_faces",
]


class NotRealizable(ValueError):
    """The DT code has no embedding in the sphere."""

    def __init__(self, code: DtCode, obstruction: str = "nonplanar"):
        super().__init__(f"DT code is not realizable ({obstruction}): {code}")
        self.code = code
        self.obstruction = obstruction


@dataclass(frozen=True)
class Crossing:
    """One crossing.

    ``pd`` lists the four incident edges counterclockwise, starting from the
    incoming under-strand.  Edge ``k`` runs from traversal label ``k`` to
    ``k+1`` (edge ``2n`` closes the loop back to label 1).
    """

    sign: int
    pd: tuple[int, int, int, int]
    under_label: int
    over_label: int


@dataclass(frozen=True)
class PlanarDiagram:
    code: DtCode
    crossings: tuple[Crossing, ...]

    @property
    def n(self) -> int:
        return len(self.crossings)

    @property
    def signs(self) -> tuple[int, ...]:
        return tuple(c.sign for c in self.crossings)

    @property
    def pd(self) -> tuple[tuple[int, int, int, int], ...]:
        return tuple(c.pd for c in self.crossings)

    def faces(self) -> int:
        return count_faces(self.pd)

    def euler_characteristic(self) -> int:
        return self.n - 2 * self.n + self.faces()

    def traversal_visits(self) -> list[Visit]:
        """Over/under pattern read off the PD tuples along the traversal."""
        m = 2 * self.n
        out: list[Visit | None] = [None] * m
        for x in self.crossings:
            a, b, c, d = x.pd
            # under strand runs a -> c and the over strand leaves on b
            # (positive) or d (negative), so edge labels name the visits
            over_out, over_in = (b, d) if x.sign > 0 else (d, b)
            assert _succ(a, m) == c and _succ(over_in, m) == over_out
            out[c - 1] = Visit.UNDER
            out[over_out - 1] = Visit.OVER
        return out  # type: ignore[return-value]

    def check(self) -> None:
        """Raise ``AssertionError`` if any structural invariant fails."""
        m = 2 * self.n
        counts: dict[int, int] = {}
        for x in self.crossings:
            for e in x.pd:
                counts[e] = counts.get(e, 0) + 1
        assert sorted(counts) == list(range(1, m + 1)), "arc labels must be 1..2n"
        assert all(v == 2 for v in counts.values()), "each arc label appears twice"
        assert self.faces() == self.n + 2, "rotation system is not spherical"
        assert self.traversal_visits() == list(over_under_sequence(self.code).visits)


def _succ(e: int, m: int) -> int:
    return e % m + 1


def count_faces(pd) -> int:
    """Number of faces of the map given by counterclockwise PD tuples."""
    # darts are (crossing, position); the two ends of an edge share a label
    ends: dict[int, list[tuple[int, int]]] = {}
    for ci, tup in enumerate(pd):
        for pos, e in enumerate(tup):
            ends.setdefault(e, []).append((ci, pos))
    other = {}
    for e, (d1, d2) in ends.items():
        other[d1] = d2
        other[d2] = d1
    seen = set()
    faces = 0
    for start in other:
        if start in seen:
            continue
        faces += 1
        d = start
        while d not in seen:
            seen.add(d)
            ci, pos = other[d]
            d = (ci, (pos + 1) % 4)
    return faces


@dataclass(frozen=True)
class RealizabilityReport:
    realizable: bool
    witness: PlanarDiagram | None = None
    obstruction: str | None = None


# wheel rim slots: in/out at the odd visit, in/out at the even visit, in
# cyclic order so that each strand's in and out are opposite
_IN_ODD, _IN_EVEN, _OUT_ODD, _OUT_EVEN = 0, 1, 2, 3


def _gadget_graph(code: DtCode) -> nx.Graph:
    n, m = code.n, 2 * code.n
    part = pairing(code)
    crossing_of = [0] * (m + 1)
    for k in range(1, m + 1):
        crossing_of[k] = (k - 1) // 2 if k % 2 else (part[k] - 1) // 2

    def slot(label: int, out: bool) -> tuple:
        c = crossing_of[label]
        if label % 2:
            return ("r", c, _OUT_ODD if out else _IN_ODD)
        return ("r", c, _OUT_EVEN if out else _IN_EVEN)

    G = nx.Graph()
    for c in range(n):
        hub = ("h", c)
        for i in range(4):
            G.add_edge(hub, ("r", c, i))
            G.add_edge(("r", c, i), ("r", c, (i + 1) % 4))
    for k in range(1, m + 1):
        a, b = slot(k, True), slot(_succ(k, m), False)
        if a[1] == b[1]:
            # same crossing: subdivide to keep the graph simple
            G.add_edge(a, ("m", k))
            G.add_edge(("m", k), b)
        else:
            G.add_edge(a, b)
    return G


def _build_diagram(code: DtCode, hub_cw: list[list[int]]) -> PlanarDiagram:
    m = 2 * code.n
    ou = over_under_sequence(code)
    crossings = []
    for c, cw in enumerate(hub_cw):
        odd = 2 * c + 1
        even = abs(code.values[c])
        edge_of = {
            _IN_ODD: odd - 1 or m,
            _OUT_ODD: odd,
            _IN_EVEN: even - 1,
            _OUT_EVEN: even,
        }
        if ou[odd] is Visit.UNDER:
            under, over = odd, even
            in_u, out_u, in_w, out_w = _IN_ODD, _OUT_ODD, _IN_EVEN, _OUT_EVEN
        else:
            under, over = even, odd
            in_u, out_u, in_w, out_w = _IN_EVEN, _OUT_EVEN, _IN_ODD, _OUT_ODD
        ccw = list(reversed(cw))
        i = ccw.index(in_u)
        order = ccw[i:] + ccw[:i]
        sign = 1 if order[1] == out_w else -1
        crossings.append(
            Crossing(sign, tuple(edge_of[s] for s in order), under, over)  # type: ignore[arg-type]
        )
    return PlanarDiagram(code, tuple(crossings))


def realize(code: DtCode) -> PlanarDiagram:
    """Embed ``code`` in the sphere and return the signed diagram.

    The reflection is fixed by making the crossing at label 1 positive.
    Raises :class:`NotRealizable` if no embedding exists.
    """
    G = _gadget_graph(code)
    planar, emb = nx.check_planarity(G)
    if not planar:
        raise NotRealizable(code)
    hub_cw = []
    for c in range(code.n):
        rim = [node[2] for node in emb.neighbors_cw_order(("h", c))]
        i = rim.index(_IN_ODD)
        hub_cw.append(rim[i:] + rim[:i])
    diagram = _build_diagram(code, hub_cw)
    if diagram.crossings[0].sign < 0:
        diagram = mirror(diagram)
    return diagram


def realization_report(code: DtCode) -> RealizabilityReport:
    try:
        return RealizabilityReport(True, witness=realize(code))
    except NotRealizable as exc:
        return RealizabilityReport(False, obstruction=exc.obstruction)


def is_realizable(code: DtCode) -> bool:
    return realization_report(code).realizable


def mirror(diagram: PlanarDiagram) -> PlanarDiagram:
    """Reflect the projection sphere: signs flip, rotations reverse."""
    return PlanarDiagram(
        diagram.code,
        tuple(
            Crossing(-x.sign, (x.pd[0], x.pd[3], x.pd[2], x.pd[1]), x.under_label, x.over_label)
            for x in diagram.crossings
        ),
    )


def writhe(diagram: PlanarDiagram) -> int:
    return sum(x.sign for x in diagram.crossings)


def pd_text(diagram: PlanarDiagram) -> str:
    """One ``X a b c d`` line per crossing, LF-terminated."""
    return "".join("X %d %d %d %d\n" % x.pd for x in diagram.crossings)
