"""Exact polynomial invariants of realized diagrams.

The Alexander polynomial comes from Fox calculus on the Wirtinger
presentation.  Arcs are the pieces of the traversal between consecutive
under-visits; a crossing with over arc ``k``, incoming under arc ``i`` and
outgoing under arc ``j`` contributes the row

    sign +1:  (1-t) x_k +   t x_i -   x_j
    sign -1:  (t-1) x_k +     x_i - t x_j

(the second is the Fox row of ``x_k^-1 x_i x_k x_j^-1`` times the unit
``t``).  Dropping one row and one column leaves a matrix whose determinant
is the polynomial up to ``+-t^k``.
"""

from __future__ import annotations

import bisect
from dataclasses import dataclass
from fractions import Fraction

from .dt import Visit, over_under_sequence
from .laurent import LaurentPolynomial, interpolate
from .realize import PlanarDiagram

__all__ = [
    "DegenerateDiagram",
    "SizeGuardExceeded",
    "AlexanderResult",
    "DEFAULT_BRACKET_GUARD",
    "wirtinger_arcs",
    "alexander_matrix",
    "alexander",
    "alexander_polynomial",
    "same_alexander",
    "determinant",
    "kauffman_bracket",
    "jones",
    "integer_determinant",
]

DEFAULT_BRACKET_GUARD = 24

_ONE = LaurentPolynomial.constant(1)
_T = LaurentPolynomial.monomial(1, 1)


class DegenerateDiagram(ValueError):
    pass


class SizeGuardExceeded(ValueError):
    """The state sum was refused because the diagram is above the size guard."""


@dataclass(frozen=True)
class AlexanderResult:
    polynomial: LaurentPolynomial
    determinant: int

    def __str__(self) -> str:
        return str(self.polynomial)


def wirtinger_arcs(diagram: PlanarDiagram) -> list[tuple[int, int, int]]:
    """Per crossing, ``(over arc, incoming under arc, outgoing under arc)``.

    Arc ``m`` starts just after the ``m``-th under-visit (in label order).
    """
    ou = over_under_sequence(diagram.code).visits
    unders = [k + 1 for k, v in enumerate(ou) if v is Visit.UNDER]
    if not unders:
        raise DegenerateDiagram("diagram has no under-passes")
    n = len(unders)
    index = {u: a for a, u in enumerate(unders)}
    out = []
    for x in diagram.crossings:
        j = index[x.under_label]
        i = (j - 1) % n
        # arc containing the over visit: last under-visit strictly before it
        k = (bisect.bisect_left(unders, x.over_label) - 1) % n
        out.append((k, i, j))
    return out


def alexander_matrix(diagram: PlanarDiagram) -> list[dict[int, LaurentPolynomial]]:
    """Sparse ``n x n`` Alexander matrix: one row (column -> entry) per crossing."""
    rows = []
    for x, (k, i, j) in zip(diagram.crossings, wirtinger_arcs(diagram)):
        if x.sign > 0:
            entries = ((k, _ONE - _T), (i, _T), (j, -_ONE))
        else:
            entries = ((k, _T - _ONE), (i, _ONE), (j, -_T))
        row: dict[int, LaurentPolynomial] = {}
        for col, val in entries:
            row[col] = row.get(col, LaurentPolynomial()) + val
        rows.append({c: v for c, v in row.items() if v})
    return rows


def _minor(rows, drop_row: int, drop_col: int):
    return [
        {c: v for c, v in r.items() if c != drop_col}
        for idx, r in enumerate(rows)
        if idx != drop_row
    ]


def integer_determinant(matrix: list[list[int]]) -> int:
    """Exact determinant by fraction-free (Bareiss) elimination."""
    a = [list(r) for r in matrix]
    n = len(a)
    if n == 0:
        return 1
    sign, prev = 1, 1
    for k in range(n - 1):
        if a[k][k] == 0:
            for r in range(k + 1, n):
                if a[r][k]:
                    a[k], a[r] = a[r], a[k]
                    sign = -sign
                    break
            else:
                return 0
        akk = a[k][k]
        for i in range(k + 1, n):
            aik = a[i][k]
            row_i, row_k = a[i], a[k]
            for j in range(k + 1, n):
                row_i[j] = (row_i[j] * akk - aik * row_k[j]) // prev
        prev = akk
    return sign * a[n - 1][n - 1]


def _det_by_interpolation(rows: list[dict[int, LaurentPolynomial]]) -> LaurentPolynomial:
    """Determinant of a square sparse Laurent matrix, up to a unit.

    Each row is shifted to a polynomial, the integer determinant is taken at
    ``deg + 1`` integer points, and the values are interpolated.
    """
    size = len(rows)
    if size == 0:
        return _ONE
    cols = sorted({c for r in rows for c in r} | set())
    if len(cols) < size:
        return LaurentPolynomial()
    cols = cols[:size] if len(cols) == size else cols
    if len(cols) != size:
        raise ValueError("matrix is not square")
    pos = {c: idx for idx, c in enumerate(cols)}
    shifted = []
    bound = 0
    for r in rows:
        if not r:
            return LaurentPolynomial()
        low = min(v.min_degree for v in r.values())
        s = {c: v.shift(-low) for c, v in r.items()}
        bound += max(v.max_degree for v in s.values())
        shifted.append(s)
    # symmetric points keep the integer values small
    points = [0]
    step = 1
    while len(points) < bound + 1:
        points.append(step)
        if len(points) < bound + 1:
            points.append(-step)
        step += 1
    values = []
    for x in points:
        mat = [[0] * size for _ in range(size)]
        for ri, r in enumerate(shifted):
            for c, v in r.items():
                mat[ri][pos[c]] = v.evaluate(x)
        values.append(integer_determinant(mat))
    return interpolate(points, values)


def _det_by_elimination(rows: list[dict[int, LaurentPolynomial]]) -> LaurentPolynomial:
    """Determinant up to a unit, pivoting on unit entries first.

    Pivoting on ``+-t^k`` only changes the determinant by a unit, and the
    Wirtinger rows have one at every outgoing under arc, so this removes
    almost the whole matrix with little fill-in.  Whatever is left (no unit
    entries) goes to :func:`_det_by_interpolation`.
    """
    R = {ri: dict(r) for ri, r in enumerate(rows)}
    C: dict[int, set[int]] = {}
    for ri, r in R.items():
        for c in r:
            C.setdefault(c, set()).add(ri)
    while R:
        best = None
        for ri, r in R.items():
            if not r:
                return LaurentPolynomial()
            for c, v in r.items():
                if v.is_unit():
                    cost = (len(r) - 1) * (len(C[c]) - 1)
                    if best is None or cost < best[0]:
                        best = (cost, ri, c)
                        if cost == 0:
                            break
            if best is not None and best[0] == 0:
                break
        if best is None:
            break
        _, pr, pc = best
        prow = R.pop(pr)
        inv = prow[pc].unit_inverse()
        for c in prow:
            C[c].discard(pr)
        for ri in list(C[pc]):
            r = R[ri]
            factor = r[pc] * inv
            for c, v in prow.items():
                new = r.get(c, LaurentPolynomial()) - factor * v
                if new:
                    if c not in r:
                        C.setdefault(c, set()).add(ri)
                    r[c] = new
                else:
                    if c in r:
                        del r[c]
                        C[c].discard(ri)
        del C[pc]
    if not R:
        return _ONE
    live = [c for c, rs in C.items() if rs]
    if len(live) < len(R):
        return LaurentPolynomial()
    return _det_by_interpolation(list(R.values()))


def alexander_polynomial(diagram: PlanarDiagram, method: str = "elimination") -> LaurentPolynomial:
    """Canonical Alexander polynomial.

    ``method="elimination"`` pivots symbolically on units before any dense
    work; ``method="interpolation"`` evaluates the full minor at integer
    points.  Both give the same canonical result.
    """
    rows = alexander_matrix(diagram)
    n = len(rows)
    minor = _minor(rows, n - 1, n - 1)
    if method == "elimination":
        det = _det_by_elimination(minor)
    elif method == "interpolation":
        det = _det_by_interpolation(minor)
    else:
        raise ValueError(f"unknown method {method!r}")
    return det.canonical()


def alexander(diagram: PlanarDiagram, method: str = "elimination") -> AlexanderResult:
    poly = alexander_polynomial(diagram, method)
    return AlexanderResult(poly, abs(poly.evaluate(-1)))


def determinant(diagram: PlanarDiagram) -> int:
    return alexander(diagram).determinant


def same_alexander(a: PlanarDiagram, b: PlanarDiagram) -> bool:
    return alexander_polynomial(a) == alexander_polynomial(b)


# -- Kauffman bracket --------------------------------------------------

def _loops(m: int, pairs: list[tuple[int, int]]) -> int:
    parent = list(range(m + 1))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    comps = m
    for a, b in pairs:
        ra, rb = find(a), find(b)
        if ra != rb:
            parent[ra] = rb
            comps -= 1
    return comps


def kauffman_bracket(diagram: PlanarDiagram, guard: int = DEFAULT_BRACKET_GUARD) -> LaurentPolynomial:
    """State sum ``<D>`` in ``A``, normalized so that the round circle is 1.

    ``X[a,b,c,d]`` smooths to ``(a,b)(c,d)`` with weight ``A`` and to
    ``(a,d)(b,c)`` with weight ``A^-1``.
    """
    n = diagram.n
    if n > guard:
        raise SizeGuardExceeded(f"{n} crossings exceeds bracket guard {guard}")
    m = 2 * n
    pd = diagram.pd
    a_pairs = [((a, b), (c, d)) for a, b, c, d in pd]
    b_pairs = [((a, d), (b, c)) for a, b, c, d in pd]
    # loop count -> A-exponent -> number of states
    tally: dict[tuple[int, int], int] = {}
    for state in range(1 << n):
        pairs = []
        n_a = 0
        for i in range(n):
            if state >> i & 1:
                pairs.extend(b_pairs[i])
            else:
                pairs.extend(a_pairs[i])
                n_a += 1
        key = (_loops(m, pairs), 2 * n_a - n)
        tally[key] = tally.get(key, 0) + 1
    delta = LaurentPolynomial({2: -1, -2: -1}, "A")
    result = LaurentPolynomial({}, "A")
    powers = {1: LaurentPolynomial({0: 1}, "A")}
    for (loops, exp), count in tally.items():
        if loops not in powers:
            powers[loops] = delta ** (loops - 1)
        result = result + powers[loops].shift(exp) * count
    return result


def jones(diagram: PlanarDiagram, guard: int = DEFAULT_BRACKET_GUARD) -> LaurentPolynomial:
    """Jones polynomial ``(-A^3)^(-w) <D>`` with ``t = A^-4``."""
    from .realize import writhe

    w = writhe(diagram)
    bracket = kauffman_bracket(diagram, guard)
    norm = LaurentPolynomial({-3 * w: (-1) ** (w % 2)}, "A")
    return (bracket * norm).substitute_power(-1).exponents_divided(4, "t")
