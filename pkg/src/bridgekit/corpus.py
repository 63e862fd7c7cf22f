"""The census of 11-crossing prime knots and its verification harness.

The shipped table lives in ``data/corpus.txt``, one record per line::

    NAME : B | k1 k2 ... k11 | c1 c2 ... cm

``B`` is the stated bridge index, ``k`` the knot's DT code and ``c`` the DT
code of a diagram meant to realize ``B`` bridges.  ``#`` lines are comments.
"""

from __future__ import annotations

import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass, field
from importlib import resources
from typing import Iterable, TextIO

from .dt import DtCode, DtError, diagram_bridges, parse_dt
from .invariants import alexander_polynomial
from .realize import NotRealizable, realize
from .tangles import (
    MontesinosForm,
    montesinos_bridge_index,
    montesinos_diagram,
    parse_montesinos,
    two_bridge_equivalent,
    two_bridge_fraction,
)

__all__ = [
    "FormatError",
    "ValidationError",
    "CorpusEntry",
    "EntryReport",
    "VerificationReport",
    "LEVELS",
    "TWO_BRIDGE",
    "FOUR_BRIDGE",
    "load_corpus",
    "shipped_corpus",
    "montesinos_table",
    "bridge_index_lists",
    "stated_index",
    "verify_entry",
    "verify_all",
    "verify_montesinos",
    "verify_two_bridge_route",
    "corpus_path",
]

LEVELS = ("structural", "bridges", "full")

TWO_BRIDGE = (
    "11a13", "11a59", "11a65", "11a75", "11a77", "11a84", "11a85", "11a89",
    "11a90", "11a91", "11a93", "11a95", "11a96", "11a98", "11a110", "11a111",
    "11a117", "11a119", "11a120", "11a121", "11a140", "11a144", "11a145",
    "11a154", "11a159", "11a166", "11a174", "11a175", "11a176", "11a177",
    "11a178", "11a179", "11a180", "11a182", "11a183", "11a184", "11a185",
    "11a186", "11a188", "11a190", "11a191", "11a192", "11a193", "11a195",
    "11a203", "11a204", "11a205", "11a206", "11a207", "11a208", "11a210",
    "11a211", "11a220", "11a224", "11a225", "11a226", "11a229", "11a230",
    "11a234", "11a235", "11a236", "11a238", "11a242", "11a243", "11a246",
    "11a247", "11a306", "11a307", "11a308", "11a309", "11a310", "11a311",
    "11a333", "11a334", "11a335", "11a336", "11a337", "11a339", "11a341",
    "11a342", "11a343", "11a355", "11a356", "11a357", "11a358", "11a359",
    "11a360", "11a363", "11a364", "11a365", "11a367",
)

FOUR_BRIDGE = (
    "11a43", "11a44", "11a47", "11a57", "11a231", "11a263", "11n71", "11n72",
    "11n73", "11n74", "11n75", "11n76", "11n77", "11n78", "11n81",
)


class FormatError(ValueError):
    def __init__(self, line_no: int, reason: str):
        super().__init__(f"line {line_no}: {reason}")
        self.line_no = line_no
        self.reason = reason


class ValidationError(ValueError):
    def __init__(self, name: str, error: Exception):
        super().__init__(f"{name}: {error}")
        self.name = name
        self.error = error


@dataclass(frozen=True)
class CorpusEntry:
    name: str
    bridge_index: int
    knot_code: DtCode
    bridge_code: DtCode

    def to_line(self) -> str:
        return f"{self.name} : {self.bridge_index} | {self.knot_code} | {self.bridge_code}"


def load_corpus(source: TextIO | Iterable[str]) -> list[CorpusEntry]:
    entries = []
    for line_no, raw in enumerate(source, start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        head, sep, rest = line.partition("|")
        if not sep:
            raise FormatError(line_no, "missing '|'")
        name, colon, index_text = head.partition(":")
        name = name.strip()
        if not colon or not name:
            raise FormatError(line_no, "expected 'NAME : B'")
        try:
            index = int(index_text)
        except ValueError:
            raise FormatError(line_no, f"bad bridge index {index_text.strip()!r}") from None
        if index not in (2, 3, 4):
            raise FormatError(line_no, f"bridge index {index} not in 2..4")
        fields = rest.split("|")
        if len(fields) != 2:
            raise FormatError(line_no, "expected two DT codes")
        try:
            knot = parse_dt(fields[0])
            bridge = parse_dt(fields[1])
        except DtError as exc:
            raise ValidationError(name, exc) from exc
        if knot.n != 11:
            raise ValidationError(name, DtError(f"knot code has {knot.n} crossings, expected 11"))
        entries.append(CorpusEntry(name, index, knot, bridge))
    return entries


def corpus_path() -> str:
    """``$BRIDGEKIT_CORPUS`` if set, else the shipped table."""
    env = os.environ.get("BRIDGEKIT_CORPUS")
    if env:
        return env
    return str(resources.files("bridgekit") / "data" / "corpus.txt")


def shipped_corpus() -> list[CorpusEntry]:
    with (resources.files("bridgekit") / "data" / "corpus.txt").open() as fh:
        return load_corpus(fh)


def montesinos_table() -> dict[str, MontesinosForm]:
    out = {}
    with (resources.files("bridgekit") / "data" / "montesinos.txt").open() as fh:
        for line in fh:
            line = line.strip()
            if line and not line.startswith("#"):
                name, _, form = line.partition(":")
                out[name.strip()] = parse_montesinos(form)
    return out


def bridge_index_lists() -> tuple[tuple[str, ...], tuple[str, ...]]:
    """Names listed as 2-bridge and as 4-bridge; every other knot is 3-bridge."""
    return TWO_BRIDGE, FOUR_BRIDGE


def stated_index(name: str) -> int:
    if name in TWO_BRIDGE:
        return 2
    if name in FOUR_BRIDGE:
        return 4
    return 3


@dataclass
class EntryReport:
    """Outcome of one entry.  Checks not run at the chosen level stay ``None``."""

    name: str
    level: str
    codes_valid: bool | None = None
    bridge_count: int | None = None
    knot_bridge_count: int | None = None
    bridge_count_matches: bool | None = None
    realizable: bool | None = None
    alexander_matches: bool | None = None
    skipped: str | None = None
    error: str | None = None

    @property
    def passed(self) -> bool:
        checks = [self.codes_valid, self.bridge_count_matches, self.realizable, self.alexander_matches]
        return self.error is None and all(c is not False for c in checks) and self.skipped is None

    def failures(self) -> list[str]:
        out = [k for k in ("codes_valid", "bridge_count_matches", "realizable", "alexander_matches")
               if getattr(self, k) is False]
        if self.error:
            out.append(f"error: {self.error}")
        if self.skipped:
            out.append(f"skipped: {self.skipped}")
        return out


@dataclass
class VerificationReport:
    level: str
    entries: list[EntryReport] = field(default_factory=list)

    @property
    def total(self) -> int:
        return len(self.entries)

    @property
    def passed(self) -> int:
        return sum(1 for e in self.entries if e.passed)

    @property
    def errored(self) -> int:
        return sum(1 for e in self.entries if not e.passed and e.error is not None)

    @property
    def failed(self) -> int:
        return self.total - self.passed - self.errored

    def counts(self) -> dict[str, int]:
        return {"total": self.total, "passed": self.passed, "failed": self.failed, "errored": self.errored}

    def count(self, flag: str) -> int:
        """Entries with ``flag`` true."""
        return sum(1 for e in self.entries if getattr(e, flag) is True)

    @property
    def ok(self) -> bool:
        return self.passed == self.total

    def as_dict(self) -> dict:
        return {"level": self.level, **self.counts(), "entries": [asdict(e) for e in self.entries]}


def verify_entry(entry: CorpusEntry, level: str = "bridges") -> EntryReport:
    if level not in LEVELS:
        raise ValueError(f"unknown level {level!r}")
    rep = EntryReport(entry.name, level)
    try:
        # re-validate: entries may be built by hand rather than loaded
        DtCode(entry.knot_code.values)
        DtCode(entry.bridge_code.values)
        rep.codes_valid = True
    except DtError as exc:
        rep.codes_valid = False
        rep.skipped = f"invalid DT code: {exc}"
        return rep
    if level == "structural":
        return rep
    rep.bridge_count = diagram_bridges(entry.bridge_code)
    rep.knot_bridge_count = diagram_bridges(entry.knot_code)
    rep.bridge_count_matches = (
        rep.bridge_count == entry.bridge_index and rep.knot_bridge_count >= entry.bridge_index
    )
    if level == "bridges":
        return rep
    try:
        knot = realize(entry.knot_code)
        bridge = realize(entry.bridge_code)
        rep.realizable = True
    except NotRealizable as exc:
        rep.realizable = False
        rep.skipped = f"not realizable ({exc.obstruction})"
        return rep
    try:
        rep.alexander_matches = alexander_polynomial(knot) == alexander_polynomial(bridge)
    except Exception as exc:  # report, never abort the batch
        rep.error = f"{type(exc).__name__}: {exc}"
    return rep


def _verify_star(args):
    return verify_entry(*args)


def verify_all(entries: Iterable[CorpusEntry], level: str = "bridges", jobs: int = 1) -> VerificationReport:
    """Verify every entry; order is preserved whatever ``jobs`` is."""
    entries = list(entries)
    if jobs > 1 and len(entries) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            reports = list(pool.map(_verify_star, [(e, level) for e in entries], chunksize=8))
    else:
        reports = [verify_entry(e, level) for e in entries]
    return VerificationReport(level, reports)


@dataclass
class MontesinosCheck:
    name: str
    form: MontesinosForm
    crossings: int
    bridge_index: int
    alexander_matches: bool

    @property
    def passed(self) -> bool:
        return self.crossings == 11 and self.bridge_index == 4 and self.alexander_matches


def verify_montesinos(entries: Iterable[CorpusEntry] | None = None) -> list[MontesinosCheck]:
    """Rebuild each tabulated Montesinos knot and compare with the named knot code."""
    by_name = {e.name: e for e in (entries if entries is not None else shipped_corpus())}
    out = []
    for name, form in montesinos_table().items():
        diagram = montesinos_diagram(form)
        named = realize(by_name[name].knot_code)
        out.append(MontesinosCheck(
            name,
            form,
            diagram.n,
            montesinos_bridge_index(form),
            alexander_polynomial(diagram) == alexander_polynomial(named),
        ))
    return out


@dataclass
class TwoBridgeCheck:
    name: str
    bridge_count: int
    bridge_fraction: tuple[int, int]
    knot_fraction: tuple[int, int]
    equivalent: bool

    @property
    def passed(self) -> bool:
        return self.bridge_count == 2 and self.equivalent


def verify_two_bridge_route(entry: CorpusEntry) -> TwoBridgeCheck:
    """Check a 2-bridge entry through Schubert fractions of both codes."""
    p1, q1 = two_bridge_fraction(realize(entry.bridge_code))
    p2, q2 = two_bridge_fraction(realize(entry.knot_code))
    return TwoBridgeCheck(
        entry.name,
        diagram_bridges(entry.bridge_code),
        (p1, q1),
        (p2, q2),
        two_bridge_equivalent(p1, q1, p2, q2, up_to_mirror=True),
    )
