import itertools
import random

import pytest

from bridgekit.dt import DtCode, over_under_sequence, parse_dt
from bridgekit.invariants import kauffman_bracket
from bridgekit.realize import (
    NotRealizable,
    count_faces,
    is_realizable,
    mirror,
    pd_text,
    realization_report,
    realize,
    writhe,
)

from conftest import FIGURE_EIGHT, K11A1, KINK, TREFOIL
from oracles import brute_force_realizable, least_nonrealizable, unsigned_codes

# pinned by oracles.least_nonrealizable(5) before the realizer was written
NONREALIZABLE_5 = (4, 6, 8, 10, 2)


def test_trefoil_realizes():
    d = realize(parse_dt(TREFOIL))
    d.check()
    assert d.n == 3
    assert count_faces(d.pd) == 5
    assert d.euler_characteristic() == 2


def test_11a1_realizes():
    d = realize(parse_dt(K11A1))
    d.check()
    assert d.n == 11


def test_pinned_nonrealizable_code():
    assert least_nonrealizable(5) == NONREALIZABLE_5
    code = DtCode(NONREALIZABLE_5)
    with pytest.raises(NotRealizable):
        realize(code)
    rep = realization_report(code)
    assert not rep.realizable and rep.witness is None and rep.obstruction


def test_is_realizable():
    assert is_realizable(parse_dt(TREFOIL))
    assert is_realizable(parse_dt(KINK))
    assert not is_realizable(DtCode(NONREALIZABLE_5))
    rep = realization_report(parse_dt(TREFOIL))
    assert rep.witness is not None and rep.obstruction is None


def test_pd_text():
    text = pd_text(realize(parse_dt(TREFOIL)))
    lines = text.split("\n")
    assert text.endswith("\n") and len(lines) == 4 and lines[-1] == ""
    labels = [int(x) for line in lines[:-1] for x in line.split()[1:]]
    assert all(line.startswith("X ") for line in lines[:-1])
    assert sorted(labels) == sorted(list(range(1, 7)) * 2)
    assert pd_text(realize(parse_dt(KINK))) == "X 2 2 1 1\n"
    big = pd_text(realize(parse_dt(K11A1))).splitlines()
    assert len(big) == 11
    assert sorted({int(x) for line in big for x in line.split()[1:]}) == list(range(1, 23))


def test_pd_text_deterministic():
    code = parse_dt(K11A1)
    assert pd_text(realize(code)) == pd_text(realize(code))
    assert realize(code) == realize(code)


def test_chirality_convention():
    for text in (TREFOIL, FIGURE_EIGHT, K11A1, "-4 -6 -2"):
        assert realize(parse_dt(text)).crossings[0].sign == 1


def test_writhe_and_mirror():
    kink = realize(parse_dt(KINK))
    assert abs(writhe(kink)) == 1
    trefoil = realize(parse_dt(TREFOIL))
    assert abs(writhe(trefoil)) == 3
    assert writhe(mirror(trefoil)) == -writhe(trefoil)
    assert mirror(mirror(trefoil)) == trefoil
    mirror(trefoil).check()


def test_mirror_bracket_is_reflected():
    trefoil = realize(parse_dt(TREFOIL))
    assert kauffman_bracket(mirror(trefoil)) == kauffman_bracket(trefoil).reflect()
    # 8-state sum by hand for the all-positive trefoil: -A^5 - A^-3 + A^-7
    assert kauffman_bracket(trefoil).coefficients == {5: -1, -3: -1, -7: 1}


def test_over_under_reproduced(corpus):
    for e in corpus[:40]:
        for code in (e.knot_code, e.bridge_code):
            d = realize(code)
            assert d.traversal_visits() == list(over_under_sequence(code).visits)


@pytest.mark.parametrize("n", [1, 2, 3, 4, 5, 6])
def test_oracle_equivalence_unsigned(n):
    # realizability does not depend on signs, so unsigned codes cover everything
    for perm in unsigned_codes(n):
        code = DtCode(perm)
        ours = is_realizable(code)
        assert ours == brute_force_realizable(perm), perm
        if ours:
            realize(code).check()


def test_oracle_equivalence_signed_sample():
    rng = random.Random(7)
    for n in (5, 6):
        perms = list(unsigned_codes(n))
        for perm in rng.sample(perms, 40):
            signed = tuple(v * rng.choice((1, -1)) for v in perm)
            code = DtCode(signed)
            assert is_realizable(code) == brute_force_realizable(perm)
            if is_realizable(code):
                d = realize(code)
                d.check()
