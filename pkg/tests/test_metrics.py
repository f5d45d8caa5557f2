import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from genspect.errors import UnknownDimension
from genspect.evaluator import CORRECT, INCONCLUSIVE, WRONG, Outcome
from genspect.generator import Quadrant
from genspect.metrics import (
    DIMENSIONS,
    aggregate,
    delta_table,
    format_fraction,
    rank_occupations,
    render,
)

from oracles import count_by_group

VERDICTS = (CORRECT, WRONG, INCONCLUSIVE)


def outcome(verdict, lang="de", tg="M", stereo="M", lemma="janitor",
            frame="F-X", position="before", cues=0, attach="none"):
    return Outcome(
        id="x", lang=lang, verdict=verdict,
        resolved_gender={"Correct": "Masc", "Wrong": "Fem"}.get(verdict),
        reason="OK" if verdict != INCONCLUSIVE else "NoAlignment",
        trigger_gender=tg, occupation_stereotype=stereo,
        occupation_lemma=lemma, frame_id=frame, trigger_position=position,
        cue_count=cues, cue_attachment=attach,
    )


def quadrant_fixture(per_quadrant):
    """per_quadrant: {'MM': (n_correct, n_wrong, n_inconclusive), ...}"""
    out = []
    for quad, (c, w, i) in per_quadrant.items():
        tg, stereo = quad[0], quad[1]
        out += [outcome(CORRECT, tg=tg, stereo=stereo)] * c
        out += [outcome(WRONG, tg=tg, stereo=stereo)] * w
        out += [outcome(INCONCLUSIVE, tg=tg, stereo=stereo)] * i
    return out


# --------------------------------------------------------------- aggregate

def test_empty_outcomes():
    assert aggregate([], ["lang"]) == []


def test_single_outcome():
    rows = aggregate([outcome(CORRECT)], ["lang"])
    assert len(rows) == 1
    row = rows[0]
    assert (row.n, row.correct, row.wrong, row.inconclusive) == (1, 1.0, 0.0, 0.0)


def test_unknown_dimension():
    with pytest.raises(UnknownDimension):
        aggregate([outcome(CORRECT)], ["verdict"])


def test_partition_law():
    outcomes = quadrant_fixture({"MM": (5, 2, 1), "MF": (3, 3, 2),
                                 "FF": (1, 1, 1), "FM": (0, 4, 4)})
    for dims in (["quadrant"], ["trigger_gender"], ["lang", "quadrant"],
                 ["occupation_stereotype", "trigger_gender"]):
        rows = aggregate(outcomes, dims)
        assert sum(r.n for r in rows) == len(outcomes)
        for r in rows:
            assert abs(r.correct + r.wrong + r.inconclusive - 1.0) < 1e-9


def test_quadrant_mean_law():
    # equal quadrant sizes: the overall correct rate is the quadrant mean
    outcomes = quadrant_fixture({"MM": (97, 1, 2), "FF": (76, 20, 4),
                                 "MF": (83, 10, 7), "FM": (37, 60, 3)})
    overall = aggregate(outcomes, ["lang"])[0].correct
    quads = aggregate(outcomes, ["quadrant"])
    assert overall == pytest.approx(sum(r.correct for r in quads) / 4)
    assert overall == pytest.approx((0.97 + 0.76 + 0.83 + 0.37) / 4)


@st.composite
def outcome_lists(draw):
    langs = ("de", "es", "ur")
    lemmas = ("nurse", "janitor", "clerk")
    n = draw(st.integers(0, 40))
    out = []
    for _ in range(n):
        out.append(outcome(
            draw(st.sampled_from(VERDICTS)),
            lang=draw(st.sampled_from(langs)),
            tg=draw(st.sampled_from("FM")),
            stereo=draw(st.sampled_from("FM")),
            lemma=draw(st.sampled_from(lemmas)),
            cues=draw(st.integers(0, 2)),
            attach=draw(st.sampled_from(("none", "trigger", "occupation"))),
        ))
    return out


@settings(max_examples=200)
@given(outcome_lists())
def test_aggregate_matches_counting_oracle(outcomes):
    for dim, key_fn in DIMENSIONS.items():
        expected = count_by_group(outcomes, key_fn)
        rows = aggregate(outcomes, [dim])
        assert len(rows) == len(expected)
        for row in rows:
            n, c, w, i = expected[row.group_key[dim]]
            assert row.n == n
            assert row.correct == pytest.approx(c / n)
            assert row.wrong == pytest.approx(w / n)
            assert row.inconclusive == pytest.approx(i / n)
        assert sum(r.n for r in rows) == len(outcomes)


# ------------------------------------------------------------------ delta

def delta_fixture(acc, n=10):
    per = {}
    for quad, a in acc.items():
        c = round(a * n)
        per[quad] = (c, n - c, 0)
    return quadrant_fixture(per)


def test_delta_hand_counted():
    outcomes = delta_fixture({"MM": 0.9, "MF": 0.7, "FF": 0.6, "FM": 0.2})
    (row,) = delta_table(outcomes)
    assert row.delta_m == pytest.approx(0.2)
    assert row.delta_f == pytest.approx(0.4)


def test_delta_zero_when_accuracies_equal():
    outcomes = delta_fixture({"MM": 0.5, "MF": 0.5, "FF": 0.5, "FM": 0.5})
    (row,) = delta_table(outcomes)
    assert row.delta_m == pytest.approx(0.0)
    assert row.delta_f == pytest.approx(0.0)


def test_delta_invariant_under_count_scaling():
    acc = {"MM": 0.8, "MF": 0.6, "FF": 0.4, "FM": 0.3}
    (small,) = delta_table(delta_fixture(acc, n=10))
    (large,) = delta_table(delta_fixture(acc, n=70))
    assert small.delta_m == pytest.approx(large.delta_m)
    assert small.delta_f == pytest.approx(large.delta_f)


def test_delta_skips_language_missing_a_quadrant(caplog):
    outcomes = delta_fixture({"MM": 0.9, "MF": 0.7, "FF": 0.6, "FM": 0.2})
    outcomes += [outcome(CORRECT, lang="xx", tg="M", stereo="M")]  # only MM
    with caplog.at_level("WARNING", logger="genspect"):
        rows = delta_table(outcomes)
    assert [r.lang for r in rows] == ["de"]
    assert "xx" in caplog.text


# ------------------------------------------------------------------- rank

def test_rank_occupations_orders_by_accuracy():
    outcomes = []
    for lemma, correct in (("laborer", 53), ("driver", 8)):
        outcomes += [outcome(CORRECT, tg="F", stereo="M", lemma=lemma)] * correct
        outcomes += [outcome(WRONG, tg="F", stereo="M", lemma=lemma)] * (100 - correct)
    ranked = rank_occupations(outcomes, Quadrant("F", "M"))
    assert [lemma for lemma, _ in ranked] == ["laborer", "driver"]
    assert ranked[0][1].correct == pytest.approx(0.53)
    assert ranked[1][1].correct == pytest.approx(0.08)


def test_rank_ties_break_lexicographically():
    outcomes = []
    for lemma in ("mover", "guard", "chief"):
        outcomes += [outcome(CORRECT, tg="M", stereo="M", lemma=lemma)]
    ranked = rank_occupations(outcomes, Quadrant("M", "M"))
    assert [lemma for lemma, _ in ranked] == ["chief", "guard", "mover"]


def test_rank_single_occupation():
    ranked = rank_occupations([outcome(CORRECT)], Quadrant("M", "M"))
    assert len(ranked) == 1 and ranked[0][0] == "janitor"


def test_rank_ignores_other_quadrants():
    outcomes = [outcome(CORRECT, tg="M", stereo="M", lemma="janitor"),
                outcome(CORRECT, tg="F", stereo="M", lemma="driver")]
    ranked = rank_occupations(outcomes, Quadrant("M", "M"))
    assert [lemma for lemma, _ in ranked] == ["janitor"]


# ----------------------------------------------------------------- render

def test_render_csv_single_row():
    rows = aggregate([outcome(CORRECT)], ["lang"])
    assert render(rows, "csv") == (
        "lang,n,correct,wrong,inconclusive\n"
        "de,1,1.0000,0.0000,0.0000\n"
    )


def test_render_markdown():
    rows = aggregate([outcome(CORRECT), outcome(WRONG, lang="es")], ["lang"])
    assert render(rows, "markdown") == (
        "| lang | n | correct | wrong | inconclusive |\n"
        "| --- | --- | --- | --- | --- |\n"
        "| de | 1 | 1.0000 | 0.0000 | 0.0000 |\n"
        "| es | 1 | 0.0000 | 1.0000 | 0.0000 |\n"
    )


def test_render_empty_rows_is_header_only():
    assert render([], "csv") == "n,correct,wrong,inconclusive\n"


def test_render_delta_rows():
    outcomes = delta_fixture({"MM": 0.9, "MF": 0.7, "FF": 0.6, "FM": 0.2})
    text = render(delta_table(outcomes), "csv")
    assert text == "lang,delta_m,delta_f\nde,0.2000,0.4000\n"


def test_render_deterministic():
    rng = random.Random(3)
    outcomes = [outcome(rng.choice(VERDICTS), lang=rng.choice(("de", "es")))
                for _ in range(50)]
    a = render(aggregate(outcomes, ["lang", "quadrant"]), "csv")
    b = render(aggregate(list(outcomes), ["lang", "quadrant"]), "csv")
    assert a == b


def test_render_rejects_unknown_format():
    with pytest.raises(ValueError):
        render([], "html")


def test_fraction_rounding_is_half_up():
    assert format_fraction(0.12345) == "0.1235"
    assert format_fraction(0.5, 0) == "1"
    assert format_fraction(0.73249999) == "0.7325"
    assert format_fraction(1 / 3) == "0.3333"


def test_reference_language_table_matches_golden(datadir=None):
    from pathlib import Path

    from fixture_data import build_synthetic_outcomes

    golden = Path(__file__).parent / "data" / "reference_by_lang.md"
    rows = aggregate(build_synthetic_outcomes(1000), ["lang"])
    assert len(rows) == 20
    assert render(rows, "markdown") == golden.read_text(encoding="utf-8")
