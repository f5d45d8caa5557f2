"""Aggregation of outcomes into proportion tables and accuracy-drop deltas.

All aggregation is exact counting over the echoed grouping fields; counts
are associative, so callers may pre-partition and merge. Rendering is
deterministic: stable column order, fractions printed half-up to four
decimals.
"""

from __future__ import annotations

import csv
import io
import logging
from dataclasses import dataclass
from decimal import ROUND_HALF_UP, Decimal

from .errors import UnknownDimension
from .evaluator import CORRECT, INCONCLUSIVE, WRONG, Outcome
from .generator import Quadrant

log = logging.getLogger("genspect")

DIMENSIONS = {
    "lang": lambda o: o.lang,
    "quadrant": lambda o: o.trigger_gender + o.occupation_stereotype,
    "trigger_gender": lambda o: o.trigger_gender,
    "occupation_stereotype": lambda o: o.occupation_stereotype,
    "occupation_lemma": lambda o: o.occupation_lemma,
    "frame_id": lambda o: o.frame_id,
    "trigger_position": lambda o: o.trigger_position,
    "cue_count": lambda o: o.cue_count,
    "cue_attachment": lambda o: o.cue_attachment,
}


@dataclass(frozen=True)
class ProportionRow:
    group_key: dict[str, object]
    n: int
    correct: float
    wrong: float
    inconclusive: float


@dataclass(frozen=True)
class DeltaRow:
    lang: str
    delta_m: float  # accuracy(MM) - accuracy(MF)
    delta_f: float  # accuracy(FF) - accuracy(FM)


def _counts(outcomes) -> tuple[int, int, int]:
    c = sum(1 for o in outcomes if o.verdict == CORRECT)
    w = sum(1 for o in outcomes if o.verdict == WRONG)
    i = sum(1 for o in outcomes if o.verdict == INCONCLUSIVE)
    return c, w, i


def _row(key: dict, group: list[Outcome]) -> ProportionRow:
    c, w, i = _counts(group)
    n = len(group)
    return ProportionRow(group_key=key, n=n, correct=c / n, wrong=w / n,
                         inconclusive=i / n)


def aggregate(outcomes: list[Outcome], dimensions: list[str]) -> list[ProportionRow]:
    """Partition outcomes by the requested dimensions; one row per group.

    The rows partition the input exactly (their n values sum to the total)
    and are sorted by group key.
    """
    for dim in dimensions:
        if dim not in DIMENSIONS:
            raise UnknownDimension(dim)
    groups: dict[tuple, list[Outcome]] = {}
    for o in outcomes:
        key = tuple(DIMENSIONS[dim](o) for dim in dimensions)
        groups.setdefault(key, []).append(o)
    rows = []
    for key in sorted(groups, key=lambda k: tuple(str(v) for v in k)):
        rows.append(_row(dict(zip(dimensions, key)), groups[key]))
    return rows


def _quadrant_accuracy(outcomes: list[Outcome]) -> dict[str, float]:
    acc = {}
    for row in aggregate(outcomes, ["quadrant"]):
        acc[row.group_key["quadrant"]] = row.correct
    return acc


def delta_table(outcomes: list[Outcome]) -> list[DeltaRow]:
    """Per-language accuracy drops when the occupation stereotype is
    switched away from the trigger gender. Languages missing one of the
    four quadrants are omitted with a warning."""
    rows = []
    langs = sorted({o.lang for o in outcomes})
    for lang in langs:
        sub = [o for o in outcomes if o.lang == lang]
        acc = _quadrant_accuracy(sub)
        missing = [q for q in ("MM", "MF", "FF", "FM") if q not in acc]
        if missing:
            log.warning("delta table: %s lacks quadrants %s; skipped",
                        lang, ",".join(missing))
            continue
        rows.append(DeltaRow(
            lang=lang,
            delta_m=acc["MM"] - acc["MF"],
            delta_f=acc["FF"] - acc["FM"],
        ))
    return rows


def rank_occupations(outcomes: list[Outcome], quadrant: Quadrant) -> list[tuple[str, ProportionRow]]:
    """Occupations within one quadrant, best-translated first; ties break
    lexicographically."""
    sub = [o for o in outcomes
           if o.trigger_gender == quadrant.trigger_gender
           and o.occupation_stereotype == quadrant.occupation_stereotype]
    rows = aggregate(sub, ["occupation_lemma"])
    rows.sort(key=lambda r: (-r.correct, r.group_key["occupation_lemma"]))
    return [(r.group_key["occupation_lemma"], r) for r in rows]


# -------------------------------------------------------------- rendering

def format_fraction(x: float, places: int = 4) -> str:
    q = Decimal(1).scaleb(-places)
    return str(Decimal(repr(x)).quantize(q, rounding=ROUND_HALF_UP))


def _table_of(rows) -> tuple[list[str], list[list[str]]]:
    if rows and isinstance(rows[0], DeltaRow):
        header = ["lang", "delta_m", "delta_f"]
        body = [[r.lang, format_fraction(r.delta_m), format_fraction(r.delta_f)]
                for r in rows]
        return header, body
    dims = list(rows[0].group_key) if rows else []
    header = dims + ["n", "correct", "wrong", "inconclusive"]
    body = []
    for r in rows:
        body.append([str(r.group_key[d]) for d in dims]
                    + [str(r.n), format_fraction(r.correct),
                       format_fraction(r.wrong), format_fraction(r.inconclusive)])
    return header, body


def render(rows, fmt: str = "csv") -> str:
    """Render proportion or delta rows as CSV or a Markdown table."""
    header, body = _table_of(rows)
    if fmt == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(header)
        writer.writerows(body)
        return buf.getvalue()
    if fmt == "markdown":
        lines = ["| " + " | ".join(header) + " |",
                 "|" + "|".join(" --- " for _ in header) + "|"]
        for row in body:
            lines.append("| " + " | ".join(row) + " |")
        return "\n".join(lines) + "\n"
    raise ValueError(f"unknown format {fmt!r}")
