"""Corpus generation: derivations -> sentence records with factor metadata.

Records carry everything the evaluator and the report stage need, so no
join against the grammar or lexicon is required downstream. Corpora are
quadrant-balanced: the four cells of trigger gender x occupation stereotype
always hold the same number of records (down-sampling to the smallest cell
if a grammar skews them).
"""

from __future__ import annotations

import hashlib
import json
from dataclasses import dataclass, field
from pathlib import Path
from typing import Optional

import numpy as np

from .errors import EmptyQuadrant, EmptyTokens, MalformedLine
from .grammar import (
    CUE_KIND_BY_CLASS,
    Derivation,
    Grammar,
    binding_order,
    enumerate_derivations,
)
from .lexicon import Lexicon

CORPUS_SCHEMA = "genspect-corpus/1"
RNG_ALGORITHM = "pcg64"

# quadrant code = trigger gender then occupation stereotype
QUADRANTS = ("FF", "FM", "MF", "MM")


@dataclass(frozen=True)
class Quadrant:
    trigger_gender: str
    occupation_stereotype: str

    @property
    def code(self) -> str:
        return self.trigger_gender + self.occupation_stereotype


@dataclass(frozen=True)
class CueBinding:
    lemma: str
    kind: str
    indicative_gender: str
    attachment: str
    token_index: int


@dataclass(frozen=True)
class SentenceRecord:
    id: str
    tokens: tuple[str, ...]
    text: str
    occupation_index: int
    occupation_lemma: str
    occupation_stereotype: str
    trigger_lemma: str
    trigger_gender: str
    trigger_kind: str
    trigger_position: str
    cues: tuple[CueBinding, ...] = ()
    frame_id: str = ""
    expected_gender: str = ""

    def __post_init__(self):
        # cheap invariant checks so corrupt corpus files fail at load
        if self.expected_gender != self.trigger_gender:
            raise ValueError(f"record {self.id}: expected_gender must equal "
                             "trigger_gender")
        if self.expected_gender not in ("F", "M"):
            raise ValueError(f"record {self.id}: bad expected_gender "
                             f"{self.expected_gender!r}")
        if not 0 <= self.occupation_index < len(self.tokens):
            raise ValueError(f"record {self.id}: occupation_index out of range")
        if len(self.cues) > 2:
            raise ValueError(f"record {self.id}: more than two cues")

    @property
    def quadrant(self) -> str:
        return self.trigger_gender + self.occupation_stereotype

    def to_json_dict(self) -> dict:
        return {
            "id": self.id,
            "tokens": list(self.tokens),
            "text": self.text,
            "occupation_index": self.occupation_index,
            "occupation_lemma": self.occupation_lemma,
            "occupation_stereotype": self.occupation_stereotype,
            "trigger_lemma": self.trigger_lemma,
            "trigger_gender": self.trigger_gender,
            "trigger_kind": self.trigger_kind,
            "trigger_position": self.trigger_position,
            "cues": [vars(c).copy() for c in self.cues],
            "frame_id": self.frame_id,
            "expected_gender": self.expected_gender,
        }

    @classmethod
    def from_json_dict(cls, d: dict) -> "SentenceRecord":
        return cls(
            id=d["id"],
            tokens=tuple(d["tokens"]),
            text=d["text"],
            occupation_index=d["occupation_index"],
            occupation_lemma=d["occupation_lemma"],
            occupation_stereotype=d["occupation_stereotype"],
            trigger_lemma=d["trigger_lemma"],
            trigger_gender=d["trigger_gender"],
            trigger_kind=d["trigger_kind"],
            trigger_position=d["trigger_position"],
            cues=tuple(CueBinding(**c) for c in d["cues"]),
            frame_id=d["frame_id"],
            expected_gender=d["expected_gender"],
        )


def detokenize(tokens) -> str:
    """Join tokens with single spaces and capitalize the first character."""
    if not tokens:
        raise EmptyTokens("cannot detokenize an empty token list")
    text = " ".join(tokens)
    return text[0].upper() + text[1:]


def record_id(frame_id: str, lemmas) -> str:
    """Stable 16-hex-digit id from the frame id and bound lemmas."""
    payload = "\x1f".join([frame_id, *lemmas])
    return hashlib.sha256(payload.encode("utf-8")).hexdigest()[:16]


def record_from_derivation(grammar: Grammar, deriv: Derivation) -> SentenceRecord:
    frame = grammar.frames[deriv.frame_id]
    order = [n for n in binding_order(frame) if n in deriv.bindings]
    lemmas = []
    for name in order:
        bound = deriv.bindings[name]
        lemmas.append(bound if isinstance(bound, str) else bound.lemma)

    occ_slot = next(s for s in frame.slots if s.cls == "OCC")
    occupation = deriv.bindings[occ_slot.name]

    triggers = sorted(
        (s for s in frame.trigger_slots if s.name in deriv.bindings),
        key=lambda s: deriv.slot_indices[s.name],
    )
    primary = deriv.bindings[triggers[0].name]

    cues = []
    for slot in frame.cue_slots:
        if slot.name not in deriv.bindings:
            continue
        cue = deriv.bindings[slot.name]
        cues.append(CueBinding(
            lemma=cue.lemma,
            kind=CUE_KIND_BY_CLASS[slot.cls],
            indicative_gender=cue.indicative_gender,
            attachment=slot.attach,
            token_index=deriv.slot_indices[slot.name],
        ))
    cues.sort(key=lambda c: c.token_index)

    return SentenceRecord(
        id=record_id(deriv.frame_id, lemmas),
        tokens=deriv.tokens,
        text=detokenize(deriv.tokens),
        occupation_index=deriv.slot_indices[occ_slot.name],
        occupation_lemma=occupation.lemma,
        occupation_stereotype=occupation.stereotype,
        trigger_lemma=primary.lemma,
        trigger_gender=primary.gender,
        trigger_kind=primary.kind,
        trigger_position=frame.position,
        cues=tuple(cues),
        frame_id=deriv.frame_id,
        expected_gender=primary.gender,
    )


def generate_corpus(
    grammar: Grammar,
    lexicon: Lexicon,
    frames: Optional[set[str]] = None,
    cue_count: int = 0,
    per_quadrant_cap: Optional[int] = None,
    seed: int = 0,
) -> list[SentenceRecord]:
    """Enumerate, balance, and (optionally) down-sample the corpus.

    The four quadrants end up exactly equal in size: min(cap, smallest
    quadrant). Sampling within a quadrant is uniform without replacement,
    seeded, and records keep enumeration order in the output.
    """
    if per_quadrant_cap is not None and per_quadrant_cap < 1:
        raise ValueError("per_quadrant_cap must be >= 1")
    records = [
        record_from_derivation(grammar, d)
        for d in enumerate_derivations(grammar, lexicon, frames, cue_count)
    ]
    by_quadrant: dict[str, list[int]] = {q: [] for q in QUADRANTS}
    for i, rec in enumerate(records):
        by_quadrant[rec.quadrant].append(i)
    for q in QUADRANTS:
        if not by_quadrant[q]:
            raise EmptyQuadrant(q)

    n = min(len(v) for v in by_quadrant.values())
    if per_quadrant_cap is not None:
        n = min(n, per_quadrant_cap)

    rng = np.random.Generator(np.random.PCG64(seed))
    keep: set[int] = set()
    for q in QUADRANTS:
        pool = by_quadrant[q]
        if len(pool) > n:
            picked = rng.choice(len(pool), size=n, replace=False)
            keep.update(pool[i] for i in picked)
        else:
            keep.update(pool)
    return [rec for i, rec in enumerate(records) if i in keep]


# ------------------------------------------------------------- corpus io

def write_corpus(records, path, *, grammar_hash: str, seed: int) -> None:
    header = {
        "schema": CORPUS_SCHEMA,
        "grammar_hash": grammar_hash,
        "seed": seed,
        "rng": RNG_ALGORITHM,
    }
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        fh.write(json.dumps(header, ensure_ascii=False) + "\n")
        for rec in records:
            fh.write(json.dumps(rec.to_json_dict(), ensure_ascii=False) + "\n")


def read_corpus(path) -> tuple[dict, list[SentenceRecord]]:
    path = Path(path)
    with open(path, encoding="utf-8") as fh:
        lines = fh.read().splitlines()
    if not lines:
        raise MalformedLine(path, 0, "empty corpus file")
    header = json.loads(lines[0])
    if header.get("schema") != CORPUS_SCHEMA:
        raise MalformedLine(path, 1, f"expected schema {CORPUS_SCHEMA!r}")
    records = []
    for line_no, line in enumerate(lines[1:], start=2):
        if not line.strip():
            continue
        try:
            records.append(SentenceRecord.from_json_dict(json.loads(line)))
        except (KeyError, TypeError, ValueError) as exc:
            raise MalformedLine(path, line_no, f"bad record: {exc}") from exc
    return header, records
