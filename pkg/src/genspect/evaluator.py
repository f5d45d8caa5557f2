"""Reference-free three-way classification of gender translation.

For each source record, the grammatical gender of the translated occupation
noun is resolved through the token alignment and per-token morphological
tags, then compared against the gender the source triggers demand. Every
failure mode degrades to an Inconclusive verdict with a reason code; the
evaluator never guesses and never checks lexical translation quality, only
the gender marking.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from pathlib import Path
from typing import Optional

from .annotation import AlignmentSet, MorphTags, Translation
from .errors import IdMismatch, LengthMismatch, MalformedLine
from .generator import SentenceRecord

CORRECT = "Correct"
WRONG = "Wrong"
INCONCLUSIVE = "Inconclusive"

REASON_OK = "OK"
REASON_NO_ALIGNMENT = "NoAlignment"
REASON_NO_GENDER_TAG = "NoGenderTag"
REASON_CONFLICTING_TAGS = "ConflictingTags"
REASON_MISSING_TRANSLATION = "MissingTranslation"
REASON_MISSING_TAGS = "MissingTags"
REASON_INDEX_OUT_OF_RANGE = "IndexOutOfRange"

# expected source gender -> morphological gender of a correct translation
EXPECTED_MORPH = {"F": "Fem", "M": "Masc"}

UNDETERMINED_LANG = "und"


@dataclass(frozen=True)
class Outcome:
    id: str
    lang: str
    verdict: str
    resolved_gender: Optional[str]  # Masc | Fem | None
    reason: str
    # grouping fields echoed from the record so reports need no join
    trigger_gender: str = ""
    occupation_stereotype: str = ""
    occupation_lemma: str = ""
    frame_id: str = ""
    trigger_position: str = ""
    cue_count: int = 0
    cue_attachment: str = "none"  # none | trigger | occupation | mixed

    def to_json_dict(self) -> dict:
        return {
            "id": self.id,
            "lang": self.lang,
            "verdict": self.verdict,
            "resolved_gender": self.resolved_gender,
            "reason": self.reason,
            "trigger_gender": self.trigger_gender,
            "occupation_stereotype": self.occupation_stereotype,
            "occupation_lemma": self.occupation_lemma,
            "frame_id": self.frame_id,
            "trigger_position": self.trigger_position,
            "cue_count": self.cue_count,
            "cue_attachment": self.cue_attachment,
        }

    @classmethod
    def from_json_dict(cls, d: dict) -> "Outcome":
        return cls(**d)


def _cue_attachment_summary(record: SentenceRecord) -> str:
    attachments = {c.attachment for c in record.cues}
    if not attachments:
        return "none"
    if len(attachments) == 1:
        return next(iter(attachments))
    return "mixed"


def resolve_target_gender(
    record: SentenceRecord,
    translation: Translation,
    alignment: AlignmentSet,
    tags: MorphTags,
) -> tuple[Optional[str], str]:
    """Resolve the gender of the aligned occupation tokens.

    Returns (Masc|Fem|None, reason). Ties among aligned tokens prefer
    NOUN-tagged ones; disagreement after that is conservative: no verdict.
    """
    if not (record.id == translation.id == alignment.id == tags.id):
        raise IdMismatch(
            f"ids disagree: {record.id}/{translation.id}/{alignment.id}/{tags.id}")
    if len(tags.per_token) != len(translation.tokens):
        raise LengthMismatch(
            f"{record.id}: {len(tags.per_token)} tags for "
            f"{len(translation.tokens)} tokens")

    targets = alignment.targets_of(record.occupation_index)
    if not targets:
        return None, REASON_NO_ALIGNMENT
    if any(j >= len(translation.tokens) for j in targets):
        return None, REASON_INDEX_OUT_OF_RANGE

    candidates = [tags.per_token[j] for j in targets
                  if tags.per_token[j].gender in ("Masc", "Fem")]
    if not candidates:
        # only Neut or untagged tokens: no binary determination
        return None, REASON_NO_GENDER_TAG
    nouns = [t for t in candidates if (t.pos or "").upper() == "NOUN"]
    pool = nouns if nouns else candidates
    genders = {t.gender for t in pool}
    if len(genders) == 1:
        return next(iter(genders)), REASON_OK
    return None, REASON_CONFLICTING_TAGS


def classify(
    record: SentenceRecord,
    translation: Optional[Translation] = None,
    alignment: Optional[AlignmentSet] = None,
    tags: Optional[MorphTags] = None,
) -> Outcome:
    """Three-way verdict for one record; missing inputs degrade to
    Inconclusive with the corresponding reason, never an error."""
    lang = translation.lang if translation is not None else UNDETERMINED_LANG

    if translation is None:
        gender, reason = None, REASON_MISSING_TRANSLATION
    elif tags is None or len(tags.per_token) != len(translation.tokens):
        # tags that do not cover the translation are as good as absent
        gender, reason = None, REASON_MISSING_TAGS
    elif alignment is None:
        gender, reason = None, REASON_NO_ALIGNMENT
    else:
        gender, reason = resolve_target_gender(record, translation, alignment, tags)

    if gender is None:
        verdict = INCONCLUSIVE
    elif gender == EXPECTED_MORPH[record.expected_gender]:
        verdict = CORRECT
    else:
        verdict = WRONG

    return Outcome(
        id=record.id,
        lang=lang,
        verdict=verdict,
        resolved_gender=gender,
        reason=reason,
        trigger_gender=record.trigger_gender,
        occupation_stereotype=record.occupation_stereotype,
        occupation_lemma=record.occupation_lemma,
        frame_id=record.frame_id,
        trigger_position=record.trigger_position,
        cue_count=len(record.cues),
        cue_attachment=_cue_attachment_summary(record),
    )


def evaluate_corpus(
    records,
    translations: dict[str, Translation],
    alignments: dict[str, AlignmentSet],
    tags: dict[str, MorphTags],
) -> list[Outcome]:
    """One outcome per record, in record order. Pure in its inputs."""
    return [
        classify(
            rec,
            translations.get(rec.id),
            alignments.get(rec.id),
            tags.get(rec.id),
        )
        for rec in records
    ]


# ------------------------------------------------------------ outcome io

def write_outcomes(outcomes, path) -> None:
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        for out in outcomes:
            fh.write(json.dumps(out.to_json_dict(), ensure_ascii=False) + "\n")


def read_outcomes(path) -> list[Outcome]:
    path = Path(path)
    outcomes = []
    with open(path, encoding="utf-8") as fh:
        for line_no, line in enumerate(fh, start=1):
            if not line.strip():
                continue
            try:
                outcomes.append(Outcome.from_json_dict(json.loads(line)))
            except (KeyError, TypeError, ValueError) as exc:
                raise MalformedLine(path, line_no, f"bad outcome: {exc}") from exc
    return outcomes
