"""Gender-balanced word lists: triggers, occupations, contextual cues.

A lexicon lives on disk as three TSV files (``triggers.tsv``,
``occupations.tsv``, ``cues.tsv``) inside one directory. Loading validates
the balance invariants: kinship triggers and each pronoun case must have as
many F entries as M entries, and the two occupation stereotype classes must
be the same size.
"""

from __future__ import annotations

from dataclasses import dataclass
from pathlib import Path
from typing import Iterator, Optional

from .errors import BalanceViolation, MalformedRow, MissingFile, UnknownLemma

GENDERS = ("F", "M")
TRIGGER_KINDS = ("pronoun", "kinship")
PRONOUN_CASES = ("nom", "acc", "poss", "refl")
CUE_KINDS = ("adjective", "verb_subj", "verb_obj")


@dataclass(frozen=True)
class Trigger:
    lemma: str
    gender: str
    kind: str
    pronoun_case: Optional[str] = None


@dataclass(frozen=True)
class Occupation:
    lemma: str
    stereotype: str
    surface: Optional[str] = None

    @property
    def surface_form(self) -> str:
        return self.surface if self.surface is not None else self.lemma


@dataclass(frozen=True)
class ContextCue:
    lemma: str
    kind: str
    indicative_gender: str


@dataclass(frozen=True)
class Lexicon:
    triggers: tuple[Trigger, ...]
    occupations: tuple[Occupation, ...]
    cues: tuple[ContextCue, ...]

    def kinship_triggers(self) -> list[Trigger]:
        return [t for t in self.triggers if t.kind == "kinship"]

    def pronoun_triggers(self, case: str) -> list[Trigger]:
        return [t for t in self.triggers
                if t.kind == "pronoun" and t.pronoun_case == case]

    def cues_of(self, kind: str) -> list[ContextCue]:
        return [c for c in self.cues if c.kind == kind]

    def occupation(self, lemma: str) -> Occupation:
        for occ in self.occupations:
            if occ.lemma == lemma:
                return occ
        raise UnknownLemma(f"occupation {lemma!r} not in lexicon")


def _rows(path: Path, n_fields: int, optional_last: bool = False) -> Iterator[tuple[int, list[str]]]:
    """Yield (line_no, fields) for non-comment, non-blank TSV rows."""
    if not path.is_file():
        raise MissingFile(f"lexicon file not found: {path}")
    with open(path, encoding="utf-8") as fh:
        for line_no, raw in enumerate(fh, start=1):
            line = raw.rstrip("\n")
            if not line.strip() or line.lstrip().startswith("#"):
                continue
            fields = line.split("\t")
            if len(fields) == n_fields or (optional_last and len(fields) == n_fields - 1):
                yield line_no, fields
            else:
                raise MalformedRow(path, line_no,
                                   f"expected {n_fields} tab-separated fields, got {len(fields)}")


def _read_triggers(path: Path) -> tuple[Trigger, ...]:
    triggers = []
    seen = set()
    for line_no, (lemma, gender, kind, case) in _rows(path, 4):
        if gender not in GENDERS:
            raise MalformedRow(path, line_no, f"bad gender {gender!r}")
        if kind not in TRIGGER_KINDS:
            raise MalformedRow(path, line_no, f"bad trigger kind {kind!r}")
        if kind == "pronoun":
            if case not in PRONOUN_CASES:
                raise MalformedRow(path, line_no, f"bad pronoun case {case!r}")
            pronoun_case = case
        else:
            if case != "-":
                raise MalformedRow(path, line_no, "kinship rows take case '-'")
            pronoun_case = None
        key = (lemma, kind, pronoun_case)
        if key in seen:
            raise MalformedRow(path, line_no,
                               f"duplicate lemma {lemma!r} within (kind, case)")
        seen.add(key)
        triggers.append(Trigger(lemma, gender, kind, pronoun_case))
    return tuple(triggers)


def _read_occupations(path: Path) -> tuple[Occupation, ...]:
    occupations = []
    seen = set()
    for line_no, fields in _rows(path, 3, optional_last=True):
        lemma, stereotype = fields[0], fields[1]
        surface = fields[2] if len(fields) == 3 and fields[2] not in ("", "-") else None
        if stereotype not in GENDERS:
            raise MalformedRow(path, line_no, f"bad stereotype {stereotype!r}")
        if lemma in seen:
            raise MalformedRow(path, line_no, f"duplicate occupation {lemma!r}")
        seen.add(lemma)
        occupations.append(Occupation(lemma, stereotype, surface))
    return tuple(occupations)


def _read_cues(path: Path) -> tuple[ContextCue, ...]:
    cues = []
    seen = set()
    for line_no, (lemma, kind, indicative) in _rows(path, 3):
        if kind not in CUE_KINDS:
            raise MalformedRow(path, line_no, f"bad cue kind {kind!r}")
        if indicative not in GENDERS:
            raise MalformedRow(path, line_no, f"bad indicative gender {indicative!r}")
        if (lemma, kind) in seen:
            raise MalformedRow(path, line_no, f"duplicate cue {lemma!r} within {kind}")
        seen.add((lemma, kind))
        cues.append(ContextCue(lemma, kind, indicative))
    return tuple(cues)


def _check_balance(lex: Lexicon) -> None:
    kin = lex.kinship_triggers()
    f, m = sum(t.gender == "F" for t in kin), sum(t.gender == "M" for t in kin)
    if f != m:
        raise BalanceViolation("kinship triggers", f, m)
    for case in PRONOUN_CASES:
        prons = lex.pronoun_triggers(case)
        f, m = sum(t.gender == "F" for t in prons), sum(t.gender == "M" for t in prons)
        if f != m:
            raise BalanceViolation(f"pronoun triggers (case={case})", f, m)
    f = sum(o.stereotype == "F" for o in lex.occupations)
    m = sum(o.stereotype == "M" for o in lex.occupations)
    if f != m:
        raise BalanceViolation("occupation stereotypes", f, m)


def load_lexicon(path) -> Lexicon:
    """Load and validate a lexicon directory.

    Raises MissingFile, MalformedRow, or BalanceViolation. Pure function of
    the file bytes: identical files yield structurally identical lexica.
    """
    root = Path(path)
    lex = Lexicon(
        triggers=_read_triggers(root / "triggers.tsv"),
        occupations=_read_occupations(root / "occupations.tsv"),
        cues=_read_cues(root / "cues.tsv"),
    )
    _check_balance(lex)
    return lex


def stereotype_of(lex: Lexicon, occupation_lemma: str) -> str:
    """Stereotype class ('F' or 'M') of an occupation lemma."""
    return lex.occupation(occupation_lemma).stereotype
