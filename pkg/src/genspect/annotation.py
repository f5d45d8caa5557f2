"""Annotation interchange formats and offline dictionary fallbacks.

Wire formats (all UTF-8, LF endings, ``#`` comment lines allowed):

- translations: JSON lines ``{"id": ..., "lang": ..., "tokens": [...]}``
- alignments:   ``id<TAB>i-j i-j ...`` (Pharaoh pairs, 0-indexed; the
  field after the tab may be empty)
- morph tags:   TSV ``id  token_index  form  gender  pos`` with a header
  row; gender is Masc|Fem|Neut|-; pos is ``-`` when unknown
- gender dictionary: TSV ``form<TAB>gender`` rows plus ordered
  ``suffix:<sfx><TAB>gender`` rows
- occupation forms: TSV ``source_lemma<TAB>target_form`` (one pair per row)

The dictionary tagger and aligner are deterministic offline stand-ins for
neural toolchains: exact surface forms take precedence over suffix rules,
and the aligner never guesses (no match -> empty alignment).
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from pathlib import Path
from typing import Optional

from .errors import DuplicateId, IdMismatch, LanguageMismatch, MalformedLine
from .generator import SentenceRecord

MORPH_HEADER = "id\ttoken_index\tform\tgender\tpos"
MORPH_GENDERS = ("Masc", "Fem", "Neut")


@dataclass(frozen=True)
class Translation:
    id: str
    lang: str
    tokens: tuple[str, ...]


@dataclass(frozen=True)
class AlignmentSet:
    id: str
    pairs: frozenset[tuple[int, int]]

    def targets_of(self, src_index: int) -> list[int]:
        return sorted(j for i, j in self.pairs if i == src_index)


@dataclass(frozen=True)
class TokenTag:
    form: str
    gender: Optional[str]  # Masc | Fem | Neut | None
    pos: Optional[str] = None


@dataclass(frozen=True)
class MorphTags:
    id: str
    per_token: tuple[TokenTag, ...]


@dataclass(frozen=True)
class GenderDictionary:
    lang: str
    form_to_gender: dict[str, str]
    suffix_rules: tuple[tuple[str, str], ...]


def _data_lines(path: Path):
    if not path.is_file():
        raise MalformedLine(path, 0, "file not found")
    with open(path, encoding="utf-8") as fh:
        for line_no, raw in enumerate(fh, start=1):
            line = raw.rstrip("\n")
            if not line.strip() or line.lstrip().startswith("#"):
                continue
            yield line_no, line


# ---------------------------------------------------------------- readers

def read_translations(path) -> dict[str, Translation]:
    path = Path(path)
    out: dict[str, Translation] = {}
    for line_no, line in _data_lines(path):
        try:
            d = json.loads(line)
            tr = Translation(id=d["id"], lang=d["lang"], tokens=tuple(d["tokens"]))
        except (KeyError, TypeError, ValueError) as exc:
            raise MalformedLine(path, line_no, f"bad translation: {exc}") from exc
        if not tr.id or not tr.tokens:
            raise MalformedLine(path, line_no, "id and tokens must be nonempty")
        if tr.id in out:
            raise DuplicateId(tr.id)
        out[tr.id] = tr
    return out


def read_alignments(path) -> dict[str, AlignmentSet]:
    path = Path(path)
    out: dict[str, AlignmentSet] = {}
    for line_no, line in _data_lines(path):
        if "\t" not in line:
            raise MalformedLine(path, line_no, "expected id<TAB>pairs")
        rec_id, _, pair_field = line.partition("\t")
        pairs = set()
        for chunk in pair_field.split():
            i, sep, j = chunk.partition("-")
            if not sep or not i.isdigit() or not j.isdigit():
                raise MalformedLine(path, line_no, f"bad alignment pair {chunk!r}")
            pairs.add((int(i), int(j)))
        if rec_id in out:
            raise DuplicateId(rec_id)
        out[rec_id] = AlignmentSet(id=rec_id, pairs=frozenset(pairs))
    return out


def read_morph(path) -> dict[str, MorphTags]:
    path = Path(path)
    rows: dict[str, dict[int, TokenTag]] = {}  # insertion order = file order
    saw_header = False
    for line_no, line in _data_lines(path):
        if not saw_header:
            if line != MORPH_HEADER:
                raise MalformedLine(path, line_no, "missing morph header row")
            saw_header = True
            continue
        fields = line.split("\t")
        if len(fields) != 5:
            raise MalformedLine(path, line_no, f"expected 5 fields, got {len(fields)}")
        rec_id, idx_s, form, gender, pos = fields
        if not idx_s.isdigit():
            raise MalformedLine(path, line_no, f"bad token index {idx_s!r}")
        if gender != "-" and gender not in MORPH_GENDERS:
            raise MalformedLine(path, line_no, f"bad gender {gender!r}")
        idx = int(idx_s)
        per = rows.setdefault(rec_id, {})
        if idx in per:
            raise MalformedLine(path, line_no, f"duplicate token index {idx} for {rec_id!r}")
        per[idx] = TokenTag(
            form=form,
            gender=None if gender == "-" else gender,
            pos=None if pos == "-" else pos,
        )
    out: dict[str, MorphTags] = {}
    for rec_id, per in rows.items():
        if sorted(per) != list(range(len(per))):
            raise MalformedLine(path, 0, f"token indices for {rec_id!r} are not 0..n-1")
        out[rec_id] = MorphTags(id=rec_id, per_token=tuple(per[i] for i in range(len(per))))
    return out


# ---------------------------------------------------------------- writers

def write_translations(translations, path) -> None:
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        for tr in translations:
            fh.write(json.dumps(
                {"id": tr.id, "lang": tr.lang, "tokens": list(tr.tokens)},
                ensure_ascii=False) + "\n")


def write_alignments(alignments, path) -> None:
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        for al in alignments:
            pairs = " ".join(f"{i}-{j}" for i, j in sorted(al.pairs))
            fh.write(f"{al.id}\t{pairs}\n")


def write_morph(tag_sets, path) -> None:
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        fh.write(MORPH_HEADER + "\n")
        for tags in tag_sets:
            for idx, tag in enumerate(tags.per_token):
                fh.write("\t".join([
                    tags.id, str(idx), tag.form,
                    tag.gender if tag.gender is not None else "-",
                    tag.pos if tag.pos is not None else "-",
                ]) + "\n")


# ----------------------------------------------------- offline fallbacks

def load_gender_dictionary(path, lang: str) -> GenderDictionary:
    path = Path(path)
    forms: dict[str, str] = {}
    suffixes: list[tuple[str, str]] = []
    for line_no, line in _data_lines(path):
        fields = line.split("\t")
        if len(fields) != 2:
            raise MalformedLine(path, line_no, f"expected 2 fields, got {len(fields)}")
        form, gender = fields
        if gender not in ("Masc", "Fem"):
            raise MalformedLine(path, line_no, f"bad gender {gender!r}")
        if form.startswith("suffix:"):
            sfx = form[len("suffix:"):]
            if not sfx:
                raise MalformedLine(path, line_no, "empty suffix")
            suffixes.append((sfx, gender))
        else:
            if form in forms:
                raise MalformedLine(path, line_no, f"duplicate form {form!r}")
            forms[form] = gender
    return GenderDictionary(lang=lang, form_to_gender=forms,
                            suffix_rules=tuple(suffixes))


def dict_tag(gdict: GenderDictionary, translation: Translation) -> MorphTags:
    """Tag every token: exact form first, else first matching suffix rule,
    else no gender. Total: output length always equals the token count."""
    if gdict.lang != translation.lang:
        raise LanguageMismatch(
            f"dictionary is for {gdict.lang!r}, translation is {translation.lang!r}")
    tags = []
    for tok in translation.tokens:
        gender = gdict.form_to_gender.get(tok)
        if gender is None:
            for sfx, g in gdict.suffix_rules:
                if tok.endswith(sfx):
                    gender = g
                    break
        tags.append(TokenTag(form=tok, gender=gender))
    return MorphTags(id=translation.id, per_token=tuple(tags))


def load_occupation_forms(path) -> dict[str, set[str]]:
    path = Path(path)
    out: dict[str, set[str]] = {}
    for line_no, line in _data_lines(path):
        fields = line.split("\t")
        if len(fields) != 2:
            raise MalformedLine(path, line_no, f"expected 2 fields, got {len(fields)}")
        lemma, form = fields
        out.setdefault(lemma, set()).add(form)
    return out


def dict_align(bidict: dict[str, set[str]], record: SentenceRecord,
               translation: Translation) -> AlignmentSet:
    """Single-pair occupation alignment: the first target token whose form
    is a known translation of the occupation lemma; empty if none."""
    if record.id != translation.id:
        raise IdMismatch(f"record {record.id} vs translation {translation.id}")
    known = bidict.get(record.occupation_lemma, set())
    for j, tok in enumerate(translation.tokens):
        if tok in known:
            return AlignmentSet(id=record.id,
                                pairs=frozenset({(record.occupation_index, j)}))
    return AlignmentSet(id=record.id, pairs=frozenset())
