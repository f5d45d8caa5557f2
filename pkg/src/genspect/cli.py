"""Command-line front end: generate, tag, align, evaluate, report.

Data goes to files (or stdout for reports); logs go to stderr. Exit code 0
on success, 2 on validation or schema errors. The environment variable
GENSPECT_DATA may point at an alternative default data directory laid out
like the packaged one (lexicon/, grammar/, dicts/).
"""

from __future__ import annotations

import argparse
import logging
import os
import sys
from concurrent.futures import ProcessPoolExecutor
from pathlib import Path

from . import data_path
from .annotation import (
    dict_align,
    dict_tag,
    load_gender_dictionary,
    load_occupation_forms,
    read_alignments,
    read_morph,
    read_translations,
    write_alignments,
    write_morph,
)
from .errors import GenspectError
from .evaluator import classify, read_outcomes, write_outcomes
from .generator import generate_corpus, read_corpus, write_corpus
from .grammar import parse_grammar
from .lexicon import load_lexicon
from .manifest import write_manifest
from .metrics import aggregate, delta_table, render

log = logging.getLogger("genspect")


def _default_path(flag_value, *parts: str) -> Path:
    if flag_value:
        return Path(flag_value)
    env = os.environ.get("GENSPECT_DATA")
    if env:
        return Path(env).joinpath(*parts)
    return data_path(*parts)


# ------------------------------------------------------------- commands

def cmd_generate(args) -> int:
    grammar_path = _default_path(args.grammar, "grammar", "default.grammar")
    lexicon_path = _default_path(args.lexicon, "lexicon")
    grammar = parse_grammar(grammar_path)
    lexicon = load_lexicon(lexicon_path)
    frames = set(args.frames.split(",")) if args.frames else None
    records = generate_corpus(
        grammar,
        lexicon,
        frames=frames,
        cue_count=args.cues,
        per_quadrant_cap=args.per_quadrant,
        seed=args.seed,
    )
    write_corpus(records, args.out, grammar_hash=grammar.source_sha256,
                 seed=args.seed)
    write_manifest(
        args.out, "generate",
        [grammar_path, lexicon_path / "triggers.tsv",
         lexicon_path / "occupations.tsv", lexicon_path / "cues.tsv"],
        seed=args.seed,
        extra={"cue_count": args.cues, "frames": sorted(frames) if frames else None},
    )
    log.info("wrote %d records to %s", len(records), args.out)
    return 0


def cmd_tag(args) -> int:
    translations = read_translations(args.translations)
    gdict = load_gender_dictionary(
        _default_path(args.dict, "dicts", f"{args.lang}_gender.tsv"), args.lang)
    tag_sets = [dict_tag(gdict, tr) for tr in translations.values()]
    write_morph(tag_sets, args.out)
    write_manifest(args.out, "tag", [args.translations], extra={"lang": args.lang})
    log.info("tagged %d translations", len(tag_sets))
    return 0


def cmd_align(args) -> int:
    _, records = read_corpus(args.corpus)
    translations = read_translations(args.translations)
    bidict = load_occupation_forms(
        _default_path(args.dict, "dicts", f"{args.lang}_occupations.tsv"))
    alignments = []
    missing = 0
    for rec in records:
        tr = translations.get(rec.id)
        if tr is None:
            missing += 1
            continue
        alignments.append(dict_align(bidict, rec, tr))
    write_alignments(alignments, args.out)
    write_manifest(args.out, "align", [args.corpus, args.translations])
    if missing:
        log.warning("%d records had no translation; no alignment line emitted", missing)
    return 0


def _classify_one(payload):
    record, translation, alignment, tags = payload
    return classify(record, translation, alignment, tags)


def cmd_evaluate(args) -> int:
    _, records = read_corpus(args.corpus)
    translations = read_translations(args.translations)
    alignments = read_alignments(args.alignments) if args.alignments else {}
    tags = read_morph(args.tags) if args.tags else {}

    missing = sum(1 for r in records if r.id not in translations)
    if missing:
        log.warning("%d of %d records have no translation; verdicts degrade "
                    "to Inconclusive", missing, len(records))

    payloads = [
        (r, translations.get(r.id), alignments.get(r.id), tags.get(r.id))
        for r in records
    ]
    if args.jobs > 1:
        with ProcessPoolExecutor(max_workers=args.jobs) as pool:
            # map preserves input order regardless of worker scheduling
            outcomes = list(pool.map(_classify_one, payloads, chunksize=256))
    else:
        outcomes = [_classify_one(p) for p in payloads]

    write_outcomes(outcomes, args.out)
    inputs = [args.corpus, args.translations]
    inputs += [p for p in (args.alignments, args.tags) if p]
    write_manifest(args.out, "evaluate", inputs)
    log.info("evaluated %d records", len(outcomes))
    return 0


def cmd_report(args) -> int:
    outcomes = read_outcomes(args.outcomes)
    if args.delta:
        rows = delta_table(outcomes)
    else:
        dims = [d.strip() for d in args.group_by.split(",") if d.strip()]
        rows = aggregate(outcomes, dims)
    text = render(rows, args.format)
    if args.out:
        Path(args.out).write_text(text, encoding="utf-8")
        write_manifest(args.out, "report", [args.outcomes])
    else:
        sys.stdout.write(text)
    return 0


# --------------------------------------------------------------- parser

def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="genspect",
        description="Generate the gender-translation benchmark and score "
                    "MT output reference-free.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("generate", help="enumerate and write a corpus")
    p.add_argument("--grammar", help="grammar file (default: packaged grammar)")
    p.add_argument("--lexicon", help="lexicon directory (default: packaged lexicon)")
    p.add_argument("--out", required=True, help="output corpus JSONL")
    p.add_argument("--frames", help="comma-separated frame ids to include")
    p.add_argument("--cues", type=int, choices=(0, 1, 2), default=0,
                   help="contextual cues per sentence")
    p.add_argument("--per-quadrant", type=int, default=None,
                   help="cap records per quadrant (seeded sampling)")
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(func=cmd_generate)

    p = sub.add_parser("tag", help="dictionary morphological gender tagger")
    p.add_argument("--translations", required=True)
    p.add_argument("--lang", required=True)
    p.add_argument("--dict", help="gender dictionary TSV (default: packaged)")
    p.add_argument("--out", required=True)
    p.set_defaults(func=cmd_tag)

    p = sub.add_parser("align", help="dictionary occupation aligner")
    p.add_argument("--corpus", required=True)
    p.add_argument("--translations", required=True)
    p.add_argument("--lang", required=True)
    p.add_argument("--dict", help="occupation forms TSV (default: packaged)")
    p.add_argument("--out", required=True)
    p.set_defaults(func=cmd_align)

    p = sub.add_parser("evaluate", help="classify each record Correct/Wrong/Inconclusive")
    p.add_argument("--corpus", required=True)
    p.add_argument("--translations", required=True)
    p.add_argument("--alignments")
    p.add_argument("--tags")
    p.add_argument("--out", required=True)
    p.add_argument("--jobs", type=int, default=1)
    p.set_defaults(func=cmd_evaluate)

    p = sub.add_parser("report", help="aggregate outcomes into tables")
    p.add_argument("--outcomes", required=True)
    p.add_argument("--group-by", default="lang",
                   help="comma-separated dimensions (e.g. lang,quadrant)")
    p.add_argument("--format", choices=("csv", "markdown"), default="csv")
    p.add_argument("--delta", action="store_true",
                   help="emit per-language accuracy-drop table instead")
    p.add_argument("--out", help="write to file instead of stdout")
    p.set_defaults(func=cmd_report)

    return parser


def main(argv=None) -> int:
    logging.basicConfig(stream=sys.stderr, level=logging.INFO,
                        format="%(levelname)s %(message)s")
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except GenspectError as exc:
        log.error("%s: %s", type(exc).__name__, exc)
        return 2
    except ValueError as exc:
        log.error("%s", exc)
        return 2


if __name__ == "__main__":
    sys.exit(main())
