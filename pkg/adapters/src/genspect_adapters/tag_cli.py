"""adapter-tag: emit the morph TSV for a translations file.

Models:
  rules            built-in rule tagger for de/es (default)
  stanza           neural tagger via the stanza package, if installed

Every token of every translation gets a row; tokens are never reordered or
retokenized.
"""

import argparse
import logging
import sys

from .config import AdapterConfig
from .formats import read_translations, write_manifest, write_morph
from .rules_tagger import tag_tokens

log = logging.getLogger("genspect-adapters")


def _stanza_rows(lang, token_lists, batch_size):  # pragma: no cover - needs models
    import stanza

    pipeline = stanza.Pipeline(lang=lang, processors="tokenize,pos",
                               tokenize_pretokenized=True, verbose=False)
    rows = []
    for start in range(0, len(token_lists), batch_size):
        batch = token_lists[start:start + batch_size]
        doc = pipeline(batch)
        for sent in doc.sentences:
            out = []
            for word in sent.words:
                feats = dict(f.split("=", 1) for f in (word.feats or "").split("|")
                             if "=" in f)
                gender = feats.get("Gender")
                out.append((word.text,
                            gender if gender in ("Masc", "Fem", "Neut") else None,
                            word.upos))
            rows.append(out)
    return rows


def run_tag(config: AdapterConfig, translations_path, out_path) -> int:
    translations = read_translations(translations_path)
    mismatched = [rid for rid, (lang, _) in translations.items()
                  if lang != config.lang]
    if mismatched:
        log.error("%d translations are not %r (first: %s)",
                  len(mismatched), config.lang, mismatched[0])
        return 2

    ids = list(translations)
    token_lists = [translations[rid][1] for rid in ids]

    if config.tagger_model_id == "rules":
        tagged = [tag_tokens(config.lang, tokens) for tokens in token_lists]
    elif config.tagger_model_id.startswith("stanza"):
        try:
            import stanza  # noqa: F401
        except ImportError:
            log.error("missing dependency: stanza is not installed "
                      "(model %r); pip install stanza", config.tagger_model_id)
            return 3
        tagged = _stanza_rows(config.lang, token_lists, config.batch_size)
    else:
        log.error("unknown tagger model %r", config.tagger_model_id)
        return 2

    write_morph(out_path, zip(ids, tagged))
    write_manifest(out_path, "adapter-tag", [translations_path],
                   config.tagger_model_id, config.lang)
    log.info("tagged %d translations", len(ids))
    return 0


def main(argv=None) -> int:
    logging.basicConfig(stream=sys.stderr, level=logging.INFO,
                        format="%(levelname)s %(message)s")
    parser = argparse.ArgumentParser(prog="adapter-tag", description=__doc__)
    parser.add_argument("--translations", required=True)
    parser.add_argument("--lang", required=True)
    parser.add_argument("--out", required=True)
    parser.add_argument("--model", default="rules")
    parser.add_argument("--batch-size", type=int, default=32)
    args = parser.parse_args(argv)
    try:
        config = AdapterConfig(lang=args.lang, tagger_model_id=args.model,
                               batch_size=args.batch_size)
        return run_tag(config, args.translations, args.out)
    except (OSError, ValueError) as exc:
        log.error("%s", exc)
        return 2


if __name__ == "__main__":
    sys.exit(main())
