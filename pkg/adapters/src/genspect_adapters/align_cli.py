"""adapter-align: emit Pharaoh alignments for a corpus/translations pair.

Models:
  ibm1             built-in EM aligner trained on the submitted pairs (default)
  awesome-align[:hf-model]   external neural aligner, if installed

Records without a translation (or that a backend fails on) are emitted with
an empty alignment so the evaluation degrades to Inconclusive instead of
dropping sentences.
"""

import argparse
import logging
import sys

from . import ibm1
from .config import AdapterConfig
from .formats import read_corpus_sources, read_translations, write_alignments, write_manifest

log = logging.getLogger("genspect-adapters")


def run_align(config: AdapterConfig, corpus_path, translations_path, out_path,
              iterations: int = 8) -> int:
    sources = read_corpus_sources(corpus_path)
    translations = read_translations(translations_path)

    if config.aligner_model_id == "ibm1":
        pairs = [(tokens, translations[rec_id][1])
                 for rec_id, tokens in sources if rec_id in translations]
        model = ibm1.train(pairs, iterations=iterations)
        rows = []
        for rec_id, tokens in sources:
            if rec_id in translations:
                rows.append((rec_id, ibm1.align(model, tokens, translations[rec_id][1])))
            else:
                rows.append((rec_id, []))
    elif config.aligner_model_id.startswith("awesome-align"):
        try:
            import awesome_align  # noqa: F401
        except ImportError:
            log.error("missing dependency: awesome_align is not installed "
                      "(model %r); pip install awesome-align",
                      config.aligner_model_id)
            return 3
        log.error("awesome-align backend requires its checkpoint tooling; "
                  "drive it via its own CLI and feed the Pharaoh file directly")
        return 3
    else:
        log.error("unknown aligner model %r", config.aligner_model_id)
        return 2

    write_alignments(out_path, rows)
    write_manifest(out_path, "adapter-align", [corpus_path, translations_path],
                   config.aligner_model_id, config.lang)
    log.info("aligned %d records (%d with translations)", len(rows),
             len([1 for _, p in rows if p]))
    return 0


def main(argv=None) -> int:
    logging.basicConfig(stream=sys.stderr, level=logging.INFO,
                        format="%(levelname)s %(message)s")
    parser = argparse.ArgumentParser(prog="adapter-align", description=__doc__)
    parser.add_argument("--corpus", required=True)
    parser.add_argument("--translations", required=True)
    parser.add_argument("--lang", required=True)
    parser.add_argument("--out", required=True)
    parser.add_argument("--model", default="ibm1")
    parser.add_argument("--batch-size", type=int, default=32)
    parser.add_argument("--iterations", type=int, default=8,
                        help="EM iterations for the ibm1 backend")
    args = parser.parse_args(argv)
    try:
        config = AdapterConfig(lang=args.lang, aligner_model_id=args.model,
                               batch_size=args.batch_size)
        return run_align(config, args.corpus, args.translations, args.out,
                         iterations=args.iterations)
    except (OSError, ValueError) as exc:
        log.error("%s", exc)
        return 2


if __name__ == "__main__":
    sys.exit(main())
