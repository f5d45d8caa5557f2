"""Minimal readers/writers for the pipeline interchange files.

Deliberately self-contained: adapters depend on the file formats, not on
the evaluation package.
"""

import hashlib
import json
from datetime import datetime, timezone
from pathlib import Path

from . import __version__

MORPH_HEADER = "id\ttoken_index\tform\tgender\tpos"


def read_corpus_sources(path):
    """(id, tokens) pairs from a corpus JSONL file, skipping the header."""
    out = []
    with open(path, encoding="utf-8") as fh:
        for line in fh:
            if not line.strip():
                continue
            d = json.loads(line)
            if "schema" in d:
                continue
            out.append((d["id"], list(d["tokens"])))
    return out


def read_translations(path):
    """id -> (lang, tokens), file order preserved."""
    out = {}
    with open(path, encoding="utf-8") as fh:
        for line in fh:
            if not line.strip():
                continue
            d = json.loads(line)
            out[d["id"]] = (d["lang"], list(d["tokens"]))
    return out


def write_alignments(path, rows):
    """rows: iterable of (id, [(i, j), ...])."""
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        for rec_id, pairs in rows:
            field = " ".join(f"{i}-{j}" for i, j in sorted(pairs))
            fh.write(f"{rec_id}\t{field}\n")


def write_morph(path, rows):
    """rows: iterable of (id, [(form, gender, pos), ...])."""
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        fh.write(MORPH_HEADER + "\n")
        for rec_id, tokens in rows:
            for idx, (form, gender, pos) in enumerate(tokens):
                fh.write(f"{rec_id}\t{idx}\t{form}\t{gender or '-'}\t{pos or '-'}\n")


def write_manifest(out_path, command, inputs, model_id, lang):
    digest = {}
    for p in inputs:
        h = hashlib.sha256(Path(p).read_bytes()).hexdigest()
        digest[str(p)] = f"sha256:{h}"
    manifest = {
        "command": command,
        "inputs": digest,
        "model_id": model_id,
        "lang": lang,
        "tool_version": __version__,
        "timestamp": datetime.now(timezone.utc).isoformat(),
    }
    Path(str(out_path) + ".manifest.json").write_text(
        json.dumps(manifest, indent=2) + "\n", encoding="utf-8")
