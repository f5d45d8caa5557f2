"""Run manifests: provenance written alongside every output artifact."""

from __future__ import annotations

import hashlib
import json
from datetime import datetime, timezone
from pathlib import Path
from typing import Optional

from . import __version__


def file_digest(path) -> str:
    h = hashlib.sha256()
    with open(path, "rb") as fh:
        for chunk in iter(lambda: fh.read(1 << 16), b""):
            h.update(chunk)
    return "sha256:" + h.hexdigest()


def write_manifest(out_path, command: str, inputs, seed: Optional[int] = None,
                   extra: Optional[dict] = None) -> Path:
    """Write ``<out_path>.manifest.json`` recording command, input hashes,
    tool version, seed, and timestamp."""
    manifest = {
        "command": command,
        "inputs": {str(p): file_digest(p) for p in inputs},
        "tool_version": __version__,
        "seed": seed,
        "timestamp": datetime.now(timezone.utc).isoformat(),
    }
    if extra:
        manifest.update(extra)
    manifest_path = Path(str(out_path) + ".manifest.json")
    manifest_path.write_text(json.dumps(manifest, indent=2) + "\n", encoding="utf-8")
    return manifest_path
