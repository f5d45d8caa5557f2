"""Adapters that run alignment/tagging toolchains over (source, translation)
pairs and emit the interchange files the evaluation pipeline consumes.

The adapters talk to the pipeline through files only: corpus and
translation JSON lines in, Pharaoh alignments or morph TSV out.
"""

__version__ = "0.1.0"
