import pytest

from genspect import data_path
from genspect.generator import generate_corpus
from genspect.grammar import parse_grammar
from genspect.lexicon import load_lexicon


@pytest.fixture(scope="session")
def default_lexicon():
    return load_lexicon(data_path("lexicon"))


@pytest.fixture(scope="session")
def default_grammar():
    return parse_grammar(data_path("grammar", "default.grammar"))


@pytest.fixture(scope="session")
def full_corpus_by_cue(default_grammar, default_lexicon):
    """Uncapped corpora for each cue count; generated once per session."""
    return {cc: generate_corpus(default_grammar, default_lexicon, cue_count=cc)
            for cc in (0, 1, 2)}
