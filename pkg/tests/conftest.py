import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from corpus import build_corpus  # noqa: E402

from gorlab import GF, QQ  # noqa: E402


@pytest.fixture(scope="session")
def corpus_q():
    return build_corpus(QQ, 50, seed=0)


@pytest.fixture(scope="session")
def corpus_f7():
    return build_corpus(GF(7), 50, seed=0)


@pytest.fixture(scope="session")
def corpus_all(corpus_q, corpus_f7):
    return corpus_q + corpus_f7
