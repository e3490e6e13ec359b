import os
import sys

import pytest

sys.path.insert(0, os.path.dirname(__file__))

DATA_DIR = os.path.join(
    os.path.dirname(__file__), os.pardir, "src", "attrex", "data")


@pytest.fixture(scope="session")
def data_dir():
    return os.path.abspath(DATA_DIR)


@pytest.fixture(scope="session")
def wordnet_dir(data_dir):
    return os.path.join(data_dir, "wordnet")


@pytest.fixture(scope="session")
def graph(wordnet_dir):
    from attrex.wordnet import load_wordnet
    return load_wordnet(wordnet_dir)
