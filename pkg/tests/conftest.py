"""Shared fixtures: small ideals whose fans are known by hand."""

from pathlib import Path

import pytest

from src.algebra import TermOrderMatrix, buchberger
from src.serialization import parse_basis, parse_input, parse_order
from src.utils.logger import setup_logger
from src.utils.metrics import get_stats_collector

SAMPLES = Path(__file__).parent.parent / "sample_ideals"


@pytest.fixture(autouse=True)
def fresh_counters():
    get_stats_collector().reset()
    yield


@pytest.fixture(autouse=True)
def quiet_logs():
    """Replace loguru's DEBUG default sink with the WARNING console sink."""
    setup_logger(log_level="WARNING")
    yield


@pytest.fixture
def gfanbig_doc():
    return parse_input((SAMPLES / "gfanbig.gf").read_text(encoding="utf-8"))


@pytest.fixture
def lex_zyx() -> TermOrderMatrix:
    return parse_order("lex:z,y,x", 3, ("x", "y", "z"))


@pytest.fixture
def gfanbig_sink(gfanbig_doc, lex_zyx):
    return buchberger(gfanbig_doc.generators, lex_zyx)


@pytest.fixture
def two_points():
    return parse_basis("{!x-1, !y-1}", ("x", "y"))


@pytest.fixture
def sample_path():
    def _path(name: str) -> Path:
        return SAMPLES / name
    return _path


@pytest.fixture
def basis_text():
    def _parse(text: str, names=("x", "y", "z")):
        return parse_basis(text, names)
    return _parse
