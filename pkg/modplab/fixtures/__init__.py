"""Shipped generator and pair files."""

import json
from importlib import resources
from typing import Any, Dict, List, Optional, Union

from ..exceptions import GeneratorFileError
from ..matrix_groups.closure import RepresentationPair
from ..matrix_groups.io import parse_generators, parse_pair
from ..matrix_groups.matrix import SquareMatrix

PAIR_FIXTURES = ("a4_f7", "klein_f7", "s3_f7")
GROUP_FIXTURES = (
    "monomial_f4",
    "monomial_f7",
    "monomial_f13",
    "unipotent_f2",
    "unipotent_f5",
)
FIXTURE_NAMES = PAIR_FIXTURES + GROUP_FIXTURES


def load_fixture_data(name: str) -> Dict[str, Any]:
    if name not in FIXTURE_NAMES:
        raise GeneratorFileError(
            f"Unknown fixture {name!r}; choose one of {', '.join(FIXTURE_NAMES)}"
        )
    resource = resources.files(__name__).joinpath(f"{name}.json")
    text = resource.read_text(encoding="utf-8")
    return json.loads(text)


def load_fixture(
    name: str, cap: Optional[int] = None
) -> Union[RepresentationPair, List[SquareMatrix]]:
    """
    Load a shipped fixture.

    Args:
        name: One of FIXTURE_NAMES
        cap: Closure cap for pair fixtures

    Returns:
        A RepresentationPair for pair fixtures, a generator list otherwise
    """
    data = load_fixture_data(name)
    if name in PAIR_FIXTURES:
        return parse_pair(data, cap=cap)
    return parse_generators(data)
