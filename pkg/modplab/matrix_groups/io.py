"""Reading generator and pair files."""

import json
from pathlib import Path
from typing import Any, Dict, List, Optional, Union

from pydantic import BaseModel, ConfigDict, Field, ValidationError

from ..exceptions import GeneratorFileError, ModpLabError
from .closure import RepresentationPair
from .field import ElementJSON, FiniteField, get_field
from .matrix import SquareMatrix

MatrixJSON = List[List[ElementJSON]]


class FieldSection(BaseModel):
    """The "field" block of a generator file."""

    model_config = ConfigDict(populate_by_name=True)

    characteristic: int = Field(..., alias="char", description="The prime l")
    degree: int = Field(1, description="Extension degree m")
    modulus: List[int] = Field(
        default_factory=list, description="Low-to-high coefficients"
    )


class GeneratorFile(BaseModel):
    """{field, n, generators}."""

    field: FieldSection
    n: int = Field(..., description="Matrix dimension")
    generators: List[MatrixJSON] = Field(..., description="Row-major matrices")


class PairFile(BaseModel):
    """{field, n, m, rho, theta, source?}; rho[i], theta[i] image one generator."""

    field: FieldSection
    n: int = Field(..., description="Dimension of rho")
    m: int = Field(..., description="Dimension of theta")
    rho: List[MatrixJSON] = Field(..., description="Generator images under rho")
    theta: List[MatrixJSON] = Field(..., description="Generator images under theta")
    source: Optional[List[MatrixJSON]] = Field(
        None, description="A faithful realization of G"
    )
    description: Optional[str] = None


def field_from_section(section: FieldSection) -> FiniteField:
    try:
        return get_field(section.characteristic, section.degree, tuple(section.modulus))
    except (ValidationError, ModpLabError) as e:
        raise GeneratorFileError(f"Invalid field: {e}") from e


def field_to_json(field: FiniteField) -> Dict[str, Any]:
    return {
        "char": field.char,
        "degree": field.degree,
        "modulus": list(field.spec.modulus),
    }


def matrix_from_json(field: FiniteField, n: int, rows: MatrixJSON) -> SquareMatrix:
    """
    Read one matrix.

    Raises:
        GeneratorFileError: If the shape is wrong or an entry is not a field element
    """
    if len(rows) != n or any(len(row) != n for row in rows):
        raise GeneratorFileError(f"expected a {n}x{n} matrix, got {rows!r}")
    try:
        entries = [field.element_from_json(x) for row in rows for x in row]
        return SquareMatrix(field, n, entries)
    except (ModpLabError, ValueError) as e:
        raise GeneratorFileError(f"Invalid matrix {rows!r}: {e}") from e


def _read_json(path: Union[str, Path]) -> Any:
    try:
        text = Path(path).read_text(encoding="utf-8")
    except OSError as e:
        raise GeneratorFileError(f"Cannot read {path}: {e}") from e
    try:
        return json.loads(text)
    except json.JSONDecodeError as e:
        raise GeneratorFileError(f"Invalid JSON in {path}: {e}") from e


def parse_generators(data: Dict[str, Any]) -> List[SquareMatrix]:
    """Generators from an already-decoded generator file."""
    try:
        spec = GeneratorFile(**data)
    except (ValidationError, TypeError) as e:
        raise GeneratorFileError(f"Invalid generator file format: {e}") from e
    field = field_from_section(spec.field)
    return [matrix_from_json(field, spec.n, g) for g in spec.generators]


def parse_pair(data: Dict[str, Any], cap: Optional[int] = None) -> RepresentationPair:
    """
    Build the paired closure described by an already-decoded pair file.

    Raises:
        GeneratorFileError: If the file is malformed or the image lists disagree
    """
    try:
        spec = PairFile(**data)
    except (ValidationError, TypeError) as e:
        raise GeneratorFileError(f"Invalid pair file format: {e}") from e
    if len(spec.rho) != len(spec.theta):
        raise GeneratorFileError(
            "rho and theta must list the same number of generators"
        )
    if spec.source is not None and len(spec.source) != len(spec.rho):
        raise GeneratorFileError(
            "source must list the same number of generators as rho"
        )
    field = field_from_section(spec.field)
    rho = [matrix_from_json(field, spec.n, g) for g in spec.rho]
    theta = [matrix_from_json(field, spec.m, g) for g in spec.theta]
    source = None
    if spec.source is not None:
        size = len(spec.source[0]) if spec.source else 0
        source = [matrix_from_json(field, size, g) for g in spec.source]
    return RepresentationPair.build(rho, theta, source_gens=source, cap=cap)


def load_generators(path: Union[str, Path]) -> List[SquareMatrix]:
    return parse_generators(_read_json(path))


def load_pair(path: Union[str, Path], cap: Optional[int] = None) -> RepresentationPair:
    return parse_pair(_read_json(path), cap=cap)
