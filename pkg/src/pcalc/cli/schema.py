"""Problem files: the pydantic models of the JSON input and their conversion to engine objects."""

import json
import logging
from pathlib import Path
from typing import Any, Dict, List, Literal, Optional, Tuple, Union

from pydantic import BaseModel, ConfigDict, Field, StrictInt, StrictStr, model_validator
from pydantic import ValidationError as SchemaError

from ..core.embeddings import EmbeddingSet, Restriction
from ..core.halfint import HalfInt
from ..core.types import CharacterType, InfinityType
from ..errors import PcalcError, ProblemFileError
from ..periods.registry import CharacterDecl, CharacterRegistry, Representation

logger = logging.getLogger(__name__)

Scalar = Union[StrictInt, StrictStr]

# Task arguments that name declared objects.
REPRESENTATION_ARGS = ("rep", "pi", "other", "first", "second", "upstairs", "twisted")
CHARACTER_ARGS = ("eta", "char")
RESTRICTION_ARGS = ("restriction",)
EMBEDDING_ARGS = ("embeddings",)


class DoubledBlock(BaseModel):
    """Half-integers written as twice their value."""

    model_config = ConfigDict(extra="forbid")

    doubled: Literal[True]
    values: List[StrictInt]


Row = Union[DoubledBlock, List[Scalar]]


def to_halfints(row: Row, location: str) -> List[HalfInt]:
    if isinstance(row, DoubledBlock):
        return [HalfInt(v) for v in row.values]
    try:
        return [HalfInt.of(v) for v in row]
    except PcalcError as err:
        raise ProblemFileError(str(err), location) from err


def to_halfint(value: Scalar, location: str) -> HalfInt:
    try:
        return HalfInt.of(value)
    except PcalcError as err:
        raise ProblemFileError(str(err), location) from err


class EmbeddingsSpec(BaseModel):
    model_config = ConfigDict(extra="forbid")

    name: str = "F"
    labels: List[str]
    conjugates: Optional[List[str]] = None
    galois: Dict[str, List[str]] = Field(default_factory=dict)


class RestrictionSpec(BaseModel):
    model_config = ConfigDict(extra="forbid")

    name: str = "res"
    source: str
    target: str
    mapping: Dict[str, str]
    deck: Optional[str] = None


class RepresentationSpec(BaseModel):
    model_config = ConfigDict(extra="forbid")

    id: str
    embeddings: Optional[str] = None
    n: Optional[StrictInt] = None
    weight: Scalar = 0
    exponents: Dict[str, Row]
    central: Optional[str] = None

    @model_validator(mode="after")
    def _rank_matches(self) -> "RepresentationSpec":
        if self.n is None:
            return self
        for label, row in self.exponents.items():
            size = len(row.values) if isinstance(row, DoubledBlock) else len(row)
            if size != self.n:
                raise ValueError(f"{self.id}: {size} exponents at {label}, expected n={self.n}")
        return self


class CharacterSpec(BaseModel):
    model_config = ConfigDict(extra="forbid")

    id: str
    embeddings: Optional[str] = None
    a: Dict[str, Scalar]
    b: Dict[str, Scalar]
    product: List[Tuple[str, StrictInt]] = Field(default_factory=list)
    conjugate_of: Optional[str] = None
    inverse_of: Optional[str] = None
    norm_of: Optional[str] = None
    restriction: Optional[str] = None
    galois_of: Optional[str] = None
    galois: Optional[str] = None
    csd: bool = False
    finite_order: Optional[StrictInt] = None
    norm: bool = False
    trivial: bool = False


class TaskSpec(BaseModel):
    model_config = ConfigDict(extra="forbid")

    op: str
    name: Optional[str] = None
    args: Dict[str, Any] = Field(default_factory=dict)
    expect: Optional[Any] = None


class ProblemFile(BaseModel):
    model_config = ConfigDict(extra="forbid")

    embeddings: List[EmbeddingsSpec] = Field(default_factory=list)
    restrictions: List[RestrictionSpec] = Field(default_factory=list)
    representations: List[RepresentationSpec] = Field(default_factory=list)
    characters: List[CharacterSpec] = Field(default_factory=list)
    tasks: List[TaskSpec] = Field(default_factory=list)

    @model_validator(mode="after")
    def _references_resolve(self) -> "ProblemFile":
        fields = {
            "embeddings": {spec.name for spec in self.embeddings},
            "representations": {spec.id for spec in self.representations},
            "characters": {spec.id for spec in self.characters},
            "restrictions": {spec.name for spec in self.restrictions},
        }
        for i, spec in enumerate(self.restrictions):
            for side in (spec.source, spec.target):
                if side not in fields["embeddings"]:
                    raise ValueError(f"restrictions[{i}] names unknown embedding set {side!r}")
        for i, task in enumerate(self.tasks):
            for keys, kind in (
                (REPRESENTATION_ARGS, "representations"),
                (CHARACTER_ARGS, "characters"),
                (RESTRICTION_ARGS, "restrictions"),
                (EMBEDDING_ARGS, "embeddings"),
            ):
                for key in keys:
                    value = task.args.get(key)
                    if isinstance(value, str) and value not in fields[kind]:
                        raise ValueError(f"tasks[{i}].args.{key} names undeclared {kind[:-1]} {value!r}")
        return self


def _location(err: SchemaError) -> Tuple[str, str]:
    first = err.errors()[0]
    return ".".join(str(part) for part in first["loc"]), first["msg"]


def parse_problem(payload: Any, source: str = "<memory>") -> ProblemFile:
    try:
        return ProblemFile.model_validate(payload)
    except SchemaError as err:
        location, message = _location(err)
        raise ProblemFileError(message, f"{source}:{location}" if location else source) from err


def load_problem(path: Path) -> ProblemFile:
    """Read and validate a problem file; every failure is a ProblemFileError."""
    try:
        text = Path(path).read_text(encoding="utf-8")
    except OSError as err:
        raise ProblemFileError(f"cannot read file: {err}", str(path)) from err
    try:
        payload = json.loads(text)
    except json.JSONDecodeError as err:
        raise ProblemFileError(err.msg, f"{path}:{err.lineno}:{err.colno}") from err
    problem = parse_problem(payload, str(path))
    logger.info("Loaded %s with %d tasks", path, len(problem.tasks))
    return problem


def _embeddings_for(registry: CharacterRegistry, name: Optional[str], location: str) -> EmbeddingSet:
    if name is None:
        if len(registry.embedding_sets) != 1:
            raise ProblemFileError("name the embedding set; the file declares several", location)
        return next(iter(registry.embedding_sets.values()))
    if name not in registry.embedding_sets:
        raise ProblemFileError(f"unknown embedding set {name!r}", location)
    return registry.embedding_sets[name]


def build_registry(problem: ProblemFile) -> CharacterRegistry:
    """Engine objects for every declaration, validated in file order."""
    registry = CharacterRegistry()
    for i, spec in enumerate(problem.embeddings):
        try:
            registry.add_embeddings(EmbeddingSet.create(spec.labels, spec.conjugates, spec.galois, spec.name))
        except PcalcError as err:
            raise ProblemFileError(str(err), f"embeddings[{i}]") from err
    for i, spec in enumerate(problem.restrictions):
        try:
            registry.add_restriction(
                Restriction.create(
                    registry.embedding_sets[spec.source],
                    registry.embedding_sets[spec.target],
                    spec.mapping,
                    spec.deck,
                    spec.name,
                )
            )
        except PcalcError as err:
            raise ProblemFileError(str(err), f"restrictions[{i}]") from err
    for i, spec in enumerate(problem.characters):
        location = f"characters[{i}]"
        embeddings = _embeddings_for(registry, spec.embeddings, location)
        a = {label: to_halfint(v, f"{location}.a.{label}") for label, v in spec.a.items()}
        b = {label: to_halfint(v, f"{location}.b.{label}") for label, v in spec.b.items()}
        try:
            registry.declare(
                CharacterDecl(
                    id=spec.id,
                    type=CharacterType.create(embeddings, a, b),
                    product=tuple((factor, exp) for factor, exp in spec.product),
                    conjugate_of=spec.conjugate_of,
                    inverse_of=spec.inverse_of,
                    norm_of=spec.norm_of,
                    restriction=spec.restriction,
                    galois_of=spec.galois_of,
                    galois=spec.galois,
                    csd=spec.csd,
                    finite_order=spec.finite_order,
                    norm=spec.norm,
                    trivial=spec.trivial,
                )
            )
        except PcalcError as err:
            raise ProblemFileError(str(err), location) from err
    for i, spec in enumerate(problem.representations):
        location = f"representations[{i}]"
        embeddings = _embeddings_for(registry, spec.embeddings, location)
        rows = {label: to_halfints(row, f"{location}.exponents.{label}") for label, row in spec.exponents.items()}
        try:
            infinity = InfinityType.create(embeddings, rows, to_halfint(spec.weight, f"{location}.weight"))
            infinity.require_valid()
            registry.add_representation(Representation(spec.id, infinity, spec.central))
        except PcalcError as err:
            violations = getattr(err, "violations", [])
            detail = f"{err}: {'; '.join(violations)}" if violations else str(err)
            raise ProblemFileError(detail, location) from err
    logger.debug("Registry built: %s", registry.describe())
    return registry
