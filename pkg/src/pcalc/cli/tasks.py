"""The task catalogue: one handler per operation name, and the task runner."""

import logging
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from typing import Any, Callable, Dict, List, Mapping, Optional, Sequence, Tuple

from ..config import Settings
from ..core.embeddings import EmbeddingSet, Restriction
from ..core.halfint import HalfInt
from ..core.types import InfinityType, conjugate, dual, is_conjugate_self_dual, twist, validate
from ..critical.sets import (
    HodgeTypeList,
    critical_set_character,
    critical_set_motive,
    critical_set_pair,
    motivic_triple_critical,
)
from ..errors import PcalcError, ProblemFileError
from ..factorization.arithmetic import factorize_arithmetic_periods
from ..factorization.tables import ProductTable, exchange_witness, factorize
from ..hodge.weights import (
    HighestWeight,
    WOneElement,
    enumerate_W1,
    hodge_number,
    identity_element,
    longest_element,
    shimura_dimension,
    star_action,
)
from ..indices.functoriality import ai_global_index, ai_local_index, bc_index
from ..indices.signs import SignMap, galois_transport, sign_map
from ..indices.split import is_good_position, split_index_properties_check, split_indices
from ..periods.lattice import RelationLattice
from ..periods.monomial import PeriodMonomial
from ..periods.registry import CharacterDecl, CharacterRegistry, Representation
from ..periods.relations import blasius_monomial, cm_relation_pack, register_relations
from ..theorems.central_values import derive_central_value
from ..theorems.conjecture import deligne_compatibility_check, main_conjecture_rhs
from ..theorems.critical_values import derive_critical_value
from ..theorems.functoriality import ai_relation_check, bc_relation_check
from ..theorems.models import EQUIVALENT, MISMATCH, FormulaReport, MotiveHodgeData
from ..theorems.motivic import deligne_period, motivic_local_period
from ..theorems.n_times_one import rhs_n_times_one
from ..theorems.whittaker import IsobaricPart, whittaker_formula, whittaker_langlands_sum
from .report import FAILED, TaskResult, to_jsonable
from .schema import DoubledBlock, ProblemFile, SchemaError, TaskSpec, to_halfint, to_halfints
from .sweeps import SweepOutcome, sweep_central_value, sweep_critical_value, sweep_deligne

logger = logging.getLogger(__name__)

_MISSING = object()


def _is_int(value: Any) -> bool:
    return isinstance(value, int) and not isinstance(value, bool)


@dataclass
class TaskInputs:
    """Typed access to one task's arguments; bad arguments are ProblemFileErrors."""

    values: Mapping[str, Any]
    registry: CharacterRegistry
    settings: Settings
    location: str

    def raw(self, key: str, default: Any = _MISSING) -> Any:
        if key in self.values:
            return self.values[key]
        if default is _MISSING:
            raise ProblemFileError(f"missing argument {key!r}", self.location)
        return default

    def _where(self, key: str) -> str:
        return f"{self.location}.{key}"

    def integer(self, key: str, default: Any = _MISSING) -> Any:
        value = self.raw(key, default)
        if value is None and default is None:
            return None
        if not _is_int(value):
            raise ProblemFileError(f"expected an integer, got {value!r}", self._where(key))
        return value

    def text(self, key: str, default: Any = _MISSING) -> Any:
        value = self.raw(key, default)
        if value is not None and not isinstance(value, str):
            raise ProblemFileError(f"expected a string, got {value!r}", self._where(key))
        return value

    def boolean(self, key: str, default: Any = _MISSING) -> Any:
        value = self.raw(key, default)
        if value is None and default is None:
            return None
        if not isinstance(value, bool):
            raise ProblemFileError(f"expected true or false, got {value!r}", self._where(key))
        return value

    def strings(self, key: str) -> Optional[List[str]]:
        value = self.values.get(key)
        if value is None:
            return None
        if not isinstance(value, list) or not all(isinstance(item, str) for item in value):
            raise ProblemFileError("expected a list of strings", self._where(key))
        return value

    def record(self, key: str, fields: Sequence[str], default: Any = _MISSING) -> Any:
        """A JSON object that carries at least ``fields``."""
        value = self.raw(key, default)
        if value is None and default is None:
            return None
        return self._object(value, fields, self._where(key))

    def records(self, key: str, fields: Sequence[str]) -> List[Dict[str, Any]]:
        value = self.raw(key)
        if not isinstance(value, list):
            raise ProblemFileError("expected a list of objects", self._where(key))
        return [self._object(item, fields, f"{self._where(key)}[{i}]") for i, item in enumerate(value)]

    @staticmethod
    def _object(value: Any, fields: Sequence[str], location: str) -> Dict[str, Any]:
        if not isinstance(value, dict):
            raise ProblemFileError(f"expected an object, got {value!r}", location)
        missing = [name for name in fields if name not in value]
        if missing:
            raise ProblemFileError(f"missing field {missing[0]!r}", location)
        return value

    @staticmethod
    def integers(value: Any, location: str) -> List[int]:
        if not isinstance(value, list) or not all(_is_int(item) for item in value):
            raise ProblemFileError(f"expected a list of integers, got {value!r}", location)
        return value

    @staticmethod
    def point(value: Any, location: str) -> Tuple[Any, ...]:
        """A table coordinate: a list of integers or strings."""
        if not isinstance(value, list) or not all(_is_int(item) or isinstance(item, str) for item in value):
            raise ProblemFileError(f"expected a list of integers or strings, got {value!r}", location)
        return tuple(value)

    def labelled_integers(self, key: str, embeddings: EmbeddingSet) -> Dict[str, int]:
        """One integer per label of ``embeddings``."""
        value = self.raw(key)
        if not isinstance(value, dict):
            raise ProblemFileError("expected a map from labels to integers", self._where(key))
        for label in embeddings.labels:
            if label not in value:
                raise ProblemFileError(f"missing label {label!r}", self._where(key))
            if not _is_int(value[label]):
                raise ProblemFileError(f"expected an integer, got {value[label]!r}", f"{self._where(key)}.{label}")
        return {label: value[label] for label in embeddings.labels}

    def halfint(self, key: str, default: Any = _MISSING) -> HalfInt:
        return to_halfint(self.raw(key, default), self._where(key))

    def row(self, value: Any, location: str) -> List[HalfInt]:
        """A list of half-integers, or a {"doubled": true, "values": [...]} block."""
        if isinstance(value, dict):
            try:
                value = DoubledBlock.model_validate(value)
            except SchemaError as err:
                raise ProblemFileError("malformed doubled block", location) from err
        elif not isinstance(value, list):
            raise ProblemFileError(f"expected a list of exponents, got {value!r}", location)
        return to_halfints(value, location)

    def rep(self, key: str) -> Representation:
        return self.registry.representation(self.text(key))

    def infinity(self, key: str) -> InfinityType:
        return self.rep(key).infinity

    def character(self, key: str) -> CharacterDecl:
        return self.registry.character(self.text(key))

    def restriction(self, key: str = "restriction") -> Restriction:
        name = self.text(key)
        if name not in self.registry.restrictions:
            raise ProblemFileError(f"unknown restriction {name!r}", self._where(key))
        return self.registry.restrictions[name]

    def embeddings(self, key: str = "embeddings") -> EmbeddingSet:
        name = self.text(key, None)
        if name is None and len(self.registry.embedding_sets) == 1:
            return next(iter(self.registry.embedding_sets.values()))
        if name not in self.registry.embedding_sets:
            raise ProblemFileError(f"unknown embedding set {name!r}", self._where(key))
        return self.registry.embedding_sets[name]

    def place(self, key: str = "place") -> str:
        value = self.raw(key)
        if not isinstance(value, str):
            raise ProblemFileError(f"expected a place label, got {value!r}", self._where(key))
        return value

    def signs(self, key: str, embeddings: EmbeddingSet, n: int) -> SignMap:
        return SignMap.create(embeddings, self.labelled_integers(key, embeddings), n)

    def monomial(self, key: str, default: Any = _MISSING) -> PeriodMonomial:
        value = self.raw(key, default)
        return self._parse_monomial(value, self._where(key))

    def monomials(self, key: str) -> List[PeriodMonomial]:
        value = self.raw(key, [])
        if not isinstance(value, list):
            raise ProblemFileError("expected a list of monomials", self._where(key))
        return [self._parse_monomial(item, f"{self._where(key)}[{i}]") for i, item in enumerate(value)]

    @staticmethod
    def _parse_monomial(value: Any, location: str) -> PeriodMonomial:
        if isinstance(value, dict) and "terms" in value:
            value = value["terms"]
        try:
            return PeriodMonomial.from_json(value)
        except (KeyError, TypeError, ValueError) as err:
            raise ProblemFileError(f"malformed monomial: {err}", location) from err

    def lattice(self, key: str = "relations") -> RelationLattice:
        """Relations given in the task plus, on request, the CM pack of the registry."""
        lattice = RelationLattice()
        for monomial in self.monomials(key):
            lattice.add_relation(monomial, "problem.relation")
        if self.values.get("cm_pack", False):
            register_relations(lattice, cm_relation_pack(self.registry))
        return lattice


Handler = Callable[[TaskInputs], Any]
OPERATIONS: Dict[str, Handler] = {}


def operation(name: str) -> Callable[[Handler], Handler]:
    def register(handler: Handler) -> Handler:
        OPERATIONS[name] = handler
        return handler

    return register


# core


@operation("validate")
def _validate(args: TaskInputs) -> Any:
    return validate(args.infinity("rep"))


@operation("is_n_regular")
def _is_n_regular(args: TaskInputs) -> Any:
    return args.infinity("rep").is_n_regular(args.integer("bound", 1))


@operation("dual")
def _dual(args: TaskInputs) -> Any:
    return dual(args.infinity("rep"))


@operation("conjugate")
def _conjugate(args: TaskInputs) -> Any:
    return conjugate(args.infinity("rep"))


@operation("twist")
def _twist(args: TaskInputs) -> Any:
    return twist(args.infinity("rep"), args.character("eta").type)


@operation("is_conjugate_self_dual")
def _is_csd(args: TaskInputs) -> Any:
    return is_conjugate_self_dual(args.infinity("rep"))


# indices


@operation("split_indices")
def _split_indices(args: TaskInputs) -> Any:
    return split_indices(args.infinity("pi"), args.infinity("other"), args.place())


@operation("split_index_properties_check")
def _split_properties(args: TaskInputs) -> Any:
    eta = args.character("eta").type if "eta" in args.values else None
    return split_index_properties_check(args.infinity("pi"), args.infinity("other"), args.place(), eta)


@operation("is_good_position")
def _is_good_position(args: TaskInputs) -> Any:
    return is_good_position(args.infinity("pi"), args.infinity("other"))


@operation("sign_map")
def _sign_map(args: TaskInputs) -> Any:
    return sign_map(args.infinity("rep"), args.character("eta").type)


@operation("ai_local_index")
def _ai_local_index(args: TaskInputs) -> Any:
    blocks = args.raw("blocks")
    if not isinstance(blocks, dict):
        raise ProblemFileError("expected a map from labels to exponent lists", f"{args.location}.blocks")
    rows = {label: args.row(row, f"{args.location}.blocks.{label}") for label, row in blocks.items()}
    return ai_local_index(rows, args.integer("s"))


@operation("ai_global_index")
def _ai_global_index(args: TaskInputs) -> Any:
    restriction = args.restriction()
    upstairs = args.infinity("upstairs")
    signs = args.signs("signs", restriction.target, upstairs.n * restriction.degree())
    return ai_global_index(signs, upstairs, restriction)


@operation("bc_index")
def _bc_index(args: TaskInputs) -> Any:
    restriction = args.restriction()
    return bc_index(args.signs("signs", restriction.target, args.integer("n")), restriction)


@operation("galois_transport")
def _galois_transport(args: TaskInputs) -> Any:
    embeddings = args.embeddings()
    signs = args.signs("signs", embeddings, args.integer("n"))
    return galois_transport(signs, embeddings.permutation(args.text("galois")))


# critical


@operation("critical_set_motive")
def _critical_set_motive(args: TaskInputs) -> Any:
    ps = args.row(args.raw("ps"), f"{args.location}.ps")
    return critical_set_motive(HodgeTypeList.create(args.halfint("weight"), ps))


@operation("critical_set_pair")
def _critical_set_pair(args: TaskInputs) -> Any:
    return critical_set_pair(args.infinity("pi"), args.infinity("other"))


@operation("critical_set_character")
def _critical_set_character(args: TaskInputs) -> Any:
    return critical_set_character(args.character("eta").type)


def _highest_weight(args: TaskInputs, embeddings: EmbeddingSet) -> HighestWeight:
    payload = args.record("weight", ("rows",))
    where = f"{args.location}.weight"
    lambda0 = payload.get("lambda0", 0)
    if not _is_int(lambda0):
        raise ProblemFileError(f"expected an integer, got {lambda0!r}", f"{where}.lambda0")
    rows = payload["rows"]
    if not isinstance(rows, dict):
        raise ProblemFileError("expected a map from labels to integer rows", f"{where}.rows")
    checked = {label: TaskInputs.integers(row, f"{where}.rows.{label}") for label, row in rows.items()}
    return HighestWeight.create(embeddings, lambda0, checked)


@operation("motivic_triple_critical")
def _motivic_triple_critical(args: TaskInputs) -> Any:
    embeddings = args.embeddings()
    weight = _highest_weight(args, embeddings)
    signs = args.signs("signs", embeddings, weight.n)
    shifts = args.labelled_integers("k", embeddings)
    return motivic_triple_critical(weight, signs, shifts, args.integer("kappa"), args.integer("m"))


# hodge


def _w_element(args: TaskInputs, n: int, signs: SignMap) -> WOneElement:
    choice = args.raw("w", "w0")
    if choice == "w0":
        return longest_element(n, signs)
    if choice == "identity":
        return identity_element(n, signs)
    if not isinstance(choice, dict):
        raise ProblemFileError("expected 'w0', 'identity' or a map of permutations", f"{args.location}.w")
    blocks = tuple(n - value for value in signs.values)
    try:
        perms = tuple(tuple(int(i) for i in choice[label]) for label in signs.embeddings.labels)
    except (KeyError, TypeError, ValueError) as err:
        raise ProblemFileError(f"bad permutation map: {err}", f"{args.location}.w") from err
    element = WOneElement(signs.embeddings, perms, blocks)
    if any(sorted(perm) != list(range(1, n + 1)) for perm in perms) or not element.is_valid():
        raise ProblemFileError("not an element of W1 for these signs", f"{args.location}.w")
    return element


@operation("enumerate_W1")
def _enumerate_w1(args: TaskInputs) -> Any:
    n = args.integer("n")
    return enumerate_W1(n, args.signs("signs", args.embeddings(), n), args.integer("bound", args.settings.w1_bound))


@operation("star_action")
def _star_action(args: TaskInputs) -> Any:
    embeddings = args.embeddings()
    weight = _highest_weight(args, embeddings)
    signs = args.signs("signs", embeddings, weight.n)
    return star_action(_w_element(args, weight.n, signs), weight)


@operation("hodge_number")
def _hodge_number(args: TaskInputs) -> Any:
    embeddings = args.embeddings()
    weight = _highest_weight(args, embeddings)
    signs = args.signs("signs", embeddings, weight.n)
    return hodge_number(_w_element(args, weight.n, signs), weight, signs)


@operation("shimura_dimension")
def _shimura_dimension(args: TaskInputs) -> Any:
    n = args.integer("n")
    return shimura_dimension(n, args.signs("signs", args.embeddings(), n))


# periods


@operation("equivalent")
def _equivalent(args: TaskInputs) -> Any:
    return args.lattice().equivalent(args.monomial("a"), args.monomial("b"))


@operation("cm_relation_pack")
def _cm_relation_pack(args: TaskInputs) -> Any:
    return cm_relation_pack(args.registry, args.strings("chars"))


@operation("blasius_monomial")
def _blasius_monomial(args: TaskInputs) -> Any:
    decl = args.character("eta")
    return blasius_monomial(decl.id, decl.type, args.halfint("m"), args.strings("cm_type"))


# factorization


def _product_table(args: TaskInputs) -> ProductTable:
    axes = args.raw("axes")
    if not isinstance(axes, list):
        raise ProblemFileError("expected a list of axes", f"{args.location}.axes")
    checked = [TaskInputs.point(axis, f"{args.location}.axes[{k}]") for k, axis in enumerate(axes)]
    values = {}
    for i, entry in enumerate(args.records("values", ("point", "value"))):
        where = f"{args.location}.values[{i}]"
        values[TaskInputs.point(entry["point"], f"{where}.point")] = TaskInputs._parse_monomial(entry["value"], where)
    return ProductTable.create(checked, values)


@operation("exchange_condition")
def _exchange_condition(args: TaskInputs) -> Any:
    witness = exchange_witness(_product_table(args), args.lattice())
    return {"holds": witness is None, "witness": None if witness is None else [list(witness[0]), list(witness[1]), witness[2]]}


@operation("factorize")
def _factorize(args: TaskInputs) -> Any:
    pairs = args.raw("anchors")
    if not isinstance(pairs, list):
        raise ProblemFileError("expected a list of [point, monomial] pairs", f"{args.location}.anchors")
    anchors = []
    for i, pair in enumerate(pairs):
        where = f"{args.location}.anchors[{i}]"
        if not isinstance(pair, list) or len(pair) != 2:
            raise ProblemFileError(f"expected a [point, monomial] pair, got {pair!r}", where)
        at = TaskInputs.point([pair[0]], where)[0]
        anchors.append((at, TaskInputs._parse_monomial(pair[1], where)))
    result = factorize(_product_table(args), args.lattice(), anchors)
    return [{str(x): value for x, value in factor.items()} for factor in result.factors]


@operation("factorize_arithmetic_periods")
def _factorize_arithmetic_periods(args: TaskInputs) -> Any:
    registry = args.registry.fork()
    rep = registry.ensure_central(args.rep("rep"))
    table = {}
    for i, entry in enumerate(args.records("table", ("signs", "value"))):
        where = f"{args.location}.table[{i}]"
        table[tuple(TaskInputs.integers(entry["signs"], f"{where}.signs"))] = TaskInputs._parse_monomial(entry["value"], where)
    lattice = args.lattice()
    register_relations(lattice, cm_relation_pack(registry))
    result = factorize_arithmetic_periods(rep, table, lattice)
    return {f"{label}:{s}": value for (label, s), value in sorted(result.periods.items())}


# theorems


@operation("rhs_n_times_one")
def _rhs_n_times_one(args: TaskInputs) -> Any:
    decl = args.character("eta")
    rep = args.registry.fork().ensure_central(args.rep("rep"))
    return rhs_n_times_one(rep, decl.id, decl.type, args.halfint("m"), args.boolean("strict", True))


@operation("whittaker_formula")
def _whittaker_formula(args: TaskInputs) -> Any:
    return whittaker_formula(args.registry.fork().ensure_central(args.rep("rep")))


@operation("whittaker_langlands_sum")
def _whittaker_langlands_sum(args: TaskInputs) -> Any:
    parts = [IsobaricPart(rep_id, args.registry.representation(rep_id).infinity) for rep_id in args.strings("parts") or []]
    return whittaker_langlands_sum(args.text("total"), parts)


def _motive(args: TaskInputs, key: str) -> MotiveHodgeData:
    return MotiveHodgeData.from_representation(args.registry.fork().ensure_central(args.rep(key)))


@operation("deligne_period")
def _deligne_period(args: TaskInputs) -> Any:
    return deligne_period(_motive(args, "pi"), _motive(args, "other"), args.strings("cm_type"))


@operation("motivic_local_period")
def _motivic_local_period(args: TaskInputs) -> Any:
    return motivic_local_period(_motive(args, "rep"), args.integer("j"), args.place())


@operation("main_conjecture_rhs")
def _main_conjecture_rhs(args: TaskInputs) -> Any:
    return main_conjecture_rhs(args.rep("pi"), args.rep("other"), args.halfint("m"), args.boolean("strict", True))


@operation("deligne_compatibility_check")
def _deligne_compatibility_check(args: TaskInputs) -> Any:
    perturb = args.record("perturb", ("place", "j", "change"), None)
    if perturb is not None:
        where = f"{args.location}.perturb"
        if not isinstance(perturb["place"], str):
            raise ProblemFileError(f"expected a place label, got {perturb['place']!r}", f"{where}.place")
        for field in ("j", "change"):
            if not _is_int(perturb[field]):
                raise ProblemFileError(f"expected an integer, got {perturb[field]!r}", f"{where}.{field}")
    return deligne_compatibility_check(
        args.rep("pi"),
        args.rep("other"),
        args.halfint("m"),
        perturb=None if perturb is None else (perturb["place"], perturb["j"], perturb["change"]),
        registry=args.registry,
    )


@operation("derive_critical_value")
def _derive_critical_value(args: TaskInputs) -> Any:
    return derive_critical_value(
        args.rep("pi"),
        args.rep("other"),
        args.halfint("m"),
        case=args.text("case", None),
        registry=args.registry,
        assume_nonvanishing=args.boolean("assume_nonvanishing", False),
    )


@operation("derive_central_value")
def _derive_central_value(args: TaskInputs) -> Any:
    return derive_central_value(args.rep("first"), args.rep("second"), case=args.text("case", None), registry=args.registry)


@operation("ai_relation_check")
def _ai_relation_check(args: TaskInputs) -> Any:
    restriction = args.restriction()
    upstairs = args.rep("upstairs")
    signs = None
    if "signs" in args.values:
        signs = args.signs("signs", restriction.target, upstairs.n * restriction.degree())
    return ai_relation_check(upstairs, restriction, args.boolean("corrected", None), signs, registry=args.registry)


@operation("bc_relation_check")
def _bc_relation_check(args: TaskInputs) -> Any:
    restriction = args.restriction()
    pi = args.rep("pi")
    signs = args.signs("signs", restriction.target, pi.n) if "signs" in args.values else None
    return bc_relation_check(pi, restriction, args.integer("l", None), signs, registry=args.registry)


# sweeps


def _sweep_args(args: TaskInputs) -> Tuple[int, int]:
    return args.integer("seed", args.settings.seed), args.integer("cases", args.settings.cases)


@operation("sweep_critical_value")
def _sweep_critical_value(args: TaskInputs) -> Any:
    return sweep_critical_value(*_sweep_args(args))


@operation("sweep_central_value")
def _sweep_central_value(args: TaskInputs) -> Any:
    return sweep_central_value(*_sweep_args(args))


@operation("sweep_deligne")
def _sweep_deligne(args: TaskInputs) -> Any:
    return sweep_deligne(*_sweep_args(args))


def _record(result: TaskResult, value: Any) -> None:
    if isinstance(value, FormulaReport):
        result.verdict = EQUIVALENT if value.ok else MISMATCH
        result.outputs = {"value": result.verdict, "report": value.to_json()}
    elif isinstance(value, SweepOutcome):
        result.verdict = EQUIVALENT if value.ok else MISMATCH
        result.outputs = {"value": result.verdict, "sweep": value.to_json()}
    else:
        result.outputs = {"value": to_jsonable(value)}


def run_task(index: int, spec: TaskSpec, registry: CharacterRegistry, settings: Settings, verify: bool) -> TaskResult:
    """Run one task. Argument errors propagate as ProblemFileError; engine errors fail the task."""
    name = spec.name or f"{index}:{spec.op}"
    result = TaskResult(index=index, op=spec.op, name=name, inputs=dict(spec.args), expected=spec.expect)
    location = f"tasks[{index}]"
    handler = OPERATIONS.get(spec.op)
    if handler is None:
        raise ProblemFileError(f"unknown operation {spec.op!r}", f"{location}.op")

    args = TaskInputs(spec.args, registry, settings, f"{location}.args")
    logger.info("Task %s started", name)
    try:
        _record(result, handler(args))
    except ProblemFileError:
        raise
    except PcalcError as err:
        result.error = f"{type(err).__name__}: {err}"
        result.fail(result.error)
        return result

    actual = result.outputs.get("value")
    if spec.expect is not None and actual != spec.expect:
        result.mismatch = {"expected": spec.expect, "actual": actual}
        result.fail("output differs from the expected value")
    elif verify and result.verdict == MISMATCH:
        result.fail("verdict is mismatch")
    logger.info("Task %s %s", name, result.status)
    return result


def run_tasks(
    problem: ProblemFile,
    registry: CharacterRegistry,
    settings: Settings,
    verify: bool = False,
    parallel: bool = False,
) -> List[TaskResult]:
    """All tasks, reported in declaration order even when run concurrently."""
    jobs: Sequence[Tuple[int, TaskSpec]] = list(enumerate(problem.tasks))
    if not parallel or len(jobs) < 2:
        return [run_task(i, spec, registry, settings, verify) for i, spec in jobs]
    with ThreadPoolExecutor(max_workers=max(1, settings.workers)) as pool:
        return list(pool.map(lambda job: run_task(job[0], job[1], registry, settings, verify), jobs))


def failed(results: Sequence[TaskResult]) -> List[TaskResult]:
    return [result for result in results if result.status == FAILED]


def known_operations() -> List[str]:
    return sorted(OPERATIONS)

