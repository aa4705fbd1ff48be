import logging
from dataclasses import dataclass, field
from typing import Any, Callable, Literal, Mapping

import prometheus_client

from configs import configs
from exceptions import (
    ModePreconditionError,
    SentenceValidError,
    UnknownModeError,
    UnknownWorldError,
)
from formulas import (
    ArithFormula,
    ModalFormula,
    OpaqueAtom,
    Term,
    Var,
    numeral,
    predicate_arities,
    print_arith,
    print_modal,
)
from kripke import (
    KripkeModel,
    adjoin_root,
    forces,
    is_conversely_well_founded,
    normalize_rooted,
    relabel_constants,
    transitive_closure,
)

from .interpretation import InterpretationTable, interpret, predicate_table
from .obligations import (
    Obligation,
    solovay_obligations,
    tau_obligations,
    theta_obligations,
    truth_obligations,
    unprovability_obligations,
)
from .schemas import gamma_tau_schema
from .theta import make_theta

_logger = logging.getLogger("embedding.bundle")

prometheus_embedding_count = prometheus_client.Counter(
    "embedding_built",
    "Count of embedding bundles built",
    ["mode"],
)

EmbeddingMode = Literal["s4", "s3"]

# "sigma1" and "sigma2" are the names the modes were first released under
MODE_NAMES: dict[str, EmbeddingMode] = {"s4": "s4", "s3": "s3", "sigma1": "s4", "sigma2": "s3"}


@dataclass(frozen=True)
class ProvabilitySchema:
    """Adjoined frame and the formulas defining the Fefermanian provability predicate"""

    adjoined: KripkeModel
    closure: frozenset[tuple[int, int]]
    gamma: ArithFormula
    tau: ArithFormula

    def to_dict(self) -> dict[str, Any]:
        return {
            "adjoined_model": self.adjoined.to_dict(),
            "transitive_relation": [list(pair) for pair in sorted(self.closure)],
            "gamma": print_arith(self.gamma),
            "tau": print_arith(self.tau),
        }


@dataclass(frozen=True)
class EmbeddingBundle:
    mode: EmbeddingMode
    world: int
    world_map: Mapping[int, int]
    element_map: Mapping[int, int]
    model: KripkeModel
    sentence: ModalFormula
    lam: str
    theta: Mapping[int, ArithFormula]
    table: InterpretationTable
    interpreted: ArithFormula
    obligations: list[Obligation] = field(default_factory=list)
    schema: ProvabilitySchema | None = None

    def to_dict(self) -> dict[str, Any]:
        """Render the bundle with every formula printed"""
        data: dict[str, Any] = {
            "mode": self.mode,
            "world": self.world,
            "world_map": {str(old): new for old, new in sorted(self.world_map.items())},
            "element_map": {str(old): new for old, new in sorted(self.element_map.items())},
            "model": self.model.to_dict(),
            "sentence": print_modal(self.sentence),
            "atoms": {"lambda": self.lam, "provability": self.table.provability},
            "theta": {str(k): print_arith(formula) for k, formula in sorted(self.theta.items())},
            "interpretation": {
                name: {
                    "variables": list(entry.variables),
                    "formula": print_arith(entry.formula),
                }
                for name, entry in sorted(self.table.predicates.items())
            },
            "interpreted_sentence": print_arith(self.interpreted),
            "obligations": [obligation.to_dict() for obligation in self.obligations],
        }
        if self.schema is not None:
            data["provability_schema"] = self.schema.to_dict()
        return data


def _lam_builder(lam: str) -> Callable[[int], ArithFormula]:
    def build(world: int) -> ArithFormula:
        return OpaqueAtom(lam, (numeral(world),))

    return build


def _opaque_theta(k: int, term: Term) -> ArithFormula:
    return OpaqueAtom(f"{configs.atom_names.theta_prefix}{k}", (term,))


def _arities(model: KripkeModel, sentence: ModalFormula) -> dict[str, int]:
    """Predicates of the model and of the sentence. Predicates that hold nowhere get an empty
    interpretation"""
    return {**predicate_arities(sentence), **model.predicate_arities}


def _constant_domain_embedding(
    normalized: KripkeModel, sentence: ModalFormula, lam: str
) -> tuple[dict[int, ArithFormula], InterpretationTable, ArithFormula, list[Obligation]]:
    if not normalized.is_constant_domain:
        raise ModePreconditionError("The 's4' embedding needs a constant domain model")

    family = make_theta(normalized.max_element)
    predicates = predicate_table(
        normalized, _arities(normalized, sentence), _lam_builder(lam), family.formula
    )
    table = InterpretationTable(predicates, configs.atom_names.provability)
    interpreted = interpret(table, sentence)

    obligations = truth_obligations(normalized, sentence, interpreted, lam, "embedding")
    obligations += unprovability_obligations(normalized.worlds, interpreted, lam)
    theta = {k: family.formula(k, Var("x")) for k in family.domain}
    return theta, table, interpreted, obligations


def _well_founded_embedding(
    normalized: KripkeModel, sentence: ModalFormula, lam: str
) -> tuple[
    dict[int, ArithFormula], InterpretationTable, ArithFormula, list[Obligation], ProvabilitySchema
]:
    if not is_conversely_well_founded(normalized.worlds, normalized.relation):
        raise ModePreconditionError(
            "The 's3' embedding needs a conversely well-founded model"
        )

    adjoined = adjoin_root(normalized)
    closure = transitive_closure(adjoined.relation)
    gamma, tau = gamma_tau_schema(adjoined.relation, lam, configs.atom_names.axioms)
    schema = ProvabilitySchema(adjoined=adjoined, closure=closure, gamma=gamma, tau=tau)

    predicates = predicate_table(
        normalized,
        _arities(normalized, sentence),
        _lam_builder(lam),
        _opaque_theta,
        worlds=sorted(normalized.worlds),
    )
    table = InterpretationTable(predicates, configs.atom_names.fefermanian)
    interpreted = interpret(table, sentence)

    obligations = solovay_obligations(adjoined.worlds, closure, lam, configs.atom_names.axioms)
    obligations += tau_obligations(
        adjoined.worlds, adjoined.relation, closure, lam, configs.atom_names.fefermanian, tau
    )
    obligations += theta_obligations(dict(normalized.domains), lam, _opaque_theta)
    obligations += truth_obligations(normalized, sentence, interpreted, lam, "truth")

    elements = sorted(set().union(*normalized.domains.values()))
    theta = {k: _opaque_theta(k, Var("x")) for k in elements}
    return theta, table, interpreted, obligations, schema


def build_embedding(
    model: KripkeModel,
    sentence: ModalFormula,
    world: int,
    mode: str,
    lam: str | None = None,
) -> EmbeddingBundle:
    """Build the arithmetical interpretation that refutes 'sentence' at 'world', together with
    the statements it relies on"""
    resolved = MODE_NAMES.get(mode)
    if resolved is None:
        raise UnknownModeError(f"Unknown embedding mode '{mode}'")
    if world not in model.worlds:
        raise UnknownWorldError(f"World {world} is not in the model")
    if forces(model, world, sentence):
        raise SentenceValidError(f"The sentence is forced at world {world}")
    if lam is None:
        lam = configs.atom_names.lam

    normalized = normalize_rooted(model, world)
    relabeled = relabel_constants(sentence, normalized.element_map)
    root_model = normalized.model

    schema = None
    if resolved == "s4":
        theta, table, interpreted, obligations = _constant_domain_embedding(
            root_model, relabeled, lam
        )
    else:
        theta, table, interpreted, obligations, schema = _well_founded_embedding(
            root_model, relabeled, lam
        )

    prometheus_embedding_count.labels(mode=resolved).inc()
    _logger.info(
        f"Built '{resolved}' embedding at world {world} with {len(obligations)} obligations"
    )
    return EmbeddingBundle(
        mode=resolved,
        world=world,
        world_map=normalized.world_map,
        element_map=normalized.element_map,
        model=root_model,
        sentence=relabeled,
        lam=lam,
        theta=theta,
        table=table,
        interpreted=interpreted,
        obligations=obligations,
        schema=schema,
    )
