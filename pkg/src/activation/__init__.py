from .activated import (
    ActivationSentence,
    activation_sentences,
    candidate_families,
    decide_activated,
    family_sentence,
)
from .brute_force import ActivationWitness, brute_force_activated, brute_force_bound
from .context import ActivationContext
from .loader import load_context, pool_from_item, stage_from_item
from .partitions import (
    AtomRelations,
    CandidateFamily,
    Partition,
    Slot,
    build_family,
    induced_partition,
    is_good,
)
from .ready import ReadyCandidate, decide_ready, ready_candidates
from .shapes import ConditionEntry, condition_entries, match_entry
from .stage import ExplicitPool, GodelPool, Pool, TheoryStage, empty_stage, newly_proved

__all__ = [
    "ActivationContext",
    "ActivationSentence",
    "ActivationWitness",
    "AtomRelations",
    "CandidateFamily",
    "ConditionEntry",
    "ExplicitPool",
    "GodelPool",
    "Partition",
    "Pool",
    "ReadyCandidate",
    "Slot",
    "TheoryStage",
    "activation_sentences",
    "brute_force_activated",
    "brute_force_bound",
    "build_family",
    "candidate_families",
    "condition_entries",
    "decide_activated",
    "decide_ready",
    "empty_stage",
    "family_sentence",
    "induced_partition",
    "is_good",
    "load_context",
    "match_entry",
    "newly_proved",
    "pool_from_item",
    "ready_candidates",
    "stage_from_item",
]
