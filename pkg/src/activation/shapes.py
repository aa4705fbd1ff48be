"""
Recognition of the stage formulas that the activation and readiness conditions ask for.

Both conditions look for proved formulas of the shape

    ∀x_0 ... ∀x_m (λ(j) ∧ θ_k_0(x_0) ∧ ... ∧ θ_k_m(x_m) → ψ(x_0, ..., x_m))

with the θ conjuncts in the order of the quantified variables. Matching is syntactic: the bound
variable names are the ones written in the stored formula.
"""

from dataclasses import dataclass

from formulas import ArithFormula, Forall, Imp, Neg, Var, flatten_conjunction

from .context import ActivationContext
from .stage import TheoryStage


@dataclass(frozen=True)
class ConditionEntry:
    """A proved formula with the condition shape for world 'world'. 'consequent' is 'ψ' with the
    'variables' free, each bound to the domain element in 'elements'"""

    formula: ArithFormula
    world: int
    variables: tuple[str, ...]
    elements: tuple[int, ...]
    consequent: ArithFormula

    @property
    def goal(self) -> ArithFormula | None:
        """Get 'φ' if the consequent is '¬φ'"""
        if isinstance(self.consequent, Neg):
            return self.consequent.body
        return None


def match_entry(formula: ArithFormula, world: int, ctx: ActivationContext) -> ConditionEntry | None:
    """Match a formula against the condition shape for 'world'"""
    variables: list[str] = []
    body = formula
    while isinstance(body, Forall):
        variables.append(body.var)
        body = body.body

    if not isinstance(body, Imp) or len(set(variables)) != len(variables):
        return None

    conjuncts = flatten_conjunction(body.left)
    if conjuncts[0] != ctx.lam(world) or len(conjuncts) != len(variables) + 1:
        return None

    elements = []
    for variable, conjunct in zip(variables, conjuncts[1:]):
        k = ctx.theta.match(conjunct, Var(variable))
        if k is None:
            return None
        elements.append(k)

    return ConditionEntry(
        formula=formula,
        world=world,
        variables=tuple(variables),
        elements=tuple(elements),
        consequent=body.right,
    )


def condition_entries(
    stage: TheoryStage, world: int, ctx: ActivationContext
) -> list[ConditionEntry]:
    """Get the proved formulas of the stage with the condition shape for 'world' whose consequent
    is in the stage's pool, in stage order"""
    entries = []
    for formula in stage.proved:
        entry = match_entry(formula, world, ctx)
        if entry is not None and stage.in_pool(entry.consequent):
            entries.append(entry)
    return entries
