from typing import Iterator, Mapping

from exceptions import ArityError

from .nodes import (
    Add,
    And,
    ArithFormula,
    Bot,
    Box,
    Eq,
    Exists,
    Forall,
    Formula,
    Imp,
    Lt,
    Mul,
    Neg,
    OpaqueAtom,
    Or,
    Pred,
    Quote,
    Succ,
    Term,
    Top,
    Var,
    Zero,
)

PROP_ATOMIC_TYPES = (Eq, Lt, Top, Bot, OpaqueAtom, Forall, Exists)


def term_variables(term: Term) -> frozenset[str]:
    """Get the variables of a term. The variables of a quote are its dotted variables"""
    match term:
        case Zero():
            return frozenset()
        case Var(name):
            return frozenset({name})
        case Succ(arg):
            return term_variables(arg)
        case Add(left, right) | Mul(left, right):
            return term_variables(left) | term_variables(right)
        case Quote(_, dotted):
            return frozenset(dotted)
    raise TypeError(f"Not a term: {term!r}")


def free_variables(formula: Formula) -> frozenset[str]:
    """Get the free variables of a modal or arithmetic formula"""
    match formula:
        case Top() | Bot():
            return frozenset()
        case Pred(_, args):
            return frozenset(arg for arg in args if isinstance(arg, str))
        case Eq(left, right) | Lt(left, right):
            return term_variables(left) | term_variables(right)
        case OpaqueAtom(_, args):
            return frozenset().union(*(term_variables(arg) for arg in args))
        case Neg(body) | Box(body):
            return free_variables(body)
        case And(left, right) | Or(left, right) | Imp(left, right):
            return free_variables(left) | free_variables(right)
        case Forall(var, body) | Exists(var, body):
            return free_variables(body) - {var}
    raise TypeError(f"Not a formula: {formula!r}")


def is_sentence(formula: Formula) -> bool:
    return not free_variables(formula)


def quantifier_rank(formula: Formula) -> int:
    """Get the maximum nesting of quantifiers. Quoted formulas don't count"""
    match formula:
        case Neg(body) | Box(body):
            return quantifier_rank(body)
        case And(left, right) | Or(left, right) | Imp(left, right):
            return max(quantifier_rank(left), quantifier_rank(right))
        case Forall(_, body) | Exists(_, body):
            return 1 + quantifier_rank(body)
    return 0


def modal_depth(formula: Formula) -> int:
    """Get the maximum nesting of boxes"""
    match formula:
        case Box(body):
            return 1 + modal_depth(body)
        case Neg(body) | Forall(_, body) | Exists(_, body):
            return modal_depth(body)
        case And(left, right) | Or(left, right) | Imp(left, right):
            return max(modal_depth(left), modal_depth(right))
    return 0


def _term_succ_depth(term: Term) -> int:
    match term:
        case Succ(arg):
            return 1 + _term_succ_depth(arg)
        case Add(left, right) | Mul(left, right):
            return max(_term_succ_depth(left), _term_succ_depth(right))
        case Quote(body, _):
            return max_numeral(body)
    return 0


def max_numeral(formula: Formula) -> int:
    """Get the largest depth of a successor chain in the formula's terms, or the largest constant
    of a modal formula"""
    match formula:
        case Pred(_, args):
            return max((arg for arg in args if isinstance(arg, int)), default=0)
        case Eq(left, right) | Lt(left, right):
            return max(_term_succ_depth(left), _term_succ_depth(right))
        case OpaqueAtom(_, args):
            return max((_term_succ_depth(arg) for arg in args), default=0)
        case Neg(body) | Box(body) | Forall(_, body) | Exists(_, body):
            return max_numeral(body)
        case And(left, right) | Or(left, right) | Imp(left, right):
            return max(max_numeral(left), max_numeral(right))
    return 0


def modal_constants(formula: Formula) -> frozenset[int]:
    """Get the domain constants used as predicate arguments"""
    match formula:
        case Pred(_, args):
            return frozenset(arg for arg in args if isinstance(arg, int))
        case Neg(body) | Box(body) | Forall(_, body) | Exists(_, body):
            return modal_constants(body)
        case And(left, right) | Or(left, right) | Imp(left, right):
            return modal_constants(left) | modal_constants(right)
    return frozenset()


def is_prop_atomic(formula: Formula) -> bool:
    return isinstance(formula, PROP_ATOMIC_TYPES)


def _iter_prop_atoms(formula: Formula) -> Iterator[ArithFormula]:
    match formula:
        case Neg(body):
            yield from _iter_prop_atoms(body)
        case And(left, right) | Or(left, right) | Imp(left, right):
            yield from _iter_prop_atoms(left)
            yield from _iter_prop_atoms(right)
        case _ if is_prop_atomic(formula):
            yield formula  # type: ignore[misc]
        case _:
            raise TypeError(f"Not an arithmetic formula: {formula!r}")


def prop_atomic_subformulas(
    formulas: list[ArithFormula] | tuple[ArithFormula, ...],
) -> list[ArithFormula]:
    """Get the propositionally atomic subformulas reachable without going below an atom or a
    quantifier, without repetitions and in order of first occurrence"""
    atoms: dict[ArithFormula, None] = {}
    for formula in formulas:
        for atom in _iter_prop_atoms(formula):
            atoms.setdefault(atom, None)
    return list(atoms)


def _collect_arities(
    formula: Formula, kind: type[Pred] | type[OpaqueAtom], found: dict[str, int]
) -> None:
    match formula:
        case Pred(name, args) | OpaqueAtom(name, args) if isinstance(formula, kind):
            if found.setdefault(name, len(args)) != len(args):
                raise ArityError(
                    f"'{name}' is used with {found[name]} and {len(args)} arguments"
                )
            if isinstance(formula, OpaqueAtom):
                for arg in args:
                    if isinstance(arg, Quote):
                        _collect_arities(arg.body, kind, found)
        case Eq(left, right) | Lt(left, right):
            for term in (left, right):
                if isinstance(term, Quote):
                    _collect_arities(term.body, kind, found)
        case Neg(body) | Box(body) | Forall(_, body) | Exists(_, body):
            _collect_arities(body, kind, found)
        case And(left, right) | Or(left, right) | Imp(left, right):
            _collect_arities(left, kind, found)
            _collect_arities(right, kind, found)


def _check_declared(found: dict[str, int], declared: Mapping[str, int] | None) -> None:
    if declared is None:
        return
    for name, arity in found.items():
        if name in declared and declared[name] != arity:
            raise ArityError(
                f"'{name}' is declared with arity {declared[name]} but used with {arity} arguments"
            )


def predicate_arities(
    formula: Formula, declared: Mapping[str, int] | None = None
) -> dict[str, int]:
    """Get the arity of each predicate in a modal formula, checking they are used consistently
    and agree with the 'declared' arities"""
    found: dict[str, int] = {}
    _collect_arities(formula, Pred, found)
    _check_declared(found, declared)
    return found


def opaque_arities(
    formula: Formula, registry: Mapping[str, int] | None = None
) -> dict[str, int]:
    """Get the arity of each opaque atom in an arithmetic formula, including the ones inside
    quotes, checking they are used consistently and agree with the 'registry'"""
    found: dict[str, int] = {}
    _collect_arities(formula, OpaqueAtom, found)
    _check_declared(found, registry)
    return found
