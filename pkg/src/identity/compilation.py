"""
Compilation of "the two instances are syntactically identical" into formulas of the language of
zero and successor.

The left object has its substituted variables replaced by numerals 'a_i' and the right object by
numerals 'b_j'. The compiled formula has the substituted variables free and holds at '(a, b)'
exactly when the two instances are the same term or formula. The construction is by induction on
the left object, with a case for each shape of the right object. Variables that are not
substituted stay in the instances and only match the same variable on the other side.
"""

import logging

from formulas import (
    RESERVED_PREFIX,
    Add,
    And,
    ArithFormula,
    Bot,
    Eq,
    Exists,
    Forall,
    Imp,
    Lt,
    Mul,
    Neg,
    OpaqueAtom,
    Or,
    Quote,
    Succ,
    Term,
    Top,
    Var,
    Zero,
    numeral_value,
    split_succ,
    succ_power,
)

from .profile import SubstitutionProfile
from .simplify import and_, exists

_logger = logging.getLogger("identity")

Names = frozenset[str]


def _fresh(depth: int) -> str:
    return f"{RESERVED_PREFIX}x{depth}"


def _substituted_succ_var(term: Term, substituted: Names) -> tuple[int, str] | None:
    """Get '(r, w)' if the term is 's^r(w)' for a substituted variable 'w'"""
    count, base = split_succ(term)
    if isinstance(base, Var) and base.name in substituted:
        return count, base.name
    return None


def compile_terms(left: Term, right: Term, u: Names, w: Names, depth: int = 0) -> ArithFormula:
    """Compile the identity of the instances of two terms. 'u' and 'w' are the substituted
    variables of each side"""
    match left:
        case Zero():
            if isinstance(right, Zero):
                return Top()
            if isinstance(right, Var) and right.name in w:
                return Eq(right, Zero())
            return Bot()

        case Var(name) if name in u:
            value = numeral_value(right)
            if value is not None:
                return Eq(left, right)
            if _substituted_succ_var(right, w) is not None:
                return Eq(left, right)
            return Bot()

        case Var(name):
            if isinstance(right, Var) and right.name == name and name not in w:
                return Top()
            return Bot()

        case Add(left_first, left_second) | Mul(left_first, left_second):
            if type(right) is not type(left):
                return Bot()
            return and_(
                compile_terms(left_first, right.left, u, w, depth),  # type: ignore[union-attr]
                compile_terms(left_second, right.right, u, w, depth),  # type: ignore[union-attr]
            )

        case Succ(inner):
            if isinstance(right, Var) and right.name in w:
                # 's(t)' is the numeral of 'b' only if 'b = s(c)' with 't' the numeral of 'c'
                fresh = _fresh(depth)
                body = compile_terms(inner, Var(fresh), u, w | {fresh}, depth + 1)
                return exists(fresh, and_(body, Eq(right, Succ(Var(fresh)))))
            if isinstance(right, Succ):
                return compile_terms(inner, right.arg, u, w, depth)
            return Bot()

        case Quote(left_body, left_dotted):
            if not isinstance(right, Quote):
                return Bot()
            # Dotted variables that are not substituted stay dotted in the instance
            left_kept = tuple(name for name in left_dotted if name not in u)
            right_kept = tuple(name for name in right.dotted if name not in w)
            if left_kept != right_kept:
                return Bot()
            return compile_formulas(
                left_body,
                right.body,
                frozenset(name for name in left_dotted if name in u),
                frozenset(name for name in right.dotted if name in w),
                depth,
            )

    raise TypeError(f"Not a term: {left!r}")


def compile_formulas(
    left: ArithFormula, right: ArithFormula, u: Names, w: Names, depth: int = 0
) -> ArithFormula:
    """Compile the identity of the instances of two formulas. 'u' and 'w' are the substituted
    variables of each side"""
    match left:
        case Top() | Bot():
            return Top() if type(right) is type(left) else Bot()

        case Eq(left_first, left_second) | Lt(left_first, left_second):
            if type(right) is not type(left):
                return Bot()
            return and_(
                compile_terms(left_first, right.left, u, w, depth),  # type: ignore[union-attr]
                compile_terms(left_second, right.right, u, w, depth),  # type: ignore[union-attr]
            )

        case OpaqueAtom(name, args):
            if (
                not isinstance(right, OpaqueAtom)
                or right.name != name
                or len(right.args) != len(args)
            ):
                return Bot()
            result: ArithFormula = Top()
            for left_arg, right_arg in zip(args, right.args):
                result = and_(result, compile_terms(left_arg, right_arg, u, w, depth))
            return result

        case Neg(body):
            if not isinstance(right, Neg):
                return Bot()
            return compile_formulas(body, right.body, u, w, depth)

        case And(left_first, left_second) | Or(left_first, left_second) | Imp(
            left_first, left_second
        ):
            if type(right) is not type(left):
                return Bot()
            return and_(
                compile_formulas(left_first, right.left, u, w, depth),  # type: ignore[union-attr]
                compile_formulas(left_second, right.right, u, w, depth),  # type: ignore[union-attr]
            )

        case Forall(var, body) | Exists(var, body):
            if type(right) is not type(left) or right.var != var:  # type: ignore[union-attr]
                return Bot()
            # The bound variable is kept on both sides
            return compile_formulas(
                body, right.body, u - {var}, w - {var}, depth  # type: ignore[union-attr]
            )

    raise TypeError(f"Not an arithmetic formula: {left!r}")


def term_identity_formula(left: Term, right: Term, profile: SubstitutionProfile) -> ArithFormula:
    """Get a formula of zero and successor, with the profile's 'u' and 'w' variables free, that
    holds at '(a, b)' if and only if 'left' with 'u := a' is the same term as 'right' with
    'w := b'"""
    profile.check_terms(left, right)
    return compile_terms(left, right, frozenset(profile.u_vars), frozenset(profile.w_vars))


def formula_identity_formula(
    left: ArithFormula, right: ArithFormula, profile: SubstitutionProfile
) -> ArithFormula:
    """Get a formula of zero and successor, with the profile's 'u' and 'w' variables free, that
    holds at '(a, b)' if and only if 'left' with 'u := a' is the same formula as 'right' with
    'w := b'"""
    profile.check_formulas(left, right)
    result = compile_formulas(left, right, frozenset(profile.u_vars), frozenset(profile.w_vars))
    _logger.debug(f"Compiled identity formula of {type(result).__name__} shape")
    return result
