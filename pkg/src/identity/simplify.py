from formulas import And, ArithFormula, Bot, Exists, Top


def and_(left: ArithFormula, right: ArithFormula) -> ArithFormula:
    """Conjunction folding the constants"""
    if isinstance(left, Bot) or isinstance(right, Bot):
        return Bot()
    if isinstance(left, Top):
        return right
    if isinstance(right, Top):
        return left
    return And(left, right)


def exists(var: str, body: ArithFormula) -> ArithFormula:
    """Existential quantifier folding a constant body"""
    if isinstance(body, (Top, Bot)):
        return body
    return Exists(var, body)
