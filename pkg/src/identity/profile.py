from dataclasses import dataclass

from exceptions import ProfileError
from formulas import Formula, Term, free_variables, term_variables


@dataclass(frozen=True)
class SubstitutionProfile:
    """Variables of a pair of compiled objects. The 'u_vars' of the left object and the 'w_vars'
    of the right one are replaced by numerals, the 'shared' variables are kept as they are"""

    u_vars: tuple[str, ...] = ()
    w_vars: tuple[str, ...] = ()
    shared: tuple[str, ...] = ()

    def __post_init__(self) -> None:
        names = [*self.u_vars, *self.w_vars, *self.shared]
        if len(set(names)) != len(names):
            raise ProfileError(
                f"Profile variables must be pairwise distinct, got u={list(self.u_vars)}, "
                f"w={list(self.w_vars)}, shared={list(self.shared)}"
            )

    def check_left(self, variables: frozenset[str]) -> None:
        outside = variables - set(self.u_vars) - set(self.shared)
        if outside:
            raise ProfileError(f"Left variables {sorted(outside)} are not in the profile")

    def check_right(self, variables: frozenset[str]) -> None:
        outside = variables - set(self.w_vars) - set(self.shared)
        if outside:
            raise ProfileError(f"Right variables {sorted(outside)} are not in the profile")

    def check_terms(self, left: Term, right: Term) -> None:
        self.check_left(term_variables(left))
        self.check_right(term_variables(right))

    def check_formulas(self, left: Formula, right: Formula) -> None:
        self.check_left(free_variables(left))
        self.check_right(free_variables(right))
