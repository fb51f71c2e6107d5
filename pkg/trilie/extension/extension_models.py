from dataclasses import dataclass
from functools import cached_property

from ..algebras.algebra_models import Algebra
from ..exceptions import TrilieError
from ..linalg.linalg_models import Matrix, Subspace
from ..linalg.linalg_ops import inverse


class InvalidPair(TrilieError):
    """The pair (f, f') is not a quasiderivation pair of the base algebra."""


class CenterNotZero(TrilieError):
    """The splitting of Der of the extension needs a centerless base algebra."""


@dataclass(frozen=True)
class ExtendedAlgebra:
    """The algebra A⊗tF[t]/(t^4) with basis blocks At, At^2, At^3.

    Basis vector e_i t^d has index (d-1)*n + i. A = U ⊕ A¹ with U
    spanned by the coordinate vectors outside the pivots of A¹.
    """

    base: Algebra
    algebra: Algebra
    u_complement: Subspace
    derived: Subspace

    @property
    def n(self) -> int:
        return self.base.dim

    def block(self, degree: int) -> range:
        return range((degree - 1) * self.n, degree * self.n)

    @cached_property
    def derived_projection(self) -> Matrix:
        """Projection of A onto A¹ along U."""
        n = self.n
        columns = list(self.derived.vectors) + list(self.u_complement.vectors)
        change = Matrix.from_columns(columns, n)
        keep = Matrix.diagonal([1] * self.derived.dim + [0] * self.u_complement.dim)
        return change @ keep @ inverse(change)
