"""W-monoids from a monoid S and an involution A of S.

M = S + {a, e}: e is a fresh neutral element, a * a = e, a * s = A o s and
s * a = s o A. M is a W-monoid exactly when A is noncentral in S.
"""

import numpy as np

from polyadic_semigroups.core.errors import NotInvolutionError
from polyadic_semigroups.core.tables import BinaryOpDesc, MonoidDesc


def from_involution(s: MonoidDesc, involution: int) -> MonoidDesc:
    """The order |S|+2 monoid with a = |S| and e = |S|+1."""
    s.universe.check(involution)
    table = s.op.matrix
    if table[involution, involution] != s.neutral:
        raise NotInvolutionError(
            f"{involution} o {involution} = {int(table[involution, involution])}, "
            f"not the neutral element {s.neutral}"
        )

    k = s.order
    a, e = k, k + 1
    m = np.empty((k + 2, k + 2), dtype=np.int64)
    m[:k, :k] = table
    m[a, :k] = table[involution, :]
    m[:k, a] = table[:, involution]
    m[a, a] = e
    m[e, :] = np.arange(k + 2)
    m[:, e] = np.arange(k + 2)
    return MonoidDesc(BinaryOpDesc(s.universe.extended("a", "e"), m.reshape(-1)), e)
