"""Dense linear algebra over F_2 on numpy uint8 arrays.

Matrices act on column vectors; ``M[t, s]`` is the coefficient of basis
vector ``t`` in the image of basis vector ``s``.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np


def as_f2(M) -> np.ndarray:
    return (np.asarray(M, dtype=np.int64) % 2).astype(np.uint8)


def zeros(m: int, n: int | None = None) -> np.ndarray:
    return np.zeros((m, m if n is None else n), dtype=np.uint8)


def eye(n: int) -> np.ndarray:
    return np.eye(n, dtype=np.uint8)


def matmul(A: np.ndarray, B: np.ndarray) -> np.ndarray:
    return ((A.astype(np.int64) @ B.astype(np.int64)) % 2).astype(np.uint8)


def row_echelon(M: np.ndarray) -> tuple[np.ndarray, list[int]]:
    """Row-reduce ``M``; return the reduced matrix and its pivot columns."""
    R = as_f2(M).copy()
    m, n = R.shape
    pivots: list[int] = []
    row = 0
    for col in range(n):
        if row == m:
            break
        hits = np.nonzero(R[row:, col])[0]
        if hits.size == 0:
            continue
        r = row + int(hits[0])
        if r != row:
            R[[row, r]] = R[[r, row]]
        below = np.nonzero(R[:, col])[0]
        for rr in below:
            if rr != row:
                R[rr] ^= R[row]
        pivots.append(col)
        row += 1
    return R, pivots


def rank(M: np.ndarray) -> int:
    if M.size == 0:
        return 0
    return len(row_echelon(M)[1])


def inverse(M: np.ndarray) -> np.ndarray:
    n = M.shape[0]
    if M.shape != (n, n):
        raise ValueError("inverse of a non-square matrix")
    R, pivots = row_echelon(np.hstack([as_f2(M), eye(n)]))
    if pivots[:n] != list(range(n)):
        raise np.linalg.LinAlgError("singular matrix over F_2")
    return R[:, n:].copy()


def solve(M: np.ndarray, b: np.ndarray) -> np.ndarray | None:
    """One solution ``x`` of ``M x = b``, or ``None`` if inconsistent."""
    m, n = M.shape
    R, pivots = row_echelon(np.hstack([as_f2(M), as_f2(b).reshape(m, 1)]))
    if n in pivots:
        return None
    x = np.zeros(n, dtype=np.uint8)
    for i, col in enumerate(pivots):
        x[col] = R[i, n]
    return x


def in_column_space(M: np.ndarray, v: np.ndarray) -> bool:
    if M.shape[1] == 0:
        return not np.any(v)
    return solve(M, v) is not None


@dataclass
class Reduction:
    """Column reduction R = D V of a strictly upper triangular differential.

    ``pairs`` maps source column to target row.  Columns that are neither a
    source nor a target carry homology.
    """

    R: np.ndarray
    V: np.ndarray
    pairs: dict[int, int]

    @property
    def targets(self) -> dict[int, int]:
        return {t: s for s, t in self.pairs.items()}

    def essential(self) -> list[int]:
        used = set(self.pairs) | set(self.pairs.values())
        return [i for i in range(self.R.shape[0]) if i not in used]

    def basis_vector(self, i: int) -> np.ndarray:
        """Simplified basis vector whose leading (last nonzero) index is ``i``."""
        tg = self.targets
        if i in tg:
            return self.R[:, tg[i]].copy()
        return self.V[:, i].copy()


def reduce_columns(D: np.ndarray) -> Reduction:
    """Standard persistence reduction; ``D`` must satisfy ``D[t, s] = 1 -> t < s``."""
    n = D.shape[0]
    if np.any(np.tril(D)):
        raise ValueError("differential is not strictly upper triangular in this order")
    R = as_f2(D).copy()
    V = eye(n)
    owner: dict[int, int] = {}
    pairs: dict[int, int] = {}
    for j in range(n):
        while True:
            nz = np.nonzero(R[:, j])[0]
            if nz.size == 0:
                break
            low = int(nz[-1])
            k = owner.get(low)
            if k is None:
                owner[low] = j
                pairs[j] = low
                break
            R[:, j] ^= R[:, k]
            V[:, j] ^= V[:, k]
    return Reduction(R, V, pairs)
