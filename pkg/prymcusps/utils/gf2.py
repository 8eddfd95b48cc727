"""Dense GF(2) linear algebra on numpy uint8 arrays."""

from typing import List, Optional, Tuple

import numpy as np


def gf2_row_echelon(M, n_pivot_cols: Optional[int] = None) -> Tuple[np.ndarray, List[int]]:
    """
    Row-reduce a matrix over GF(2) with XOR row operations.

    Args:
        M: Integer matrix (m x n); entries are reduced mod 2
        n_pivot_cols: Only search for pivots in the first columns (default all)

    Returns:
        (R, pivot_cols): row-echelon form as uint8 and the pivot column indices
    """
    R = (np.asarray(M, dtype=np.int64) % 2).astype(np.uint8)
    m, n = R.shape
    if n_pivot_cols is None:
        n_pivot_cols = n

    pivot_cols: List[int] = []
    pivot_row = 0
    for col in range(n_pivot_cols):
        rows = np.nonzero(R[pivot_row:, col])[0]
        if rows.size == 0:
            continue
        found = pivot_row + int(rows[0])
        if found != pivot_row:
            R[[pivot_row, found]] = R[[found, pivot_row]]
        for row in range(pivot_row + 1, m):
            if R[row, col]:
                R[row] ^= R[pivot_row]
        pivot_cols.append(col)
        pivot_row += 1
        if pivot_row == m:
            break
    return R, pivot_cols


def gf2_column_space(M) -> np.ndarray:
    """
    Basis of the column space of M reduced mod 2.

    Args:
        M: Integer matrix acting on column vectors

    Returns:
        uint8 array whose rows are basis vectors of image(M mod 2)
    """
    R, pivots = gf2_row_echelon(np.asarray(M).T)
    return R[: len(pivots)]


def gf2_form_vanishes(basis: np.ndarray, form) -> bool:
    """
    Whether a bilinear form is identically zero mod 2 on the span of basis rows.

    Args:
        basis: uint8 rows spanning a subspace of GF(2)^n
        form: Integer Gram matrix of the form

    Returns:
        True iff v_i^T form v_j is even for every pair of basis rows
    """
    if basis.shape[0] == 0:
        return True
    gram = basis.astype(np.int64) @ np.asarray(form, dtype=np.int64) @ basis.T.astype(np.int64)
    return not np.any(gram % 2)
