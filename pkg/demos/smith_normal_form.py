"""
Integer linear algebra: Smith normal form and cokernels
=======================================================

Every abelian group computation in the package reduces to the Smith normal
form of an integer matrix.  This script diagonalizes a small matrix, reads
off the invariant factors, and cross-checks the transforms and the cokernel.
"""

from fractions import Fraction

from completeforms.lattice import (
    IntegerMatrix,
    cokernel,
    smith_normal_form,
    solve_rational,
)

# This matrix was built as U @ diag(2, 6, 12) @ V for unimodular U, V, so we
# know what the invariant factors have to be before asking the library.
matrix = IntegerMatrix.from_rows([[2, 2, 0], [2, 8, 6], [0, 6, 18]])
print("matrix:", matrix.entries)

snf = smith_normal_form(matrix)
print("diagonal:", snf.diagonal)
assert snf.diagonal == (2, 6, 12)

# The transforms are unimodular and satisfy u @ A @ v == d exactly.
assert (snf.u @ matrix @ snf.v).entries == snf.d.entries
print("u @ A @ v reproduces the diagonal")

# Consecutive invariant factors divide each other.
for a, b in zip(snf.diagonal, snf.diagonal[1:]):
    assert b % a == 0

group = cokernel(matrix)
print("cokernel:", group)
assert str(group) == "Z/2 + Z/6 + Z/12"

# Dropping a column leaves a 3x2 relation matrix; the quotient picks up a
# free factor because the column span now has rank 2.
thin = IntegerMatrix.from_rows([row[:2] for row in matrix.entries])
print("cokernel of the first two columns:", cokernel(thin))
assert cokernel(thin).free_rank == 1

# Exact rational solving underpins the divisor class computations.  Solve a
# system with a fractional answer and confirm there is no rounding anywhere.
solution = solve_rational(
    [[2, 1, 0], [0, 3, 1], [1, 0, 2]],
    [1, 0, 0],
)
print("rational solution:", solution)
assert tuple(solution) == (Fraction(6, 13), Fraction(1, 13), Fraction(-3, 13))
check = [
    2 * solution[0] + solution[1],
    3 * solution[1] + solution[2],
    solution[0] + 2 * solution[2],
]
assert check == [1, 0, 0]
print("back substitution confirms the solve")
