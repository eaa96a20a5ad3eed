"""Shared hypothesis strategies."""

from hypothesis import strategies as st


@st.composite
def nonsingular(draw, n, entries=st.integers(-3, 3), diag=st.sampled_from([1, -1, 2, -2, 4, 5])):
    """Triangular matrix with nonzero diagonal, mixed by row operations."""
    m = [[draw(diag) if i == j else (draw(entries) if j > i else 0) for j in range(n)] for i in range(n)]
    for _ in range(draw(st.integers(0, 2 * n))):
        i = draw(st.integers(0, n - 1))
        j = draw(st.integers(0, n - 1))
        if i != j:
            c = draw(st.integers(-2, 2))
            m[i] = [a + c * b for a, b in zip(m[i], m[j])]
    return m
