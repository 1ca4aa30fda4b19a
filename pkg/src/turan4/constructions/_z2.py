"""Z_2^2 elements are the integers 0..3 with XOR as addition; (a, b) -> 2a + b."""

Z22 = (0, 1, 2, 3)
NONZERO = (1, 2, 3)


def pair_code(a: int, b: int) -> int:
    return 2 * a + b


def pairs_with_sum(s: int) -> list[tuple[int, int]]:
    """Unordered pairs {p, q} of Z_2^2 with p + q = s (s nonzero)."""
    return [(p, p ^ s) for p in Z22 if p < p ^ s]
