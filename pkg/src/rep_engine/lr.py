"""
Littlewood-Richardson coefficients by enumerating LR skew tableaux.

This routine is independent of the Racah-Speiser engine and is used as its
type-A cross-check.
"""

from ..weights import Partition


def lr_coefficient(lam: Partition, mu: Partition, nu: Partition, N: int) -> int:
    """
    c^nu_(lam, mu): the number of semistandard fillings of nu/lam with content
    mu whose reverse reading word is a lattice word.
    """
    lam, mu, nu = (Partition.of(p.parts, N) for p in (lam, mu, nu))
    if nu.size != lam.size + mu.size or not nu.contains(lam) or not nu.contains(mu):
        return 0
    if not mu:
        return 1 if nu == lam else 0

    # reading order: rows top to bottom, each row right to left
    cells = [(row, col) for row in range(N) for col in range(nu.parts[row] - 1, lam.parts[row] - 1, -1)]
    filling: dict[tuple[int, int], int] = {}
    counts = [0] * N
    content = mu.parts

    def place(index: int) -> int:
        if index == len(cells):
            return 1
        row, col = cells[index]
        upper = filling.get((row, col + 1), N)
        lower = filling.get((row - 1, col), -1) if row > 0 and col >= lam.parts[row - 1] else -1
        total = 0
        for value in range(lower + 1, min(upper, N - 1) + 1):
            if counts[value] + 1 > content[value]:
                continue
            if value > 0 and counts[value] + 1 > counts[value - 1]:
                continue
            counts[value] += 1
            filling[(row, col)] = value
            total += place(index + 1)
            del filling[(row, col)]
            counts[value] -= 1
        return total

    return place(0)
