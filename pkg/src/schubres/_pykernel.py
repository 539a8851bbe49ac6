"""Pure Python multiplication kernel for truncated term maps.

A term map is a dict from exponent tuples to nonzero int coefficients.  The
kernel multiplies two canonical term maps and returns a canonical term map,
dropping every product term whose weighted degree exceeds the truncation
bound.  Coefficients are Python ints throughout; intermediate values routinely
exceed 64 bits, so no fixed-width arithmetic is allowed here.
"""

from __future__ import annotations


def mul_terms(
    a: dict[tuple[int, ...], int],
    b: dict[tuple[int, ...], int],
    degrees: tuple[int, ...],
    truncation: int,
) -> dict[tuple[int, ...], int]:
    if not a or not b:
        return {}
    if len(b) > len(a):
        a, b = b, a

    def weight(expo: tuple[int, ...]) -> int:
        return sum(e * d for e, d in zip(expo, degrees))

    # Sorting the smaller operand by degree lets the inner loop stop as soon
    # as every remaining product would exceed the truncation bound.
    b_sorted = sorted(
        ((weight(expo), expo, coeff) for expo, coeff in b.items()),
        key=lambda item: item[0],
    )
    out: dict[tuple[int, ...], int] = {}
    for expo_a, coeff_a in a.items():
        budget = truncation - weight(expo_a)
        if budget < 0:
            continue
        for deg_b, expo_b, coeff_b in b_sorted:
            if deg_b > budget:
                break
            key = tuple(ea + eb for ea, eb in zip(expo_a, expo_b))
            value = out.get(key, 0) + coeff_a * coeff_b
            if value:
                out[key] = value
            elif key in out:
                del out[key]
    return out
