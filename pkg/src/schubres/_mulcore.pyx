# cython: language_level=3
# cython: boundscheck=False
# cython: wraparound=False
"""Compiled multiplication kernel for truncated term maps.

Exponent tuples are packed into single 64-bit integers, one bit field per
generator, so the accumulation loop compares and adds machine words instead
of tuples.  Coefficients stay Python ints: products overflow 64 bits in real
workloads, and exactness is non-negotiable.  Inputs whose exponents cannot be
packed into 60 bits fall back to the pure Python kernel, which implements the
identical contract.
"""

from libc.stdlib cimport free, malloc

from schubres import _pykernel


def mul_terms(dict a, dict b, tuple degrees, truncation):
    cdef Py_ssize_t ngens = len(degrees)
    cdef long trunc = truncation
    if ngens == 0 or not a or not b:
        return _pykernel.mul_terms(a, b, degrees, truncation)

    # Field width: smallest number of bits holding any exponent that can
    # appear (each exponent is at most the truncation bound because every
    # generator degree is at least one).  Sums of two valid exponents only
    # happen when the product term survives truncation, so fields never
    # carry into each other.
    cdef int width = 1
    while (<long long>1 << width) <= <long long>trunc:
        width += 1
    if ngens * width > 60:
        return _pykernel.mul_terms(a, b, degrees, truncation)

    if len(b) > len(a):
        a, b = b, a

    cdef long long* gen_deg = <long long*> malloc(ngens * sizeof(long long))
    cdef long long* a_key = <long long*> malloc(len(a) * sizeof(long long))
    cdef long long* a_deg = <long long*> malloc(len(a) * sizeof(long long))
    cdef long long* b_key = <long long*> malloc(len(b) * sizeof(long long))
    cdef long long* b_deg = <long long*> malloc(len(b) * sizeof(long long))
    if not (gen_deg and a_key and a_deg and b_key and b_deg):
        free(gen_deg); free(a_key); free(a_deg); free(b_key); free(b_deg)
        raise MemoryError()

    cdef Py_ssize_t i, na = 0, nb = 0, ia, ib
    cdef long long key, deg, budget, packed
    cdef long long mask = ((<long long>1) << width) - 1
    cdef object coeff_a, value, prev, boxed
    cdef list a_val = [], b_val = []
    try:
        for i in range(ngens):
            gen_deg[i] = degrees[i]

        for expo, coeff in a.items():
            key = 0
            deg = 0
            for i in range(ngens):
                key |= (<long long> expo[i]) << (i * width)
                deg += (<long long> expo[i]) * gen_deg[i]
            if deg <= trunc:
                a_key[na] = key
                a_deg[na] = deg
                a_val.append(coeff)
                na += 1

        b_items = []
        for expo, coeff in b.items():
            key = 0
            deg = 0
            for i in range(ngens):
                key |= (<long long> expo[i]) << (i * width)
                deg += (<long long> expo[i]) * gen_deg[i]
            if deg <= trunc:
                b_items.append((deg, key, coeff))
        b_items.sort(key=_by_degree)
        for deg, key, coeff in b_items:
            b_key[nb] = key
            b_deg[nb] = deg
            b_val.append(coeff)
            nb += 1

        out = {}
        for ia in range(na):
            budget = trunc - a_deg[ia]
            coeff_a = a_val[ia]
            key = a_key[ia]
            for ib in range(nb):
                if b_deg[ib] > budget:
                    break
                packed = key + b_key[ib]
                boxed = packed
                prev = out.get(boxed)
                if prev is None:
                    out[boxed] = coeff_a * b_val[ib]
                else:
                    value = prev + coeff_a * b_val[ib]
                    if value == 0:
                        del out[boxed]
                    else:
                        out[boxed] = value

        result = {}
        for boxed, prev in out.items():
            packed = boxed
            expo = tuple(
                <long> ((packed >> (i * width)) & mask) for i in range(ngens)
            )
            result[expo] = prev
        return result
    finally:
        free(gen_deg)
        free(a_key)
        free(a_deg)
        free(b_key)
        free(b_deg)


def _by_degree(item):
    return item[0]
