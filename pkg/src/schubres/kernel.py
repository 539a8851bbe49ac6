"""Backend selection for the polynomial multiplication kernel.

Two interchangeable implementations exist: a pure Python one and a compiled
one built from ``_mulcore.pyx``.  The compiled kernel is preferred when the
extension imported successfully; setting the environment variable
``SCHUBRES_PURE`` to a non-empty value before import forces the pure kernel.
``set_backend`` switches at runtime, which the benchmark harness relies on.

Both backends implement the same contract: ``mul_terms(a, b, degrees,
truncation)`` over canonical term maps, exact integer coefficients, identical
results.
"""

from __future__ import annotations

import os

from . import _pykernel

try:
    from . import _mulcore
except ImportError:
    _mulcore = None

_BACKENDS = {"python": _pykernel}
if _mulcore is not None:
    _BACKENDS["cython"] = _mulcore

if os.environ.get("SCHUBRES_PURE"):
    _active = _pykernel
else:
    _active = _mulcore if _mulcore is not None else _pykernel


def available_backends() -> tuple[str, ...]:
    return tuple(sorted(_BACKENDS))


def backend_name() -> str:
    return "python" if _active is _pykernel else "cython"


def set_backend(name: str) -> None:
    global _active
    try:
        _active = _BACKENDS[name]
    except KeyError:
        raise ValueError(
            f"unknown kernel backend {name!r}; available: {available_backends()}"
        ) from None


def mul_terms(
    a: dict[tuple[int, ...], int],
    b: dict[tuple[int, ...], int],
    degrees: tuple[int, ...],
    truncation: int,
) -> dict[tuple[int, ...], int]:
    return _active.mul_terms(a, b, degrees, truncation)
