"""Dense float64 array primitives and the finite-difference gradient harness.

All numeric state in the package lives in C-contiguous (row-major) float64
numpy arrays. The contract operations here accumulate their sums in index
order, so results are bit-identical to naive loop implementations; oracle
tests can therefore assert exact equality instead of tolerances.
"""

import numpy as np
from scipy.special import expit

from .errors import DimensionError, EvaluationError

__all__ = [
    "as_tensor",
    "matmul",
    "sigmoid",
    "tanh",
    "relu",
    "add",
    "mul",
    "elementwise",
    "grad_check",
]


def as_tensor(values, shape=None) -> np.ndarray:
    """Coerce to a C-contiguous float64 array, optionally reshaped."""
    arr = np.ascontiguousarray(values, dtype=np.float64)
    if shape is not None:
        arr = arr.reshape(shape)
    return arr


def matmul(a, b) -> np.ndarray:
    """Matrix product c[i][j] = sum_l a[i][l] * b[l][j].

    The contraction index is accumulated in ascending order, one rank-1 term
    at a time, which reproduces a scalar triple loop bit for bit.
    """
    a = as_tensor(a)
    b = as_tensor(b)
    if a.ndim != 2 or b.ndim != 2:
        raise DimensionError(f"matmul needs 2-D operands, got {a.shape} and {b.shape}")
    if a.shape[1] != b.shape[0]:
        raise DimensionError(f"cannot multiply {a.shape} by {b.shape}: inner extents differ")
    m, k = a.shape
    n = b.shape[1]
    out = np.zeros((m, n))
    for l in range(k):
        out += a[:, l, np.newaxis] * b[np.newaxis, l, :]
    return out


def sigmoid(x) -> np.ndarray:
    """Logistic function 1 / (1 + exp(-x)), overflow-safe."""
    return expit(as_tensor(x))


def tanh(x) -> np.ndarray:
    return np.tanh(as_tensor(x))


def relu(x) -> np.ndarray:
    return np.maximum(as_tensor(x), 0.0)


def _check_same_shape(op: str, a: np.ndarray, b: np.ndarray) -> None:
    if a.shape != b.shape:
        raise DimensionError(f"{op} operands have mismatched shapes {a.shape} and {b.shape}")


def add(a, b) -> np.ndarray:
    a, b = as_tensor(a), as_tensor(b)
    _check_same_shape("add", a, b)
    return a + b


def mul(a, b) -> np.ndarray:
    """Point-wise (Hadamard) product."""
    a, b = as_tensor(a), as_tensor(b)
    _check_same_shape("mul", a, b)
    return a * b


_ELEMENTWISE = {
    "sigmoid": sigmoid,
    "tanh": tanh,
    "relu": relu,
    "add": add,
    "mul": mul,
}


def elementwise(op: str, *args) -> np.ndarray:
    """Dispatch an elementwise operation by name.

    Unary: ``sigmoid``, ``tanh``, ``relu``. Binary (identical shapes):
    ``add``, ``mul``.
    """
    try:
        fn = _ELEMENTWISE[op]
    except KeyError:
        raise DimensionError(f"unknown elementwise op {op!r}") from None
    return fn(*args)


def grad_check(f, x, h: float = 1e-5) -> float:
    """Compare the analytic gradient of a scalar map against central differences.

    ``f(x)`` must return ``(value, grad)`` where ``grad`` has the shape of
    ``x``, and must be a pure function of ``x``'s contents. Returns the worst
    coordinate-wise error ``|analytic - numeric| / max(1, |numeric|)``.
    """
    x = as_tensor(x)
    value, grad = f(x)
    if not np.isfinite(value):
        raise EvaluationError(f"objective is non-finite at the expansion point: {value!r}")
    grad = as_tensor(grad)
    if grad.shape != x.shape:
        raise DimensionError(f"gradient shape {grad.shape} does not match input shape {x.shape}")
    flat = x.reshape(-1)
    gflat = grad.reshape(-1)
    worst = 0.0
    for i in range(flat.size):
        orig = flat[i]
        flat[i] = orig + h
        f_plus = float(f(x)[0])
        flat[i] = orig - h
        f_minus = float(f(x)[0])
        flat[i] = orig
        if not (np.isfinite(f_plus) and np.isfinite(f_minus)):
            raise EvaluationError(f"objective is non-finite near coordinate {i}")
        numeric = (f_plus - f_minus) / (2.0 * h)
        err = abs(gflat[i] - numeric) / max(1.0, abs(numeric))
        if err > worst:
            worst = err
    return worst
