"""Direct stride-1 valid convolution with instrumented multiply/add counts.

This path is the correctness oracle that every other convolution route is
checked against, so it stays as close to the defining summation as possible.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import ValidationError
from .tensor import Tensor4


@dataclass
class OpCount:
    """Exact counts of scalar multiply and add events in an executed call.

    Counters are incremented alongside each vectorized primitive by the
    number of scalar operations it performs, so the totals are event counts
    of the executed algorithm rather than formula estimates.
    """

    multiplies: int = 0
    additions: int = 0

    def __add__(self, other: "OpCount") -> "OpCount":
        return OpCount(
            self.multiplies + other.multiplies, self.additions + other.additions
        )

    def to_json_dict(self) -> dict:
        return {"multiplies": self.multiplies, "additions": self.additions}


def conv2d_direct(x: Tensor4, w: Tensor4) -> tuple[Tensor4, OpCount]:
    """Valid cross-correlation of activations x [C,H,W,N] with kernel w [k1,k2,k3,k4].

        out[co, oy, ox, n] = sum_{ci,j,k} x[ci, oy+j, ox+k, n] * w[ci, j, k, co]

    No kernel flip and no padding: output spatial extents are H-k2+1 by
    W-k3+1. Returns the [k4, outH, outW, N] output plus exact counts:
    multiplies = outH*outW*N*k1*k2*k3*k4 and additions = multiplies minus
    the number of output elements (a sum of T terms takes T-1 adds).
    """
    c, h, w_in, n = x.dims
    k1, k2, k3, k4 = w.dims
    if c != k1:
        raise ValidationError(f"input channels {c} != kernel channels {k1}")
    if h < k2 or w_in < k3:
        raise ValidationError(
            f"kernel window {k2}x{k3} larger than input {h}x{w_in}"
        )
    out_h, out_w = h - k2 + 1, w_in - k3 + 1

    xd = x.data.astype(np.float64)
    wd = w.data.astype(np.float64)
    n_out = k4 * out_h * out_w * n
    acc = None
    ops = OpCount()
    for j in range(k2):
        for k in range(k3):
            window = xd[:, j : j + out_h, k : k + out_w, :]
            term = np.einsum("cyxn,co->oyxn", window, wd[:, j, k, :])
            ops.multiplies += c * n_out
            ops.additions += (c - 1) * n_out  # channel reduction inside einsum
            if acc is None:
                acc = term
            else:
                acc += term
                ops.additions += n_out
    assert ops.multiplies == out_h * out_w * n * k1 * k2 * k3 * k4
    assert ops.additions == ops.multiplies - n_out
    return Tensor4(acc), ops
