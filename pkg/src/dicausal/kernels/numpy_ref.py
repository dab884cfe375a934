"""NumPy reference implementation of the hot kernels.

This is the pure-Python fallback backend. The compiled extension in
``_core.pyx`` implements the same functions with the same contracts; either
backend may be active (see ``kernels.__init__``). All arrays are C-contiguous
float64; labels are int64.
"""

import numpy as np

NAME = "numpy"


def linear_fwd(x, w, b):
    return x @ w + b


def linear_bwd(x, w, gout):
    gx = gout @ w.T
    gw = x.T @ gout
    gb = gout.sum(axis=0)
    return gx, gw, gb


def sigmoid_fwd(x):
    # Stable two-branch form: exp is only ever taken of a non-positive value.
    z = np.exp(-np.abs(x))
    return np.where(x >= 0.0, 1.0 / (1.0 + z), z / (1.0 + z))


def sigmoid_bwd(s, gout):
    return gout * s * (1.0 - s)


def tanh_fwd(x):
    return np.tanh(x)


def tanh_bwd(t, gout):
    return gout * (1.0 - t * t)


def softmax_xent_fwd(logits, labels):
    """Mean cross-entropy over the batch, max-shifted for stability.

    Returns ``(loss, probs)``; ``probs`` is kept for the backward pass.
    """
    shift = logits.max(axis=1, keepdims=True)
    e = np.exp(logits - shift)
    total = e.sum(axis=1, keepdims=True)
    probs = e / total
    rows = np.arange(logits.shape[0])
    per_sample = np.log(total[:, 0]) + shift[:, 0] - logits[rows, labels]
    return float(per_sample.mean()), probs


def softmax_xent_bwd(probs, labels, gscale):
    glogits = probs.copy()
    rows = np.arange(probs.shape[0])
    glogits[rows, labels] -= 1.0
    glogits *= gscale / probs.shape[0]
    return glogits


def adam_update(param, grad, m, v, t, lr, beta1, beta2, eps):
    """One bias-corrected Adam update, in place, for step counter ``t`` (>= 1)."""
    m *= beta1
    m += (1.0 - beta1) * grad
    v *= beta2
    v += (1.0 - beta2) * (grad * grad)
    mhat = m / (1.0 - beta1**t)
    vhat = v / (1.0 - beta2**t)
    param -= lr * mhat / (np.sqrt(vhat) + eps)
