# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled implementation of the hot kernels.

Same contracts as ``numpy_ref``; fused loops avoid the temporaries the NumPy
expressions allocate. Results may differ from the fallback in the last ulp
(summation order), which every consumer tolerates.
"""

import numpy as np

cimport numpy as cnp
from libc.math cimport exp, fabs, log, sqrt, tanh as c_tanh

cnp.import_array()

NAME = "compiled"


def linear_fwd(double[:, ::1] x, double[:, ::1] w, double[::1] b):
    cdef Py_ssize_t n = x.shape[0], din = x.shape[1], dout = w.shape[1]
    out_arr = np.empty((n, dout), dtype=np.float64)
    cdef double[:, ::1] out = out_arr
    cdef Py_ssize_t i, j, k
    cdef double xv
    for i in range(n):
        for j in range(dout):
            out[i, j] = b[j]
        for k in range(din):
            xv = x[i, k]
            if xv != 0.0:
                for j in range(dout):
                    out[i, j] += xv * w[k, j]
    return out_arr


def linear_bwd(double[:, ::1] x, double[:, ::1] w, double[:, ::1] gout):
    cdef Py_ssize_t n = x.shape[0], din = x.shape[1], dout = w.shape[1]
    gx_arr = np.zeros((n, din), dtype=np.float64)
    gw_arr = np.zeros((din, dout), dtype=np.float64)
    gb_arr = np.zeros(dout, dtype=np.float64)
    cdef double[:, ::1] gx = gx_arr
    cdef double[:, ::1] gw = gw_arr
    cdef double[::1] gb = gb_arr
    cdef Py_ssize_t i, j, k
    cdef double acc, g, xv
    for i in range(n):
        for k in range(din):
            acc = 0.0
            for j in range(dout):
                acc += gout[i, j] * w[k, j]
            gx[i, k] = acc
        for k in range(din):
            xv = x[i, k]
            if xv != 0.0:
                for j in range(dout):
                    gw[k, j] += xv * gout[i, j]
        for j in range(dout):
            gb[j] += gout[i, j]
    return gx_arr, gw_arr, gb_arr


cdef inline double _sigmoid(double x) nogil:
    cdef double z
    if x >= 0.0:
        z = exp(-x)
        return 1.0 / (1.0 + z)
    z = exp(x)
    return z / (1.0 + z)


def sigmoid_fwd(x):
    x_arr = np.ascontiguousarray(x, dtype=np.float64)
    flat_in = x_arr.ravel()
    out_arr = np.empty_like(flat_in)
    cdef double[::1] xi = flat_in
    cdef double[::1] oi = out_arr
    cdef Py_ssize_t i, n = xi.shape[0]
    for i in range(n):
        oi[i] = _sigmoid(xi[i])
    return out_arr.reshape(x_arr.shape)


def sigmoid_bwd(s, gout):
    s_arr = np.ascontiguousarray(s, dtype=np.float64).ravel()
    g_arr = np.ascontiguousarray(gout, dtype=np.float64).ravel()
    out_arr = np.empty_like(s_arr)
    cdef double[::1] si = s_arr
    cdef double[::1] gi = g_arr
    cdef double[::1] oi = out_arr
    cdef Py_ssize_t i, n = si.shape[0]
    for i in range(n):
        oi[i] = gi[i] * si[i] * (1.0 - si[i])
    return out_arr.reshape(np.shape(gout))


def tanh_fwd(x):
    x_arr = np.ascontiguousarray(x, dtype=np.float64)
    flat_in = x_arr.ravel()
    out_arr = np.empty_like(flat_in)
    cdef double[::1] xi = flat_in
    cdef double[::1] oi = out_arr
    cdef Py_ssize_t i, n = xi.shape[0]
    for i in range(n):
        oi[i] = c_tanh(xi[i])
    return out_arr.reshape(x_arr.shape)


def tanh_bwd(t, gout):
    t_arr = np.ascontiguousarray(t, dtype=np.float64).ravel()
    g_arr = np.ascontiguousarray(gout, dtype=np.float64).ravel()
    out_arr = np.empty_like(t_arr)
    cdef double[::1] ti = t_arr
    cdef double[::1] gi = g_arr
    cdef double[::1] oi = out_arr
    cdef Py_ssize_t i, n = ti.shape[0]
    for i in range(n):
        oi[i] = gi[i] * (1.0 - ti[i] * ti[i])
    return out_arr.reshape(np.shape(gout))


def softmax_xent_fwd(double[:, ::1] logits, long[::1] labels):
    cdef Py_ssize_t n = logits.shape[0], c = logits.shape[1]
    probs_arr = np.empty((n, c), dtype=np.float64)
    cdef double[:, ::1] probs = probs_arr
    cdef Py_ssize_t i, j
    cdef double shift, total, loss = 0.0
    for i in range(n):
        shift = logits[i, 0]
        for j in range(1, c):
            if logits[i, j] > shift:
                shift = logits[i, j]
        total = 0.0
        for j in range(c):
            probs[i, j] = exp(logits[i, j] - shift)
            total += probs[i, j]
        for j in range(c):
            probs[i, j] /= total
        loss += log(total) + shift - logits[i, labels[i]]
    return loss / n, probs_arr


def softmax_xent_bwd(double[:, ::1] probs, long[::1] labels, double gscale):
    cdef Py_ssize_t n = probs.shape[0], c = probs.shape[1]
    g_arr = np.empty((n, c), dtype=np.float64)
    cdef double[:, ::1] g = g_arr
    cdef double scale = gscale / n
    cdef Py_ssize_t i, j
    for i in range(n):
        for j in range(c):
            g[i, j] = probs[i, j] * scale
        g[i, labels[i]] -= scale
    return g_arr


def adam_update(param, grad, m, v, long t, double lr, double beta1,
                double beta2, double eps):
    cdef double[::1] p = param.ravel()
    cdef double[::1] g = np.ascontiguousarray(grad, dtype=np.float64).ravel()
    cdef double[::1] mm = m.ravel()
    cdef double[::1] vv = v.ravel()
    cdef double bc1 = 1.0 - beta1**t
    cdef double bc2 = 1.0 - beta2**t
    cdef Py_ssize_t i, n = p.shape[0]
    cdef double mhat, vhat
    for i in range(n):
        mm[i] = beta1 * mm[i] + (1.0 - beta1) * g[i]
        vv[i] = beta2 * vv[i] + (1.0 - beta2) * (g[i] * g[i])
        mhat = mm[i] / bc1
        vhat = vv[i] / bc2
        p[i] -= lr * mhat / (sqrt(vhat) + eps)
