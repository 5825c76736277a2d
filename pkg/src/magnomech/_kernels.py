"""Compiled fixed-step RK4 integration kernels.

All kernels advance with classical fourth-order Runge-Kutta and symmetrize
the covariance matrix after every step.  They are deterministic: identical
inputs produce bit-identical outputs regardless of threading in the caller.
"""

import numpy as np
from numba import njit

# ---------------------------------------------------------------------------
# mean field
# ---------------------------------------------------------------------------


@njit(cache=True)
def mean_field_rk4(e1, e2, w1, w2, ka, km, gam, g, eta, da, dm, wb,
                   t_end, dt, stride):
    n = int(round(t_end / dt))
    nout = n // stride + 1
    times = np.zeros(nout)
    a_out = np.zeros(nout, dtype=np.complex128)
    b_out = np.zeros(nout, dtype=np.complex128)
    m_out = np.zeros(nout, dtype=np.complex128)
    ca = -(ka / 2 + 1j * da)
    cb = -(gam / 2 + 1j * wb)
    cm = -(km / 2 + 1j * dm)
    a = 0j
    b = 0j
    m = 0j
    t = 0.0
    k = 0
    for i in range(n):
        e_0 = e1 * np.exp(-1j * w1 * t) + e2 * np.exp(-1j * w2 * t)
        e_h = e1 * np.exp(-1j * w1 * (t + dt / 2)) + e2 * np.exp(-1j * w2 * (t + dt / 2))
        e_f = e1 * np.exp(-1j * w1 * (t + dt)) + e2 * np.exp(-1j * w2 * (t + dt))

        a1 = ca * a - 1j * g * m
        b1 = cb * b - 1j * eta * (m.real * m.real + m.imag * m.imag)
        m1 = cm * m - 1j * g * a - 1j * eta * m * (2 * b.real) + e_0

        ah = a + dt / 2 * a1
        bh = b + dt / 2 * b1
        mh = m + dt / 2 * m1
        a2 = ca * ah - 1j * g * mh
        b2 = cb * bh - 1j * eta * (mh.real * mh.real + mh.imag * mh.imag)
        m2 = cm * mh - 1j * g * ah - 1j * eta * mh * (2 * bh.real) + e_h

        ah = a + dt / 2 * a2
        bh = b + dt / 2 * b2
        mh = m + dt / 2 * m2
        a3 = ca * ah - 1j * g * mh
        b3 = cb * bh - 1j * eta * (mh.real * mh.real + mh.imag * mh.imag)
        m3 = cm * mh - 1j * g * ah - 1j * eta * mh * (2 * bh.real) + e_h

        af = a + dt * a3
        bf = b + dt * b3
        mf = m + dt * m3
        a4 = ca * af - 1j * g * mf
        b4 = cb * bf - 1j * eta * (mf.real * mf.real + mf.imag * mf.imag)
        m4 = cm * mf - 1j * g * af - 1j * eta * mf * (2 * bf.real) + e_f

        a += dt / 6 * (a1 + 2 * a2 + 2 * a3 + a4)
        b += dt / 6 * (b1 + 2 * b2 + 2 * b3 + b4)
        m += dt / 6 * (m1 + 2 * m2 + 2 * m3 + m4)
        t += dt
        if (i + 1) % stride == 0:
            k += 1
            times[k] = t
            a_out[k] = a
            b_out[k] = b
            m_out[k] = m
    return times[:k + 1], a_out[:k + 1], b_out[:k + 1], m_out[:k + 1]


# ---------------------------------------------------------------------------
# covariance evolution helpers
# ---------------------------------------------------------------------------


@njit(cache=True)
def _lyap_rhs(mdrift, sig, diff, out):
    # out = M sig + sig M^T + D
    for i in range(6):
        for j in range(6):
            acc = diff[i, j]
            for k in range(6):
                acc += mdrift[i, k] * sig[k, j] + sig[i, k] * mdrift[j, k]
            out[i, j] = acc


@njit(cache=True)
def _add_scaled(sig, kmat, h, out):
    for i in range(6):
        for j in range(6):
            out[i, j] = sig[i, j] + h * kmat[i, j]


@njit(cache=True)
def _rk4_combine_symmetrize(sig, k1, k2, k3, k4, dt):
    for i in range(6):
        for j in range(6):
            sig[i, j] += dt / 6 * (k1[i, j] + 2 * k2[i, j] + 2 * k3[i, j] + k4[i, j])
    for i in range(6):
        for j in range(i):
            s = (sig[i, j] + sig[j, i]) / 2
            sig[i, j] = s
            sig[j, i] = s


@njit(cache=True)
def evolve_constant(mdrift, diff, sig0, t_end, dt, stride):
    n = int(round(t_end / dt))
    nout = n // stride + 1
    times = np.zeros(nout)
    sigs = np.zeros((nout, 6, 6))
    sig = sig0.copy()
    tmp = np.zeros((6, 6))
    k1 = np.zeros((6, 6))
    k2 = np.zeros((6, 6))
    k3 = np.zeros((6, 6))
    k4 = np.zeros((6, 6))
    sigs[0] = sig
    t = 0.0
    k = 0
    for i in range(n):
        _lyap_rhs(mdrift, sig, diff, k1)
        _add_scaled(sig, k1, dt / 2, tmp)
        _lyap_rhs(mdrift, tmp, diff, k2)
        _add_scaled(sig, k2, dt / 2, tmp)
        _lyap_rhs(mdrift, tmp, diff, k3)
        _add_scaled(sig, k3, dt, tmp)
        _lyap_rhs(mdrift, tmp, diff, k4)
        _rk4_combine_symmetrize(sig, k1, k2, k3, k4, dt)
        t += dt
        if (i + 1) % stride == 0:
            k += 1
            times[k] = t
            sigs[k] = sig
    return times[:k + 1], sigs[:k + 1]


@njit(cache=True)
def _interaction_drift(mdrift, ka, km, gam, g,
                       g1r, g1i, g2r, g2i, wb, t, rwa):
    """Drift matrix of the interaction-picture model at time t.

    Couplings enter through f1 = g2 + g1 e^{-2i wb t} (lowering-lowering
    channel) and f2 = g1 + g2 e^{2i wb t} (lowering-raising channel); in the
    rotating-wave variant the oscillating terms are dropped.
    """
    if rwa:
        f1r, f1i = g2r, g2i
        f2r, f2i = g1r, g1i
    else:
        c = np.cos(2 * wb * t)
        s = np.sin(2 * wb * t)
        f1r = g2r + g1r * c + g1i * s
        f1i = g2i - g1r * s + g1i * c
        f2r = g1r + g2r * c - g2i * s
        f2i = g1i + g2r * s + g2i * c
    for i in range(6):
        for j in range(6):
            mdrift[i, j] = 0.0
    mdrift[0, 0] = -ka / 2
    mdrift[0, 5] = g
    mdrift[1, 1] = -ka / 2
    mdrift[1, 4] = -g
    mdrift[2, 2] = -gam / 2
    mdrift[2, 4] = f2i - f1i
    mdrift[2, 5] = f1r - f2r
    mdrift[3, 3] = -gam / 2
    mdrift[3, 4] = -(f1r + f2r)
    mdrift[3, 5] = -(f1i + f2i)
    mdrift[4, 1] = g
    mdrift[4, 2] = f1i + f2i
    mdrift[4, 3] = f1r - f2r
    mdrift[4, 4] = -km / 2
    mdrift[5, 0] = -g
    mdrift[5, 2] = -(f1r + f2r)
    mdrift[5, 3] = f1i - f2i
    mdrift[5, 5] = -km / 2


@njit(cache=True)
def evolve_periodic(g1r, g1i, g2r, g2i, wb, ka, km, gam, g,
                    diff, sig0, t_end, dt, stride):
    n = int(round(t_end / dt))
    nout = n // stride + 1
    times = np.zeros(nout)
    sigs = np.zeros((nout, 6, 6))
    sig = sig0.copy()
    mdrift = np.zeros((6, 6))
    tmp = np.zeros((6, 6))
    k1 = np.zeros((6, 6))
    k2 = np.zeros((6, 6))
    k3 = np.zeros((6, 6))
    k4 = np.zeros((6, 6))
    sigs[0] = sig
    t = 0.0
    k = 0
    for i in range(n):
        _interaction_drift(mdrift, ka, km, gam, g, g1r, g1i, g2r, g2i, wb, t, False)
        _lyap_rhs(mdrift, sig, diff, k1)
        _add_scaled(sig, k1, dt / 2, tmp)
        _interaction_drift(mdrift, ka, km, gam, g, g1r, g1i, g2r, g2i, wb,
                           t + dt / 2, False)
        _lyap_rhs(mdrift, tmp, diff, k2)
        _add_scaled(sig, k2, dt / 2, tmp)
        _lyap_rhs(mdrift, tmp, diff, k3)
        _add_scaled(sig, k3, dt, tmp)
        _interaction_drift(mdrift, ka, km, gam, g, g1r, g1i, g2r, g2i, wb,
                           t + dt, False)
        _lyap_rhs(mdrift, tmp, diff, k4)
        _rk4_combine_symmetrize(sig, k1, k2, k3, k4, dt)
        t += dt
        if (i + 1) % stride == 0:
            k += 1
            times[k] = t
            sigs[k] = sig
    return times[:k + 1], sigs[:k + 1]


@njit(cache=True)
def _full_drift(mdrift, ka, km, gam, g, da, wb, dm_eff, gr, gi):
    """Rotating-frame drift with instantaneous coupling g(t) = gr + i gi and
    displacement-shifted magnon detuning dm_eff."""
    for i in range(6):
        for j in range(6):
            mdrift[i, j] = 0.0
    mdrift[0, 0] = -ka / 2
    mdrift[0, 1] = da
    mdrift[0, 5] = g
    mdrift[1, 0] = -da
    mdrift[1, 1] = -ka / 2
    mdrift[1, 4] = -g
    mdrift[2, 2] = -gam / 2
    mdrift[2, 3] = wb
    mdrift[3, 2] = -wb
    mdrift[3, 3] = -gam / 2
    mdrift[3, 4] = -2 * gr
    mdrift[3, 5] = -2 * gi
    mdrift[4, 1] = g
    mdrift[4, 2] = 2 * gi
    mdrift[4, 4] = -km / 2
    mdrift[4, 5] = dm_eff
    mdrift[5, 0] = -g
    mdrift[5, 2] = -2 * gr
    mdrift[5, 4] = -dm_eff
    mdrift[5, 5] = -km / 2


@njit(cache=True)
def _interp(arr_re, arr_im, t0, dt_traj, t):
    x = (t - t0) / dt_traj
    i = int(x)
    if i < 0:
        i = 0
    if i > arr_re.shape[0] - 2:
        i = arr_re.shape[0] - 2
    w = x - i
    return ((1 - w) * arr_re[i] + w * arr_re[i + 1],
            (1 - w) * arr_im[i] + w * arr_im[i + 1])


@njit(cache=True)
def evolve_full_trajectory(b_re, b_im, m_re, m_im, traj_t0, traj_dt,
                           ka, km, gam, g, eta, da, dm, wb,
                           diff, sig0, t_end, dt, stride):
    n = int(round(t_end / dt))
    nout = n // stride + 1
    times = np.zeros(nout)
    sigs = np.zeros((nout, 6, 6))
    sig = sig0.copy()
    mdrift = np.zeros((6, 6))
    tmp = np.zeros((6, 6))
    k1 = np.zeros((6, 6))
    k2 = np.zeros((6, 6))
    k3 = np.zeros((6, 6))
    k4 = np.zeros((6, 6))
    sigs[0] = sig
    t = 0.0
    k = 0
    for i in range(n):
        for stage in range(4):
            if stage == 0:
                tt = t
                src = sig
                out = k1
            elif stage == 1:
                _add_scaled(sig, k1, dt / 2, tmp)
                tt = t + dt / 2
                src = tmp
                out = k2
            elif stage == 2:
                _add_scaled(sig, k2, dt / 2, tmp)
                tt = t + dt / 2
                src = tmp
                out = k3
            else:
                _add_scaled(sig, k3, dt, tmp)
                tt = t + dt
                src = tmp
                out = k4
            mr, mi = _interp(m_re, m_im, traj_t0, traj_dt, tt)
            br, _bi = _interp(b_re, b_im, traj_t0, traj_dt, tt)
            _full_drift(mdrift, ka, km, gam, g, da, wb,
                        dm + eta * 2 * br, eta * mr, eta * mi)
            _lyap_rhs(mdrift, src, diff, out)
        _rk4_combine_symmetrize(sig, k1, k2, k3, k4, dt)
        t += dt
        if (i + 1) % stride == 0:
            k += 1
            times[k] = t
            sigs[k] = sig
    return times[:k + 1], sigs[:k + 1]


@njit(cache=True)
def evolve_full_fused(e1, e2, w1, w2, ka, km, gam, g, eta, da, dm, wb,
                      diff, sig0, t_end, dt, stride):
    """Co-integrate the mean-field amplitudes and the covariance matrix.

    Equivalent to attaching an exact (same-step) mean trajectory to the
    rotating-frame drift, without storing it.
    """
    n = int(round(t_end / dt))
    nout = n // stride + 1
    times = np.zeros(nout)
    sigs = np.zeros((nout, 6, 6))
    m_out = np.zeros(nout, dtype=np.complex128)
    b_out = np.zeros(nout, dtype=np.complex128)
    sig = sig0.copy()
    mdrift = np.zeros((6, 6))
    tmp = np.zeros((6, 6))
    k1 = np.zeros((6, 6))
    k2 = np.zeros((6, 6))
    k3 = np.zeros((6, 6))
    k4 = np.zeros((6, 6))
    ca = -(ka / 2 + 1j * da)
    cb = -(gam / 2 + 1j * wb)
    cm = -(km / 2 + 1j * dm)
    a = 0j
    b = 0j
    m = 0j
    sigs[0] = sig
    t = 0.0
    k = 0
    for i in range(n):
        e_0 = e1 * np.exp(-1j * w1 * t) + e2 * np.exp(-1j * w2 * t)
        e_h = e1 * np.exp(-1j * w1 * (t + dt / 2)) + e2 * np.exp(-1j * w2 * (t + dt / 2))
        e_f = e1 * np.exp(-1j * w1 * (t + dt)) + e2 * np.exp(-1j * w2 * (t + dt))

        a1 = ca * a - 1j * g * m
        b1 = cb * b - 1j * eta * (m.real * m.real + m.imag * m.imag)
        m1 = cm * m - 1j * g * a - 1j * eta * m * (2 * b.real) + e_0
        ah = a + dt / 2 * a1
        bh = b + dt / 2 * b1
        mh = m + dt / 2 * m1
        a2 = ca * ah - 1j * g * mh
        b2 = cb * bh - 1j * eta * (mh.real * mh.real + mh.imag * mh.imag)
        m2 = cm * mh - 1j * g * ah - 1j * eta * mh * (2 * bh.real) + e_h
        ah2 = a + dt / 2 * a2
        bh2 = b + dt / 2 * b2
        mh2 = m + dt / 2 * m2
        a3 = ca * ah2 - 1j * g * mh2
        b3 = cb * bh2 - 1j * eta * (mh2.real * mh2.real + mh2.imag * mh2.imag)
        m3 = cm * mh2 - 1j * g * ah2 - 1j * eta * mh2 * (2 * bh2.real) + e_h
        af = a + dt * a3
        bf = b + dt * b3
        mf = m + dt * m3
        a4 = ca * af - 1j * g * mf
        b4 = cb * bf - 1j * eta * (mf.real * mf.real + mf.imag * mf.imag)
        m4 = cm * mf - 1j * g * af - 1j * eta * mf * (2 * bf.real) + e_f

        # covariance stages use the mean values consistent with each stage time
        _full_drift(mdrift, ka, km, gam, g, da, wb,
                    dm + eta * 2 * b.real, (eta * m).real, (eta * m).imag)
        _lyap_rhs(mdrift, sig, diff, k1)
        _add_scaled(sig, k1, dt / 2, tmp)
        _full_drift(mdrift, ka, km, gam, g, da, wb,
                    dm + eta * 2 * bh.real, (eta * mh).real, (eta * mh).imag)
        _lyap_rhs(mdrift, tmp, diff, k2)
        _add_scaled(sig, k2, dt / 2, tmp)
        _lyap_rhs(mdrift, tmp, diff, k3)
        _add_scaled(sig, k3, dt, tmp)
        _full_drift(mdrift, ka, km, gam, g, da, wb,
                    dm + eta * 2 * bf.real, (eta * mf).real, (eta * mf).imag)
        _lyap_rhs(mdrift, tmp, diff, k4)
        _rk4_combine_symmetrize(sig, k1, k2, k3, k4, dt)

        a += dt / 6 * (a1 + 2 * a2 + 2 * a3 + a4)
        b += dt / 6 * (b1 + 2 * b2 + 2 * b3 + b4)
        m += dt / 6 * (m1 + 2 * m2 + 2 * m3 + m4)
        t += dt
        if (i + 1) % stride == 0:
            k += 1
            times[k] = t
            sigs[k] = sig
            m_out[k] = m
            b_out[k] = b
    return times[:k + 1], sigs[:k + 1], m_out[:k + 1], b_out[:k + 1]
