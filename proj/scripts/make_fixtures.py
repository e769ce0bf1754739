#!/usr/bin/env python3
"""Generates the FCIDUMP fixtures under data/.

Restricted Hartree-Fock over contracted s/p Gaussians (McMurchie-Davidson
integrals), followed by an MO transform and an FCIDUMP dump (chemist
notation, 8-fold unique records). Each run is validated against reference
energies before anything is written.

Requires numpy + scipy only.
"""

import math
import os
import sys

import numpy as np
from scipy.special import hyp1f1
from scipy.linalg import eigh, expm
from scipy.optimize import minimize_scalar
import scipy.sparse.linalg as spla

ANGSTROM = 1.0 / 0.52917721092  # bohr per angstrom

# ---------------------------------------------------------------------------
# Basis set data (exponents, contraction coefficients on normalized
# primitives). STO-3G and 6-31G values from the EMSL/BSE tabulation.
# ---------------------------------------------------------------------------

STO3G = {
    "H": [("s", [3.42525091, 0.62391373, 0.16885540],
           [0.15432897, 0.53532814, 0.44463454])],
    "N": [("s", [99.10616896, 18.05231239, 4.885660238],
           [0.15432897, 0.53532814, 0.44463454]),
          ("s", [3.780455879, 0.8784966449, 0.2857143744],
           [-0.09996723, 0.39951283, 0.70011547]),
          ("p", [3.780455879, 0.8784966449, 0.2857143744],
           [0.15591627, 0.60768372, 0.39195739])],
    "O": [("s", [130.7093200, 23.80886050, 6.443608313],
           [0.15432897, 0.53532814, 0.44463454]),
          ("s", [5.033151319, 1.169596125, 0.3803889600],
           [-0.09996723, 0.39951283, 0.70011547]),
          ("p", [5.033151319, 1.169596125, 0.3803889600],
           [0.15591627, 0.60768372, 0.39195739])],
}

G631 = {
    "H": [("s", [18.73113696, 2.825394365, 0.6401216923],
           [0.03349460434, 0.2347269535, 0.8137573261]),
          ("s", [0.1612777588], [1.0])],
}

CHARGES = {"H": 1, "N": 7, "O": 8}


def primitive_norm(alpha, l, m, n):
    def dfact(k):
        r = 1
        while k > 1:
            r *= k
            k -= 2
        return r
    num = (2 * alpha / math.pi) ** 0.75 * (4 * alpha) ** ((l + m + n) / 2.0)
    return num / math.sqrt(dfact(2 * l - 1) * dfact(2 * m - 1) * dfact(2 * n - 1))


class Cgto:
    """Contracted Cartesian Gaussian."""

    def __init__(self, center, lmn, exps, coefs):
        self.center = np.asarray(center, dtype=float)
        self.lmn = lmn
        self.exps = list(exps)
        self.coefs = [c * primitive_norm(a, *lmn) for a, c in zip(exps, coefs)]
        # renormalize the contraction
        s = overlap_cgto(self, self)
        self.coefs = [c / math.sqrt(s) for c in self.coefs]


def build_basis(atoms, basis):
    funcs = []
    for sym, pos in atoms:
        for shell, exps, coefs in basis[sym]:
            if shell == "s":
                funcs.append(Cgto(pos, (0, 0, 0), exps, coefs))
            elif shell == "p":
                for lmn in ((1, 0, 0), (0, 1, 0), (0, 0, 1)):
                    funcs.append(Cgto(pos, lmn, exps, coefs))
    return funcs


def hermite_e(i, j, t, q_x, a, b, memo=None):
    """McMurchie-Davidson expansion coefficient E_t^{ij}."""
    if memo is None:
        memo = {}
    key = (i, j, t)
    if key in memo:
        return memo[key]
    p = a + b
    q = a * b / p
    if t < 0 or t > i + j:
        val = 0.0
    elif i == 0 and j == 0 and t == 0:
        val = math.exp(-q * q_x * q_x)
    elif j == 0:
        val = (hermite_e(i - 1, j, t - 1, q_x, a, b, memo) / (2 * p)
               - (q * q_x / a) * hermite_e(i - 1, j, t, q_x, a, b, memo)
               + (t + 1) * hermite_e(i - 1, j, t + 1, q_x, a, b, memo))
    else:
        val = (hermite_e(i, j - 1, t - 1, q_x, a, b, memo) / (2 * p)
               + (q * q_x / b) * hermite_e(i, j - 1, t, q_x, a, b, memo)
               + (t + 1) * hermite_e(i, j - 1, t + 1, q_x, a, b, memo))
    memo[key] = val
    return val


def overlap_prim(a, lmn1, ra, b, lmn2, rb):
    s = 1.0
    for d in range(3):
        s *= hermite_e(lmn1[d], lmn2[d], 0, ra[d] - rb[d], a, b)
    return s * (math.pi / (a + b)) ** 1.5


def overlap_cgto(g1, g2):
    s = 0.0
    for a, ca in zip(g1.exps, g1.coefs):
        for b, cb in zip(g2.exps, g2.coefs):
            s += ca * cb * overlap_prim(a, g1.lmn, g1.center, b, g2.lmn, g2.center)
    return s


def kinetic_prim(a, lmn1, ra, b, lmn2, rb):
    l2, m2, n2 = lmn2

    def ov(dl, dm, dn):
        lmn = (l2 + dl, m2 + dm, n2 + dn)
        if min(lmn) < 0:
            return 0.0
        return overlap_prim(a, lmn1, ra, b, lmn, rb)

    term0 = b * (2 * (l2 + m2 + n2) + 3) * ov(0, 0, 0)
    term1 = -2 * b * b * (ov(2, 0, 0) + ov(0, 2, 0) + ov(0, 0, 2))
    term2 = -0.5 * (l2 * (l2 - 1) * ov(-2, 0, 0) + m2 * (m2 - 1) * ov(0, -2, 0)
                    + n2 * (n2 - 1) * ov(0, 0, -2))
    return term0 + term1 + term2


def kinetic_cgto(g1, g2):
    s = 0.0
    for a, ca in zip(g1.exps, g1.coefs):
        for b, cb in zip(g2.exps, g2.coefs):
            s += ca * cb * kinetic_prim(a, g1.lmn, g1.center, b, g2.lmn, g2.center)
    return s


def boys(n, x):
    return hyp1f1(n + 0.5, n + 1.5, -x) / (2.0 * n + 1.0)


def hermite_r(t, u, v, n, p, pc, memo):
    key = (t, u, v, n)
    if key in memo:
        return memo[key]
    if t == u == v == 0:
        val = (-2.0 * p) ** n * boys(n, p * float(np.dot(pc, pc)))
    elif t > 0:
        val = (t - 1) * (hermite_r(t - 2, u, v, n + 1, p, pc, memo) if t > 1 else 0.0) \
            + pc[0] * hermite_r(t - 1, u, v, n + 1, p, pc, memo)
    elif u > 0:
        val = (u - 1) * (hermite_r(t, u - 2, v, n + 1, p, pc, memo) if u > 1 else 0.0) \
            + pc[1] * hermite_r(t, u - 1, v, n + 1, p, pc, memo)
    else:
        val = (v - 1) * (hermite_r(t, u, v - 2, n + 1, p, pc, memo) if v > 1 else 0.0) \
            + pc[2] * hermite_r(t, u, v - 1, n + 1, p, pc, memo)
    memo[key] = val
    return val


def nuclear_prim(a, lmn1, ra, b, lmn2, rb, rc):
    p = a + b
    rp = (a * ra + b * rb) / p
    pc = rp - rc
    l1, m1, n1 = lmn1
    l2, m2, n2 = lmn2
    memos = [{}, {}, {}]
    e = [[hermite_e((l1, m1, n1)[d], (l2, m2, n2)[d], t,
                    ra[d] - rb[d], a, b, memos[d])
          for t in range((l1, m1, n1)[d] + (l2, m2, n2)[d] + 1)] for d in range(3)]
    rmemo = {}
    val = 0.0
    for t in range(l1 + l2 + 1):
        for u in range(m1 + m2 + 1):
            for v in range(n1 + n2 + 1):
                val += e[0][t] * e[1][u] * e[2][v] * hermite_r(t, u, v, 0, p, pc, rmemo)
    return 2.0 * math.pi / p * val


def nuclear_cgto(g1, g2, atoms):
    s = 0.0
    for a, ca in zip(g1.exps, g1.coefs):
        for b, cb in zip(g2.exps, g2.coefs):
            for sym, pos in atoms:
                s -= CHARGES[sym] * ca * cb * nuclear_prim(
                    a, g1.lmn, g1.center, b, g2.lmn, g2.center, np.asarray(pos))
    return s


def eri_prim(a, lmn1, ra, b, lmn2, rb, c, lmn3, rc, d, lmn4, rd):
    p = a + b
    q = c + d
    alpha = p * q / (p + q)
    rp = (a * ra + b * rb) / p
    rq = (c * rc + d * rd) / q
    pq = rp - rq

    def ecoefs(l1, l2, ga, gb, r1, r2):
        memos = [{}, {}, {}]
        return [[hermite_e(l1[dd], l2[dd], t, r1[dd] - r2[dd], ga, gb, memos[dd])
                 for t in range(l1[dd] + l2[dd] + 1)] for dd in range(3)]

    e1 = ecoefs(lmn1, lmn2, a, b, ra, rb)
    e2 = ecoefs(lmn3, lmn4, c, d, rc, rd)
    rmemo = {}
    val = 0.0
    for t in range(lmn1[0] + lmn2[0] + 1):
        for u in range(lmn1[1] + lmn2[1] + 1):
            for v in range(lmn1[2] + lmn2[2] + 1):
                if e1[0][t] * e1[1][u] * e1[2][v] == 0.0:
                    continue
                for tt in range(lmn3[0] + lmn4[0] + 1):
                    for uu in range(lmn3[1] + lmn4[1] + 1):
                        for vv in range(lmn3[2] + lmn4[2] + 1):
                            val += (e1[0][t] * e1[1][u] * e1[2][v]
                                    * e2[0][tt] * e2[1][uu] * e2[2][vv]
                                    * (-1.0) ** (tt + uu + vv)
                                    * hermite_r(t + tt, u + uu, v + vv, 0, alpha, pq, rmemo))
    return val * 2.0 * math.pi ** 2.5 / (p * q * math.sqrt(p + q))


def eri_cgto(g1, g2, g3, g4):
    s = 0.0
    for a, ca in zip(g1.exps, g1.coefs):
        for b, cb in zip(g2.exps, g2.coefs):
            for c, cc in zip(g3.exps, g3.coefs):
                for d, cd in zip(g4.exps, g4.coefs):
                    s += ca * cb * cc * cd * eri_prim(
                        a, g1.lmn, g1.center, b, g2.lmn, g2.center,
                        c, g3.lmn, g3.center, d, g4.lmn, g4.center)
    return s


def ao_integrals(atoms, basis):
    funcs = build_basis(atoms, basis)
    n = len(funcs)
    s = np.zeros((n, n))
    t = np.zeros((n, n))
    v = np.zeros((n, n))
    for i in range(n):
        for j in range(i + 1):
            s[i, j] = s[j, i] = overlap_cgto(funcs[i], funcs[j])
            t[i, j] = t[j, i] = kinetic_cgto(funcs[i], funcs[j])
            v[i, j] = v[j, i] = nuclear_cgto(funcs[i], funcs[j], atoms)
    eri = np.zeros((n, n, n, n))
    for i in range(n):
        for j in range(i + 1):
            for k in range(n):
                for l in range(k + 1):
                    if (i * (i + 1) // 2 + j) < (k * (k + 1) // 2 + l):
                        continue
                    val = eri_cgto(funcs[i], funcs[j], funcs[k], funcs[l])
                    for (p, q, r, ss) in ((i, j, k, l), (j, i, k, l), (i, j, l, k),
                                          (j, i, l, k), (k, l, i, j), (l, k, i, j),
                                          (k, l, j, i), (l, k, j, i)):
                        eri[p, q, r, ss] = val
    e_nn = 0.0
    for a in range(len(atoms)):
        for b in range(a):
            za, ra = CHARGES[atoms[a][0]], np.asarray(atoms[a][1])
            zb, rb = CHARGES[atoms[b][0]], np.asarray(atoms[b][1])
            e_nn += za * zb / float(np.linalg.norm(ra - rb))
    return s, t + v, eri, e_nn


def rhf(s, hcore, eri, e_nn, n_elec, max_cycles=200):
    n = s.shape[0]
    n_occ = n_elec // 2
    sval, svec = np.linalg.eigh(s)
    x = svec @ np.diag(sval ** -0.5) @ svec.T
    # GWH guess; the bare-core guess traps N2 in a symmetry-broken solution
    f = np.empty_like(hcore)
    for i in range(n):
        for j in range(n):
            f[i, j] = hcore[i, j] if i == j else 0.875 * s[i, j] * (hcore[i, i] + hcore[j, j])
    energy = 0.0
    diis_f, diis_e = [], []
    for cycle in range(max_cycles):
        fo = x.T @ f @ x
        eps, cvec = np.linalg.eigh(fo)
        c = x @ cvec
        cocc = c[:, :n_occ]
        dm = 2.0 * cocc @ cocc.T
        j = np.einsum("pqrs,rs->pq", eri, dm)
        k = np.einsum("prqs,rs->pq", eri, dm)
        f_new = hcore + j - 0.5 * k
        e_new = 0.5 * np.sum(dm * (hcore + f_new)) + e_nn
        err = f_new @ dm @ s - s @ dm @ f_new
        diis_f.append(f_new.copy())
        diis_e.append(err.copy())
        if len(diis_f) > 8:
            diis_f.pop(0)
            diis_e.pop(0)
        if len(diis_f) > 1:
            m = len(diis_f)
            bmat = -np.ones((m + 1, m + 1))
            bmat[m, m] = 0.0
            for i in range(m):
                for jj in range(m):
                    bmat[i, jj] = np.sum(diis_e[i] * diis_e[jj])
            rhs = np.zeros(m + 1)
            rhs[m] = -1.0
            try:
                w = np.linalg.solve(bmat, rhs)[:m]
                f = sum(wi * fi for wi, fi in zip(w, diis_f))
            except np.linalg.LinAlgError:
                f = f_new
        else:
            f = f_new
        if abs(e_new - energy) < 1e-12 and cycle > 3:
            energy = e_new
            break
        energy = e_new
    fo = x.T @ f @ x
    eps, cvec = np.linalg.eigh(fo)
    c = x @ cvec
    return energy, c, eps


def mo_integrals(hcore, eri, c):
    h_mo = c.T @ hcore @ c
    eri_mo = np.einsum("pqrs,pi,qj,rk,sl->ijkl", eri, c, c, c, c, optimize=True)
    return h_mo, eri_mo


def write_fcidump(path, h_mo, eri_mo, e_nn, n_elec, note):
    n = h_mo.shape[0]
    lines = [f"&FCI NORB={n}, NELEC={n_elec}, MS2=0,", "&END"]
    for i in range(1, n + 1):
        for j in range(1, i + 1):
            for k in range(1, i + 1):
                lstop = j if k == i else k
                for l in range(1, lstop + 1):
                    val = eri_mo[i - 1, j - 1, k - 1, l - 1]
                    if abs(val) > 1e-12:
                        lines.append(f"{val:24.16e} {i:3d} {j:3d} {k:3d} {l:3d}")
    for i in range(1, n + 1):
        for j in range(1, i + 1):
            val = h_mo[i - 1, j - 1]
            if abs(val) > 1e-12:
                lines.append(f"{val:24.16e} {i:3d} {j:3d}   0   0")
    lines.append(f"{e_nn:24.16e}   0   0   0   0")
    with open(path, "w") as f:
        f.write("\n".join(lines) + "\n")
    print(f"  wrote {path}  ({note})")


# ---------------------------------------------------------------------------
# Dense Fock-space checks (Jordan-Wigner ladder matrices), used to validate
# fixtures before they are frozen.
# ---------------------------------------------------------------------------

def ladder_matrices(n_modes):
    ident = np.eye(2)
    z = np.diag([1.0, -1.0])
    ap = np.array([[0.0, 0.0], [1.0, 0.0]])  # a† on one mode: |1><0|
    ops = []
    for p in range(n_modes):
        mats = []
        for q in range(n_modes):
            if q < p:
                mats.append(z)
            elif q == p:
                mats.append(ap)
            else:
                mats.append(ident)
        full = np.array([[1.0]])
        for m in mats:  # mode 0 is the least-significant factor
            full = np.kron(m, full)
        ops.append(full)
    return ops


def dense_hamiltonian(h_mo, eri_mo, e_nn, n_orb):
    m = 2 * n_orb
    adag = ladder_matrices(m)
    a = [x.T for x in adag]
    dim = 2 ** m
    ham = e_nn * np.eye(dim)
    for r in range(n_orb):
        for s in range(n_orb):
            if abs(h_mo[r, s]) < 1e-12:
                continue
            for sp in (0, n_orb):
                ham += h_mo[r, s] * adag[r + sp] @ a[s + sp]
    for r in range(n_orb):
        for s in range(n_orb):
            for t in range(n_orb):
                for u in range(n_orb):
                    g = eri_mo[r, t, s, u]  # chemist (rt|su) = physicist <rs|tu>
                    if abs(g) < 1e-12:
                        continue
                    for sp1 in (0, n_orb):
                        for sp2 in (0, n_orb):
                            ham += 0.5 * g * adag[r + sp1] @ adag[s + sp2] @ a[u + sp2] @ a[t + sp1]
    return ham


def sector_ground(ham, n_modes, n_up, n_dn):
    n_orb = n_modes // 2
    idx = []
    for b in range(2 ** n_modes):
        up = bin(b & ((1 << n_orb) - 1)).count("1")
        dn = bin(b >> n_orb).count("1")
        if up == n_up and dn == n_dn:
            idx.append(b)
    sub = ham[np.ix_(idx, idx)]
    if len(idx) > 500:
        w = spla.eigsh(sub, k=1, which="SA")[0]
        return float(w[0])
    return float(np.linalg.eigvalsh(sub)[0])


def check(label, got, want, tol):
    ok = abs(got - want) <= tol
    print(f"  check {label}: got {got:+.6f}, want {want:+.6f} (tol {tol})  ->",
          "ok" if ok else "MISMATCH")
    if not ok:
        raise SystemExit(f"fixture validation failed: {label}")


def h4_geometry(beta_deg, radius_ang):
    r = radius_ang * ANGSTROM
    b2 = math.radians(beta_deg) / 2.0
    return [("H", (r * math.cos(b2), r * math.sin(b2), 0.0)),
            ("H", (r * math.cos(b2), -r * math.sin(b2), 0.0)),
            ("H", (-r * math.cos(b2), r * math.sin(b2), 0.0)),
            ("H", (-r * math.cos(b2), -r * math.sin(b2), 0.0))]


def h2o_geometry(d_ang, angle_deg=104.51):
    d = d_ang * ANGSTROM
    half = math.radians(angle_deg) / 2.0
    return [("O", (0.0, 0.0, 0.0)),
            ("H", (d * math.sin(half), 0.0, d * math.cos(half))),
            ("H", (-d * math.sin(half), 0.0, d * math.cos(half)))]


def make_system(atoms, basis, n_elec):
    s, hcore, eri, e_nn = ao_integrals(atoms, basis)
    e_rhf, c, _ = rhf(s, hcore, eri, e_nn, n_elec)
    h_mo, eri_mo = mo_integrals(hcore, eri, c)
    return e_rhf, h_mo, eri_mo, e_nn


def main():
    out = sys.argv[1] if len(sys.argv) > 1 else "data"
    os.makedirs(out, exist_ok=True)

    # --- H2 / STO-3G at 0.735 A ------------------------------------------
    print("H2 / STO-3G @ 0.735 A")
    atoms = [("H", (0.0, 0.0, 0.0)), ("H", (0.0, 0.0, 0.735 * ANGSTROM))]
    e_rhf, h_mo, eri_mo, e_nn = make_system(atoms, STO3G, 2)
    check("RHF energy", e_rhf, -1.117, 1e-3)
    ham = dense_hamiltonian(h_mo, eri_mo, e_nn, 2)
    e_fci = sector_ground(ham, 4, 1, 1)
    check("FCI energy", e_fci, -1.137306, 2e-4)
    write_fcidump(os.path.join(out, "h2_sto3g_0.735.fcidump"), h_mo, eri_mo, e_nn, 2,
                  f"RHF {e_rhf:.8f}, FCI {e_fci:.8f}")

    # --- H2 / 6-31G at 0.546 A --------------------------------------------
    print("H2 / 6-31G @ 0.546 A")
    atoms = [("H", (0.0, 0.0, 0.0)), ("H", (0.0, 0.0, 0.546 * ANGSTROM))]
    e_rhf, h_mo, eri_mo, e_nn = make_system(atoms, G631, 2)
    ham = dense_hamiltonian(h_mo, eri_mo, e_nn, 4)
    e_fci = sector_ground(ham, 8, 1, 1)
    print(f"  RHF {e_rhf:.8f}, FCI {e_fci:.8f}")
    # one-parameter pair/singlet probes: minimize <ref| e^{-t} H e^{t} |ref>
    dim = 2 ** 8
    adag = ladder_matrices(8)
    a = [x.T for x in adag]
    ref = 0
    for mode in (0, 4):  # spatial 0, both spins
        ref |= 1 << mode
    vec0 = np.zeros(dim)
    vec0[ref] = 1.0

    def pair_minimum(orb):
        t_op = adag[orb] @ adag[orb + 4] @ a[4] @ a[0]
        gen = t_op - t_op.T

        def energy(theta):
            v = expm(theta * gen) @ vec0
            return float(v @ ham @ v)

        res = minimize_scalar(energy, bounds=(-1.5, 1.5), method="bounded",
                              options={"xatol": 1e-10})
        return res.fun

    got = sorted(pair_minimum(orb) for orb in (1, 2, 3))
    # compared as sorted sets: the assignment of the two highest virtuals to
    # indices 2/3 is an orbital-ordering convention
    for got_e, want_e in zip(got, sorted([-1.090, -1.094, -1.095])):
        check("single-pair-excitation minimum", got_e, want_e, 1e-3)
    write_fcidump(os.path.join(out, "h2_631g_0.546.fcidump"), h_mo, eri_mo, e_nn, 2,
                  f"RHF {e_rhf:.8f}, FCI {e_fci:.8f}")

    # --- H4 ring scan ------------------------------------------------------
    print("H4 / STO-3G ring scan (R = 1.738 A)")
    for beta in (85.0, 87.5, 90.0, 92.5, 95.0):
        atoms = h4_geometry(beta, 1.738)
        e_rhf, h_mo, eri_mo, e_nn = make_system(atoms, STO3G, 4)
        ham = dense_hamiltonian(h_mo, eri_mo, e_nn, 4)
        e_fci = sector_ground(ham, 8, 2, 2)
        tag = f"{beta:g}".replace(".", "p")
        write_fcidump(os.path.join(out, f"h4_sto3g_beta{tag}.fcidump"),
                      h_mo, eri_mo, e_nn, 4,
                      f"beta={beta} deg, RHF {e_rhf:.8f}, FCI {e_fci:.8f}")

    # --- H2O symmetric stretch scan ----------------------------------------
    print("H2O / STO-3G symmetric OH stretch (alpha = 104.51 deg)")
    for d in (1.754, 1.914, 2.073, 2.233, 2.393):
        atoms = h2o_geometry(d)
        e_rhf, h_mo, eri_mo, e_nn = make_system(atoms, STO3G, 10)
        tag = f"{d:g}".replace(".", "p")
        write_fcidump(os.path.join(out, f"h2o_sto3g_oh{tag}.fcidump"),
                      h_mo, eri_mo, e_nn, 10,
                      f"d(OH)={d} A, RHF {e_rhf:.8f}")

    # --- N2 single point ----------------------------------------------------
    print("N2 / STO-3G @ 1.2 A")
    atoms = [("N", (0.0, 0.0, 0.0)), ("N", (0.0, 0.0, 1.2 * ANGSTROM))]
    e_rhf, h_mo, eri_mo, e_nn = make_system(atoms, STO3G, 14)
    print(f"  RHF {e_rhf:.8f}")
    write_fcidump(os.path.join(out, "n2_sto3g_1.2.fcidump"), h_mo, eri_mo, e_nn, 14,
                  f"RHF {e_rhf:.8f}")

    print("all fixtures written")


if __name__ == "__main__":
    main()
