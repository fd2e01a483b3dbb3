"""Structural validation suite.

Each check computes both sides of a dimension or element identity with
exact arithmetic and reports pass or fail together with a witness
table.  Failures never abort a run; every instance produces a report
and the caller aggregates.  All iteration orders are fixed so that two
runs over the same inputs emit identical output apart from timing.
"""

from __future__ import annotations

import time
from fractions import Fraction
from functools import partial

from .bimodules import Bimodules, emb_elt_first, emb_elt_last, min_tau_degree
from .cartan import Weight, build_cartan
from .cyclotomic import CycAlgebra
from .klr import BasisMonomial, basis_monomials, seqs_of
from .laurent import LaurentPoly
from .linalg import SubspaceBasis, laurent_rank
from .perms import all_perms, apply_word, inversions
from .simples import count_simples
from .tensors import (CycColumnModule, CycRowModule, FreeColumnModule,
                      FreeRowModule, algebra_gens, tensor_dim)
from .uqmod import UqModule

__all__ = [
    "Report", "CHECKS", "run_check", "run_all",
    "check_pbw", "check_taug", "check_exact", "check_sl2", "check_mixed",
    "check_phi", "check_convolution", "check_categorification",
]


class Report:
    """Outcome of one check instance.

    witness holds small rows of scalars and strings; fail_degree is the
    first degree at which a comparison broke, when that makes sense.
    """

    def __init__(self, name, inputs):
        self.name = name
        self.inputs = inputs
        self.status = "pass"
        self.witness = []
        self.fail_degree = None
        self.elapsed_ms = 0.0

    def fail(self, degree=None, **info):
        if self.status == "pass":
            self.status = "fail"
            if degree is not None:
                self.fail_degree = degree
        row = {"kind": "counterexample"}
        if degree is not None:
            row["degree"] = degree
        row.update(info)
        self.witness.append(row)

    def note(self, **info):
        self.witness.append(info)

    def to_json(self):
        return {
            "name": self.name,
            "inputs": self.inputs,
            "status": self.status,
            "fail_degree": self.fail_degree,
            "witness": self.witness,
            "elapsed_ms": round(self.elapsed_ms, 3),
        }


def _poly_str(p: LaurentPoly) -> str:
    return str(sorted(p.coeffs.items()))


def _sub_beta(beta, i):
    out = list(beta)
    out[i] -= 1
    return tuple(out) if out[i] >= 0 else None


def _add_beta(beta, j):
    out = list(beta)
    out[j] += 1
    return tuple(out)


def _content(datum, seq):
    beta = [0] * datum.rank
    for c in seq:
        beta[c] += 1
    return tuple(beta)


def _left_seq(m):
    return apply_word(m.word, m.seq) if m.word else m.seq


def _free_block_poly(datum, beta, rows, cols, window, qspec=None):
    """Graded dims of e(rows) R(beta) e(cols) for the free algebra."""
    coeffs = {}
    for d in range(window[0], window[1] + 1):
        k = 0
        for m in basis_monomials(datum, beta, d):
            if m.seq in cols and _left_seq(m) in rows:
                k += 1
        if k:
            coeffs[d] = k
    return LaurentPoly(coeffs)


def _free_dim_series(datum, beta, window):
    rows = set(seqs_of(tuple(beta)))
    return _free_block_poly(datum, beta, rows, rows, window)


def _gen_fn_series(datum, beta, window):
    """Free graded dims from the closed generating function: crossings
    by permutation, dots by geometric factors per strand."""
    n = sum(beta)
    top = window[1]
    coeffs = {}
    for seq in seqs_of(tuple(beta)):
        weights = [datum.form(c, c) for c in seq]
        for w in all_perms(n):
            tdeg = 0
            for (a, b) in inversions(w):
                tdeg -= datum.form(seq[a], seq[b])
            stack = [tdeg]
            for wgt in weights:
                nxt = []
                for d in stack:
                    e = 0
                    while d + e * wgt <= top:
                        nxt.append(d + e * wgt)
                        e += 1
                stack = nxt
            for d in stack:
                if window[0] <= d <= top:
                    coeffs[d] = coeffs.get(d, 0) + 1
    return LaurentPoly({d: c for d, c in coeffs.items() if c})


def check_pbw(datum, beta, degcap=10, qspec=None):
    """Monomial counts against the generating function, the corner
    refinement, and the two-block factorization, through degcap."""
    rep = Report("pbw", {
        "labels": list(datum.labels), "beta": list(beta), "degcap": degcap,
    })
    beta = tuple(beta)
    n = sum(beta)
    lo = min_tau_degree(datum, beta)
    window = (lo, degcap)
    series = _free_dim_series(datum, beta, window)
    genfn = _gen_fn_series(datum, beta, window)
    for d in range(lo, degcap + 1):
        a, b = series.coeffs.get(d, 0), genfn.coeffs.get(d, 0)
        if a != b:
            rep.fail(degree=d, lhs=a, rhs=b,
                     identity="count vs generating function")
            break
    allseqs = set(seqs_of(beta))
    for d in range(lo, degcap + 1):
        total = 0
        for mu in seqs_of(beta):
            total += _free_block_poly(datum, beta, {mu}, allseqs,
                                      (d, d)).coeffs.get(d, 0)
        if total != series.coeffs.get(d, 0):
            rep.fail(degree=d, lhs=total, rhs=series.coeffs.get(d, 0),
                     identity="corner sum")
            break
    if n >= 2:
        npr = n // 2
        shuffles = [w for w in all_perms(n)
                    if all(w[a] < w[a + 1]
                           for a in range(n - 1) if a != npr - 1)]
        maxform = max(datum.form(c, c) for c in range(datum.rank))
        # the scan tops out at degcap plus the largest crossing shift of
        # a shuffle plus the depth the other factor can reach below zero
        hi_cap = degcap + (npr * (n - npr) + n * (n - 1) // 2) * maxform
        # row-truncation dims of the two factors, keyed by left seq
        row_dims = {}

        def rows_of(lam):
            hit = row_dims.get(lam)
            if hit is None:
                part = _content(datum, lam)
                hit = _free_block_poly(
                    datum, part, {lam}, set(seqs_of(part)),
                    (min_tau_degree(datum, part), hi_cap))
                row_dims[lam] = hit
            return hit

        for d in range(lo, degcap + 1):
            total = 0
            for lam in seqs_of(beta):
                lam1, lam2 = lam[:npr], lam[npr:]
                for w in shuffles:
                    tdeg = 0
                    for (a, b) in inversions(w):
                        tdeg -= datum.form(lam[a], lam[b])
                    rem = d - tdeg
                    s1 = rows_of(lam1)
                    s2 = rows_of(lam2)
                    for d1, c1 in s1.coeffs.items():
                        total += c1 * s2.coeffs.get(rem - d1, 0)
            if total != series.coeffs.get(d, 0):
                rep.fail(degree=d, lhs=total, rhs=series.coeffs.get(d, 0),
                         identity="two-block factorization")
                break
    return rep


def check_taug(datum, weight, beta, i, qspec=None):
    """The crossing chain composed with the intertwiner chain acts on
    each column e(i, nu) as the explicit polynomial, modulo the shifted
    denominator."""
    rep = Report("taug", {
        "labels": list(datum.labels), "levels": list(weight.levels),
        "beta": list(beta), "i": int(i),
    })
    bim = Bimodules(datum, weight, beta, i, qspec=qspec)
    for nu in seqs_of(tuple(beta)):
        seq = (i,) + nu
        E = {BasisMonomial((), (0,) * bim.N, seq): Fraction(1)}
        lhs = bim.K1.nf(bim.apply_Q(bim.apply_P(E)))
        rhs = bim.K1.nf(bim.engine.multiply(E, bim.qp_poly(nu)))
        diff = dict(lhs)
        for m, c in rhs.items():
            v = diff.get(m, 0) - c
            if v:
                diff[m] = v
            else:
                diff.pop(m, None)
        if diff:
            rep.fail(nu=list(nu), residual_terms=len(diff))
        else:
            rep.note(nu=list(nu), ok=True)
    return rep


def check_exact(datum, weight, beta, i, qspec=None, window=None):
    """P injective, pi surjective, image of P equals kernel of pi, and
    the graded dimension identity, degree by degree over the window."""
    rep = Report("exact", {
        "labels": list(datum.labels), "levels": list(weight.levels),
        "beta": list(beta), "i": int(i),
    })
    bim = Bimodules(datum, weight, beta, i, qspec=qspec, window=window)
    rep.inputs["window"] = list(bim.window)
    lo, hi = bim.window
    if lo > hi:
        rep.status = "skip"
        rep.note(reason="window empty")
        return rep
    shift = bim.shift_P
    for d in range(lo, hi + 1):
        dim0 = bim.K0.dim_at(d)
        dimf = bim.F.dim_at(d)
        dim1 = bim.K1.dim_at(d - shift)
        if dim0 != dimf + dim1:
            rep.fail(degree=d, lhs=dim0, rhs=dimf + dim1,
                     identity="dim K0 = dim F + shifted dim K1")
            continue
        src = bim.K1.basis(d - shift)
        sb = SubspaceBasis(keyfunc=BasisMonomial.sort_key)
        rank_p = 0
        im_in_ker = True
        for m in src:
            v = bim.K0.nf(bim.apply_P({m: Fraction(1)}))
            if bim.F.nf(v):
                im_in_ker = False
            if sb.add(v):
                rank_p += 1
        if rank_p != len(src):
            rep.fail(degree=d, lhs=rank_p, rhs=len(src),
                     identity="P injective")
            continue
        if not im_in_ker:
            rep.fail(degree=d, identity="pi after P vanishes")
            continue
        sbp = SubspaceBasis(keyfunc=BasisMonomial.sort_key)
        rank_pi = 0
        for m in bim.K0.basis(d):
            if sbp.add(bim.F.nf({m: Fraction(1)})):
                rank_pi += 1
        if rank_pi != dimf:
            rep.fail(degree=d, lhs=rank_pi, rhs=dimf,
                     identity="pi surjective")
            continue
        if rank_p != dim0 - rank_pi:
            rep.fail(degree=d, lhs=rank_p, rhs=dim0 - rank_pi,
                     identity="image of P = kernel of pi")
    if rep.status == "pass":
        rep.note(window=[lo, hi], shift=shift,
                 dims_K0=_poly_str(bim.K0.graded_dim_poly()))
    return rep


def _corner_sum_poly(alg: CycAlgebra, rows, cols) -> LaurentPoly:
    total = LaurentPoly({})
    for mu in sorted(rows):
        for nu in sorted(cols):
            total = total + alg.truncation(mu, nu)
    return total


def _fe_tensor(datum, weight, beta, i, j, qspec=None):
    """The tensor presenting F_j E_i on the quotient at beta.  Returns
    (per-degree dim function, natural support window) or (None, None)
    when a factor vanishes."""
    sub = _sub_beta(beta, i)
    if sub is None:
        return None, None
    mid = CycAlgebra(datum, weight, sub, qspec)
    big = CycAlgebra(datum, weight, _add_beta(sub, j), qspec)
    here = CycAlgebra(datum, weight, tuple(beta), qspec)
    if mid.is_zero() or big.is_zero() or here.is_zero():
        return None, None
    cols = {s + (j,) for s in seqs_of(sub)}
    rows = {s + (i,) for s in seqs_of(sub)}
    M = CycColumnModule(big, cols, lambda e: emb_elt_last(e, j))
    N = CycRowModule(here, rows, lambda e: emb_elt_last(e, i))
    gens = algebra_gens(datum, sub)
    span = (big.dmin + here.dmin, big.dmax + here.dmax)
    return partial(tensor_dim, M, N, gens, dmax_m=big.dmax), span


def _compare_tensor(rep, fe_fn, span, predicted):
    """Compare per-degree tensor dims against a solved prediction over
    the union of the predicted support and the natural span."""
    if predicted.coeffs:
        lo = predicted.valuation() - 1
        hi = predicted.degree() + 1
        if span is not None:
            lo = min(lo, span[0])
            hi = max(hi, span[1])
    elif span is not None:
        lo, hi = span
    else:
        return None
    fe_coeffs = {}
    for d in range(lo, hi + 1):
        lv = fe_fn(d) if fe_fn is not None else 0
        if lv:
            fe_coeffs[d] = lv
        rv = predicted.coeffs.get(d, 0)
        if lv != rv:
            rep.fail(degree=d, lhs=lv, rhs=rv, identity="tensor side")
            return LaurentPoly(fe_coeffs)
    return LaurentPoly(fe_coeffs)


def check_sl2(datum, weight, beta, i, qspec=None):
    """The commutation identity between adding and removing a strand of
    color i on the cyclotomic quotient at beta."""
    rep = Report("sl2", {
        "labels": list(datum.labels), "levels": list(weight.levels),
        "beta": list(beta), "i": int(i),
    })
    beta = tuple(beta)
    d_i = datum.form(i, i)
    a = weight.level(i) - sum(datum.a(i, t) * k for t, k in enumerate(beta))
    rep.inputs["pairing"] = a
    here = CycAlgebra(datum, weight, beta, qspec)
    big = CycAlgebra(datum, weight, _add_beta(beta, i), qspec)
    cols = {s + (i,) for s in seqs_of(beta)}
    ef = _corner_sum_poly(big, cols, cols) if not big.is_zero() else LaurentPoly({})
    base = here.graded_dim_poly() if not here.is_zero() else LaurentPoly({})
    if a >= 0:
        corr = LaurentPoly({k * d_i: 1 for k in range(a)})
        predicted = (ef - corr * base).shift(d_i)
    else:
        corr = LaurentPoly({-(k + 1) * d_i: 1 for k in range(-a)})
        predicted = (ef + corr * base).shift(d_i)
    if predicted.coeffs and min(predicted.coeffs.values()) < 0:
        rep.fail(identity="solved tensor side has negative coefficients",
                 predicted=_poly_str(predicted))
        return rep
    fe_fn, span = _fe_tensor(datum, weight, beta, i, i, qspec)
    fe = _compare_tensor(rep, fe_fn, span, predicted)
    if rep.status == "pass":
        rep.note(pairing=a, ef=_poly_str(ef), base=_poly_str(base),
                 fe=_poly_str(fe) if fe is not None else "[]")
    return rep


def check_mixed(datum, weight, beta, i, j, qspec=None):
    """For distinct colors, the corner of the enlarged quotient matches
    the tensor up to the off-diagonal form twist."""
    rep = Report("mixed", {
        "labels": list(datum.labels), "levels": list(weight.levels),
        "beta": list(beta), "i": int(i), "j": int(j),
    })
    if i == j:
        rep.status = "skip"
        rep.note(reason="colors must differ")
        return rep
    beta = tuple(beta)
    big = CycAlgebra(datum, weight, _add_beta(beta, j), qspec)
    shifted = _sub_beta(_add_beta(beta, j), i)
    if shifted is None or big.is_zero():
        ef = LaurentPoly({})
    else:
        rows = {s + (i,) for s in seqs_of(shifted)}
        cols = {s + (j,) for s in seqs_of(beta)}
        ef = _corner_sum_poly(big, rows, cols)
    predicted = ef.shift(datum.form(i, j))
    fe_fn, span = _fe_tensor(datum, weight, beta, i, j, qspec)
    fe = _compare_tensor(rep, fe_fn, span, predicted)
    if rep.status == "pass":
        rep.note(ef=_poly_str(ef),
                 fe=_poly_str(fe) if fe is not None else "[]")
    return rep


def check_phi(datum, weight, beta, i, kmax=4, qspec=None):
    """The endomorphism coefficients phi_k: both computations agree and
    satisfy vanishing, monicity, the recursion, and the triangular
    start."""
    rep = Report("phi", {
        "labels": list(datum.labels), "levels": list(weight.levels),
        "beta": list(beta), "i": int(i), "kmax": kmax,
    })
    bim = Bimodules(datum, weight, beta, i, qspec=qspec)
    lvl = bim.level_pairing
    ginv = bim.gamma_inverse()
    sub_zero = bim.sub.is_zero()
    rep.inputs["pairing"] = lvl
    unit = {}
    if not sub_zero:
        for m, d in bim._sub_quotient_basis():
            if d == 0 and not m.word and not any(m.exps):
                unit[m] = Fraction(1)
    prev = None
    prev_e = None
    for k in range(kmax + 1):
        phi_a, psi, e_psi = bim.phi_by_chase(k)
        phi_b = bim.phi_by_division(k)
        if phi_a != phi_b:
            rep.fail(k=k, identity="chase vs division")
            return rep
        if not sub_zero:
            if (not phi_a) != (lvl + k < 0):
                rep.fail(k=k, identity="vanishing threshold")
                return rep
            if lvl + k >= 0:
                tops = {m: c / ginv for (jj, m), c in phi_a.items()
                        if jj == lvl + k}
                if tops != unit:
                    rep.fail(k=k, identity="monic leading coefficient")
                    return rep
                if any(jj > lvl + k for (jj, m) in phi_a):
                    rep.fail(k=k, identity="degree bound")
                    return rep
        if prev is not None:
            rec = {(jj + 1, m): c for (jj, m), c in prev.items()}
            for m, c in prev_e.items():
                rec[(0, m)] = rec.get((0, m), 0) + c
            if {km: c for km, c in rec.items() if c} != phi_a:
                rep.fail(k=k, identity="recursion")
                return rep
        if not sub_zero and lvl < 0:
            if k == -lvl - 1:
                if e_psi != {m: ginv for m in unit}:
                    rep.fail(k=k, identity="triangular unit")
                    return rep
            elif k < -lvl - 1 and e_psi:
                rep.fail(k=k, identity="triangular vanishing")
                return rep
        rep.note(k=k, terms=len(phi_a))
        prev, prev_e = phi_a, e_psi
    return rep


def check_convolution(datum, beta, i, j, degcap=6, qspec=None):
    """Free strand algebra convolution identities through degcap."""
    rep = Report("convolution", {
        "labels": list(datum.labels), "beta": list(beta),
        "i": int(i), "j": int(j), "degcap": degcap,
    })
    beta = tuple(beta)
    d_i = datum.form(i, i)
    sub = _sub_beta(beta, i)
    big = _add_beta(beta, j)
    lo = min_tau_degree(datum, big)
    window = (lo, degcap)
    shifted = _sub_beta(big, i)
    cols = {s + (j,) for s in seqs_of(beta)}
    if shifted is None:
        corner = LaurentPoly({})
    else:
        rows = {s + (i,) for s in seqs_of(shifted)}
        corner = _free_block_poly(datum, big, rows, cols, window, qspec)
    # the tensor side is compared after a degree shift, so compute it
    # one shift past the window at both ends
    pad = max(d_i, -datum.form(i, j))
    if sub is None:
        fe = LaurentPoly({})
    else:
        M = FreeColumnModule(datum, _add_beta(sub, j),
                             {s + (j,) for s in seqs_of(sub)},
                             lambda e: emb_elt_last(e, j), qspec)
        N = FreeRowModule(datum, beta, {s + (i,) for s in seqs_of(sub)},
                          lambda e: emb_elt_last(e, i), qspec)
        gens = algebra_gens(datum, sub, qspec)
        coeffs = {}
        for d in range(window[0] - pad, degcap + pad + 1):
            k = tensor_dim(M, N, gens, d)
            if k:
                coeffs[d] = k
        fe = LaurentPoly(coeffs)
    if i != j:
        predicted = fe.shift(-datum.form(i, j))
        for d in range(window[0], window[1] + 1):
            lv = corner.coeffs.get(d, 0)
            rv = predicted.coeffs.get(d, 0)
            if lv != rv:
                rep.fail(degree=d, lhs=lv, rhs=rv, identity="distinct colors")
                return rep
        rep.note(corner=_poly_str(corner), fe=_poly_str(fe))
        return rep
    base = _free_dim_series(datum, beta, (min_tau_degree(datum, beta), degcap))
    if base.coeffs:
        span = (degcap - base.valuation()) // d_i + 2
        tower = LaurentPoly({k * d_i: 1 for k in range(span)})
    else:
        tower = LaurentPoly({})
    rhs = fe.shift(-d_i) + base * tower
    for d in range(window[0], window[1] + 1):
        lv = corner.coeffs.get(d, 0)
        rv = rhs.coeffs.get(d, 0)
        if lv != rv:
            rep.fail(degree=d, lhs=lv, rhs=rv, identity="equal colors")
            return rep
    # shifted variant: columns start with i, the tower carries the
    # form twist of the added strand against beta
    rows2 = {s + (i,) for s in seqs_of(beta)}
    cols2 = {(i,) + s for s in seqs_of(beta)}
    corner2 = _free_block_poly(datum, big, rows2, cols2, window, qspec)
    if sub is None:
        fe2 = LaurentPoly({})
    else:
        M2 = FreeColumnModule(datum, beta, {(i,) + s for s in seqs_of(sub)},
                              lambda e: emb_elt_first(e, i), qspec)
        N2 = FreeRowModule(datum, beta, {s + (i,) for s in seqs_of(sub)},
                           lambda e: emb_elt_last(e, i), qspec)
        gens = algebra_gens(datum, sub, qspec)
        coeffs = {}
        for d in range(window[0], window[1] + 1):
            k = tensor_dim(M2, N2, gens, d)
            if k:
                coeffs[d] = k
        fe2 = LaurentPoly(coeffs)
    unit_i = tuple(1 if t == i else 0 for t in range(datum.rank))
    twist = -datum.form_beta(unit_i, beta)
    # the twisted tower drags the base series above the cap
    ext = max(0, -twist)
    base2 = _free_dim_series(datum, beta,
                             (min_tau_degree(datum, beta), degcap + ext))
    span2 = (degcap + ext - base2.valuation()) // d_i + 2 if base2.coeffs else 0
    tower2 = LaurentPoly({k * d_i: 1 for k in range(span2)})
    rhs2 = fe2 + base2 * tower2.shift(twist)
    for d in range(window[0], window[1] + 1):
        lv = corner2.coeffs.get(d, 0)
        rv = rhs2.coeffs.get(d, 0)
        if lv != rv:
            rep.fail(degree=d, lhs=lv, rhs=rv, identity="shifted tower")
            return rep
    rep.note(corner=_poly_str(corner), fe=_poly_str(fe),
             corner_shifted=_poly_str(corner2), fe_shifted=_poly_str(fe2))
    return rep


def check_categorification(datum, weight, nmax, qspec=None, simple_cap=3):
    """Corner dims of every quotient against the module-side pairing
    values, simple counts against weight multiplicities, and the
    ungraded commutator count, over all beta with at most nmax strands."""
    rep = Report("categorification", {
        "labels": list(datum.labels), "levels": list(weight.levels),
        "nmax": int(nmax),
    })
    mod = UqModule(datum, weight)
    for beta in _betas_upto(datum.rank, nmax):
        alg = CycAlgebra(datum, weight, beta, qspec)
        zero = alg.is_zero()
        for mu in seqs_of(beta):
            for nu in seqs_of(beta):
                want = mod.predicted_dim(beta, mu, nu)
                got = alg.truncation(mu, nu) if not zero else LaurentPoly({})
                if got != want:
                    rep.fail(beta=list(beta), mu=list(mu), nu=list(nu),
                             lhs=_poly_str(got), rhs=_poly_str(want),
                             identity="corner dims")
        if sum(beta) <= simple_cap:
            sc = count_simples(alg)
            gram_rank = mod.weight_dim(beta)
            if sc.split:
                if sc.count != gram_rank:
                    rep.fail(beta=list(beta), lhs=sc.count, rhs=gram_rank,
                             identity="simple count vs gram rank")
                else:
                    rep.note(beta=list(beta), simples=sc.count, split=True)
            else:
                rep.note(beta=list(beta), simples=sc.count, split=False,
                         unconfirmed=True)
        base = alg.graded_dim_poly() if not zero else LaurentPoly({})
        for i in range(datum.rank):
            a = weight.level(i) - sum(datum.a(i, t) * k
                                      for t, k in enumerate(beta))
            big = CycAlgebra(datum, weight, _add_beta(beta, i), qspec)
            cols = {s + (i,) for s in seqs_of(beta)}
            ef = (_corner_sum_poly(big, cols, cols)
                  if not big.is_zero() else LaurentPoly({}))
            d_i = datum.form(i, i)
            if a >= 0:
                corr = LaurentPoly({k * d_i: 1 for k in range(a)})
                predicted = (ef - corr * base).shift(d_i)
            else:
                corr = LaurentPoly({-(k + 1) * d_i: 1 for k in range(-a)})
                predicted = (ef + corr * base).shift(d_i)
            fe_fn, span = _fe_tensor(datum, weight, beta, i, i, qspec)
            fe_at_one = 0
            if fe_fn is not None and span is not None:
                lo, hi = span
                if predicted.coeffs:
                    lo = min(lo, predicted.valuation())
                    hi = max(hi, predicted.degree())
                for d in range(lo, hi + 1):
                    fe_at_one += fe_fn(d)
            if ef.at_one() - fe_at_one != a * base.at_one():
                rep.fail(beta=list(beta), i=i,
                         lhs=ef.at_one() - fe_at_one, rhs=a * base.at_one(),
                         identity="ungraded commutator")
    return rep


def _betas_upto(rank, nmax):
    out = []

    def rec(pos, rem, acc):
        if pos == rank:
            if rem == 0:
                out.append(tuple(acc))
            return
        for k in range(rem + 1):
            acc.append(k)
            rec(pos + 1, rem - k, acc)
            acc.pop()

    for total in range(nmax + 1):
        rec(0, total, [])
    return out


# ---------------------------------------------------------------------
# prepared instance lists: the small-rank desk each named check runs on

def build_a1():
    return build_cartan(["0"], [[2]])


def build_a2():
    return build_cartan(["1", "2"], [[2, -1], [-1, 2]])


def build_a1aff():
    return build_cartan(["0", "1"], [[2, -2], [-2, 2]])


def _desk():
    return build_a1(), build_a2(), build_a1aff()


def _pbw_thunks(degcap=10):
    A1, A2, AFF = _desk()
    out = []
    for datum, nmax in ((A1, 3), (A2, 3), (AFF, 3)):
        for b in _betas_upto(datum.rank, nmax):
            if sum(b):
                out.append(partial(check_pbw, datum, b, degcap=degcap))
    return out


def _taug_thunks():
    A1, A2, _ = _desk()
    out = []
    for lvl in (1, 2):
        for b in _betas_upto(1, 2):
            out.append(partial(check_taug, A1, Weight((lvl,)), b, 0))
    for b in _betas_upto(2, 2):
        for i in range(2):
            out.append(partial(check_taug, A2, Weight((1, 0)), b, i))
    return out


def _exact_thunks():
    A1, A2, _ = _desk()
    out = []
    for lvl in (1, 2):
        for b in _betas_upto(1, 2):
            out.append(partial(check_exact, A1, Weight((lvl,)), b, 0))
    for b in _betas_upto(2, 2):
        for i in range(2):
            out.append(partial(check_exact, A2, Weight((1, 0)), b, i))
    return out


def _sl2_thunks():
    A1, A2, AFF = _desk()
    out = []
    for lvl in (1, 2, 3):
        for b in _betas_upto(1, 3):
            out.append(partial(check_sl2, A1, Weight((lvl,)), b, 0))
    for wt in (Weight((1, 0)), Weight((1, 1))):
        for b in _betas_upto(2, 3):
            for i in range(2):
                out.append(partial(check_sl2, A2, wt, b, i))
    for b in _betas_upto(2, 2):
        for i in range(2):
            out.append(partial(check_sl2, AFF, Weight((1, 0)), b, i))
    return out


def _mixed_thunks():
    _, A2, AFF = _desk()
    out = []
    for wt in (Weight((1, 0)), Weight((1, 1))):
        for b in _betas_upto(2, 2):
            for (i, j) in ((0, 1), (1, 0)):
                out.append(partial(check_mixed, A2, wt, b, i, j))
    for b in _betas_upto(2, 2):
        for (i, j) in ((0, 1), (1, 0)):
            out.append(partial(check_mixed, AFF, Weight((1, 0)), b, i, j))
    return out


def _phi_thunks(kmax=4):
    A1, A2, AFF = _desk()
    out = []
    for lvl in (1, 2, 3):
        for b in _betas_upto(1, 2):
            out.append(partial(check_phi, A1, Weight((lvl,)), b, 0, kmax=kmax))
    for wt in (Weight((1, 0)), Weight((1, 1))):
        for b in _betas_upto(2, 2):
            for i in range(2):
                out.append(partial(check_phi, A2, wt, b, i, kmax=kmax))
    for b in _betas_upto(2, 1):
        for i in range(2):
            out.append(partial(check_phi, AFF, Weight((1, 0)), b, i, kmax=kmax))
    return out


def _convolution_thunks(degcap=6):
    A1, A2, _ = _desk()
    out = []
    for b in _betas_upto(1, 2):
        out.append(partial(check_convolution, A1, b, 0, 0, degcap=degcap))
    for b in _betas_upto(2, 2):
        for (i, j) in ((0, 0), (0, 1), (1, 0), (1, 1)):
            out.append(partial(check_convolution, A2, b, i, j, degcap=degcap))
    return out


def _categorification_thunks():
    A1, A2, AFF = _desk()
    return [
        partial(check_categorification, A1, Weight((1,)), 3),
        partial(check_categorification, A1, Weight((2,)), 3),
        partial(check_categorification, A2, Weight((1, 0)), 3),
        partial(check_categorification, AFF, Weight((1, 0)), 2),
    ]


CHECKS = {
    "categorification": _categorification_thunks,
    "convolution": _convolution_thunks,
    "exact": _exact_thunks,
    "mixed": _mixed_thunks,
    "pbw": _pbw_thunks,
    "phi": _phi_thunks,
    "sl2": _sl2_thunks,
    "taug": _taug_thunks,
}


def run_check(name) -> list:
    maker = CHECKS.get(name)
    if maker is None:
        raise KeyError(f"unknown check: {name}")
    reports = []
    for thunk in maker():
        t0 = time.perf_counter()
        rep = thunk()
        rep.elapsed_ms = (time.perf_counter() - t0) * 1000.0
        reports.append(rep)
    return reports


def run_all(names=None) -> list:
    reports = []
    for name in sorted(CHECKS if names is None else names):
        reports.extend(run_check(name))
    return reports
