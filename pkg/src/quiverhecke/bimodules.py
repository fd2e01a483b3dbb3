"""Induction and restriction bimodules over a cyclotomic quotient.

The three left modules built here live inside the strand algebra on one
extra strand: column spaces R(beta+alpha_i)e(...) modulo a one-sided
denominator span.  K0 uses the columns ending in the added color i and
the denominator generated through the first-strands embedding; K1 uses
the columns starting with i and the shifted embedding; F is K0 modulo
the full cyclotomic ideal, hence finite.

The denominators are IdealSpace instances over restricted chain
families; that the restricted family spans the intended one-sided ideal
follows from the coset decomposition of the embedded subalgebra, which
the test suite checks bilinearly on small cases.

On top of the modules sit the comparison maps P, pi, Q, the
t-multiplications, and the phi endomorphism coefficients computed two
independent ways (a linear solve against the direct-sum decomposition
of e(beta, i)K0, and a monic polynomial division).
"""

from __future__ import annotations

from fractions import Fraction

from .cartan import CartanDatum, Weight
from .cyclotomic import CycAlgebra, IdealSpace, degree_cap, get_ideal_space
from .klr import BasisMonomial, basis_monomials, get_engine, seqs_of
from .laurent import LaurentPoly
from .linalg import SubspaceBasis
from .perms import all_perms, apply_word, inversions
from .qpolys import QSpec

__all__ = [
    "Bimodules",
    "ColumnQuotient",
    "build_bimodules",
    "emb_first",
    "emb_last",
    "first_strand_chains",
    "shifted_strand_chains",
    "default_window",
]


def emb_last(m: BasisMonomial, color: int) -> BasisMonomial:
    """Embed a monomial by adding an untouched strand of `color` on the
    right; crossings and exponents keep their positions."""
    return BasisMonomial(m.word, m.exps + (0,), m.seq + (color,))


def emb_first(m: BasisMonomial, color: int) -> BasisMonomial:
    """Embed by adding an untouched strand of `color` on the left; all
    positions shift up by one."""
    return BasisMonomial(
        tuple(k + 1 for k in m.word), (0,) + m.exps, (color,) + m.seq
    )


def emb_elt_last(E: dict, color: int) -> dict:
    return {emb_last(m, color): c for m, c in E.items()}


def emb_elt_first(E: dict, color: int) -> dict:
    return {emb_first(m, color): c for m, c in E.items()}


def first_strand_chains(N: int):
    """Denominator family for K0: x at position 0, chain words
    tau_0...tau_{a-1} for a < N - 1 (the longest chain is omitted)."""
    return tuple((0, tuple(range(a))) for a in range(N - 1))


def shifted_strand_chains(N: int):
    """Denominator family for K1: x at position 1, chain words
    tau_1...tau_a for a < N - 1."""
    return tuple((1, tuple(range(1, a + 1))) for a in range(N - 1))


def min_tau_degree(datum, beta) -> int:
    """Least crossing degree over all monomials of R(beta); a lower
    bound for every column space considered here."""
    n = sum(beta)
    best = 0
    for seq in seqs_of(beta):
        for w in all_perms(n):
            deg = 0
            for (a, b) in inversions(w):
                deg -= datum.form(seq[a], seq[b])
            best = min(best, deg)
    return best


def default_window(datum, weight, beta_hat, qspec=None):
    """Degree window for bimodule comparisons: from the least crossing
    degree up to the quotient bound on beta_hat plus one extra
    polynomial step."""
    pad = 2 * max(datum.form(i, i) for i in range(datum.rank))
    top = degree_cap(datum, weight, beta_hat, qspec)[1] + pad
    return (min_tau_degree(datum, beta_hat), top)


class ColumnQuotient:
    """Left module R(beta_hat) e(S) / denominator, handled per degree.

    S is a tuple of right color sequences; the denominator is an
    IdealSpace over beta_hat (an empty chain family makes the module the
    free column space).  Basis elements are the non-pivot basis
    monomials of each (left seq, right seq, degree) block.
    """

    def __init__(self, engine, beta_hat, right_seqs, denom: IdealSpace, window):
        self.engine = engine
        self.beta_hat = tuple(beta_hat)
        self.right_seqs = tuple(right_seqs)
        self.denom = denom
        self.window = window
        self.left_seqs = seqs_of(self.beta_hat)
        self._basis = {}

    def basis(self, d):
        hit = self._basis.get(d)
        if hit is not None:
            return hit
        out = []
        for mu in self.right_seqs:
            for lam in self.left_seqs:
                cols, sb = self.denom.block(lam, mu, d)
                pivots = set(sb.pivot_columns())
                out.extend(m for m in cols if m not in pivots)
        out.sort(key=BasisMonomial.sort_key)
        self._basis[d] = out
        return out

    def dim_at(self, d) -> int:
        return len(self.basis(d))

    def graded_dim_poly(self) -> LaurentPoly:
        coeffs = {}
        for d in range(self.window[0], self.window[1] + 1):
            k = self.dim_at(d)
            if k:
                coeffs[d] = k
        return LaurentPoly(coeffs)

    def nf(self, E: dict) -> dict:
        return self.denom.reduce(E)

    def contains(self, E: dict) -> bool:
        return not self.nf(E)


class Bimodules:
    """The modules K0, K1, F for one (weight, beta, i) and their maps.

    Raw map methods return ambient strand algebra elements; callers
    normalize with the target module's nf.
    """

    def __init__(self, datum: CartanDatum, weight: Weight, beta, i: int,
                 qspec: QSpec = None, window=None):
        if qspec is None:
            qspec = QSpec.standard(datum)
        self.datum = datum
        self.weight = weight
        self.beta = tuple(beta)
        self.i = i
        bh = list(self.beta)
        bh[i] += 1
        self.beta_hat = tuple(bh)
        self.n = sum(self.beta)
        self.N = self.n + 1
        self.qspec = qspec
        self.engine = get_engine(datum, self.N, qspec)
        self.sub_engine = get_engine(datum, self.n, qspec)
        if window is None:
            window = default_window(datum, weight, self.beta_hat, qspec)
        self.window = window
        cols0 = tuple(s + (i,) for s in seqs_of(self.beta))
        cols1 = tuple((i,) + s for s in seqs_of(self.beta))
        eng = self.engine
        self.D0 = IdealSpace(eng, weight, self.beta_hat,
                             chains=first_strand_chains(self.N))
        self.D1 = IdealSpace(eng, weight, self.beta_hat,
                             chains=shifted_strand_chains(self.N))
        self.Dfull = get_ideal_space(datum, weight, self.beta_hat, qspec)
        self.K0 = ColumnQuotient(eng, self.beta_hat, cols0, self.D0, window)
        self.K1 = ColumnQuotient(eng, self.beta_hat, cols1, self.D1, window)
        self.F = ColumnQuotient(eng, self.beta_hat, cols0, self.Dfull, window)
        self.sub = CycAlgebra(datum, weight, self.beta, qspec)
        self._g_cache = {}

    # ---- degree shifts ----------------------------------------------

    @property
    def shift_P(self) -> int:
        """(alpha_i | 2 Lambda - beta)."""
        unit = tuple(1 if j == self.i else 0 for j in range(self.datum.rank))
        return 2 * self.weight.pair_beta(self.datum, unit) - self.datum.form_beta(
            unit, self.beta
        )

    @property
    def level_pairing(self) -> int:
        """<h_i, Lambda - beta>."""
        return self.weight.level(self.i) - sum(
            self.datum.a(self.i, j) * k for j, k in enumerate(self.beta)
        )

    # ---- raw maps ---------------------------------------------------

    def apply_P(self, E: dict) -> dict:
        """Right multiplication by x_0^level tau_0 ... tau_{n-1}; sends
        K1 columns to K0 columns."""
        eng = self.engine
        E = eng.right_mult_x(E, 0, self.weight.level(self.i))
        return eng.right_mult_word(E, tuple(range(self.n)))

    def apply_Q(self, E: dict) -> dict:
        """Right multiplication by g_{n-1} ... g_0; sends K0 columns to
        K1 columns."""
        eng = self.engine
        for a in range(self.n - 1, -1, -1):
            g = self._g_cache.get(a)
            if g is None:
                g = eng.intertwiner_g_all(a, seqs_of(self.beta_hat))
                self._g_cache[a] = g
            E = eng.multiply(E, g)
        return E

    def apply_t_K0(self, E: dict) -> dict:
        return self.engine.right_mult_x(E, self.N - 1)

    def apply_t_K1(self, E: dict) -> dict:
        return self.engine.right_mult_x(E, 0)

    def act_K0(self, E: dict, sub_elt: dict) -> dict:
        """Right action of R(beta) through the first-strands embedding."""
        return self.engine.multiply(E, emb_elt_last(sub_elt, self.i))

    def act_K1(self, E: dict, sub_elt: dict) -> dict:
        """Right action of R(beta) through the shifted embedding."""
        return self.engine.multiply(E, emb_elt_first(sub_elt, self.i))

    # ---- composite multipliers --------------------------------------

    def qp_poly(self, nu) -> dict:
        """The polynomial x_0^level * prod over positions a with
        nu_a != i of Q_{i, nu_a}(x_0, x_{a+1}), cut to e(i, nu); right
        multiplication by it equals Q after P on that column."""
        i = self.i
        base = [0] * self.N
        base[0] = self.weight.level(i)
        terms = [(tuple(base), Fraction(1))]
        for a, c in enumerate(nu):
            if c == i:
                continue
            new = []
            for (p, q, t) in self.qspec.terms(i, c):
                for exps, coeff in terms:
                    e = list(exps)
                    e[0] += p
                    e[a + 1] += q
                    new.append((tuple(e), coeff * t))
            terms = new
        out = {}
        seq = (i,) + tuple(nu)
        for exps, coeff in terms:
            m = BasisMonomial((), exps, seq)
            out[m] = out.get(m, 0) + coeff
        return {m: c for m, c in out.items() if c}

    def pq_poly(self) -> dict:
        """Sum over nu of x_n^level * prod over a with nu_a != i of
        Q_{nu_a, i}(x_a, x_n), cut to e(nu, i); right multiplication by
        it equals P after Q on K0."""
        i = self.i
        out = {}
        for nu in seqs_of(self.beta):
            base = [0] * self.N
            base[self.N - 1] = self.weight.level(i)
            terms = [(tuple(base), Fraction(1))]
            for a, c in enumerate(nu):
                if c == i:
                    continue
                new = []
                for (p, q, t) in self.qspec.terms(c, i):
                    for exps, coeff in terms:
                        e = list(exps)
                        e[a] += p
                        e[self.N - 1] += q
                        new.append((tuple(e), coeff * t))
                terms = new
            seq = tuple(nu) + (i,)
            for exps, coeff in terms:
                m = BasisMonomial((), exps, seq)
                out[m] = out.get(m, 0) + coeff
        return {m: c for m, c in out.items() if c}

    # ---- phi machinery ----------------------------------------------

    def gamma_inverse(self) -> Fraction:
        """The unit gamma^-1 = (-1)^p * product over other colors of the
        extreme Q coefficient, p the multiplicity of i in beta."""
        p = self.beta[self.i]
        val = Fraction(-1) ** p
        for j, k in enumerate(self.beta):
            if j == self.i or not k:
                continue
            val *= self.qspec.unit_coeff(self.i, j) ** k
        return val

    def u_element(self, k: int) -> dict:
        """tau_{n-1}...tau_0 x_0^k e(i, beta) pushed through P: the
        element whose decomposition coefficients define phi_k."""
        eng = self.engine
        total = {}
        word = tuple(range(self.n - 1, -1, -1))
        for nu in seqs_of(self.beta):
            E = eng.eval_word(word, (self.i,) + nu)
            E = eng.right_mult_x(E, 0, k)
            for m, c in self.apply_P(E).items():
                total[m] = total.get(m, 0) + c
        return {m: c for m, c in total.items() if c}

    def _sub_quotient_basis(self):
        """Quotient basis monomials of R^Lambda(beta) with their degrees."""
        out = []
        if self.sub.is_zero():
            return out
        for d in range(self.sub.dmin, self.sub.dmax + 1):
            for m in self.sub.quotient_basis(d):
                out.append((m, d))
        return out

    def phi_by_chase(self, k: int):
        """Decompose u_k against the direct sum image(tensor part) +
        polynomial part inside e(beta, i)K0.

        Returns (phi, psi, e_psi): phi is {(j, monomial): coeff} over
        t-power j and quotient basis monomials of R^Lambda(beta); psi is
        a list of (a, b, coeff) with a free and b a quotient monomial;
        e_psi is the element sum coeff * nf(a b) of R^Lambda(beta).
        """
        eng = self.engine
        i = self.i
        u = self.K0.nf(self.u_element(k))
        if not u:
            degs = set()
        else:
            degs = {eng.monomial_degree(m) for m in u}
            if len(degs) > 1:
                raise AssertionError("inhomogeneous decomposition target")
        if not u:
            # still need the degree to search for a zero decomposition:
            # an empty element decomposes with all coefficients zero
            return {}, [], {}
        D = degs.pop()
        d_ii = self.datum.form(i, i)
        qbasis = self._sub_quotient_basis()
        sb = SubspaceBasis(keyfunc=BasisMonomial.sort_key, track=True)
        tags = []
        # polynomial family: emb(q) x_last^j
        for (q, dq) in qbasis:
            rem = D - dq
            if rem < 0 or rem % d_ii:
                continue
            j = rem // d_ii
            m = emb_last(q, i)
            exps = list(m.exps)
            exps[self.N - 1] += j
            cls = self.K0.nf({BasisMonomial(m.word, tuple(exps), m.seq): Fraction(1)})
            sb.add(cls)
            tags.append(("t", j, q))
        # tensor family: emb(a) tau_{n-1} emb(b), crossing on two i strands
        for (b, db) in qbasis:
            left = apply_word(b.word, b.seq) if b.word else b.seq
            if not left or left[-1] != i:
                continue
            da = D - db + d_ii
            for a in basis_monomials(self.datum, self.beta, da):
                if a.seq[-1] != i:
                    continue
                E = eng.right_mult_tau({emb_last(a, i): Fraction(1)}, self.n - 1)
                E = eng.multiply(E, {emb_last(b, i): Fraction(1)})
                cls = self.K0.nf(E)
                sb.add(cls)
                tags.append(("F", a, b))
        coords = sb.coords_in_gens(u)
        if coords is None:
            raise AssertionError("decomposition families failed to span u_k")
        phi = {}
        psi = []
        for idx, c in coords.items():
            tag = tags[idx]
            if tag[0] == "t":
                phi[(tag[1], tag[2])] = phi.get((tag[1], tag[2]), 0) + c
            else:
                psi.append((tag[1], tag[2], c))
        phi = {key: c for key, c in phi.items() if c}
        e_psi = {}
        for (a, b, c) in psi:
            prod = self.sub_engine.multiply({a: Fraction(1)}, {b: Fraction(1)})
            for m, cc in self.sub.nf(prod).items():
                e_psi[m] = e_psi.get(m, 0) + c * cc
        e_psi = {m: c for m, c in e_psi.items() if c}
        return phi, psi, e_psi

    # -- the division route -------------------------------------------

    def _tpoly_f(self):
        """F = gamma (-1)^p t^level prod Q_{i, nu_a}(t, x_a) summed over
        nu, as {t power: element of R^Lambda(beta)}; monic of degree
        <h_i, lambda> + 2p."""
        i = self.i
        p = self.beta[i]
        pref = Fraction(-1) ** p / self.gamma_inverse()
        out = {}
        for nu in seqs_of(self.beta):
            terms = [({}, 0, Fraction(1))]  # (x exponents, t power, coeff)
            for a, c in enumerate(nu):
                if c == i:
                    continue
                new = []
                for (tp, xq, t) in self.qspec.terms(i, c):
                    for exps, jt, coeff in terms:
                        e = dict(exps)
                        if xq:
                            e[a] = e.get(a, 0) + xq
                        new.append((e, jt + tp, coeff * t))
                terms = new
            for exps, jt, coeff in terms:
                j = jt + self.weight.level(i)
                ev = [0] * self.n
                for pos, val in exps.items():
                    ev[pos] = val
                m = BasisMonomial((), tuple(ev), nu)
                slot = out.setdefault(j, {})
                slot[m] = slot.get(m, 0) + coeff * pref
        cleaned = {}
        for j, slot in out.items():
            red = self.sub.nf({m: c for m, c in slot.items() if c})
            if red:
                cleaned[j] = red
        return cleaned

    def _tpoly_s(self):
        """S = sum over nu of prod over a with nu_a = i of (t - x_a)^2
        e(nu): the monic central annihilator denominator."""
        i = self.i
        out = {}
        for nu in seqs_of(self.beta):
            terms = [({}, 0, Fraction(1))]
            for a, c in enumerate(nu):
                if c != i:
                    continue
                new = []
                # (t - x_a)^2 = t^2 - 2 t x_a + x_a^2
                for (dx, dt, cf) in ((0, 2, Fraction(1)), (1, 1, Fraction(-2)), (2, 0, Fraction(1))):
                    for exps, jt, coeff in terms:
                        e = dict(exps)
                        if dx:
                            e[a] = e.get(a, 0) + dx
                        new.append((e, jt + dt, coeff * cf))
                terms = new
            for exps, jt, coeff in terms:
                ev = [0] * self.n
                for pos, val in exps.items():
                    ev[pos] = val
                m = BasisMonomial((), tuple(ev), nu)
                slot = out.setdefault(jt, {})
                slot[m] = slot.get(m, 0) + coeff
        cleaned = {}
        for j, slot in out.items():
            red = self.sub.nf({m: c for m, c in slot.items() if c})
            if red:
                cleaned[j] = red
        return cleaned

    def phi_by_division(self, k: int):
        """phi_k as gamma^-1 times the quotient of t^k F by the monic S,
        flattened to {(t power, monomial): coeff}."""
        F = self._tpoly_f()
        S = self._tpoly_s()
        sdeg = 2 * self.beta[self.i]
        num = {j + k: dict(slot) for j, slot in F.items()}
        quo = {}
        while num:
            top = max(num)
            if top < sdeg:
                break
            lead = num.pop(top)
            jq = top - sdeg
            slot = quo.setdefault(jq, {})
            for m, c in lead.items():
                slot[m] = slot.get(m, 0) + c
            for js, selt in S.items():
                if js == sdeg:
                    # S is monic: the top coefficient is the identity
                    continue
                prod = {}
                for ms, cs in selt.items():
                    for m, c in self.sub.nf(
                        self.sub_engine.multiply({ms: cs}, lead)
                    ).items():
                        prod[m] = prod.get(m, 0) + c
                if not prod:
                    continue
                tgt = num.setdefault(jq + js, {})
                for m, c in prod.items():
                    v = tgt.get(m, 0) - c
                    if v:
                        tgt[m] = v
                    else:
                        tgt.pop(m, None)
                if not tgt:
                    num.pop(jq + js, None)
            num = {j: s for j, s in num.items() if s}
        ginv = self.gamma_inverse()
        flat = {}
        for j, slot in quo.items():
            for m, c in slot.items():
                val = c * ginv
                if val:
                    flat[(j, m)] = val
        return flat


def build_bimodules(datum, weight, beta, i, qspec=None, window=None) -> Bimodules:
    return Bimodules(datum, weight, beta, i, qspec=qspec, window=window)
