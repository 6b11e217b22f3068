"""
The minuscule semicuspidal algebra C_delta.

C_delta is presented abstractly as a quotient of the rank-delta KLR algebra,
but everything here is computed through its explicit faithful module V: the
component at a word pair (i, j) in G^delta x G^delta is k[z,x]/(x^2) when the
last letters agree, a degree-shifted k[z,x]/(x) when they are adjacent, and
zero otherwise, with the generator action

    1_k . f = [k = i] f,
    y_r . f = (z - [r = d] x) f,
    psi_r . f = f at s_r i (admissible), f at s_{d-1} i (r = d-1, i_d = j_d),
                eps_{i_d, j_d} x f at s_{d-1} i (r = d-1, i_{d-1} = j_d), 0 else.

In type A_1^(1) every psi acts as zero.

Basis elements of C_delta 1_{b^k} are (b, m, target word j): the element
y_1^b (y_1 - y_d)^m psi_w 1_{b^k} where w is the unique connecting
permutation j <- b^k; the constraint m + deg(psi_w) <= 1 holds.  A basis
element is recovered from its V-image at the vector 1_{(b^k, b^k)} by reading
off component words and monomials, which is how products are expanded.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .cuspwords import CuspWordData, admissible, apply_sr
from .rootdata import AffineType, SignTable, Word, build_sign_table
from .scalars import matrix_rank, QQ

# V vectors: {(i_word, j_word): {(zb, xm): coeff}}
VVec = dict[tuple[Word, Word], dict[tuple[int, int], int]]

# generators: ("idem", word) | ("y", r) | ("psi", r)
Gen = tuple[str, object]


@dataclass(frozen=True)
class CdBasisElem:
    """y_1^b (y_1-y_d)^m psi_w 1_{b^source}; target = w . b^source."""

    b: int
    m: int
    target: Word
    source: int  # finite vertex k: the element lies in C_delta 1_{b^k}
    psi_degree: int

    @property
    def degree(self) -> int:
        return 2 * self.b + 2 * self.m + self.psi_degree


class CDelta:
    """Arithmetic in C_delta over the integers, through the module V."""

    def __init__(self, t: AffineType, signs: SignTable | None = None,
                 words: CuspWordData | None = None):
        self.type = t
        self.signs = signs or build_sign_table(t)
        self.words = words or CuspWordData(t)
        self.d = self.words.d
        self.is_a1 = t.family == "A" and t.rank == 1
        self._psi_cache: dict[tuple[int, "CdBasisElem"], dict] = {}
        # connecting permutation words, keyed by (target, source vertex)
        self._conn: dict[tuple[Word, int], tuple[int, ...]] = {}

    # -- module V -------------------------------------------------------------

    def component_kind(self, i: Word, j: Word) -> int:
        """2 for k[z,x]/(x^2), 1 for k[z,x]/(x), 0 for the zero component."""
        if not (self.words.in_gdelta(i) and self.words.in_gdelta(j)):
            return 0
        if i[-1] == j[-1]:
            return 2
        return 1 if self.type.cartan(i[-1], j[-1]) == -1 else 0

    def _reduce_component(self, kind: int, poly: dict[tuple[int, int], int]) -> dict:
        out = {}
        for (zb, xm), c in poly.items():
            if c == 0 or xm >= kind:
                continue
            out[(zb, xm)] = out.get((zb, xm), 0) + c
        return {k: v for k, v in out.items() if v}

    def v_zero(self) -> VVec:
        return {}

    def v_add(self, a: VVec, b: VVec, scale: int = 1) -> VVec:
        out = {k: dict(v) for k, v in a.items()}
        for key, poly in b.items():
            tgt = out.setdefault(key, {})
            for mk, c in poly.items():
                tgt[mk] = tgt.get(mk, 0) + scale * c
                if tgt[mk] == 0:
                    del tgt[mk]
            if not tgt:
                del out[key]
        return out

    def v_equal(self, a: VVec, b: VVec) -> bool:
        return self.v_add(a, b, -1) == {}

    def v_gen_vector(self, k: int) -> VVec:
        bw = self.words.b_words[k]
        return {(bw, bw): {(0, 0): 1}}

    def v_action(self, gen: Gen, vec: VVec) -> VVec:
        kind, arg = gen
        out: VVec = {}

        def bump(i, j, poly, mult=None, scale=1):
            ck = self.component_kind(i, j)
            if ck == 0:
                return
            target = out.setdefault((i, j), {})
            for (zb, xm), c in poly.items():
                nb, nm = zb, xm
                if mult == "z":
                    nb += 1
                elif mult == "x":
                    nm += 1
                if nm >= ck:
                    continue
                target[(nb, nm)] = target.get((nb, nm), 0) + scale * c
                if target[(nb, nm)] == 0:
                    del target[(nb, nm)]
            if not out[(i, j)]:
                del out[(i, j)]

        if kind == "idem":
            for (i, j), poly in vec.items():
                if i == arg:
                    bump(i, j, poly)
            return out
        if kind == "y":
            r = arg
            for (i, j), poly in vec.items():
                bump(i, j, poly, mult="z")
                if r == self.d:
                    bump(i, j, poly, mult="x", scale=-1)
            return out
        assert kind == "psi"
        r = arg
        if self.is_a1:
            return {}
        for (i, j), poly in vec.items():
            if admissible(self.type, i, r):
                bump(apply_sr(i, r), j, poly)
            elif r == self.d - 1 and i[-1] == j[-1]:
                bump(apply_sr(i, r), j, poly)
            elif r == self.d - 1 and i[-2] == j[-1]:
                eps = self.signs.eps[(i[-1], j[-1])]
                bump(apply_sr(i, r), j, poly, mult="x", scale=eps)
        return out

    def v_apply_word(self, gens: list[Gen], vec: VVec) -> VVec:
        for g in reversed(gens):
            vec = self.v_action(g, vec)
        return vec

    # -- the basis ---------------------------------------------------------------

    @lru_cache(maxsize=None)
    def basis_of_column(self, k: int, b_max: int) -> tuple[CdBasisElem, ...]:
        """Basis of C_delta 1_{b^k} with y_1-exponent at most b_max."""
        out = []
        for tgt, _, deg in self.words.w_set(self.words.b_words[k]):
            for b in range(b_max + 1):
                for m in (0, 1):
                    if m + deg <= 1:
                        out.append(CdBasisElem(b, m, tgt, k, deg))
        return tuple(sorted(out, key=lambda e: (e.degree, e.target, e.b, e.m)))

    def connecting_word(self, target: Word, k: int) -> tuple[int, ...]:
        key = (target, k)
        if key not in self._conn:
            self._conn[key] = self.words.connecting_word(target, self.words.b_words[k])
        return self._conn[key]

    def elem_image(self, e: CdBasisElem) -> VVec:
        """The V-image e . 1_{(b^k, b^k)}: a single monomial in one component."""
        bw = self.words.b_words[e.source]
        if e.psi_degree == 0:
            return {(e.target, bw): {(e.b, e.m): 1}}
        assert e.m == 0
        return {(e.target, bw): {(e.b, 0): 1}}

    def coords_of_image(self, k: int, vec: VVec) -> dict[CdBasisElem, int]:
        """Read basis coordinates from a vector over the column at 1_{(b^k,b^k)}.

        Sound because distinct basis elements hit distinct V-monomials (the
        linear-independence argument of the basis theorem).
        """
        bw = self.words.b_words[k]
        out: dict[CdBasisElem, int] = {}
        for (i, j), poly in vec.items():
            if j != bw:
                raise ValueError("vector is not supported on the expected column")
            deg = 0 if i[-1] == bw[-1] else 1
            for (zb, xm), c in poly.items():
                if c == 0:
                    continue
                assert xm == 0 or deg == 0
                out[CdBasisElem(zb, xm, i, k, deg)] = c
        return out

    # -- operator decomposition and products -------------------------------------

    def elem_operator(self, e: CdBasisElem) -> list[Gen]:
        """Generator word evaluating to e from the cyclic vector (rightmost first)."""
        gens: list[Gen] = []
        for _ in range(e.b):
            gens.append(("y", 1))
        if e.m:
            gens.append(("ym", None))  # handled by apply_ops: y_1 - y_d
        for r in self.connecting_word(e.target, e.source):
            gens.append(("psi", r))
        gens.append(("idem", self.words.b_words[e.source]))
        return gens

    def v_apply_ops(self, gens: list[Gen], vec: VVec) -> VVec:
        for g in reversed(gens):
            if g[0] == "ym":
                vec = self.v_add(self.v_action(("y", 1), vec), self.v_action(("y", self.d), vec), -1)
            else:
                vec = self.v_action(g, vec)
        return vec

    def multiply(self, x: dict[CdBasisElem, int], y: dict[CdBasisElem, int]) -> dict[CdBasisElem, int]:
        """Product in C_delta via action on V and coordinate read-off."""
        out: dict[CdBasisElem, int] = {}
        for ye, yc in y.items():
            img = self.elem_image(ye)
            for xe, xc in x.items():
                res = self.v_apply_ops(self.elem_operator(xe), img)
                for key, c in self.coords_of_image(ye.source, res).items():
                    out[key] = out.get(key, 0) + xc * yc * c
                    if out[key] == 0:
                        del out[key]
        return out

    def apply_local_gen(self, gen: Gen, e: CdBasisElem) -> dict[CdBasisElem, int]:
        """A single KLR generator applied to a basis element, in coordinates.

        y_r for r < d is y_1; (y_1-y_d) flips m when allowed; psi_r goes
        through V.  Used as the factor action by the induced-module engine.
        """
        kind, arg = gen
        if kind == "idem":
            return {e: 1} if e.target == arg else {}
        if kind == "y":
            r = arg
            if r < self.d:
                return {CdBasisElem(e.b + 1, e.m, e.target, e.source, e.psi_degree): 1}
            # y_d = y_1 - (y_1 - y_d)
            out = {CdBasisElem(e.b + 1, e.m, e.target, e.source, e.psi_degree): 1}
            if e.m == 0 and e.psi_degree == 0:
                out[CdBasisElem(e.b, 1, e.target, e.source, 0)] = -1
            return out
        assert kind == "psi"
        key = (arg, e)
        hit = self._psi_cache.get(key)
        if hit is not None:
            return hit
        res = self.v_action(("psi", arg), self.elem_image(e))
        coords = self.coords_of_image(e.source, res)
        self._psi_cache[key] = coords
        return coords

    # -- classification and dimension data ----------------------------------------

    def classify_psi(self, u, word: Word):
        """Lemma-Cpsi trichotomy for psi_u 1_word: ("zero",) or
        ("deg0"|"deg1", target)."""
        from .coxeter import perm_inv

        if not self.words.in_gdelta(word):
            return ("zero",)
        inv = perm_inv(u)
        target = tuple(word[inv[k] - 1] for k in range(self.d))
        if not self.words.in_gdelta(target):
            return ("zero",)
        comp = self.words.component_of(target)
        c = self.type.cartan(comp, word[-1])
        if comp != word[-1] and c == 0:
            return ("zero",)
        from .cuspwords import perm_of_certificate

        expected = perm_of_certificate(self.words.connecting_word(target, word), self.d)
        if u != expected:
            return ("zero",)
        return ("deg0", target) if comp == word[-1] else ("deg1", target)

    def hom_dimension_series(self, i: int, j: int, trunc: int) -> list[int]:
        """Graded dim of 1_i C_delta 1_j (b-words), by basis enumeration."""
        out = [0] * (trunc + 1)
        for e in self.basis_of_column(j, trunc // 2 + 1):
            if e.target == self.words.b_words[i] and e.degree <= trunc:
                out[e.degree] += 1
        return out

    def check_klr_relations(self) -> list[str]:
        """All KLR relations as operator identities on V (x-level vectors)."""
        failures = []
        t, d = self.type, self.d
        words = sorted(self.words.gdelta)
        vecs = []
        for i in words:
            for j in words:
                kind = self.component_kind(i, j)
                for xm in range(kind):
                    vecs.append({(i, j): {(0, xm): 1}})
        from .rootdata import q_polynomial

        def act(gen_list, v):
            return self.v_apply_word(gen_list, v)

        for v in vecs:
            ((i, j),) = v.keys()
            # idempotent relations
            if not self.v_equal(act([("idem", i)], v), v):
                failures.append(f"idem {i}")
            for r in range(1, d + 1):
                for s2 in range(1, d + 1):
                    lhs = act([("y", r), ("y", s2)], v)
                    rhs = act([("y", s2), ("y", r)], v)
                    if not self.v_equal(lhs, rhs):
                        failures.append(f"y commute {r},{s2} at {(i, j)}")
            for r in range(1, d):
                # psi_r 1_i = 1_{s_r i} psi_r
                lhs = act([("psi", r), ("idem", i)], v)
                rhs = act([("idem", apply_sr(i, r)), ("psi", r)], v)
                if not self.v_equal(lhs, rhs):
                    failures.append(f"psi-idem {r} at {(i, j)}")
                # (y_t psi_r - psi_r y_{s_r t}) 1_i = delta detail: words never repeat adjacent letters
                for tt in range(1, d + 1):
                    st = tt + 1 if tt == r else (tt - 1 if tt == r + 1 else tt)
                    lhs = act([("y", tt), ("psi", r)], v)
                    rhs = act([("psi", r), ("y", st)], v)
                    if not self.v_equal(lhs, rhs):
                        failures.append(f"ypsi r={r},t={tt} at {(i, j)}")
                # psi_r^2 1_i = Q_{i_r, i_{r+1}}(y_r, y_{r+1}) 1_i
                lhs = act([("psi", r), ("psi", r)], v)
                rhs = self.v_zero()
                for (eu, ev), c in q_polynomial(t, self.signs.eps, i[r - 1], i[r]).items():
                    gens = [("y", r)] * eu + [("y", r + 1)] * ev
                    rhs = self.v_add(rhs, act(gens, v), c)
                if not self.v_equal(lhs, rhs):
                    failures.append(f"psi^2 r={r} at {(i, j)}")
            for r in range(1, d - 1):
                for s2 in range(r + 2, d):
                    lhs = act([("psi", r), ("psi", s2)], v)
                    rhs = act([("psi", s2), ("psi", r)], v)
                    if not self.v_equal(lhs, rhs):
                        failures.append(f"psi commute {r},{s2}")
                # braid
                lhs = act([("psi", r + 1), ("psi", r), ("psi", r + 1)], v)
                rhs = act([("psi", r), ("psi", r + 1), ("psi", r)], v)
                if i[r - 1] == i[r + 1]:
                    from .rootdata import q_diff_quotient

                    dq = q_diff_quotient(q_polynomial(t, self.signs.eps, i[r - 1], i[r]))
                    for (eu, eup, ev), c in dq.items():
                        gens = [("y", r)] * eu + [("y", r + 2)] * eup + [("y", r + 1)] * ev
                        rhs = self.v_add(rhs, act(gens, v), c)
                if not self.v_equal(lhs, rhs):
                    failures.append(f"braid r={r} at {(i, j)}")
        return failures

    def check_cy_identities(self) -> list[str]:
        """Lemma Cy and Cypsi as operator identities on V."""
        failures = []
        d = self.d
        vecs = []
        for i in sorted(self.words.gdelta):
            for j in sorted(self.words.gdelta):
                kind = self.component_kind(i, j)
                for xm in range(kind):
                    vecs.append({(i, j): {(0, xm): 1}})
        for v in vecs:
            for r in range(1, d - 1):
                if not self.v_equal(self.v_action(("y", r), v), self.v_action(("y", r + 1), v)) and r + 1 < d:
                    failures.append(f"y_{r} = y_{r+1} fails")
            ym = self.v_add(self.v_action(("y", 1), v), self.v_action(("y", d), v), -1)
            ym2 = self.v_add(self.v_apply_word([("y", 1)], ym), self.v_apply_word([("y", d)], ym), -1)
            if ym2:
                failures.append("(y_1 - y_d)^2 != 0")
            # y_1 central: commutes with every psi_r
            for r in range(1, d):
                lhs = self.v_apply_word([("y", 1), ("psi", r)], v)
                rhs = self.v_apply_word([("psi", r), ("y", 1)], v)
                if not self.v_equal(lhs, rhs):
                    failures.append(f"y_1 not central vs psi_{r}")
        # Cypsi: (y_1 - y_d) psi_w 1_i = 0 when deg psi_w = 1
        for k in self.type.finite_vertices:
            for e in self.basis_of_column(k, 0):
                if e.psi_degree == 1:
                    img = self.elem_image(e)
                    ym = self.v_add(self.v_action(("y", 1), img), self.v_action(("y", self.d), img), -1)
                    if ym:
                        failures.append(f"Cypsi fails at {e}")
        return failures

    def check_basis_independence(self, b_max: int) -> bool:
        """X-elements act on the generator vectors with distinct monomial
        images, hence independently; verified per column and by exact rank."""
        for k in self.type.finite_vertices:
            elems = self.basis_of_column(k, b_max)
            images = {}
            for e in elems:
                img = self.elem_image(e)
                ((key, poly),) = img.items()
                ((mono, c),) = poly.items()
                sig = (key, mono)
                if sig in images or c == 0:
                    return False
                images[sig] = e
            # exact rank over Q per degree, as an independent confirmation
            by_deg: dict[int, list[CdBasisElem]] = {}
            for e in elems:
                by_deg.setdefault(e.degree, []).append(e)
            for deg, group in by_deg.items():
                cols: dict = {}
                rows = []
                for e in group:
                    img = self.elem_image(e)
                    row: dict = {}
                    for key, poly in img.items():
                        for mono, c in poly.items():
                            col = (key, mono)
                            cols.setdefault(col, len(cols))
                            row[cols[col]] = c
                    rows.append(row)
                dense = [[r.get(ci, 0) for ci in range(len(cols))] for r in rows]
                if matrix_rank(dense, QQ) != len(group):
                    return False
        return True


# ---------------------------------------------------------------------------
# the level-one cyclotomic subalgebra and the zigzag isomorphism


def lambda0_basis(cd: CDelta) -> list[CdBasisElem]:
    """(y_1-y_d)^m psi_w 1_i: the b = 0 slice of the basis, all columns."""
    out = []
    for k in cd.type.finite_vertices:
        out.extend(e for e in cd.basis_of_column(k, 0))
    return out


def truncated_lambda0_basis(cd: CDelta) -> list[CdBasisElem]:
    """Basis of the idempotent truncation: targets restricted to b-words."""
    bwords = set(cd.words.b_words.values())
    return [e for e in lambda0_basis(cd) if e.target in bwords]


def zigisom_phi(cd: CDelta, e: CdBasisElem):
    """Image of a truncated basis element in the zigzag algebra.

    1_i -> e_i, (y_1-y_d) 1_i -> xi_i c e_i, psi_{j,i} 1_i -> mu_{ji} a^{j,i};
    returned as (coefficient, label).
    """
    k = e.source
    if e.psi_degree == 0 and e.target == cd.words.b_words[k]:
        if e.m == 0:
            return (1, f"e_{k}")
        return (cd.signs.xi[k], f"c_{k}")
    j = cd.words.component_of(e.target)
    return (cd.signs.mu[(j, k)], f"a_{j},{k}")


def check_zigisom(cd: CDelta, zigzag_alg) -> dict:
    """Bijectivity on bases and multiplicativity on all basis pairs."""
    basis = truncated_lambda0_basis(cd)
    idx = {lbl: i for i, lbl in enumerate(zigzag_alg.labels)}
    images = {}
    for e in basis:
        coeff, lbl = zigisom_phi(cd, e)
        images[e] = {idx[lbl]: zigzag_alg.ring.coerce(coeff)}
    bijective = len({lbl for _, lbl in (zigisom_phi(cd, e) for e in basis)}) == len(basis) == zigzag_alg.dim

    multiplicative = True
    failures = []
    for e1 in basis:
        for e2 in basis:
            prod = cd.multiply({e1: 1}, {e2: 1})
            lhs = zigzag_alg.zero()
            for e3, c in prod.items():
                if e3.b > 0:
                    multiplicative = False
                    failures.append((e1, e2, "left the Lambda_0 slice"))
                    continue
                coeff, lbl = zigisom_phi(cd, e3)
                lhs = zigzag_alg.add(lhs, zigzag_alg.scale(zigzag_alg.ring.coerce(c * coeff),
                                                           zigzag_alg.basis_elem(idx[lbl])))
            rhs = zigzag_alg.mul(images[e1], images[e2])
            if lhs != rhs:
                multiplicative = False
                failures.append((e1, e2))
    return {"bijective": bijective, "multiplicative": multiplicative, "failures": failures[:5]}


def check_minisom(cd: CDelta, zigzag_alg, b_max: int = 2) -> bool:
    """Corollary minisom at n = 1: y_1^b x -> z^b phi(x) is multiplicative.

    Products of basis elements y^b x . y^c x' = y^{b+c} (x x') because y_1 is
    central, so multiplicativity reduces to the zigzag isomorphism plus a
    check that the y_1-powers behave as the polynomial generator.
    """
    basis = truncated_lambda0_basis(cd)
    for e1 in basis:
        for b in range(b_max):
            lifted = CdBasisElem(b, e1.m, e1.target, e1.source, e1.psi_degree)
            for e2 in basis:
                prod = cd.multiply({lifted: 1}, {e2: 1})
                base = cd.multiply({e1: 1}, {e2: 1})
                expect = {CdBasisElem(e.b + b, e.m, e.target, e.source, e.psi_degree): c
                          for e, c in base.items()}
                if prod != expect:
                    return False
    return True
