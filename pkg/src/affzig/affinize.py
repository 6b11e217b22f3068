"""
The rank-n affinization H_n(A) of a graded symmetric algebra A.

Elements live in the normal-form basis (monomial in z_1..z_n) (x) (tensor of
A-basis labels) (x) (permutation); multiplication acts with the left factor,
decomposed into generators along reduced words, on the right factor viewed
inside the faithful cyclic module V = k[z] (x) A^{(x)n} (x) kS_n.  The action
of a simple transposition is

    s_j . (f (x) b (x) w) = (s_j f) (x) (s_j b) (x) s_j w
                            + nabla_j(f) (x) Delta_{j,j+1} b (x) w,

with Delta_{j,j+1} the distinguished element of A embedded in slots j, j+1.

Also here: the center as S_n-invariants, the lifted antiautomorphism, the
Jucys-Murphy elements l_r = -sum_{t<r} Delta_{t,r}(t,r), the wreath-product
surjection beta_c, and level-l cyclotomic quotients together with the
consistency battery that backs their dimension reports.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass

from .coxeter import (
    Perm,
    act_on_tuple,
    divided_difference,
    identity_perm,
    perm_inv,
    perm_mul,
    reduced_word,
    simple_transposition,
    ZPoly,
)
from .scalars import field_of, kernel_basis, matrix_rank
from .symalg import SymmetricAlgebraSpec

Exps = tuple[int, ...]
Tensor = tuple[int, ...]
Key = tuple[Exps, Tensor, Perm]


class Affinization:
    """Context object for H_n(A): the algebra A, the rank n, caches."""

    def __init__(self, algebra: SymmetricAlgebraSpec, n: int):
        self.A = algebra
        self.n = n
        self.ring = algebra.ring
        self.d = algebra.top_degree
        self.delta_pairs = algebra.distinguished_element()
        self._tensor_mul_cache: dict[tuple[Tensor, Tensor], dict[Tensor, object]] = {}

    # -- raw element helpers --------------------------------------------------

    def zero(self) -> "AffElement":
        return AffElement(self, {})

    def element(self, terms: dict[Key, object]) -> "AffElement":
        R = self.ring
        return AffElement(self, {k: c for k, c in terms.items() if not R.is_zero(c)})

    def one(self) -> "AffElement":
        return self.from_tensor_elem({(): self.ring.one} if self.n == 0 else None)

    def from_tensor_elem(self, _ignored=None) -> "AffElement":
        """The identity: zero exponents, unit tensor expansion, id permutation."""
        e0 = tuple([0] * self.n)
        wid = identity_perm(self.n)
        terms: dict[Key, object] = {}
        unit = self.A.unit
        for combo in itertools.product(*([list(unit.items())] * self.n)):
            tensor = tuple(i for i, _ in combo)
            coeff = self.ring.one
            for _, c in combo:
                coeff = self.ring.mul(coeff, c)
            terms[(e0, tensor, wid)] = coeff
        return self.element(terms)

    def generator_z(self, i: int) -> "AffElement":
        e = [0] * self.n
        e[i - 1] = 1
        out = self.zero()
        for (e0, tensor, w), c in self.from_tensor_elem().terms.items():
            out = out.add(self.element({(tuple(e), tensor, w): c}))
        return out

    def generator_s(self, j: int) -> "AffElement":
        out = self.zero()
        sj = simple_transposition(j, self.n)
        for (e0, tensor, _), c in self.from_tensor_elem().terms.items():
            out = out.add(self.element({(e0, tensor, sj): c}))
        return out

    def slot_tensor(self, r: int, a_elem: dict[int, object]) -> "AffElement":
        """1 (x) .. (x) a (x) .. (x) 1 with `a` in slot r, as an AffElement."""
        out: dict[Key, object] = {}
        for (e0, tensor, w), c in self.from_tensor_elem().terms.items():
            for i, ca in a_elem.items():
                t = list(tensor)
                prod = self.A.mul(self.A.basis_elem(t[r - 1]), {i: ca})
                for k, ck in prod.items():
                    t2 = list(t)
                    t2[r - 1] = k
                    key = (e0, tuple(t2), w)
                    out[key] = self.ring.add(out.get(key, self.ring.zero), self.ring.mul(c, ck))
        return self.element(out)

    def pure_tensor(self, tensor: Tensor) -> "AffElement":
        e0 = tuple([0] * self.n)
        return self.element({(e0, tensor, identity_perm(self.n)): self.ring.one})

    def tensor_mul(self, a: Tensor, b: Tensor) -> dict[Tensor, object]:
        """Slotwise product of two pure basis tensors, cached."""
        key = (a, b)
        hit = self._tensor_mul_cache.get(key)
        if hit is not None:
            return hit
        R = self.ring
        out: dict[Tensor, object] = {(): R.one}
        for x, y in zip(a, b):
            prod = self.A.structure.get((x, y), {})
            new: dict[Tensor, object] = {}
            for t, c in out.items():
                for k, ck in prod.items():
                    new[t + (k,)] = R.add(new.get(t + (k,), R.zero), R.mul(c, ck))
            out = {t: c for t, c in new.items() if not R.is_zero(c)}
            if not out:
                break
        self._tensor_mul_cache[key] = out
        return out

    def delta_embedded(self, t: int, u: int) -> dict[Tensor, object]:
        """Delta_{t,u} as a sparse combination of pure tensors (1-based slots)."""
        R = self.ring
        out: dict[Tensor, object] = {}
        unit_terms = list(self.from_tensor_elem().terms.items())
        for (e0, base, w), c0 in unit_terms:
            for k, l, c in self.delta_pairs:
                tt = list(base)
                pk = self.A.mul(self.A.basis_elem(tt[t - 1]), self.A.basis_elem(k))
                pl = self.A.mul(self.A.basis_elem(tt[u - 1]), self.A.basis_elem(l))
                for i, ci in pk.items():
                    for j, cj in pl.items():
                        t2 = list(base)
                        t2[t - 1], t2[u - 1] = i, j
                        key = tuple(t2)
                        val = R.mul(R.mul(c0, c), R.mul(ci, cj))
                        out[key] = R.add(out.get(key, R.zero), val)
        return {k: v for k, v in out.items() if not R.is_zero(v)}

    def degree_of_key(self, key: Key) -> int:
        e, tensor, _ = key
        return self.d * sum(e) + sum(self.A.degrees[i] for i in tensor)


@dataclass
class AffElement:
    """Sparse element of H_n(A) in the normal-form basis f (x) a (x) w."""

    ctx: Affinization
    terms: dict[Key, object]

    # -- linear structure -------------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def add(self, other: "AffElement") -> "AffElement":
        R = self.ctx.ring
        out = dict(self.terms)
        for k, c in other.terms.items():
            s = R.add(out.get(k, R.zero), c)
            if R.is_zero(s):
                out.pop(k, None)
            else:
                out[k] = s
        return AffElement(self.ctx, out)

    def scale(self, c) -> "AffElement":
        R = self.ctx.ring
        if R.is_zero(c):
            return self.ctx.zero()
        return AffElement(self.ctx, {k: R.mul(c, v) for k, v in self.terms.items()})

    def sub(self, other: "AffElement") -> "AffElement":
        return self.add(other.scale(self.ctx.ring.neg(self.ctx.ring.one)))

    def __eq__(self, other) -> bool:
        return isinstance(other, AffElement) and self.terms == other.terms

    # -- generator action on V (= on normal forms) -----------------------------

    def act_z(self, i: int) -> "AffElement":
        out = {}
        for (e, tensor, w), c in self.terms.items():
            ne = list(e)
            ne[i - 1] += 1
            out[(tuple(ne), tensor, w)] = c
        return AffElement(self.ctx, out)

    def act_monomial(self, exps: Exps) -> "AffElement":
        out = {}
        for (e, tensor, w), c in self.terms.items():
            ne = tuple(a + b for a, b in zip(e, exps))
            out[(ne, tensor, w)] = c
        return AffElement(self.ctx, out)

    def act_tensor(self, tensor_elem: dict[Tensor, object]) -> "AffElement":
        ctx, R = self.ctx, self.ctx.ring
        out: dict[Key, object] = {}
        for (e, tensor, w), c in self.terms.items():
            for a, ca in tensor_elem.items():
                for t, ct in ctx.tensor_mul(a, tensor).items():
                    key = (e, t, w)
                    val = R.mul(c, R.mul(ca, ct))
                    s = R.add(out.get(key, R.zero), val)
                    if R.is_zero(s):
                        out.pop(key, None)
                    else:
                        out[key] = s
        return AffElement(ctx, out)

    def act_s(self, j: int) -> "AffElement":
        """Lemma Vdef action of s_j."""
        ctx, R, n = self.ctx, self.ctx.ring, self.ctx.n
        sj = simple_transposition(j, n)
        delta = ctx.delta_embedded(j, j + 1)
        out: dict[Key, object] = {}

        def bump(key, val):
            s = R.add(out.get(key, R.zero), val)
            if R.is_zero(s):
                out.pop(key, None)
            else:
                out[key] = s

        for (e, tensor, w), c in self.terms.items():
            # main term: permute monomial, tensor and the group part
            f = ZPoly(n, {e: 1})
            sf = f.act(sj)
            (se,) = sf.terms
            bump((se, act_on_tuple(sj, tensor), perm_mul(sj, w)), c)
            # correction: nabla_j(f) (x) Delta_{j,j+1} tensor (x) w
            nab = divided_difference(j, f)
            for ne, nc in nab.terms.items():
                for a, ca in delta.items():
                    for t, ct in ctx.tensor_mul(a, tensor).items():
                        val = R.mul(R.mul(c, R.coerce(nc)), R.mul(ca, ct))
                        bump((ne, t, w), val)
        return AffElement(ctx, out)

    def act_perm(self, w: Perm) -> "AffElement":
        out = self
        for j in reversed(reduced_word(w)):
            out = out.act_s(j)
        return out

    # -- multiplication ----------------------------------------------------------

    def mul(self, other: "AffElement") -> "AffElement":
        """x*y by acting with x, term by term, on y in V."""
        ctx = self.ctx
        out = ctx.zero()
        for (e, tensor, w), c in self.terms.items():
            acted = other.act_perm(w).act_tensor({tensor: ctx.ring.one}).act_monomial(e)
            out = out.add(acted.scale(c))
        return out

    # -- structure maps -----------------------------------------------------------

    def nu_hat(self) -> "AffElement":
        """Anti-automorphism: fixes z_i and s_j, applies nu slotwise."""
        ctx = self.ctx
        if ctx.A.nu_map is None:
            raise ValueError("underlying algebra has no declared antiautomorphism")
        out = ctx.zero()
        for (e, tensor, w), c in self.terms.items():
            # reversed product: w^{-1} . nu(a) . z^e, with nu(a) z^e = z^e nu(a)
            nu_t = tuple(ctx.A.nu_map[i] for i in tensor)
            elem = ctx.element({(e, nu_t, identity_perm(ctx.n)): c})
            out = out.add(elem.act_perm(perm_inv(w)))
        return out

    def degrees(self) -> set[int]:
        return {self.ctx.degree_of_key(k) for k in self.terms}

    def is_wreath(self) -> bool:
        return all(sum(e) == 0 for (e, _, _) in self.terms)

    def to_json_terms(self) -> list[dict]:
        out = []
        for (e, tensor, w), c in sorted(self.terms.items()):
            out.append({"exps": list(e), "tensor": list(tensor), "perm": list(w), "coeff": int(c)})
        return out


# ---------------------------------------------------------------------------
# generators and relation battery


def generators(ctx: Affinization) -> list[tuple[str, AffElement]]:
    gens: list[tuple[str, AffElement]] = []
    for i in range(1, ctx.n + 1):
        gens.append((f"z_{i}", ctx.generator_z(i)))
    for j in range(1, ctx.n):
        gens.append((f"s_{j}", ctx.generator_s(j)))
    for r in range(1, ctx.n + 1):
        for b in range(ctx.A.dim):
            gens.append((f"[{ctx.A.labels[b]}]_{r}", ctx.slot_tensor(r, ctx.A.basis_elem(b))))
    return gens


def is_central(x: AffElement) -> bool:
    for _, g in generators(x.ctx):
        if not g.mul(x) == x.mul(g):
            return False
    return True


def center_space(ctx: Affinization, max_degree: int) -> list[AffElement]:
    """Basis of (k[z] (x) Z(A)^{(x)n})^{S_n} in degrees <= max_degree.

    Orbit sums of (monomial, central-tuple) index pairs under the diagonal
    S_n action; every member is cross-checked against `is_central`.
    """
    zbasis = ctx.A.center_basis()
    zdegs = [ctx.A.elem_degree(z) for z in zbasis]
    n, d = ctx.n, ctx.d
    pairs = []
    # for trivially graded A (d = 0) the cutoff is read as a z-exponent bound
    zweight = d if d > 0 else 1
    max_t = max_degree // zweight
    for exps in itertools.product(range(max_t + 1), repeat=n):
        for zc in itertools.product(range(len(zbasis)), repeat=n):
            deg = zweight * sum(exps) + sum(zdegs[k] for k in zc)
            if deg <= max_degree:
                pairs.append((exps, zc))
    seen = set()
    out = []
    perms = [tuple(p) for p in itertools.permutations(range(1, n + 1))]
    for exps, zc in pairs:
        orbit = set()
        for w in perms:
            orbit.add((act_on_tuple(w, exps), act_on_tuple(w, zc)))
        key = min(orbit)
        if key in seen:
            continue
        seen.add(key)
        elem = ctx.zero()
        for oe, oz in orbit:
            tensor_elem: dict[Tensor, object] = {tuple(): ctx.ring.one}
            for k in oz:
                new = {}
                for t, c in tensor_elem.items():
                    for i, ci in zbasis[k].items():
                        new[t + (i,)] = ctx.ring.add(new.get(t + (i,), ctx.ring.zero), ctx.ring.mul(c, ci))
                tensor_elem = new
            part = ctx.zero()
            for t, c in tensor_elem.items():
                part = part.add(ctx.element({(oe, t, identity_perm(n)): c}))
            elem = elem.add(part)
        if not elem.is_zero():
            out.append(elem)
    for elem in out:
        if not is_central(elem):
            raise AssertionError("invariant candidate fails centrality")
    return out


def center_space_bruteforce(ctx: Affinization, max_degree: int) -> int:
    """Independent oracle: dimension of the full commutant in degrees <= D,
    by solving the commutator linear system degree piece by degree piece."""
    n, d = ctx.n, ctx.d
    F = field_of(ctx.ring)
    keys_by_deg: dict[int, list[Key]] = {}
    zweight = d if d > 0 else 1
    max_t = max_degree // zweight
    perms = [tuple(p) for p in itertools.permutations(range(1, n + 1))]
    for exps in itertools.product(range(max_t + 1), repeat=n):
        for tensor in itertools.product(range(ctx.A.dim), repeat=n):
            deg = zweight * sum(exps) + sum(ctx.A.degrees[i] for i in tensor)
            if deg > max_degree:
                continue
            for w in perms:
                keys_by_deg.setdefault(deg, []).append((tuple(exps), tensor, w))
    gens = generators(ctx)
    total = 0
    for deg, keys in sorted(keys_by_deg.items()):
        # commutators with a generator land in the piece deg + deg(gen);
        # collect the keys that actually occur as the column space
        sparse_rows: list[dict] = []
        cols: dict = {}
        for k in keys:
            x = ctx.element({k: ctx.ring.one})
            row: dict = {}
            for gi, (_, g) in enumerate(gens):
                comm = g.mul(x).sub(x.mul(g))
                for kk, c in comm.terms.items():
                    col = (gi, kk)
                    cols.setdefault(col, len(cols))
                    row[cols[col]] = c
            sparse_rows.append(row)
        mat = [[row.get(ci, ctx.ring.zero) for row in sparse_rows] for ci in range(len(cols))]
        total += len(kernel_basis(mat, F, len(keys)))
    return total


# ---------------------------------------------------------------------------
# Jucys-Murphy elements, the wreath surjection and cyclotomic quotients


def transposition_perm(t: int, r: int, n: int) -> Perm:
    w = list(range(1, n + 1))
    w[t - 1], w[r - 1] = w[r - 1], w[t - 1]
    return tuple(w)


def jucys_murphy(ctx: Affinization, r: int) -> AffElement:
    """l_r = -sum_{t<r} Delta_{t,r} (t,r); l_1 = 0."""
    out = ctx.zero()
    for t in range(1, r):
        delta = ctx.delta_embedded(t, r)
        perm = transposition_perm(t, r, ctx.n)
        for tensor, c in delta.items():
            e0 = tuple([0] * ctx.n)
            out = out.add(ctx.element({(e0, tensor, perm): ctx.ring.neg(c)}))
    return out


def default_central_tensor(ctx: Affinization) -> AffElement:
    """c = sum over slots of m(Delta(1)): the natural degree-d central tensor."""
    md = ctx.A.m_delta_one()
    out = ctx.zero()
    for r in range(1, ctx.n + 1):
        out = out.add(ctx.slot_tensor(r, md))
    return out


def validate_central_tensor(ctx: Affinization, c: AffElement):
    if not c.is_zero():
        degs = c.degrees()
        if degs != {ctx.d}:
            raise ValueError(f"central tensor must be homogeneous of degree {ctx.d}")
    if not all(sum(e) == 0 and w == identity_perm(ctx.n) for (e, _, w) in c.terms):
        raise ValueError("central tensor must lie in A^(x)n")
    for j in range(1, ctx.n):
        sj = simple_transposition(j, ctx.n)
        permuted = ctx.zero()
        for (e, tensor, w), cc in c.terms.items():
            permuted = permuted.add(ctx.element({(e, act_on_tuple(sj, tensor), w): cc}))
        if not permuted == c:
            raise ValueError("central tensor must be S_n-symmetric")
    if not is_central(c):
        raise ValueError("tensor is not central in H_n(A)")


def beta_c(ctx: Affinization, x: AffElement, c: AffElement) -> AffElement:
    """The wreath surjection: identity on A wr S_n, z_r -> l_r + c."""
    jm = [None] + [jucys_murphy(ctx, r).add(c) for r in range(1, ctx.n + 1)]
    out = ctx.zero()
    for (e, tensor, w), coeff in x.terms.items():
        img = ctx.element({(tuple([0] * ctx.n), tensor, w): coeff})
        for i, t in enumerate(e, start=1):
            for _ in range(t):
                img = jm[i].mul(img)
        out = out.add(img)
    if not out.is_wreath():
        raise AssertionError("beta_c image escaped the wreath subalgebra")
    return out


@dataclass
class CyclotomicQuotient:
    """Level-l quotient, elements written on the Prop-cycspan spanning set.

    The reduction `reduce` rewrites any normal-form element of H_n(A) onto
    the spanning monomials {z^t a w : 0 <= t_k < l}; the well-definedness of
    the induced multiplication is *tested*, never assumed.
    """

    ctx: Affinization
    level: int
    cs: list[AffElement]

    def __post_init__(self):
        for c in self.cs:
            validate_central_tensor(self.ctx, c)
        if len(self.cs) != self.level:
            raise ValueError("need one central tensor per level")
        # z_1^l = sum_k b_k z_1^k from prod_j (z_1 - c^(j)) = 0
        ctx = self.ctx
        poly = [ctx.one()]  # coefficients of prod (X - c_j), low degree first
        for c in self.cs:
            new = [ctx.zero() for _ in range(len(poly) + 1)]
            for k, p in enumerate(poly):
                new[k + 1] = new[k + 1].add(p)
                new[k] = new[k].add(p.mul(c).scale(ctx.ring.neg(ctx.ring.one)))
            poly = new
        # prod = X^l + sum_{k<l} poly[k] X^k  =>  X^l = -sum poly[k] X^k
        self._reducers = [p.scale(ctx.ring.neg(ctx.ring.one)) for p in poly[: self.level]]

    def spanning_set(self) -> list[Key]:
        ctx = self.ctx
        out = []
        for exps in itertools.product(range(self.level), repeat=ctx.n):
            for tensor in itertools.product(range(ctx.A.dim), repeat=ctx.n):
                for w in itertools.permutations(range(1, ctx.n + 1)):
                    out.append((tuple(exps), tensor, tuple(w)))
        return out

    def reduce(self, x: AffElement, order: str = "first", rng: random.Random | None = None,
               fuel: int = 100000) -> dict[Key, object]:
        """Rewrite onto the spanning set; constructive Prop-cycspan reduction.

        Per term:  an overflowing z_1-power is shortened by the cyclotomic
        relation; an overflowing power at slot i+1 is migrated leftwards by

            f a w = s_i [(s_i f)(s_i a)(s_i w)] - nabla_i(s_i f) Delta_{i,i+1} (s_i a)(s_i w),

        where the bracket is recursively reduced *first* and only then
        left-multiplied by s_i (main terms are then already spanning, the
        divided-difference corrections have lower z-degree).  With the
        leftmost violating slot this strictly decreases (total degree,
        sum_i i*t_i) lexicographically; `order="random"` is for confluence
        testing and is guarded by fuel instead.
        """
        ctx, R = self.ctx, self.ctx.ring
        budget = [fuel]
        cache: dict[Key, dict[Key, object]] | None = {} if order == "first" else None

        def bump(acc: dict, key: Key, val):
            s = R.add(acc.get(key, R.zero), val)
            if R.is_zero(s):
                acc.pop(key, None)
            else:
                acc[key] = s

        def combine(acc: dict, part: dict[Key, object], coeff):
            for key, val in part.items():
                bump(acc, key, R.mul(coeff, val))

        def reduce_term(key: Key) -> dict[Key, object]:
            budget[0] -= 1
            if budget[0] <= 0:
                raise RuntimeError(f"cyclotomic reduction did not terminate; witness {key}")
            if cache is not None and key in cache:
                return cache[key]
            e, tensor, w = key
            l = self.level
            viol = [i for i in range(ctx.n) if e[i] >= l]
            out: dict[Key, object] = {}
            if not viol:
                out = {key: R.one}
            elif (slot := viol[0] if (order != "random" or rng is None) else rng.choice(viol)) == 0:
                for k, b in enumerate(self._reducers):
                    ne = list(e)
                    ne[0] = e[0] - l + k
                    rest = b.mul(ctx.element({(tuple(ne), tensor, w): R.one}))
                    for kk, cc in rest.terms.items():
                        combine(out, reduce_term(kk), cc)
            else:
                i = slot  # s_i swaps 1-based slots i, i+1; e[slot] sits at 1-based slot+1
                si = simple_transposition(i, ctx.n)
                f = ZPoly(ctx.n, {e: 1})
                sf = f.act(si)
                (se,) = sf.terms
                migrated = reduce_term((se, act_on_tuple(si, tensor), perm_mul(si, w)))
                for key2, c2 in migrated.items():
                    lifted = ctx.element({key2: R.one}).act_s(i)
                    for kk, cc in lifted.terms.items():
                        combine(out, reduce_term(kk), R.mul(c2, cc))
                nab = divided_difference(i, sf)
                delta = ctx.delta_embedded(i, i + 1)
                for ne, nc in nab.terms.items():
                    for a, ca in delta.items():
                        for t2, ct in ctx.tensor_mul(a, act_on_tuple(si, tensor)).items():
                            val = R.neg(R.mul(R.coerce(nc), R.mul(ca, ct)))
                            combine(out, reduce_term((ne, t2, perm_mul(si, w))), val)
            if cache is not None:
                cache[key] = out
            return out

        total: dict[Key, object] = {}
        for key, coeff in x.terms.items():
            combine(total, reduce_term(key), coeff)
        return total

    def multiply(self, xk: dict[Key, object], yk: dict[Key, object]) -> dict[Key, object]:
        x = self.ctx.element(dict(xk))
        y = self.ctx.element(dict(yk))
        return self.reduce(x.mul(y))

    def dimension(self) -> int:
        return (self.level ** self.ctx.n) * (self.ctx.A.dim ** self.ctx.n) * _factorial(self.ctx.n)


def _factorial(n: int) -> int:
    out = 1
    for k in range(2, n + 1):
        out *= k
    return out


def c3_evidence(quot: CyclotomicQuotient, trials: int = 25, seed: int = 0) -> dict:
    """Consistency battery for the spanning-set rewriting.

    Checks (a) the defining relations of H_n(A) and the cyclotomic relation
    as operators on the spanned module, (b) associativity on randomized
    triples, (c) confluence under randomized reduction orders.  Success is
    evidence for the basis conjecture at this instance, never a proof of the
    general statement.
    """
    ctx = quot.ctx
    rng = random.Random(seed)
    span = quot.spanning_set()
    report = {"instance": {"n": ctx.n, "level": quot.level, "dimA": ctx.A.dim},
              "spanning_size": len(span)}

    def as_elem(key: Key) -> AffElement:
        return ctx.element({key: ctx.ring.one})

    # (a) operator relations on every spanning vector
    gens = generators(ctx)
    ok_ops = True
    cyc = None
    for c in quot.cs:
        term = ctx.generator_z(1).sub(c)
        cyc = term if cyc is None else cyc.mul(term)
    for key in span:
        v = as_elem(key)
        for (name_g, g), (name_h, h) in itertools.combinations(gens, 2):
            lhs = quot.reduce(g.mul(h).mul(v))
            rhs = quot.reduce(g.mul(quot.ctx.element(dict(quot.reduce(h.mul(v))))))
            if lhs != rhs:
                ok_ops = False
        if quot.reduce(cyc.mul(v)):
            ok_ops = False
    report["operator_relations"] = ok_ops

    # (b) associativity on random triples
    ok_assoc = True
    for _ in range(trials):
        x, y, z = (rng.choice(span) for _ in range(3))
        lhs = quot.multiply(quot.multiply({x: 1}, {y: 1}), {z: 1})
        rhs = quot.multiply({x: 1}, quot.multiply({y: 1}, {z: 1}))
        if lhs != rhs:
            ok_assoc = False
    report["associativity"] = ok_assoc

    # (c) confluence under randomized reduction order
    ok_conf = True
    for _ in range(trials):
        x, y = rng.choice(span), rng.choice(span)
        prod = ctx.element({x: ctx.ring.one}).mul(ctx.element({y: ctx.ring.one}))
        base = quot.reduce(prod)
        alt = quot.reduce(prod, order="random", rng=rng)
        if base != alt:
            ok_conf = False
    report["confluence"] = ok_conf

    report["consistent"] = ok_ops and ok_assoc and ok_conf
    report["dimension_if_consistent"] = quot.dimension()
    return report
