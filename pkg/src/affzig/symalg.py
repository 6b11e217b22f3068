"""
Graded symmetric algebras as finite data: multiplication tables, trace forms,
the distinguished element Delta(1), centers and the zigzag antiautomorphism.

An algebra is closed data: a basis with degrees, structure constants, a unit
expansion and a trace vector.  The trace form <x,y> = tr(xy) must be
nondegenerate (unit determinant over the integers, invertible over a field)
and supported in the single top degree d, which makes the duality x -> tr(x.-)
homogeneous of degree -d.

Elements are sparse dicts {basis index: coefficient}.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field

from .scalars import ZZ, field_of, integer_matrix_det, invert_matrix, kernel_basis

Elem = dict[int, object]


@dataclass
class SymmetricAlgebraSpec:
    ring: object
    labels: list[str]
    degrees: list[int]
    # structure[(i, j)] = sparse product b_i * b_j
    structure: dict[tuple[int, int], Elem]
    unit: Elem
    trace: list[object]
    # antiautomorphism as a basis permutation index map, when declared
    nu_map: list[int] | None = None
    top_degree: int = field(init=False)

    def __post_init__(self):
        tops = {self.degrees[i] for i, c in enumerate(self.trace) if not self.ring.is_zero(c)}
        if len(tops) != 1:
            raise ValueError("trace must be supported in a single top degree")
        self.top_degree = tops.pop()
        self.validate()

    # -- element arithmetic ------------------------------------------------

    @property
    def dim(self) -> int:
        return len(self.labels)

    def zero(self) -> Elem:
        return {}

    def basis_elem(self, i: int) -> Elem:
        return {i: self.ring.one}

    def one(self) -> Elem:
        return dict(self.unit)

    def add(self, x: Elem, y: Elem) -> Elem:
        out = dict(x)
        for i, c in y.items():
            s = self.ring.add(out.get(i, self.ring.zero), c)
            if self.ring.is_zero(s):
                out.pop(i, None)
            else:
                out[i] = s
        return out

    def scale(self, c, x: Elem) -> Elem:
        if self.ring.is_zero(c):
            return {}
        return {i: self.ring.mul(c, v) for i, v in x.items()}

    def mul(self, x: Elem, y: Elem) -> Elem:
        out: Elem = {}
        R = self.ring
        for i, ci in x.items():
            for j, cj in y.items():
                prod = self.structure.get((i, j))
                if not prod:
                    continue
                c = R.mul(ci, cj)
                for k, ck in prod.items():
                    s = R.add(out.get(k, R.zero), R.mul(c, ck))
                    if R.is_zero(s):
                        out.pop(k, None)
                    else:
                        out[k] = s
        return out

    def equal(self, x: Elem, y: Elem) -> bool:
        return self.add(x, self.scale(self.ring.neg(self.ring.one), y)) == {}

    def elem_degree(self, x: Elem) -> int | None:
        degs = {self.degrees[i] for i in x}
        if not x:
            return None
        if len(degs) != 1:
            raise ValueError("inhomogeneous element")
        return degs.pop()

    def tr(self, x: Elem) -> object:
        R = self.ring
        out = R.zero
        for i, c in x.items():
            out = R.add(out, R.mul(c, self.trace[i]))
        return out

    def nu(self, x: Elem) -> Elem:
        if self.nu_map is None:
            raise ValueError("algebra has no declared antiautomorphism")
        return {self.nu_map[i]: c for i, c in x.items()}

    # -- validation ---------------------------------------------------------

    def gram(self) -> list[list[object]]:
        return [[self.tr(self.mul(self.basis_elem(i), self.basis_elem(j))) for j in range(self.dim)]
                for i in range(self.dim)]

    def validate(self):
        R = self.ring
        basis = [self.basis_elem(i) for i in range(self.dim)]
        for i in range(self.dim):
            if not self.equal(self.mul(self.one(), basis[i]), basis[i]):
                raise ValueError("unit law fails (left)")
            if not self.equal(self.mul(basis[i], self.one()), basis[i]):
                raise ValueError("unit law fails (right)")
        for i in range(self.dim):
            for j in range(self.dim):
                prod = self.structure.get((i, j), {})
                for k in prod:
                    if self.degrees[k] != self.degrees[i] + self.degrees[j]:
                        raise ValueError("structure constants not graded")
                tij = self.tr(self.mul(basis[i], basis[j]))
                tji = self.tr(self.mul(basis[j], basis[i]))
                if tij != tji:
                    raise ValueError("trace is not symmetric")
                for k in range(self.dim):
                    lhs = self.mul(self.mul(basis[i], basis[j]), basis[k])
                    rhs = self.mul(basis[i], self.mul(basis[j], basis[k]))
                    if not self.equal(lhs, rhs):
                        raise ValueError("associativity fails")
        g = self.gram()
        if isinstance(R, type(ZZ)):
            if integer_matrix_det([[int(x) for x in row] for row in g]) not in (1, -1):
                raise ValueError("Gram matrix of the trace form is not unimodular over Z")
        else:
            if invert_matrix(g, field_of(R)) is None:
                raise ValueError("Gram matrix of the trace form is singular")
        if self.nu_map is not None:
            for i in range(self.dim):
                for j in range(self.dim):
                    lhs = self.nu(self.mul(basis[i], basis[j]))
                    rhs = self.mul(self.nu(basis[j]), self.nu(basis[i]))
                    if not self.equal(lhs, rhs):
                        raise ValueError("nu is not anti-multiplicative")

    # -- derived structure ---------------------------------------------------

    def distinguished_element(self) -> list[tuple[int, int, object]]:
        """Delta(1) = sum (G^{-1})_{kl} b_k (x) b_l over the Gram matrix G."""
        F = field_of(self.ring)
        ginv = invert_matrix(self.gram(), F)
        if ginv is None:
            raise ValueError("not a symmetric algebra: Gram matrix is singular")
        out = []
        for k in range(self.dim):
            for l in range(self.dim):
                c = ginv[k][l]
                if not F.is_zero(c):
                    out.append((k, l, self.ring.coerce(c)))
        return out

    def m_delta_one(self) -> Elem:
        """m(Delta(1)), a central element of degree d."""
        out = self.zero()
        for k, l, c in self.distinguished_element():
            out = self.add(out, self.scale(c, self.mul(self.basis_elem(k), self.basis_elem(l))))
        return out

    def center_basis(self) -> list[Elem]:
        """Solve the commutation system x b = b x for all basis b, degreewise."""
        F = field_of(self.ring)
        rows = []
        for cand in range(self.dim):
            row_block: list[object] = []
            for b in range(self.dim):
                xb = self.mul(self.basis_elem(cand), self.basis_elem(b))
                bx = self.mul(self.basis_elem(b), self.basis_elem(cand))
                diff = self.add(xb, self.scale(self.ring.neg(self.ring.one), bx))
                row_block.extend(diff.get(k, self.ring.zero) for k in range(self.dim))
            rows.append(row_block)
        # kernel of the transposed map: candidates are columns
        mat = [[rows[c][k] for c in range(self.dim)] for k in range(self.dim * self.dim)]
        ker = kernel_basis(mat, F, self.dim)
        out = []
        for v in ker:
            elem = {i: self.ring.coerce(c) for i, c in enumerate(v) if not F.is_zero(c)}
            out.append(elem)
        return out

    def is_central(self, x: Elem) -> bool:
        for b in range(self.dim):
            eb = self.basis_elem(b)
            if not self.equal(self.mul(x, eb), self.mul(eb, x)):
                return False
        return True

    # -- serialization --------------------------------------------------------

    def to_json(self) -> str:
        data = {
            "labels": self.labels,
            "degrees": self.degrees,
            "unit": {str(k): int(v) for k, v in self.unit.items()},
            "trace": [int(t) for t in self.trace],
            "structure": {f"{i},{j}": {str(k): int(v) for k, v in prod.items()}
                          for (i, j), prod in sorted(self.structure.items()) if prod},
            "nu": self.nu_map,
        }
        return json.dumps(data, indent=1, sort_keys=True)

    @staticmethod
    def from_json(text: str, ring=ZZ) -> "SymmetricAlgebraSpec":
        data = json.loads(text)
        structure = {}
        for key, prod in data["structure"].items():
            i, j = map(int, key.split(","))
            structure[(i, j)] = {int(k): ring.coerce(v) for k, v in prod.items()}
        return SymmetricAlgebraSpec(
            ring=ring,
            labels=data["labels"],
            degrees=data["degrees"],
            structure=structure,
            unit={int(k): ring.coerce(v) for k, v in data["unit"].items()},
            trace=[ring.coerce(t) for t in data["trace"]],
            nu_map=data.get("nu"),
        )


# ---------------------------------------------------------------------------
# instances


def ground_ring_algebra(ring=ZZ) -> SymmetricAlgebraSpec:
    """A = k itself: one basis element, trivial grading, tr = id."""
    return SymmetricAlgebraSpec(
        ring=ring,
        labels=["1"],
        degrees=[0],
        structure={(0, 0): {0: ring.one}},
        unit={0: ring.one},
        trace=[ring.one],
        nu_map=[0],
    )


def dual_numbers(ring=ZZ) -> SymmetricAlgebraSpec:
    """k[c]/(c^2) with deg c = 2, tr(1) = 0, tr(c) = 1."""
    return SymmetricAlgebraSpec(
        ring=ring,
        labels=["1", "c"],
        degrees=[0, 2],
        structure={(0, 0): {0: ring.one}, (0, 1): {1: ring.one}, (1, 0): {1: ring.one}, (1, 1): {}},
        unit={0: ring.one},
        trace=[ring.zero, ring.one],
        nu_map=[0, 1],
    )


def zigzag_algebra(vertices: list[int], edges: list[tuple[int, int]], ring=ZZ) -> SymmetricAlgebraSpec:
    """The zigzag algebra of a connected loopless graph.

    Basis: idempotents e_i, arrows a(i,j) from j to i for each edge {i,j}
    (both directions), and 2-cycles c_i = c e_i.  Degrees 0, 1, 2.  Products:
    paths of length >= 3 vanish, non-cycle length-2 paths vanish, and both
    2-cycles at a vertex are the same element c_i.  For the one-vertex graph
    the algebra is k[c]/(c^2) with e_1 = 1.
    """
    vertices = list(vertices)
    edge_set = {tuple(sorted(e)) for e in edges}
    for a, b in edge_set:
        if a == b:
            raise ValueError("zigzag graphs may not contain loops")
        if a not in vertices or b not in vertices:
            raise ValueError("edge endpoint outside vertex set")
    # connectivity
    if vertices:
        seen = {vertices[0]}
        frontier = [vertices[0]]
        while frontier:
            v = frontier.pop()
            for a, b in edge_set:
                for x, y in ((a, b), (b, a)):
                    if x == v and y not in seen:
                        seen.add(y)
                        frontier.append(y)
        if seen != set(vertices):
            raise ValueError("zigzag graph must be connected")

    if len(vertices) == 1:
        alg = dual_numbers(ring)
        alg.labels = [f"e_{vertices[0]}", f"c_{vertices[0]}"]
        return alg

    labels: list[str] = []
    degrees: list[int] = []
    index: dict[str, int] = {}

    def new(label: str, deg: int) -> int:
        index[label] = len(labels)
        labels.append(label)
        degrees.append(deg)
        return index[label]

    for v in vertices:
        new(f"e_{v}", 0)
    arrows: list[tuple[int, int]] = []
    for a, b in sorted(edge_set):
        arrows += [(a, b), (b, a)]
    for i, j in arrows:
        new(f"a_{i},{j}", 1)  # arrow from j to i, lives in e_i Z e_j
    for v in vertices:
        new(f"c_{v}", 2)

    def src(lbl: str) -> int | None:
        # right idempotent: e_i for e_i and c_i; j for a_{i,j}
        if lbl.startswith("e_") or lbl.startswith("c_"):
            return int(lbl[2:])
        i, j = lbl[2:].split(",")
        return int(j)

    def tgt(lbl: str) -> int | None:
        if lbl.startswith("e_") or lbl.startswith("c_"):
            return int(lbl[2:])
        i, j = lbl[2:].split(",")
        return int(i)

    structure: dict[tuple[int, int], Elem] = {}
    one = ring.one
    for x, lx in enumerate(labels):
        for y, ly in enumerate(labels):
            prod: Elem = {}
            if src(lx) == tgt(ly):
                if lx.startswith("e_"):
                    prod = {y: one}
                elif ly.startswith("e_"):
                    prod = {x: one}
                elif lx.startswith("a_") and ly.startswith("a_"):
                    i, j = lx[2:].split(",")
                    k, l = ly[2:].split(",")
                    if i == l and j == k:
                        prod = {index[f"c_{i}"]: one}
                # a*c, c*a, c*c are paths of length >= 3: zero
            structure[(x, y)] = prod

    unit = {index[f"e_{v}"]: one for v in vertices}
    trace = [one if lbl.startswith("c_") else ring.zero for lbl in labels]
    nu_map = []
    for lbl in labels:
        if lbl.startswith("a_"):
            i, j = lbl[2:].split(",")
            nu_map.append(index[f"a_{j},{i}"])
        else:
            nu_map.append(index[lbl])

    return SymmetricAlgebraSpec(ring=ring, labels=labels, degrees=degrees,
                                structure=structure, unit=unit, trace=trace, nu_map=nu_map)


def zigzag_of_finite_type(t, ring=ZZ) -> SymmetricAlgebraSpec:
    """Zigzag algebra of the finite Dynkin diagram underlying an affine type."""
    return zigzag_algebra(list(t.finite_vertices), t.finite_edges(), ring)


def parse_graph(spec: str) -> tuple[list[int], list[tuple[int, int]]]:
    """CLI mini-language: "path:n" or an edge list "1-2,2-3"."""
    if spec.startswith("path:"):
        n = int(spec[5:])
        return list(range(1, n + 1)), [(i, i + 1) for i in range(1, n)]
    edges = []
    for part in spec.split(","):
        a, b = part.split("-")
        edges.append((int(a), int(b)))
    vertices = sorted({v for e in edges for v in e})
    return vertices, edges


def graded_dimension_counts(alg: SymmetricAlgebraSpec, trunc: int) -> list[int]:
    out = [0] * (trunc + 1)
    for d in alg.degrees:
        if d <= trunc:
            out[d] += 1
    return out
