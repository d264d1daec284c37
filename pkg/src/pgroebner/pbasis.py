"""Order differences, minimal Groebner p-bases, and digit representations.

From a sorted minimal Groebner basis (g_1, ..., g_m) with order differences
(beta_1, ..., beta_m) the sequence

    (g_1, p*g_1, ..., p^(beta_1 - 1)*g_1, ..., g_m, ..., p^(beta_m - 1)*g_m)

is a p-generator sequence spanning the same module: p times the last vector
is zero and p times every other vector is a combination of the later ones
with digit-polynomial coefficients (coefficients in {0, ..., p-1}).  The
sequence is p-linearly independent, so its length N = sum of the betas is
an invariant of the module (its p-dimension), independent of the monomial
order.  Every module element then has a unique digit-coefficient
representation, recovered here by greedy leading-digit peeling.

beta_j is the drop from ord(g_j) to the order of the next element sharing
its leading position, or ord(g_j) when there is none.
"""

from __future__ import annotations

import random
from dataclasses import dataclass

from .errors import DimensionMismatch, MixedRings, NotInModule, ValidationFailed
from .groebner import GroebnerBasis, PlmReport, _random_poly
from .polyvec import Monomial, MonomialOrder, Poly, PolyVec, format_vector


@dataclass(frozen=True)
class OrderDiffs:
    """The order-difference sequence of a sorted minimal Groebner basis."""

    betas: tuple[int, ...]

    def __iter__(self):
        return iter(self.betas)

    def __len__(self) -> int:
        return len(self.betas)


def order_differences(G: GroebnerBasis) -> OrderDiffs:
    """beta_j = ord(g_j) - ord(g_i) for the next i > j sharing lpos, else ord(g_j)."""
    betas = []
    for j, dj in enumerate(G.leads):
        nxt = next(
            (d.ord for d in G.leads[j + 1 :] if d.lpos == dj.lpos),
            None,
        )
        beta = dj.ord - nxt if nxt is not None else dj.ord
        assert beta >= 1
        betas.append(beta)
    return OrderDiffs(tuple(betas))


@dataclass(frozen=True)
class PBasis:
    """A minimal Groebner p-basis: vectors, their provenance, and the betas.

    provenance[i] = (j, e) records that vectors[i] == p^e * g_j for the j-th
    element of the source basis (0-based).
    """

    order: MonomialOrder
    vectors: tuple[PolyVec, ...]
    provenance: tuple[tuple[int, int], ...]
    betas: tuple[int, ...]

    @property
    def N(self) -> int:
        return len(self.vectors)

    @property
    def ring(self):
        return self.vectors[0].ring

    def __len__(self) -> int:
        return len(self.vectors)

    def __iter__(self):
        return iter(self.vectors)

    def __getitem__(self, i: int) -> PolyVec:
        return self.vectors[i]


def build_p_basis(G: GroebnerBasis) -> PBasis:
    """Expand a sorted minimal Groebner basis into its p-basis.

    The p-generator-sequence property is verified constructively: p times
    each vector is re-expressed in digit coordinates over the later vectors
    and the expression is re-evaluated for exact equality.  A failure
    signals an upstream basis bug and raises ValidationFailed.
    """
    ring = G.ring
    betas = order_differences(G).betas
    vectors: list[PolyVec] = []
    provenance: list[tuple[int, int]] = []
    for j, g in enumerate(G.elements):
        for e in range(betas[j]):
            vectors.append(g.scale(ring.p**e))
            provenance.append((j, e))
    basis = PBasis(G.order, tuple(vectors), tuple(provenance), betas)

    for i, vi in enumerate(basis.vectors):
        for k in range(i + 1, basis.N):
            vk = basis.vectors[k]
            if vi.lpos(G.order) == vk.lpos(G.order) and vi.ord(G.order) == vk.ord(
                G.order
            ):
                raise ValidationFailed(
                    f"vectors {i} and {k} share leading position and order"
                )
    for i, vi in enumerate(basis.vectors):
        pv = vi.scale(ring.p)
        if i == basis.N - 1:
            if not pv.is_zero():
                raise ValidationFailed("p times the last vector is nonzero")
            continue
        if pv.is_zero():
            continue
        tail = basis.vectors[i + 1 :]
        try:
            coeffs = _represent(pv, tail, G.order)
        except NotInModule as exc:
            raise ValidationFailed(
                f"p * vector {i} is not a digit combination of the later vectors"
            ) from exc
        check = PolyVec.zero(ring, pv.q)
        for a, v in zip(coeffs, tail):
            check = check + v.poly_mul(a)
        if check != pv:
            raise ValidationFailed(f"digit expression for p * vector {i} is inexact")
    return basis


def p_dim(basis: PBasis) -> int:
    """The p-dimension of the spanned module: the number of basis vectors."""
    assert basis.N == sum(basis.betas)
    return basis.N


def _represent(
    f: PolyVec, vectors: tuple[PolyVec, ...] | list[PolyVec], order: MonomialOrder
) -> tuple[Poly, ...]:
    """Greedy digit-coefficient representation of f over a p-basis fragment.

    At each step the leading coefficient of the residual is split into
    digits along the p-power layers offered by the vectors whose leading
    monomial divides the residual's; the layers are distinct, so every
    digit is forced and the leading monomial strictly decreases.
    """
    ring = f.ring
    digits: list[dict[int, int]] = [{} for _ in vectors]
    work = f
    while not work.is_zero():
        c, X = work.lt(order)
        cands = [
            (ring.vp(v.lc(order)), i, v)
            for i, v in enumerate(vectors)
            if v.lm(order).divides(X)
        ]
        if not cands:
            raise NotInModule(f"leading term at {X} has no matching basis vector")
        cands.sort()
        assert len({e for e, _, _ in cands}) == len(cands)
        rem = c
        used: list[tuple[int, int, int]] = []
        for e, i, v in cands:
            if rem == 0:
                break
            if rem % ring.p**e != 0:
                raise NotInModule(f"coefficient {c} at {X} is not digit-expressible")
            u = ring.unit_part(v.lc(order))
            theta = ((rem // ring.p**e) % ring.p) * pow(u, -1, ring.p) % ring.p
            if theta:
                rem = ring.sub(rem, theta * u * ring.p**e)
                used.append((i, theta, X.alpha - v.lm(order).alpha))
        if rem != 0:
            raise NotInModule(f"coefficient {c} at {X} is not digit-expressible")
        for i, theta, shift in used:
            assert shift not in digits[i]
            digits[i][shift] = theta
            work = work - vectors[i].term_mul(theta, shift)
        assert work.is_zero() or order.compare(work.lm(order), X) < 0
    out = []
    for d in digits:
        top = max(d, default=-1)
        out.append(Poly(ring, (d.get(k, 0) for k in range(top + 1))))
    return tuple(out)


def p_represent(f: PolyVec, basis: PBasis) -> tuple[Poly, ...]:
    """The unique digit-coefficient representation of f over the p-basis.

    Accepts any vector of the ambient space; raises NotInModule when f is
    not in the spanned module.  The returned coefficients are polynomials
    with digits in {0, ..., p-1} and the expansion is verified exactly
    before returning.
    """
    ring = basis.ring
    if f.ring != ring:
        raise MixedRings(f"{f.ring} vs {ring}")
    if f.q != basis.vectors[0].q:
        raise DimensionMismatch(f"q={f.q} vs q={basis.vectors[0].q}")
    coeffs = _represent(f, basis.vectors, basis.order)
    check = PolyVec.zero(ring, f.q)
    for a, v in zip(coeffs, basis.vectors):
        check = check + v.poly_mul(a)
    assert check == f
    return coeffs


def check_p_plm(
    basis: PBasis, trials: int = 500, seed: int = 0, deg_bound: int = 3
) -> PlmReport:
    """Randomized check of the p-predictable leading monomial property.

    Samples digit-polynomial tuples a_i, forms f = sum a_i v_i, and checks
    that nontrivial tuples give f != 0 (p-linear independence) with
    lm(f) == max over nonzero a_i of lm(a_i)*lm(v_i).
    """
    ring = basis.ring
    rng = random.Random(seed)
    order = basis.order
    q = basis.vectors[0].q
    for t in range(1, trials + 1):
        coeffs = [_random_poly(ring, rng, deg_bound, ring.p) for _ in basis.vectors]
        if all(a.is_zero() for a in coeffs):
            continue
        f = PolyVec.zero(ring, q)
        for a, v in zip(coeffs, basis.vectors):
            f = f + v.poly_mul(a)
        if f.is_zero():
            return PlmReport(
                passed=False,
                trials=t,
                seed=seed,
                counterexample=tuple(coeffs),
                detail="nontrivial digit combination is zero",
            )
        prods = [
            Monomial(v.lm(order).alpha + a.degree, v.lm(order).pos)
            for a, v in zip(coeffs, basis.vectors)
            if not a.is_zero()
        ]
        expected = order.max(prods)
        if f.lm(order) != expected:
            return PlmReport(
                passed=False,
                trials=t,
                seed=seed,
                counterexample=tuple(coeffs),
                detail=f"lm {f.lm(order)} != predicted {expected}",
            )
    return PlmReport(passed=True, trials=trials, seed=seed)


def format_p_basis(basis: PBasis) -> str:
    """Listing: sidecar header line, then one vector per line."""
    betas = ",".join(str(b) for b in basis.betas)
    header = f"# betas=({betas}) N={basis.N} order={basis.order.value}"
    rows = "\n".join(format_vector(v) for v in basis.vectors)
    return f"{header}\n{rows}"
