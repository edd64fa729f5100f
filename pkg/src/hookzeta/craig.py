"""The family of stable lattices of the hook module and its sublattice structure.

For every divisor d of n+1 there is a stable lattice L(d) inside the
n-dimensional hook module, given by an explicit triangular basis.  Every
stable sublattice whose index is a power of a prime p is a scaled member
p^a L(p^b) of the same family, and inclusion, intersection and index between
scaled members have closed forms.  This module materializes the lattices,
implements the closed forms, and provides two independent enumeration routes:

* a breadth-first walk over maximal stable sublattices, driven by exhaustive
  submodule spinning in the residue module L/pL, and
* an exhaustive census of all sublattices of a given index via canonical
  triangular bases, filtered by stability.

The two routes check each other; the census is the trusted brute-force oracle
for every closed formula in the package.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations, product

from .arith import divisors, prime_factorization, valuation
from .bounds import DEFAULT_BOUNDS, Bounds, ScaleError
from .exactmat import (
    IntMatrix,
    LatticeBasis,
    LatticeError,
    hnf,
    is_scalar_multiple,
    lattice_index,
    lattice_intersect,
    matrix_to_json,
    solve_in_lattice,
)

__all__ = [
    "CraigLattice",
    "ScaledCraigLattice",
    "craig_lattice",
    "scaled_lattice_basis",
    "scaled_inclusion",
    "scaled_intersect",
    "scaled_index",
    "is_g_stable",
    "action_in_basis",
    "maximal_sublattices_p",
    "rad_p",
    "phi_p",
    "phi_p_class",
    "mu_p",
    "enumerate_p_sublattices",
    "enumerate_index_sublattices",
    "classify_sublattice",
    "divisors",
    "lattices_to_json",
]


@dataclass(frozen=True)
class CraigLattice:
    """The lattice L(d): diagonal (d, ..., d, 1) plus one alternating column."""

    n: int
    d: int
    basis: LatticeBasis


@dataclass(frozen=True)
class ScaledCraigLattice:
    """The classified form p^a L(p^b) of a stable sublattice of p-power index."""

    p: int
    a: int
    b: int

    def __post_init__(self):
        if self.a < 0 or self.b < 0:
            raise ValueError("exponents must be nonnegative")


def craig_lattice(n: int, d: int) -> CraigLattice:
    """Construct L(d) for any d >= 1; stability under the action is a separate check."""
    if n < 2 or d < 1:
        raise ValueError("need n >= 2 and d >= 1")
    rows = []
    for i in range(n - 1):
        row = [0] * n
        row[i] = d
        row[n - 1] = (-1) ** (n - i) * (i + 1)
        rows.append(row)
    rows.append([0] * (n - 1) + [1])
    return CraigLattice(n, d, LatticeBasis(IntMatrix(rows)))


def scaled_lattice_basis(n: int, scaled: ScaledCraigLattice) -> LatticeBasis:
    """Realize p^a L(p^b) as a concrete lattice."""
    base = craig_lattice(n, scaled.p**scaled.b).basis
    return base.scale(scaled.p**scaled.a)


def scaled_inclusion(x: ScaledCraigLattice, y: ScaledCraigLattice) -> bool:
    """Closed form for p^a L(p^b) being contained in p^a' L(p^b')."""
    if x.p != y.p:
        raise ValueError("scaled lattices must share the prime")
    return x.a >= y.a and x.a + x.b >= y.a + y.b


def scaled_intersect(x: ScaledCraigLattice, y: ScaledCraigLattice) -> ScaledCraigLattice:
    """Closed form for the intersection of two scaled lattices."""
    if x.p != y.p:
        raise ValueError("scaled lattices must share the prime")
    a = max(x.a, y.a)
    return ScaledCraigLattice(x.p, a, max(x.a + x.b, y.a + y.b) - a)


def scaled_index(n: int, sup: ScaledCraigLattice, sub: ScaledCraigLattice) -> int:
    """Exponent e with [sup : sub] = p^e, from the closed index formula."""
    if not scaled_inclusion(sub, sup):
        raise LatticeError("not-sublattice")
    return (sub.a - sup.a) * n + (sub.b - sup.b) * (n - 1)


def action_in_basis(lattice: LatticeBasis, mat: IntMatrix) -> IntMatrix | None:
    """The matrix of `mat` written in the lattice's basis, or None if the
    lattice is not invariant."""
    return solve_in_lattice(lattice.hnf, mat * lattice.hnf)


def is_g_stable(lattice: LatticeBasis, gens) -> bool:
    """True when every generator maps the lattice into itself."""
    if gens.n != lattice.dim:
        raise LatticeError("dimension mismatch")
    return all(action_in_basis(lattice, m) is not None for m in gens.mats)


# ---------------------------------------------------------------------------
# Submodules of the residue module L/pL by spinning.
#
# A subspace is canonicalized as the tuple of rows of its reduced row echelon
# basis over F_p.  Spinning closes a single vector under the generator action;
# every submodule is a join of such cyclic submodules, so closing the cyclic
# family under sums enumerates the full submodule lattice.
# ---------------------------------------------------------------------------


def _rref_insert(basis: list[tuple[int, list[int]]], vec: list[int], p: int) -> bool:
    """Reduce vec against an echelon basis, inserting the residue if nonzero.

    basis holds (pivot_position, row) pairs with unit pivots, kept reduced.
    Returns True when the basis grew.
    """
    v = vec[:]
    for pos, row in basis:
        c = v[pos]
        if c:
            v = [(x - c * y) % p for x, y in zip(v, row)]
    lead = next((i for i, x in enumerate(v) if x), None)
    if lead is None:
        return False
    inv = pow(v[lead], p - 2, p) if p > 2 else v[lead]
    v = [(x * inv) % p for x in v]
    for pos, row in basis:
        c = row[lead]
        if c:
            row[:] = [(x - c * y) % p for x, y in zip(row, v)]
    basis.append((lead, v))
    basis.sort(key=lambda t: t[0])
    return True


def _subspace_key(basis: list[tuple[int, list[int]]]) -> tuple[tuple[int, ...], ...]:
    return tuple(tuple(row) for _, row in basis)


def _spin(vec, action_rows, p: int, n: int):
    """Smallest action-invariant subspace containing vec, as a canonical key.

    Worklist closure: every vector ever inserted is pushed once and its
    generator images are reduced against the growing basis.  The inserted
    vectors span the subspace, so checking their images suffices.  Returns
    None as an early exit when the spin fills the whole space.
    """
    basis: list[tuple[int, list[int]]] = []
    _rref_insert(basis, list(vec), p)
    queue = [list(vec)]
    while queue:
        w = queue.pop()
        for rows in action_rows:
            img = [sum(r[i] * w[i] for i in range(n)) % p for r in rows]
            if _rref_insert(basis, img, p):
                if len(basis) == n:
                    return None
                queue.append(img)
    return _subspace_key(basis)


def _projective_reps(n: int, p: int):
    """One representative per line of F_p^n: first nonzero coordinate is 1."""
    for lead in range(n):
        tail_len = n - lead - 1
        for tail in product(range(p), repeat=tail_len):
            yield (0,) * lead + (1,) + tail


def _join(a, b, p: int, n: int):
    basis: list[tuple[int, list[int]]] = []
    for row in a:
        _rref_insert(basis, list(row), p)
    for row in b:
        _rref_insert(basis, list(row), p)
    return _subspace_key(basis)


def _all_submodules(action_mats, p: int, n: int):
    """Every action-invariant subspace of F_p^n, as canonical echelon keys."""
    action_rows = [tuple(m.entries) for m in action_mats]
    full = _subspace_key([(i, [1 if j == i else 0 for j in range(n)]) for i in range(n)])
    cyclic = set()
    for vec in _projective_reps(n, p):
        key = _spin(vec, action_rows, p, n)
        cyclic.add(full if key is None else key)
    subs = set(cyclic)
    subs.add(())
    subs.add(full)
    frontier = list(subs)
    while frontier:
        new = []
        for a in frontier:
            for b in cyclic:
                j = _join(a, b, p, n)
                if j not in subs:
                    subs.add(j)
                    new.append(j)
        frontier = new
    return subs, full


_SUBMODULE_CACHE: dict = {}


def _submodules_for_action(action_mats, p: int, n: int, bounds: Bounds):
    if p**n > bounds.spinning_max_order:
        raise ScaleError("spinning-scale-exceeded: residue module is too large")
    key = (p, tuple(m.entries for m in action_mats))
    hit = _SUBMODULE_CACHE.get(key)
    if hit is None:
        hit = _all_submodules(action_mats, p, n)
        _SUBMODULE_CACHE[key] = hit
    return hit


def _residue_action(lattice: LatticeBasis, gens, p: int) -> list[IntMatrix]:
    acts = []
    for m in gens.mats:
        a = action_in_basis(lattice, m)
        if a is None:
            raise LatticeError("lattice is not stable under the given action")
        acts.append(IntMatrix([[x % p for x in row] for row in a.entries]))
    return acts


def _lift_subspace(lattice: LatticeBasis, key, p: int) -> LatticeBasis:
    """The lattice between pL and L whose image mod p is the given subspace."""
    n = lattice.dim
    cols = [list(lattice.hnf.apply(row)) for row in key]
    for j in range(n):
        cols.append([p * x for x in lattice.hnf.column(j)])
    h = hnf(IntMatrix.from_columns(cols))
    return LatticeBasis(h)


def _subspace_contains(big, small, p: int) -> bool:
    basis = [(next(i for i, x in enumerate(row) if x), list(row)) for row in big]
    for row in small:
        v = list(row)
        for pos, brow in basis:
            c = v[pos]
            if c:
                v = [(x - c * y) % p for x, y in zip(v, brow)]
        if any(v):
            return False
    return True


def _sorted_lattices(lats) -> list[LatticeBasis]:
    return sorted(lats, key=lambda l: l.key())


def maximal_sublattices_p(
    lattice: LatticeBasis, gens, p: int, bounds: Bounds = DEFAULT_BOUNDS
) -> list[LatticeBasis]:
    """All maximal stable sublattices N with pL contained in N.

    These correspond to the maximal invariant subspaces of the residue module
    L/pL, which are found by exhaustive spinning.  When the residue module is
    irreducible the only such sublattice is pL itself.
    """
    n = lattice.dim
    acts = _residue_action(lattice, gens, p)
    subs, full = _submodules_for_action(acts, p, n, bounds)
    proper = [s for s in subs if s != full]
    maximal = [
        s
        for s in proper
        if not any(len(o) > len(s) and _subspace_contains(o, s, p) for o in proper)
    ]
    return _sorted_lattices(_lift_subspace(lattice, s, p) for s in maximal)


def rad_p(lattice: LatticeBasis, gens, p: int, bounds: Bounds = DEFAULT_BOUNDS) -> LatticeBasis:
    """Intersection of all maximal stable sublattices above pL."""
    maximal = maximal_sublattices_p(lattice, gens, p, bounds)
    out = maximal[0]
    for m in maximal[1:]:
        out = lattice_intersect(out, m)
    return out


def phi_p(
    lattice: LatticeBasis, gens, p: int, bounds: Bounds = DEFAULT_BOUNDS
) -> list[LatticeBasis]:
    """All stable lattices between the radical and the lattice itself.

    These are the invariant subspaces of L/pL containing the image of the
    radical, lifted back to lattices.
    """
    n = lattice.dim
    acts = _residue_action(lattice, gens, p)
    subs, _full = _submodules_for_action(acts, p, n, bounds)
    radical = rad_p(lattice, gens, p, bounds)
    coords = solve_in_lattice(lattice.hnf, radical.hnf)
    rad_rows: list[tuple[int, list[int]]] = []
    for j in range(n):
        _rref_insert(rad_rows, [coords.entries[i][j] % p for i in range(n)], p)
    rad_key = _subspace_key(rad_rows)
    chosen = [s for s in subs if _subspace_contains(s, rad_key, p)]
    return _sorted_lattices(_lift_subspace(lattice, s, p) for s in chosen)


def phi_p_class(
    lattice: LatticeBasis, gens, p: int, j: int, bounds: Bounds = DEFAULT_BOUNDS
) -> list[LatticeBasis]:
    """Members of phi_p isomorphic to L(p^j); isomorphism is a scalar test here."""
    n = lattice.dim
    target = craig_lattice(n, p**j).basis
    return [
        member
        for member in phi_p(lattice, gens, p, bounds)
        if is_scalar_multiple(target, member) is not None
    ]


def mu_p(
    lattice: LatticeBasis, gens, p: int, target: LatticeBasis, bounds: Bounds = DEFAULT_BOUNDS
) -> int:
    """Moebius value of `target` in the poset of intersections of maximal sublattices.

    Sums (-1)^|J| over subsets J of the maximal sublattices whose intersection
    is exactly `target`; the empty intersection is the lattice itself.
    """
    if target not in set(phi_p(lattice, gens, p, bounds)):
        raise LatticeError("lattice lies outside the radical interval")
    maximal = maximal_sublattices_p(lattice, gens, p, bounds)
    total = 0
    for size in range(len(maximal) + 1):
        for subset in combinations(maximal, size):
            cur = lattice
            for m in subset:
                cur = lattice_intersect(cur, m)
            if cur == target:
                total += (-1) ** size
    return total


def enumerate_p_sublattices(
    lattice: LatticeBasis, gens, p: int, max_exp: int, bounds: Bounds = DEFAULT_BOUNDS
) -> dict[int, list[LatticeBasis]]:
    """All stable sublattices of index p^j for j <= max_exp, grouped by j.

    Breadth-first walk: every stable sublattice of p-power index sits at the
    bottom of a chain of maximal inclusions, so repeatedly expanding maximal
    stable sublattices and deduplicating by normal form reaches everything.
    """
    if max_exp < 0:
        raise ValueError("max_exp must be nonnegative")
    levels: dict[int, dict[tuple, LatticeBasis]] = {0: {lattice.key(): lattice}}
    for e in range(max_exp):
        for lat in levels.get(e, {}).values():
            for sub in maximal_sublattices_p(lat, gens, p, bounds):
                step = valuation(lattice_index(lat, sub), p)
                e2 = e + step
                if e2 > max_exp:
                    continue
                levels.setdefault(e2, {})[sub.key()] = sub
    return {e: _sorted_lattices(levels.get(e, {}).values()) for e in range(max_exp + 1)}


# ---------------------------------------------------------------------------
# Exhaustive census of sublattices of a fixed index.
#
# Sublattices of index m correspond one to one to canonical lower-triangular
# bases H: positive diagonal with product m, off-diagonal entries H[i][j]
# (j < i) reduced into [0, H[i][i]).  The census walks every such H and keeps
# the stable ones.  Stability of H is "each generator image of each basis
# column lies back in the column span", which forward-substitutes one row at
# a time; the walk commits one column at a time and prunes as soon as any
# partially substituted image fails a divisibility constraint, which is sound
# because later columns cannot repair an earlier failed row.
# ---------------------------------------------------------------------------


def _compositions(total: int, parts: int):
    if parts == 1:
        yield (total,)
        return
    for head in range(total + 1):
        for rest in _compositions(total - head, parts - 1):
            yield (head,) + rest


_RESOLVED = object()


def _stable_triangular_bases(action_rows, p: int, k: int, n: int) -> list[tuple]:
    """All stable canonical triangular bases of index p^k, as column tuples."""

    results: list[tuple] = []

    for shape in _compositions(k, n):
        diag = [p**e for e in shape]

        def advance(res, i, cols, t):
            # Forward-substitute rows i.. of the residual while the needed
            # columns are known or unused; park at the first unknown column
            # with a nonzero coefficient.
            r = list(res)
            while i < n:
                d = diag[i]
                ri = r[i]
                if ri % d:
                    return None
                c = ri // d
                if c == 0:
                    i += 1
                    continue
                if i <= t:
                    col = cols[i]
                    for ii in range(i, n):
                        r[ii] -= c * col[ii]
                    i += 1
                else:
                    return (tuple(r), i)
            return _RESOLVED

        def walk(t, cols, pending):
            free_rows = [i for i in range(t + 1, n) if diag[i] > 1]
            for choice in product(*(range(diag[i]) for i in free_rows)):
                col = [0] * n
                col[t] = diag[t]
                for idx, v in zip(free_rows, choice):
                    col[idx] = v
                col = tuple(col)
                newcols = cols + (col,)
                ok = True
                newpend = []
                for res, i in pending:
                    if i == t:
                        state = advance(res, i, newcols, t)
                        if state is None:
                            ok = False
                            break
                        if state is not _RESOLVED:
                            newpend.append(state)
                    else:
                        newpend.append((res, i))
                if ok:
                    for rows in action_rows:
                        image = tuple(
                            sum(row[j] * col[j] for j in range(t, n)) for row in rows
                        )
                        state = advance(image, 0, newcols, t)
                        if state is None:
                            ok = False
                            break
                        if state is not _RESOLVED:
                            newpend.append(state)
                if not ok:
                    continue
                if t + 1 == n:
                    if not newpend:
                        results.append(newcols)
                else:
                    walk(t + 1, newcols, tuple(newpend))

        walk(0, (), ())

    return results


def _conjugated_action_rows(lattice: LatticeBasis, gens) -> list[tuple]:
    rows = []
    for m in gens.mats:
        a = action_in_basis(lattice, m)
        if a is None:
            raise LatticeError("lattice is not stable under the given action")
        rows.append(a.entries)
    return rows


def _stable_sublattices_prime_power(
    lattice: LatticeBasis, action_rows, p: int, k: int
) -> list[LatticeBasis]:
    n = lattice.dim
    found = _stable_triangular_bases(action_rows, p, k, n)
    out = []
    for cols in found:
        ambient = [lattice.hnf.apply(col) for col in cols]
        out.append(LatticeBasis(IntMatrix.from_columns(ambient)))
    return out


def enumerate_index_sublattices(
    lattice: LatticeBasis, gens, m: int, bounds: Bounds = DEFAULT_BOUNDS
) -> list[LatticeBasis]:
    """All stable sublattices of exactly the given index, canonically sorted.

    The census runs prime by prime (a sublattice of composite index is the
    intersection of its prime-power parts, uniquely) and walks every canonical
    triangular basis of each prime-power index, keeping the stable ones.
    """
    if m < 1:
        raise ValueError("index must be positive")
    if m > bounds.index_enumeration_max:
        raise ScaleError("enumeration-scale-exceeded: index above configured bound")
    if m == 1:
        return [lattice]
    action_rows = _conjugated_action_rows(lattice, gens)
    partial = [lattice]
    for p, k in sorted(prime_factorization(m).items()):
        local = _stable_sublattices_prime_power(lattice, action_rows, p, k)
        if not local:
            return []
        partial = [lattice_intersect(x, y) for x in partial for y in local]
    return _sorted_lattices(partial)


def _all_triangular_bases(n: int, m: int):
    """Every canonical lower-triangular basis of index m (no stability filter)."""
    diags = [()]
    for _ in range(n):
        diags = [d + (x,) for d in diags for x in divisors(m)]
    for diag in diags:
        prod_diag = 1
        for x in diag:
            prod_diag *= x
        if prod_diag != m:
            continue
        free = [(i, j) for i in range(n) for j in range(i) if diag[i] > 1]
        for values in product(*(range(diag[i]) for i, _ in free)):
            rows = [[0] * n for _ in range(n)]
            for i in range(n):
                rows[i][i] = diag[i]
            for (i, j), v in zip(free, values):
                rows[i][j] = v
            yield IntMatrix(rows)


def enumerate_index_sublattices_naive(
    lattice: LatticeBasis, gens, m: int, bounds: Bounds = DEFAULT_BOUNDS
) -> list[LatticeBasis]:
    """Reference census: generate every triangular basis of index m, filter by
    stability.  Exponentially slower than the pruned walk; used to validate it."""
    if m > bounds.index_enumeration_max:
        raise ScaleError("enumeration-scale-exceeded: index above configured bound")
    n = lattice.dim
    out = []
    for h in _all_triangular_bases(n, m):
        ambient = LatticeBasis(IntMatrix.from_columns([lattice.hnf.apply(h.column(j)) for j in range(n)]))
        if is_g_stable(ambient, gens):
            out.append(ambient)
    return _sorted_lattices(out)


def classify_sublattice(sub: LatticeBasis, n: int, p: int) -> tuple[int, int]:
    """Write a stable p-power-index sublattice of L(1) as p^a L(p^b).

    The scalar part is the content of the normal form; the primitive part must
    equal some L(p^b) exactly.  Failure to classify signals a bug (or a
    non-stable input) and raises.
    """
    c = sub.content()
    a = valuation(c, p) if c > 1 else 0
    if p**a != c:
        raise LatticeError("content is not a power of the prime")
    primitive = (
        sub
        if a == 0
        else LatticeBasis(IntMatrix([[x // p**a for x in row] for row in sub.hnf.entries]))
    )
    b = 0
    while True:
        candidate = craig_lattice(n, p**b).basis
        if candidate == primitive:
            return (a, b)
        if candidate.determinant() > primitive.determinant():
            raise LatticeError("sublattice does not match any scaled representative")
        b += 1


def lattices_to_json(lats) -> list[dict]:
    return [matrix_to_json(l.hnf) for l in lats]
