"""Isomorphism-free generation of small semigroups and monoids.

Tables are filled cell by cell in row-major order. Each assignment is checked
against every associativity triple it completes, and against every
relabeling in the symmetry group: if some relabeling already agrees with the
partial table on a prefix and is smaller at the next cell, no completion can
be the lexicographically minimal representative and the branch is cut. The
tables that survive are exactly the canonical ones, emitted in lexicographic
order.
"""

from collections.abc import Iterator, Sequence
from concurrent.futures import ProcessPoolExecutor

import numpy as np

from polyadic_semigroups.config import get_config
from polyadic_semigroups.core.associativity import associative_mask
from polyadic_semigroups.core.errors import EnumerationCapError
from polyadic_semigroups.core.tables import BinaryOpDesc, FiniteNaryOp, IntArray, MonoidDesc
from polyadic_semigroups.enumerate.canonical import permutation_group, source_positions

UNKNOWN = -1
Table = list[list[int]]
Group = list[tuple[list[int], list[int]]]


def _triples_ok(t: Table, k: int, x: int, y: int) -> bool:
    """Every fully known triple that uses the cell (x, y) is associative."""
    v = t[x][y]
    for z in range(k):
        # (x, y, z)
        lhs, yz = t[v][z], t[y][z]
        if lhs >= 0 and yz >= 0:
            rhs = t[x][yz]
            if rhs >= 0 and rhs != lhs:
                return False
        # (z, x, y)
        zx, rhs = t[z][x], t[z][v]
        if zx >= 0 and rhs >= 0:
            lhs = t[zx][y]
            if lhs >= 0 and lhs != rhs:
                return False
    for p in range(k):
        for q in range(k):
            # (p, q, y) with p o q = x
            if t[p][q] == x:
                qy = t[q][y]
                if qy >= 0:
                    rhs = t[p][qy]
                    if rhs >= 0 and rhs != v:
                        return False
            # (x, p, q) with p o q = y
            if t[p][q] == y:
                xp = t[x][p]
                if xp >= 0:
                    lhs = t[xp][q]
                    if lhs >= 0 and lhs != v:
                        return False
    return True


def _minimal_so_far(t: Table, k: int, cell: int, group: Group) -> bool:
    """False if some relabeling is provably smaller on positions 0..cell."""
    for sigma, inv in group:
        for p in range(cell + 1):
            i, j = divmod(p, k)
            src = t[inv[i]][inv[j]]
            if src < 0:
                break
            image = sigma[src]
            current = t[i][j]
            if image < current:
                return False
            if image > current:
                break
    return True


def _generate_branch(
    order: int, domains: Sequence[Sequence[int]], fixed: tuple[int, ...]
) -> list[IntArray]:
    return list(_generate_serial(order, domains, fixed))


def generate_binary(
    order: int,
    domains: Sequence[Sequence[int]],
    fixed: tuple[int, ...] = (),
    *,
    jobs: int = 1,
) -> Iterator[IntArray]:
    """Canonical associative completions, one flat table per class.

    `domains[c]` lists the admissible values of flat cell c; a singleton is a
    pre-filled cell. The symmetry group is every permutation fixing `fixed`,
    which must preserve the domains.

    With jobs > 1 each value of the first free cell is generated in its own
    process. Branches are merged in value order, so the output matches the
    serial run table for table.
    """
    free = next((c for c, dom in enumerate(domains) if len(dom) > 1), None)
    if jobs <= 1 or free is None:
        yield from _generate_serial(order, domains, fixed)
        return
    branches = []
    for v in domains[free]:
        branch = list(domains)
        branch[free] = (v,)
        branches.append(branch)
    seen: set[bytes] = set()
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        futures = [pool.submit(_generate_branch, order, b, fixed) for b in branches]
        for future in futures:
            for table in future.result():
                # tables are canonical representatives, so equal bytes means the same class
                key = table.tobytes()
                if key not in seen:
                    seen.add(key)
                    yield table


def _generate_serial(
    order: int, domains: Sequence[Sequence[int]], fixed: tuple[int, ...]
) -> Iterator[IntArray]:
    k = order
    perms = permutation_group(k, fixed)
    group = list(zip(perms.tolist(), np.argsort(perms, axis=1).tolist()))
    t: Table = [[UNKNOWN] * k for _ in range(k)]
    prefilled = [len(d) == 1 for d in domains]
    for c, dom in enumerate(domains):
        if len(dom) == 1:
            t[c // k][c % k] = dom[0]

    def dfs(c: int) -> Iterator[IntArray]:
        if c == k * k:
            yield np.array(t, dtype=np.int64).reshape(-1)
            return
        x, y = divmod(c, k)
        if prefilled[c]:
            if _triples_ok(t, k, x, y) and _minimal_so_far(t, k, c, group):
                yield from dfs(c + 1)
            return
        for v in domains[c]:
            t[x][y] = v
            if _triples_ok(t, k, x, y) and _minimal_so_far(t, k, c, group):
                yield from dfs(c + 1)
        t[x][y] = UNKNOWN

    yield from dfs(0)


def _check_cap(what: str, order: int, cap: int) -> None:
    if order < 1:
        raise ValueError(f"order must be positive, got {order}")
    if order > cap:
        raise EnumerationCapError(what, order, cap)


def enumerate_semigroups(
    order: int, *, max_order: int | None = None, jobs: int = 1
) -> Iterator[BinaryOpDesc]:
    """All semigroups of the given order up to isomorphism, in canonical order."""
    _check_cap("semigroup enumeration", order, max_order or get_config().semigroup_max_order)
    domains = [range(order)] * (order * order)
    for table in generate_binary(order, domains, jobs=jobs):
        yield BinaryOpDesc(order, table)


def monoid_domains(order: int) -> list[Sequence[int]]:
    """Free cells everywhere except the row and column of e = order-1."""
    e = order - 1
    domains: list[Sequence[int]] = []
    for x in range(order):
        for y in range(order):
            if x == e:
                domains.append((y,))
            elif y == e:
                domains.append((x,))
            else:
                domains.append(range(order))
    return domains


def enumerate_monoids(
    order: int, *, max_order: int | None = None, jobs: int = 1
) -> Iterator[MonoidDesc]:
    """All monoids up to isomorphism, neutral element at index order-1."""
    _check_cap("monoid enumeration", order, max_order or get_config().monoid_max_order)
    domains = monoid_domains(order)
    for table in generate_binary(order, domains, fixed=(order - 1,), jobs=jobs):
        yield MonoidDesc(BinaryOpDesc(order, table), order - 1)


def w_shape_domains(order: int) -> list[Sequence[int]]:
    """Domains for monoids in standard W-placement: S = 0..s-1, a = s, e = s+1.

    S o S, a * S and S * a stay inside S; a * a = e; e is neutral.
    """
    s = order - 2
    a, e = s, s + 1
    core = range(s)
    domains: list[Sequence[int]] = []
    for x in range(order):
        for y in range(order):
            if x == e:
                domains.append((y,))
            elif y == e:
                domains.append((x,))
            elif x == a and y == a:
                domains.append((e,))
            else:
                domains.append(core)
    return domains


def enumerate_w_shaped(order: int, *, jobs: int = 1) -> Iterator[MonoidDesc]:
    """Monoids in standard W-placement, up to relabeling of S."""
    if order < 2:
        return
    s = order - 2
    for table in generate_binary(order, w_shape_domains(order), fixed=(s, s + 1), jobs=jobs):
        yield MonoidDesc(BinaryOpDesc(order, table), s + 1)


def enumerate_associative_nary(order: int, arity: int) -> Iterator[FiniteNaryOp]:
    """Associative arity-n tables up to isomorphism, by backtracking.

    Each node checks the identity instances the partial table already
    determines, then the minimal-image condition over all relabelings.
    """
    k = order
    cells = k**arity
    perms = permutation_group(k)
    src = source_positions(k, arity)
    table = np.full(cells, UNKNOWN, dtype=np.int64)

    def still_minimal(c: int) -> bool:
        known = table[src[:, : c + 1]]
        mapped = np.take_along_axis(perms, np.maximum(known, 0), axis=1)
        images = np.where(known >= 0, mapped, UNKNOWN)
        diff = images != table[None, : c + 1]
        has = diff.any(axis=1)
        first = diff.argmax(axis=1)
        value = images[np.arange(len(perms)), first]
        return not bool(np.any(has & (value >= 0) & (value < table[first])))

    def dfs(c: int) -> Iterator[FiniteNaryOp]:
        if c == cells:
            yield FiniteNaryOp(k, arity, table.copy())
            return
        for v in range(k):
            table[c] = v
            if associative_mask(table.reshape(1, -1), k, arity)[0] and still_minimal(c):
                yield from dfs(c + 1)
        table[c] = UNKNOWN

    yield from dfs(0)
