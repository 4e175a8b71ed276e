"""Exhaustive search for homaloidal types and the named infinite families."""
from __future__ import annotations

import hashlib
import json
import logging
from concurrent.futures import ThreadPoolExecutor
from pathlib import Path
from typing import Iterator

from .errors import PreconditionError
from .lattice import HomaloidalType, hudson_test

log = logging.getLogger(__name__)

DEFAULT_CACHE_DIR = Path(".cremona-cache")


def _completions(cap: int, s: int, q: int) -> Iterator[tuple[int, ...]]:
    """Descending tuples with entries in [1, cap], sum ``s``, square sum ``q``."""
    if s == 0:
        if q == 0:
            yield ()
        return
    # entries in [1, m] force s <= q <= m*s
    for m in range(min(cap, s), 0, -1):
        s2, q2 = s - m, q - m * m
        if q2 < 0 or s2 > q2 or q2 > m * s2:
            continue
        for rest in _completions(m, s2, q2):
            yield (m, *rest)


def _branch(d: int, m1: int) -> list[HomaloidalType]:
    s, q = 3 * (d - 1) - m1, d * d - 1 - m1 * m1
    if q < 0 or s > q or q > m1 * s:
        return []
    return [HomaloidalType(d, (m1, *rest)) for rest in _completions(m1, s, q)]


def _search(d: int, threads: int) -> list[HomaloidalType]:
    if d < 1:
        raise PreconditionError(f"degree must be positive, got {d}")
    if d == 1:
        return [HomaloidalType(1, ())]
    tops = range(d - 1, 0, -1)
    if threads > 1:
        with ThreadPoolExecutor(max_workers=threads) as ex:
            parts = list(ex.map(lambda m1: _branch(d, m1), tops))
    else:
        parts = [_branch(d, m1) for m1 in tops]
    out = [t for part in parts for t in part]
    out.sort(key=HomaloidalType.sort_key)
    return out


def _cache_path(cache_dir: Path, kind: str, d: int) -> Path:
    return Path(cache_dir) / f"{kind}-{d}.json"


def _read_cache(path: Path) -> list[HomaloidalType] | None:
    sums = path.with_name(path.name + ".sha256")
    try:
        raw = path.read_bytes()
        if hashlib.sha256(raw).hexdigest() != sums.read_text().strip():
            log.info("checksum mismatch for %s, recomputing", path)
            return None
        return [HomaloidalType.from_json(o) for o in json.loads(raw)]
    except (OSError, ValueError, KeyError, TypeError):
        return None


def _write_cache(path: Path, types: list[HomaloidalType]) -> None:
    path.parent.mkdir(parents=True, exist_ok=True)
    raw = json.dumps([t.to_json() for t in types], separators=(",", ":")).encode()
    path.write_bytes(raw)
    path.with_name(path.name + ".sha256").write_text(hashlib.sha256(raw).hexdigest() + "\n")


def _cached(kind: str, d: int, cache_dir, compute) -> list[HomaloidalType]:
    if cache_dir is None:
        return compute()
    path = _cache_path(cache_dir, kind, d)
    hit = _read_cache(path)
    if hit is not None:
        return hit
    types = compute()
    _write_cache(path, types)
    return types


def enumerate_noether(d: int, threads: int = 1, cache_dir=None) -> list[HomaloidalType]:
    """All solutions of the Noether equalities with positive multiplicities.

    Bounded by ``m_1 <= d - 1``; returned in lexicographically descending
    order of the multiplicity vector.
    """
    return _cached("noether", d, cache_dir, lambda: _search(d, threads))


def enumerate_proper(d: int, threads: int = 1, cache_dir=None) -> list[HomaloidalType]:
    """The Hudson-proper subset of :func:`enumerate_noether`."""
    def compute():
        return [t for t in enumerate_noether(d, threads, cache_dir) if hudson_test(t).proper]
    return _cached("proper", d, cache_dir, compute)


def family_de_jonquieres(d: int) -> HomaloidalType:
    """(d; d-1, 1^(2d-2))."""
    if d < 2:
        raise PreconditionError("de Jonquieres types need d >= 2")
    return HomaloidalType(d, (d - 1,) + (1,) * (2 * d - 2))


def family_sub2(d: int) -> HomaloidalType:
    """(d; d-2, 2^(d-2), 1^3)."""
    if d < 4:
        raise PreconditionError("(d; d-2, 2^(d-2), 1^3) needs d >= 4")
    return HomaloidalType(d, (d - 2,) + (2,) * (d - 2) + (1, 1, 1))


def family_3m(m: int) -> tuple[HomaloidalType, HomaloidalType, HomaloidalType]:
    """The proper types of degrees 3m, 3m+1 and 3m+2 without a pair summing to d-1."""
    if m < 3:
        raise PreconditionError("the 3m-families need m >= 3")
    return (
        HomaloidalType(3 * m, (3 * m - 6,) + (6,) * (m - 3) + (4, 4, 4, 3, 3, 2, 1)),
        HomaloidalType(3 * m + 1, (3 * m - 5,) + (6,) * (m - 2) + (4, 3, 3, 3, 1, 1, 1, 1)),
        HomaloidalType(3 * m + 2, (3 * m - 4,) + (6,) * (m - 2) + (4, 4, 3, 3, 2, 2, 1)),
    )


def named_family_types(d: int) -> list[HomaloidalType]:
    """Family members of degree ``d`` (de Jonquieres, sub2, 3m)."""
    out = []
    if d >= 2:
        out.append(family_de_jonquieres(d))
    if d >= 4:
        out.append(family_sub2(d))
    if d >= 9:
        out.append(family_3m(d // 3)[d % 3])
    return out
