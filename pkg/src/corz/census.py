"""Census of character-table zeros against core-indexed rows.

For each size n and modulus ell the census reports exact partition counts,
the proven zero lower bound (rows labeled by ell-cores vanish on every
column that is not ell-regular), and, under configurable caps, exhaustive
zero counts over full columns or over core-by-core blocks.  Output is
deterministic: CSV or JSON lines, byte-identical across reruns, with an
optional per-(n, ell) cache that never changes results.
"""

from __future__ import annotations

import hashlib
import json
import os
import random
import time
from collections.abc import Iterable, Sequence
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from pathlib import Path
from typing import IO

from .abacus import (
    Abacus,
    abacus_size,
    bead_jump_witness,
    count_cores,
    enumerate_cores,
    extremal_abacus,
    from_abacus,
    n_ell,
    search_max_regular_core,
    swap_columns,
    to_abacus,
)
from .characters import ColumnEvaluator, centralizer_order, dimension, mn_character
from .numtheory import (
    _is_prime,
    c2_closed,
    c3_closed,
    core_main_term,
    inv_alpha,
    sigma_twisted,
)
from .partitions import (
    _iter_partition_buffers,
    count_p,
    count_p_regular,
    enumerate_partitions,
    hook_multiset,
    is_regular,
)

DEFAULT_CAP_EXACT = 18
DEFAULT_CAP_STAR = 60

CSV_FIELDS = (
    "n",
    "ell",
    "p_n",
    "p_ell_n",
    "c_ell_n",
    "z_lower",
    "z_exact",
    "z_star_exact",
    "z_star_closed",
    "main_term_num",
    "main_term_den",
)


def z_lower_bound(n: int, ell: int) -> int:
    """(p(n) - p_ell(n)) * c_ell(n): vanishing pairs guaranteed by core rows
    meeting columns with a part divisible by ell."""
    return (count_p(n) - count_p_regular(n, ell)) * count_cores(n, ell)


def _zero_columns(n: int, ell: int) -> list[int]:
    # per-column zero counts over core rows, columns in reverse-lex order
    cores = list(enumerate_cores(n, ell, strategy="abacus"))
    if not cores:
        return [0] * count_p(n)
    hooks = [frozenset(hook_multiset(lam).counts) for lam in cores]
    out = []
    for mu in enumerate_partitions(n):
        col = ColumnEvaluator(mu)
        needed = set(mu.parts)
        zeros = 0
        for lam, hset in zip(cores, hooks):
            if not needed <= hset:
                zeros += 1
            elif col.value(lam) == 0:
                zeros += 1
        out.append(zeros)
    return out


def z_exact(n: int, ell: int, cap: int = DEFAULT_CAP_EXACT) -> int:
    """Exhaustive count of zeros chi_lam(mu) = 0 with lam an ell-core of n,
    over all columns mu of n."""
    if n > cap:
        raise ValueError(
            f"exact census cap exceeded: n={n} > cap={cap}; raise --cap-exact to allow"
        )
    return sum(_zero_columns(n, ell))


def z_star_exact(n: int, ell: int, cap: int = DEFAULT_CAP_STAR) -> int:
    """Exhaustive count of zeros over ordered pairs of ell-cores of n."""
    if n > cap:
        raise ValueError(
            f"exact star census cap exceeded: n={n} > cap={cap}; raise --cap-star to allow"
        )
    cores = list(enumerate_cores(n, ell, strategy="abacus"))
    hooks = [frozenset(hook_multiset(lam).counts) for lam in cores]
    zeros = 0
    for mu in cores:
        col = ColumnEvaluator(mu)
        needed = set(mu.parts)
        for lam, hset in zip(cores, hooks):
            if not needed <= hset:
                zeros += 1
            elif col.value(lam) == 0:
                zeros += 1
    return zeros


def z_star_closed(n: int, ell: int) -> int:
    """c_ell(n)^2, the star count once every core row vanishes on every core
    column; valid only above the regular-core bound n_ell."""
    bound = n_ell(ell)
    if n <= bound:
        raise ValueError(
            f"closed form valid only above the regular-core bound: "
            f"need n > {bound} for ell={ell}"
        )
    return count_cores(n, ell) ** 2


def z_all_exact(n: int, cap: int = DEFAULT_CAP_EXACT) -> int:
    """Zeros over the whole character table of S_n (no core restriction)."""
    if n > cap:
        raise ValueError(
            f"exact census cap exceeded: n={n} > cap={cap}; raise --cap-exact to allow"
        )
    lams = list(enumerate_partitions(n))
    hooks = [frozenset(hook_multiset(lam).counts) for lam in lams]
    zeros = 0
    for mu in lams:
        col = ColumnEvaluator(mu)
        needed = set(mu.parts)
        for lam, hset in zip(lams, hooks):
            if not needed <= hset:
                zeros += 1
            elif col.value(lam) == 0:
                zeros += 1
    return zeros


# ---------------------------------------------------------------------------
# records and sweeps


@dataclass(frozen=True)
class CensusConfig:
    """Sweep bounds and output policy for run_census."""

    n_min: int = 0
    n_max: int = 14
    ells: tuple[int, ...] = (2, 3, 5, 7)
    cap_exact: int = DEFAULT_CAP_EXACT
    cap_star: int = DEFAULT_CAP_STAR
    jobs: int = 1
    fmt: str = "csv"
    out: Path | None = None
    cache_dir: Path | None = None
    with_z_all: bool = False


@dataclass
class CensusRecord:
    n: int
    ell: int
    p_n: int
    p_ell_n: int
    c_ell_n: int
    z_lower: int
    z_exact: int | None = None
    z_star_exact: int | None = None
    z_star_closed: int | None = None
    main_term_num: int | None = None
    main_term_den: int | None = None
    z_all: int | None = None

    def csv_row(self, with_z_all: bool = False) -> str:
        vals = [getattr(self, name) for name in CSV_FIELDS]
        if with_z_all:
            vals.append(self.z_all)
        return ",".join("" if v is None else str(v) for v in vals)

    def json_obj(self) -> dict:
        obj: dict = {"n": self.n, "ell": self.ell}
        for name in CSV_FIELDS[2:]:
            v = getattr(self, name)
            obj[name] = None if v is None else str(v)
        if self.z_all is not None:
            obj["z_all"] = str(self.z_all)
        return obj


def _payload_digest(payload: dict) -> str:
    blob = json.dumps(payload, sort_keys=True, separators=(",", ":")).encode()
    return hashlib.sha256(blob).hexdigest()


def _cache_path(cache_dir: Path, n: int, ell: int) -> Path:
    return Path(cache_dir) / f"census-{ell}-{n}.json"


def _load_cache(path: Path) -> dict:
    if not path.exists():
        return {}
    doc = json.loads(path.read_text(encoding="utf-8"))
    if doc.get("format") != 1:
        raise RuntimeError(f"unsupported census cache format in {path}")
    payload = doc.get("payload", {})
    if doc.get("sha256") != _payload_digest(payload):
        raise RuntimeError(f"census cache file corrupt (checksum mismatch): {path}")
    return payload


def _store_cache(path: Path, n: int, ell: int, payload: dict) -> None:
    doc = {
        "format": 1,
        "n": n,
        "ell": ell,
        "payload": payload,
        "sha256": _payload_digest(payload),
    }
    path.parent.mkdir(parents=True, exist_ok=True)
    tmp = path.with_suffix(".tmp")
    tmp.write_text(json.dumps(doc, sort_keys=True) + "\n", encoding="utf-8")
    os.replace(tmp, path)


def build_record(
    n: int,
    ell: int,
    cap_exact: int = DEFAULT_CAP_EXACT,
    cap_star: int = DEFAULT_CAP_STAR,
    cache_dir: Path | None = None,
    with_z_all: bool = False,
) -> CensusRecord:
    """One census row; caches the expensive exhaustive counts when a cache
    directory is given (the cache is an optimization only)."""
    rec = CensusRecord(
        n=n,
        ell=ell,
        p_n=count_p(n),
        p_ell_n=count_p_regular(n, ell),
        c_ell_n=count_cores(n, ell),
        z_lower=z_lower_bound(n, ell),
    )
    payload: dict = {}
    path: Path | None = None
    if cache_dir is not None:
        path = _cache_path(cache_dir, n, ell)
        payload = _load_cache(path)
    dirty = False
    if n <= cap_exact:
        cols = payload.get("z_exact_columns")
        if cols is None:
            cols = _zero_columns(n, ell)
            payload["z_exact_columns"] = cols
            dirty = True
        rec.z_exact = sum(cols)
        assert rec.z_exact >= rec.z_lower, (n, ell, rec.z_exact, rec.z_lower)
    if n <= cap_star:
        star = payload.get("z_star_exact")
        if star is None:
            star = z_star_exact(n, ell, cap=cap_star)
            payload["z_star_exact"] = star
            dirty = True
        rec.z_star_exact = star
    if n > n_ell(ell):
        rec.z_star_closed = z_star_closed(n, ell)
        if rec.z_star_exact is not None:
            assert rec.z_star_exact == rec.z_star_closed, (n, ell)
    # the analytic constant needs the quadratic character, so primes only
    if ell >= 5 and _is_prime(ell):
        main = core_main_term(n, ell) * count_p(n)
        rec.main_term_num = main.numerator
        rec.main_term_den = main.denominator
    if with_z_all and n <= cap_exact:
        za = payload.get("z_all_exact")
        if za is None:
            za = z_all_exact(n, cap=cap_exact)
            payload["z_all_exact"] = za
            dirty = True
        rec.z_all = za
    if path is not None and dirty:
        _store_cache(path, n, ell, payload)
    return rec


def _record_task(args: tuple[int, int, int, int, str | None, bool]) -> CensusRecord:
    n, ell, cap_exact, cap_star, cache_dir, with_z_all = args
    return build_record(
        n, ell, cap_exact, cap_star, Path(cache_dir) if cache_dir else None, with_z_all
    )


def run_census(config: CensusConfig) -> list[CensusRecord]:
    """All records of the sweep in (n, ell) order; writes config.out if set.

    Worker count config.jobs shards record computation across processes;
    workers share nothing and the writer orders results, so output does not
    depend on scheduling.
    """
    grid = [
        (n, ell, config.cap_exact, config.cap_star,
         str(config.cache_dir) if config.cache_dir else None, config.with_z_all)
        for n in range(config.n_min, config.n_max + 1)
        for ell in sorted(set(config.ells))
    ]
    if config.jobs > 1 and len(grid) > 1:
        with ProcessPoolExecutor(max_workers=config.jobs) as pool:
            records = list(pool.map(_record_task, grid))
    else:
        records = [_record_task(task) for task in grid]
    records.sort(key=lambda r: (r.n, r.ell))
    if config.out is not None:
        with open(config.out, "w", encoding="utf-8", newline="") as fh:
            write_records(records, config.fmt, fh)
    return records


def write_records(records: Iterable[CensusRecord], fmt: str, fh: IO[str]) -> None:
    """CSV with the fixed header, or one JSON object per line; counts in
    JSON are decimal strings so arbitrary precision survives parsers.

    The z_all column appears only when some record carries it, keeping the
    default schema stable.
    """
    records = list(records)
    with_z_all = any(r.z_all is not None for r in records)
    if fmt == "csv":
        header = CSV_FIELDS + ("z_all",) if with_z_all else CSV_FIELDS
        fh.write(",".join(header) + "\n")
        for rec in records:
            fh.write(rec.csv_row(with_z_all) + "\n")
    elif fmt == "json":
        for rec in records:
            fh.write(json.dumps(rec.json_obj(), separators=(", ", ": ")) + "\n")
    else:
        raise ValueError(f"unknown output format {fmt!r}; use csv or json")


# ---------------------------------------------------------------------------
# verification suites


@dataclass
class Check:
    name: str
    passed: bool
    detail: str = ""
    seconds: float = 0.0


@dataclass
class Report:
    suite: str
    checks: list[Check] = field(default_factory=list)
    seconds: float = 0.0

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    def lines(self) -> list[str]:
        out = []
        for c in self.checks:
            mark = "ok  " if c.passed else "FAIL"
            tail = f" [{c.detail}]" if c.detail and not c.passed else ""
            out.append(f"{mark} {self.suite}: {c.name} ({c.seconds:.2f}s){tail}")
        return out

    def to_json(self) -> dict:
        return {
            "suite": self.suite,
            "passed": self.passed,
            "seconds": round(self.seconds, 3),
            "checks": [
                {
                    "name": c.name,
                    "passed": c.passed,
                    "detail": c.detail,
                    "seconds": round(c.seconds, 3),
                }
                for c in self.checks
            ],
        }


def _run_check(checks: list[Check], name: str, fn) -> None:
    t0 = time.perf_counter()
    try:
        fn()
        passed, detail = True, ""
    except AssertionError as exc:
        passed, detail = False, str(exc)
    except Exception as exc:
        passed, detail = False, f"{type(exc).__name__}: {exc}"
    checks.append(Check(name, passed, detail, time.perf_counter() - t0))


def _suite_constants(checks: list[Check]) -> None:
    frozen = {5: 1, 7: 8, 11: 1275, 13: 33463}

    def check(ell: int, expected: int):
        def body():
            got = inv_alpha(ell)
            assert got == expected, f"inv_alpha({ell}) = {got}, expected {expected}"

        return body

    for ell, expected in frozen.items():
        _run_check(
            checks,
            f"inv_alpha({ell}) dual-route value {expected}",
            check(ell, expected),
        )


def _suite_closed_forms(checks: list[Check]) -> None:
    def two_core():
        for n in range(501):
            assert c2_closed(n) == count_cores(n, 2), f"n={n}"

    def three_core():
        for n in range(501):
            assert c3_closed(n) == count_cores(n, 3), f"n={n}"

    def five_core():
        for n in range(301):
            assert sigma_twisted(n + 1, 5) == count_cores(n, 5), f"n={n}"

    _run_check(checks, "two-core indicator matches series for n <= 500", two_core)
    _run_check(checks, "three-core divisor sum matches series for n <= 500", three_core)
    _run_check(checks, "five-core twisted divisor sum matches series for n <= 300", five_core)


def _suite_theorem2(checks: list[Check]) -> None:
    window = range(n_ell(3) + 1, 61)

    def pairs_vanish():
        for n in window:
            cores = list(enumerate_cores(n, 3, strategy="abacus"))
            for mu in cores:
                col = ColumnEvaluator(mu)
                for lam in cores:
                    v = col.value(lam)
                    assert v == 0, f"chi_{lam.parts}{mu.parts} = {v}"

    def star_matches_square():
        for n in window:
            got = z_star_exact(n, 3)
            want = z_star_closed(n, 3)
            assert got == want, f"n={n}: {got} != {want}"

    _run_check(checks, "every ordered 3-core pair vanishes on (16, 60]", pairs_vanish)
    _run_check(checks, "star census equals squared core count on (16, 60]", star_matches_square)


def _suite_lemma1(checks: list[Check]) -> None:
    ells = (2, 3, 5, 7)

    def exact_dominates():
        for ell in ells:
            for n in range(15):
                ze = z_exact(n, ell)
                zl = z_lower_bound(n, ell)
                assert ze >= zl, f"n={n} ell={ell}: {ze} < {zl}"

    def core_rows_vanish():
        for ell in ells:
            for n in range(13):
                cores = list(enumerate_cores(n, ell, strategy="abacus"))
                if not cores:
                    continue
                for mu in enumerate_partitions(n):
                    if is_regular(mu, ell):
                        continue
                    col = ColumnEvaluator(mu)
                    for lam in cores:
                        v = col.value(lam)
                        assert v == 0, f"chi_{lam.parts}{mu.parts} = {v}"

    _run_check(checks, "exhaustive zeros dominate the lower bound for n <= 14", exact_dominates)
    _run_check(checks, "core rows vanish on non-regular columns for n <= 12", core_rows_vanish)


def _suite_orthogonality(checks: list[Check]) -> None:
    def column_norms():
        for n in range(11):
            lams = list(enumerate_partitions(n))
            for mu in lams:
                col = ColumnEvaluator(mu)
                total = sum(col.value(lam) ** 2 for lam in lams)
                want = centralizer_order(mu)
                assert total == want, f"mu={mu.parts}: {total} != {want}"

    def identity_column():
        for n in range(13):
            col = ColumnEvaluator([1] * n)
            for lam in enumerate_partitions(n):
                v = col.value(lam)
                want = dimension(lam)
                assert v == want, f"lam={lam.parts}: {v} != {want}"

    def closed_rows():
        for n in range(11):
            for mu in enumerate_partitions(n):
                assert mn_character((n,) if n else (), mu) == 1, f"mu={mu.parts}"
                sign = -1 if (n - len(mu.parts)) % 2 else 1
                got = mn_character([1] * n, mu)
                assert got == sign, f"mu={mu.parts}: {got} != {sign}"

    _run_check(checks, "column norms equal centralizer orders for n <= 10", column_norms)
    _run_check(checks, "identity column equals hook-length dimension for n <= 12", identity_column)
    _run_check(checks, "trivial and sign rows match closed forms for n <= 10", closed_rows)


def _count_cores_filter_pass(n: int, ells: Sequence[int]) -> dict[int, int]:
    # one reverse-lex sweep, testing the beta-set closure for every modulus
    counts = dict.fromkeys(ells, 0)
    for buf in _iter_partition_buffers(n):
        s = len(buf)
        beta = [p + s - 1 - i for i, p in enumerate(buf)]
        bs = set(beta)
        for ell in ells:
            for b in beta:
                if b >= ell and b - ell not in bs:
                    break
            else:
                counts[ell] += 1
    return counts


def _random_canonical_abacus(rng: random.Random) -> Abacus:
    ell = rng.choice((3, 5, 7, 11))
    cols = (0,) + tuple(rng.randrange(0, 8) for _ in range(ell - 1))
    return Abacus(ell, cols)


def _suite_abacus(checks: list[Check]) -> None:
    ells = (2, 3, 5, 7)

    def roundtrip():
        for ell in ells:
            for n in range(41):
                for lam in enumerate_cores(n, ell, strategy="abacus"):
                    back = from_abacus(to_abacus(lam, ell))
                    assert back == lam, f"ell={ell}: {lam.parts} -> {back.parts}"

    def counts_match():
        for n in range(61):
            filtered = _count_cores_filter_pass(n, ells)
            for ell in ells:
                via_abacus = sum(1 for _ in enumerate_cores(n, ell, strategy="abacus"))
                series = count_cores(n, ell)
                assert filtered[ell] == series, f"filter n={n} ell={ell}"
                assert via_abacus == series, f"abacus n={n} ell={ell}"

    def swaps_grow():
        rng = random.Random(41)
        done = 0
        while done < 500:
            ab = _random_canonical_abacus(rng)
            pairs = [
                (i, j)
                for i in range(1, ab.ell)
                for j in range(i + 1, ab.ell)
                if ab.cols[j] < ab.cols[i]
            ]
            if not pairs:
                continue
            i, j = rng.choice(pairs)
            bigger = swap_columns(ab, i, j)
            assert abacus_size(bigger) > abacus_size(ab), f"{ab} ({i},{j})"
            done += 1

    def jumps_name_multiples():
        rng = random.Random(43)
        done = 0
        while done < 500:
            ell = rng.choice((3, 5, 7))
            k = rng.randrange(0, 4)
            cols = [0] + [
                rng.randrange(k + ell, k + ell + 4)
                if rng.random() < 0.5
                else rng.randrange(0, k + 1)
                for _ in range(ell - 1)
            ]
            if not any(b >= k + ell for b in cols[1:]):
                continue
            ab = Abacus(ell, tuple(cols))
            witness = bead_jump_witness(ab)
            assert witness is not None, f"{ab}"
            j, part = witness
            assert 1 <= j < ell and part > 0 and part % ell == 0, f"{ab}: {witness}"
            assert part in from_abacus(ab).parts, f"{ab}: {witness}"
            done += 1

    def extremal_bound():
        assert n_ell(3) == 16, n_ell(3)
        for ell in ells:
            ab = extremal_abacus(ell)
            lam = from_abacus(ab)
            assert abacus_size(ab) == n_ell(ell) == lam.n, f"ell={ell}"
            assert ab.beads() == ell * (ell - 1) ** 2 // 2, f"ell={ell}"
            # witness-free: the defining property of the maximizer
            assert bead_jump_witness(ab) is None, f"ell={ell}"
            assert to_abacus(lam, ell) == ab, f"ell={ell}"
        # brute force at ell=3: no witness-free abacus beats the bound
        for b1 in range(9):
            for b2 in range(9):
                ab = Abacus(3, (0, b1, b2))
                if bead_jump_witness(ab) is None:
                    assert abacus_size(ab) <= 16, f"{ab}"

    def no_regular_core_above():
        best = search_max_regular_core(3, 200, strategy="abacus")
        assert best == 10, f"largest 3-regular 3-core at n={best}, expected 10"

    _run_check(checks, "abacus round-trip on every core of n <= 40", roundtrip)
    _run_check(checks, "filter, abacus, and series counts agree for n <= 60", counts_match)
    _run_check(checks, "column swaps strictly grow size (500 random)", swaps_grow)
    _run_check(checks, "bead-jump witnesses name a multiple of ell (500 random)", jumps_name_multiples)
    _run_check(checks, "extremal abacus realizes the regular-core bound", extremal_bound)
    _run_check(checks, "no 3-regular 3-core in (10, 200]", no_regular_core_above)


_SUITES = {
    "constants": _suite_constants,
    "closed-forms": _suite_closed_forms,
    "theorem2": _suite_theorem2,
    "lemma1": _suite_lemma1,
    "orthogonality": _suite_orthogonality,
    "abacus": _suite_abacus,
}


def verify(suite: str) -> Report:
    """Run one named self-check suite and report per-check outcomes."""
    fn = _SUITES.get(suite)
    if fn is None:
        raise ValueError(
            f"unknown suite {suite!r}; available: {', '.join(sorted(_SUITES))}"
        )
    checks: list[Check] = []
    t0 = time.perf_counter()
    fn(checks)
    return Report(suite, checks, time.perf_counter() - t0)


def available_suites() -> tuple[str, ...]:
    return tuple(sorted(_SUITES))
