"""Exhaustive search driver, cross-verification harness, and report formats.

Each search enumerates every m-bit coefficient pattern (optionally weight
filtered), applies the kind's predicate chain, and emits reports sorted
by (m, canonical orbit minimum). Work is partitioned by fixing the top
bits of the candidate pattern into 2^w shards; shard results are merged
single-threaded and re-sorted, so output is byte-identical for any
worker count. Survivors are cross-verified against the linear_code
oracle per the oracle policy; any disagreement aborts the run naming
the counterexample.

Extremality of a self-dual candidate is routed by (m, weight) to the
matching theorem predicate; (m, weight) pairs no theorem covers fall
back to the minimum-distance oracle and are tagged "oracle_only".
"""

from __future__ import annotations

import json
import multiprocessing
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field

from . import bordered, dc_codes, linear_code
from .gf2ring import _conj_bits, _mul_bits, parse_poly_text, poly_text

KINDS = ("selfdual_dc", "extremal_dc", "lcd_dc", "bordered_selfdual", "bordered_lcd")
DC_KINDS = ("selfdual_dc", "extremal_dc", "lcd_dc")
ORACLE_POLICIES = ("auto", "always", "spot", "off")
OUTPUT_FORMATS = ("csv", "json")

DC_M_BUDGET = 22
BORDERED_M_BUDGET = 13
SPOT_STRIDE = 64
ORACLE_ALWAYS_MAX_M = 16

CSV_HEADER = "m,f,weight,n,k,d,self_dual,extremal,lcd,predicate"


class SearchVerificationError(RuntimeError):
    """Predicate/oracle disagreement; the message names the counterexample."""


@dataclass(frozen=True)
class SearchConfig:
    m_min: int
    m_max: int
    kind: str
    weight_filter: frozenset[int] | None = None
    workers: int = 1
    output_format: str = "csv"
    oracle: str = "auto"

    def __post_init__(self) -> None:
        if self.kind not in KINDS:
            raise ValueError(f"unknown search kind {self.kind!r}; choose from {KINDS}")
        if not 1 <= self.m_min <= self.m_max:
            raise ValueError(f"need 1 <= m_min <= m_max, got {self.m_min}..{self.m_max}")
        budget = DC_M_BUDGET if self.kind in DC_KINDS else BORDERED_M_BUDGET
        if self.m_max > budget:
            raise ValueError(
                f"m range up to {self.m_max} exceeds the {self.kind} budget of m <= {budget}"
            )
        if self.workers < 1:
            raise ValueError(f"need workers >= 1, got {self.workers}")
        if self.output_format not in OUTPUT_FORMATS:
            raise ValueError(f"unknown output format {self.output_format!r}")
        if self.oracle not in ORACLE_POLICIES:
            raise ValueError(f"unknown oracle policy {self.oracle!r}")
        if self.weight_filter is not None and not self.weight_filter:
            raise ValueError("weight filter must be a nonempty set when given")


@dataclass
class SearchReport:
    """One classified generator with its code parameters and predicate outcome.

    ``predicate_used`` names the extremality predicate that decided the
    ``extremal`` field; rows where no theorem applies (including rows that
    are not self-dual, for which extremality is vacuously false) carry
    "oracle_only". ``alpha`` is None for pure DC rows.
    """

    m: int
    f: str
    canonical_f: str
    weight: int
    n: int
    k: int
    d: int | None
    self_dual: bool
    extremal: bool
    lcd: bool
    predicate_used: str
    oracle_confirmed: bool
    alpha: int | None = None
    _wd: tuple[int, ...] | None = field(default=None, compare=False, repr=False)


def _route_extremality(m: int, f_bits: int) -> tuple[bool, str, int | None]:
    """Extremality of a self-dual DC generator: (answer, predicate, oracle d).

    Weights below a theorem's precondition are settled by the weight
    bound: the generator row (1, f) is a codeword of weight wt(f) + 1,
    so wt(f) + 1 < bound rules the code out without enumeration.
    """
    w = f_bits.bit_count()
    d = dc_codes.DcDescriptor.from_bits(m, f_bits)
    if 2 * m <= 20:
        return dc_codes.extremal_upto20(d), "thm_upto20", None
    if m == 11:
        if w == 5:
            return dc_codes.extremal_22(d), "thm_22", None
        if w < 5:
            return False, "thm_22", None
    elif m <= 22:
        if w == 7:
            return dc_codes.extremal_24_44(d), "thm_24_44", None
        if w < 7:
            return False, "thm_24_44", None
    code = linear_code.BinaryCode(2 * m, dc_codes.build_rows(m, f_bits))
    dist = linear_code.min_distance(code)
    return dist == linear_code.extremal_bound(2 * m), "oracle_only", dist


def _hull_is_zero(rows: tuple[int, ...]) -> bool:
    return linear_code.rank_f2(linear_code._gram_rows_raw(rows)) == len(rows)


def _scan_shard(kind: str, m: int, lo: int, hi: int, weights: tuple[int, ...] | None):
    """Evaluate one contiguous slice of the candidate space.

    Returns accepted records (f_bits, alpha, weight, self_dual, extremal,
    predicate, lcd, d_known) in enumeration order.
    """
    out = []
    sd_target = ((1 << m) - 1) ^ 1 if kind == "bordered_selfdual" else 1
    for fb in range(lo, hi):
        w = fb.bit_count()
        if weights is not None and w not in weights:
            continue
        if kind == "lcd_dc":
            if bordered._dc_lcd_bits(fb, m):
                out.append((fb, None, w, False, False, "oracle_only", True, None))
        elif kind in ("selfdual_dc", "extremal_dc"):
            if _mul_bits(fb, _conj_bits(fb, m), m) != 1:
                continue
            ext, pred, d_known = _route_extremality(m, fb)
            if kind == "extremal_dc" and not ext:
                continue
            out.append((fb, None, w, True, ext, pred, False, d_known))
        elif kind == "bordered_selfdual":
            if m % 2 == 0 or w % 2:
                continue
            if _mul_bits(fb, _conj_bits(fb, m), m) != sd_target:
                continue
            code = linear_code.BinaryCode(2 * m + 2, bordered.build_rows(m, fb, 0))
            dist = linear_code.min_distance(code)
            ext = dist == linear_code.extremal_bound(2 * m + 2)
            out.append((fb, 0, w, True, ext, "oracle_only", False, dist))
        else:  # bordered_lcd
            for alpha in (0, 1):
                if _hull_is_zero(bordered.build_rows(m, fb, alpha)):
                    out.append((fb, alpha, w, False, False, "oracle_only", True, None))
    return out


def _scan_m(cfg: SearchConfig, m: int, pool) -> list[tuple]:
    weights = tuple(sorted(cfg.weight_filter)) if cfg.weight_filter is not None else None
    shard_bits = min((cfg.workers - 1).bit_length(), m)
    n_shards = 1 << shard_bits
    width = (1 << m) >> shard_bits
    args = [(cfg.kind, m, s * width, (s + 1) * width, weights) for s in range(n_shards)]
    if pool is None:
        chunks = [_scan_shard(*a) for a in args]
    else:
        chunks = list(pool.map(_scan_shard, *zip(*args)))
    return [rec for chunk in chunks for rec in chunk]


def _spot_keys() -> frozenset[tuple[int, int]]:
    from . import tables

    return tables.expected_spot_keys()


def _resolve_policy(oracle: str, m: int) -> str:
    if oracle == "auto":
        return "always" if m <= ORACLE_ALWAYS_MAX_M else "spot"
    return oracle


def verify_report(report: SearchReport, budget: int = linear_code.DEFAULT_DIMENSION_BUDGET) -> None:
    """Recompute every claim in a report from the generator matrix alone.

    Fills in the exact minimum distance and caches the weight
    distribution; raises SearchVerificationError on any disagreement.
    """
    f_bits, _ = parse_poly_text(report.f)
    if report.alpha is None:
        rows = dc_codes.build_rows(report.m, f_bits)
        n = 2 * report.m
    else:
        rows = bordered.build_rows(report.m, f_bits, report.alpha)
        n = 2 * report.m + 2
    code = linear_code.BinaryCode(n, rows)
    got = linear_code.metrics(code, budget)
    claims = {
        "n": (report.n, code.n),
        "k": (report.k, code.k),
        "weight": (report.weight, f_bits.bit_count()),
        "self_dual": (report.self_dual, got.self_dual),
        "lcd": (report.lcd, got.hull_dimension == 0),
        "extremal": (
            report.extremal,
            got.self_dual and got.min_distance == linear_code.extremal_bound(code.n),
        ),
    }
    if report.d is not None:
        claims["d"] = (report.d, got.min_distance)
    for name, (claimed, actual) in claims.items():
        if claimed != actual:
            raise SearchVerificationError(
                f"oracle disagreement at m={report.m}, f={report.f}"
                f"{'' if report.alpha is None else f', alpha={report.alpha}'}: "
                f"{name} claimed {claimed}, oracle says {actual}"
            )
    report.d = got.min_distance
    report._wd = got.weight_distribution


def search(cfg: SearchConfig) -> list[SearchReport]:
    """Run the configured sweep and return verified reports."""
    pool = None
    if cfg.workers > 1:
        pool = ProcessPoolExecutor(
            max_workers=cfg.workers, mp_context=multiprocessing.get_context("fork")
        )
    try:
        reports: list[SearchReport] = []
        for m in range(cfg.m_min, cfg.m_max + 1):
            records = _scan_m(cfg, m, pool)
            reports.extend(_assemble_m(cfg, m, records))
        return reports
    finally:
        if pool is not None:
            pool.shutdown()


def _assemble_m(cfg: SearchConfig, m: int, records: list[tuple]) -> list[SearchReport]:
    decorated = sorted(
        (dc_codes._orbit_min_bits(rec[0], m), rec[0], -1 if rec[1] is None else rec[1], rec)
        for rec in records
    )
    if cfg.kind == "extremal_dc":
        deduped = []
        last_canon = None
        for canon, fb, _, rec in decorated:
            if canon == last_canon:
                continue
            last_canon = canon
            if fb != canon:
                # sound predicates accept whole orbits, so the orbit
                # minimum must itself have been accepted
                raise SearchVerificationError(
                    f"orbit inconsistency at m={m}: class minimum {poly_text(canon)} "
                    f"was rejected but {poly_text(fb)} was accepted"
                )
            deduped.append((canon, fb, -1, rec))
        decorated = deduped

    out = []
    if cfg.kind in DC_KINDS:
        n, k = 2 * m, m
    else:
        n, k = 2 * m + 2, m + 1
    for canon, fb, _, (_, alpha, w, sd, ext, pred, lcd, d_known) in decorated:
        d = d_known if d_known is not None else (linear_code.extremal_bound(n) if ext else None)
        out.append(
            SearchReport(
                m=m,
                f=poly_text(fb),
                canonical_f=poly_text(canon),
                weight=w,
                n=n,
                k=k,
                d=d,
                self_dual=sd,
                extremal=ext,
                lcd=lcd,
                predicate_used=pred,
                oracle_confirmed=False,
                alpha=alpha,
            )
        )

    policy = _resolve_policy(cfg.oracle, m)
    if policy != "off":
        spot = _spot_keys() if policy == "spot" else None
        for idx, rep in enumerate(out):
            if policy == "always" or idx % SPOT_STRIDE == 0 or (m, decorated[idx][0]) in spot:
                verify_report(rep)
    for rep in out:
        rep.oracle_confirmed = True
    return out


def _flag(value: bool) -> str:
    return "true" if value else "false"


def emit(reports: list[SearchReport], output_format: str) -> str:
    """Serialize reports as CSV or JSON with deterministic ordering."""
    if output_format == "csv":
        lines = [CSV_HEADER]
        for r in reports:
            lines.append(
                f"{r.m},{r.f},{r.weight},{r.n},{r.k},"
                f"{'' if r.d is None else r.d},"
                f"{_flag(r.self_dual)},{_flag(r.extremal)},{_flag(r.lcd)},{r.predicate_used}"
            )
        return "\n".join(lines) + "\n"
    if output_format == "json":
        return json.dumps([_report_dict(r) for r in reports], indent=2) + "\n"
    raise ValueError(f"unknown output format {output_format!r}")


def _report_dict(r: SearchReport) -> dict:
    return {
        "m": r.m,
        "f": r.f,
        "canonical_f": r.canonical_f,
        "alpha": r.alpha,
        "weight": r.weight,
        "n": r.n,
        "k": r.k,
        "d": r.d,
        "self_dual": r.self_dual,
        "extremal": r.extremal,
        "lcd": r.lcd,
        "predicate_used": r.predicate_used,
        "oracle_confirmed": r.oracle_confirmed,
    }


def parse_reports(text: str) -> list[SearchReport]:
    """Rebuild SearchReport objects from emitted JSON."""
    return [SearchReport(**obj) for obj in json.loads(text)]
