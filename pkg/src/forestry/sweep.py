"""Bound sweeps over whole graph families, with an append-only run log.

A sweep walks every graph of one family up to a chosen order, compares
its forest count against the family's lower bound, and appends one JSON
line per graph to a store file.  Finished keys can be skipped on a rerun.
The sweep fails loudly if the set of violating graphs is anything other
than the known exceptional ones, since that can only mean a generator or
counting defect.
"""

import json
import logging
import time
from dataclasses import dataclass

from .bounds import EQUAL, LESS, compare, p_bound, q_bound
from .catalog import catalog_entry
from .counting import MemoCache, count_forests
from .errors import CorruptRecord, IoError, ViolationFound
from .families import family_levels
from .multigraph import canonical_key

log = logging.getLogger(__name__)

RECORD_VERSION = 1

# degree set, family tag, bound, and the known exceptions with their orders
THEOREMS = {
    "T1": ((2, 3), "23", p_bound, ((4, "K4"),)),
    "T2": ((2, 3, 4), "234", q_bound, ((5, "K5"), (6, "K6-"))),
}

_VERDICTS = ("GE", "EQ", "LT")


@dataclass(frozen=True)
class SweepRecord:
    family: str
    n: int
    key: bytes
    forests: int
    bound_text: str
    verdict: str
    exception: bool
    ts: str


@dataclass(frozen=True)
class SweepSummary:
    theorem: str
    family: str
    n_max: int
    checked: int
    skipped: int
    violations: tuple  # (n, canonical key) pairs with verdict LT
    equalities: tuple  # (n, canonical key) pairs with verdict EQ


def _stamp():
    return time.strftime("%Y-%m-%dT%H:%M:%SZ", time.gmtime())


def record_line(record):
    return json.dumps(
        {
            "v": RECORD_VERSION,
            "family": record.family,
            "n": record.n,
            "key": record.key.hex(),
            "forests": str(record.forests),
            "bound": record.bound_text,
            "verdict": record.verdict,
            "exception": record.exception,
            "ts": record.ts,
        },
        sort_keys=True,
    )


def parse_record(line):
    """Strict inverse of record_line; raises CorruptRecord on any defect."""
    try:
        raw = json.loads(line)
    except ValueError as exc:
        raise CorruptRecord("not JSON: %s" % exc)
    if not isinstance(raw, dict):
        raise CorruptRecord("record is not an object")
    if raw.get("v") != RECORD_VERSION:
        raise CorruptRecord("unknown record version %r" % raw.get("v"))
    try:
        family = raw["family"]
        n = raw["n"]
        key = bytes.fromhex(raw["key"])
        forests = int(raw["forests"])
        bound_text = raw["bound"]
        verdict = raw["verdict"]
        exception = raw["exception"]
        ts = raw["ts"]
    except (KeyError, TypeError, ValueError) as exc:
        raise CorruptRecord("bad field: %s" % exc)
    if family not in ("23", "234"):
        raise CorruptRecord("unknown family %r" % family)
    if verdict not in _VERDICTS:
        raise CorruptRecord("unknown verdict %r" % verdict)
    if not isinstance(n, int) or not isinstance(exception, bool):
        raise CorruptRecord("wrong field types")
    return SweepRecord(family, n, key, forests, bound_text, verdict, exception, ts)


def run_store_append(store, record):
    try:
        with open(store, "a", encoding="utf-8") as fh:
            fh.write(record_line(record) + "\n")
    except OSError as exc:
        raise IoError("cannot append to %s: %s" % (store, exc))


def run_store_resume(store, family=None):
    """Keys already present in the store, optionally for one family only.

    A missing store counts as empty; unreadable lines are skipped with a
    logged warning so one bad write never blocks a rerun.
    """
    done = set()
    try:
        fh = open(store, "r", encoding="utf-8")
    except FileNotFoundError:
        return done
    except OSError as exc:
        raise IoError("cannot read %s: %s" % (store, exc))
    with fh:
        for lineno, line in enumerate(fh, start=1):
            if not line.strip():
                continue
            try:
                record = parse_record(line)
            except CorruptRecord as exc:
                log.warning("%s line %d skipped: %s", store, lineno, exc)
                continue
            if family is None or record.family == family:
                done.add(record.key)
    return done


def sweep_theorem(theorem, n_max, store=None, resume=False, cache=None, cap=None):
    """Check the bound on every family graph of order 3..n_max.

    Returns a SweepSummary; raises ViolationFound when the violating
    graphs are not exactly the known exceptional ones in range.
    """
    if theorem not in THEOREMS:
        raise ValueError("theorem must be one of %s" % sorted(THEOREMS))
    degree_set, family, bound_fn, exceptional = THEOREMS[theorem]
    expected = {
        canonical_key(catalog_entry(name).graph): (order, name)
        for order, name in exceptional
    }
    done = run_store_resume(store, family) if (resume and store) else set()
    if cache is None:
        cache = MemoCache()
    checked = skipped = 0
    violations = []
    equalities = []
    outcome = {}
    for n, members in family_levels(degree_set, n_max, cap=cap):
        for g in members:
            key = canonical_key(g)
            if key in done:
                skipped += 1
                if key in expected:
                    outcome[key] = "skipped"
                continue
            forests = count_forests(g, cache)
            bound = bound_fn(g)
            verdict = compare(forests, bound)
            record = SweepRecord(
                family, n, key, forests, str(bound), verdict,
                key in expected, _stamp(),
            )
            if store:
                run_store_append(store, record)
            checked += 1
            if verdict == LESS:
                violations.append((n, key))
            elif verdict == EQUAL:
                equalities.append((n, key))
            if key in expected:
                outcome[key] = verdict

    trouble = []
    bad_keys = []
    for n, key in violations:
        if key not in expected:
            trouble.append("unexpected violation at n=%d key=%s" % (n, key.hex()))
            bad_keys.append(key)
    for key, (order, name) in expected.items():
        if order > n_max:
            continue
        seen = outcome.get(key)
        if seen is None:
            trouble.append("%s never enumerated at n=%d" % (name, order))
            bad_keys.append(key)
        elif seen not in ("skipped", LESS):
            trouble.append("%s expected to violate but compared %s" % (name, seen))
            bad_keys.append(key)
    if trouble:
        raise ViolationFound("; ".join(trouble), keys=tuple(bad_keys))

    return SweepSummary(
        theorem, family, n_max, checked, skipped,
        tuple(violations), tuple(equalities),
    )
