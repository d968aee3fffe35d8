"""Shared strategies and the acceptance-summary reporting hook."""

from hypothesis import strategies as st

from dsmkit import Frame, GeneralizedBBA, atom_mask, combine_masks, empty_mask


def mask_of_terms(terms, frame: Frame):
    """Union of atom-intersections; the canonical way to build isotone masks."""
    mask = empty_mask(frame)
    for term in terms:
        factor = None
        for i in term:
            am = atom_mask(i, frame)
            factor = am if factor is None else combine_masks(factor, am, "intersect")
        mask = combine_masks(mask, factor, "union")
    return mask


def isotone_masks(frame: Frame, allow_empty: bool = True):
    term = st.frozensets(st.integers(1, frame.n), min_size=1, max_size=frame.n)
    return st.frozensets(
        term, min_size=0 if allow_empty else 1, max_size=4
    ).map(lambda terms: mask_of_terms(terms, frame))


@st.composite
def gbbas(draw, frame: Frame, max_focal: int = 4):
    focal = draw(
        st.lists(
            isotone_masks(frame, allow_empty=False),
            min_size=1,
            max_size=max_focal,
            unique=True,
        )
    )
    raw = [draw(st.floats(0.05, 1.0)) for _ in focal]
    total = sum(raw)
    return GeneralizedBBA(frame, {m: w / total for m, w in zip(focal, raw)})


_CRITERIA = {
    "test_criterion_1": "1 cardinalities + budgets",
    "test_criterion_2": "2 printed-matrix fixtures",
    "test_criterion_3": "3 oracle triple agreement",
    "test_criterion_4": "4 memory report",
    "test_criterion_5": "5 fusion worked example",
    "test_criterion_6a": "6a dsm commutativity/associativity",
    "test_criterion_6b": "6b Bel <= Pl",
    "test_criterion_6c": "6c weighted redistribution = Dempster",
    "test_criterion_6d": "6d parser round-trip",
    "test_criterion_6e": "6e lattice closure",
    "test_criterion_6f": "6f full-contradiction error",
    "test_criterion_7": "7 determinism",
}


def pytest_terminal_summary(terminalreporter):
    """One pass/fail line per acceptance criterion, from the run's stats."""
    lines = {}
    for status in ("passed", "failed", "error"):
        for report in terminalreporter.stats.get(status, []):
            nodeid = getattr(report, "nodeid", "")
            if "test_acceptance.py" not in nodeid:
                continue
            name = nodeid.split("::")[-1]
            for prefix, label in _CRITERIA.items():
                if name.startswith(prefix):
                    verdict = "PASS" if status == "passed" else "FAIL"
                    key = lines.setdefault(label, verdict)
                    if verdict == "FAIL":
                        lines[label] = "FAIL"
    if lines:
        terminalreporter.write_line("")
        terminalreporter.write_line("acceptance criteria:")
        for label in sorted(lines, key=lambda s: _CRITERIA_ORDER.index(s)):
            terminalreporter.write_line(f"  criterion {label}: {lines[label]}")


_CRITERIA_ORDER = list(_CRITERIA.values())
