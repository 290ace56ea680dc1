"""Collects one result line per acceptance criterion for the terminal summary."""

RESULTS: dict[int, tuple[bool, str, float]] = {}


def record(number: int, ok: bool, detail: str, seconds: float) -> None:
    RESULTS[number] = (ok, detail, seconds)
    print(format_line(number))


def format_line(number: int) -> str:
    ok, detail, seconds = RESULTS[number]
    return f"criterion {number}: {'PASS' if ok else 'FAIL'} ({seconds:.2f}s) {detail}"


def lines() -> list[str]:
    return [format_line(k) for k in sorted(RESULTS)]
