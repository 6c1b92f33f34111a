"""Shared numeric formatting for the flat key = value reports and CSV."""


def sig(value: float, digits: int = 9) -> str:
    """Format with the given number of significant digits, round-half-even."""
    return format(value, f".{digits}g")


def kv_block(pairs: list[tuple[str, str]]) -> str:
    """Join key/value pairs into the flat report format, one per line."""
    return "".join(f"{key} = {value}\n" for key, value in pairs)
