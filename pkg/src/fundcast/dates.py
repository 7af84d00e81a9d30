"""Calendar arithmetic used by windowing, feature extraction, and labeling.

Month shifts keep the day-of-month and clamp to the last day of the target
month when it does not exist (e.g. Jan 31 minus 9 months -> Apr 30).
"""

from __future__ import annotations

import calendar
import datetime as dt


def add_months(day: dt.date, months: int) -> dt.date:
    """Shift ``day`` by ``months`` calendar months, clamping the day-of-month."""
    month_index = day.year * 12 + (day.month - 1) + months
    year, month = divmod(month_index, 12)
    month += 1
    last = calendar.monthrange(year, month)[1]
    return dt.date(year, month, min(day.day, last))


def add_years(day: dt.date, years: int) -> dt.date:
    return add_months(day, 12 * years)


def months_between(start: dt.date, end: dt.date) -> int:
    """Whole calendar months from ``start`` to ``end`` (negative if reversed)."""
    whole = (end.year - start.year) * 12 + (end.month - start.month)
    if end.day < start.day:
        whole -= 1
    return whole


def parse_date(text: str) -> dt.date:
    return dt.date.fromisoformat(text)


def parse_datetime(text: str) -> dt.datetime:
    return dt.datetime.fromisoformat(text)
