"""fundcast: predict startup funding rounds from public-signal features."""

__version__ = "0.1.0"
