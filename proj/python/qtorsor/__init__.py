"""Python bindings for the qtorsor verification toolkit."""

from ._qtorsor import __version__, g_entry_csv, list_suites, pair, pairing_csv, run_suite

__all__ = ["__version__", "g_entry_csv", "list_suites", "pair", "pairing_csv", "run_suite"]
