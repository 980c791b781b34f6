"""Report rendering."""

from __future__ import annotations

from sommerflux.reporting.render import load_report, render_report, write_report

__all__ = ["load_report", "render_report", "write_report"]
