"""Machine-readable report schemas."""

from .models import CheckResult, Report

__all__ = ["CheckResult", "Report"]
