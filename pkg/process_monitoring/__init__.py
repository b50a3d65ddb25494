"""
Process monitoring package for measuring the resources a run consumes.
"""

from .resource_monitor import ResourceMonitor, RunStats

__all__ = ['ResourceMonitor', 'RunStats']
