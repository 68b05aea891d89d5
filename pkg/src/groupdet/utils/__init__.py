"""
Utilities module for groupdet
Contains settings and export utilities
"""
from .settings import DEFAULTS, Settings
from .export import ReportExporter

__all__ = ['DEFAULTS', 'Settings', 'ReportExporter']
