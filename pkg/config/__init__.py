"""Configuration module for the shiftforge engine."""

from .settings import APPLY_ORDERS, LOG_FORMATS, Settings, get_settings

__all__ = ["APPLY_ORDERS", "LOG_FORMATS", "Settings", "get_settings"]
