"""Unit tests for shiftforge."""
