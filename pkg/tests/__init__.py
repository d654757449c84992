"""Test suite for shiftforge."""
