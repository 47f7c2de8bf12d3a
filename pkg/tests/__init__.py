"""Tests for hkst."""
