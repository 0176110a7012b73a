"""Test suite for fungraph."""
